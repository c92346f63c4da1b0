#include "jmc/rg_tensor.hpp"

#include <sstream>

namespace jmc {

std::string RGKey::str() const { return gl_key_str(gl) + " (x) " + class_part_str(cl); }

RGTensor RGTensor::unit(ClassPart cl) {
  RGTensor t;
  t.add(GLStandard::one(), std::move(cl), 1);
  return t;
}

void RGTensor::add(GLKey gl, ClassPart cl, long long coeff) {
  add(RGKey{std::move(gl), std::move(cl)}, coeff);
}

void RGTensor::add(const RGKey& k, long long coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

long long RGTensor::coeff(const RGKey& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? 0 : it->second;
}

long long RGTensor::coeff(const GLKey& gl, const ClassPart& cl) const {
  return coeff(RGKey{gl, cl});
}

RGTensor& RGTensor::operator+=(const RGTensor& o) {
  for (const auto& [k, n] : o.terms_) add(k, n);
  return *this;
}

RGTensor& RGTensor::operator-=(const RGTensor& o) {
  for (const auto& [k, n] : o.terms_) add(k, -n);
  return *this;
}

RGTensor RGTensor::operator+(const RGTensor& o) const {
  RGTensor out = *this;
  out += o;
  return out;
}

RGTensor RGTensor::operator-(const RGTensor& o) const {
  RGTensor out = *this;
  out -= o;
  return out;
}

bool RGTensor::all_coefficients_positive() const {
  for (const auto& [k, n] : terms_)
    if (n <= 0) return false;
  return true;
}

std::string RGTensor::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, n] : terms_) {
    if (!first) out << "\n";
    first = false;
    out << n << " * " << k.str();
  }
  return out.str();
}

RGTensor resolve_gl_pairs(const RGTensor& t) {
  RGTensor out;
  for (const auto& [k, n] : t.terms()) {
    if (const auto* std_key = std::get_if<GLStandard>(&k.gl)) {
      out.add(*std_key, k.cl, n);
      continue;
    }
    for (const auto& [std_key, c] : std::get<LPair>(k.gl).resolution())
      out.add(std_key, k.cl, n * c);
  }
  return out;
}

std::vector<std::string> conservation_failures(
    const RGTensor& t, std::int64_t rank,
    const std::map<HalfInt, std::int64_t>& abs_support) {
  std::vector<std::string> bad;
  for (const auto& [k, n] : t.terms()) {
    std::int64_t r = gl_key_rank(k.gl) + class_part_rank(k.cl);
    if (r != rank) {
      bad.push_back(k.str() + ": rank " + std::to_string(r) + " != " + std::to_string(rank));
      continue;
    }
    auto acc = gl_key_abs_support(k.gl);
    for (const auto& [v, m] : class_part_abs_support(k.cl)) acc[v] += m;
    if (acc != abs_support) bad.push_back(k.str() + ": absolute support mismatch");
  }
  return bad;
}

}  // namespace jmc
