#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "jmc/atoms.hpp"
#include "jmc/gl.hpp"

namespace jmc {

/// One basis key of R(GL) (x) R(G): a general-linear part (standard module
/// or pair quotient) tensored with a classical part (atom or induced label).
struct RGKey {
  GLKey gl;
  ClassPart cl;

  std::string str() const;  ///< "<gl> (x) <cl>"

  auto operator<=>(const RGKey&) const = default;
};

/// Exact integer combination of RGKeys; the working value of every Jacquet
/// restriction. The map keeps keys in canonical order, so equal combinations
/// compare (and serialize) identically.
class RGTensor {
public:
  RGTensor() = default;

  /// The single term 1 (x) cl with coefficient 1.
  static RGTensor unit(ClassPart cl);

  void add(GLKey gl, ClassPart cl, long long coeff);
  void add(const RGKey& k, long long coeff);

  long long coeff(const RGKey& k) const;
  long long coeff(const GLKey& gl, const ClassPart& cl) const;

  const std::map<RGKey, long long>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  RGTensor& operator+=(const RGTensor& o);
  RGTensor& operator-=(const RGTensor& o);
  RGTensor operator+(const RGTensor& o) const;
  RGTensor operator-(const RGTensor& o) const;

  bool operator==(const RGTensor&) const = default;

  /// True when every stored coefficient is > 0 (semisimplified expansions).
  bool all_coefficients_positive() const;

  std::string str() const;  ///< one "coeff * key" per line

private:
  std::map<RGKey, long long> terms_;
};

/// GL-side change of basis: every pair-quotient key is replaced by its
/// resolution into standard modules; classical parts are untouched.
RGTensor resolve_gl_pairs(const RGTensor& t);

/// Per-term bookkeeping check against the expected totals: GL rank plus
/// classical rank must equal `rank`, and the union of absolute-value
/// exponent multisets must equal `abs_support`, for every term. Returns one
/// message per violating term; empty means the expansion conserves both.
std::vector<std::string> conservation_failures(
    const RGTensor& t, std::int64_t rank,
    const std::map<HalfInt, std::int64_t>& abs_support);

}  // namespace jmc
