#include "jmc/atoms.hpp"

#include <algorithm>
#include <stdexcept>

namespace jmc {

namespace {

void need(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

void need_strict_half(HalfInt v, const char* who) {
  need(v.is_strict_half(), std::string(who) + ": parameter " + v.str() + " not in Z+1/2");
}

std::string brace_half(HalfInt v) { return v.str(); }

}  // namespace

SignedSeg::SignedSeg(HalfInt c, HalfInt d, Sign sign) : c_(c), d_(d), sign_(sign) {
  need_strict_half(c, "SignedSeg");
  need_strict_half(d, "SignedSeg");
  need(c <= d, "SignedSeg: need c <= d, got c=" + c.str() + " d=" + d.str());
  need((c + d).twice() >= 0, "SignedSeg: interval [-c,d] empty, c=" + c.str() + " d=" + d.str());
  if (sign == Sign::minus)
    need(c >= HalfInt::half(), "SignedSeg: minus piece needs c >= 1/2, got c=" + c.str());
  else
    need(c >= -HalfInt::half(), "SignedSeg: plus piece needs c >= -1/2, got c=" + c.str());
}

std::string SignedSeg::str() const {
  if (c_ == -HalfInt::half()) return "sigma_a{" + brace_half(d_) + "}";
  if (c_ == d_) return std::string("tau{a=") + brace_half(c_) + "," + sign_char(sign_) + "}";
  return std::string("ds{b=") + brace_half(c_) + ",c=" + brace_half(d_) + "," +
         sign_char(sign_) + "}";
}

LangSeg::LangSeg(HalfInt c, HalfInt d) : c_(c), d_(d) {
  need_strict_half(c, "LangSeg");
  need_strict_half(d, "LangSeg");
  need((c + d).twice() >= 0, "LangSeg: interval [-c,d] empty, c=" + c.str() + " d=" + d.str());
  need(c < HalfInt::half() || c < d,
       "LangSeg: need c < 1/2 or c < d, got c=" + c.str() + " d=" + d.str());
}

std::string LangSeg::str() const { return "L(" + seg().str() + " ; sigma)"; }

DS3::DS3(HalfInt a, HalfInt b, HalfInt c, DS3Tag tag) : a_(a), b_(b), c_(c), tag_(tag) {
  need_strict_half(a, "DS3");
  need_strict_half(b, "DS3");
  need_strict_half(c, "DS3");
  need(HalfInt::half() <= a && a < b && b < c,
       "DS3: need 1/2 <= a < b < c, got " + a.str() + "," + b.str() + "," + c.str());
}

std::string DS3::str() const {
  std::string tag;
  switch (tag_) {
    case DS3Tag::plus: tag = "+"; break;
    case DS3Tag::minus_bca: tag = "-bca"; break;
    case DS3Tag::minus_abc: tag = "-abc"; break;
  }
  return "ds3{a=" + brace_half(a_) + ",b=" + brace_half(b_) + ",c=" + brace_half(c_) + "," +
         tag + "}";
}

Temp::Temp(HalfInt a, HalfInt c, Sign sign) : a_(a), c_(c), sign_(sign) {
  need_strict_half(a, "Temp");
  need_strict_half(c, "Temp");
  need(a >= HalfInt::half() && c >= HalfInt::half(),
       "Temp: need a, c >= 1/2, got a=" + a.str() + " c=" + c.str());
}

std::string Temp::str() const {
  return std::string("T{") + brace_half(a_) + "," + brace_half(c_) + "," + sign_char(sign_) +
         "}";
}

std::string tempered_str(const TemperedAtom& t) {
  return std::visit([](const auto& x) { return x.str(); }, t);
}

Lang::Lang(std::vector<Segment> segs, TemperedAtom tau) : segs_(std::move(segs)), tau_(tau) {
  need(!segs_.empty(), "Lang: empty Langlands datum");
  for (const auto& s : segs_) {
    need(!s.is_empty(), "Lang: empty interval in Langlands datum");
    need(s.center() > HalfInt(0), "Lang: interval " + s.str() + " has non-positive center");
  }
  need(!(segs_.size() == 1 && std::holds_alternative<Cusp>(tau_)),
       "Lang: single interval over the cuspidal is canonically a LangSeg; use make_lang");
  std::sort(segs_.begin(), segs_.end(), [](const Segment& x, const Segment& y) {
    if (x.center() != y.center()) return y.center() < x.center();
    return std::pair(x.lo(), x.hi()) < std::pair(y.lo(), y.hi());
  });
}

std::string Lang::str() const {
  std::string out = "L(";
  for (std::size_t i = 0; i < segs_.size(); ++i) {
    if (i) out += " x ";
    out += segs_[i].str();
  }
  out += " ; " + tempered_str(tau_) + ")";
  return out;
}

ClassAtom make_lang(std::vector<Segment> segs, TemperedAtom tau) {
  if (segs.size() == 1 && std::holds_alternative<Cusp>(tau)) {
    const Segment& s = segs.front();
    if (s.is_empty() || !(s.center() > HalfInt(0)))
      throw std::invalid_argument("make_lang: invalid single-interval Langlands datum");
    return LangSeg(-s.lo(), s.hi());
  }
  return Lang(std::move(segs), tau);
}

ClassAtom sigma_c_atom(HalfInt c) {
  if (!(c >= HalfInt::half()))
    throw std::invalid_argument("sigma_c needs c >= 1/2, got c=" + c.str());
  return SignedSeg(-HalfInt::half(), c, Sign::plus);
}

ClassAtom cusp_atom() { return Cusp{}; }

bool atom_identify(const ClassAtom& x, const ClassAtom& y) { return x == y; }

bool is_tempered(const ClassAtom& a) {
  return !std::holds_alternative<LangSeg>(a) && !std::holds_alternative<Lang>(a);
}

std::optional<TemperedAtom> as_tempered(const ClassAtom& a) {
  if (const auto* c = std::get_if<Cusp>(&a)) return TemperedAtom(*c);
  if (const auto* s = std::get_if<SignedSeg>(&a)) return TemperedAtom(*s);
  if (const auto* d = std::get_if<DS3>(&a)) return TemperedAtom(*d);
  if (const auto* t = std::get_if<Temp>(&a)) return TemperedAtom(*t);
  return std::nullopt;
}

ClassAtom as_atom(const TemperedAtom& t) {
  return std::visit([](const auto& x) { return ClassAtom(x); }, t);
}

std::vector<Segment> standard_data(const ClassAtom& a) {
  struct Visitor {
    std::vector<Segment> operator()(const Cusp&) const { return {}; }
    std::vector<Segment> operator()(const SignedSeg& s) const { return {s.seg()}; }
    std::vector<Segment> operator()(const LangSeg& s) const { return {s.seg()}; }
    std::vector<Segment> operator()(const DS3& s) const {
      return {Segment::make(-s.a(), s.b()), Segment::make(HalfInt::half(), s.c())};
    }
    std::vector<Segment> operator()(const Temp& s) const {
      return {Segment::make(-s.a(), s.a()), Segment::make(HalfInt::half(), s.c())};
    }
    std::vector<Segment> operator()(const Lang& s) const {
      std::vector<Segment> out = s.segs();
      auto rest = standard_data(as_atom(s.tau()));
      out.insert(out.end(), rest.begin(), rest.end());
      return out;
    }
  };
  return std::visit(Visitor{}, a);
}

std::int64_t atom_rank(const ClassAtom& a) {
  std::int64_t r = 0;
  for (const auto& s : standard_data(a)) r += s.size();
  return r;
}

std::map<HalfInt, std::int64_t> atom_abs_support(const ClassAtom& a) {
  std::map<HalfInt, std::int64_t> acc;
  for (const auto& s : standard_data(a))
    for (HalfInt v : s.exponents()) acc[v.abs()] += 1;
  return acc;
}

std::string atom_str(const ClassAtom& a) {
  return std::visit([](const auto& x) { return x.str(); }, a);
}

InducedLabel::InducedLabel(std::vector<Segment> segs, ClassAtom base) : base_(std::move(base)) {
  for (auto& s : segs)
    if (!s.is_empty()) segs_.push_back(s);
}

bool InducedLabel::is_canonical() const {
  for (const auto& s : segs_)
    if (s.center() < HalfInt(0)) return false;
  return std::is_sorted(segs_.begin(), segs_.end(), [](const Segment& x, const Segment& y) {
    return std::pair(x.lo(), x.hi()) < std::pair(y.lo(), y.hi());
  });
}

InducedLabel InducedLabel::canonical() const {
  std::vector<Segment> segs;
  segs.reserve(segs_.size());
  for (const auto& s : segs_) segs.push_back(s.center() < HalfInt(0) ? s.dual() : s);
  std::sort(segs.begin(), segs.end(), [](const Segment& x, const Segment& y) {
    return std::pair(x.lo(), x.hi()) < std::pair(y.lo(), y.hi());
  });
  return InducedLabel(std::move(segs), base_);
}

std::int64_t InducedLabel::rank() const {
  std::int64_t r = atom_rank(base_);
  for (const auto& s : segs_) r += s.size();
  return r;
}

std::map<HalfInt, std::int64_t> InducedLabel::abs_support() const {
  auto acc = atom_abs_support(base_);
  for (const auto& s : segs_)
    for (HalfInt v : s.exponents()) acc[v.abs()] += 1;
  return acc;
}

std::string InducedLabel::str() const {
  if (segs_.empty()) return atom_str(base_);
  std::string out;
  for (std::size_t i = 0; i < segs_.size(); ++i) {
    if (i) out += " x ";
    out += segs_[i].str();
  }
  return out + " |x " + atom_str(base_);
}

ClassPart class_part(ClassAtom a) { return ClassPart(std::move(a)); }

ClassPart class_part(InducedLabel l) {
  InducedLabel c = l.canonical();
  if (c.segs().empty()) return ClassPart(c.base());
  return ClassPart(std::move(c));
}

std::string class_part_str(const ClassPart& p) {
  if (const auto* a = std::get_if<ClassAtom>(&p)) return atom_str(*a);
  return std::get<InducedLabel>(p).str();
}

std::int64_t class_part_rank(const ClassPart& p) {
  if (const auto* a = std::get_if<ClassAtom>(&p)) return atom_rank(*a);
  return std::get<InducedLabel>(p).rank();
}

std::map<HalfInt, std::int64_t> class_part_abs_support(const ClassPart& p) {
  if (const auto* a = std::get_if<ClassAtom>(&p)) return atom_abs_support(*a);
  return std::get<InducedLabel>(p).abs_support();
}

}  // namespace jmc
