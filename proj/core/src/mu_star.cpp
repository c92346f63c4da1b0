#include "jmc/mu_star.hpp"

#include <optional>
#include <stdexcept>

namespace jmc {

namespace {

/// Canonical signed-interval label for the (possibly flipped) interval, or
/// nullopt when the named subquotient is the zero representation.
std::optional<ClassAtom> signed_label(Segment mid, Sign sign) {
  if (mid.center() < HalfInt(0)) mid = mid.dual();
  HalfInt cp = -mid.lo(), dp = mid.hi();
  if (sign == Sign::minus && cp < HalfInt::half()) return std::nullopt;
  if (sign == Sign::plus && cp < -HalfInt::half()) return std::nullopt;
  return ClassAtom(SignedSeg(cp, dp, sign));
}

/// Canonical interval-Langlands label, or nullopt when zero (the flipped
/// parameters land on the tempered diagonal c = d >= 1/2).
std::optional<ClassAtom> lang_label(Segment mid) {
  if (mid.center() < HalfInt(0)) mid = mid.dual();
  HalfInt cp = -mid.lo(), dp = mid.hi();
  if (!(cp < HalfInt::half() || cp < dp)) return std::nullopt;
  return ClassAtom(LangSeg(cp, dp));
}

/// d(middle) x| cl as a canonical classical part.
ClassPart extend_class_part(const Segment& middle, const ClassPart& cl) {
  if (const auto* atom = std::get_if<ClassAtom>(&cl))
    return class_part(InducedLabel({middle}, *atom));
  const auto& lbl = std::get<InducedLabel>(cl);
  std::vector<Segment> segs = lbl.segs();
  segs.push_back(middle);
  return class_part(InducedLabel(std::move(segs), lbl.base()));
}

}  // namespace

RGTensor mu_star_base(const ClassAtom& x) {
  if (std::holds_alternative<Cusp>(x)) return RGTensor::unit(class_part(cusp_atom()));
  if (const auto* s = std::get_if<SignedSeg>(&x))
    return mu_star_delta_signed(s->c(), s->d(), s->sign());
  if (const auto* l = std::get_if<LangSeg>(&x))
    return mu_star_langlands_segment(l->c(), l->d());
  throw std::invalid_argument("no closed-form Jacquet expansion for " + atom_str(x) +
                              "; account for it through witness facts instead");
}

RGTensor extend_by_formula1(const Segment& delta, const RGTensor& inner) {
  if (delta.is_empty())
    throw std::invalid_argument("structure formula needs a non-empty interval factor");
  const RGTensor resolved = resolve_gl_pairs(inner);
  const HalfInt x = delta.lo(), y = delta.hi();
  const int len = static_cast<int>(delta.size());
  RGTensor out;
  for (int i = 0; i <= len; ++i) {
    for (int j = 0; j <= i; ++j) {
      const Segment first = Segment::make(-y + i, -x);
      const Segment second = Segment::make(y - j + 1, y);
      const Segment middle = Segment::make(y - i + 1, y - j);
      for (const auto& [k, n] : resolved.terms()) {
        GLStandard gl = std::get<GLStandard>(k.gl).times(first).times(second);
        if (middle.is_empty())
          out.add(std::move(gl), k.cl, n);
        else
          out.add(std::move(gl), extend_class_part(middle, k.cl), n);
      }
    }
  }
  return out;
}

RGTensor mu_star_formula1(const Segment& delta, const ClassAtom& base) {
  return extend_by_formula1(delta, mu_star_base(base));
}

RGTensor mu_star_iterated(const std::vector<Segment>& segs, const ClassAtom& base) {
  RGTensor acc = mu_star_base(base);
  for (const auto& s : segs) acc = extend_by_formula1(s, acc);
  return acc;
}

RGTensor mu_star_delta_signed(HalfInt c, HalfInt d, Sign sign, SignedOptions opts) {
  (void)SignedSeg(c, d, sign);  // validate the parameter domain
  RGTensor out;
  RowCounts rc;
  // Signed-interval row: i = -c-1 .. d-1, j = i+1 .. d.
  for (HalfInt i = -c - 1; i <= d - 1; i += 1) {
    for (HalfInt j = i + 1; j <= d; j += 1) {
      auto cl = signed_label(Segment::make(i + 1, j), sign);
      if (!cl) continue;
      out.add(GLStandard({Segment::make(-i, c), Segment::make(j + 1, d)}), class_part(*cl), 1);
      ++rc.signed_row;
    }
  }
  // Interval-Langlands row: i = -c-1 .. c-1, j = i+1 .. c, i+j < -1.
  for (HalfInt i = -c - 1; i <= c - 1; i += 1) {
    for (HalfInt j = i + 1; j <= c; j += 1) {
      const std::int64_t s2 = (i + j).twice();
      if (opts.strict_middle_row ? s2 >= -2 : s2 > -2) continue;
      auto cl = lang_label(Segment::make(i + 1, j));
      if (!cl) continue;
      out.add(GLStandard({Segment::make(-i, c), Segment::make(j + 1, d)}), class_part(*cl), 1);
      ++rc.lang_row;
    }
  }
  // Cuspidal row: i = -c-1 .. alpha-1 for the plus piece, .. -alpha-1 for
  // the minus piece (alpha = 1/2).
  const HalfInt top = (sign == Sign::plus) ? HalfInt::half() - 1 : -HalfInt::half() - 1;
  for (HalfInt i = -c - 1; i <= top; i += 1) {
    out.add(GLStandard({Segment::make(-i, c), Segment::make(i + 1, d)}),
            class_part(cusp_atom()), 1);
    ++rc.cusp_row;
  }
  if (opts.rows) *opts.rows = rc;
  return out;
}

RGTensor mu_star_langlands_segment(HalfInt c, HalfInt d) {
  (void)LangSeg(c, d);  // validate the parameter domain
  RGTensor out;
  // Pair row: i = -c-1 .. d-1, j = i+1 .. d, 0 <= i+j.
  for (HalfInt i = -c - 1; i <= d - 1; i += 1) {
    for (HalfInt j = i + 1; j <= d; j += 1) {
      if ((i + j).twice() < 0) continue;
      auto cl = lang_label(Segment::make(i + 1, j));
      if (!cl) continue;
      out.add(gl_langlands_pair(Segment::make(-i, c), Segment::make(j + 1, d)),
              class_part(*cl), 1);
    }
  }
  // Cuspidal row: i = alpha .. d; a first slot shorter than empty
  // annihilates its term (only possible for c <= -5/2).
  for (HalfInt i = HalfInt::half(); i <= d; i += 1) {
    auto first = Segment::make_or_kill(-i, c);
    if (!first) continue;
    out.add(gl_langlands_pair(*first, Segment::make(i + 1, d)), class_part(cusp_atom()), 1);
  }
  return out;
}

bool sign_classifier(const RGTensor& expansion) {
  for (const auto& [k, n] : expansion.terms()) {
    if (n <= 0) continue;
    const auto* atom = std::get_if<ClassAtom>(&k.cl);
    if (!atom || !std::holds_alternative<Cusp>(*atom)) continue;
    bool all_nonneg = true;
    for (const auto& [v, m] : gl_key_support(k.gl)) {
      if (v < HalfInt(0)) {
        all_nonneg = false;
        break;
      }
    }
    if (all_nonneg) return true;
  }
  return false;
}

}  // namespace jmc
