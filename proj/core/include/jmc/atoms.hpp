#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "jmc/segment.hpp"

namespace jmc {

/// Sign distinguishing the two discrete-series pieces of one induction.
enum class Sign { plus, minus };

constexpr Sign opposite(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
constexpr char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

/// The fixed cuspidal representation sigma of the classical group; the whole
/// library works on the line of one self-dual cuspidal rho with reducibility
/// exponent 1/2 over it.
struct Cusp {
  auto operator<=>(const Cusp&) const = default;
  std::string str() const { return "sigma"; }
};

/// Discrete-series label d([-c,d]_sign; sigma). Houses the one-parameter
/// family sigma_a = SignedSeg(-1/2, a, +), the two-parameter family
/// sigma^{+-}_{b,c} = SignedSeg(b, c, +-), and the tempered pair
/// tau^{+-}_{a,a} = SignedSeg(a, a, +-).
class SignedSeg {
public:
  /// Domain: c, d in Z+1/2, d >= c, c+d >= 0; sign + needs c >= -1/2,
  /// sign - needs c >= 1/2. Throws std::invalid_argument otherwise.
  SignedSeg(HalfInt c, HalfInt d, Sign sign);

  HalfInt c() const { return c_; }
  HalfInt d() const { return d_; }
  Sign sign() const { return sign_; }

  Segment seg() const { return Segment::make(-c_, d_); }

  /// "sigma_a{3/2}" | "tau{a=3/2,+}" | "ds{b=3/2,c=5/2,+}".
  std::string str() const;

  auto operator<=>(const SignedSeg&) const = default;

private:
  HalfInt c_, d_;
  Sign sign_;
};

/// Langlands-quotient label L_{1/2}(d([-c,d]); sigma), the non-tempered
/// subquotient of d([-c,d]) x| sigma.
class LangSeg {
public:
  /// Domain: c, d in Z+1/2, c+d >= 0, and (c < 1/2 or c < d).
  LangSeg(HalfInt c, HalfInt d);

  HalfInt c() const { return c_; }
  HalfInt d() const { return d_; }

  Segment seg() const { return Segment::make(-c_, d_); }

  std::string str() const;  ///< "L(d(-c,d) ; sigma)"

  auto operator<=>(const LangSeg&) const = default;

private:
  HalfInt c_, d_;
};

/// Which of the three discrete series with cuspidal support on
/// {a, b, c} a label names. The plus piece carries one canonical name; the
/// two minus pieces are genuinely different representations.
enum class DS3Tag { plus, minus_bca, minus_abc };

/// Three-parameter discrete-series label sigma^{tag}_{a,b,c}.
class DS3 {
public:
  /// Domain: 1/2 <= a < b < c, all in Z+1/2.
  DS3(HalfInt a, HalfInt b, HalfInt c, DS3Tag tag);

  HalfInt a() const { return a_; }
  HalfInt b() const { return b_; }
  HalfInt c() const { return c_; }
  DS3Tag tag() const { return tag_; }

  std::string str() const;  ///< "ds3{a=1/2,b=3/2,c=5/2,+|-bca|-abc}"

  auto operator<=>(const DS3&) const = default;

private:
  HalfInt a_, b_, c_;
  DS3Tag tag_;
};

/// Tempered (non-discrete-series) summand T^{+-} of d([-a,a]) x| sigma_c.
/// Carries only the partial Jacquet facts the catalog records for it.
class Temp {
public:
  /// Domain: a, c in Z+1/2, both >= 1/2.
  Temp(HalfInt a, HalfInt c, Sign sign);

  HalfInt a() const { return a_; }
  HalfInt c() const { return c_; }
  Sign sign() const { return sign_; }

  std::string str() const;  ///< "T{1/2,5/2,+}"

  auto operator<=>(const Temp&) const = default;

private:
  HalfInt a_, c_;
  Sign sign_;
};

/// The tempered labels; exactly these may sit in the tempered slot of a
/// Langlands datum, which keeps the label family non-recursive.
using TemperedAtom = std::variant<Cusp, SignedSeg, DS3, Temp>;

std::string tempered_str(const TemperedAtom& t);

/// General Langlands-quotient label L(d(D_1) x ... x d(D_k) x| tau): a
/// non-empty list of positive-center intervals over a tempered label.
class Lang {
public:
  /// Sorts the data canonically (center descending, ties (lo,hi) ascending).
  /// Throws std::invalid_argument on an empty list, an empty or
  /// non-positive-center interval, or the single-interval-over-Cusp shape
  /// (whose canonical name is LangSeg; build through make_lang).
  Lang(std::vector<Segment> segs, TemperedAtom tau);

  const std::vector<Segment>& segs() const { return segs_; }
  const TemperedAtom& tau() const { return tau_; }

  std::string str() const;  ///< "L(d(1/2,3/2) ; ds{...})"

  auto operator<=>(const Lang&) const = default;

private:
  std::vector<Segment> segs_;
  TemperedAtom tau_;
};

/// Canonical label of one irreducible representation of the classical group.
using ClassAtom = std::variant<Cusp, SignedSeg, LangSeg, DS3, Temp, Lang>;

/// Canonical Langlands label: collapses the single-interval-over-Cusp shape
/// to LangSeg, otherwise builds a Lang. Center-zero or empty intervals are
/// rejected (they never occur in valid Langlands data).
ClassAtom make_lang(std::vector<Segment> segs, TemperedAtom tau);

/// sigma_c = SignedSeg(-1/2, c, +); requires c >= 1/2.
ClassAtom sigma_c_atom(HalfInt c);
/// The cuspidal base as a ClassAtom.
ClassAtom cusp_atom();

/// Label equality under canonical naming (the constructors canonicalize, so
/// this is plain equality; named for audit parity with the contract).
bool atom_identify(const ClassAtom& x, const ClassAtom& y);

bool is_tempered(const ClassAtom& a);
std::optional<TemperedAtom> as_tempered(const ClassAtom& a);
ClassAtom as_atom(const TemperedAtom& t);

/// Interval data of the atom's defining standard module over the cuspidal:
/// Cusp {}, SignedSeg/LangSeg {[-c,d]}, DS3 {[-a,b],[1/2,c]},
/// Temp {[-a,a],[1/2,c]}, Lang segs + data of tau.
std::vector<Segment> standard_data(const ClassAtom& a);

/// Number of exponents of the defining data (additive under induction).
std::int64_t atom_rank(const ClassAtom& a);

/// Multiset of |exponent| over the defining data; invariant under the sign
/// flips intrinsic to Jacquet restriction, hence the conserved quantity.
std::map<HalfInt, std::int64_t> atom_abs_support(const ClassAtom& a);

std::string atom_str(const ClassAtom& a);

/// The (possibly reducible) induced object d(D_1) x ... x d(D_k) x| base.
/// Construction drops empty intervals; canonical() additionally replaces
/// every negative-center interval by its dual and sorts by (lo, hi).
class InducedLabel {
public:
  InducedLabel(std::vector<Segment> segs, ClassAtom base);

  const std::vector<Segment>& segs() const { return segs_; }
  const ClassAtom& base() const { return base_; }

  bool is_canonical() const;
  InducedLabel canonical() const;

  std::int64_t rank() const;
  std::map<HalfInt, std::int64_t> abs_support() const;

  std::string str() const;  ///< "d(-1/2,3/2) x d(1/2,5/2) |x sigma"

  auto operator<=>(const InducedLabel&) const = default;

private:
  std::vector<Segment> segs_;
  ClassAtom base_;
};

/// Contract-level alias for InducedLabel::canonical().
inline InducedLabel canonicalize_induced(const InducedLabel& l) { return l.canonical(); }

/// Classical slot of a tensor term: a resolved atom or an unresolved induced
/// label. Canonical keys collapse zero-interval induced labels to the atom.
using ClassPart = std::variant<ClassAtom, InducedLabel>;

ClassPart class_part(ClassAtom a);
ClassPart class_part(InducedLabel l);  ///< canonicalizes; no intervals -> atom

std::string class_part_str(const ClassPart& p);
std::int64_t class_part_rank(const ClassPart& p);
std::map<HalfInt, std::int64_t> class_part_abs_support(const ClassPart& p);

}  // namespace jmc
