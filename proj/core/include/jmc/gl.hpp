#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "jmc/half_int.hpp"
#include "jmc/segment.hpp"
#include "jmc/verdict.hpp"

namespace jmc {

/// A word of exponents read off a ladder of one-dimensional pieces.
using ExponentWord = std::vector<HalfInt>;
/// Words with multiplicities; all operations keep exact integer counts.
using WordMultiset = std::map<ExponentWord, long long>;

/// Standard module of the general-linear factor: an unordered product of
/// interval modules, kept as a canonically sorted multiset of nonempty
/// intervals. The empty product is the unit "1".
class GLStandard {
public:
  GLStandard() = default;
  explicit GLStandard(std::vector<Segment> segs);

  static GLStandard one() { return GLStandard(); }
  static GLStandard single(const Segment& s) { return GLStandard({s}); }

  const std::vector<Segment>& segments() const { return segs_; }
  bool is_one() const { return segs_.empty(); }
  std::int64_t rank() const;

  /// Multiset of exponents covered by all intervals.
  std::map<HalfInt, std::int64_t> support() const;
  /// Multiset of absolute values of exponents (invariant under duality).
  std::map<HalfInt, std::int64_t> abs_support() const;
  /// True when no exponent repeats.
  bool regular_support() const;

  GLStandard times(const GLStandard& other) const;
  GLStandard times(const Segment& s) const;

  std::string str() const;  ///< "d(a,b) x d(c,d)" sorted; "1" when empty

  auto operator<=>(const GLStandard&) const = default;

private:
  std::vector<Segment> segs_;  // sorted by (lo, hi), no empties
};

/// Integer combination of standard modules (the ring's working basis).
using ZGLComb = std::map<GLStandard, long long>;

/// Irreducible quotient attached to an ordered pair of linked intervals,
/// stored with the higher-center interval first.
class LPair {
public:
  LPair(const Segment& a, const Segment& b);  ///< throws unless linked

  const Segment& upper() const { return a_; }  ///< higher center
  const Segment& lower() const { return b_; }

  /// Expression in the standard basis: Std{a,b} - Std{union,intersection}.
  ZGLComb resolution() const;
  /// Word multiset of the resolution (always componentwise nonnegative).
  WordMultiset words() const;

  std::int64_t rank() const;
  std::map<HalfInt, std::int64_t> support() const;

  std::string str() const;  ///< "L(d(a,b),d(c,d))"

  auto operator<=>(const LPair&) const = default;

private:
  Segment a_, b_;
};

/// Either basis key used by tensor expansions on the GL side.
using GLKey = std::variant<GLStandard, LPair>;

std::string gl_key_str(const GLKey& k);
std::int64_t gl_key_rank(const GLKey& k);
std::map<HalfInt, std::int64_t> gl_key_support(const GLKey& k);
std::map<HalfInt, std::int64_t> gl_key_abs_support(const GLKey& k);

/// One irreducible constituent of a product of two interval modules,
/// together with its expression in the standard basis.
struct PairPiece {
  std::variant<GLStandard, LPair> irr;
  ZGLComb resolution;
};

/// Decomposes d1 x d2: two pieces when linked (the glued standard part and
/// the pair quotient), one when not. Empty inputs collapse to the other
/// factor.
std::vector<PairPiece> decompose_pair(const Segment& d1, const Segment& d2);

/// 1 iff the intervals of m are pairwise disjoint and tile delta's support
/// exactly (sound because delta's own support is multiplicity free).
int contains_delta_in_standard(const GLStandard& m, const Segment& delta);

/// Multiplicity of the pair irreducible t inside the standard module m.
/// Exact 0/1 for equal regular supports (word-level comparison on the
/// resolution); support mismatch gives exact 0; otherwise word bounds only.
MultiplicityVerdict contains_langlands_pair(const GLStandard& m, const LPair& t);

/// All interleavings of the per-interval descending words, with counts.
WordMultiset word_expansion(const GLStandard& m);

/// Number of times w occurs in word_expansion(m); computed by a pointer DP,
/// never by materializing the expansion.
long long count_word_in_standard(const GLStandard& m, const ExponentWord& w);

/// Multiplicity of the interval module delta inside the resolution of p.
long long lpair_contains_delta(const LPair& p, const Segment& delta);

/// Coefficient of d(A) (x) d(B) in the comultiplication of m: enumerates the
/// two-block splits of every interval and tiles both sides.
long long mstar_pair_coefficient(const GLStandard& m, const Segment& A, const Segment& B);

/// The irreducible generated by an ordered pair of interval slots where
/// either slot may be empty: the pair quotient when linked, otherwise the
/// (irreducible) standard product.
GLKey gl_langlands_pair(const Segment& a, const Segment& b);

/// Descending word (hi, hi-1, ..., lo) of one interval; empty for "1".
ExponentWord descending_word(const Segment& s);

}  // namespace jmc
