#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "jmc/half_int.hpp"

namespace jmc {

/// Interval [lo, lo+1, ..., hi] of half-integer exponents, or the empty
/// interval. Nonempty intervals require hi - lo to be a nonnegative integer
/// (both ends on the same coset of Z inside (1/2)Z).
class Segment {
public:
  /// The empty interval; behaves as the unit "1" under concatenation.
  static Segment empty() { return Segment(); }

  /// Strict constructor: hi - lo must be an integer >= -1.
  /// hi - lo == -1 yields the empty interval; anything else throws
  /// std::invalid_argument.
  static Segment make(HalfInt lo, HalfInt hi);

  /// Lenient constructor for formula internals: returns std::nullopt when
  /// hi - lo is an integer < -1 (an index combination that annihilates the
  /// enclosing term), otherwise behaves like make().
  static std::optional<Segment> make_or_kill(HalfInt lo, HalfInt hi);

  bool is_empty() const { return empty_; }
  HalfInt lo() const;  ///< throws std::domain_error on the empty interval
  HalfInt hi() const;  ///< throws std::domain_error on the empty interval

  /// Number of exponents (0 for the empty interval).
  std::int64_t size() const;

  /// Midpoint (lo+hi)/2; throws std::domain_error on the empty interval.
  HalfInt center() const;

  /// [lo,hi] -> [-hi,-lo]; the empty interval is self-dual.
  Segment dual() const;

  /// All exponents lo, lo+1, ..., hi in increasing order.
  std::vector<HalfInt> exponents() const;

  bool contains(HalfInt v) const;
  bool contains(const Segment& other) const;  ///< superset of other's support

  /// "d(lo,hi)" for nonempty intervals, "1" for the empty one.
  std::string str() const;

  auto operator<=>(const Segment&) const = default;

private:
  Segment() : empty_(true), lo_(), hi_() {}
  Segment(HalfInt lo, HalfInt hi) : empty_(false), lo_(lo), hi_(hi) {}

  bool empty_;
  HalfInt lo_, hi_;
};

/// How two intervals sit relative to each other.
struct SegmentRelations {
  /// True when the union is a bigger interval than either input: the two
  /// overlap or are juxtaposed without one containing the other.
  bool linked = false;
  /// Set union of the supports when it is again an interval, otherwise
  /// nullopt (disjoint with a gap, or incomparable lattices).
  std::optional<Segment> set_union;
  /// Set intersection of the supports (possibly empty, always an interval).
  Segment intersection = Segment::empty();
};

SegmentRelations segment_relations(const Segment& a, const Segment& b);

/// mk_segment(x, y) == Segment::make(x, y); spec-level entry point.
inline Segment mk_segment(HalfInt lo, HalfInt hi) { return Segment::make(lo, hi); }
/// e_center(s) == s.center().
inline HalfInt e_center(const Segment& s) { return s.center(); }
/// dual_segment(s) == s.dual().
inline Segment dual_segment(const Segment& s) { return s.dual(); }

namespace detail {
/// Convenience for literal tests: seg(1,5) == [1/2, 5/2] when doubled.
inline Segment seg2(std::int64_t lo_twice, std::int64_t hi_twice) {
  return Segment::make(HalfInt::from_twice(lo_twice), HalfInt::from_twice(hi_twice));
}
}  // namespace detail

}  // namespace jmc
