#include "jmc/segment.hpp"

#include <algorithm>
#include <stdexcept>

namespace jmc {

Segment Segment::make(HalfInt lo, HalfInt hi) {
  HalfInt len = hi - lo;
  if (!len.is_integer())
    throw std::invalid_argument("segment endpoints on different lattices: " + lo.str() + ", " +
                                hi.str());
  if (len.twice() == -2) return Segment::empty();
  if (len.twice() < 0)
    throw std::invalid_argument("segment endpoints out of order: d(" + lo.str() + "," + hi.str() +
                                ")");
  return Segment(lo, hi);
}

std::optional<Segment> Segment::make_or_kill(HalfInt lo, HalfInt hi) {
  HalfInt len = hi - lo;
  if (len.is_integer() && len.twice() < -2) return std::nullopt;
  return Segment::make(lo, hi);
}

HalfInt Segment::lo() const {
  if (empty_) throw std::domain_error("empty interval has no endpoints");
  return lo_;
}

HalfInt Segment::hi() const {
  if (empty_) throw std::domain_error("empty interval has no endpoints");
  return hi_;
}

std::int64_t Segment::size() const {
  if (empty_) return 0;
  return (hi_ - lo_).twice() / 2 + 1;
}

HalfInt Segment::center() const {
  if (empty_) throw std::domain_error("empty interval has no center");
  return HalfInt::midpoint(lo_, hi_);
}

Segment Segment::dual() const {
  if (empty_) return *this;
  return Segment(-hi_, -lo_);
}

std::vector<HalfInt> Segment::exponents() const {
  std::vector<HalfInt> out;
  if (empty_) return out;
  out.reserve(static_cast<std::size_t>(size()));
  for (HalfInt v = lo_; v <= hi_; v += 1) out.push_back(v);
  return out;
}

bool Segment::contains(HalfInt v) const {
  return !empty_ && lo_ <= v && v <= hi_ && (v - lo_).is_integer();
}

bool Segment::contains(const Segment& other) const {
  if (other.is_empty()) return true;
  return contains(other.lo()) && contains(other.hi());
}

std::string Segment::str() const {
  if (empty_) return "1";
  return "d(" + lo_.str() + "," + hi_.str() + ")";
}

SegmentRelations segment_relations(const Segment& a, const Segment& b) {
  SegmentRelations rel;
  if (a.is_empty() || b.is_empty()) {
    rel.set_union = a.is_empty() ? b : a;
    return rel;
  }
  if (!(a.lo() - b.lo()).is_integer()) return rel;  // incomparable lattices

  HalfInt lo = std::max(a.lo(), b.lo());
  HalfInt hi = std::min(a.hi(), b.hi());
  if (lo <= hi) rel.intersection = Segment::make(lo, hi);

  HalfInt ulo = std::min(a.lo(), b.lo());
  HalfInt uhi = std::max(a.hi(), b.hi());
  bool contiguous = (lo - hi).twice() <= 2;  // overlap or juxtaposition
  if (contiguous) {
    Segment u = Segment::make(ulo, uhi);
    rel.set_union = u;
    rel.linked = (u != a && u != b);
  }
  return rel;
}

}  // namespace jmc
