#include "jmc/gl.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace jmc {

namespace {

bool seg_less(const Segment& a, const Segment& b) {
  return std::pair(a.lo(), a.hi()) < std::pair(b.lo(), b.hi());
}

void add_support(std::map<HalfInt, std::int64_t>& acc, const Segment& s, bool absolute) {
  for (HalfInt v : s.exponents()) acc[absolute ? v.abs() : v] += 1;
}

}  // namespace

GLStandard::GLStandard(std::vector<Segment> segs) {
  for (auto& s : segs)
    if (!s.is_empty()) segs_.push_back(s);
  std::sort(segs_.begin(), segs_.end(), seg_less);
}

std::int64_t GLStandard::rank() const {
  std::int64_t r = 0;
  for (const auto& s : segs_) r += s.size();
  return r;
}

std::map<HalfInt, std::int64_t> GLStandard::support() const {
  std::map<HalfInt, std::int64_t> acc;
  for (const auto& s : segs_) add_support(acc, s, false);
  return acc;
}

std::map<HalfInt, std::int64_t> GLStandard::abs_support() const {
  std::map<HalfInt, std::int64_t> acc;
  for (const auto& s : segs_) add_support(acc, s, true);
  return acc;
}

bool GLStandard::regular_support() const {
  for (const auto& [v, n] : support())
    if (n > 1) return false;
  return true;
}

GLStandard GLStandard::times(const GLStandard& other) const {
  std::vector<Segment> all = segs_;
  all.insert(all.end(), other.segs_.begin(), other.segs_.end());
  return GLStandard(std::move(all));
}

GLStandard GLStandard::times(const Segment& s) const {
  std::vector<Segment> all = segs_;
  all.push_back(s);
  return GLStandard(std::move(all));
}

std::string GLStandard::str() const {
  if (segs_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < segs_.size(); ++i) {
    if (i) out += " x ";
    out += segs_[i].str();
  }
  return out;
}

LPair::LPair(const Segment& a, const Segment& b) : a_(a), b_(b) {
  if (a.is_empty() || b.is_empty())
    throw std::invalid_argument("pair quotient needs two nonempty intervals");
  SegmentRelations rel = segment_relations(a, b);
  if (!rel.linked)
    throw std::invalid_argument("intervals not linked: " + a.str() + ", " + b.str());
  if (a_.center() < b_.center()) std::swap(a_, b_);
}

ZGLComb LPair::resolution() const {
  ZGLComb out;
  SegmentRelations rel = segment_relations(a_, b_);
  out[GLStandard({a_, b_})] += 1;
  out[GLStandard({*rel.set_union, rel.intersection})] -= 1;
  return out;
}

WordMultiset LPair::words() const {
  WordMultiset acc;
  for (const auto& [std_key, coeff] : resolution())
    for (const auto& [w, n] : word_expansion(std_key)) {
      acc[w] += coeff * n;
      if (acc[w] == 0) acc.erase(w);
    }
  return acc;
}

std::int64_t LPair::rank() const { return a_.size() + b_.size(); }

std::map<HalfInt, std::int64_t> LPair::support() const {
  std::map<HalfInt, std::int64_t> acc;
  add_support(acc, a_, false);
  add_support(acc, b_, false);
  return acc;
}

std::string LPair::str() const { return "L(" + a_.str() + "," + b_.str() + ")"; }

std::string gl_key_str(const GLKey& k) {
  return std::visit([](const auto& v) { return v.str(); }, k);
}

std::int64_t gl_key_rank(const GLKey& k) {
  return std::visit([](const auto& v) { return v.rank(); }, k);
}

std::map<HalfInt, std::int64_t> gl_key_support(const GLKey& k) {
  return std::visit([](const auto& v) { return v.support(); }, k);
}

std::map<HalfInt, std::int64_t> gl_key_abs_support(const GLKey& k) {
  if (const auto* std_key = std::get_if<GLStandard>(&k)) return std_key->abs_support();
  const auto& p = std::get<LPair>(k);
  return GLStandard({p.upper(), p.lower()}).abs_support();
}

std::vector<PairPiece> decompose_pair(const Segment& d1, const Segment& d2) {
  std::vector<PairPiece> out;
  GLStandard product({d1, d2});
  if (d1.is_empty() || d2.is_empty()) {
    out.push_back({product, {{product, 1}}});
    return out;
  }
  SegmentRelations rel = segment_relations(d1, d2);
  if (!rel.linked) {
    out.push_back({product, {{product, 1}}});
    return out;
  }
  GLStandard glued({*rel.set_union, rel.intersection});
  out.push_back({glued, {{glued, 1}}});
  LPair pair(d1, d2);
  out.push_back({pair, pair.resolution()});
  return out;
}

int contains_delta_in_standard(const GLStandard& m, const Segment& delta) {
  if (delta.is_empty()) return m.is_one() ? 1 : 0;
  if (m.rank() != delta.size()) return 0;
  const auto& segs = m.segments();
  if (segs.empty()) return 0;
  // Sorted by (lo,hi); a tiling must be a chain of juxtaposed intervals.
  if (segs.front().lo() != delta.lo()) return 0;
  for (std::size_t i = 0; i + 1 < segs.size(); ++i)
    if ((segs[i + 1].lo() - segs[i].hi()).twice() != 2) return 0;
  return segs.back().hi() == delta.hi() ? 1 : 0;
}

ExponentWord descending_word(const Segment& s) {
  ExponentWord w;
  if (s.is_empty()) return w;
  for (HalfInt v = s.hi();; v -= HalfInt::from_twice(2)) {
    w.push_back(v);
    if (v == s.lo()) break;
  }
  return w;
}

namespace {

void expand_rec(const std::vector<ExponentWord>& words, std::vector<std::size_t>& pos,
                ExponentWord& prefix, WordMultiset& acc) {
  bool done = true;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (pos[i] < words[i].size()) {
      done = false;
      prefix.push_back(words[i][pos[i]]);
      ++pos[i];
      expand_rec(words, pos, prefix, acc);
      --pos[i];
      prefix.pop_back();
    }
  }
  if (done) acc[prefix] += 1;
}

}  // namespace

WordMultiset word_expansion(const GLStandard& m) {
  std::vector<ExponentWord> words;
  words.reserve(m.segments().size());
  for (const auto& s : m.segments()) words.push_back(descending_word(s));
  WordMultiset acc;
  std::vector<std::size_t> pos(words.size(), 0);
  ExponentWord prefix;
  expand_rec(words, pos, prefix, acc);
  return acc;
}

long long count_word_in_standard(const GLStandard& m, const ExponentWord& w) {
  if (static_cast<std::int64_t>(w.size()) != m.rank()) return 0;
  std::vector<ExponentWord> words;
  for (const auto& s : m.segments()) words.push_back(descending_word(s));
  // states: per-interval consumed prefix lengths -> number of interleavings.
  std::map<std::vector<std::size_t>, long long> states;
  states[std::vector<std::size_t>(words.size(), 0)] = 1;
  for (HalfInt letter : w) {
    std::map<std::vector<std::size_t>, long long> next;
    for (const auto& [pos, ways] : states)
      for (std::size_t i = 0; i < words.size(); ++i)
        if (pos[i] < words[i].size() && words[i][pos[i]] == letter) {
          std::vector<std::size_t> np = pos;
          ++np[i];
          next[np] += ways;
        }
    states = std::move(next);
    if (states.empty()) return 0;
  }
  long long total = 0;
  for (const auto& [pos, ways] : states) total += ways;  // all fully consumed here
  return total;
}

long long lpair_contains_delta(const LPair& p, const Segment& delta) {
  long long n = 0;
  for (const auto& [std_key, coeff] : p.resolution())
    n += coeff * contains_delta_in_standard(std_key, delta);
  return n;
}

MultiplicityVerdict contains_langlands_pair(const GLStandard& m, const LPair& t) {
  if (m.support() != t.support())
    return MultiplicityVerdict::exact(0, "support mismatch");
  if (m == GLStandard({t.upper(), t.lower()}))
    return MultiplicityVerdict::exact(1, "own standard module, top quotient");

  WordMultiset target_words = t.words();
  long long upper = std::numeric_limits<long long>::max();
  for (const auto& [w, c] : target_words) {
    if (c <= 0) continue;
    upper = std::min(upper, count_word_in_standard(m, w) / c);
  }
  if (m.regular_support()) {
    long long n = upper >= 1 ? 1 : 0;
    return MultiplicityVerdict::exact(n, "regular support, word-level comparison");
  }
  MultiplicityVerdict v = MultiplicityVerdict::unknown("irregular support, word bounds only");
  v.lo = 0;
  v.hi = upper;
  return v;
}

long long mstar_pair_coefficient(const GLStandard& m, const Segment& A, const Segment& B) {
  const auto& segs = m.segments();
  long long total = 0;
  std::vector<Segment> left, right;
  // Every interval [x,y] splits as a top part [z+1,y] going left and a
  // bottom part [x,z] going right, z in {x-1, ..., y}.
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == segs.size()) {
      total += static_cast<long long>(contains_delta_in_standard(GLStandard(left), A)) *
               contains_delta_in_standard(GLStandard(right), B);
      return;
    }
    const Segment& s = segs[i];
    for (HalfInt z = s.lo() - 1;; z += 1) {
      left.push_back(Segment::make(z + 1, s.hi()));
      right.push_back(Segment::make(s.lo(), z));
      self(self, i + 1);
      left.pop_back();
      right.pop_back();
      if (z == s.hi()) break;
    }
  };
  rec(rec, 0);
  return total;
}

GLKey gl_langlands_pair(const Segment& a, const Segment& b) {
  if (a.is_empty() || b.is_empty()) return GLStandard({a, b});
  SegmentRelations rel = segment_relations(a, b);
  if (rel.linked) return LPair(a, b);
  return GLStandard({a, b});
}

}  // namespace jmc
