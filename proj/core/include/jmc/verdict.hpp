#pragma once

#include <cstdint>
#include <limits>
#include <string>

namespace jmc {

/// Result of a multiplicity computation: an exact value when the engine can
/// certify one, otherwise the sharpest bounds it can prove.
struct MultiplicityVerdict {
  enum class Kind { Exact, AtLeast, AtMost, Range, Unknown };

  Kind kind = Kind::Unknown;
  long long lo = 0;  ///< proven lower bound (0 when none)
  long long hi = std::numeric_limits<long long>::max();  ///< proven upper bound
  std::string witness;  ///< how the bound was obtained (human-readable)

  static MultiplicityVerdict exact(long long n, std::string w = {}) {
    return {Kind::Exact, n, n, std::move(w)};
  }
  static MultiplicityVerdict at_least(long long n, std::string w = {}) {
    return {Kind::AtLeast, n, std::numeric_limits<long long>::max(), std::move(w)};
  }
  static MultiplicityVerdict at_most(long long n, std::string w = {}) {
    return {Kind::AtMost, 0, n, std::move(w)};
  }
  static MultiplicityVerdict range(long long a, long long b, std::string w = {}) {
    if (a == b) return exact(a, std::move(w));
    return {Kind::Range, a, b, std::move(w)};
  }
  static MultiplicityVerdict unknown(std::string w = {}) {
    return {Kind::Unknown, 0, std::numeric_limits<long long>::max(), std::move(w)};
  }

  bool is_exact() const { return kind == Kind::Exact; }
  bool has_upper() const { return hi != std::numeric_limits<long long>::max(); }
  long long value() const { return lo; }  ///< meaningful when is_exact()

  /// Tightens *this with an independently proven verdict about the same
  /// quantity; narrows to Exact when the bounds meet.
  MultiplicityVerdict combined(const MultiplicityVerdict& other) const;

  std::string str() const;
};

}  // namespace jmc
