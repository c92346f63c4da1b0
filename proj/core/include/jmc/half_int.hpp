#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>

namespace jmc {

/// Exact element of (1/2)Z, stored as twice its value.
///
/// All exponents in this library live on the half-integer lattice; keeping
/// them doubled makes every operation integer arithmetic with no rounding.
class HalfInt {
public:
  constexpr HalfInt() : twice_(0) {}
  constexpr explicit HalfInt(int whole) : twice_(2 * whole) {}

  /// Builds the value num/2 (num = twice the value).
  static constexpr HalfInt from_twice(std::int64_t twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }
  static constexpr HalfInt half() { return from_twice(1); }

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  /// True for elements of 1/2 + Z (odd doubled value).
  constexpr bool is_strict_half() const { return !is_integer(); }

  constexpr std::int64_t floor() const {
    // Round towards -infinity; C++ division truncates towards zero.
    return (twice_ >= 0) ? twice_ / 2 : (twice_ - 1) / 2;
  }

  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  constexpr HalfInt operator+(HalfInt o) const { return from_twice(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return from_twice(twice_ - o.twice_); }
  constexpr HalfInt operator+(int k) const { return from_twice(twice_ + 2 * k); }
  constexpr HalfInt operator-(int k) const { return from_twice(twice_ - 2 * k); }
  constexpr HalfInt& operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
  constexpr HalfInt& operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }
  constexpr HalfInt& operator+=(int k) { twice_ += 2 * k; return *this; }

  constexpr auto operator<=>(const HalfInt&) const = default;

  constexpr HalfInt abs() const { return twice_ < 0 ? -*this : *this; }

  /// Exact midpoint (x+y)/2; throws unless the midpoint is again in (1/2)Z.
  static HalfInt midpoint(HalfInt x, HalfInt y) {
    std::int64_t s = x.twice_ + y.twice_;
    if (s % 2 != 0) throw std::domain_error("midpoint not on the half-integer lattice");
    return from_twice(s / 2);
  }

  /// Renders "2", "0", "-1", "1/2", "-3/2", ...
  std::string str() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

private:
  std::int64_t twice_;
};

inline constexpr HalfInt operator""_hi(unsigned long long v) {
  return HalfInt(static_cast<int>(v));
}

}  // namespace jmc

template <>
struct std::hash<jmc::HalfInt> {
  std::size_t operator()(const jmc::HalfInt& h) const noexcept {
    return std::hash<std::int64_t>{}(h.twice());
  }
};
