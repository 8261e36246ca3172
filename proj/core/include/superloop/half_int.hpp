#pragma once

#include <compare>
#include <string>

namespace superloop {

/// Element of (1/2)Z stored exactly as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr static HalfInt from_twice(long twice) { return HalfInt(twice); }
  constexpr static HalfInt whole(long n) { return HalfInt(2 * n); }

  constexpr long twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  /// Z2-parity of a homogeneous space of this degree: 0 even, 1 odd.
  constexpr int parity() const { return ((twice_ % 2) + 2) % 2; }
  /// Integer value; caller must know the degree is integral.
  constexpr long floor() const {
    return (twice_ >= 0) ? twice_ / 2 : -((-twice_ + 1) / 2);
  }

  constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice_ - o.twice_); }
  constexpr HalfInt operator-() const { return HalfInt(-twice_); }
  constexpr HalfInt& operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
  constexpr HalfInt& operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }
  constexpr auto operator<=>(const HalfInt&) const = default;

  /// "3/2", "-1/2", "2": reduced p/2 notation.
  std::string str() const;

  /// Parses "3/2" or "4". Throws error{errc::parse_error} otherwise.
  static HalfInt parse(const std::string& text);

 private:
  constexpr explicit HalfInt(long twice) : twice_(twice) {}
  long twice_ = 0;
};

}  // namespace superloop
