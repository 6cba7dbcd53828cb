#pragma once

// Exact rational numbers for closed-form ratios. Numerator and denominator
// are 64-bit; intermediate products are carried in 128 bits and the result
// must fit back into 64 bits after reduction (std::overflow_error otherwise).

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace listupdate {

__extension__ typedef __int128 wide_int;

class Rational {
public:
  constexpr Rational() = default;
  Rational(std::int64_t value) : num_(value) {} // NOLINT: implicit from integers
  Rational(std::int64_t num, std::int64_t den);

  // Parses "12", "2.0285", "-0.5" exactly.
  static Rational from_decimal(std::string_view text);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(-num_, den_); }

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept;

private:
  static Rational from_wide(wide_int num, wide_int den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

Rational abs(const Rational& r);

// Round half away from zero to `places` decimals (0..18).
Rational round_to_places(const Rational& r, int places);

// Fixed notation with exactly `places` decimals, rounded half away from zero.
std::string to_fixed(const Rational& r, int places);
// `digits` significant digits, trailing zeros (and a bare point) removed.
std::string to_significant(const Rational& r, int digits);

} // namespace listupdate
