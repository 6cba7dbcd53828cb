#include "listupdate/rational.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>
#include <string>

namespace listupdate {

namespace {

using Wide = wide_int;

Wide gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Wide pow10(int places) {
  Wide p = 1;
  for (int i = 0; i < places; ++i) p *= 10;
  return p;
}

std::string to_string(Wide v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  if (negative) v = -v;
  std::string digits;
  while (v > 0) {
    digits.insert(digits.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return negative ? "-" + digits : digits;
}

// round(|num/den| * 10^places) half up, sign returned separately.
Wide scaled_magnitude(const Rational& r, int places) {
  if (places < 0 || places > 18) throw std::out_of_range("decimal places must be in 0..18");
  Wide num = r.num();
  if (num < 0) num = -num;
  const Wide scaled = num * pow10(places);
  Wide q = scaled / r.den();
  const Wide rem = scaled % r.den();
  if (2 * rem >= r.den()) ++q;
  return q;
}

std::string render_scaled(Wide magnitude, bool negative, int places) {
  std::string digits = to_string(magnitude);
  if (places > 0) {
    if (digits.size() <= static_cast<std::size_t>(places))
      digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  }
  return (negative && magnitude != 0) ? "-" + digits : digits;
}

} // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  *this = from_wide(num, den);
}

Rational Rational::from_wide(Wide num, Wide den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const Wide g = gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  constexpr Wide lo = std::numeric_limits<std::int64_t>::min();
  constexpr Wide hi = std::numeric_limits<std::int64_t>::max();
  if (num < lo || num > hi || den > hi) throw std::overflow_error("rational exceeds 64 bits");
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rational Rational::from_decimal(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty decimal");
  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Wide num = 0;
  Wide den = 1;
  bool seen_point = false;
  bool seen_digit = false;
  for (char c : text) {
    if (c == '.' && !seen_point) {
      seen_point = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
    seen_digit = true;
    num = num * 10 + (c - '0');
    if (seen_point) den *= 10;
    if (num > std::numeric_limits<std::int64_t>::max())
      throw std::overflow_error("decimal exceeds 64 bits");
  }
  if (!seen_digit) throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
  return from_wide(negative ? -num : num, den);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational::from_wide(Wide(a.num_) * b.den_ + Wide(b.num_) * a.den_, Wide(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational::from_wide(Wide(a.num_) * b.den_ - Wide(b.num_) * a.den_, Wide(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::from_wide(Wide(a.num_) * b.num_, Wide(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::domain_error("division by zero");
  return Rational::from_wide(Wide(a.num_) * b.den_, Wide(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
  const Wide lhs = Wide(a.num_) * b.den_;
  const Wide rhs = Wide(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational abs(const Rational& r) { return r.num() < 0 ? -r : r; }

Rational round_to_places(const Rational& r, int places) {
  const Wide magnitude = scaled_magnitude(r, places);
  const Wide signed_value = r.num() < 0 ? -magnitude : magnitude;
  return Rational(static_cast<std::int64_t>(signed_value), static_cast<std::int64_t>(pow10(places)));
}

std::string to_fixed(const Rational& r, int places) {
  return render_scaled(scaled_magnitude(r, places), r.num() < 0, places);
}

std::string to_significant(const Rational& r, int digits) {
  if (digits < 1) throw std::out_of_range("significant digits must be positive");
  if (r.num() == 0) return "0";

  // Decimal exponent of the leading digit: |r| in [10^e, 10^(e+1)).
  const Wide num = r.num() < 0 ? -Wide(r.num()) : Wide(r.num());
  int exponent = static_cast<int>(to_string(num / r.den()).size()) - 1;
  if (num < r.den()) {
    exponent = -1;
    Wide scaled = num * 10;
    while (scaled < r.den()) {
      scaled *= 10;
      --exponent;
    }
  }

  int places = digits - 1 - exponent;
  if (places < 0) places = 0;
  if (places > 18) places = 18;
  Wide magnitude = scaled_magnitude(r, places);
  // Rounding may carry into a new leading digit (9.9999995 -> 10.00000).
  if (places > 0 && to_string(magnitude).size() > static_cast<std::size_t>(digits)) {
    --places;
    magnitude = scaled_magnitude(r, places);
  }

  std::string text = render_scaled(magnitude, r.num() < 0, places);
  if (text.find('.') != std::string::npos) {
    while (text.back() == '0') text.pop_back();
    if (text.back() == '.') text.pop_back();
  }
  return text;
}

} // namespace listupdate
