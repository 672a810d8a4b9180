#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ricci {

/// Exact rational number, always held in lowest terms with a positive
/// denominator. Thin value wrapper over GMP's mpq_class.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t numerator, std::int64_t denominator);

  static Rational from_mpq(mpq_class value);

  /// Accepts "p/q", "p" or "-p/q". Throws Error(ParseError) otherwise, and on
  /// a zero denominator.
  static Rational parse(std::string_view text);

  /// Always "num/den", including "0/1" and "3/1".
  std::string to_string() const;

  std::string numerator_string() const;
  std::string denominator_string() const;
  bool is_integer() const;
  int sign() const { return sgn(value_); }

  const mpq_class& mpq() const { return value_; }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

Rational abs(const Rational& value);
std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace ricci

template <>
struct std::hash<ricci::Rational> {
  std::size_t operator()(const ricci::Rational& r) const noexcept {
    return std::hash<std::string>{}(r.to_string());
  }
};
