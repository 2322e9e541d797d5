#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace hullprob {

using BigInt = mpz_class;

/// Exact fraction backed by GMP. Always kept in lowest terms with a positive
/// denominator; every arithmetic result is canonical.
class Rational {
 public:
  Rational() = default;
  Rational(int value) : q_(value) {}
  Rational(long value) : q_(value) {}
  Rational(long long value);
  Rational(unsigned long value) : q_(value) {}
  Rational(unsigned long long value);
  Rational(const BigInt& value) : q_(value) {}
  /// Pending integer expressions such as `a * b` on BigInt.
  template <class Expr>
  Rational(const __gmp_expr<mpz_t, Expr>& value) : q_(BigInt(value)) {}
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(mpq_class q);

  /// Accepts "n", "-n", "n/d" with optional surrounding whitespace.
  static Rational parse(std::string_view text);

  /// "n" when the denominator is one, "n/d" otherwise.
  std::string str() const;
  /// Always "n/d".
  std::string fraction_str() const;
  double to_double() const { return q_.get_d(); }

  const mpq_class& raw() const noexcept { return q_; }
  BigInt num() const { return q_.get_num(); }
  BigInt den() const { return q_.get_den(); }

  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  Rational abs() const;
  BigInt floor() const;
  BigInt ceil() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational pow(const Rational& base, unsigned exponent);

/// Scientific-free decimal rendering rounded to `digits` significant digits,
/// e.g. "0.3125" or "0.333333333333". Display only.
std::string to_decimal(const Rational& value, int digits = 12);

/// Smallest natural m with m*m >= x (x >= 0).
BigInt ceil_sqrt(const Rational& x);
/// Largest natural m with m*m <= x (x >= 0).
BigInt floor_sqrt(const Rational& x);
/// True when x is the square of a rational.
bool is_rational_square(const Rational& x);

}  // namespace hullprob
