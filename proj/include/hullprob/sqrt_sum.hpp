#pragma once

#include <compare>
#include <map>
#include <string>

#include "hullprob/rational.hpp"

namespace hullprob {

/// A finite sum  r0 + c1*sqrt(n1) + ... + ck*sqrt(nk)  with rational r0, ci and
/// distinct non-square natural radicands ni. Perimeters, edge lengths and
/// their expectations live here so that comparisons stay exact.
///
/// sign() is certified: an interval evaluation decides the common case, and
/// when the interval straddles zero the terms are regrouped by square class
/// (sqrt(n)/sqrt(m) is rational iff n*m is a perfect square). Square roots of
/// distinct squarefree classes are linearly independent over the rationals, so
/// the value is zero exactly when every regrouped coefficient vanishes;
/// otherwise precision is doubled until the interval excludes zero.
class SqrtSum {
 public:
  SqrtSum() = default;
  SqrtSum(const Rational& value) : rational_(value) {}
  SqrtSum(int value) : rational_(value) {}

  /// sqrt(x) for x >= 0.
  static SqrtSum sqrt_of(const Rational& x);

  SqrtSum& operator+=(const SqrtSum& rhs);
  SqrtSum& operator-=(const SqrtSum& rhs);
  SqrtSum& operator*=(const Rational& factor);
  friend SqrtSum operator+(SqrtSum a, const SqrtSum& b) { return a += b; }
  friend SqrtSum operator-(SqrtSum a, const SqrtSum& b) { return a -= b; }
  friend SqrtSum operator*(SqrtSum a, const Rational& f) { return a *= f; }
  friend SqrtSum operator*(const Rational& f, SqrtSum a) { return a *= f; }
  SqrtSum operator-() const;

  int sign() const;
  bool is_rational() const { return terms_.empty(); }
  const Rational& rational_part() const { return rational_; }
  const std::map<BigInt, Rational>& terms() const { return terms_; }

  double to_double() const;
  /// Certified floor.
  BigInt floor() const;
  std::string str() const;

  friend bool operator==(const SqrtSum& a, const SqrtSum& b) { return (a - b).sign() == 0; }
  friend std::strong_ordering operator<=>(const SqrtSum& a, const SqrtSum& b) {
    const int s = (a - b).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  void add_term(const BigInt& radicand, const Rational& coeff);

  Rational rational_;
  std::map<BigInt, Rational> terms_;  // radicand -> coefficient, coefficient != 0
};

/// Interval [lo, hi] containing the value, evaluated at `bits` of precision.
struct Enclosure {
  double lo;
  double hi;
};
Enclosure enclose(const SqrtSum& value, unsigned bits = 128);

}  // namespace hullprob
