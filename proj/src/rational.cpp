#include "hullprob/rational.hpp"

#include <ostream>
#include <string>
#include <stdexcept>

#include "hullprob/error.hpp"

namespace hullprob {

namespace {

bool valid_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

BigInt big_from(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace

Rational::Rational(long long value) : q_(BigInt(std::to_string(value), 10)) {}
Rational::Rational(unsigned long long value) : q_(BigInt(std::to_string(value), 10)) {}

Rational::Rational(const BigInt& num, const BigInt& den) : q_(num, den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
  if (q_.get_den() == 0) throw std::domain_error("rational with zero denominator");
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!valid_integer_text(s)) {
      throw Error(ErrorKind::Parse, "not a rational: '" + std::string(text) + "'");
    }
    return Rational(big_from(s));
  }
  const std::string_view num = trim(s.substr(0, slash));
  std::string_view den = trim(s.substr(slash + 1));
  if (!valid_integer_text(num) || !valid_integer_text(den) || den.front() == '-') {
    throw Error(ErrorKind::Parse, "not a rational: '" + std::string(text) + "'");
  }
  const BigInt d = big_from(den);
  if (d == 0) throw Error(ErrorKind::Parse, "zero denominator: '" + std::string(text) + "'");
  return Rational(big_from(num), d);
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_str();
}

std::string Rational::fraction_str() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::abs() const { return Rational(::abs(q_)); }

BigInt Rational::floor() const {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

BigInt Rational::ceil() const {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  q_ += rhs.q_;
  return *this;
}
Rational& Rational::operator-=(const Rational& rhs) {
  q_ -= rhs.q_;
  return *this;
}
Rational& Rational::operator*=(const Rational& rhs) {
  q_ *= rhs.q_;
  return *this;
}
Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.sign() == 0) throw std::domain_error("rational division by zero");
  q_ /= rhs.q_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow(const Rational& base, unsigned exponent) {
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
  return Rational(num, den);
}

std::string to_decimal(const Rational& value, int digits) {
  if (value.sign() == 0) return "0";
  // Round |value| * 10^e to an integer with `digits` digits, then place the point.
  Rational mag = value.abs();
  long exp10 = static_cast<long>(mag.num().get_str().size()) -
               static_cast<long>(mag.den().get_str().size());
  auto scaled = [&](long e) {  // mag / 10^e
    const Rational p = pow(Rational(10), static_cast<unsigned>(e >= 0 ? e : -e));
    return e >= 0 ? mag / p : mag * p;
  };
  // Find e with 10^(digits-1) <= mag * 10^(digits-1-e) < 10^digits.
  const BigInt low = pow(Rational(10), static_cast<unsigned>(digits - 1)).num();
  const BigInt high = low * 10;
  BigInt m;
  for (int guard = 0; guard < 8; ++guard) {
    const Rational s = scaled(exp10 - (digits - 1));
    m = (s + Rational(1, 2)).floor();
    if (m >= high) {
      ++exp10;
    } else if (m < low) {
      --exp10;
    } else {
      break;
    }
  }
  std::string body = m.get_str();
  long point = exp10 + 1;  // digits before the decimal point
  std::string out;
  if (point <= 0) {
    out = "0." + std::string(static_cast<std::size_t>(-point), '0') + body;
  } else if (point >= static_cast<long>(body.size())) {
    out = body + std::string(static_cast<std::size_t>(point) - body.size(), '0');
  } else {
    out = body.substr(0, static_cast<std::size_t>(point)) + "." +
          body.substr(static_cast<std::size_t>(point));
  }
  if (out.find('.') != std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return value.sign() < 0 ? "-" + out : out;
}

BigInt floor_sqrt(const Rational& x) {
  if (x.sign() < 0) throw std::domain_error("square root of a negative rational");
  BigInt m;
  mpz_sqrt(m.get_mpz_t(), x.floor().get_mpz_t());
  return m;
}

BigInt ceil_sqrt(const Rational& x) {
  BigInt m = floor_sqrt(x);
  if (Rational(m * m) < x) ++m;
  return m;
}

bool is_rational_square(const Rational& x) {
  if (x.sign() < 0) return false;
  return mpz_perfect_square_p(x.raw().get_num_mpz_t()) != 0 &&
         mpz_perfect_square_p(x.raw().get_den_mpz_t()) != 0;
}

}  // namespace hullprob
