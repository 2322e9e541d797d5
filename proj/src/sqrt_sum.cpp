#include "hullprob/sqrt_sum.hpp"

#include <mpfr.h>

#include <array>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace hullprob {

namespace {

class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t bits) { mpfr_init2(v_, bits); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

constexpr std::array<unsigned long, 25> kSmallPrimes = {2,  3,  5,  7,  11, 13, 17, 19, 23,
                                                        29, 31, 37, 41, 43, 47, 53, 59, 61,
                                                        67, 71, 73, 79, 83, 89, 97};

// Encloses r0 + sum c*sqrt(n) in [lo, hi] using outward rounding.
void enclose_into(const Rational& r0, const std::map<BigInt, Rational>& terms, mpfr_prec_t bits,
                  mpfr_ptr lo, mpfr_ptr hi) {
  Mpfr root_lo(bits), root_hi(bits), t(bits);
  mpfr_set_q(lo, r0.raw().get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi, r0.raw().get_mpq_t(), MPFR_RNDU);
  for (const auto& [radicand, coeff] : terms) {
    mpfr_set_z(root_lo.get(), radicand.get_mpz_t(), MPFR_RNDD);
    mpfr_sqrt(root_lo.get(), root_lo.get(), MPFR_RNDD);
    mpfr_set_z(root_hi.get(), radicand.get_mpz_t(), MPFR_RNDU);
    mpfr_sqrt(root_hi.get(), root_hi.get(), MPFR_RNDU);
    const bool positive = coeff.sign() > 0;
    mpfr_mul_q(t.get(), positive ? root_lo.get() : root_hi.get(), coeff.raw().get_mpq_t(),
               MPFR_RNDD);
    mpfr_add(lo, lo, t.get(), MPFR_RNDD);
    mpfr_mul_q(t.get(), positive ? root_hi.get() : root_lo.get(), coeff.raw().get_mpq_t(),
               MPFR_RNDU);
    mpfr_add(hi, hi, t.get(), MPFR_RNDU);
  }
}

// +1 / -1 when the enclosure excludes zero, 0 when undecided.
int interval_sign(const Rational& r0, const std::map<BigInt, Rational>& terms, mpfr_prec_t bits) {
  Mpfr lo(bits), hi(bits);
  enclose_into(r0, terms, bits, lo.get(), hi.get());
  if (mpfr_sgn(lo.get()) > 0) return 1;
  if (mpfr_sgn(hi.get()) < 0) return -1;
  return 0;
}

}  // namespace

SqrtSum SqrtSum::sqrt_of(const Rational& x) {
  if (x.sign() < 0) throw std::domain_error("square root of a negative rational");
  SqrtSum out;
  if (x.sign() == 0) return out;
  // sqrt(a/b) = sqrt(a*b) / b, then pull small square factors out of a*b.
  BigInt radicand = x.num() * x.den();
  Rational coeff(BigInt(1), x.den());
  for (unsigned long p : kSmallPrimes) {
    const BigInt sq = BigInt(p * p);
    while (mpz_divisible_p(radicand.get_mpz_t(), sq.get_mpz_t())) {
      radicand /= sq;
      coeff *= Rational(static_cast<long>(p));
    }
  }
  if (mpz_perfect_square_p(radicand.get_mpz_t())) {
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
    out.rational_ = coeff * Rational(root);
    return out;
  }
  out.terms_.emplace(std::move(radicand), std::move(coeff));
  return out;
}

void SqrtSum::add_term(const BigInt& radicand, const Rational& coeff) {
  auto [it, inserted] = terms_.try_emplace(radicand, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.sign() == 0) terms_.erase(it);
  }
}

SqrtSum& SqrtSum::operator+=(const SqrtSum& rhs) {
  rational_ += rhs.rational_;
  for (const auto& [n, c] : rhs.terms_) add_term(n, c);
  return *this;
}

SqrtSum& SqrtSum::operator-=(const SqrtSum& rhs) {
  rational_ -= rhs.rational_;
  for (const auto& [n, c] : rhs.terms_) add_term(n, -c);
  return *this;
}

SqrtSum& SqrtSum::operator*=(const Rational& factor) {
  if (factor.sign() == 0) {
    rational_ = Rational();
    terms_.clear();
    return *this;
  }
  rational_ *= factor;
  for (auto& [n, c] : terms_) c *= factor;
  return *this;
}

SqrtSum SqrtSum::operator-() const {
  SqrtSum out = *this;
  out *= Rational(-1);
  return out;
}

int SqrtSum::sign() const {
  if (terms_.empty()) return rational_.sign();
  if (const int s = interval_sign(rational_, terms_, 128); s != 0) return s;

  // Regroup by square class; the representative radicand of each group is
  // the first one seen.
  std::vector<std::pair<BigInt, Rational>> groups;
  for (const auto& [n, c] : terms_) {
    bool merged = false;
    for (auto& [rep, gc] : groups) {
      const BigInt prod = n * rep;
      if (mpz_perfect_square_p(prod.get_mpz_t())) {
        BigInt root;
        mpz_sqrt(root.get_mpz_t(), prod.get_mpz_t());
        gc += c * Rational(root, rep);
        merged = true;
        break;
      }
    }
    if (!merged) groups.emplace_back(n, c);
  }
  std::map<BigInt, Rational> reduced;
  for (auto& [rep, gc] : groups) {
    if (gc.sign() != 0) reduced.emplace(std::move(rep), std::move(gc));
  }
  if (reduced.empty()) return rational_.sign();

  for (mpfr_prec_t bits = 256; bits <= (mpfr_prec_t{1} << 24); bits *= 2) {
    if (const int s = interval_sign(rational_, reduced, bits); s != 0) return s;
  }
  throw std::logic_error("SqrtSum::sign failed to separate a nonzero value from zero");
}

Enclosure enclose(const SqrtSum& value, unsigned bits) {
  Mpfr lo(bits), hi(bits);
  enclose_into(value.rational_part(), value.terms(), bits, lo.get(), hi.get());
  return {mpfr_get_d(lo.get(), MPFR_RNDD), mpfr_get_d(hi.get(), MPFR_RNDU)};
}

double SqrtSum::to_double() const {
  if (terms_.empty()) return rational_.to_double();
  Mpfr lo(128), hi(128);
  enclose_into(rational_, terms_, 128, lo.get(), hi.get());
  return mpfr_get_d(lo.get(), MPFR_RNDN);
}

BigInt SqrtSum::floor() const {
  if (terms_.empty()) return rational_.floor();
  Mpfr lo(128), hi(128);
  enclose_into(rational_, terms_, 128, lo.get(), hi.get());
  BigInt k;
  mpfr_get_z(k.get_mpz_t(), lo.get(), MPFR_RNDD);
  while ((*this - SqrtSum(Rational(k))).sign() < 0) --k;
  while ((*this - SqrtSum(Rational(BigInt(k + 1)))).sign() >= 0) ++k;
  return k;
}

std::string SqrtSum::str() const {
  std::ostringstream os;
  bool first = true;
  if (rational_.sign() != 0 || terms_.empty()) {
    os << rational_.str();
    first = false;
  }
  for (const auto& [n, c] : terms_) {
    if (!first) os << " + ";
    os << "(" << c.str() << ")*sqrt(" << n.get_str() << ")";
    first = false;
  }
  return os.str();
}

}  // namespace hullprob
