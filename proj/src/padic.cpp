#include "padictheta/padic.hpp"

namespace padictheta {

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  Integer z(p);
  return mpz_probab_prime_p(z.get_mpz_t(), 30) != 0;
}

RingCtx::RingCtx(unsigned long p, unsigned M, unsigned n_bound)
    : p_(p), M_(M), n_bound_(n_bound) {
  mpz_ui_pow_ui(modulus_.get_mpz_t(), p, M);
}

RingCtxPtr RingCtx::make(unsigned long p, unsigned M, unsigned n_bound) {
  if (!is_prime(p)) throw Error("p = " + std::to_string(p) + " is not prime");
  if (M < 1) throw Error("precision M must be at least 1");
  if (p <= n_bound) {
    throw Error("p = " + std::to_string(p) + " must exceed n = " + std::to_string(n_bound));
  }
  return RingCtxPtr(new RingCtx(p, M, n_bound));
}

Integer RingCtx::pow_p(unsigned k) const {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), p_, k);
  return r;
}

Integer mod_floor(const Integer& x, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

PAdicInt::PAdicInt(RingCtxPtr ctx, const Integer& value)
    : ctx_(std::move(ctx)), residue_(mod_floor(value, ctx_->modulus())) {}

void PAdicInt::require_same_ring(const PAdicInt& b) const {
  if (!ctx_->same_ring(*b.ctx_)) throw Error("context mismatch");
}

PAdicInt PAdicInt::operator+(const PAdicInt& b) const {
  require_same_ring(b);
  return PAdicInt(ctx_, residue_ + b.residue_);
}

PAdicInt PAdicInt::operator-(const PAdicInt& b) const {
  require_same_ring(b);
  return PAdicInt(ctx_, residue_ - b.residue_);
}

PAdicInt PAdicInt::operator*(const PAdicInt& b) const {
  require_same_ring(b);
  return PAdicInt(ctx_, residue_ * b.residue_);
}

PAdicInt PAdicInt::operator-() const { return PAdicInt(ctx_, -residue_); }

bool PAdicInt::operator==(const PAdicInt& b) const {
  return ctx_->same_ring(*b.ctx_) && residue_ == b.residue_;
}

bool PAdicInt::is_unit() const {
  return mpz_divisible_ui_p(residue_.get_mpz_t(), ctx_->p()) == 0;
}

PAdicInt PAdicInt::inverse() const {
  if (!is_unit()) throw Error("non-unit");
  Integer r;
  mpz_invert(r.get_mpz_t(), residue_.get_mpz_t(), ctx_->modulus().get_mpz_t());
  return PAdicInt(ctx_, r);
}

PAdicInt PAdicInt::pow(const Integer& e) const {
  if (e < 0) return inverse().pow(-e);
  Integer r;
  mpz_powm(r.get_mpz_t(), residue_.get_mpz_t(), e.get_mpz_t(), ctx_->modulus().get_mpz_t());
  return PAdicInt(ctx_, r);
}

std::optional<unsigned> PAdicInt::valuation() const {
  if (residue_ == 0) return std::nullopt;
  Integer p(ctx_->p());
  return static_cast<unsigned>(mpz_remove(Integer().get_mpz_t(), residue_.get_mpz_t(), p.get_mpz_t()));
}

PAdicInt PAdicInt::reduce(const RingCtxPtr& coarser) const {
  if (coarser->p() != ctx_->p() || coarser->M() > ctx_->M()) {
    throw Error("reduction target must share p and have smaller precision");
  }
  return PAdicInt(coarser, residue_);
}

bool congruent(const PAdicInt& a, const PAdicInt& b, unsigned m) {
  if (!a.ctx()->same_ring(*b.ctx())) throw Error("context mismatch");
  if (m > a.ctx()->M()) throw Error("insufficient precision");
  Integer diff = a.residue() - b.residue();
  return mpz_divisible_p(diff.get_mpz_t(), a.ctx()->pow_p(m).get_mpz_t()) != 0;
}

Integer factorial_exact(unsigned k) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

Integer binomial_exact(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace padictheta
