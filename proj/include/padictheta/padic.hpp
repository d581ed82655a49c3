#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>

#include "padictheta/error.hpp"

namespace padictheta {

using Integer = mpz_class;

class RingCtx;
using RingCtxPtr = std::shared_ptr<const RingCtx>;

// The ring Z/p^M together with the largest n it is meant to serve.
class RingCtx {
 public:
  // Throws Error unless p is prime, p > n_bound and M >= 1.
  static RingCtxPtr make(unsigned long p, unsigned M, unsigned n_bound = 0);

  unsigned long p() const { return p_; }
  unsigned M() const { return M_; }
  unsigned n_bound() const { return n_bound_; }
  const Integer& modulus() const { return modulus_; }
  Integer pow_p(unsigned k) const;

  // Two contexts are interchangeable when they describe the same ring.
  bool same_ring(const RingCtx& other) const { return p_ == other.p_ && M_ == other.M_; }

 private:
  RingCtx(unsigned long p, unsigned M, unsigned n_bound);

  unsigned long p_;
  unsigned M_;
  unsigned n_bound_;
  Integer modulus_;
};

class PAdicInt {
 public:
  PAdicInt(RingCtxPtr ctx, const Integer& value);
  PAdicInt(RingCtxPtr ctx, long value) : PAdicInt(std::move(ctx), Integer(value)) {}

  const Integer& residue() const { return residue_; }
  const RingCtxPtr& ctx() const { return ctx_; }

  PAdicInt operator+(const PAdicInt& b) const;
  PAdicInt operator-(const PAdicInt& b) const;
  PAdicInt operator*(const PAdicInt& b) const;
  PAdicInt operator-() const;
  PAdicInt& operator+=(const PAdicInt& b) { return *this = *this + b; }
  PAdicInt& operator*=(const PAdicInt& b) { return *this = *this * b; }

  bool operator==(const PAdicInt& b) const;
  bool is_zero() const { return residue_ == 0; }
  bool is_unit() const;

  // Throws Error("non-unit") when p divides the residue.
  PAdicInt inverse() const;
  // Negative exponents require a unit.
  PAdicInt pow(const Integer& e) const;

  // nullopt stands for INFINITY: the residue is 0, i.e. divisible by p^M.
  std::optional<unsigned> valuation() const;

  // Reduction to a coarser context with the same p.
  PAdicInt reduce(const RingCtxPtr& coarser) const;

  std::string to_string() const { return residue_.get_str(); }

 private:
  void require_same_ring(const PAdicInt& b) const;

  RingCtxPtr ctx_;
  Integer residue_;
};

// True iff p^m divides a - b. Throws Error("insufficient precision") for m > M.
bool congruent(const PAdicInt& a, const PAdicInt& b, unsigned m);

Integer factorial_exact(unsigned k);
Integer binomial_exact(unsigned long n, unsigned long k);

// Least nonnegative residue of x modulo m (m > 0).
Integer mod_floor(const Integer& x, const Integer& m);

bool is_prime(unsigned long p);

}  // namespace padictheta
