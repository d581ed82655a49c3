#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "padictheta/series.hpp"
#include "padictheta/symmetrizer.hpp"
#include "padictheta/weight.hpp"

namespace padictheta {

using Rational = mpq_class;

// Weights of depth at most this are evaluated by expanding the symmetrizer.
inline constexpr unsigned kEnumerationDepthCap = 6;

// Default ceiling on grid evaluations before deterministic subsampling.
inline constexpr std::uint64_t kDefaultGridCap = 1'000'000;

// The box prod_k [0, bound_k) of exponent vectors, in lexicographic order with
// the first coordinate varying fastest. Above `cap` points a sorted sample of
// `cap` distinct indices is drawn from a generator seeded with `seed`.
class AlphaGrid {
 public:
  AlphaGrid(std::vector<std::uint64_t> bounds, std::uint64_t cap = kDefaultGridCap, std::uint64_t seed = 0);
  static AlphaGrid uniform(std::size_t vars, std::uint64_t bound, std::uint64_t cap = kDefaultGridCap,
                           std::uint64_t seed = 0);
  // The points with |alpha| <= degree. A polynomial of total degree at most
  // `degree` vanishing there is zero.
  static AlphaGrid simplex(std::size_t vars, unsigned degree);

  std::size_t size() const;
  std::vector<Integer> point(std::size_t k) const;
  bool subsampled() const { return !sample_.empty(); }
  std::uint64_t full_size() const { return full_size_; }

 private:
  std::vector<std::uint64_t> bounds_;
  std::uint64_t full_size_ = 1;
  std::vector<std::uint64_t> sample_;
  std::vector<std::vector<unsigned>> explicit_;
};

std::vector<Integer> to_integers(const MultiIndex& alpha);

// theta^d: multiplies c_alpha by prod_l alpha(l)^{d(l)}.
ShiftedSeries theta_word_apply(const ShiftedSeries& s, const MultiIndex& d);

// The operator theta^kappa through its eigenvalue polynomial phi_kappa.
// Small depths are evaluated from the expansion of lcan; larger symmetric
// weights from the symmetrizer sum grouped column by column.
class ThetaKappa {
 public:
  explicit ThetaKappa(Weight kappa);

  const Weight& weight() const { return kappa_; }
  unsigned depth() const { return depth_; }
  bool symmetric() const { return symmetric_; }
  // Present when depth <= kEnumerationDepthCap.
  const std::optional<SymmetrizedFunctional>& functional() const { return functional_; }

  // phi_kappa(alpha); alpha is aligned with VariableSet::for_signature(sig).
  Integer eigenvalue(const std::vector<Integer>& alpha) const;
  PAdicInt eigenvalue_mod(const std::vector<Integer>& alpha, const RingCtxPtr& ctx) const;

 private:
  Integer column_factor(std::size_t tau, unsigned height, const std::vector<Integer>& alpha) const;

  Weight kappa_;
  unsigned depth_ = 0;
  bool symmetric_ = false;
  std::optional<SymmetrizedFunctional> functional_;
  std::vector<std::pair<std::vector<std::size_t>, Integer>> indexed_terms_;
  // columns_[tau] lists (height, number of columns of that height).
  std::vector<std::vector<std::pair<unsigned, unsigned long>>> columns_;
  // var_index_[tau][i][j'] is the position of l^tau_{i+1, a+ + j'+1}.
  std::vector<std::vector<std::vector<std::size_t>>> var_index_;
};

Integer phi_oracle(const Weight& kappa, const std::vector<Integer>& alpha);

// c_alpha -> phi_kappa(alpha) c_alpha; throws Error unless kappa is sum-symmetric.
ShiftedSeries theta_kappa_apply(const ShiftedSeries& s, const Weight& kappa);
// The same operator as sum over tuples of a_tuple theta^{d(tuple)}.
ShiftedSeries theta_kappa_apply_words(const ShiftedSeries& s, const Weight& kappa);

// Exact determinant by fraction-free elimination.
Integer determinant(std::vector<std::vector<Integer>> m);

// Leading i x i minor of the exponent block of place tau: rows a+ + 1..a+ + i
// (the j index), columns 1..i (the i index).
Integer leading_minor(const Signature& sig, std::size_t tau, unsigned i, const std::vector<Integer>& alpha);

// prod_tau (a+! m_{a+})^{k_{a+}} prod_{i<a+} (i! m_i)^{k_i - k_{i+1}}.
Integer phi_kappa_minor(const Weight& kappa, const std::vector<Integer>& alpha);

// The factorials of the minor formula, prod over columns of (height)!.
Integer minor_formula_factorials(const Weight& kappa);

struct PhiEquivalenceReport {
  std::string status;  // "ok", "constant_ratio" or "counterexample"
  std::size_t grid_size = 0;
  std::size_t nonzero_points = 0;
  std::optional<Rational> ratio;  // phi_kappa_minor / phi_oracle
  Integer factorials;             // minor_formula_factorials(kappa)
  std::optional<std::vector<Integer>> witness;
  Integer oracle_value;
  Integer minor_value;
};

PhiEquivalenceReport phi_equivalence_report(const Weight& kappa, const AlphaGrid& grid);

// The Teichmueller representative x^{p^{M-1}} of a unit x of Z/p^M.
PAdicInt teichmuller(const PAdicInt& x);

// zeta^tau_i(x) = x^{exponent[tau][i]} * omega(x)^{twist[tau][i]} on units.
struct CharacterZeta {
  Signature sig;
  std::vector<std::vector<Integer>> exponent;
  std::vector<std::vector<unsigned>> twist;

  static CharacterZeta from_weight(const Weight& kappa);
  static CharacterZeta from_character(const PAdicCharacterApprox& chi);
  void validate() const;

  Integer exponent_at(std::size_t tau, std::size_t i) const { return exponent.at(tau).at(i); }
  unsigned twist_at(std::size_t tau, std::size_t i) const { return twist.empty() ? 0 : twist.at(tau).at(i); }
  // zeta^tau_i(x) * zeta^tau_{i'}(x)^{-1}, with i' = nullopt meaning no divisor.
  PAdicInt ratio_at(std::size_t tau, std::size_t i, std::optional<std::size_t> i_prime, const PAdicInt& x) const;
  bool ratio_trivial(std::size_t tau, std::size_t i, std::optional<std::size_t> i_prime) const;
};

// The character analogue of phi_kappa_minor; 0 when an argument is not a unit.
PAdicInt phi_zeta(const CharacterZeta& zeta, const std::vector<Integer>& alpha, const RingCtxPtr& ctx);

// theta^chi modulo p^{level+1}. The result lives in Z/p^{level+1}.
ShiftedSeries theta_chi_apply(const ShiftedSeries& s, const PAdicCharacterApprox& chi);

struct CongruenceReport {
  bool hypotheses_met = false;
  std::string status;  // "ok", "counterexample", or "differs" when the hypotheses fail
  unsigned long p = 0;
  unsigned m = 0;
  std::size_t grid_size = 0;
  bool subsampled = false;
  std::optional<std::vector<Integer>> witness;
  Integer value;        // phi_kappa(witness) mod p^{m+1}
  Integer value_prime;  // phi_kappa'(witness) mod p^{m+1}
};

// Compares phi_kappa and phi_kappa' modulo p^{m+1} on the grid. Both weights
// must be symmetric.
CongruenceReport congruence_sweep(const Weight& kappa, const Weight& kappa_prime, unsigned long p, unsigned m,
                                  const AlphaGrid& grid);

}  // namespace padictheta
