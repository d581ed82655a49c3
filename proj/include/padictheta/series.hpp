#pragma once

#include <map>
#include <vector>

#include "padictheta/padic.hpp"
#include "padictheta/variables.hpp"

namespace padictheta {

// Exponent vector aligned with a VariableSet.
using MultiIndex = std::vector<unsigned>;

inline constexpr unsigned kDefaultDegreeCap = 8;

enum class Basis { kShifted, kMonomial };

unsigned degree(const MultiIndex& alpha);

// A finite sum of c_alpha * b_alpha where b_alpha is (1+t)^alpha in the
// shifted basis and t^alpha in the monomial basis. Zero coefficients are
// pruned; exponents of degree above the cap are rejected on insertion.
template <Basis B>
class Series {
 public:
  Series(VarsPtr vars, RingCtxPtr ctx, unsigned cap = kDefaultDegreeCap);

  static Series constant(VarsPtr vars, RingCtxPtr ctx, const Integer& c, unsigned cap = kDefaultDegreeCap);
  static Series term(VarsPtr vars, RingCtxPtr ctx, const MultiIndex& alpha, const Integer& c,
                     unsigned cap = kDefaultDegreeCap);

  const VarsPtr& vars() const { return vars_; }
  const RingCtxPtr& ctx() const { return ctx_; }
  unsigned cap() const { return cap_; }
  bool truncated() const { return truncated_; }
  const std::map<MultiIndex, PAdicInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const MultiIndex& alpha, const PAdicInt& c);
  void add_term(const MultiIndex& alpha, const Integer& c) { add_term(alpha, PAdicInt(ctx_, c)); }
  void mark_truncated() { truncated_ = true; }
  PAdicInt coefficient(const MultiIndex& alpha) const;

  Series operator+(const Series& o) const;
  Series operator-(const Series& o) const;
  Series scaled(const PAdicInt& s) const;
  // Equality of variable sets, rings and coefficient maps.
  bool operator==(const Series& o) const;

  // Coefficients reduced into a coarser ring with the same p.
  Series reduce(const RingCtxPtr& coarser) const;
  // The same coefficient map over a different list of labels of equal length.
  Series relabel(VarsPtr new_vars) const;

 private:
  void require_compatible(const Series& o) const;

  VarsPtr vars_;
  RingCtxPtr ctx_;
  unsigned cap_;
  bool truncated_ = false;
  std::map<MultiIndex, PAdicInt> terms_;
};

using ShiftedSeries = Series<Basis::kShifted>;
using MonomialSeries = Series<Basis::kMonomial>;

MonomialSeries to_monomial(const ShiftedSeries& s);
ShiftedSeries to_shifted(const MonomialSeries& s, unsigned cap);

// Convolution in the exponents; terms beyond the cap are dropped and the
// result is flagged as truncated.
template <Basis B>
Series<B> series_mul(const Series<B>& a, const Series<B>& b);

// (1 + t_l) d/dt_l, which multiplies c_alpha by alpha(l).
ShiftedSeries theta_elementary(const ShiftedSeries& s, const VarLabel& l);

// Substitutes t_l = 0 for every variable outside keep. The result lives on the
// kept variables in their original order.
ShiftedSeries restrict_vars(const ShiftedSeries& s, const std::vector<VarLabel>& keep);
MonomialSeries restrict_vars(const MonomialSeries& s, const std::vector<VarLabel>& keep);

// g_sigma(t_l) = t_{sigma(l)}; sigma must be a bijection of the variable set.
ShiftedSeries weyl_act(const ShiftedSeries& s, const std::map<VarLabel, VarLabel>& sigma);
std::map<VarLabel, VarLabel> inverse_relabeling(const std::map<VarLabel, VarLabel>& sigma);

}  // namespace padictheta
