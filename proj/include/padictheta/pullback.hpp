#pragma once

#include <map>
#include <vector>

#include "padictheta/series.hpp"
#include "padictheta/theta.hpp"
#include "padictheta/weight.hpp"

namespace padictheta {

// Restriction from the ambient signature to a partitioned one. Variables
// pairing indices of one block survive and are renamed to the block-local
// labels of VariableSet::for_partition; all others are set to zero.
struct RestrictionMap {
  PartitionedSignature part;
  VarsPtr ambient_vars;
  VarsPtr partitioned_vars;
  std::vector<VarLabel> keep;
  std::vector<VarLabel> dropped;
  std::map<VarLabel, VarLabel> to_local;
};

RestrictionMap build_restriction(const PartitionedSignature& part);

// 1 + sum_l t_l + sum_{l <= l'} t_l t_l', written in the shifted basis. Every
// cross-block product t_l t_l' appears, which detects non-commutation.
ShiftedSeries builtin_witness(const VarsPtr& vars, const RingCtxPtr& ctx, unsigned cap = kDefaultDegreeCap);

ShiftedSeries res_series(const ShiftedSeries& s, const RestrictionMap& r);
// The same map through the monomial basis, where t_l = 0 is a substitution.
ShiftedSeries res_series_via_monomials(const ShiftedSeries& s, const RestrictionMap& r);

// theta'^lambda on the partitioned group: the product of the component operators.
ShiftedSeries theta_partitioned_apply(const ShiftedSeries& s, const Weight& lambda, const PartitionedSignature& part);
ShiftedSeries theta_partitioned_chi_apply(const ShiftedSeries& s, const PAdicCharacterApprox& chi,
                                          const PartitionedSignature& part);

// g_sigma(t_l) = t_{sigma(l)} with sigma(l_{a,b}) = l_{pi(a),pi(b)}, pi(new) = old.
std::map<VarLabel, VarLabel> weyl_relabeling(const Signature& ambient, const BlockPermutation& sigma);

struct CommutationReport {
  bool hypotheses_met = false;
  bool commutes = false;
  ShiftedSeries lhs;  // theta' o res
  ShiftedSeries rhs;  // res o theta
};

// Compares res o theta^lambda with theta'^lambda o res on s. The verdict is
// binding only when lambda is pure and symmetric.
CommutationReport check_pure_commutation(const Weight& lambda, const PartitionedSignature& part, const ShiftedSeries& s);
CommutationReport check_pure_commutation(const PAdicCharacterApprox& chi, const PartitionedSignature& part,
                                         const ShiftedSeries& s);

struct WeylReport {
  CommutationReport check;  // lhs = theta' o res, rhs = res o g_sigma o theta^{lambda0} o g_sigma^{-1}
  Weight dominant;
  BlockPermutation sigma;
};

// Throws Error for non-pure weights.
WeylReport extend_via_weyl(const Weight& lambda, const PartitionedSignature& part, const ShiftedSeries& s);
WeylReport extend_via_weyl(const PAdicCharacterApprox& chi, const PartitionedSignature& part, const ShiftedSeries& s);

}  // namespace padictheta
