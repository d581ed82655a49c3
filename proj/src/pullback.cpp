#include "padictheta/pullback.hpp"

#include <functional>

namespace padictheta {

RestrictionMap build_restriction(const PartitionedSignature& part) {
  RestrictionMap r{part,
                   std::make_shared<const VariableSet>(VariableSet::for_signature(part.ambient())),
                   std::make_shared<const VariableSet>(VariableSet::for_partition(part)),
                   {},
                   {},
                   {}};
  for (const auto& l : r.ambient_vars->labels()) {
    const std::size_t bi = part.block_of(l.place, l.i);
    const std::size_t bj = part.block_of(l.place, l.j);
    if (bi != bj) {
      r.dropped.push_back(l);
      continue;
    }
    r.keep.push_back(l);
    r.to_local[l] = VarLabel{static_cast<unsigned>(bi), l.place, part.local_index(l.place, l.i),
                             part.local_index(l.place, l.j)};
  }
  return r;
}

namespace {

// Moves a series on the kept ambient variables to the partitioned labels.
ShiftedSeries to_partitioned(const ShiftedSeries& kept, const RestrictionMap& r) {
  std::vector<std::size_t> target;
  for (const auto& l : kept.vars()->labels()) target.push_back(r.partitioned_vars->require_index(r.to_local.at(l)));
  ShiftedSeries out(r.partitioned_vars, kept.ctx(), kept.cap());
  if (kept.truncated()) out.mark_truncated();
  for (const auto& [alpha, c] : kept.terms()) {
    MultiIndex a(r.partitioned_vars->size(), 0);
    for (std::size_t k = 0; k < alpha.size(); ++k) a[target[k]] = alpha[k];
    out.add_term(a, c);
  }
  return out;
}

void require_ambient(const ShiftedSeries& s, const RestrictionMap& r) {
  if (!(*s.vars() == *r.ambient_vars)) throw Error("series is not over the ambient variables");
}

using Eigen = std::function<PAdicInt(const std::vector<Integer>&)>;

ShiftedSeries diagonal_apply(const ShiftedSeries& s, const RingCtxPtr& ctx, const Eigen& eigen) {
  ShiftedSeries out(s.vars(), ctx, s.cap());
  if (s.truncated()) out.mark_truncated();
  for (const auto& [alpha, c] : s.terms()) out.add_term(alpha, c.reduce(ctx) * eigen(to_integers(alpha)));
  return out;
}

// Exponents of block k, in VariableSet::for_signature(part k) order.
std::vector<Integer> block_slice(const std::vector<Integer>& alpha, const VariableSet& vars, std::size_t k) {
  std::vector<Integer> out;
  for (std::size_t q = 0; q < vars.size(); ++q) {
    if (vars.at(q).block == k) out.push_back(alpha[q]);
  }
  return out;
}

template <typename T>
std::vector<std::vector<T>> component_rows(const std::vector<std::vector<T>>& rows, const PartitionedSignature& part,
                                           std::size_t k) {
  std::vector<std::vector<T>> out(part.ambient().num_places());
  for (std::size_t t = 0; t < out.size(); ++t) {
    for (unsigned idx = 1; idx <= part.parts()[k].n(); ++idx) out[t].push_back(rows[t][part.ambient_index(k, t, idx) - 1]);
  }
  return out;
}

std::vector<PAdicCharacterApprox> component_characters(const PAdicCharacterApprox& chi, const PartitionedSignature& part) {
  const auto comps = restrict_components(chi.representative, part);
  std::vector<PAdicCharacterApprox> out;
  for (std::size_t k = 0; k < comps.size(); ++k) {
    PAdicCharacterApprox c{comps[k], chi.level, {}, is_symmetric(comps[k])};
    if (!chi.twist.empty()) c.twist = component_rows(chi.twist, part, k);
    out.push_back(std::move(c));
  }
  return out;
}

// Twisted characters vanish off the unit locus of all ambient minors, which
// restriction does not preserve, so the restriction checks take the classical
// part of the character only.
void require_untwisted(const PAdicCharacterApprox& chi) {
  if (chi.has_twist()) throw Error("restriction checks take untwisted characters");
}

RingCtxPtr level_ctx(const ShiftedSeries& s, unsigned level) {
  if (level + 1 > s.ctx()->M()) throw Error("insufficient precision");
  return RingCtx::make(s.ctx()->p(), level + 1);
}

}  // namespace

ShiftedSeries builtin_witness(const VarsPtr& vars, const RingCtxPtr& ctx, unsigned cap) {
  MonomialSeries mono(vars, ctx, cap);
  const std::size_t n = vars->size();
  mono.add_term(MultiIndex(n, 0), Integer(1));
  for (std::size_t a = 0; a < n; ++a) {
    MultiIndex e(n, 0);
    e[a] = 1;
    mono.add_term(e, Integer(1));
    for (std::size_t b = a; b < n; ++b) {
      MultiIndex f = e;
      ++f[b];
      mono.add_term(f, Integer(1));
    }
  }
  return to_shifted(mono, cap);
}

ShiftedSeries res_series(const ShiftedSeries& s, const RestrictionMap& r) {
  require_ambient(s, r);
  return to_partitioned(restrict_vars(s, r.keep), r);
}

ShiftedSeries res_series_via_monomials(const ShiftedSeries& s, const RestrictionMap& r) {
  require_ambient(s, r);
  return to_partitioned(to_shifted(restrict_vars(to_monomial(s), r.keep), s.cap()), r);
}

ShiftedSeries theta_partitioned_apply(const ShiftedSeries& s, const Weight& lambda, const PartitionedSignature& part) {
  const VariableSet expected = VariableSet::for_partition(part);
  if (!(*s.vars() == expected)) throw Error("series is not over the partitioned variables");
  const auto comps = restrict_components(lambda, part);
  std::vector<ThetaKappa> thetas;
  for (const auto& c : comps) thetas.emplace_back(c);
  const RingCtxPtr ctx = s.ctx();
  return diagonal_apply(s, ctx, [&](const std::vector<Integer>& alpha) {
    PAdicInt v(ctx, 1);
    for (std::size_t k = 0; k < thetas.size(); ++k) v *= thetas[k].eigenvalue_mod(block_slice(alpha, expected, k), ctx);
    return v;
  });
}

ShiftedSeries theta_partitioned_chi_apply(const ShiftedSeries& s, const PAdicCharacterApprox& chi,
                                          const PartitionedSignature& part) {
  chi.validate();
  const VariableSet expected = VariableSet::for_partition(part);
  if (!(*s.vars() == expected)) throw Error("series is not over the partitioned variables");
  const RingCtxPtr ctx = level_ctx(s, chi.level);
  const auto chars = component_characters(chi, part);
  std::vector<ThetaKappa> thetas;
  std::vector<CharacterZeta> zetas;
  for (const auto& c : chars) {
    thetas.emplace_back(c.representative);
    zetas.push_back(CharacterZeta::from_character(c));
  }
  const bool twisted = chi.has_twist();
  return diagonal_apply(s, ctx, [&](const std::vector<Integer>& alpha) {
    PAdicInt v(ctx, 1);
    for (std::size_t k = 0; k < chars.size(); ++k) {
      const auto a = block_slice(alpha, expected, k);
      v *= twisted ? phi_zeta(zetas[k], a, ctx) : thetas[k].eigenvalue_mod(a, ctx);
    }
    return v;
  });
}

std::map<VarLabel, VarLabel> weyl_relabeling(const Signature& ambient, const BlockPermutation& sigma) {
  std::map<VarLabel, VarLabel> out;
  const VariableSet vars = VariableSet::for_signature(ambient);
  for (const auto& l : vars.labels()) {
    out[l] = VarLabel{0, l.place, sigma.old_index(l.place, l.i), sigma.old_index(l.place, l.j)};
  }
  return out;
}

CommutationReport check_pure_commutation(const Weight& lambda, const PartitionedSignature& part, const ShiftedSeries& s) {
  const RestrictionMap r = build_restriction(part);
  CommutationReport rep{is_pure(lambda, part).pure && is_symmetric(lambda), false,
                        theta_partitioned_apply(res_series(s, r), lambda, part),
                        res_series(theta_kappa_apply(s, lambda), r)};
  rep.commutes = rep.lhs == rep.rhs;
  return rep;
}

CommutationReport check_pure_commutation(const PAdicCharacterApprox& chi, const PartitionedSignature& part,
                                         const ShiftedSeries& s) {
  require_untwisted(chi);
  const RestrictionMap r = build_restriction(part);
  CommutationReport rep{is_pure(chi.representative, part).pure && is_symmetric(chi.representative), false,
                        theta_partitioned_chi_apply(res_series(s, r), chi, part),
                        res_series(theta_chi_apply(s, chi), r)};
  rep.commutes = rep.lhs == rep.rhs;
  return rep;
}

WeylReport extend_via_weyl(const Weight& lambda, const PartitionedSignature& part, const ShiftedSeries& s) {
  WeylConjugate wc = weyl_conjugate_to_dominant(lambda, part);
  const RestrictionMap r = build_restriction(part);
  const auto g = weyl_relabeling(part.ambient(), wc.sigma);
  const ShiftedSeries conj = weyl_act(theta_kappa_apply(weyl_act(s, inverse_relabeling(g)), wc.dominant), g);
  CommutationReport check{is_pure(lambda, part).pure && is_symmetric(wc.dominant), false,
                          theta_partitioned_apply(res_series(s, r), lambda, part), res_series(conj, r)};
  check.commutes = check.lhs == check.rhs;
  return {std::move(check), std::move(wc.dominant), std::move(wc.sigma)};
}

WeylReport extend_via_weyl(const PAdicCharacterApprox& chi, const PartitionedSignature& part, const ShiftedSeries& s) {
  chi.validate();
  require_untwisted(chi);
  WeylConjugate wc = weyl_conjugate_to_dominant(chi.representative, part);
  const PAdicCharacterApprox moved{wc.dominant, chi.level, {}, true};
  const RestrictionMap r = build_restriction(part);
  const auto g = weyl_relabeling(part.ambient(), wc.sigma);
  const ShiftedSeries conj = weyl_act(theta_chi_apply(weyl_act(s, inverse_relabeling(g)), moved), g);
  CommutationReport check{is_pure(chi.representative, part).pure && is_symmetric(wc.dominant), false,
                          theta_partitioned_chi_apply(res_series(s, r), chi, part), res_series(conj, r)};
  check.commutes = check.lhs == check.rhs;
  return {std::move(check), std::move(wc.dominant), std::move(wc.sigma)};
}

}  // namespace padictheta
