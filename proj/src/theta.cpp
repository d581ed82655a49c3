#include "padictheta/theta.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <unordered_set>

#include "padictheta/parallel.hpp"

namespace padictheta {

AlphaGrid::AlphaGrid(std::vector<std::uint64_t> bounds, std::uint64_t cap, std::uint64_t seed)
    : bounds_(std::move(bounds)) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  for (auto b : bounds_) {
    if (b == 0) throw Error("grid bound must be positive");
    full_size_ = full_size_ > kMax / b ? kMax : full_size_ * b;
  }
  if (cap == 0) throw Error("grid cap must be positive");
  if (full_size_ <= cap) return;
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, full_size_ - 1);
  std::unordered_set<std::uint64_t> chosen;
  while (chosen.size() < cap) chosen.insert(dist(gen));
  sample_.assign(chosen.begin(), chosen.end());
  std::sort(sample_.begin(), sample_.end());
}

AlphaGrid AlphaGrid::uniform(std::size_t vars, std::uint64_t bound, std::uint64_t cap, std::uint64_t seed) {
  return AlphaGrid(std::vector<std::uint64_t>(vars, bound), cap, seed);
}

AlphaGrid AlphaGrid::simplex(std::size_t vars, unsigned degree) {
  AlphaGrid grid({1});
  grid.bounds_.assign(vars, degree + 1);
  std::vector<unsigned> cur(vars, 0);
  std::function<void(std::size_t, unsigned)> fill = [&](std::size_t k, unsigned left) {
    if (k == vars) {
      grid.explicit_.push_back(cur);
      return;
    }
    for (unsigned a = 0; a <= left; ++a) {
      cur[k] = a;
      fill(k + 1, left - a);
    }
    cur[k] = 0;
  };
  fill(0, degree);
  grid.full_size_ = grid.explicit_.size();
  return grid;
}

std::size_t AlphaGrid::size() const {
  if (!explicit_.empty()) return explicit_.size();
  return sample_.empty() ? full_size_ : sample_.size();
}

std::vector<Integer> AlphaGrid::point(std::size_t k) const {
  if (!explicit_.empty()) {
    std::vector<Integer> out;
    for (unsigned a : explicit_.at(k)) out.emplace_back(a);
    return out;
  }
  std::uint64_t idx = sample_.empty() ? k : sample_.at(k);
  std::vector<Integer> out;
  for (auto b : bounds_) {
    out.emplace_back(static_cast<unsigned long>(idx % b));
    idx /= b;
  }
  return out;
}

std::vector<Integer> to_integers(const MultiIndex& alpha) {
  std::vector<Integer> out;
  for (unsigned a : alpha) out.emplace_back(a);
  return out;
}

ShiftedSeries theta_word_apply(const ShiftedSeries& s, const MultiIndex& d) {
  if (d.size() != s.vars()->size()) throw Error("theta word has wrong length");
  ShiftedSeries out(s.vars(), s.ctx(), s.cap());
  if (s.truncated()) out.mark_truncated();
  for (const auto& [alpha, c] : s.terms()) {
    Integer factor = 1;
    for (std::size_t k = 0; k < d.size(); ++k) {
      Integer power;
      mpz_ui_pow_ui(power.get_mpz_t(), alpha[k], d[k]);
      factor *= power;
    }
    out.add_term(alpha, c * PAdicInt(s.ctx(), factor));
  }
  return out;
}

namespace {

std::vector<std::pair<Permutation, int>> signed_permutations(unsigned h) {
  std::vector<std::pair<Permutation, int>> out;
  Permutation g = identity_permutation(h);
  do {
    out.emplace_back(g, sign(g));
  } while (std::next_permutation(g.begin(), g.end()));
  return out;
}

}  // namespace

ThetaKappa::ThetaKappa(Weight kappa) : kappa_(std::move(kappa)) {
  const SumSymmetry ss = is_sum_symmetric(kappa_);
  if (!ss.sum_symmetric) throw Error("theta^kappa needs a sum-symmetric weight, got " + kappa_.to_string());
  depth_ = ss.depth;
  symmetric_ = is_symmetric(kappa_);
  const Signature& sig = kappa_.sig();
  const VariableSet vars = VariableSet::for_signature(sig);

  var_index_.resize(sig.num_places());
  columns_.resize(sig.num_places());
  for (unsigned t = 0; t < sig.num_places(); ++t) {
    const auto& pl = sig.place(t);
    var_index_[t].assign(pl.plus, std::vector<std::size_t>(pl.minus));
    for (unsigned i = 0; i < pl.plus; ++i) {
      for (unsigned j = 0; j < pl.minus; ++j) var_index_[t][i][j] = vars.require_index({0, t, i + 1, pl.plus + j + 1});
    }
    if (symmetric_) {
      for (unsigned h = 1; h <= pl.plus; ++h) {
        const long next = h < pl.plus ? kappa_.at(t, h) : 0;
        const long mult = kappa_.at(t, h - 1) - next;
        if (mult > 0) columns_[t].emplace_back(h, static_cast<unsigned long>(mult));
      }
    }
  }

  if (depth_ <= kEnumerationDepthCap) {
    functional_ = lcan_expand(kappa_);
    for (const auto& [tuple, c] : functional_->operator_form()) {
      std::vector<std::size_t> idx;
      for (const auto& l : tuple) idx.push_back(vars.require_index(l));
      indexed_terms_.emplace_back(std::move(idx), c);
    }
  }
}

Integer ThetaKappa::column_factor(std::size_t tau, unsigned height, const std::vector<Integer>& alpha) const {
  static thread_local std::vector<std::vector<std::pair<Permutation, int>>> perms;
  if (perms.size() <= height) perms.resize(height + 1);
  if (perms[height].empty()) perms[height] = signed_permutations(height);
  if (height > var_index_[tau].front().size()) throw InternalError("column taller than the - block");
  Integer sum = 0;
  for (const auto& [sigma, s1] : perms[height]) {
    for (const auto& [pi, s2] : perms[height]) {
      Integer term = s1 * s2;
      for (unsigned r = 0; r < height; ++r) term *= alpha[var_index_[tau][sigma[r]][pi[r]]];
      sum += term;
    }
  }
  return sum;
}

Integer ThetaKappa::eigenvalue(const std::vector<Integer>& alpha) const {
  if (functional_) {
    Integer sum = 0;
    for (const auto& [idx, c] : indexed_terms_) {
      Integer term = c;
      for (std::size_t k : idx) term *= alpha.at(k);
      sum += term;
    }
    return sum;
  }
  if (!symmetric_) throw Error("phi of a non-symmetric weight beyond the enumeration depth");
  Integer product = 1;
  for (std::size_t t = 0; t < columns_.size(); ++t) {
    for (const auto& [h, mult] : columns_[t]) {
      Integer power;
      mpz_pow_ui(power.get_mpz_t(), column_factor(t, h, alpha).get_mpz_t(), mult);
      product *= power;
    }
  }
  return product;
}

PAdicInt ThetaKappa::eigenvalue_mod(const std::vector<Integer>& alpha, const RingCtxPtr& ctx) const {
  if (functional_) return PAdicInt(ctx, eigenvalue(alpha));
  if (!symmetric_) throw Error("phi of a non-symmetric weight beyond the enumeration depth");
  PAdicInt product(ctx, 1);
  for (std::size_t t = 0; t < columns_.size(); ++t) {
    for (const auto& [h, mult] : columns_[t]) {
      product *= PAdicInt(ctx, column_factor(t, h, alpha)).pow(Integer(mult));
    }
  }
  return product;
}

Integer phi_oracle(const Weight& kappa, const std::vector<Integer>& alpha) { return ThetaKappa(kappa).eigenvalue(alpha); }

namespace {

void require_signature_vars(const ShiftedSeries& s, const Signature& sig) {
  if (!(*s.vars() == VariableSet::for_signature(sig))) throw Error("series variables do not match the weight's signature");
}

}  // namespace

ShiftedSeries theta_kappa_apply(const ShiftedSeries& s, const Weight& kappa) {
  require_signature_vars(s, kappa.sig());
  const ThetaKappa theta(kappa);
  ShiftedSeries out(s.vars(), s.ctx(), s.cap());
  if (s.truncated()) out.mark_truncated();
  for (const auto& [alpha, c] : s.terms()) out.add_term(alpha, c * theta.eigenvalue_mod(to_integers(alpha), s.ctx()));
  return out;
}

ShiftedSeries theta_kappa_apply_words(const ShiftedSeries& s, const Weight& kappa) {
  require_signature_vars(s, kappa.sig());
  const SymmetrizedFunctional f = lcan_expand(kappa);
  ShiftedSeries out(s.vars(), s.ctx(), s.cap());
  if (s.truncated()) out.mark_truncated();
  for (const auto& [tuple, a] : f.terms()) {
    MultiIndex d(s.vars()->size(), 0);
    for (const auto& l : tuple) ++d[s.vars()->require_index(l)];
    out = out + theta_word_apply(s, d).scaled(PAdicInt(s.ctx(), a));
  }
  return out;
}

Integer determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sgn = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sgn = -sgn;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = v;
      }
    }
    prev = m[k][k];
  }
  return sgn * m[n - 1][n - 1];
}

Integer leading_minor(const Signature& sig, std::size_t tau, unsigned i, const std::vector<Integer>& alpha) {
  const auto& pl = sig.place(tau);
  if (i > pl.plus || i > pl.minus) throw Error("minor of size " + std::to_string(i) + " is undefined at this place");
  const VariableSet vars = VariableSet::for_signature(sig);
  std::vector<std::vector<Integer>> m(i, std::vector<Integer>(i));
  for (unsigned r = 0; r < i; ++r) {
    for (unsigned c = 0; c < i; ++c) {
      m[r][c] = alpha.at(vars.require_index({0, static_cast<unsigned>(tau), c + 1, pl.plus + r + 1}));
    }
  }
  return determinant(std::move(m));
}

namespace {

// Exponent of the i-th factor (1-based) of the minor formula at place tau.
long minor_exponent(const Weight& kappa, std::size_t tau, unsigned i) {
  const unsigned a_plus = kappa.sig().place(tau).plus;
  return i < a_plus ? kappa.at(tau, i - 1) - kappa.at(tau, i) : kappa.at(tau, a_plus - 1);
}

}  // namespace

Integer phi_kappa_minor(const Weight& kappa, const std::vector<Integer>& alpha) {
  if (!is_sum_symmetric(kappa).sum_symmetric) throw Error("minor formula needs a sum-symmetric weight");
  Integer product = 1;
  for (std::size_t t = 0; t < kappa.sig().num_places(); ++t) {
    for (unsigned i = 1; i <= kappa.sig().place(t).plus; ++i) {
      const long e = minor_exponent(kappa, t, i);
      if (e == 0) continue;
      Integer base = factorial_exact(i) * leading_minor(kappa.sig(), t, i, alpha);
      Integer power;
      mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
      product *= power;
    }
  }
  return product;
}

Integer minor_formula_factorials(const Weight& kappa) {
  Integer product = 1;
  for (std::size_t t = 0; t < kappa.sig().num_places(); ++t) {
    for (unsigned i = 1; i <= kappa.sig().place(t).plus; ++i) {
      Integer power;
      mpz_pow_ui(power.get_mpz_t(), factorial_exact(i).get_mpz_t(),
                 static_cast<unsigned long>(minor_exponent(kappa, t, i)));
      product *= power;
    }
  }
  return product;
}

PhiEquivalenceReport phi_equivalence_report(const Weight& kappa, const AlphaGrid& grid) {
  if (!is_symmetric(kappa)) throw Error("phi equivalence reports need a symmetric weight");
  const ThetaKappa theta(kappa);
  PhiEquivalenceReport rep;
  rep.grid_size = grid.size();
  rep.factorials = minor_formula_factorials(kappa);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const auto alpha = grid.point(k);
    const Integer oracle = theta.eigenvalue(alpha);
    const Integer minor = phi_kappa_minor(kappa, alpha);
    if (oracle == 0 && minor == 0) continue;
    bool mismatch = oracle == 0 || minor == 0;
    if (!mismatch) {
      Rational r(minor, oracle);
      r.canonicalize();
      if (!rep.ratio) {
        rep.ratio = r;
      } else {
        mismatch = *rep.ratio != r;
      }
    }
    if (mismatch) {
      rep.status = "counterexample";
      rep.witness = alpha;
      rep.oracle_value = oracle;
      rep.minor_value = minor;
      return rep;
    }
    ++rep.nonzero_points;
  }
  rep.status = (!rep.ratio || *rep.ratio == 1) ? "ok" : "constant_ratio";
  return rep;
}

PAdicInt teichmuller(const PAdicInt& x) {
  if (!x.is_unit()) throw Error("non-unit");
  return x.pow(x.ctx()->pow_p(x.ctx()->M() - 1));
}

CharacterZeta CharacterZeta::from_weight(const Weight& kappa) {
  CharacterZeta z{kappa.sig(), {}, {}};
  for (const auto& row : kappa.entries()) {
    std::vector<Integer> r;
    for (long v : row) r.emplace_back(v);
    z.exponent.push_back(std::move(r));
  }
  return z;
}

CharacterZeta CharacterZeta::from_character(const PAdicCharacterApprox& chi) {
  chi.validate();
  CharacterZeta z = from_weight(chi.representative);
  z.twist = chi.twist;
  return z;
}

void CharacterZeta::validate() const {
  if (exponent.size() != sig.num_places()) throw Error("character has wrong number of places");
  for (const auto& row : exponent) {
    if (row.size() != sig.n()) throw Error("character place vector must have length n");
  }
  if (!twist.empty()) {
    if (twist.size() != sig.num_places()) throw Error("twist has wrong number of places");
    for (const auto& row : twist) {
      if (row.size() != sig.n()) throw Error("twist place vector must have length n");
    }
  }
}

bool CharacterZeta::ratio_trivial(std::size_t tau, std::size_t i, std::optional<std::size_t> ip) const {
  const Integer e = exponent_at(tau, i) - (ip ? exponent_at(tau, *ip) : Integer(0));
  const long j = static_cast<long>(twist_at(tau, i)) - (ip ? static_cast<long>(twist_at(tau, *ip)) : 0L);
  return e == 0 && j == 0;
}

PAdicInt CharacterZeta::ratio_at(std::size_t tau, std::size_t i, std::optional<std::size_t> ip, const PAdicInt& x) const {
  const Integer e = exponent_at(tau, i) - (ip ? exponent_at(tau, *ip) : Integer(0));
  const long j = static_cast<long>(twist_at(tau, i)) - (ip ? static_cast<long>(twist_at(tau, *ip)) : 0L);
  PAdicInt value = x.pow(e);
  if (j != 0) value *= teichmuller(x).pow(Integer(j));
  return value;
}

PAdicInt phi_zeta(const CharacterZeta& zeta, const std::vector<Integer>& alpha, const RingCtxPtr& ctx) {
  zeta.validate();
  PAdicInt product(ctx, 1);
  for (std::size_t t = 0; t < zeta.sig.num_places(); ++t) {
    const auto& pl = zeta.sig.place(t);
    for (unsigned i = 1; i <= pl.plus; ++i) {
      const std::optional<std::size_t> divisor = i < pl.plus ? std::optional<std::size_t>(i) : std::nullopt;
      if (i > pl.minus) {
        if (!zeta.ratio_trivial(t, i - 1, divisor)) throw Error("character is nontrivial on an undefined minor");
        continue;
      }
      const PAdicInt arg(ctx, factorial_exact(i) * leading_minor(zeta.sig, t, i, alpha));
      if (!arg.is_unit()) return PAdicInt(ctx, 0);
      product *= zeta.ratio_at(t, i - 1, divisor, arg);
    }
  }
  return product;
}

ShiftedSeries theta_chi_apply(const ShiftedSeries& s, const PAdicCharacterApprox& chi) {
  chi.validate();
  if (!chi.symmetric) throw Error("theta^chi needs a symmetric character");
  require_signature_vars(s, chi.representative.sig());
  if (chi.level + 1 > s.ctx()->M()) throw Error("insufficient precision");
  const RingCtxPtr coarse = RingCtx::make(s.ctx()->p(), chi.level + 1);
  const bool twisted = chi.has_twist();
  const CharacterZeta zeta = CharacterZeta::from_character(chi);
  const ThetaKappa theta(chi.representative);
  ShiftedSeries out(s.vars(), coarse, s.cap());
  if (s.truncated()) out.mark_truncated();
  for (const auto& [alpha, c] : s.terms()) {
    const auto a = to_integers(alpha);
    const PAdicInt value = twisted ? phi_zeta(zeta, a, coarse) : theta.eigenvalue_mod(a, coarse);
    out.add_term(alpha, c.reduce(coarse) * value);
  }
  return out;
}

CongruenceReport congruence_sweep(const Weight& kappa, const Weight& kappa_prime, unsigned long p, unsigned m,
                                  const AlphaGrid& grid) {
  if (!is_symmetric(kappa) || !is_symmetric(kappa_prime)) {
    throw Error("congruence sweeps are restricted to symmetric weights");
  }
  if (!(kappa.sig() == kappa_prime.sig())) throw Error("weights over different signatures");
  CongruenceReport rep;
  rep.p = p;
  rep.m = m;
  rep.hypotheses_met = weight_congruent(kappa, kappa_prime, p, m);
  rep.grid_size = grid.size();
  rep.subsampled = grid.subsampled();
  const RingCtxPtr ctx = RingCtx::make(p, m + 1);
  const ThetaKappa a(kappa), b(kappa_prime);
  const auto hit = parallel_find_first(grid.size(), [&](std::size_t k) {
    const auto alpha = grid.point(k);
    return !(a.eigenvalue_mod(alpha, ctx) == b.eigenvalue_mod(alpha, ctx));
  });
  if (!hit) {
    rep.status = "ok";
    return rep;
  }
  rep.status = rep.hypotheses_met ? "counterexample" : "differs";
  rep.witness = grid.point(*hit);
  rep.value = a.eigenvalue_mod(*rep.witness, ctx).residue();
  rep.value_prime = b.eigenvalue_mod(*rep.witness, ctx).residue();
  return rep;
}

}  // namespace padictheta
