#include "padictheta/series.hpp"

#include <numeric>
#include <set>

namespace padictheta {

unsigned degree(const MultiIndex& alpha) { return std::accumulate(alpha.begin(), alpha.end(), 0u); }

template <Basis B>
Series<B>::Series(VarsPtr vars, RingCtxPtr ctx, unsigned cap)
    : vars_(std::move(vars)), ctx_(std::move(ctx)), cap_(cap) {}

template <Basis B>
Series<B> Series<B>::constant(VarsPtr vars, RingCtxPtr ctx, const Integer& c, unsigned cap) {
  Series s(vars, ctx, cap);
  s.add_term(MultiIndex(vars->size(), 0), c);
  return s;
}

template <Basis B>
Series<B> Series<B>::term(VarsPtr vars, RingCtxPtr ctx, const MultiIndex& alpha, const Integer& c, unsigned cap) {
  Series s(vars, ctx, cap);
  s.add_term(alpha, c);
  return s;
}

template <Basis B>
void Series<B>::add_term(const MultiIndex& alpha, const PAdicInt& c) {
  if (alpha.size() != vars_->size()) throw Error("exponent vector has wrong length");
  if (degree(alpha) > cap_) throw Error("term exceeds the degree cap");
  if (!c.ctx()->same_ring(*ctx_)) throw Error("context mismatch");
  auto it = terms_.find(alpha);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(alpha, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

template <Basis B>
PAdicInt Series<B>::coefficient(const MultiIndex& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? PAdicInt(ctx_, 0) : it->second;
}

template <Basis B>
void Series<B>::require_compatible(const Series& o) const {
  if (!ctx_->same_ring(*o.ctx_)) throw Error("context mismatch");
  if (!(*vars_ == *o.vars_)) throw Error("series over different variables");
}

template <Basis B>
Series<B> Series<B>::operator+(const Series& o) const {
  require_compatible(o);
  Series out = *this;
  out.cap_ = std::max(cap_, o.cap_);
  out.truncated_ = truncated_ || o.truncated_;
  for (const auto& [a, c] : o.terms_) out.add_term(a, c);
  return out;
}

template <Basis B>
Series<B> Series<B>::operator-(const Series& o) const {
  return *this + o.scaled(PAdicInt(ctx_, -1));
}

template <Basis B>
Series<B> Series<B>::scaled(const PAdicInt& s) const {
  Series out(vars_, ctx_, cap_);
  out.truncated_ = truncated_;
  for (const auto& [a, c] : terms_) out.add_term(a, c * s);
  return out;
}

template <Basis B>
bool Series<B>::operator==(const Series& o) const {
  return ctx_->same_ring(*o.ctx_) && *vars_ == *o.vars_ && terms_ == o.terms_;
}

template <Basis B>
Series<B> Series<B>::reduce(const RingCtxPtr& coarser) const {
  Series out(vars_, coarser, cap_);
  out.truncated_ = truncated_;
  for (const auto& [a, c] : terms_) out.add_term(a, c.reduce(coarser));
  return out;
}

template <Basis B>
Series<B> Series<B>::relabel(VarsPtr new_vars) const {
  if (new_vars->size() != vars_->size()) throw Error("relabeling must preserve the number of variables");
  Series out(std::move(new_vars), ctx_, cap_);
  out.truncated_ = truncated_;
  out.terms_ = terms_;
  return out;
}

template class Series<Basis::kShifted>;
template class Series<Basis::kMonomial>;

namespace {

// Calls f(beta) for every beta <= alpha componentwise.
template <typename F>
void for_each_below(const MultiIndex& alpha, F&& f) {
  MultiIndex beta(alpha.size(), 0);
  while (true) {
    f(beta);
    std::size_t k = 0;
    while (k < beta.size() && beta[k] == alpha[k]) beta[k++] = 0;
    if (k == beta.size()) return;
    ++beta[k];
  }
}

Integer binomial_product(const MultiIndex& alpha, const MultiIndex& beta) {
  Integer r = 1;
  for (std::size_t k = 0; k < alpha.size(); ++k) r *= binomial_exact(alpha[k], beta[k]);
  return r;
}

std::vector<std::size_t> kept_positions(const VariableSet& vars, const std::vector<VarLabel>& keep) {
  std::set<VarLabel> wanted(keep.begin(), keep.end());
  std::vector<std::size_t> pos;
  for (std::size_t k = 0; k < vars.size(); ++k) {
    if (wanted.erase(vars.at(k))) pos.push_back(k);
  }
  if (!wanted.empty()) throw Error("kept variable " + wanted.begin()->to_string() + " is not in the series");
  return pos;
}

VarsPtr sub_vars(const VariableSet& vars, const std::vector<std::size_t>& pos) {
  std::vector<VarLabel> labels;
  for (std::size_t k : pos) labels.push_back(vars.at(k));
  return std::make_shared<const VariableSet>(std::move(labels));
}

}  // namespace

MonomialSeries to_monomial(const ShiftedSeries& s) {
  MonomialSeries out(s.vars(), s.ctx(), s.cap());
  if (s.truncated()) out.mark_truncated();
  for (const auto& [alpha, c] : s.terms()) {
    for_each_below(alpha, [&](const MultiIndex& beta) { out.add_term(beta, c * PAdicInt(s.ctx(), binomial_product(alpha, beta))); });
  }
  return out;
}

ShiftedSeries to_shifted(const MonomialSeries& s, unsigned cap) {
  ShiftedSeries out(s.vars(), s.ctx(), cap);
  if (s.truncated()) out.mark_truncated();
  for (const auto& [beta, c] : s.terms()) {
    // t^beta = prod_l ((1+t_l) - 1)^{beta_l}
    for_each_below(beta, [&](const MultiIndex& gamma) {
      if (degree(gamma) > cap) {
        out.mark_truncated();
        return;
      }
      Integer coeff = binomial_product(beta, gamma);
      if ((degree(beta) - degree(gamma)) % 2) coeff = -coeff;
      out.add_term(gamma, c * PAdicInt(s.ctx(), coeff));
    });
  }
  return out;
}

template <Basis B>
Series<B> series_mul(const Series<B>& a, const Series<B>& b) {
  if (!a.ctx()->same_ring(*b.ctx())) throw Error("context mismatch");
  if (!(*a.vars() == *b.vars())) throw Error("series over different variables");
  Series<B> out(a.vars(), a.ctx(), std::min(a.cap(), b.cap()));
  if (a.truncated() || b.truncated()) out.mark_truncated();
  for (const auto& [x, cx] : a.terms()) {
    for (const auto& [y, cy] : b.terms()) {
      MultiIndex z(x.size());
      for (std::size_t k = 0; k < z.size(); ++k) z[k] = x[k] + y[k];
      if (degree(z) > out.cap()) {
        out.mark_truncated();
        continue;
      }
      out.add_term(z, cx * cy);
    }
  }
  return out;
}

template ShiftedSeries series_mul(const ShiftedSeries&, const ShiftedSeries&);
template MonomialSeries series_mul(const MonomialSeries&, const MonomialSeries&);

ShiftedSeries theta_elementary(const ShiftedSeries& s, const VarLabel& l) {
  const std::size_t k = s.vars()->require_index(l);
  ShiftedSeries out(s.vars(), s.ctx(), s.cap());
  if (s.truncated()) out.mark_truncated();
  for (const auto& [alpha, c] : s.terms()) out.add_term(alpha, c * PAdicInt(s.ctx(), static_cast<long>(alpha[k])));
  return out;
}

ShiftedSeries restrict_vars(const ShiftedSeries& s, const std::vector<VarLabel>& keep) {
  const auto pos = kept_positions(*s.vars(), keep);
  ShiftedSeries out(sub_vars(*s.vars(), pos), s.ctx(), s.cap());
  if (s.truncated()) out.mark_truncated();
  for (const auto& [alpha, c] : s.terms()) {
    MultiIndex a;
    for (std::size_t k : pos) a.push_back(alpha[k]);
    out.add_term(a, c);
  }
  return out;
}

MonomialSeries restrict_vars(const MonomialSeries& s, const std::vector<VarLabel>& keep) {
  const auto pos = kept_positions(*s.vars(), keep);
  MonomialSeries out(sub_vars(*s.vars(), pos), s.ctx(), s.cap());
  if (s.truncated()) out.mark_truncated();
  for (const auto& [beta, c] : s.terms()) {
    MultiIndex b;
    for (std::size_t k : pos) b.push_back(beta[k]);
    if (degree(b) == degree(beta)) out.add_term(b, c);
  }
  return out;
}

ShiftedSeries weyl_act(const ShiftedSeries& s, const std::map<VarLabel, VarLabel>& sigma) {
  const VariableSet& vars = *s.vars();
  std::vector<std::size_t> target(vars.size());
  std::vector<bool> hit(vars.size(), false);
  for (std::size_t k = 0; k < vars.size(); ++k) {
    auto it = sigma.find(vars.at(k));
    if (it == sigma.end()) throw Error("relabeling is not defined on " + vars.at(k).to_string());
    auto idx = vars.index_of(it->second);
    if (!idx || hit[*idx]) throw Error("relabeling is not a bijection of the variables");
    hit[*idx] = true;
    target[k] = *idx;
  }
  ShiftedSeries out(s.vars(), s.ctx(), s.cap());
  if (s.truncated()) out.mark_truncated();
  for (const auto& [alpha, c] : s.terms()) {
    MultiIndex a(alpha.size());
    for (std::size_t k = 0; k < alpha.size(); ++k) a[target[k]] = alpha[k];
    out.add_term(a, c);
  }
  return out;
}

std::map<VarLabel, VarLabel> inverse_relabeling(const std::map<VarLabel, VarLabel>& sigma) {
  std::map<VarLabel, VarLabel> inv;
  for (const auto& [a, b] : sigma) {
    if (!inv.emplace(b, a).second) throw Error("relabeling is not injective");
  }
  return inv;
}

}  // namespace padictheta
