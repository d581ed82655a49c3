#include "padictheta/symmetrizer.hpp"

#include <algorithm>
#include <numeric>

namespace padictheta {

Permutation identity_permutation(unsigned d) {
  Permutation g(d);
  std::iota(g.begin(), g.end(), 0u);
  return g;
}

Permutation compose(const Permutation& g, const Permutation& h) {
  Permutation out(h.size());
  for (std::size_t k = 0; k < h.size(); ++k) out[k] = g[h[k]];
  return out;
}

int sign(const Permutation& g) {
  std::vector<bool> seen(g.size(), false);
  int s = 1;
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (seen[k]) continue;
    std::size_t len = 0;
    for (std::size_t x = k; !seen[x]; x = g[x]) {
      seen[x] = true;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

GroupAlgebraElement::GroupAlgebraElement(unsigned d, std::map<Permutation, Integer> terms)
    : d_(d), terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

Integer GroupAlgebraElement::coefficient(const Permutation& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Integer(0) : it->second;
}

GroupAlgebraElement GroupAlgebraElement::operator*(const GroupAlgebraElement& o) const {
  if (d_ != o.d_) throw Error("group algebra degree mismatch");
  std::map<Permutation, Integer> out;
  for (const auto& [g, a] : terms_) {
    for (const auto& [h, b] : o.terms_) out[compose(g, h)] += a * b;
  }
  return GroupAlgebraElement(d_, std::move(out));
}

GroupAlgebraElement GroupAlgebraElement::operator*(const Integer& s) const {
  auto out = terms_;
  for (auto& [g, c] : out) c *= s;
  return GroupAlgebraElement(d_, std::move(out));
}

namespace {

std::vector<unsigned> nonzero_parts(const std::vector<unsigned>& partition) {
  std::vector<unsigned> parts;
  for (unsigned r : partition) {
    if (r) parts.push_back(r);
  }
  return parts;
}

// Rows of the row-major tableau as lists of positions.
std::vector<std::vector<unsigned>> tableau_rows(const std::vector<unsigned>& parts) {
  std::vector<std::vector<unsigned>> rows;
  unsigned next = 0;
  for (unsigned r : parts) {
    std::vector<unsigned> row(r);
    std::iota(row.begin(), row.end(), next);
    next += r;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::vector<unsigned>> tableau_columns(const std::vector<std::vector<unsigned>>& rows) {
  std::vector<std::vector<unsigned>> cols;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (cols.size() <= c) cols.emplace_back();
      cols[c].push_back(row[c]);
    }
  }
  return cols;
}

// All permutations preserving each block setwise, with their signs.
std::vector<Permutation> block_group(const std::vector<std::vector<unsigned>>& blocks, unsigned d) {
  std::vector<Permutation> group{identity_permutation(d)};
  for (const auto& block : blocks) {
    std::vector<Permutation> next;
    std::vector<unsigned> images = block;
    std::sort(images.begin(), images.end());
    do {
      for (const auto& g : group) {
        Permutation h = g;
        for (std::size_t k = 0; k < block.size(); ++k) h[block[k]] = images[k];
        next.push_back(std::move(h));
      }
    } while (std::next_permutation(images.begin(), images.end()));
    group = std::move(next);
  }
  return group;
}

unsigned total(const std::vector<unsigned>& parts) { return std::accumulate(parts.begin(), parts.end(), 0u); }

}  // namespace

GroupAlgebraElement row_symmetrizer(const std::vector<unsigned>& partition) {
  const auto parts = nonzero_parts(partition);
  const unsigned d = total(parts);
  std::map<Permutation, Integer> terms;
  for (auto& g : block_group(tableau_rows(parts), d)) terms[g] += 1;
  return GroupAlgebraElement(d, std::move(terms));
}

GroupAlgebraElement column_antisymmetrizer(const std::vector<unsigned>& partition) {
  const auto parts = nonzero_parts(partition);
  const unsigned d = total(parts);
  std::map<Permutation, Integer> terms;
  for (auto& g : block_group(tableau_columns(tableau_rows(parts)), d)) terms[g] += sign(g);
  return GroupAlgebraElement(d, std::move(terms));
}

GroupAlgebraElement young_symmetrizer(const std::vector<unsigned>& partition, unsigned d) {
  if (total(partition) != d) throw Error("partition does not sum to d");
  return row_symmetrizer(partition) * column_antisymmetrizer(partition);
}

Integer young_quasi_idempotent_scalar(const std::vector<unsigned>& partition) {
  auto parts = nonzero_parts(partition);
  std::sort(parts.rbegin(), parts.rend());
  Integer product = 1;
  for (std::size_t r = 0; r < parts.size(); ++r) {
    for (unsigned c = 0; c < parts[r]; ++c) {
      unsigned below = 0;
      for (std::size_t s = r + 1; s < parts.size() && parts[s] > c; ++s) ++below;
      product *= parts[r] - c + below;
    }
  }
  return product;
}

SymmetrizedFunctional::SymmetrizedFunctional(Signature sig, unsigned depth, std::map<LabelTuple, Integer> terms,
                                             std::optional<Weight> source)
    : sig_(std::move(sig)), depth_(depth), terms_(std::move(terms)), source_(std::move(source)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
  for (const auto& [t, c] : terms_) {
    if (t.size() != depth_) throw Error("tuple length differs from functional depth");
  }
}

SymmetrizedFunctional SymmetrizedFunctional::unit(const Signature& sig) {
  return SymmetrizedFunctional(sig, 0, {{LabelTuple{}, Integer(1)}}, Weight::zero(sig));
}

std::map<LabelTuple, Integer> SymmetrizedFunctional::operator_form() const {
  std::map<LabelTuple, Integer> out;
  for (const auto& [t, c] : terms_) {
    LabelTuple sorted = t;
    std::sort(sorted.begin(), sorted.end());
    out[sorted] += c;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Integer SymmetrizedFunctional::column_group_order() const {
  if (!source_) throw Error("functional has no source weight");
  Integer order = 1;
  for (std::size_t t = 0; t < sig_.num_places(); ++t) {
    const auto plus = source_->plus_block(t);
    const long width = plus.empty() ? 0 : *std::max_element(plus.begin(), plus.end());
    for (long c = 0; c < width; ++c) {
      unsigned height = 0;
      for (long v : plus) {
        if (v > c) ++height;
      }
      order *= factorial_exact(height);
    }
  }
  return order;
}

std::map<LabelTuple, Integer> SymmetrizedFunctional::primitive_form() const {
  const Integer order = column_group_order();
  auto out = operator_form();
  for (auto& [t, c] : out) {
    if (!mpz_divisible_p(c.get_mpz_t(), order.get_mpz_t())) {
      throw InternalError("operator coefficient not divisible by the column group order");
    }
    c /= order;
  }
  return out;
}

bool SymmetrizedFunctional::coefficients_are_units() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return abs(kv.second) == 1; });
}

SymmetrizedFunctional lcan_expand(const Weight& kappa) {
  const SumSymmetry ss = is_sum_symmetric(kappa);
  if (!ss.sum_symmetric) throw Error("functional does not restrict to (L^2)^{(x)e}");
  const Signature& sig = kappa.sig();

  std::map<LabelTuple, Integer> acc{{LabelTuple{}, Integer(1)}};
  for (unsigned t = 0; t < sig.num_places(); ++t) {
    const unsigned a_plus = sig.place(t).plus;
    std::vector<unsigned> plus_shape, minus_shape, plus_word, minus_word;
    Integer factorials = 1;
    for (unsigned i = 0; i < sig.n(); ++i) {
      const auto k = static_cast<unsigned>(kappa.at(t, i));
      factorials *= factorial_exact(k);
      auto& shape = i < a_plus ? plus_shape : minus_shape;
      auto& word = i < a_plus ? plus_word : minus_word;
      shape.push_back(k);
      word.insert(word.end(), k, i + 1);
    }
    const auto plus_terms = young_symmetrizer(plus_shape, plus_word.size()).apply(plus_word);
    const auto minus_terms = young_symmetrizer(minus_shape, minus_word.size()).apply(minus_word);

    std::map<LabelTuple, Integer> place_terms;
    for (const auto& [u, cu] : plus_terms) {
      for (const auto& [v, cv] : minus_terms) {
        LabelTuple tuple;
        for (std::size_t k = 0; k < u.size(); ++k) tuple.push_back({0, t, u[k], v[k]});
        place_terms[tuple] += cu * cv;
      }
    }
    std::map<LabelTuple, Integer> next;
    for (const auto& [prefix, c] : acc) {
      for (const auto& [tuple, d] : place_terms) {
        if (!mpz_divisible_p(d.get_mpz_t(), factorials.get_mpz_t())) {
          throw InternalError("inexact factorial division in lcan_expand for " + kappa.to_string());
        }
        LabelTuple joined = prefix;
        joined.insert(joined.end(), tuple.begin(), tuple.end());
        next[joined] += c * (d / factorials);
      }
    }
    acc = std::move(next);
  }
  return SymmetrizedFunctional(sig, ss.depth, std::move(acc), kappa);
}

SymmetrizedFunctional functional_product(const SymmetrizedFunctional& f, const SymmetrizedFunctional& g) {
  if (!(f.sig() == g.sig())) throw Error("functionals over different signatures");
  std::map<LabelTuple, Integer> out;
  for (const auto& [a, ca] : f.terms()) {
    for (const auto& [b, cb] : g.terms()) {
      LabelTuple joined = a;
      joined.insert(joined.end(), b.begin(), b.end());
      out[joined] += ca * cb;
    }
  }
  std::optional<Weight> source;
  if (f.source() && g.source()) source = *f.source() * *g.source();
  return SymmetrizedFunctional(f.sig(), f.depth() + g.depth(), std::move(out), std::move(source));
}

bool same_operator(const SymmetrizedFunctional& f, const SymmetrizedFunctional& g) {
  return f.sig() == g.sig() && f.depth() == g.depth() && f.operator_form() == g.operator_form();
}

Integer apply_functional(const SymmetrizedFunctional& f, const std::vector<Integer>& alpha) {
  const VariableSet vars = VariableSet::for_signature(f.sig());
  if (alpha.size() != vars.size()) throw Error("exponent vector has wrong length");
  Integer sum = 0;
  for (const auto& [tuple, c] : f.terms()) {
    Integer term = c;
    for (const auto& l : tuple) term *= alpha[vars.require_index(l)];
    sum += term;
  }
  return sum;
}

}  // namespace padictheta
