#pragma once

#include <map>
#include <optional>
#include <vector>

#include "padictheta/padic.hpp"
#include "padictheta/variables.hpp"
#include "padictheta/weight.hpp"

namespace padictheta {

// A permutation of {0..d-1} stored by images.
using Permutation = std::vector<unsigned>;

Permutation identity_permutation(unsigned d);
// (g o h)(k) = g(h(k)).
Permutation compose(const Permutation& g, const Permutation& h);
int sign(const Permutation& g);

// Words are acted on from the right by place permutation:
// (w . g)_k = w_{g(k)}, so (w . g) . h = w . (g o h).
template <typename T>
std::vector<T> act(const std::vector<T>& word, const Permutation& g) {
  std::vector<T> out(word.size());
  for (std::size_t k = 0; k < word.size(); ++k) out[k] = word[g[k]];
  return out;
}

class GroupAlgebraElement {
 public:
  GroupAlgebraElement() = default;
  explicit GroupAlgebraElement(unsigned d) : d_(d) {}
  GroupAlgebraElement(unsigned d, std::map<Permutation, Integer> terms);

  unsigned degree() const { return d_; }
  const std::map<Permutation, Integer>& terms() const { return terms_; }
  Integer coefficient(const Permutation& g) const;

  // Product g.h := g o h, compatible with the right action on words.
  GroupAlgebraElement operator*(const GroupAlgebraElement& o) const;
  GroupAlgebraElement operator*(const Integer& s) const;
  bool operator==(const GroupAlgebraElement& o) const { return d_ == o.d_ && terms_ == o.terms_; }

  // sum_g c_g (word . g), as a map from words to coefficients.
  template <typename T>
  std::map<std::vector<T>, Integer> apply(const std::vector<T>& word) const {
    std::map<std::vector<T>, Integer> out;
    for (const auto& [g, c] : terms_) out[act(word, g)] += c;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
  }

 private:
  unsigned d_ = 0;
  std::map<Permutation, Integer> terms_;
};

// Row and column groups of the row-major tableau of shape `partition`.
GroupAlgebraElement row_symmetrizer(const std::vector<unsigned>& partition);
GroupAlgebraElement column_antisymmetrizer(const std::vector<unsigned>& partition);

// c = (sum over rows p) . (sum over columns sgn(q) q): on words the row sum acts
// first. Zero parts are ignored. Throws Error if the parts do not sum to d.
GroupAlgebraElement young_symmetrizer(const std::vector<unsigned>& partition, unsigned d);

// d! / (number of standard tableaux), the scalar with c.c = scalar.c.
Integer young_quasi_idempotent_scalar(const std::vector<unsigned>& partition);

using LabelTuple = std::vector<VarLabel>;

// sum_{tuples} a_tuple . (l_1, ..., l_e). Tuples are kept in the order the
// symmetrizer produced them; operator_form() forgets the order.
class SymmetrizedFunctional {
 public:
  SymmetrizedFunctional(Signature sig, unsigned depth, std::map<LabelTuple, Integer> terms,
                        std::optional<Weight> source = std::nullopt);
  // The depth-0 functional with coefficient 1.
  static SymmetrizedFunctional unit(const Signature& sig);

  const Signature& sig() const { return sig_; }
  unsigned depth() const { return depth_; }
  const std::map<LabelTuple, Integer>& terms() const { return terms_; }
  const std::optional<Weight>& source() const { return source_; }

  // Tuples sorted and merged: the expansion of the theta operator in words.
  std::map<LabelTuple, Integer> operator_form() const;
  // operator_form divided exactly by the order of the column group of the
  // source weight's + blocks.
  std::map<LabelTuple, Integer> primitive_form() const;
  Integer column_group_order() const;

  bool coefficients_are_units() const;

 private:
  Signature sig_;
  unsigned depth_;
  std::map<LabelTuple, Integer> terms_;
  std::optional<Weight> source_;
};

// Throws Error("functional does not restrict to (L^2)^{(x)e}") unless kappa is
// sum-symmetric; throws InternalError when the factorial division is inexact.
SymmetrizedFunctional lcan_expand(const Weight& kappa);

// Concatenation of tuples with multiplied coefficients.
SymmetrizedFunctional functional_product(const SymmetrizedFunctional& f, const SymmetrizedFunctional& g);

// Equality as operators, i.e. of operator forms.
bool same_operator(const SymmetrizedFunctional& f, const SymmetrizedFunctional& g);

// sum a_tuple prod alpha(l); alpha is aligned with VariableSet::for_signature(F.sig()).
Integer apply_functional(const SymmetrizedFunctional& f, const std::vector<Integer>& alpha);

}  // namespace padictheta
