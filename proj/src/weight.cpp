#include "padictheta/weight.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace padictheta {

Signature::Signature(std::vector<PlaceSignature> places) : places_(std::move(places)) {
  if (places_.empty()) throw Error("signature needs at least one place");
  const unsigned n = places_.front().n();
  if (n == 0) throw Error("signature has n = 0");
  for (const auto& pl : places_) {
    if (pl.n() != n) throw Error("a+ + a- must agree across places");
  }
}

bool Signature::is_geometric() const {
  return !(places_.size() == 1 && places_[0].plus == 1 && places_[0].minus == 1);
}

std::string Signature::to_string() const {
  std::ostringstream os;
  for (std::size_t t = 0; t < places_.size(); ++t) {
    if (t) os << ';';
    os << places_[t].plus << ',' << places_[t].minus;
  }
  return os.str();
}

Weight::Weight(Signature sig, std::vector<std::vector<long>> entries)
    : sig_(std::move(sig)), entries_(std::move(entries)) {
  if (entries_.size() != sig_.num_places()) throw Error("weight has wrong number of places");
  for (const auto& row : entries_) {
    if (row.size() != sig_.n()) throw Error("weight place vector must have length n");
  }
}

Weight Weight::zero(const Signature& sig) {
  return Weight(sig, std::vector<std::vector<long>>(sig.num_places(), std::vector<long>(sig.n(), 0)));
}

std::vector<long> Weight::plus_block(std::size_t tau) const {
  const auto& row = entries_.at(tau);
  return {row.begin(), row.begin() + sig_.place(tau).plus};
}

std::vector<long> Weight::minus_block(std::size_t tau) const {
  const auto& row = entries_.at(tau);
  return {row.begin() + sig_.place(tau).plus, row.end()};
}

bool Weight::is_zero() const {
  for (const auto& row : entries_) {
    for (long v : row) {
      if (v != 0) return false;
    }
  }
  return true;
}

Weight Weight::operator*(const Weight& other) const {
  if (!(sig_ == other.sig_)) throw Error("weights over different signatures");
  auto out = entries_;
  for (std::size_t t = 0; t < out.size(); ++t) {
    for (std::size_t i = 0; i < out[t].size(); ++i) out[t][i] += other.entries_[t][i];
  }
  return Weight(sig_, std::move(out));
}

std::string Weight::to_string() const {
  std::ostringstream os;
  for (std::size_t t = 0; t < entries_.size(); ++t) {
    if (t) os << ';';
    for (std::size_t i = 0; i < entries_[t].size(); ++i) {
      if (i) os << ',';
      os << entries_[t][i];
    }
  }
  return os.str();
}

bool is_dominant(const Weight& kappa) {
  for (std::size_t t = 0; t < kappa.sig().num_places(); ++t) {
    const unsigned a_plus = kappa.sig().place(t).plus;
    const auto& row = kappa.entries()[t];
    for (std::size_t i = 0; i + 1 < row.size(); ++i) {
      if (i + 1 == a_plus) continue;
      if (row[i] < row[i + 1]) return false;
    }
  }
  return true;
}

bool is_positive_dominant(const Weight& kappa) {
  for (const auto& row : kappa.entries()) {
    for (long v : row) {
      if (v < 0) return false;
    }
  }
  return is_dominant(kappa);
}

SumSymmetry is_sum_symmetric(const Weight& kappa) {
  if (!is_positive_dominant(kappa)) return {};
  long total = 0;
  for (std::size_t t = 0; t < kappa.sig().num_places(); ++t) {
    auto plus = kappa.plus_block(t);
    auto minus = kappa.minus_block(t);
    const long d_plus = std::accumulate(plus.begin(), plus.end(), 0L);
    const long d_minus = std::accumulate(minus.begin(), minus.end(), 0L);
    if (d_plus != d_minus) return {};
    total += d_plus;
  }
  return {true, static_cast<unsigned>(total)};
}

bool is_symmetric(const Weight& kappa) {
  if (!is_sum_symmetric(kappa).sum_symmetric) return false;
  for (std::size_t t = 0; t < kappa.sig().num_places(); ++t) {
    const auto& pl = kappa.sig().place(t);
    const unsigned common = std::min(pl.plus, pl.minus);
    for (unsigned i = 0; i < common; ++i) {
      if (kappa.at(t, i) != kappa.at(t, pl.plus + i)) return false;
    }
  }
  return true;
}

bool weight_congruent(const Weight& kappa, const Weight& kp, unsigned long p, unsigned m) {
  if (!(kappa.sig() == kp.sig())) return false;
  long modulus = static_cast<long>(p - 1);
  for (unsigned k = 0; k < m; ++k) modulus *= static_cast<long>(p);
  const long bound = static_cast<long>(m);
  for (std::size_t t = 0; t < kappa.sig().num_places(); ++t) {
    const unsigned a_plus = kappa.sig().place(t).plus;
    for (std::size_t i = 0; i < kappa.sig().n(); ++i) {
      if ((kappa.at(t, i) - kp.at(t, i)) % modulus != 0) return false;
    }
    for (std::size_t i = 0; i + 1 < a_plus; ++i) {
      const long g = kappa.at(t, i) - kappa.at(t, i + 1);
      const long gp = kp.at(t, i) - kp.at(t, i + 1);
      if (g != gp && std::min(g, gp) <= bound) return false;
    }
    if (a_plus >= 1) {
      const long v = kappa.at(t, a_plus - 1);
      const long vp = kp.at(t, a_plus - 1);
      if (v != vp && std::min(v, vp) <= bound) return false;
    }
  }
  return true;
}

PartitionedSignature::PartitionedSignature(Signature ambient, std::vector<Signature> parts)
    : ambient_(std::move(ambient)), parts_(std::move(parts)) {
  if (parts_.empty()) throw Error("partition needs at least one part");
  for (std::size_t t = 0; t < ambient_.num_places(); ++t) {
    unsigned plus = 0, minus = 0;
    for (const auto& s : parts_) {
      if (s.num_places() != ambient_.num_places()) throw Error("partition parts have wrong number of places");
      plus += s.place(t).plus;
      minus += s.place(t).minus;
    }
    if (plus != ambient_.place(t).plus || minus != ambient_.place(t).minus) {
      throw Error("partition parts do not sum to the ambient signature");
    }
  }
}

PartitionedSignature PartitionedSignature::whole(const Signature& sig) { return PartitionedSignature(sig, {sig}); }

unsigned PartitionedSignature::plus_offset(std::size_t k, std::size_t tau) const {
  unsigned off = 0;
  for (std::size_t q = 0; q < k; ++q) off += parts_.at(q).place(tau).plus;
  return off;
}

unsigned PartitionedSignature::minus_offset(std::size_t k, std::size_t tau) const {
  unsigned off = 0;
  for (std::size_t q = 0; q < k; ++q) off += parts_.at(q).place(tau).minus;
  return off;
}

std::size_t PartitionedSignature::block_of(std::size_t tau, unsigned idx) const {
  const unsigned a_plus = ambient_.place(tau).plus;
  if (idx == 0 || idx > ambient_.n()) throw Error("index out of range");
  const bool plus = idx <= a_plus;
  const unsigned pos = plus ? idx - 1 : idx - a_plus - 1;
  unsigned off = 0;
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    const unsigned width = plus ? parts_[k].place(tau).plus : parts_[k].place(tau).minus;
    if (pos < off + width) return k;
    off += width;
  }
  throw InternalError("index not covered by partition");
}

unsigned PartitionedSignature::local_index(std::size_t tau, unsigned idx) const {
  const std::size_t k = block_of(tau, idx);
  const unsigned a_plus = ambient_.place(tau).plus;
  if (idx <= a_plus) return idx - plus_offset(k, tau);
  return parts_[k].place(tau).plus + (idx - a_plus - minus_offset(k, tau));
}

unsigned PartitionedSignature::ambient_index(std::size_t k, std::size_t tau, unsigned idx) const {
  const auto& pl = parts_.at(k).place(tau);
  if (idx == 0 || idx > pl.n()) throw Error("local index out of range");
  if (idx <= pl.plus) return plus_offset(k, tau) + idx;
  return ambient_.place(tau).plus + minus_offset(k, tau) + (idx - pl.plus);
}

std::string PartitionedSignature::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) out += '/';
    out += parts_[k].to_string();
  }
  return out;
}

std::vector<Weight> restrict_components(const Weight& lambda, const PartitionedSignature& part) {
  if (!(lambda.sig() == part.ambient())) throw Error("weight and partition have different signatures");
  std::vector<Weight> out;
  for (std::size_t k = 0; k < part.num_parts(); ++k) {
    const Signature& s = part.parts()[k];
    std::vector<std::vector<long>> entries(s.num_places());
    for (std::size_t t = 0; t < s.num_places(); ++t) {
      for (unsigned idx = 1; idx <= s.n(); ++idx) {
        entries[t].push_back(lambda.at(t, part.ambient_index(k, t, idx) - 1));
      }
    }
    out.emplace_back(s, std::move(entries));
  }
  return out;
}

Weight assemble_components(const PartitionedSignature& part, const std::vector<Weight>& components) {
  if (components.size() != part.num_parts()) throw Error("wrong number of components");
  Weight out = Weight::zero(part.ambient());
  auto entries = out.entries();
  for (std::size_t k = 0; k < part.num_parts(); ++k) {
    if (!(components[k].sig() == part.parts()[k])) throw Error("component signature mismatch");
    for (std::size_t t = 0; t < part.ambient().num_places(); ++t) {
      for (unsigned idx = 1; idx <= part.parts()[k].n(); ++idx) {
        entries[t][part.ambient_index(k, t, idx) - 1] = components[k].at(t, idx - 1);
      }
    }
  }
  return Weight(part.ambient(), std::move(entries));
}

Purity is_pure(const Weight& lambda, const PartitionedSignature& part) {
  const auto comps = restrict_components(lambda, part);
  std::optional<std::size_t> found;
  for (std::size_t k = 0; k < comps.size(); ++k) {
    if (comps[k].is_zero()) continue;
    if (found) return {};
    found = k;
  }
  if (!found) return {true, std::nullopt};
  if (!is_sum_symmetric(comps[*found]).sum_symmetric) return {};
  return {true, *found + 1};
}

bool BlockPermutation::is_identity() const {
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (order[k] != k) return false;
  }
  return true;
}

PartitionedSignature permute_partition(const PartitionedSignature& part, const BlockPermutation& sigma) {
  std::vector<Signature> parts;
  for (std::size_t b : sigma.order) parts.push_back(part.parts().at(b));
  return PartitionedSignature(part.ambient(), std::move(parts));
}

BlockPermutation block_transposition(const PartitionedSignature& part, std::size_t i) {
  if (i == 0 || i > part.num_parts()) throw Error("block index out of range");
  BlockPermutation sigma;
  sigma.order.resize(part.num_parts());
  std::iota(sigma.order.begin(), sigma.order.end(), 0);
  std::swap(sigma.order[0], sigma.order[i - 1]);
  const PartitionedSignature permuted = permute_partition(part, sigma);
  const Signature& amb = part.ambient();
  sigma.index_map.assign(amb.num_places(), std::vector<unsigned>(amb.n(), 0));
  for (std::size_t k = 0; k < permuted.num_parts(); ++k) {
    const std::size_t old_block = sigma.order[k];
    for (std::size_t t = 0; t < amb.num_places(); ++t) {
      for (unsigned idx = 1; idx <= permuted.parts()[k].n(); ++idx) {
        sigma.index_map[t][permuted.ambient_index(k, t, idx) - 1] = part.ambient_index(old_block, t, idx);
      }
    }
  }
  return sigma;
}

WeylConjugate weyl_conjugate_to_dominant(const Weight& lambda, const PartitionedSignature& part) {
  const Purity purity = is_pure(lambda, part);
  if (!purity.pure) throw Error("weight is not pure for the partition");
  if (!purity.index || is_dominant(lambda)) {
    return {lambda, block_transposition(part, 1), part};
  }
  BlockPermutation sigma = block_transposition(part, *purity.index);
  PartitionedSignature permuted = permute_partition(part, sigma);
  const auto comps = restrict_components(lambda, part);
  std::vector<Weight> moved;
  for (std::size_t b : sigma.order) moved.push_back(comps[b]);
  Weight dominant = assemble_components(permuted, moved);
  if (!is_dominant(dominant)) throw Error("block transposition does not make the weight dominant");
  return {std::move(dominant), std::move(sigma), std::move(permuted)};
}

bool PAdicCharacterApprox::has_twist() const {
  for (const auto& row : twist) {
    for (unsigned j : row) {
      if (j != 0) return true;
    }
  }
  return false;
}

void PAdicCharacterApprox::validate() const {
  if (symmetric && !is_symmetric(representative)) {
    throw Error("character declared symmetric but representative is not symmetric");
  }
  if (!twist.empty()) {
    if (twist.size() != representative.sig().num_places()) throw Error("twist has wrong number of places");
    for (const auto& row : twist) {
      if (row.size() != representative.sig().n()) throw Error("twist place vector must have length n");
    }
  }
}

}  // namespace padictheta
