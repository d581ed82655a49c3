#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "padictheta/error.hpp"

namespace padictheta {

struct PlaceSignature {
  unsigned plus = 0;
  unsigned minus = 0;

  unsigned n() const { return plus + minus; }
  auto operator<=>(const PlaceSignature&) const = default;
};

// Per-place pairs (a+, a-) with a common n = a+ + a-.
class Signature {
 public:
  explicit Signature(std::vector<PlaceSignature> places);

  const std::vector<PlaceSignature>& places() const { return places_; }
  const PlaceSignature& place(std::size_t tau) const { return places_.at(tau); }
  std::size_t num_places() const { return places_.size(); }
  unsigned n() const { return places_.front().n(); }

  // False only for the excluded single-place signature (1,1).
  bool is_geometric() const;
  std::string to_string() const;

  bool operator==(const Signature&) const = default;

 private:
  std::vector<PlaceSignature> places_;
};

// Entries are indexed [tau][i] with i = 0..n-1, one below the usual 1-based index.
class Weight {
 public:
  Weight(Signature sig, std::vector<std::vector<long>> entries);
  static Weight zero(const Signature& sig);

  const Signature& sig() const { return sig_; }
  const std::vector<std::vector<long>>& entries() const { return entries_; }
  long at(std::size_t tau, std::size_t i) const { return entries_.at(tau).at(i); }
  std::vector<long> plus_block(std::size_t tau) const;
  std::vector<long> minus_block(std::size_t tau) const;

  bool is_zero() const;
  // The product of characters kappa * kappa', i.e. the entrywise sum.
  Weight operator*(const Weight& other) const;
  std::string to_string() const;

  bool operator==(const Weight& other) const { return sig_ == other.sig_ && entries_ == other.entries_; }
  bool operator<(const Weight& other) const { return entries_ < other.entries_; }

 private:
  Signature sig_;
  std::vector<std::vector<long>> entries_;
};

bool is_dominant(const Weight& kappa);
bool is_positive_dominant(const Weight& kappa);

struct SumSymmetry {
  bool sum_symmetric = false;
  unsigned depth = 0;
};

SumSymmetry is_sum_symmetric(const Weight& kappa);
bool is_symmetric(const Weight& kappa);

// The three hypotheses of the congruence theorem at level m for the prime p.
bool weight_congruent(const Weight& kappa, const Weight& kappa_prime, unsigned long p, unsigned m);

class PartitionedSignature {
 public:
  PartitionedSignature(Signature ambient, std::vector<Signature> parts);
  // The trivial partition with a single part.
  static PartitionedSignature whole(const Signature& sig);

  const Signature& ambient() const { return ambient_; }
  const std::vector<Signature>& parts() const { return parts_; }
  std::size_t num_parts() const { return parts_.size(); }

  // 0-based offsets of part k inside the + block and the - block of place tau.
  unsigned plus_offset(std::size_t k, std::size_t tau) const;
  unsigned minus_offset(std::size_t k, std::size_t tau) const;
  // Part containing the 1-based ambient index idx (either block) at place tau.
  std::size_t block_of(std::size_t tau, unsigned idx) const;
  // 1-based local index of the ambient index idx inside its part.
  unsigned local_index(std::size_t tau, unsigned idx) const;
  // 1-based ambient index of the local index idx of part k.
  unsigned ambient_index(std::size_t k, std::size_t tau, unsigned idx) const;

  std::string to_string() const;

 private:
  Signature ambient_;
  std::vector<Signature> parts_;
};

std::vector<Weight> restrict_components(const Weight& lambda, const PartitionedSignature& part);
Weight assemble_components(const PartitionedSignature& part, const std::vector<Weight>& components);

struct Purity {
  bool pure = false;
  // 1-based index of the nontrivial component; nullopt for lambda = 0 or non-pure.
  std::optional<std::size_t> index;
};

Purity is_pure(const Weight& lambda, const PartitionedSignature& part);

// A reordering of the partition blocks, with the induced relabeling of indices.
struct BlockPermutation {
  // order[k] is the old block placed at new position k.
  std::vector<std::size_t> order;
  // index_map[tau][a-1] is the old 1-based index sitting at new index a.
  std::vector<std::vector<unsigned>> index_map;

  bool is_identity() const;
  unsigned old_index(std::size_t tau, unsigned new_index) const { return index_map.at(tau).at(new_index - 1); }
};

BlockPermutation block_transposition(const PartitionedSignature& part, std::size_t i);
PartitionedSignature permute_partition(const PartitionedSignature& part, const BlockPermutation& sigma);

struct WeylConjugate {
  Weight dominant;
  BlockPermutation sigma;
  PartitionedSignature permuted;
};

// Throws Error for non-pure lambda.
WeylConjugate weyl_conjugate_to_dominant(const Weight& lambda, const PartitionedSignature& part);

// A p-adic character pinned modulo p^level (p-1) by an integer representative.
// twist[tau][i], when present, is a power j of the Teichmueller character.
struct PAdicCharacterApprox {
  Weight representative;
  unsigned level = 0;
  std::vector<std::vector<unsigned>> twist;
  bool symmetric = true;

  void validate() const;
  bool has_twist() const;
};

}  // namespace padictheta
