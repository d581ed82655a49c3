#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "padictheta/weight.hpp"

namespace padictheta {

// The Serre-Tate variable l^tau_{i,j}, 1 <= i <= a+ < j <= n, both indices
// 1-based. block distinguishes the parts of a partitioned signature and is 0
// for ambient variables.
struct VarLabel {
  unsigned block = 0;
  unsigned place = 0;
  unsigned i = 0;
  unsigned j = 0;

  auto operator<=>(const VarLabel&) const = default;
  std::string to_string() const;
};

// Ordered variable list (block, place, i, j) used to flatten exponent vectors.
class VariableSet {
 public:
  explicit VariableSet(std::vector<VarLabel> labels);
  static VariableSet for_signature(const Signature& sig, unsigned block = 0);
  static VariableSet for_partition(const PartitionedSignature& part);

  const std::vector<VarLabel>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }
  const VarLabel& at(std::size_t k) const { return labels_.at(k); }
  std::optional<std::size_t> index_of(const VarLabel& l) const;
  std::size_t require_index(const VarLabel& l) const;

  bool operator==(const VariableSet& o) const { return labels_ == o.labels_; }

 private:
  std::vector<VarLabel> labels_;
  std::map<VarLabel, std::size_t> index_;
};

using VarsPtr = std::shared_ptr<const VariableSet>;

}  // namespace padictheta
