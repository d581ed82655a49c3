#include "padictheta/variables.hpp"

namespace padictheta {

std::string VarLabel::to_string() const {
  std::string s = "l";
  if (block) s += "[" + std::to_string(block) + "]";
  s += "^" + std::to_string(place) + "_" + std::to_string(i) + "," + std::to_string(j);
  return s;
}

VariableSet::VariableSet(std::vector<VarLabel> labels) : labels_(std::move(labels)) {
  for (std::size_t k = 0; k < labels_.size(); ++k) {
    if (!index_.emplace(labels_[k], k).second) throw Error("duplicate variable " + labels_[k].to_string());
  }
}

VariableSet VariableSet::for_signature(const Signature& sig, unsigned block) {
  std::vector<VarLabel> labels;
  for (unsigned t = 0; t < sig.num_places(); ++t) {
    const auto& pl = sig.place(t);
    for (unsigned i = 1; i <= pl.plus; ++i) {
      for (unsigned j = pl.plus + 1; j <= pl.n(); ++j) labels.push_back({block, t, i, j});
    }
  }
  return VariableSet(std::move(labels));
}

VariableSet VariableSet::for_partition(const PartitionedSignature& part) {
  std::vector<VarLabel> labels;
  for (std::size_t k = 0; k < part.num_parts(); ++k) {
    auto local = for_signature(part.parts()[k], static_cast<unsigned>(k));
    labels.insert(labels.end(), local.labels().begin(), local.labels().end());
  }
  return VariableSet(std::move(labels));
}

std::optional<std::size_t> VariableSet::index_of(const VarLabel& l) const {
  auto it = index_.find(l);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t VariableSet::require_index(const VarLabel& l) const {
  auto idx = index_of(l);
  if (!idx) throw Error("unknown variable " + l.to_string());
  return *idx;
}

}  // namespace padictheta
