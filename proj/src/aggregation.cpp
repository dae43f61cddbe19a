#include "phisoft/aggregation.hpp"

namespace phisoft {

WeightVector weights_from_importances(const std::vector<Parameter>& parameters) {
  std::vector<Pfn> importances;
  importances.reserve(parameters.size());
  for (const auto& p : parameters) importances.push_back(p.importance);
  return weights_from_importances(std::span<const Pfn>(importances));
}

Pfn apfdv(const PhiSoftSet& set, PhiSoftSet::Index row, const WeightVector& weights, Aggregator aggregator) {
  if (weights.size() != set.cols()) {
    throw Error(ErrorKind::length_mismatch, std::to_string(set.cols()) + " parameters, " +
                                                std::to_string(weights.size()) + " weights");
  }
  const auto m = set.membership().row(row);
  const auto n = set.nonmembership().row(row);
  return aggregator == Aggregator::geometric ? pfwa_geometric(m, n, weights.vector())
                                             : pfwa_linear(m, n, weights.vector());
}

Pfn apfdv(const PhiSoftSet& set, std::string_view alternative, Aggregator aggregator) {
  const auto row = set.alternative_index(alternative);
  if (!row) throw Error(ErrorKind::unknown_alternative, "'" + std::string(alternative) + "'");
  return apfdv(set, *row, weights_from_importances(set.parameters()), aggregator);
}

}  // namespace phisoft
