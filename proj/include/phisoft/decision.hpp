#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "phisoft/aggregation.hpp"
#include "phisoft/pfn.hpp"
#include "phisoft/soft_set.hpp"

namespace phisoft {

enum class CombineOp { extended_intersection, extended_union, restricted_union, restricted_intersection };

[[nodiscard]] constexpr std::string_view to_string(CombineOp op) noexcept {
  switch (op) {
    case CombineOp::extended_intersection: return "eintersect";
    case CombineOp::extended_union: return "eunion";
    case CombineOp::restricted_union: return "runion";
    case CombineOp::restricted_intersection: return "rintersect";
  }
  return "?";
}

[[nodiscard]] PhiSoftSet combine(const PhiSoftSet& a, const PhiSoftSet& b, CombineOp op);

struct DecisionConfig {
  CombineOp combine = CombineOp::extended_intersection;
  Aggregator aggregator = Aggregator::geometric;
  /// One of the three total orders; `lattice` is rejected with InvalidConfig.
  OrderKind ranking_order = OrderKind::es_then_membership;
};

struct AlternativeMeasures {
  AlternativeId id;
  Pfn apfdv;
  double es = 0.0;
  double sf = 0.0;
  double af = 0.0;
  int rank = 0;  // 1 = optimal
};

struct DecisionReport {
  DecisionConfig config;
  PhiSoftSet combined;
  WeightVector weights;
  /// One entry per alternative, in the combined set's universe order.
  std::vector<AlternativeMeasures> measures;
  /// Alternative ids, best first.
  std::vector<AlternativeId> ranking;

  /// Throws UnknownAlternative on an empty universe.
  [[nodiscard]] const AlternativeId& optimal() const;
  [[nodiscard]] const AlternativeMeasures& at(std::string_view id) const;
};

/// Combine two expert sets, aggregate each alternative, rank descending.
/// Ties under the configured order go to the larger membership, then to the
/// lexicographically smaller id.
[[nodiscard]] DecisionReport decide(const PhiSoftSet& a, const PhiSoftSet& b, const DecisionConfig& cfg = {});

/// Aggregate and rank a single set, skipping the combination step.
[[nodiscard]] DecisionReport decide_single(const PhiSoftSet& set, const DecisionConfig& cfg = {});

}  // namespace phisoft
