#include "phisoft/decision.hpp"

#include <algorithm>
#include <numeric>

namespace phisoft {

PhiSoftSet combine(const PhiSoftSet& a, const PhiSoftSet& b, CombineOp op) {
  switch (op) {
    case CombineOp::extended_intersection: return extended_intersection(a, b);
    case CombineOp::extended_union: return extended_union(a, b);
    case CombineOp::restricted_union: return restricted_union(a, b);
    case CombineOp::restricted_intersection: return restricted_intersection(a, b);
  }
  throw Error(ErrorKind::invalid_config, "unknown combination operator");
}

const AlternativeId& DecisionReport::optimal() const {
  if (ranking.empty()) throw Error(ErrorKind::unknown_alternative, "empty universe has no optimal alternative");
  return ranking.front();
}

const AlternativeMeasures& DecisionReport::at(std::string_view id) const {
  const auto it = std::find_if(measures.begin(), measures.end(), [&](const auto& r) { return r.id == id; });
  if (it == measures.end()) throw Error(ErrorKind::unknown_alternative, "'" + std::string(id) + "'");
  return *it;
}

DecisionReport decide_single(const PhiSoftSet& set, const DecisionConfig& cfg) {
  if (cfg.ranking_order == OrderKind::lattice) {
    throw Error(ErrorKind::invalid_config, "ranking needs a total order, not the lattice order");
  }
  DecisionReport report{cfg, set, weights_from_importances(set.parameters()), {}, {}};

  report.measures.reserve(set.universe().size());
  for (PhiSoftSet::Index i = 0; i < set.rows(); ++i) {
    const Pfn value = apfdv(set, i, report.weights, cfg.aggregator);
    report.measures.push_back({set.universe()[std::size_t(i)], value, expectation_score(value), score(value),
                               accuracy(value), 0});
  }

  std::vector<std::size_t> order(report.measures.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    const auto& a = report.measures[x];
    const auto& b = report.measures[y];
    switch (compare(a.apfdv, b.apfdv, cfg.ranking_order)) {
      case Ordering::greater: return true;
      case Ordering::less: return false;
      default: break;
    }
    if (a.apfdv.m() != b.apfdv.m()) return a.apfdv.m() > b.apfdv.m();
    return a.id < b.id;
  });

  report.ranking.reserve(order.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    report.measures[order[r]].rank = int(r) + 1;
    report.ranking.push_back(report.measures[order[r]].id);
  }
  return report;
}

DecisionReport decide(const PhiSoftSet& a, const PhiSoftSet& b, const DecisionConfig& cfg) {
  return decide_single(combine(a, b, cfg.combine), cfg);
}

}  // namespace phisoft
