#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "phisoft/decision.hpp"

using namespace phisoft;
using doctest::Approx;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::parse_error;
}

// Independent re-sort of a report's values, best first: selection of the
// maximum under `order`, ties to larger m then smaller id.
std::vector<AlternativeId> resort(const DecisionReport& r, OrderKind order) {
  std::vector<AlternativeMeasures> left = r.measures;
  std::vector<AlternativeId> out;
  while (!left.empty()) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < left.size(); ++i) {
      const auto c = compare(left[i].apfdv, left[best].apfdv, order);
      const bool better = c == Ordering::greater ||
                          (c == Ordering::equal && (left[i].apfdv.m() > left[best].apfdv.m() ||
                                                    (left[i].apfdv.m() == left[best].apfdv.m() && left[i].id < left[best].id)));
      if (better) best = i;
    }
    out.push_back(left[best].id);
    left.erase(left.begin() + std::ptrdiff_t(best));
  }
  return out;
}

}  // namespace

TEST_CASE("default decision on the clinic example") {
  const DecisionReport r = decide(fixtures::set1(), fixtures::set2());
  CHECK(r.ranking == std::vector<AlternativeId>{"p4", "p3", "p1", "p2"});
  CHECK(r.optimal() == "p4");
  CHECK(r.at("p4").rank == 1);
  CHECK(r.at("p2").rank == 4);
  CHECK(r.combined.cols() == 5);
  CHECK(r.weights[0] == Approx(0.21001927).epsilon(1e-7));
  for (const auto& [alt, es] : fixtures::oracle_es) {
    CAPTURE(alt);
    CHECK(r.at(alt).es == Approx(es).epsilon(1e-13));
  }
  for (const char* alt : {"p2", "p3", "p4"}) {
    CHECK(std::abs(r.at(alt).es - fixtures::printed_measures.at(alt).es) <= 5e-4);
  }
  CHECK(resort(r, OrderKind::es_then_membership) == r.ranking);
}

TEST_CASE("report measure columns are consistent") {
  for (auto op : {CombineOp::extended_intersection, CombineOp::extended_union, CombineOp::restricted_union,
                  CombineOp::restricted_intersection}) {
    for (auto agg : {Aggregator::geometric, Aggregator::linear}) {
      const DecisionReport r = decide(fixtures::set1(), fixtures::set2(), {op, agg, OrderKind::es_then_membership});
      std::vector<int> ranks;
      for (const auto& row : r.measures) {
        CHECK(row.es == Approx((row.sf + 1.0) / 2.0).epsilon(1e-15));
        CHECK(row.af >= std::abs(row.sf));
        ranks.push_back(row.rank);
      }
      std::sort(ranks.begin(), ranks.end());
      CHECK(ranks == std::vector<int>{1, 2, 3, 4});
    }
  }
}

TEST_CASE("ranking follows the configured order") {
  for (auto order : {OrderKind::es_then_membership, OrderKind::membership_then_es, OrderKind::score_accuracy}) {
    const DecisionReport r = decide(fixtures::set1(), fixtures::set2(), {CombineOp::extended_intersection,
                                                                         Aggregator::geometric, order});
    CHECK(resort(r, order) == r.ranking);
  }
  // Membership first puts p4 ahead, then p1 (0.5172) ahead of p3 (0.5154).
  const DecisionReport m = decide(fixtures::set1(), fixtures::set2(),
                                  {CombineOp::extended_intersection, Aggregator::geometric, OrderKind::membership_then_es});
  CHECK(m.ranking == std::vector<AlternativeId>{"p4", "p1", "p3", "p2"});
  CHECK(kind_of([] {
          (void)decide(fixtures::set1(), fixtures::set2(),
                       {CombineOp::extended_intersection, Aggregator::geometric, OrderKind::lattice});
        }) == ErrorKind::invalid_config);
}

TEST_CASE("decide_single on the combined table equals decide") {
  const PhiSoftSet t = fixtures::to_set(fixtures::extended_intersection_listing);
  const DecisionReport single = decide_single(t);
  const DecisionReport both = decide(fixtures::set1(), fixtures::set2());
  CHECK(single.ranking == both.ranking);
  for (const auto& row : both.measures) {
    CHECK(approx_equal(single.at(row.id).apfdv, row.apfdv, 1e-15));
    CHECK(single.at(row.id).rank == row.rank);
  }
}

TEST_CASE("combining a set with itself aggregates the set") {
  const PhiSoftSet x = fixtures::set2();
  const DecisionReport r = decide(x, x);
  const DecisionReport s = decide_single(x);
  CHECK(r.ranking == s.ranking);
  for (const auto& row : s.measures) CHECK(approx_equal(r.at(row.id).apfdv, row.apfdv, 1e-15));
}

TEST_CASE("single alternative") {
  const auto s = PhiSoftSet::build({"only"}, {{"s1", 0.5, 0.4}}, {{"only", "s1", 0.2, 0.3}});
  const DecisionReport r = decide_single(s);
  CHECK(r.ranking == std::vector<AlternativeId>{"only"});
  CHECK(r.at("only").rank == 1);
}

TEST_CASE("identical rows tie-break by id") {
  const auto s = PhiSoftSet::build({"b", "a", "c"}, {{"s1", 0.5, 0.4}},
                                   {{"a", "s1", 0.2, 0.3}, {"b", "s1", 0.2, 0.3}, {"c", "s1", 0.1, 0.3}});
  const DecisionReport r = decide_single(s);
  CHECK(r.ranking == std::vector<AlternativeId>{"a", "b", "c"});
}

TEST_CASE("equal ES ties go to the larger membership under ES-first") {
  // (0.5,0.5) and (0.3,0.3) both have ES 0.5; lexicographic ES-then-m already
  // orders them by m.
  const auto s = PhiSoftSet::build({"x", "y"}, {{"s1", 0.5, 0.4}}, {{"x", "s1", 0.3, 0.3}, {"y", "s1", 0.5, 0.5}});
  CHECK(decide_single(s).ranking == std::vector<AlternativeId>{"y", "x"});
}

TEST_CASE("universe order and argument order do not matter") {
  const DecisionReport base = decide(fixtures::set1(), fixtures::set2());
  const DecisionReport swapped = decide(fixtures::set2(), fixtures::set1());
  CHECK(swapped.ranking == base.ranking);
  for (const auto& row : base.measures) CHECK(swapped.at(row.id).apfdv == row.apfdv);
  CHECK(equals(swapped.combined, base.combined));

  const DecisionReport permuted = decide(fixtures::to_set(fixtures::table1, {"p3", "p4", "p2", "p1"}),
                                         fixtures::to_set(fixtures::table2, {"p2", "p1", "p4", "p3"}));
  CHECK(permuted.ranking == base.ranking);
  for (const auto& row : base.measures) CHECK(approx_equal(permuted.at(row.id).apfdv, row.apfdv, 1e-15));
}

TEST_CASE("decision errors propagate") {
  const auto other = PhiSoftSet::build({"q1"}, {{"s1", 0.5, 0.4}}, {{"q1", "s1", 0.1, 0.1}});
  CHECK(kind_of([&] { (void)decide(fixtures::set1(), other); }) == ErrorKind::universe_mismatch);
  const auto disjoint = PhiSoftSet::build(fixtures::universe, {{"s9", 0.5, 0.4}},
                                          {{"p1", "s9", 0.1, 0.1}, {"p2", "s9", 0.1, 0.1},
                                           {"p3", "s9", 0.1, 0.1}, {"p4", "s9", 0.1, 0.1}});
  CHECK(kind_of([&] {
          (void)decide(fixtures::set1(), disjoint, {CombineOp::restricted_union, Aggregator::geometric,
                                                    OrderKind::es_then_membership});
        }) == ErrorKind::empty_intersection);
  CHECK(kind_of([] { (void)decide_single(null_set({"a"}, {"s1"})); }) == ErrorKind::degenerate_weights);
}
