#pragma once

// Shared inputs for the test suites: the two expert tables of the clinic
// example, the worked union/intersection listings, and values frozen from an
// independent high-precision computation (mpmath, 30 digits) of the
// constructive +_P fold.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "phisoft/aggregation.hpp"
#include "phisoft/pfn.hpp"
#include "phisoft/soft_set.hpp"

namespace fixtures {

using phisoft::CellInput;
using phisoft::ParameterInput;
using phisoft::Pfn;
using phisoft::PhiSoftSet;

struct Grid {
  std::vector<std::string> params;
  std::vector<std::pair<double, double>> importances;
  std::map<std::string, std::vector<std::pair<double, double>>> rows;  // alt -> cells in param order
};

inline const std::vector<std::string> universe{"p1", "p2", "p3", "p4"};

inline const Grid table1{
    {"s1", "s3", "s5", "s6"},
    {{0.5, 0.4}, {0.7, 0.2}, {0.3, 0.6}, {0.6, 0.3}},
    {{"p1", {{0.7, 0.7}, {0.6, 0.6}, {0.8, 0.6}, {0.4, 0.7}}},
     {"p2", {{0.5, 0.6}, {0.4, 0.5}, {0.8, 0.3}, {0.5, 0.6}}},
     {"p3", {{0.5, 0.4}, {0.9, 0.2}, {0.6, 0.4}, {0.6, 0.5}}},
     {"p4", {{0.7, 0.5}, {0.6, 0.2}, {0.5, 0.4}, {0.8, 0.4}}}},
};

inline const Grid table2{
    {"s2", "s3", "s5", "s6"},
    {{0.1, 0.6}, {0.7, 0.2}, {0.4, 0.5}, {0.6, 0.3}},
    {{"p1", {{0.6, 0.6}, {0.4, 0.2}, {0.6, 0.4}, {0.1, 0.5}}},
     {"p2", {{0.1, 0.7}, {0.3, 0.5}, {0.5, 0.1}, {0.2, 0.5}}},
     {"p3", {{0.3, 0.4}, {0.7, 0.4}, {0.2, 0.5}, {0.4, 0.2}}},
     {"p4", {{0.5, 0.4}, {0.5, 0.2}, {0.6, 0.4}, {0.5, 0.5}}}},
};

// Worked listing Z(s1..s6) of the extended union, as printed.
inline const Grid extended_union_listing{
    {"s1", "s2", "s3", "s5", "s6"},
    {{0.5, 0.4}, {0.1, 0.6}, {0.7, 0.2}, {0.4, 0.5}, {0.6, 0.3}},
    {{"p1", {{0.7, 0.7}, {0.6, 0.6}, {0.6, 0.2}, {0.8, 0.4}, {0.4, 0.5}}},
     {"p2", {{0.5, 0.6}, {0.1, 0.7}, {0.4, 0.5}, {0.8, 0.1}, {0.5, 0.5}}},
     {"p3", {{0.5, 0.4}, {0.3, 0.4}, {0.9, 0.2}, {0.6, 0.4}, {0.6, 0.2}}},
     {"p4", {{0.7, 0.5}, {0.5, 0.4}, {0.6, 0.2}, {0.6, 0.4}, {0.8, 0.5}}}},
};

// Worked listing T(s1..s6) of the extended intersection (also the printed
// extended-intersection table).
inline const Grid extended_intersection_listing{
    {"s1", "s2", "s3", "s5", "s6"},
    {{0.5, 0.4}, {0.1, 0.6}, {0.7, 0.2}, {0.3, 0.6}, {0.6, 0.3}},
    {{"p1", {{0.7, 0.7}, {0.6, 0.6}, {0.4, 0.6}, {0.6, 0.6}, {0.1, 0.7}}},
     {"p2", {{0.5, 0.6}, {0.1, 0.7}, {0.3, 0.5}, {0.5, 0.3}, {0.2, 0.6}}},
     {"p3", {{0.5, 0.4}, {0.3, 0.4}, {0.7, 0.4}, {0.2, 0.5}, {0.4, 0.5}}},
     {"p4", {{0.7, 0.5}, {0.5, 0.4}, {0.5, 0.2}, {0.5, 0.4}, {0.5, 0.5}}}},
};

struct Divergence {
  std::string alt;
  std::string param;
  std::pair<double, double> printed;   // as it appears in print
  std::pair<double, double> computed;  // cellwise join of the inputs
};

// Printed extended-union table cell (p3,s3) reads (0.9,0.4); the worked list
// and the join of (0.9,0.2) and (0.7,0.4) give (0.9,0.2).
inline const Divergence union_table_p3_s3{"p3", "s3", {0.9, 0.4}, {0.9, 0.2}};
// Worked list and printed table both read (0.8,0.5) at (p4,s6); the join of
// (0.8,0.4) and (0.5,0.5) is (0.8,0.4).
inline const Divergence union_listing_p4_s6{"p4", "s6", {0.8, 0.5}, {0.8, 0.4}};

inline PhiSoftSet to_set(const Grid& g, std::vector<std::string> ids = universe) {
  std::vector<ParameterInput> params;
  for (std::size_t j = 0; j < g.params.size(); ++j) {
    params.push_back({g.params[j], g.importances[j].first, g.importances[j].second});
  }
  std::vector<CellInput> cells;
  for (const auto& [alt, row] : g.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) cells.push_back({alt, g.params[j], row[j].first, row[j].second});
  }
  return PhiSoftSet::build(std::move(ids), params, cells);
}

inline PhiSoftSet set1() { return to_set(table1); }
inline PhiSoftSet set2() { return to_set(table2); }

// Weight vector printed for the combined importances.
inline const std::vector<double> printed_weights{0.21001927, 0.12524085, 0.27938343, 0.14065510, 0.24470135};
inline const std::vector<double> printed_expectation_scores{0.545, 0.325, 0.725, 0.365, 0.635};

// APFDVs of the extended intersection, frozen from the mpmath fold oracle.
inline const std::map<std::string, std::pair<double, double>> oracle_apfdv{
    {"p1", {0.51717576913414566, 0.64356636137047107}},
    {"p2", {0.35960934881121706, 0.52731774844204643}},
    {"p3", {0.51540422404543082, 0.43591808834736772}},
    {"p4", {0.55529482845926891, 0.36477425535730490}},
};
inline const std::map<std::string, double> oracle_es{
    {"p1", 0.42664655734593369},
    {"p2", 0.42562743796521911},
    {"p3", 0.53780846720772458},
    {"p4", 0.58764604457106630},
};

// Printed measures table rows (APFDV m, n, ES).
struct PrintedMeasures {
  double m, n, es, sf, af;
};
inline const std::map<std::string, PrintedMeasures> printed_measures{
    {"p1", {0.6314, 0.6434, 0.4923512, -0.0152976, 0.81262952}},
    {"p2", {0.3601, 0.5271, 0.4259188, -0.1481624, 0.40750642}},
    {"p3", {0.5156, 0.4358, 0.53796086, 0.07592172, 0.455765}},
    {"p4", {0.5554, 0.3642, 0.58791376, 0.17582752, 0.4411108}},
};

/// Constructive route to the PFWA: w1 v1 +_P w2 v2 +_P ..., with 0 v the
/// additive identity (0,1). Independent of the closed-form product.
inline Pfn fold_pfwa(const std::vector<Pfn>& values, const std::vector<double>& w) {
  Pfn acc = Pfn::unchecked(0.0, 1.0);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (w[i] > 0.0) acc = phisoft::add_p(acc, phisoft::scalar_mul(w[i], values[i]));
  }
  return acc;
}

/// ES-normalized weights computed straight from the formula.
inline std::vector<double> direct_weights(const std::vector<std::pair<double, double>>& importances) {
  std::vector<double> es;
  double total = 0.0;
  for (const auto& [m, n] : importances) {
    es.push_back((m * m - n * n + 1.0) / 2.0);
    total += es.back();
  }
  for (auto& e : es) e /= total;
  return es;
}

}  // namespace fixtures
