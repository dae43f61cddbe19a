#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "phisoft/pfn.hpp"

namespace phisoft {

using AlternativeId = std::string;

/// A named parameter with its Pythagorean fuzzy importance f(x) = (m_f, n_f).
struct Parameter {
  std::string name;
  Pfn importance;

  friend bool operator==(const Parameter&, const Parameter&) = default;
};

/// Unvalidated inputs for `PhiSoftSet::build`.
struct ParameterInput {
  std::string name;
  double m = 0.0;
  double n = 1.0;
};

struct CellInput {
  AlternativeId alternative;
  std::string parameter;
  double m = 0.0;
  double n = 1.0;
};

/// Pythagorean fuzzy parameterized soft set over a finite universe.
///
/// The table is dense: row i is `universe()[i]`, column j is `parameters()[j]`,
/// and the degrees live in two arrays of identical shape. Every cell is a
/// valid PFN, ids and parameter names are unique.
class PhiSoftSet {
 public:
  using Array = Eigen::ArrayXXd;
  using Index = Eigen::Index;

  PhiSoftSet() = default;

  /// Validating constructor. Throws DuplicateId, InvalidPFN, LengthMismatch.
  PhiSoftSet(std::vector<AlternativeId> universe, std::vector<Parameter> parameters,
             Array membership, Array nonmembership);

  /// Builds from loose cells. Throws DuplicateId, MissingCell, InvalidPFN,
  /// UnknownAlternative, UnknownParameter with the offending coordinates.
  [[nodiscard]] static PhiSoftSet build(std::vector<AlternativeId> universe,
                                        const std::vector<ParameterInput>& parameters,
                                        const std::vector<CellInput>& cells);

  [[nodiscard]] const std::vector<AlternativeId>& universe() const noexcept { return universe_; }
  [[nodiscard]] const std::vector<Parameter>& parameters() const noexcept { return parameters_; }
  [[nodiscard]] const Array& membership() const noexcept { return membership_; }
  [[nodiscard]] const Array& nonmembership() const noexcept { return nonmembership_; }

  [[nodiscard]] Index rows() const noexcept { return Index(universe_.size()); }
  [[nodiscard]] Index cols() const noexcept { return Index(parameters_.size()); }

  [[nodiscard]] std::optional<Index> alternative_index(std::string_view id) const noexcept;
  [[nodiscard]] std::optional<Index> parameter_index(std::string_view name) const noexcept;

  [[nodiscard]] Pfn cell(Index row, Index col) const noexcept {
    return Pfn::unchecked(membership_(row, col), nonmembership_(row, col));
  }
  /// Throws UnknownAlternative / UnknownParameter.
  [[nodiscard]] Pfn cell(std::string_view alternative, std::string_view parameter) const;

  /// The alternative's cells in parameter order.
  [[nodiscard]] std::vector<Pfn> row(Index row) const;

 private:
  std::vector<AlternativeId> universe_;
  std::vector<Parameter> parameters_;
  Array membership_;
  Array nonmembership_;
};

/// Def-of-subset test: same universe as a set, every parameter of `a` in `b`
/// with a lattice-smaller importance, and every cell of `a` lattice-below the
/// matching cell of `b`.
[[nodiscard]] bool is_subset(const PhiSoftSet& a, const PhiSoftSet& b);

/// Same universe and parameter set (order-insensitive), same importances and
/// cells within `comparison_tolerance`.
[[nodiscard]] bool equals(const PhiSoftSet& a, const PhiSoftSet& b);

// Combination operators. Result rows follow `a`'s universe order; result
// columns are sorted by natural name order so that every operator is
// commutative. Rows are matched by id. All throw UniverseMismatch when the
// universes differ as sets; the restricted ones throw EmptyIntersection.
[[nodiscard]] PhiSoftSet extended_union(const PhiSoftSet& a, const PhiSoftSet& b);
[[nodiscard]] PhiSoftSet extended_intersection(const PhiSoftSet& a, const PhiSoftSet& b);
[[nodiscard]] PhiSoftSet restricted_union(const PhiSoftSet& a, const PhiSoftSet& b);
[[nodiscard]] PhiSoftSet restricted_intersection(const PhiSoftSet& a, const PhiSoftSet& b);

/// (a,b)-constant set: every cell (a,b); importances (a,b) unless `importance` given.
/// Throws NotPythagorean / OutOfRange.
[[nodiscard]] PhiSoftSet constant_set(std::vector<AlternativeId> universe,
                                      const std::vector<std::string>& names, double a, double b,
                                      std::optional<Pfn> importance = std::nullopt);
/// Relative null set: cells and importances (0,1).
[[nodiscard]] PhiSoftSet null_set(std::vector<AlternativeId> universe,
                                  const std::vector<std::string>& names);
/// Relative whole set: cells and importances (1,0).
[[nodiscard]] PhiSoftSet whole_set(std::vector<AlternativeId> universe,
                                   const std::vector<std::string>& names);

/// Natural ("s2" < "s10") ordering of names, ties broken by plain comparison.
[[nodiscard]] bool natural_less(std::string_view a, std::string_view b) noexcept;

}  // namespace phisoft
