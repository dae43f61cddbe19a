#pragma once

#include <cmath>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "phisoft/pfn.hpp"
#include "phisoft/soft_set.hpp"

namespace phisoft {

/// Normalized weights over parameters: each in [0,1], summing to 1 within 1e-9.
template <class Scalar_>
class BasicWeightVector {
 public:
  using Scalar = Scalar_;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  BasicWeightVector() = default;

  /// Throws InvalidWeights if the vector is empty, has an entry outside
  /// [0,1], or does not sum to 1.
  explicit BasicWeightVector(Vector weights) : weights_(std::move(weights)) {
    if (weights_.size() == 0) throw Error(ErrorKind::invalid_weights, "empty weight vector");
    for (Eigen::Index i = 0; i < weights_.size(); ++i) {
      if (!(weights_[i] >= Scalar(0) && weights_[i] <= Scalar(1))) {
        throw Error(ErrorKind::invalid_weights, "weight " + std::to_string(i) + " outside [0,1]");
      }
    }
    if (std::abs(weights_.sum() - Scalar(1)) > Scalar(1e-9)) {
      throw Error(ErrorKind::invalid_weights, "weights sum to " + std::to_string(double(weights_.sum())));
    }
  }

  [[nodiscard]] const Vector& vector() const noexcept { return weights_; }
  [[nodiscard]] Eigen::Index size() const noexcept { return weights_.size(); }
  [[nodiscard]] Scalar operator[](Eigen::Index i) const noexcept { return weights_[i]; }

 private:
  Vector weights_;
};

using WeightVector = BasicWeightVector<double>;

/// w_l = ES(importance_l) / sum_j ES(importance_j). Throws DegenerateWeights
/// when every expectation score is zero (or there are no parameters).
template <class Scalar>
[[nodiscard]] BasicWeightVector<Scalar> weights_from_importances(std::span<const BasicPfn<Scalar>> importances) {
  using Vector = typename BasicWeightVector<Scalar>::Vector;
  Vector es(Eigen::Index(importances.size()));
  for (std::size_t i = 0; i < importances.size(); ++i) es[Eigen::Index(i)] = expectation_score(importances[i]);
  const Scalar total = es.sum();
  if (!(total > Scalar(0))) {
    throw Error(ErrorKind::degenerate_weights, "no parameter has a positive expectation score");
  }
  Vector w = es / total;
  // Guard [0,1] against the last ulp.
  w = w.cwiseMax(Scalar(0)).cwiseMin(Scalar(1));
  return BasicWeightVector<Scalar>(std::move(w));
}

[[nodiscard]] WeightVector weights_from_importances(const std::vector<Parameter>& parameters);

// ---------------------------------------------------------------------------
// PFWA operators over a row of degrees. The Eigen overloads accept any dense
// expression (e.g. a row block of a PhiSoftSet's arrays).

/// Componentwise weighted arithmetic mean: (sum w_i m_i, sum w_i n_i).
template <class DerivedM, class DerivedN, class DerivedW>
[[nodiscard]] auto pfwa_linear(const Eigen::DenseBase<DerivedM>& m, const Eigen::DenseBase<DerivedN>& n,
                               const Eigen::DenseBase<DerivedW>& w) {
  using Scalar = typename DerivedW::Scalar;
  if (m.size() != w.size() || n.size() != w.size()) {
    throw Error(ErrorKind::length_mismatch, "values and weights differ in length");
  }
  const Scalar om = (m.derived().reshaped().array() * w.derived().reshaped().array()).sum();
  const Scalar on = (n.derived().reshaped().array() * w.derived().reshaped().array()).sum();
  return BasicPfn<Scalar>::unchecked(std::clamp(om, Scalar(0), Scalar(1)), std::clamp(on, Scalar(0), Scalar(1)));
}

/// (sqrt(1 - prod (1 - m_i^2)^w_i), prod n_i^w_i). Zero weights contribute
/// nothing; 0^w = 0 for w > 0, so m_i = 1 forces m = 1 and n_i = 0 forces n = 0.
template <class DerivedM, class DerivedN, class DerivedW>
[[nodiscard]] auto pfwa_geometric(const Eigen::DenseBase<DerivedM>& m, const Eigen::DenseBase<DerivedN>& n,
                                  const Eigen::DenseBase<DerivedW>& w) {
  using Scalar = typename DerivedW::Scalar;
  if (m.size() != w.size() || n.size() != w.size()) {
    throw Error(ErrorKind::length_mismatch, "values and weights differ in length");
  }
  const auto mv = m.derived().reshaped();
  const auto nv = n.derived().reshaped();
  const auto wv = w.derived().reshaped();
  Scalar log_sum(0);
  Scalar product(1);
  for (Eigen::Index i = 0; i < wv.size(); ++i) {
    const Scalar wi = wv(i);
    if (wi == Scalar(0)) continue;
    log_sum += wi * detail::log1m_sq(Scalar(mv(i)));
    product *= std::pow(Scalar(nv(i)), wi);
  }
  return BasicPfn<Scalar>::unchecked(detail::conorm_root(log_sum), std::clamp(product, Scalar(0), Scalar(1)));
}

template <class Scalar>
[[nodiscard]] BasicPfn<Scalar> pfwa_linear(std::span<const BasicPfn<Scalar>> values,
                                           const BasicWeightVector<Scalar>& w) {
  if (Eigen::Index(values.size()) != w.size()) {
    throw Error(ErrorKind::length_mismatch, std::to_string(values.size()) + " values, " +
                                                std::to_string(w.size()) + " weights");
  }
  typename BasicWeightVector<Scalar>::Vector m(w.size()), n(w.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    m[Eigen::Index(i)] = values[i].m();
    n[Eigen::Index(i)] = values[i].n();
  }
  return pfwa_linear(m, n, w.vector());
}

template <class Scalar>
[[nodiscard]] BasicPfn<Scalar> pfwa_geometric(std::span<const BasicPfn<Scalar>> values,
                                              const BasicWeightVector<Scalar>& w) {
  if (Eigen::Index(values.size()) != w.size()) {
    throw Error(ErrorKind::length_mismatch, std::to_string(values.size()) + " values, " +
                                                std::to_string(w.size()) + " weights");
  }
  typename BasicWeightVector<Scalar>::Vector m(w.size()), n(w.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    m[Eigen::Index(i)] = values[i].m();
    n[Eigen::Index(i)] = values[i].n();
  }
  return pfwa_geometric(m, n, w.vector());
}

enum class Aggregator { geometric, linear };

[[nodiscard]] constexpr std::string_view to_string(Aggregator a) noexcept {
  return a == Aggregator::geometric ? "geometric" : "linear";
}

/// Aggregated decision value of one alternative: the PFWA of its row with
/// weights derived from the set's parameter importances.
/// Throws UnknownAlternative, DegenerateWeights.
[[nodiscard]] Pfn apfdv(const PhiSoftSet& set, std::string_view alternative,
                        Aggregator aggregator = Aggregator::geometric);

/// Same, with precomputed weights (must match the set's column count).
[[nodiscard]] Pfn apfdv(const PhiSoftSet& set, PhiSoftSet::Index row, const WeightVector& weights,
                        Aggregator aggregator = Aggregator::geometric);

}  // namespace phisoft
