#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "phisoft/pfn.hpp"
#include "phisoft/soft_set.hpp"

namespace phisoft::laws {

/// Seeded random inputs shared by the law runner and the test suites.
class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  /// Mixes exact one-decimal grid points (so ties occur), the corners
  /// (0,0), (0,1), (1,0), and points uniform over the quarter disk.
  [[nodiscard]] Pfn pfn();
  /// Uniform over the quarter disk only.
  [[nodiscard]] Pfn continuous_pfn();
  [[nodiscard]] Pfn grid_pfn();
  /// A positive scalar in [0.05, 5], sometimes an integer or 0.5.
  [[nodiscard]] double scalar();
  /// Normalized weights of the given length; occasionally with zero entries.
  [[nodiscard]] std::vector<double> weights(std::size_t length);
  /// Universe p1..pk (k in [1,5]) in shuffled order, parameters a random
  /// nonempty subset of s1..s6, random cells and importances.
  [[nodiscard]] PhiSoftSet soft_set(std::size_t universe_size = 0);
  /// Random set over the same universe as `like`.
  [[nodiscard]] PhiSoftSet soft_set_like(const PhiSoftSet& like);

  [[nodiscard]] double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  [[nodiscard]] std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  [[nodiscard]] bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }
  std::mt19937_64& engine() noexcept { return rng_; }

 private:
  std::mt19937_64 rng_;
};

struct LawResult {
  std::string name;
  std::size_t cases = 0;
  std::optional<std::string> counterexample;

  [[nodiscard]] bool passed() const noexcept { return !counterexample.has_value(); }
};

struct Options {
  std::size_t cases = 10000;
  std::uint64_t seed = 20240101;
};

[[nodiscard]] std::vector<std::string> names();
/// Runs one suite. Each suite seeds its own generator from `seed` and its
/// name, so results do not depend on which other suites run.
[[nodiscard]] LawResult run(std::string_view name, const Options& options);
[[nodiscard]] std::vector<LawResult> run_all(const Options& options);

}  // namespace phisoft::laws
