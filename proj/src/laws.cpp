#include "phisoft/laws.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <numeric>

#include "phisoft/aggregation.hpp"

namespace phisoft::laws {

// ---------------------------------------------------------------------------
// Generator

Pfn Generator::continuous_pfn() {
  const double r = std::sqrt(uniform(0.0, 1.0));
  const double theta = uniform(0.0, 1.5707963267948966);
  return Pfn::unchecked(std::clamp(r * std::cos(theta), 0.0, 1.0), std::clamp(r * std::sin(theta), 0.0, 1.0));
}

Pfn Generator::grid_pfn() {
  while (true) {
    const int i = int(index(11));
    const int j = int(index(11));
    if (i * i + j * j <= 100) return Pfn::unchecked(i / 10.0, j / 10.0);
  }
}

Pfn Generator::pfn() {
  const double u = uniform(0.0, 1.0);
  if (u < 0.25) return grid_pfn();
  if (u < 0.30) {
    static constexpr Pfn corners[] = {Pfn::unchecked(0, 0), Pfn::unchecked(0, 1), Pfn::unchecked(1, 0)};
    return corners[index(3)];
  }
  return continuous_pfn();
}

double Generator::scalar() {
  if (chance(0.1)) {
    static constexpr double picks[] = {0.5, 1.0, 2.0, 3.0};
    return picks[index(4)];
  }
  return uniform(0.05, 5.0);
}

std::vector<double> Generator::weights(std::size_t length) {
  std::vector<double> w(length);
  for (auto& x : w) x = chance(0.1) ? 0.0 : uniform(0.01, 1.0);
  if (std::all_of(w.begin(), w.end(), [](double x) { return x == 0.0; })) w[index(length)] = 1.0;
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  for (auto& x : w) x /= total;
  return w;
}

PhiSoftSet Generator::soft_set(std::size_t universe_size) {
  const std::size_t k = universe_size ? universe_size : 1 + index(5);
  std::vector<AlternativeId> universe;
  for (std::size_t i = 1; i <= k; ++i) universe.push_back("p" + std::to_string(i));
  std::shuffle(universe.begin(), universe.end(), rng_);
  PhiSoftSet like(universe, {}, PhiSoftSet::Array(Eigen::Index(k), 0), PhiSoftSet::Array(Eigen::Index(k), 0));
  return soft_set_like(like);
}

PhiSoftSet Generator::soft_set_like(const PhiSoftSet& like) {
  std::vector<AlternativeId> universe = like.universe();
  std::shuffle(universe.begin(), universe.end(), rng_);
  std::vector<Parameter> params;
  for (int s = 1; s <= 6; ++s) {
    if (chance(0.6)) params.push_back({"s" + std::to_string(s), pfn()});
  }
  if (params.empty()) params.push_back({"s" + std::to_string(1 + index(6)), pfn()});
  std::shuffle(params.begin(), params.end(), rng_);
  const auto rows = Eigen::Index(universe.size());
  const auto cols = Eigen::Index(params.size());
  PhiSoftSet::Array m(rows, cols);
  PhiSoftSet::Array n(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      const Pfn v = pfn();
      m(i, j) = v.m();
      n(i, j) = v.n();
    }
  }
  return PhiSoftSet(std::move(universe), std::move(params), std::move(m), std::move(n));
}

// ---------------------------------------------------------------------------
// Suites

namespace {

constexpr double eps = comparison_tolerance;

std::string show(const Pfn& x) {
  char buf[80];
  std::snprintf(buf, sizeof buf, "(%.17g, %.17g)", x.m(), x.n());
  return buf;
}

std::string show(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string show(const PhiSoftSet& s) {
  std::string out = "{";
  for (PhiSoftSet::Index j = 0; j < s.cols(); ++j) {
    const auto& p = s.parameters()[std::size_t(j)];
    out += p.name + show(p.importance) + ":";
    for (PhiSoftSet::Index i = 0; i < s.rows(); ++i) out += " " + s.universe()[std::size_t(i)] + "=" + show(s.cell(i, j));
    out += ";";
  }
  return out + "}";
}

bool valid(const Pfn& x) { return is_valid_pfn(x.m(), x.n()); }

using Check = std::function<std::optional<std::string>(Generator&)>;

struct Suite {
  std::string_view name;
  Check check;
};

std::optional<std::string> closure(Generator& g) {
  const Pfn a = g.pfn();
  const Pfn b = g.pfn();
  const double alpha = g.scalar();
  const std::pair<const char*, Pfn> results[] = {
      {"add_p", add_p(a, b)},          {"mul_p", mul_p(a, b)},     {"scalar_mul", scalar_mul(alpha, a)},
      {"power", power(a, alpha)},      {"join", join(a, b)},       {"meet", meet(a, b)},
      {"complement", complement(a)},
  };
  for (const auto& [op, r] : results) {
    if (!valid(r)) {
      return std::string(op) + " of a=" + show(a) + " b=" + show(b) + " alpha=" + show(alpha) + " gave " + show(r);
    }
  }
  return std::nullopt;
}

std::optional<std::string> arithmetic_laws(Generator& g) {
  const Pfn a = g.pfn();
  const Pfn b = g.pfn();
  const double alpha = g.scalar();
  const double a1 = g.scalar();
  const double a2 = g.scalar();
  const auto inputs = [&] { return " a=" + show(a) + " b=" + show(b) + " alpha=" + show(alpha) + " a1=" + show(a1) + " a2=" + show(a2); };
  if (!approx_equal(add_p(a, b), add_p(b, a), eps)) return "add_p not commutative:" + inputs();
  if (!approx_equal(mul_p(a, b), mul_p(b, a), eps)) return "mul_p not commutative:" + inputs();
  if (!approx_equal(scalar_mul(alpha, add_p(a, b)), add_p(scalar_mul(alpha, a), scalar_mul(alpha, b)), eps)) {
    return "alpha(a + b) != alpha a + alpha b:" + inputs();
  }
  if (!approx_equal(add_p(scalar_mul(a1, a), scalar_mul(a2, a)), scalar_mul(a1 + a2, a), eps)) {
    return "a1 a + a2 a != (a1 + a2) a:" + inputs();
  }
  if (!approx_equal(power(mul_p(a, b), alpha), mul_p(power(a, alpha), power(b, alpha)), eps)) {
    return "(a x b)^alpha != a^alpha x b^alpha:" + inputs();
  }
  if (!approx_equal(mul_p(power(a, a1), power(a, a2)), power(a, a1 + a2), eps)) {
    return "a^a1 x a^a2 != a^(a1 + a2):" + inputs();
  }
  return std::nullopt;
}

std::optional<std::string> duality(Generator& g) {
  const Pfn a = g.pfn();
  const Pfn b = g.pfn();
  const double alpha = g.scalar();
  const auto inputs = [&] { return " a=" + show(a) + " b=" + show(b) + " alpha=" + show(alpha); };
  if (!(complement(complement(a)) == a)) return "complement not an involution:" + inputs();
  if (!approx_equal(mul_p(a, b), complement(add_p(complement(a), complement(b))), eps)) {
    return "mul_p != complement of add_p of complements:" + inputs();
  }
  if (!approx_equal(power(a, alpha), complement(scalar_mul(alpha, complement(a))), eps)) {
    return "power != complement of scalar_mul of complement:" + inputs();
  }
  return std::nullopt;
}

std::optional<std::string> partial_order(Generator& g) {
  const Pfn a = g.pfn();
  const Pfn b = g.chance(0.2) ? a : g.pfn();
  const Pfn c = g.pfn();
  const auto le = [](const Pfn& x, const Pfn& y) { return leq(x, y, OrderKind::membership_then_es); };
  const auto inputs = [&] { return " a=" + show(a) + " b=" + show(b) + " c=" + show(c); };
  if (!le(a, a)) return "not reflexive:" + inputs();
  if (le(a, b) && le(b, a) && !approx_equal(a, b, eps)) return "not antisymmetric:" + inputs();
  if (le(a, b) && le(b, c) && !le(a, c)) return "not transitive:" + inputs();
  if (compare(a, b, OrderKind::membership_then_es) == Ordering::incomparable) return "not total:" + inputs();
  return std::nullopt;
}

std::optional<std::string> order_equivalence(Generator& g) {
  const Pfn a = g.pfn();
  const Pfn b = g.chance(0.1) ? a : g.pfn();
  const Ordering x = compare(a, b, OrderKind::score_accuracy);
  const Ordering y = compare(a, b, OrderKind::es_then_membership);
  if (x != y) {
    return "sfaf says " + std::string(to_string(x)) + ", es-then-m says " + std::string(to_string(y)) +
           " for a=" + show(a) + " b=" + show(b);
  }
  return std::nullopt;
}

// Builds b with score(b) == score(a): n_b^2 = n_a^2 + m_b^2 - m_a^2.
std::optional<std::pair<Pfn, Pfn>> equal_score_pair(Generator& g) {
  const Pfn a = g.continuous_pfn();
  if (g.chance(0.1)) return std::pair{a, a};
  for (int attempt = 0; attempt < 64; ++attempt) {
    const double mb = g.uniform(0.0, 1.0);
    const double nb2 = a.n() * a.n() + mb * mb - a.m() * a.m();
    if (nb2 < 0.0 || mb * mb + nb2 > 1.0) continue;
    if (std::abs(mb - a.m()) < 1e-4) continue;
    return std::pair{a, Pfn::unchecked(mb, std::sqrt(nb2))};
  }
  return std::nullopt;
}

std::optional<std::string> equal_score_equivalence(Generator& g) {
  auto pair = equal_score_pair(g);
  while (!pair) pair = equal_score_pair(g);
  const auto [a, b] = *pair;
  const auto same = [](double x, double y) { return std::abs(x - y) <= eps; };
  const auto le = [](double x, double y) { return x <= y + eps; };
  const bool sf_eq = same(score(a), score(b));
  const bool es_eq = same(expectation_score(a), expectation_score(b));
  const bool conditions[] = {
      sf_eq && le(accuracy(a), accuracy(b)),
      es_eq && le(a.m(), b.m()),
      es_eq && le(a.n(), b.n()),
      sf_eq && le(a.m(), b.m()),
      sf_eq && le(a.n(), b.n()),
  };
  if (!std::all_of(std::begin(conditions), std::end(conditions), [&](bool c) { return c == conditions[0]; })) {
    std::string flags;
    for (bool c : conditions) flags += c ? 'T' : 'F';
    return "conditions disagree (" + flags + ") for a=" + show(a) + " b=" + show(b);
  }
  return std::nullopt;
}

std::optional<std::string> additive_monotonicity(Generator& g) {
  const Pfn a = g.pfn();
  Pfn b = g.pfn();
  Pfn c = g.pfn();
  constexpr auto order = OrderKind::membership_then_es;
  if (!leq(b, c, order)) std::swap(b, c);
  if (!leq(add_p(a, b), add_p(a, c), order)) {
    return "b <= c but a + b > a + c for a=" + show(a) + " b=" + show(b) + " c=" + show(c);
  }
  return std::nullopt;
}

std::optional<std::string> scalar_monotonicity(Generator& g) {
  Pfn a = g.pfn();
  Pfn b = g.pfn();
  double a1 = g.scalar();
  double a2 = g.scalar();
  constexpr auto order = OrderKind::membership_then_es;
  if (!leq(a, b, order)) std::swap(a, b);
  if (a1 > a2) std::swap(a1, a2);
  const double alpha = g.scalar();
  if (!leq(scalar_mul(alpha, a), scalar_mul(alpha, b), order)) {
    return "a <= b but alpha a > alpha b for a=" + show(a) + " b=" + show(b) + " alpha=" + show(alpha);
  }
  if (!leq(scalar_mul(a1, a), scalar_mul(a2, a), order)) {
    return "a1 <= a2 but a1 a > a2 a for a=" + show(a) + " a1=" + show(a1) + " a2=" + show(a2);
  }
  return std::nullopt;
}

std::optional<std::string> expectation_score_laws(Generator& g) {
  if (expectation_score(Pfn::unchecked(0, 1)) != 0.0 || expectation_score(Pfn::unchecked(1, 0)) != 1.0) {
    return std::string("ES(0,1) != 0 or ES(1,0) != 1");
  }
  const Pfn a = g.pfn();
  if (expectation_score(a) != (score(a) + 1.0) / 2.0) return "ES != (SF + 1)/2 for a=" + show(a);
  // Strict monotonicity along each axis inside the region.
  const double room_m = std::sqrt(std::max(0.0, 1.0 - a.n() * a.n()));
  if (a.m() + 1e-3 < room_m) {
    const Pfn up = Pfn::unchecked(g.uniform(a.m() + 1e-3, room_m), a.n());
    if (!(expectation_score(up) > expectation_score(a))) return "ES not increasing in m at a=" + show(a);
  }
  const double room_n = std::sqrt(std::max(0.0, 1.0 - a.m() * a.m()));
  if (a.n() + 1e-3 < room_n) {
    const Pfn up = Pfn::unchecked(a.m(), g.uniform(a.n() + 1e-3, room_n));
    if (!(expectation_score(up) < expectation_score(a))) return "ES not decreasing in n at a=" + show(a);
  }
  return std::nullopt;
}

// Constructive route: w1 v1 +_P w2 v2 +_P ... with 0 v = (0,1).
Pfn fold_oracle(const std::vector<Pfn>& values, const std::vector<double>& w) {
  Pfn acc = Pfn::unchecked(0, 1);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (w[i] > 0.0) acc = add_p(acc, scalar_mul(w[i], values[i]));
  }
  return acc;
}

std::vector<Pfn> random_values(Generator& g, std::size_t k) {
  std::vector<Pfn> v(k);
  for (auto& x : v) x = g.pfn();
  return v;
}

WeightVector to_weights(const std::vector<double>& w) {
  return WeightVector(Eigen::Map<const Eigen::VectorXd>(w.data(), Eigen::Index(w.size())));
}

std::optional<std::string> pfwa_oracle(Generator& g) {
  const std::size_t k = 1 + g.index(8);
  const auto values = random_values(g, k);
  const auto w = g.weights(k);
  const Pfn closed = pfwa_geometric(std::span<const Pfn>(values), to_weights(w));
  const Pfn folded = fold_oracle(values, w);
  if (!approx_equal(closed, folded, 1e-9)) {
    std::string desc;
    for (std::size_t i = 0; i < k; ++i) desc += " " + show(w[i]) + "*" + show(values[i]);
    return "closed form " + show(closed) + " vs fold " + show(folded) + " for" + desc;
  }
  return std::nullopt;
}

std::optional<std::string> pfwa_properties(Generator& g) {
  const std::size_t k = 1 + g.index(8);
  auto values = random_values(g, k);
  auto w = g.weights(k);
  const auto weights = to_weights(w);
  std::string desc;
  for (std::size_t i = 0; i < k; ++i) desc += " " + show(w[i]) + "*" + show(values[i]);

  for (Aggregator agg : {Aggregator::geometric, Aggregator::linear}) {
    const auto op = [agg](const std::vector<Pfn>& v, const WeightVector& wv) {
      return agg == Aggregator::geometric ? pfwa_geometric(std::span<const Pfn>(v), wv)
                                          : pfwa_linear(std::span<const Pfn>(v), wv);
    };
    const std::string tag = std::string(to_string(agg)) + ": ";
    const Pfn out = op(values, weights);
    if (!valid(out)) return tag + "result " + show(out) + " invalid for" + desc;

    double lo_m = 1, hi_m = 0, lo_n = 1, hi_n = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (w[i] == 0.0) continue;
      lo_m = std::min(lo_m, values[i].m());
      hi_m = std::max(hi_m, values[i].m());
      lo_n = std::min(lo_n, values[i].n());
      hi_n = std::max(hi_n, values[i].n());
    }
    if (out.m() < lo_m - eps || out.m() > hi_m + eps || out.n() < lo_n - eps || out.n() > hi_n + eps) {
      return tag + "result " + show(out) + " outside input bounds for" + desc;
    }

    const std::vector<Pfn> same(k, values[0]);
    if (!approx_equal(op(same, weights), values[0], eps)) return tag + "not idempotent at " + show(values[0]);

    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), g.engine());
    std::vector<Pfn> pv(k);
    std::vector<double> pw(k);
    for (std::size_t i = 0; i < k; ++i) {
      pv[i] = values[perm[i]];
      pw[i] = w[perm[i]];
    }
    if (!approx_equal(op(pv, to_weights(pw)), out, eps)) return tag + "not permutation invariant for" + desc;
  }

  // Raising one m (or one n) never lowers the output's m (or n).
  const std::size_t i = g.index(k);
  const Pfn base = pfwa_geometric(std::span<const Pfn>(values), weights);
  const double room_m = std::sqrt(std::max(0.0, 1.0 - values[i].n() * values[i].n()));
  if (room_m > values[i].m()) {
    auto raised = values;
    raised[i] = Pfn::unchecked(g.uniform(values[i].m(), room_m), values[i].n());
    if (pfwa_geometric(std::span<const Pfn>(raised), weights).m() < base.m() - eps) {
      return "raising m of input " + std::to_string(i) + " to " + show(raised[i]) + " lowered output m for" + desc;
    }
  }
  const double room_n = std::sqrt(std::max(0.0, 1.0 - values[i].m() * values[i].m()));
  if (room_n > values[i].n()) {
    auto raised = values;
    raised[i] = Pfn::unchecked(values[i].m(), g.uniform(values[i].n(), room_n));
    if (pfwa_geometric(std::span<const Pfn>(raised), weights).n() < base.n() - eps) {
      return "raising n of input " + std::to_string(i) + " to " + show(raised[i]) + " lowered output n for" + desc;
    }
  }
  return std::nullopt;
}

std::vector<std::string> names_of(const PhiSoftSet& s) {
  std::vector<std::string> out;
  for (const auto& p : s.parameters()) out.push_back(p.name);
  return out;
}

std::vector<AlternativeId> shuffled(std::vector<AlternativeId> ids, Generator& g) {
  std::shuffle(ids.begin(), ids.end(), g.engine());
  return ids;
}

std::optional<std::string> soft_set_identities(Generator& g) {
  const PhiSoftSet x = g.soft_set();
  const auto names = names_of(x);
  const PhiSoftSet null = null_set(shuffled(x.universe(), g), names);
  const PhiSoftSet whole = whole_set(shuffled(x.universe(), g), names);
  const auto where = [&] { return " for x=" + show(x); };
  using Op = PhiSoftSet (*)(const PhiSoftSet&, const PhiSoftSet&);
  const std::pair<const char*, Op> unions[] = {{"extended", extended_union}, {"restricted", restricted_union}};
  const std::pair<const char*, Op> inters[] = {{"extended", extended_intersection},
                                               {"restricted", restricted_intersection}};
  for (const auto& [kind, op] : unions) {
    if (!equals(op(x, x), x)) return std::string(kind) + " union not idempotent" + where();
    if (!equals(op(x, null), x)) return std::string(kind) + " union with null != x" + where();
    if (!equals(op(x, whole), whole)) return std::string(kind) + " union with whole != whole" + where();
  }
  for (const auto& [kind, op] : inters) {
    if (!equals(op(x, x), x)) return std::string(kind) + " intersection not idempotent" + where();
    if (!equals(op(x, null), null)) return std::string(kind) + " intersection with null != null" + where();
    if (!equals(op(x, whole), x)) return std::string(kind) + " intersection with whole != x" + where();
  }
  return std::nullopt;
}

// Columns of `s` restricted to `names`, in that order.
PhiSoftSet project(const PhiSoftSet& s, const std::vector<std::string>& names) {
  std::vector<Parameter> params;
  PhiSoftSet::Array m(s.rows(), Eigen::Index(names.size()));
  PhiSoftSet::Array n(s.rows(), Eigen::Index(names.size()));
  for (std::size_t k = 0; k < names.size(); ++k) {
    const auto j = *s.parameter_index(names[k]);
    params.push_back(s.parameters()[std::size_t(j)]);
    m.col(Eigen::Index(k)) = s.membership().col(j);
    n.col(Eigen::Index(k)) = s.nonmembership().col(j);
  }
  return PhiSoftSet(s.universe(), std::move(params), std::move(m), std::move(n));
}

std::optional<std::string> soft_set_operators(Generator& g) {
  const PhiSoftSet a = g.soft_set();
  const PhiSoftSet b = g.soft_set_like(a);
  const auto where = [&] { return " for a=" + show(a) + " b=" + show(b); };

  std::vector<std::string> shared;
  for (const auto& p : a.parameters()) {
    if (b.parameter_index(p.name)) shared.push_back(p.name);
  }

  const PhiSoftSet eu = extended_union(a, b);
  const PhiSoftSet ei = extended_intersection(a, b);
  if (!equals(eu, extended_union(b, a))) return "extended union not commutative" + where();
  if (!equals(ei, extended_intersection(b, a))) return "extended intersection not commutative" + where();
  if (eu.cols() != ei.cols()) return "extended results differ in parameters" + where();

  if (shared.empty()) {
    for (auto op : {restricted_union, restricted_intersection}) {
      try {
        (void)op(a, b);
        return "restricted operator accepted disjoint parameters" + where();
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::empty_intersection) return "wrong error " + std::string(e.what()) + where();
      }
    }
    return std::nullopt;
  }

  const PhiSoftSet ru = restricted_union(a, b);
  const PhiSoftSet ri = restricted_intersection(a, b);
  if (!equals(ru, restricted_union(b, a))) return "restricted union not commutative" + where();
  if (!equals(ri, restricted_intersection(b, a))) return "restricted intersection not commutative" + where();
  if (!equals(project(eu, shared), ru)) return "extended and restricted union disagree on shared parameters" + where();
  if (!equals(project(ei, shared), ri)) {
    return "extended and restricted intersection disagree on shared parameters" + where();
  }

  for (const auto& name : shared) {
    for (const auto& id : a.universe()) {
      const Pfn x = a.cell(id, name);
      const Pfn y = b.cell(id, name);
      if (!lattice_leq(x, ru.cell(id, name)) || !lattice_leq(y, ru.cell(id, name))) {
        return "union does not dominate inputs at (" + id + ", " + name + ")" + where();
      }
      if (!lattice_leq(ri.cell(id, name), x) || !lattice_leq(ri.cell(id, name), y)) {
        return "intersection not dominated by inputs at (" + id + ", " + name + ")" + where();
      }
    }
  }
  return std::nullopt;
}

// A superset of `s`: importances and cells joined with random values, and
// possibly extra parameters.
PhiSoftSet enlarge(const PhiSoftSet& s, Generator& g) {
  std::vector<Parameter> params = s.parameters();
  PhiSoftSet::Array m = s.membership();
  PhiSoftSet::Array n = s.nonmembership();
  for (auto& p : params) {
    if (g.chance(0.5)) p.importance = join(p.importance, g.pfn());
  }
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (!g.chance(0.3)) continue;
      const Pfn v = join(s.cell(i, j), g.pfn());
      m(i, j) = v.m();
      n(i, j) = v.n();
    }
  }
  for (int k = 1; k <= 6; ++k) {
    const std::string name = "s" + std::to_string(k);
    if (s.parameter_index(name) || !g.chance(0.3)) continue;
    params.push_back({name, g.pfn()});
    m.conservativeResize(Eigen::NoChange, m.cols() + 1);
    n.conservativeResize(Eigen::NoChange, n.cols() + 1);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      const Pfn v = g.pfn();
      m(i, m.cols() - 1) = v.m();
      n(i, n.cols() - 1) = v.n();
    }
  }
  return PhiSoftSet(s.universe(), std::move(params), std::move(m), std::move(n));
}

// Same content, parameters and rows in another order.
PhiSoftSet reorder(const PhiSoftSet& s, Generator& g) {
  std::vector<std::string> names = names_of(s);
  std::shuffle(names.begin(), names.end(), g.engine());
  const PhiSoftSet cols = project(s, names);
  std::vector<Eigen::Index> rows(std::size_t(s.rows()));
  std::iota(rows.begin(), rows.end(), Eigen::Index{0});
  std::shuffle(rows.begin(), rows.end(), g.engine());
  std::vector<AlternativeId> universe;
  PhiSoftSet::Array m(cols.rows(), cols.cols());
  PhiSoftSet::Array n(cols.rows(), cols.cols());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    universe.push_back(cols.universe()[std::size_t(rows[r])]);
    m.row(Eigen::Index(r)) = cols.membership().row(rows[r]);
    n.row(Eigen::Index(r)) = cols.nonmembership().row(rows[r]);
  }
  return PhiSoftSet(std::move(universe), cols.parameters(), std::move(m), std::move(n));
}

std::optional<std::string> subset_order(Generator& g) {
  const PhiSoftSet a = g.soft_set();
  const PhiSoftSet b = enlarge(a, g);
  const PhiSoftSet c = enlarge(b, g);
  const auto where = [&] { return " for a=" + show(a) + " b=" + show(b) + " c=" + show(c); };
  if (!is_subset(a, a)) return "subset not reflexive" + where();
  if (!is_subset(a, b) || !is_subset(b, c)) return "enlarged set is not a superset" + where();
  if (!is_subset(a, c)) return "subset not transitive" + where();

  const PhiSoftSet a2 = reorder(a, g);
  if (!is_subset(a, a2) || !is_subset(a2, a)) return "reordered copy is not a mutual subset" + where();
  if (!equals(a, a2)) return "mutual subsets not equal" + where();

  // Random pairs over one universe: mutual inclusion must imply equality.
  const PhiSoftSet d = g.soft_set_like(a);
  if (is_subset(a, d) && is_subset(d, a) && !equals(a, d)) return "mutual subsets not equal" + where();
  if (is_subset(a, b) && is_subset(b, a) && !equals(a, b)) return "mutual subsets not equal" + where();

  // Equality is transitive.
  const PhiSoftSet a3 = reorder(a2, g);
  if (!(equals(a, a2) && equals(a2, a3) && equals(a, a3))) return "equality not transitive" + where();
  return std::nullopt;
}

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {"closure", closure},
      {"arithmetic-laws", arithmetic_laws},
      {"duality", duality},
      {"m-es-partial-order", partial_order},
      {"sfaf-es-equivalence", order_equivalence},
      {"equal-score-equivalence", equal_score_equivalence},
      {"additive-monotonicity", additive_monotonicity},
      {"scalar-monotonicity", scalar_monotonicity},
      {"expectation-score", expectation_score_laws},
      {"pfwa-fold-oracle", pfwa_oracle},
      {"pfwa-properties", pfwa_properties},
      {"soft-set-identities", soft_set_identities},
      {"soft-set-operators", soft_set_operators},
      {"subset-order", subset_order},
  };
  return all;
}

std::uint64_t mix_seed(std::uint64_t seed, std::string_view name) {
  std::uint64_t h = 14695981039346656037ull;
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return seed ^ h;
}

}  // namespace

std::vector<std::string> names() {
  std::vector<std::string> out;
  for (const auto& s : suites()) out.emplace_back(s.name);
  return out;
}

LawResult run(std::string_view name, const Options& options) {
  const auto& all = suites();
  const auto it = std::find_if(all.begin(), all.end(), [&](const Suite& s) { return s.name == name; });
  if (it == all.end()) throw Error(ErrorKind::invalid_config, "unknown law suite '" + std::string(name) + "'");
  Generator g(mix_seed(options.seed, name));
  LawResult result{std::string(name), 0, std::nullopt};
  for (; result.cases < options.cases; ++result.cases) {
    if (auto failure = it->check(g)) {
      result.counterexample = "case " + std::to_string(result.cases) + ": " + *failure;
      ++result.cases;
      break;
    }
  }
  return result;
}

std::vector<LawResult> run_all(const Options& options) {
  std::vector<LawResult> out;
  for (const auto& s : suites()) out.push_back(run(s.name, options));
  return out;
}

}  // namespace phisoft::laws
