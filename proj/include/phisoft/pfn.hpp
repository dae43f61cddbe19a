#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>

#include "phisoft/error.hpp"

namespace phisoft {

/// Slack on m^2 + n^2 <= 1 when validating values.
inline constexpr double validity_tolerance = 1e-9;
/// Key equality for the lexicographic orders and for algebraic-law checks.
inline constexpr double comparison_tolerance = 1e-12;

/// A Pythagorean fuzzy number (membership m, non-membership n) with
/// 0 <= m, n <= 1 and m^2 + n^2 <= 1.
///
/// Values are immutable. `make` validates; `unchecked` is for results of the
/// closed operations below, which stay inside the region up to round-off.
template <class Scalar_>
class BasicPfn {
 public:
  using Scalar = Scalar_;

  /// The null value (0, 1).
  constexpr BasicPfn() noexcept = default;

  [[nodiscard]] static BasicPfn make(Scalar m, Scalar n) {
    if (!(m >= Scalar(0) && m <= Scalar(1)) || !(n >= Scalar(0) && n <= Scalar(1))) {
      throw Error(ErrorKind::out_of_range, "(" + std::to_string(double(m)) + ", " +
                                               std::to_string(double(n)) + ") outside [0,1]");
    }
    if (m * m + n * n > Scalar(1) + Scalar(validity_tolerance)) {
      throw Error(ErrorKind::not_pythagorean,
                  "(" + std::to_string(double(m)) + ", " + std::to_string(double(n)) +
                      ") has m^2 + n^2 > 1");
    }
    return BasicPfn(m, n);
  }

  [[nodiscard]] static constexpr BasicPfn unchecked(Scalar m, Scalar n) noexcept {
    return BasicPfn(m, n);
  }

  [[nodiscard]] constexpr Scalar m() const noexcept { return m_; }
  [[nodiscard]] constexpr Scalar n() const noexcept { return n_; }

  /// Bitwise field equality. Use `approx_equal` for tolerance-aware checks.
  friend constexpr bool operator==(const BasicPfn&, const BasicPfn&) = default;

 private:
  constexpr BasicPfn(Scalar m, Scalar n) noexcept : m_(m), n_(n) {}

  Scalar m_{0};
  Scalar n_{1};
};

using Pfn = BasicPfn<double>;

template <class Scalar>
[[nodiscard]] BasicPfn<Scalar> make_pfn(Scalar m, Scalar n) {
  return BasicPfn<Scalar>::make(m, n);
}

template <class Scalar>
[[nodiscard]] constexpr bool is_valid_pfn(Scalar m, Scalar n) noexcept {
  return m >= Scalar(0) && m <= Scalar(1) && n >= Scalar(0) && n <= Scalar(1) &&
         m * m + n * n <= Scalar(1) + Scalar(validity_tolerance);
}

template <class Scalar>
[[nodiscard]] bool approx_equal(const BasicPfn<Scalar>& a, const BasicPfn<Scalar>& b,
                                Scalar tol = Scalar(comparison_tolerance)) noexcept {
  return std::abs(a.m() - b.m()) <= tol && std::abs(a.n() - b.n()) <= tol;
}

// ---------------------------------------------------------------------------
// Lattice operations

template <class Scalar>
[[nodiscard]] Scalar indeterminacy(const BasicPfn<Scalar>& x) {
  using std::sqrt;
  return sqrt(std::max(Scalar(0), Scalar(1) - x.m() * x.m() - x.n() * x.n()));
}

template <class Scalar>
[[nodiscard]] constexpr BasicPfn<Scalar> complement(const BasicPfn<Scalar>& x) noexcept {
  return BasicPfn<Scalar>::unchecked(x.n(), x.m());
}

template <class Scalar>
[[nodiscard]] constexpr BasicPfn<Scalar> join(const BasicPfn<Scalar>& a,
                                              const BasicPfn<Scalar>& b) noexcept {
  return BasicPfn<Scalar>::unchecked(std::max(a.m(), b.m()), std::min(a.n(), b.n()));
}

template <class Scalar>
[[nodiscard]] constexpr BasicPfn<Scalar> meet(const BasicPfn<Scalar>& a,
                                              const BasicPfn<Scalar>& b) noexcept {
  return BasicPfn<Scalar>::unchecked(std::min(a.m(), b.m()), std::max(a.n(), b.n()));
}

/// a <=_L b: m_a <= m_b and n_a >= n_b.
template <class Scalar>
[[nodiscard]] constexpr bool lattice_leq(const BasicPfn<Scalar>& a,
                                         const BasicPfn<Scalar>& b) noexcept {
  return a.m() <= b.m() && a.n() >= b.n();
}

// ---------------------------------------------------------------------------
// Arithmetic
//
// The t-conorm parts 1 - prod(1 - x^2)^w are evaluated as -expm1(sum w log1p(-x^2))
// so that values near zero keep full relative precision.

namespace detail {

template <class Scalar>
[[nodiscard]] Scalar conorm_root(Scalar log_sum) {
  using std::expm1;
  using std::sqrt;
  return std::clamp(sqrt(std::max(Scalar(0), -expm1(log_sum))), Scalar(0), Scalar(1));
}

/// x + y - xy, exactly 1 when either argument is 1.
template <class Scalar>
[[nodiscard]] constexpr Scalar probabilistic_sum(Scalar x, Scalar y) noexcept {
  if (x >= Scalar(1) || y >= Scalar(1)) return Scalar(1);
  return x + y * (Scalar(1) - x);
}

template <class Scalar>
[[nodiscard]] Scalar log1m_sq(Scalar x) {
  using std::log1p;
  return log1p(-std::clamp(x * x, Scalar(0), Scalar(1)));
}

template <class Scalar>
void require_positive(Scalar alpha) {
  if (!(alpha > Scalar(0)) || !std::isfinite(double(alpha))) {
    throw Error(ErrorKind::non_positive_scalar,
                "scalar " + std::to_string(double(alpha)) + " must be finite and > 0");
  }
}

}  // namespace detail

/// a +_P b = (sqrt(m_a^2 + m_b^2 - m_a^2 m_b^2), n_a n_b)
template <class Scalar>
[[nodiscard]] BasicPfn<Scalar> add_p(const BasicPfn<Scalar>& a, const BasicPfn<Scalar>& b) {
  using std::sqrt;
  const Scalar ma2 = a.m() * a.m();
  const Scalar mb2 = b.m() * b.m();
  const Scalar m = std::min(Scalar(1), sqrt(detail::probabilistic_sum(ma2, mb2)));
  return BasicPfn<Scalar>::unchecked(m, a.n() * b.n());
}

/// a x_P b = (m_a m_b, sqrt(n_a^2 + n_b^2 - n_a^2 n_b^2))
template <class Scalar>
[[nodiscard]] BasicPfn<Scalar> mul_p(const BasicPfn<Scalar>& a, const BasicPfn<Scalar>& b) {
  using std::sqrt;
  const Scalar na2 = a.n() * a.n();
  const Scalar nb2 = b.n() * b.n();
  const Scalar n = std::min(Scalar(1), sqrt(detail::probabilistic_sum(na2, nb2)));
  return BasicPfn<Scalar>::unchecked(a.m() * b.m(), n);
}

/// alpha x = (sqrt(1 - (1 - m^2)^alpha), n^alpha), alpha > 0.
template <class Scalar>
[[nodiscard]] BasicPfn<Scalar> scalar_mul(Scalar alpha, const BasicPfn<Scalar>& x) {
  using std::pow;
  detail::require_positive(alpha);
  return BasicPfn<Scalar>::unchecked(detail::conorm_root(alpha * detail::log1m_sq(x.m())),
                                     pow(x.n(), alpha));
}

/// x^alpha = (m^alpha, sqrt(1 - (1 - n^2)^alpha)), alpha > 0.
template <class Scalar>
[[nodiscard]] BasicPfn<Scalar> power(const BasicPfn<Scalar>& x, Scalar alpha) {
  using std::pow;
  detail::require_positive(alpha);
  return BasicPfn<Scalar>::unchecked(pow(x.m(), alpha),
                                     detail::conorm_root(alpha * detail::log1m_sq(x.n())));
}

// ---------------------------------------------------------------------------
// Score-type functions

template <class Scalar>
[[nodiscard]] constexpr Scalar score(const BasicPfn<Scalar>& x) noexcept {
  return x.m() * x.m() - x.n() * x.n();
}

template <class Scalar>
[[nodiscard]] constexpr Scalar accuracy(const BasicPfn<Scalar>& x) noexcept {
  return x.m() * x.m() + x.n() * x.n();
}

template <class Scalar>
[[nodiscard]] constexpr Scalar expectation_score(const BasicPfn<Scalar>& x) noexcept {
  return (score(x) + Scalar(1)) / Scalar(2);
}

// ---------------------------------------------------------------------------
// Orders

enum class OrderKind {
  lattice,              // (u,v) <= (i,j) iff u <= i and v >= j; partial
  score_accuracy,       // score, then accuracy
  membership_then_es,   // m, then expectation score
  es_then_membership,   // expectation score, then m
};

enum class Ordering { less, equal, greater, incomparable };

[[nodiscard]] constexpr std::string_view to_string(OrderKind kind) noexcept {
  switch (kind) {
    case OrderKind::lattice: return "lattice";
    case OrderKind::score_accuracy: return "sfaf";
    case OrderKind::membership_then_es: return "m";
    case OrderKind::es_then_membership: return "es";
  }
  return "?";
}

[[nodiscard]] constexpr std::string_view to_string(Ordering o) noexcept {
  switch (o) {
    case Ordering::less: return "Less";
    case Ordering::equal: return "Equal";
    case Ordering::greater: return "Greater";
    case Ordering::incomparable: return "Incomparable";
  }
  return "?";
}

namespace detail {

template <class Scalar>
[[nodiscard]] Ordering compare_key(Scalar a, Scalar b) noexcept {
  if (std::abs(a - b) <= Scalar(comparison_tolerance)) return Ordering::equal;
  return a < b ? Ordering::less : Ordering::greater;
}

template <class Scalar>
[[nodiscard]] Ordering lexicographic(Scalar a1, Scalar b1, Scalar a2, Scalar b2) noexcept {
  const Ordering first = compare_key(a1, b1);
  return first != Ordering::equal ? first : compare_key(a2, b2);
}

}  // namespace detail

template <class Scalar>
[[nodiscard]] Ordering compare(const BasicPfn<Scalar>& a, const BasicPfn<Scalar>& b,
                               OrderKind order) noexcept {
  switch (order) {
    case OrderKind::lattice: {
      const bool le = lattice_leq(a, b);
      const bool ge = lattice_leq(b, a);
      if (le && ge) return Ordering::equal;
      if (le) return Ordering::less;
      if (ge) return Ordering::greater;
      return Ordering::incomparable;
    }
    case OrderKind::score_accuracy:
      return detail::lexicographic(score(a), score(b), accuracy(a), accuracy(b));
    case OrderKind::membership_then_es:
      return detail::lexicographic(a.m(), b.m(), expectation_score(a), expectation_score(b));
    case OrderKind::es_then_membership:
      return detail::lexicographic(expectation_score(a), expectation_score(b), a.m(), b.m());
  }
  return Ordering::incomparable;
}

/// a <= b under `order` (Less or Equal).
template <class Scalar>
[[nodiscard]] bool leq(const BasicPfn<Scalar>& a, const BasicPfn<Scalar>& b, OrderKind order) noexcept {
  const Ordering o = compare(a, b, order);
  return o == Ordering::less || o == Ordering::equal;
}

// ---------------------------------------------------------------------------
// Text form: "m,n", optionally wrapped in parentheses, whitespace ignored.

/// Parses the two numbers without validating the Pythagorean constraint, so
/// callers can attach their own coordinates to validation failures.
[[nodiscard]] inline std::pair<double, double> parse_pfn_text(std::string_view text) {
  auto trim = [](std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return std::string_view{};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
  };
  auto fail = [&](const std::string& why) -> std::pair<double, double> {
    throw Error(ErrorKind::parse_error, "'" + std::string(text) + "': " + why);
  };
  std::string_view body = trim(text);
  if (!body.empty() && body.front() == '(') {
    if (body.back() != ')') return fail("unbalanced parenthesis");
    body = trim(body.substr(1, body.size() - 2));
  }
  const auto comma = body.find(',');
  if (comma == std::string_view::npos) return fail("expected 'm,n'");
  auto number = [&](std::string_view s) {
    s = trim(s);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(value)) {
      fail("'" + std::string(s) + "' is not a decimal number");
    }
    return value;
  };
  return {number(body.substr(0, comma)), number(body.substr(comma + 1))};
}

/// Shortest text that round-trips each component, e.g. "0.7,0.2".
[[nodiscard]] inline std::string format_pfn(const Pfn& x) {
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof buf, x.m());
  *r.ptr++ = ',';
  r = std::to_chars(r.ptr, buf + sizeof buf, x.n());
  return std::string(buf, r.ptr);
}

}  // namespace phisoft
