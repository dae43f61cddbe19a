#include "phisoft/soft_set.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace phisoft {

namespace {

void check_identifier(std::string_view id, std::string_view what) {
  if (id.empty()) throw Error(ErrorKind::invalid_id, std::string(what) + " id is empty");
  if (id.find_first_of(",\r\n\"") != std::string_view::npos) {
    throw Error(ErrorKind::invalid_id,
                std::string(what) + " id '" + std::string(id) + "' contains a comma, quote or newline");
  }
}

std::string coord(std::string_view alt, std::string_view param) {
  return "(" + std::string(alt) + ", " + std::string(param) + ")";
}

bool same_universe(const PhiSoftSet& a, const PhiSoftSet& b) {
  if (a.universe().size() != b.universe().size()) return false;
  return std::all_of(a.universe().begin(), a.universe().end(),
                     [&](const AlternativeId& id) { return b.alternative_index(id).has_value(); });
}

void require_same_universe(const PhiSoftSet& a, const PhiSoftSet& b) {
  if (!same_universe(a, b)) {
    throw Error(ErrorKind::universe_mismatch, "operands are defined over different universes");
  }
}

enum class Combine { join, meet };

// Shared engine for the four combination operators. `restricted` keeps only
// the shared parameters; otherwise parameters present on one side are copied.
PhiSoftSet combine(const PhiSoftSet& a, const PhiSoftSet& b, Combine how, bool restricted) {
  require_same_universe(a, b);

  std::vector<std::string> names;
  for (const auto& p : a.parameters()) {
    if (!restricted || b.parameter_index(p.name)) names.push_back(p.name);
  }
  for (const auto& p : b.parameters()) {
    if (!a.parameter_index(p.name) && !restricted) names.push_back(p.name);
  }
  if (restricted && names.empty()) {
    throw Error(ErrorKind::empty_intersection, "operands share no parameter");
  }
  std::sort(names.begin(), names.end(),
            [](const std::string& x, const std::string& y) { return natural_less(x, y); });

  const auto pick = [how](const Pfn& x, const Pfn& y) {
    return how == Combine::join ? join(x, y) : meet(x, y);
  };

  const auto rows = a.rows();
  const auto cols = Eigen::Index(names.size());
  PhiSoftSet::Array m(rows, cols);
  PhiSoftSet::Array n(rows, cols);
  std::vector<Parameter> params;
  params.reserve(names.size());

  // Row permutation taking a's row order to b's.
  std::vector<Eigen::Index> b_row(static_cast<std::size_t>(rows));
  for (Eigen::Index i = 0; i < rows; ++i) b_row[std::size_t(i)] = *b.alternative_index(a.universe()[std::size_t(i)]);

  for (Eigen::Index j = 0; j < cols; ++j) {
    const auto& name = names[std::size_t(j)];
    const auto ja = a.parameter_index(name);
    const auto jb = b.parameter_index(name);
    if (ja && jb) {
      params.push_back({name, pick(a.parameters()[std::size_t(*ja)].importance,
                                   b.parameters()[std::size_t(*jb)].importance)});
      for (Eigen::Index i = 0; i < rows; ++i) {
        const Pfn v = pick(a.cell(i, *ja), b.cell(b_row[std::size_t(i)], *jb));
        m(i, j) = v.m();
        n(i, j) = v.n();
      }
    } else if (ja) {
      params.push_back(a.parameters()[std::size_t(*ja)]);
      m.col(j) = a.membership().col(*ja);
      n.col(j) = a.nonmembership().col(*ja);
    } else {
      params.push_back(b.parameters()[std::size_t(*jb)]);
      for (Eigen::Index i = 0; i < rows; ++i) {
        m(i, j) = b.membership()(b_row[std::size_t(i)], *jb);
        n(i, j) = b.nonmembership()(b_row[std::size_t(i)], *jb);
      }
    }
  }
  return PhiSoftSet(a.universe(), std::move(params), std::move(m), std::move(n));
}

}  // namespace

PhiSoftSet::PhiSoftSet(std::vector<AlternativeId> universe, std::vector<Parameter> parameters,
                       Array membership, Array nonmembership)
    : universe_(std::move(universe)),
      parameters_(std::move(parameters)),
      membership_(std::move(membership)),
      nonmembership_(std::move(nonmembership)) {
  std::unordered_set<std::string_view> seen;
  for (const auto& id : universe_) {
    check_identifier(id, "alternative");
    if (id == "__f__") throw Error(ErrorKind::invalid_id, "alternative id '__f__' is reserved");
    if (!seen.insert(id).second) throw Error(ErrorKind::duplicate_id, "alternative '" + id + "'");
  }
  seen.clear();
  for (const auto& p : parameters_) {
    check_identifier(p.name, "parameter");
    if (!seen.insert(p.name).second) throw Error(ErrorKind::duplicate_id, "parameter '" + p.name + "'");
    if (!is_valid_pfn(p.importance.m(), p.importance.n())) {
      throw Error(ErrorKind::invalid_pfn, "importance of parameter '" + p.name + "'");
    }
  }
  if (membership_.rows() != rows() || membership_.cols() != cols() ||
      nonmembership_.rows() != rows() || nonmembership_.cols() != cols()) {
    throw Error(ErrorKind::length_mismatch, "table shape does not match universe x parameters");
  }
  for (Index i = 0; i < rows(); ++i) {
    for (Index j = 0; j < cols(); ++j) {
      if (!is_valid_pfn(membership_(i, j), nonmembership_(i, j))) {
        throw Error(ErrorKind::invalid_pfn,
                    "cell " + coord(universe_[std::size_t(i)], parameters_[std::size_t(j)].name));
      }
    }
  }
}

PhiSoftSet PhiSoftSet::build(std::vector<AlternativeId> universe,
                             const std::vector<ParameterInput>& parameters,
                             const std::vector<CellInput>& cells) {
  std::unordered_map<std::string_view, Index> row_of;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    check_identifier(universe[i], "alternative");
    if (!row_of.emplace(universe[i], Index(i)).second) {
      throw Error(ErrorKind::duplicate_id, "alternative '" + universe[i] + "'");
    }
  }
  std::unordered_map<std::string_view, Index> col_of;
  std::vector<Parameter> params;
  params.reserve(parameters.size());
  for (std::size_t j = 0; j < parameters.size(); ++j) {
    const auto& p = parameters[j];
    check_identifier(p.name, "parameter");
    if (!col_of.emplace(p.name, Index(j)).second) {
      throw Error(ErrorKind::duplicate_id, "parameter '" + p.name + "'");
    }
    if (!is_valid_pfn(p.m, p.n)) {
      throw Error(ErrorKind::invalid_pfn, "importance of parameter '" + p.name + "' = (" +
                                              std::to_string(p.m) + ", " + std::to_string(p.n) + ")");
    }
    params.push_back({p.name, Pfn::unchecked(p.m, p.n)});
  }

  const auto rows = Index(universe.size());
  const auto cols = Index(parameters.size());
  Array m(rows, cols);
  Array n(rows, cols);
  Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic> filled =
      Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>::Constant(rows, cols, false);

  for (const auto& c : cells) {
    const auto r = row_of.find(c.alternative);
    if (r == row_of.end()) throw Error(ErrorKind::unknown_alternative, "cell " + coord(c.alternative, c.parameter));
    const auto k = col_of.find(c.parameter);
    if (k == col_of.end()) throw Error(ErrorKind::unknown_parameter, "cell " + coord(c.alternative, c.parameter));
    if (filled(r->second, k->second)) {
      throw Error(ErrorKind::duplicate_id, "cell " + coord(c.alternative, c.parameter) + " given twice");
    }
    if (!is_valid_pfn(c.m, c.n)) {
      throw Error(ErrorKind::invalid_pfn, "cell " + coord(c.alternative, c.parameter) + " = (" +
                                              std::to_string(c.m) + ", " + std::to_string(c.n) + ")");
    }
    m(r->second, k->second) = c.m;
    n(r->second, k->second) = c.n;
    filled(r->second, k->second) = true;
  }
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      if (!filled(i, j)) {
        throw Error(ErrorKind::missing_cell, "cell " + coord(universe[std::size_t(i)], params[std::size_t(j)].name));
      }
    }
  }
  return PhiSoftSet(std::move(universe), std::move(params), std::move(m), std::move(n));
}

std::optional<PhiSoftSet::Index> PhiSoftSet::alternative_index(std::string_view id) const noexcept {
  const auto it = std::find(universe_.begin(), universe_.end(), id);
  if (it == universe_.end()) return std::nullopt;
  return Index(it - universe_.begin());
}

std::optional<PhiSoftSet::Index> PhiSoftSet::parameter_index(std::string_view name) const noexcept {
  const auto it = std::find_if(parameters_.begin(), parameters_.end(),
                               [&](const Parameter& p) { return p.name == name; });
  if (it == parameters_.end()) return std::nullopt;
  return Index(it - parameters_.begin());
}

Pfn PhiSoftSet::cell(std::string_view alternative, std::string_view parameter) const {
  const auto i = alternative_index(alternative);
  if (!i) throw Error(ErrorKind::unknown_alternative, "'" + std::string(alternative) + "'");
  const auto j = parameter_index(parameter);
  if (!j) throw Error(ErrorKind::unknown_parameter, "'" + std::string(parameter) + "'");
  return cell(*i, *j);
}

std::vector<Pfn> PhiSoftSet::row(Index r) const {
  std::vector<Pfn> out;
  out.reserve(parameters_.size());
  for (Index j = 0; j < cols(); ++j) out.push_back(cell(r, j));
  return out;
}

bool is_subset(const PhiSoftSet& a, const PhiSoftSet& b) {
  if (!same_universe(a, b)) return false;
  for (PhiSoftSet::Index ja = 0; ja < a.cols(); ++ja) {
    const auto& p = a.parameters()[std::size_t(ja)];
    const auto jb = b.parameter_index(p.name);
    if (!jb) return false;
    if (!lattice_leq(p.importance, b.parameters()[std::size_t(*jb)].importance)) return false;
    for (PhiSoftSet::Index i = 0; i < a.rows(); ++i) {
      const auto ib = *b.alternative_index(a.universe()[std::size_t(i)]);
      if (!lattice_leq(a.cell(i, ja), b.cell(ib, *jb))) return false;
    }
  }
  return true;
}

bool equals(const PhiSoftSet& a, const PhiSoftSet& b) {
  if (!same_universe(a, b) || a.cols() != b.cols()) return false;
  for (PhiSoftSet::Index ja = 0; ja < a.cols(); ++ja) {
    const auto& p = a.parameters()[std::size_t(ja)];
    const auto jb = b.parameter_index(p.name);
    if (!jb) return false;
    if (!approx_equal(p.importance, b.parameters()[std::size_t(*jb)].importance)) return false;
    for (PhiSoftSet::Index i = 0; i < a.rows(); ++i) {
      const auto ib = *b.alternative_index(a.universe()[std::size_t(i)]);
      if (!approx_equal(a.cell(i, ja), b.cell(ib, *jb))) return false;
    }
  }
  return true;
}

PhiSoftSet extended_union(const PhiSoftSet& a, const PhiSoftSet& b) {
  return combine(a, b, Combine::join, false);
}

PhiSoftSet extended_intersection(const PhiSoftSet& a, const PhiSoftSet& b) {
  return combine(a, b, Combine::meet, false);
}

PhiSoftSet restricted_union(const PhiSoftSet& a, const PhiSoftSet& b) {
  return combine(a, b, Combine::join, true);
}

PhiSoftSet restricted_intersection(const PhiSoftSet& a, const PhiSoftSet& b) {
  return combine(a, b, Combine::meet, true);
}

PhiSoftSet constant_set(std::vector<AlternativeId> universe, const std::vector<std::string>& names,
                        double a, double b, std::optional<Pfn> importance) {
  const Pfn value = make_pfn(a, b);
  const Pfn weight = importance.value_or(value);
  std::vector<Parameter> params;
  params.reserve(names.size());
  for (const auto& name : names) params.push_back({name, weight});
  const auto rows = Eigen::Index(universe.size());
  const auto cols = Eigen::Index(names.size());
  return PhiSoftSet(std::move(universe), std::move(params),
                    PhiSoftSet::Array::Constant(rows, cols, value.m()),
                    PhiSoftSet::Array::Constant(rows, cols, value.n()));
}

PhiSoftSet null_set(std::vector<AlternativeId> universe, const std::vector<std::string>& names) {
  return constant_set(std::move(universe), names, 0.0, 1.0);
}

PhiSoftSet whole_set(std::vector<AlternativeId> universe, const std::vector<std::string>& names) {
  return constant_set(std::move(universe), names, 1.0, 0.0);
}

bool natural_less(std::string_view a, std::string_view b) noexcept {
  const auto digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (digit(a[i]) && digit(b[j])) {
      std::size_t ie = i;
      std::size_t je = j;
      while (ie < a.size() && digit(a[ie])) ++ie;
      while (je < b.size() && digit(b[je])) ++je;
      // Compare digit runs by value: strip leading zeros, then length, then text.
      std::string_view ra = a.substr(i, ie - i);
      std::string_view rb = b.substr(j, je - j);
      while (ra.size() > 1 && ra.front() == '0') ra.remove_prefix(1);
      while (rb.size() > 1 && rb.front() == '0') rb.remove_prefix(1);
      if (ra.size() != rb.size()) return ra.size() < rb.size();
      if (ra != rb) return ra < rb;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  if ((i < a.size()) != (j < b.size())) return j < b.size();
  return a < b;
}

}  // namespace phisoft
