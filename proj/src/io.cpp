#include "phisoft/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace phisoft::io {

namespace {

constexpr std::string_view importance_row_id = "__f__";

struct Field {
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;
};

[[noreturn]] void parse_fail(std::size_t line, std::size_t column, const std::string& what) {
  throw Error(ErrorKind::parse_error, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
}

// Splits CSV text into records of fields. Quotes follow RFC 4180 ("" escapes a
// quote); outside quotes, commas nested in parentheses do not split a field so
// that (m,n) cells can be written bare. Blank records are dropped.
std::vector<std::vector<Field>> tokenize(std::string_view text) {
  std::vector<std::vector<Field>> records;
  std::vector<Field> record;
  Field field;
  std::size_t line = 1;
  std::size_t column = 1;
  bool in_quotes = false;
  bool field_started = false;
  int depth = 0;

  auto finish_field = [&] {
    field.text = std::string(trim(field.text));
    record.push_back(std::move(field));
    field = Field{};
    field_started = false;
    depth = 0;
  };
  auto finish_record = [&] {
    finish_field();
    const bool blank = record.size() == 1 && record.front().text.empty();
    if (!blank) records.push_back(std::move(record));
    record.clear();
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (!field_started && c != ' ' && c != '\t') {
      field.line = line;
      field.column = column;
      field_started = true;
    }
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.text += '"';
          ++i;
          ++column;
        } else {
          in_quotes = false;
        }
      } else {
        field.text += c;
        if (c == '\n') {
          ++line;
          column = 0;
        }
      }
    } else if (c == '"') {
      in_quotes = true;
    } else if (c == '(') {
      ++depth;
      field.text += c;
    } else if (c == ')') {
      --depth;
      field.text += c;
    } else if (c == ',' && depth <= 0) {
      finish_field();
    } else if (c == '\n') {
      finish_record();
      ++line;
      column = 0;
    } else if (c != '\r') {
      field.text += c;
    }
    ++column;
  }
  if (in_quotes) parse_fail(field.line, field.column, "unterminated quoted field");
  finish_record();
  return records;
}

std::pair<double, double> parse_cell(const Field& f) {
  try {
    return parse_pfn_text(f.text);
  } catch (const Error& e) {
    parse_fail(f.line, f.column, e.detail());
  }
}

std::string fixed(double x, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
  std::string s(buf);
  // "-0.0000" reads as a sign that is not there.
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

// --- JSON ------------------------------------------------------------------

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void schema_fail(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::schema_error, path + ": " + what);
}

const nlohmann::json& member(const nlohmann::json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) schema_fail(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) schema_fail(path + "." + key, "missing");
  return *it;
}

double number_at(const nlohmann::json& obj, const std::string& key, const std::string& path) {
  const auto& v = member(obj, key, path);
  if (!v.is_number()) schema_fail(path + "." + key, "expected a number");
  return v.get<double>();
}

std::string string_at(const nlohmann::json& v, const std::string& path) {
  if (!v.is_string()) schema_fail(path, "expected a string");
  return v.get<std::string>();
}

const nlohmann::json& array_at(const nlohmann::json& obj, const std::string& key, const std::string& path) {
  const auto& v = member(obj, key, path);
  if (!v.is_array()) schema_fail(path + "." + key, "expected an array");
  return v;
}

ordered_json pfn_json(const Pfn& x) { return ordered_json{{"m", x.m()}, {"n", x.n()}}; }

ordered_json table_json(const PhiSoftSet& set) {
  ordered_json doc;
  doc["universe"] = set.universe();
  auto& params = doc["parameters"] = ordered_json::array();
  for (const auto& p : set.parameters()) params.push_back({{"name", p.name}, {"importance", pfn_json(p.importance)}});
  auto& cells = doc["cells"] = ordered_json::array();
  for (PhiSoftSet::Index i = 0; i < set.rows(); ++i) {
    for (PhiSoftSet::Index j = 0; j < set.cols(); ++j) {
      const Pfn c = set.cell(i, j);
      cells.push_back({{"alt", set.universe()[std::size_t(i)]},
                       {"param", set.parameters()[std::size_t(j)].name},
                       {"m", c.m()},
                       {"n", c.n()}});
    }
  }
  return doc;
}

}  // namespace

PhiSoftSet parse_csv(std::string_view text) {
  const auto records = tokenize(text);
  if (records.empty()) parse_fail(1, 1, "empty input");

  const auto& header = records.front();
  if (header.front().text != "id") parse_fail(header.front().line, header.front().column, "header must start with 'id'");
  const std::size_t width = header.size();

  std::vector<ParameterInput> params;
  for (std::size_t j = 1; j < width; ++j) params.push_back({header[j].text, 0.0, 1.0});

  std::vector<AlternativeId> universe;
  std::vector<CellInput> cells;
  bool have_importances = false;

  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    const auto& id = rec.front();
    if (have_importances) parse_fail(id.line, id.column, "rows after the __f__ importance row");
    if (rec.size() != width) {
      parse_fail(id.line, id.column,
                 "row has " + std::to_string(rec.size()) + " fields, header has " + std::to_string(width));
    }
    const bool importance_row = id.text == importance_row_id;
    if (!importance_row) universe.push_back(id.text);
    for (std::size_t j = 1; j < width; ++j) {
      const auto [m, n] = parse_cell(rec[j]);
      if (!is_valid_pfn(m, n)) {
        throw Error(ErrorKind::invalid_pfn, "line " + std::to_string(rec[j].line) + ", column " +
                                                std::to_string(rec[j].column) + ": cell (" + id.text + ", " +
                                                header[j].text + ") = (" + rec[j].text + ")");
      }
      if (importance_row) {
        params[j - 1].m = m;
        params[j - 1].n = n;
      } else {
        cells.push_back({id.text, header[j].text, m, n});
      }
    }
    have_importances = have_importances || importance_row;
  }
  if (universe.empty()) parse_fail(header.front().line, header.front().column, "no alternatives");
  if (!have_importances) parse_fail(records.back().front().line, 1, "missing __f__ importance row");
  return PhiSoftSet::build(std::move(universe), params, cells);
}

std::string emit_csv(const PhiSoftSet& set) {
  std::string out = "id";
  for (const auto& p : set.parameters()) out += "," + p.name;
  out += '\n';
  for (PhiSoftSet::Index i = 0; i < set.rows(); ++i) {
    out += set.universe()[std::size_t(i)];
    for (PhiSoftSet::Index j = 0; j < set.cols(); ++j) out += ",\"" + format_pfn(set.cell(i, j)) + '"';
    out += '\n';
  }
  out += importance_row_id;
  for (const auto& p : set.parameters()) out += ",\"" + format_pfn(p.importance) + '"';
  out += '\n';
  return out;
}

PhiSoftSet parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::parse_error, "byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) schema_fail("$", "expected an object");

  std::vector<AlternativeId> universe;
  const auto& u = array_at(doc, "universe", "$");
  for (std::size_t i = 0; i < u.size(); ++i) universe.push_back(string_at(u[i], "$.universe[" + std::to_string(i) + "]"));

  std::vector<ParameterInput> params;
  const auto& ps = array_at(doc, "parameters", "$");
  for (std::size_t j = 0; j < ps.size(); ++j) {
    const std::string path = "$.parameters[" + std::to_string(j) + "]";
    const auto& imp = member(ps[j], "importance", path);
    params.push_back({string_at(member(ps[j], "name", path), path + ".name"), number_at(imp, "m", path + ".importance"),
                      number_at(imp, "n", path + ".importance")});
  }

  std::vector<CellInput> cells;
  const auto& cs = array_at(doc, "cells", "$");
  for (std::size_t k = 0; k < cs.size(); ++k) {
    const std::string path = "$.cells[" + std::to_string(k) + "]";
    cells.push_back({string_at(member(cs[k], "alt", path), path + ".alt"),
                     string_at(member(cs[k], "param", path), path + ".param"), number_at(cs[k], "m", path),
                     number_at(cs[k], "n", path)});
  }
  return PhiSoftSet::build(std::move(universe), params, cells);
}

std::string emit_json(const PhiSoftSet& set) { return table_json(set).dump(2) + '\n'; }

std::string emit_json(const DecisionReport& report) {
  ordered_json doc;
  doc["config"] = {{"combine", to_string(report.config.combine)},
                   {"aggregator", to_string(report.config.aggregator)},
                   {"order", to_string(report.config.ranking_order)}};
  const ordered_json table = table_json(report.combined);
  for (const auto& [key, value] : table.items()) doc[key] = value;
  auto& weights = doc["weights"] = ordered_json::array();
  for (Eigen::Index i = 0; i < report.weights.size(); ++i) weights.push_back(report.weights[i]);
  auto& measures = doc["measures"] = ordered_json::array();
  for (const auto& r : report.measures) {
    measures.push_back(
        {{"alt", r.id}, {"apfdv", pfn_json(r.apfdv)}, {"es", r.es}, {"sf", r.sf}, {"af", r.af}, {"rank", r.rank}});
  }
  doc["ranking"] = report.ranking;
  return doc.dump(2) + '\n';
}

PhiSoftSet parse_table(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json(text);
  return parse_csv(text);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::parse_error, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

PhiSoftSet load_table(const std::filesystem::path& path) {
  try {
    return parse_table(read_file(path));
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.detail());
  }
}

void save_table(const PhiSoftSet& set, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::parse_error, "cannot write '" + path.string() + "'");
  out << (path.extension() == ".json" ? emit_json(set) : emit_csv(set));
}

std::string render_report(const DecisionReport& report) {
  std::size_t id_width = 2;
  for (const auto& r : report.measures) id_width = std::max(id_width, r.id.size());

  auto pad_left = [](const std::string& s, std::size_t w) { return std::string(w > s.size() ? w - s.size() : 0, ' ') + s; };
  auto pad_right = [](const std::string& s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); };

  constexpr std::size_t col = 10;
  std::string out = pad_right("id", id_width);
  for (const char* h : {"APFDV m", "APFDV n", "ES", "SF", "AF"}) out += pad_left(h, col);
  out += pad_left("rank", 6) + '\n';
  for (const auto& r : report.measures) {
    out += pad_right(r.id, id_width);
    for (double v : {r.apfdv.m(), r.apfdv.n(), r.es, r.sf, r.af}) out += pad_left(fixed(v, 4), col);
    out += pad_left(std::to_string(r.rank), 6) + '\n';
  }
  out += '\n';
  for (std::size_t i = 0; i < report.ranking.size(); ++i) {
    if (i) out += " > ";
    out += report.ranking[i];
  }
  out += '\n';
  if (!report.ranking.empty()) out += "optimal: " + report.optimal() + '\n';
  return out;
}

std::string render_weights(const WeightVector& weights) {
  std::string out;
  for (Eigen::Index i = 0; i < weights.size(); ++i) out += fixed(weights[i], 8) + '\n';
  return out;
}

}  // namespace phisoft::io
