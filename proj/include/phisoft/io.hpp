#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "phisoft/decision.hpp"
#include "phisoft/soft_set.hpp"

namespace phisoft::io {

/// CSV table:
///
///     id,s1,s3
///     p1,"0.7,0.7",(0.6,0.6)
///     __f__,"0.5,0.4","0.7,0.2"
///
/// Cells are "m,n" (quoted) or (m,n). The `__f__` row carries importances and
/// must come last. Blank lines are ignored. Errors carry line:column.
[[nodiscard]] PhiSoftSet parse_csv(std::string_view text);
[[nodiscard]] std::string emit_csv(const PhiSoftSet& set);

/// JSON table: {"universe": [...], "parameters": [{"name", "importance": {"m","n"}}],
/// "cells": [{"alt","param","m","n"}]}. Schema errors name the JSON path.
[[nodiscard]] PhiSoftSet parse_json(std::string_view text);
[[nodiscard]] std::string emit_json(const PhiSoftSet& set);
/// The combined table plus "config", "weights", "measures" and "ranking".
[[nodiscard]] std::string emit_json(const DecisionReport& report);

/// JSON when the first non-blank character is '{', CSV otherwise.
[[nodiscard]] PhiSoftSet parse_table(std::string_view text);

[[nodiscard]] std::string read_file(const std::filesystem::path& path);
[[nodiscard]] PhiSoftSet load_table(const std::filesystem::path& path);
/// Writes JSON for a ".json" extension, CSV otherwise.
void save_table(const PhiSoftSet& set, const std::filesystem::path& path);

/// Fixed-width measures table (4 decimals) followed by the ranking line.
[[nodiscard]] std::string render_report(const DecisionReport& report);
/// One weight per line, 8 decimals.
[[nodiscard]] std::string render_weights(const WeightVector& weights);

}  // namespace phisoft::io
