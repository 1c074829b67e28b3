#pragma once

// Tabular results rendered as CSV or as JSON documents that follow
// schemas/output.json. Rationals travel as canonical "num/den" strings; an
// approximate decimal column is added only on request.

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "onedep/rational.hpp"

namespace onedep {

enum class Format { csv, json };

inline constexpr int kSchemaVersion = 1;

/// Small integers become JSON numbers; big integers and rationals become strings.
using Cell = std::variant<std::int64_t, Integer, Rational, std::string, bool>;

struct Table {
    std::string command;
    /// Scalar parameters echoed into the JSON document, rendered as strings.
    std::map<std::string, std::string> params;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
};

struct RenderOptions {
    Format format = Format::csv;
    /// Adds "<column>_decimal" after every rational-valued column.
    bool decimal = false;
};

/// 15 significant digits, rounded half away from zero; exact for zero.
std::string to_decimal(const Rational& r, int digits = 15);

void render(const Table& t, const RenderOptions& opts, std::ostream& os);
std::string render(const Table& t, const RenderOptions& opts);

}  // namespace onedep
