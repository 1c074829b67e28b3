#include "onedep/output.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"
#include "onedep/errors.hpp"

namespace onedep {

namespace {

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

Integer pow10(long e) { return boost::multiprecision::pow(Integer(10), static_cast<unsigned>(e)); }

/// 10^e as a rational, for any sign of e.
Rational pow10_rational(long e) { return e >= 0 ? Rational(pow10(e)) : Rational(Integer(1), pow10(-e)); }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string cell_text(const Cell& c) {
    return std::visit(overloaded{[](std::int64_t v) { return std::to_string(v); },
                                 [](const Integer& v) { return v.str(); },
                                 [](const Rational& v) { return to_string(v); },
                                 [](const std::string& v) { return v; },
                                 [](bool v) { return std::string(v ? "true" : "false"); }},
                      c);
}

nlohmann::json cell_json(const Cell& c) {
    return std::visit(overloaded{[](std::int64_t v) { return nlohmann::json(v); },
                                 [](const Integer& v) { return nlohmann::json(v.str()); },
                                 [](const Rational& v) { return nlohmann::json(to_string(v)); },
                                 [](const std::string& v) { return nlohmann::json(v); },
                                 [](bool v) { return nlohmann::json(v); }},
                      c);
}

std::vector<bool> rational_columns(const Table& t) {
    std::vector<bool> out(t.columns.size(), false);
    for (const auto& row : t.rows)
        for (std::size_t i = 0; i < row.size(); ++i)
            if (std::holds_alternative<Rational>(row[i])) out[i] = true;
    return out;
}

void render_csv(const Table& t, const RenderOptions& opts, std::ostream& os) {
    const auto rational = rational_columns(t);
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        os << (i ? "," : "") << csv_field(t.columns[i]);
        if (opts.decimal && rational[i]) os << "," << csv_field(t.columns[i] + "_decimal");
    }
    os << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            os << (i ? "," : "") << csv_field(cell_text(row[i]));
            if (opts.decimal && rational[i]) {
                os << ",";
                if (const auto* r = std::get_if<Rational>(&row[i])) os << to_decimal(*r);
            }
        }
        os << "\n";
    }
}

void render_json(const Table& t, const RenderOptions& opts, std::ostream& os) {
    const auto rational = rational_columns(t);
    nlohmann::ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = t.command;
    doc["params"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : t.params) doc["params"][k] = v;
    nlohmann::ordered_json columns = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        columns.push_back(t.columns[i]);
        if (opts.decimal && rational[i]) columns.push_back(t.columns[i] + "_decimal");
    }
    doc["columns"] = columns;
    doc["decimal"] = opts.decimal;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            obj[t.columns[i]] = cell_json(row[i]);
            if (opts.decimal && rational[i]) {
                const auto* r = std::get_if<Rational>(&row[i]);
                obj[t.columns[i] + "_decimal"] = r ? nlohmann::ordered_json(std::stod(to_decimal(*r))) : nullptr;
            }
        }
        doc["rows"].push_back(std::move(obj));
    }
    os << doc.dump(2) << "\n";
}

}  // namespace

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size())
        throw InternalInconsistency("Table " + command + ": row has " + std::to_string(row.size()) +
                                    " cells for " + std::to_string(columns.size()) + " columns");
    rows.push_back(std::move(row));
}

std::string to_decimal(const Rational& r, int digits) {
    if (digits < 1) throw UsageError("to_decimal: need at least one digit");
    if (r == 0) return "0";
    const bool negative = r < 0;
    const Rational a = negative ? Rational(-r) : r;

    // Decimal exponent e with 10^e <= a < 10^(e+1).
    long e = static_cast<long>(std::floor(std::log10(to_double(a))));
    while (a < pow10_rational(e)) --e;
    while (a >= pow10_rational(e + 1)) ++e;

    // Round a * 10^(digits-1-e) half away from zero to an integer of `digits` digits.
    const Rational scaled = a * pow10_rational(digits - 1 - e);
    Integer mantissa = numerator(scaled) / denominator(scaled);
    const Rational fraction = scaled - Rational(mantissa);
    if (fraction * 2 >= 1) mantissa += 1;
    if (mantissa == pow10(digits)) {
        mantissa /= 10;
        ++e;
    }

    std::string d = mantissa.str();
    std::string out = negative ? "-" : "";
    if (e < -5 || e >= digits) {
        std::string frac = d.substr(1);
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        out += d.substr(0, 1);
        if (!frac.empty()) out += "." + frac;
        std::ostringstream ex;
        ex << "e" << (e < 0 ? "-" : "+") << (std::abs(e) < 10 ? "0" : "") << std::abs(e);
        return out + ex.str();
    }
    std::string int_part, frac_part;
    if (e >= 0) {
        int_part = d.substr(0, static_cast<std::size_t>(e) + 1);
        frac_part = d.substr(static_cast<std::size_t>(e) + 1);
    } else {
        int_part = "0";
        frac_part = std::string(static_cast<std::size_t>(-e - 1), '0') + d;
    }
    while (!frac_part.empty() && frac_part.back() == '0') frac_part.pop_back();
    out += int_part;
    if (!frac_part.empty()) out += "." + frac_part;
    return out;
}

void render(const Table& t, const RenderOptions& opts, std::ostream& os) {
    if (opts.format == Format::csv)
        render_csv(t, opts, os);
    else
        render_json(t, opts, os);
}

std::string render(const Table& t, const RenderOptions& opts) {
    std::ostringstream os;
    render(t, opts, os);
    return os.str();
}

}  // namespace onedep
