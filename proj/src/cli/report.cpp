#include "annularkh/cli.hpp"

#include <algorithm>
#include <sstream>

namespace annularkh::cli {
namespace {

std::string monomial(const std::vector<std::pair<char, int>>& powers) {
    std::string out;
    for (const auto& [var, e] : powers) {
        if (e == 0) continue;
        out += var;
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

std::string join_terms(const std::vector<std::pair<std::size_t, std::string>>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [coeff, mono] : terms) {
        if (!out.empty()) out += " + ";
        if (mono.empty()) out += std::to_string(coeff);
        else if (coeff != 1) out += std::to_string(coeff) + mono;
        else out += mono;
    }
    return out;
}

std::string scalar(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

bool all_scalar(const json& obj) {
    return std::all_of(obj.begin(), obj.end(), [](const json& v) { return v.is_primitive(); });
}

void table(std::ostringstream& os, const std::vector<std::string>& columns, const json& rows, const std::string& indent) {
    std::vector<std::size_t> width(columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        width[c] = columns[c].size();
        for (const json& row : rows) width[c] = std::max(width[c], scalar(row.at(columns[c])).size());
    }
    auto line = [&](auto cell) {
        os << indent;
        for (std::size_t c = 0; c < columns.size(); ++c) {
            const std::string s = cell(c);
            os << std::string(width[c] - s.size(), ' ') << s << (c + 1 < columns.size() ? "  " : "\n");
        }
    };
    line([&](std::size_t c) { return columns[c]; });
    for (const json& row : rows) line([&](std::size_t c) { return scalar(row.at(columns[c])); });
}

void detail(std::ostringstream& os, const std::string& key, const json& v, const std::string& indent) {
    if (v.is_primitive()) {
        os << indent << key << ": " << scalar(v) << "\n";
        return;
    }
    if (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_primitive(); })) {
        os << indent << key << ":";
        for (const json& x : v) os << " " << scalar(x);
        os << "\n";
        return;
    }
    os << indent << key << ":\n";
    if (v.is_object()) {
        for (const auto& [k, child] : v.items()) detail(os, k, child, indent + "  ");
        return;
    }
    if (!v.empty() && v.front().is_object() && all_scalar(v.front())) {
        std::vector<std::string> columns;
        for (const auto& [k, child] : v.front().items()) columns.push_back(k);
        table(os, columns, v, indent + "  ");
        return;
    }
    for (std::size_t x = 0; x < v.size(); ++x) detail(os, "[" + std::to_string(x) + "]", v[x], indent + "  ");
}

}  // namespace

void Report::check(std::string name, bool pass, std::string detail) {
    checks.push_back({std::move(name), pass, std::move(detail)});
}

bool Report::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

json dims_rows(const TrigradedDims& d) {
    json rows = json::array();
    for (const auto& [deg, dim] : d) rows.push_back({{"i", deg.i}, {"j", deg.j}, {"k", deg.k}, {"dim", dim}});
    return rows;
}

json dims_rows(const BigradedDims& d) {
    json rows = json::array();
    for (const auto& [deg, dim] : d) rows.push_back({{"i", deg.i}, {"j", deg.j}, {"dim", dim}});
    return rows;
}

std::string poincare(const TrigradedDims& d) {
    std::vector<std::pair<std::size_t, std::string>> terms;
    for (auto it = d.entries().rbegin(); it != d.entries().rend(); ++it)
        terms.emplace_back(it->second, monomial({{'u', it->first.i}, {'q', it->first.j}, {'t', it->first.k}}));
    return join_terms(terms);
}

std::string poincare(const BigradedDims& d) {
    std::vector<std::pair<std::size_t, std::string>> terms;
    for (auto it = d.entries().rbegin(); it != d.entries().rend(); ++it)
        terms.emplace_back(it->second, monomial({{'u', it->first.i}, {'q', it->first.j}}));
    return join_terms(terms);
}

std::string render(const Report& r, Format f) {
    if (f == Format::structured) {
        json doc;
        doc["diagram"] = r.diagram;
        doc["command"] = r.command;
        doc["dims"] = r.dims;
        doc["polynomials"] = r.polynomials;
        json checks = json::array();
        for (const Check& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        doc["checks"] = checks;
        if (!r.details.empty()) doc["details"] = r.details;
        if (!r.warnings.empty()) doc["warnings"] = r.warnings;
        return doc.dump(2) + "\n";
    }
    std::ostringstream os;
    os << r.command << " " << r.diagram << "\n";
    for (const auto& [k, v] : r.details.items()) detail(os, k, v, "");
    if (!r.columns.empty()) {
        os << "dims:\n";
        if (r.dims.empty()) os << "  (none)\n";
        else table(os, r.columns, r.dims, "  ");
    }
    for (const auto& [k, v] : r.polynomials.items()) os << k << ": " << scalar(v) << "\n";
    for (const Check& c : r.checks) {
        os << (c.pass ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) os << ": " << c.detail;
        os << "\n";
    }
    return os.str();
}

}  // namespace annularkh::cli
