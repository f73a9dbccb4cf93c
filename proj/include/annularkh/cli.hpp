#pragma once

#include "annularkh/graded.hpp"

#include <json.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace annularkh::cli {

using json = nlohmann::ordered_json;

enum class Format { table, structured };

/// Bad arguments or unreadable input; the front end exits with status 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Output of one command. `dims` rows are objects whose keys follow
/// `columns`; `details` holds command-specific fields.
struct Report {
    std::string diagram;
    std::string command;
    std::vector<std::string> columns;
    json dims = json::array();
    json polynomials = json::object();
    std::vector<Check> checks;
    json details = json::object();
    std::vector<std::string> warnings;

    void check(std::string name, bool pass, std::string detail = "");
    bool passed() const;
};

std::string render(const Report& r, Format f);

json dims_rows(const TrigradedDims& d);
json dims_rows(const BigradedDims& d);

/// Sum of dim * u^i q^j t^k by descending i, then j, then k.
std::string poincare(const TrigradedDims& d);
std::string poincare(const BigradedDims& d);

struct Options {
    std::size_t threads = 0;
    int r_max = 0;
    std::string bits;
};

Report cmd_kh(const std::string& path, const Options& o);
Report cmd_ss(const std::string& path, const Options& o);
Report cmd_sfh(const std::string& path, const Options& o);
Report cmd_cut(const std::string& path, const Options& o);
Report cmd_euler(const std::string& path, const Options& o);
/// Runs the property suite on every *.json file directly inside `dir`.
Report cmd_check(const std::string& dir, const Options& o);

}  // namespace annularkh::cli
