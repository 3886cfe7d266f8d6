#pragma once

#include "swdual/duality.hpp"
#include "swdual/verify.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace swdual {

using Json = nlohmann::ordered_json;

struct ResultEntry {
    std::string name;
    Json value;
    std::optional<int64_t> modulus;
    std::string provenance = "computed";  // computed | paper-input
    std::vector<TrailStep> trail;
};

// One command's output: results with provenance, optional per-step wall clock.
struct Report {
    std::string command;
    Json params = Json::object();
    std::vector<ResultEntry> results;
    std::vector<std::pair<std::string, double>> timing;  // empty unless timing was requested
    bool pass = true;
    std::string text;  // human-readable rendering

    Json to_json() const;
};

struct RunOptions {
    int precision = 6;
    int max_degree = 4;
    bool timing = false;
};

// case: p3n2, p2n2, honda (p), central (n), exotic (p). Throws InvalidArgument / UnknownTag on bad input.
Report shift_report(const std::string& case_tag, int p, int n, const RunOptions& opt = {});
// suite: all or one of suite_names().
Report verify_report(const std::string& suite, const RunOptions& opt = {});
// what: chartable (group), cohdims (group, p, maxdeg), psi (case, p, rep).
// Groups: q8, g12, g24, c<k>, c<a>xc<b>, honda (with p).
Report dump_report(const std::string& what, const std::string& group, const std::string& case_tag, int p,
                   const std::string& rep, int maxdeg, const RunOptions& opt = {});

FiniteGroup group_from_tag(const std::string& tag, int p = 0);
CaseData case_from_tag(const std::string& tag, int p, int precision = 6);

}  // namespace swdual
