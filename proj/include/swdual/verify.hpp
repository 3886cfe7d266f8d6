#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace swdual {

// Size caps and sampling parameters shared by the suites. Overridden only through explicit arguments.
struct VerifyConfig {
    int precision = 6;          // N in O_n / p^N
    int max_degree = 4;         // cap for bar cohomology degrees
    uint64_t seed = 0x5eed;     // fixed sampling seed
    int lattice_samples = 200;
    int frobenius_samples = 100;  // per subgroup inclusion
    int exp_samples = 100;
};

struct CheckItem {
    std::string name;
    bool pass = false;
    std::string detail;
    std::string counterexample;  // empty when the check passes
    double ms = 0;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckItem> items;  // sorted by name
    bool pass() const;
    const CheckItem* first_failure() const;
};

// units, cohomology, wu, reps, lattice, order
const std::vector<std::string>& suite_names();

// Throws UnknownTag for an unrecognized suite.
SuiteReport run_suite(const std::string& suite, const VerifyConfig& cfg = {});

}  // namespace swdual
