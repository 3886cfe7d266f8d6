#include "doctest.h"

#include "swdual/error.hpp"
#include "swdual/report.hpp"

#include <functional>

using namespace swdual;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::InternalInvariant;
}

const Json& result(const Json& j, const std::string& name) {
    for (const auto& r : j["results"])
        if (r["name"] == name) return r;
    FAIL("missing result " << name);
    return j;
}

}  // namespace

TEST_CASE("shift reports") {
    Json a = shift_report("p3n2", 0, 0).to_json();
    CHECK(a["command"] == "shift");
    CHECK(result(a, "shift")["value"] == 44);
    CHECK(result(a, "shift")["modulus"] == 72);
    CHECK(result(a, "shift")["provenance"] == "computed");
    CHECK(a["pass"] == true);

    Json b = shift_report("p2n2", 0, 0).to_json();
    CHECK(result(b, "shift")["modulus"] == 192);
    CHECK(result(b, "shift")["provenance"] == "paper-input");

    Json h = shift_report("honda", 5, 0).to_json();
    CHECK(result(h, "signed_shift")["value"] == -176);
    CHECK(h["params"]["p"] == 5);

    Json c = shift_report("central", 0, 2).to_json();
    CHECK(result(c, "shift")["value"] == -4);
    CHECK_FALSE(result(c, "shift").contains("modulus"));

    Json e = shift_report("exotic", 5, 0).to_json();
    CHECK(result(e, "shift")["value"] == 30);
}

TEST_CASE("JSON output round-trips") {
    for (const auto& r : {shift_report("p3n2", 0, 0), shift_report("honda", 3, 0),
                          dump_report("psi", "", "p3n2", 0, "V", 4)}) {
        const std::string s = r.to_json().dump(2);
        CHECK(Json::parse(s).dump(2) == s);
        CHECK(Json::parse(s) == r.to_json());
    }
}

TEST_CASE("verify report") {
    Report r = verify_report("wu");
    CHECK(r.pass);
    CHECK(r.to_json()["pass"] == true);
    CHECK_FALSE(r.results.empty());
    CHECK(kind_of([] { verify_report("nonsense"); }) == ErrorKind::UnknownTag);
}

TEST_CASE("dump reports") {
    Json t = dump_report("chartable", "g24", "", 0, "", 0).to_json();
    int chis = 0;
    for (const auto& r : t["results"])
        if (r["name"].get<std::string>().rfind("chi", 0) == 0) ++chis;
    CHECK(chis == 7);

    Json d = dump_report("cohdims", "q8", "", 2, "", 4).to_json();
    CHECK(result(d, "dims")["value"] == Json::array({1, 2, 2, 1, 1}));

    Json p = dump_report("psi", "", "honda", 3, "regular", 0).to_json();
    CHECK(result(p, "psi(rho)")["value"] == Json::array({12, 1, -1}));
    CHECK(result(p, "psi(rho)")["modulus"] == 3);
}

TEST_CASE("report errors") {
    CHECK(kind_of([] { shift_report("nope", 0, 0); }) == ErrorKind::UnknownTag);
    CHECK(kind_of([] { shift_report("honda", 4, 0); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { shift_report("central", 0, 0); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { dump_report("cohdims", "s5", "", 2, "", 2); }) == ErrorKind::UnknownTag);
    CHECK(kind_of([] { group_from_tag("g13"); }) == ErrorKind::UnknownTag);
    CHECK(kind_of([] { case_from_tag("honda", 9); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("timing is opt-in") {
    CHECK(shift_report("p3n2", 0, 0).timing.empty());
    CHECK(shift_report("p3n2", 0, 0).to_json()["timing_ms"].empty());
    RunOptions opt;
    opt.timing = true;
    Report r = shift_report("p3n2", 0, 0, opt);
    CHECK_FALSE(r.timing.empty());
    for (const auto& [k, v] : r.timing) CHECK(v >= 0);
}
