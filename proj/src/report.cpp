#include "swdual/report.hpp"

#include "swdual/arith.hpp"
#include "swdual/cohomology.hpp"
#include "swdual/error.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <regex>
#include <sstream>

namespace swdual {

namespace {

using Clock = std::chrono::steady_clock;

class Stopwatch {
public:
    explicit Stopwatch(Report& r, bool on) : r_(r), on_(on), t_(Clock::now()) {}
    void lap(const std::string& step) {
        auto now = Clock::now();
        if (on_) r_.timing.emplace_back(step, std::chrono::duration<double, std::milli>(now - t_).count());
        t_ = now;
    }

private:
    Report& r_;
    bool on_;
    Clock::time_point t_;
};

Json trail_json(const std::vector<TrailStep>& trail) {
    Json a = Json::array();
    for (const auto& s : trail) a.push_back({{"step", s.step}, {"value", s.value}, {"provenance", provenance_name(s.provenance)}});
    return a;
}

std::string real_type_name(RealType t) {
    switch (t) {
        case RealType::Real: return "real";
        case RealType::Complex: return "complex";
        case RealType::Quaternionic: return "quaternionic";
    }
    return "";
}

void require_odd_prime(int p, const std::string& what) {
    if (p < 3 || !is_prime(p)) fail(ErrorKind::InvalidArgument, what + " needs --p set to an odd prime");
}

}  // namespace

Json Report::to_json() const {
    Json j;
    j["command"] = command;
    j["params"] = params;
    Json res = Json::array(), prov = Json::array();
    for (const auto& r : results) {
        Json e;
        e["name"] = r.name;
        e["value"] = r.value;
        if (r.modulus) e["modulus"] = *r.modulus;
        e["provenance"] = r.provenance;
        e["trail"] = trail_json(r.trail);
        res.push_back(e);
        prov.push_back({{"result", r.name}, {"provenance", r.provenance}});
    }
    j["results"] = res;
    j["provenance"] = prov;
    Json t = Json::object();
    for (const auto& [k, v] : timing) t[k] = std::round(v * 1000) / 1000;
    j["timing_ms"] = t;
    j["pass"] = pass;
    return j;
}

FiniteGroup group_from_tag(const std::string& tag, int p) {
    std::smatch m;
    if (tag == "q8") return make_quaternion8();
    if (tag == "g12") return make_g12();
    if (tag == "g24") return make_g24();
    if (tag == "honda") {
        require_odd_prime(p, "group honda");
        return make_metacyclic(p, (p - 1) * (p - 1), primitive_root(p));
    }
    static const std::regex cyc("c([0-9]+)"), prod("c([0-9]+)xc([0-9]+)");
    if (std::regex_match(tag, m, cyc)) {
        const int k = std::stoi(m[1]);
        if (k < 1 || k > FiniteGroup::kMaxOrder) fail(ErrorKind::InvalidArgument, "cyclic order out of range");
        return make_cyclic(k);
    }
    if (std::regex_match(tag, m, prod)) {
        const int a = std::stoi(m[1]), b = std::stoi(m[2]);
        if (a < 1 || b < 1 || a * b > FiniteGroup::kMaxOrder) fail(ErrorKind::InvalidArgument, "product order out of range");
        return make_direct_product(make_cyclic(a, "a"), make_cyclic(b, "b"));
    }
    fail(ErrorKind::UnknownTag, "unknown group " + tag + " (q8, g12, g24, c<k>, c<a>xc<b>, honda)");
}

CaseData case_from_tag(const std::string& tag, int p, int precision) {
    if (tag == "p3n2") return make_case_p3n2();
    if (tag == "p2n2") return make_case_p2n2();
    if (tag == "honda") {
        require_odd_prime(p, "case honda");
        return make_case_honda(p, precision);
    }
    fail(ErrorKind::UnknownTag, "unknown case " + tag + " (p3n2, p2n2, honda)");
}

Report shift_report(const std::string& case_tag, int p, int n, const RunOptions& opt) {
    Report r;
    r.command = "shift";
    r.params["case"] = case_tag;
    Stopwatch sw(r, opt.timing);
    ShiftResult s;
    if (case_tag == "central") {
        if (n < 1) fail(ErrorKind::InvalidArgument, "case central needs --n >= 1");
        r.params["n"] = n;
        s = central_case_shift(n);
    } else if (case_tag == "exotic") {
        require_odd_prime(p, "case exotic");
        r.params["p"] = p;
        s = exotic_picard_shift(p);
    } else {
        if (case_tag == "honda") {
            r.params["p"] = p;
            r.params["precision"] = opt.precision;
        }
        CaseData c = case_from_tag(case_tag, p, opt.precision);
        sw.lap("case data");
        s = sw_shift(c);
    }
    sw.lap("shift");
    const std::string prov = s.paper_inputs() ? "paper-input" : "computed";
    ResultEntry e{"shift", s.shift, std::nullopt, prov, s.trail};
    if (s.period) e.modulus = s.period;
    r.results.push_back(e);
    r.results.push_back({"signed_shift", s.signed_form, e.modulus, prov, {}});
    if (s.period) r.results.push_back({"period", s.period, std::nullopt, "computed", {}});

    std::ostringstream os;
    os << s.name << ": D(E^hF) = Sigma^" << s.signed_form << " E^hF";
    if (s.period) os << "  (shift " << s.shift << " mod " << s.period << ")";
    os << "\n";
    for (const auto& t : s.trail) {
        os << "  [" << provenance_name(t.provenance) << "] " << t.step;
        if (!t.value.empty()) os << " : " << t.value;
        os << "\n";
    }
    r.text = os.str();
    return r;
}

Report verify_report(const std::string& suite, const RunOptions& opt) {
    Report r;
    r.command = "verify";
    r.params["suite"] = suite;
    r.params["precision"] = opt.precision;
    r.params["max_degree"] = opt.max_degree;
    VerifyConfig cfg;
    cfg.precision = opt.precision;
    cfg.max_degree = opt.max_degree;
    r.params["seed"] = cfg.seed;
    std::vector<std::string> suites;
    if (suite == "all") suites = suite_names();
    else {
        bool known = false;
        for (auto& s : suite_names()) known = known || s == suite;
        if (!known) fail(ErrorKind::UnknownTag, "unknown suite " + suite);
        suites = {suite};
    }
    std::ostringstream os;
    const CheckItem* first = nullptr;
    std::vector<SuiteReport> reports;
    for (const auto& s : suites) reports.push_back(run_suite(s, cfg));
    for (const auto& rep : reports)
        for (const auto& it : rep.items) {
            Json v = {{"pass", it.pass}, {"detail", it.detail}};
            if (!it.pass) v["counterexample"] = it.counterexample;
            r.results.push_back({it.name, v, std::nullopt, "computed", {}});
            if (opt.timing) r.timing.emplace_back(it.name, it.ms);
            os << (it.pass ? "PASS " : "FAIL ") << it.name << "  " << it.detail;
            if (!it.pass) os << "\n     counterexample: " << it.counterexample;
            os << "\n";
            if (!it.pass && !first) first = &it;
            r.pass = r.pass && it.pass;
        }
    if (first)
        r.results.push_back({"first_counterexample", Json{{"item", first->name}, {"counterexample", first->counterexample}},
                             std::nullopt, "computed", {}});
    os << (r.pass ? "all checks passed" : "verification failed") << "\n";
    r.text = os.str();
    return r;
}

Report dump_report(const std::string& what, const std::string& group, const std::string& case_tag, int p,
                   const std::string& rep, int maxdeg, const RunOptions& opt) {
    Report r;
    r.command = "dump";
    r.params["what"] = what;
    Stopwatch sw(r, opt.timing);
    std::ostringstream os;
    if (what == "chartable") {
        r.params["group"] = group;
        if (group == "honda") r.params["p"] = p;
        CharacterTable T(group_from_tag(group, p));
        sw.lap("character table");
        const FiniteGroup& G = T.group();
        Json cls = Json::array();
        for (const auto& c : G.classes())
            cls.push_back({{"rep", G.name(c.rep)}, {"size", c.size}, {"order", c.order}});
        r.results.push_back({"classes", cls, std::nullopt, "computed", {}});
        os << "group " << group << " of order " << G.order() << ", " << T.num_classes() << " classes, values in Z[z"
           << T.exponent() << "] (computed mod " << T.prime_used() << ")\n";
        os << "classes:";
        for (const auto& c : G.classes()) os << "  " << G.name(c.rep) << "[" << c.size << "]";
        os << "\n";
        for (int i = 0; i < T.num_classes(); ++i) {
            Json vals = Json::array();
            for (const auto& x : T.irreducibles()[i]) vals.push_back(x.str());
            r.results.push_back({"chi" + std::to_string(i), vals, std::nullopt, "computed", {}});
            os << "chi" << i << " (dim " << T.dim(i) << "): " << T.show(T.irreducibles()[i]) << "\n";
        }
        Json reals = Json::array();
        for (const auto& R : T.real_irreducibles())
            reals.push_back({{"name", R.name}, {"type", real_type_name(R.type)}, {"dim", R.dim}, {"complex", R.complex_index}});
        r.results.push_back({"real_irreducibles", reals, std::nullopt, "computed", {}});
        os << "real irreducibles:";
        for (const auto& R : T.real_irreducibles()) os << "  " << R.name << "(" << R.dim << ", " << real_type_name(R.type) << ")";
        os << "\n";
    } else if (what == "cohdims") {
        r.params["group"] = group;
        r.params["p"] = p;
        const int D = maxdeg >= 0 ? maxdeg : opt.max_degree;
        r.params["maxdeg"] = D;
        if (p < 2 || !is_prime(p)) fail(ErrorKind::InvalidArgument, "cohdims needs --p set to a prime");
        if (D > opt.max_degree) fail(ErrorKind::InvalidArgument, "--maxdeg exceeds the --max-degree cap");
        auto dims = bar_cohomology(group_from_tag(group, group == "honda" ? p : 0), p, D);
        sw.lap("bar cohomology");
        r.results.push_back({"dims", dims, std::nullopt, "computed", {}});
        os << "H^k(" << group << "; F_" << p << ") for k = 0.." << D << ":";
        for (int d : dims) os << " " << d;
        os << "\n";
    } else if (what == "psi") {
        r.params["case"] = case_tag;
        if (case_tag == "honda") r.params["p"] = p;
        const std::string name = rep.empty() || rep == "regular" ? "rho" : rep;
        r.params["rep"] = name;
        CaseData c = case_from_tag(case_tag, p, opt.precision);
        sw.lap("case data");
        PsiValue v = psi(c, c.named_class(name));
        sw.lap("psi");
        Json val = Json::array({v.dim});
        if (v.w1) val.push_back(*v.w1);
        val.push_back(signed_residue(v.torsion, v.modulus));
        std::vector<TrailStep> trail{{"dim from the character at 1", std::to_string(v.dim), Provenance::Computed}};
        if (v.w1) trail.push_back({"w1 from the determinant character", std::to_string(*v.w1), Provenance::Computed});
        trail.push_back({c.torsion_name + " mod " + std::to_string(v.modulus), std::to_string(v.torsion), Provenance::Computed});
        const std::string prov = c.lambda ? "paper-input" : "computed";
        if (c.lambda)
            for (const auto& sd : c.lambda->seeds) trail.push_back({sd.description, std::to_string(sd.value), Provenance::PaperInput});
        r.results.push_back({"psi(" + name + ")", val, v.modulus, prov, trail});
        os << "psi(" << name << ") = " << v.str() << " in Z" << (v.w1 ? " + Z/2" : "") << " + Z/" << v.modulus << "\n";
    } else {
        fail(ErrorKind::UnknownTag, "unknown dump target " + what + " (chartable, cohdims, psi)");
    }
    r.text = os.str();
    return r;
}

}  // namespace swdual
