#include "swdual/error.hpp"
#include "swdual/report.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

using namespace swdual;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kInternal = 3 };

struct Args {
    std::string format = "text";
    std::string out;
    bool timing = false;
    int precision = 6;
    int max_degree = 4;

    std::string case_tag, suite = "all", what, group, rep = "regular";
    int p = 0, n = 0, maxdeg = -1;
};

int emit(const Report& r, const Args& a) {
    const Json j = r.to_json();
    if (a.format == "json") std::cout << j.dump(2) << "\n";
    else std::cout << r.text;
    if (!a.out.empty()) {
        std::ofstream f(a.out);
        if (!f) {
            std::cerr << "cannot write " << a.out << "\n";
            return kUsage;
        }
        f << j.dump(2) << "\n";
    }
    return r.pass ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    Args a;
    CLI::App app{"Duality shifts for finite subgroups of Morava stabilizer groups, with exact verification suites"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", a.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", a.out, "Also write the JSON report to this path");
    app.add_flag("--timing", a.timing, "Record wall-clock time per step in the report");
    app.add_option("--precision", a.precision, "p-adic precision N for O_n / p^N")->check(CLI::Range(2, 12));
    app.add_option("--max-degree", a.max_degree, "Cap on bar cohomology degrees")->check(CLI::Range(0, 8));

    auto* shift = app.add_subcommand("shift", "Compute a duality shift");
    shift->add_option("--case", a.case_tag, "p3n2, p2n2, honda, central, exotic")
        ->required()
        ->check(CLI::IsMember({"p3n2", "p2n2", "honda", "central", "exotic"}));
    shift->add_option("--p", a.p, "Prime for the honda and exotic cases");
    shift->add_option("--n", a.n, "Height for the central case");

    auto* verify = app.add_subcommand("verify", "Run verification suites");
    std::vector<std::string> suites{"all"};
    for (const auto& s : suite_names()) suites.push_back(s);
    verify->add_option("--suite", a.suite, "all, or one suite")->check(CLI::IsMember(suites));

    auto* dump = app.add_subcommand("dump", "Dump a character table, cohomology dimensions or a psi value");
    dump->add_option("--what", a.what, "chartable, cohdims, psi")->required()->check(CLI::IsMember({"chartable", "cohdims", "psi"}));
    dump->add_option("--group", a.group, "q8, g12, g24, c<k>, c<a>xc<b>, honda");
    dump->add_option("--case", a.case_tag, "p3n2, p2n2, honda");
    dump->add_option("--p", a.p, "Prime");
    dump->add_option("--maxdeg", a.maxdeg, "Top cohomology degree");
    dump->add_option("--rep", a.rep, "Named representation (regular, V, H_ad, ...)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    RunOptions opt{a.precision, a.max_degree, a.timing};
    try {
        if (*shift) return emit(shift_report(a.case_tag, a.p, a.n, opt), a);
        if (*verify) return emit(verify_report(a.suite, opt), a);
        if (a.what == "chartable" && a.group.empty()) throw Error(ErrorKind::InvalidArgument, "chartable needs --group");
        if (a.what == "cohdims" && a.group.empty()) throw Error(ErrorKind::InvalidArgument, "cohdims needs --group");
        if (a.what == "psi" && a.case_tag.empty()) throw Error(ErrorKind::InvalidArgument, "psi needs --case");
        return emit(dump_report(a.what, a.group, a.case_tag, a.p, a.rep, a.maxdeg, opt), a);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind()) {
            case ErrorKind::InvalidArgument:
            case ErrorKind::UnknownTag:
            case ErrorKind::TooLarge:
                return kUsage;
            default:
                return kInternal;
        }
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
}
