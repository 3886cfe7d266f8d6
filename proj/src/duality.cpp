#include "swdual/duality.hpp"

#include "swdual/arith.hpp"
#include "swdual/error.hpp"
#include "swdual/matrix.hpp"

#include <sstream>

namespace swdual {

PsiValue PsiValue::operator+(const PsiValue& o) const {
    if (case_tag != o.case_tag || modulus != o.modulus || w1.has_value() != o.w1.has_value())
        fail(ErrorKind::WrongGroup, "psi values from different cases");
    PsiValue r = *this;
    r.dim += o.dim;
    if (w1) r.w1 = mod(*w1 + *o.w1, 2);
    r.torsion = mod(torsion + o.torsion, modulus);
    return r;
}

PsiValue PsiValue::scaled(int64_t k) const {
    PsiValue r = *this;
    r.dim *= k;
    if (w1) r.w1 = mod(*w1 * k, 2);
    r.torsion = mod(torsion * k, modulus);
    return r;
}

bool PsiValue::operator==(const PsiValue& o) const {
    return case_tag == o.case_tag && dim == o.dim && w1 == o.w1 && torsion == o.torsion && modulus == o.modulus;
}

std::string PsiValue::str() const {
    std::ostringstream os;
    os << "(" << dim;
    if (w1) os << ", " << *w1;
    os << ", " << signed_residue(torsion, modulus) << ")";
    return os.str();
}

namespace {

int64_t torsion_of_irreducible(const CaseData& c, int k) {
    const CharacterTable& T = *c.table;
    const ClassFn& chi = T.real_irreducibles()[k].character;
    if (c.tag == "p2n2") {
        if (!c.lambda) fail(ErrorKind::IncompleteTable, "lambda table missing");
        return c.lambda->entries[k].value;
    }
    auto mult = cyclic_restriction(T, chi, c.torsion_detector);
    if (c.tag == "p3n2") return lambda_of_real_on_cyclic(mult).value;
    if (c.tag == "honda") return chern_character_real(mult, c.n, c.p);
    fail(ErrorKind::WrongGroup, "unknown case " + c.tag);
}

}  // namespace

PsiValue psi(const CaseData& c, const std::vector<int64_t>& ro) {
    const CharacterTable& T = *c.table;
    if (ro.size() != T.real_irreducibles().size()) fail(ErrorKind::WrongGroup, "class is not over the group of case " + c.tag);
    PsiValue v;
    v.case_tag = c.tag;
    v.modulus = c.torsion_modulus;
    ClassFn chi = T.real_character(ro);
    v.dim = *chi[0].as_integer();
    if (c.has_w1) {
        ClassFn d = T.det(chi);
        int64_t a = 0;
        for (const auto& x : d)
            if (x != Cyclo(T.exponent(), 1)) a = 1;
        v.w1 = a;
    }
    int64_t t = 0;
    for (std::size_t k = 0; k < ro.size(); ++k)
        if (ro[k]) t = mod(t + mod(ro[k], c.torsion_modulus) * torsion_of_irreducible(c, static_cast<int>(k)), c.torsion_modulus);
    v.torsion = t;
    return v;
}

PsiValue psi_of_character(const CaseData& c, const ClassFn& chi) {
    if (static_cast<int>(chi.size()) != c.table->num_classes()) fail(ErrorKind::WrongGroup, "character length");
    return psi(c, c.table->decompose_real(chi));
}

Reduction quotient_reduce(const PsiValue& rho, const PsiValue& W) {
    if (rho.case_tag != W.case_tag || rho.modulus != W.modulus || rho.w1.has_value() != W.w1.has_value())
        fail(ErrorKind::WrongGroup, "psi values from different cases");
    const bool w = rho.w1.has_value();
    const int64_t m = rho.modulus;
    const std::size_t k = w ? 3 : 2;
    IntMatrix Rel(k, k);
    Rel(0, 0) = rho.dim;
    if (w) {
        Rel(0, 1) = *rho.w1;
        Rel(1, 1) = 2;
    }
    Rel(0, k - 1) = rho.torsion;
    Rel(k - 1, k - 1) = m;
    SmithResult s = smith_normal_form(Rel);
    auto inv = s.invariants();
    if (inv.size() != k) fail(ErrorKind::NotReducible, "quotient is infinite");
    BigInt per = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (i + 1 < k && inv[i] != 1) fail(ErrorKind::NotReducible, "quotient is not cyclic");
        per *= inv[i];
    }
    Reduction r;
    r.period = static_cast<int64_t>(per);

    // The unit class (1, 0, 0) must generate: its order is dim(rho) times the order of rho's torsion part.
    const int64_t L = w ? lcm64(2, m) : m;
    int64_t ord = 0;
    for (int64_t t = 1; t <= L && !ord; ++t)
        if ((!w || mod(t * *rho.w1, 2) == 0) && mod(t * rho.torsion, m) == 0) ord = t;
    if (ord * rho.dim != r.period) fail(ErrorKind::NotReducible, "the trivial line does not generate the quotient");

    for (int64_t t = 0; t < L; ++t) {
        if (w && mod(t * *rho.w1 - *W.w1, 2) != 0) continue;
        if (mod(t * rho.torsion - W.torsion, m) != 0) continue;
        r.multiple = t;
        r.c = mod(W.dim - t * rho.dim, r.period);
        return r;
    }
    fail(ErrorKind::NotReducible, "psi(W) is not congruent to a multiple of the trivial line");
}

int ShiftResult::paper_inputs() const {
    int k = 0;
    for (auto& s : trail) k += s.provenance == Provenance::PaperInput;
    return k;
}

ShiftResult sw_shift(const CaseData& c) {
    if (c.tag != "p3n2" && c.tag != "p2n2" && c.tag != "honda") fail(ErrorKind::IncompleteCatalog, "unknown case " + c.tag);
    if (c.tag == "p2n2" && !c.lambda) fail(ErrorKind::IncompleteCatalog, "lambda table missing");
    if (c.V.empty() || c.rho.empty()) fail(ErrorKind::IncompleteCatalog, "case data incomplete");
    ShiftResult out;
    out.name = c.tag == "honda" ? "honda p=" + std::to_string(c.p) : c.tag;
    auto& tr = out.trail;
    const std::string G = c.table->group().label().empty() ? "G" : c.table->group().label();
    tr.push_back({"group " + G + " of order " + std::to_string(c.table->group().order()) + ", character table with " +
                      std::to_string(c.table->num_classes()) + " classes",
                  std::to_string(c.table->group().order()), Provenance::Computed});
    if (c.lambda) {
        for (auto& sd : c.lambda->seeds) tr.push_back({sd.description, std::to_string(sd.value), Provenance::PaperInput});
        std::string comp;
        for (auto& e : c.lambda->entries)
            comp += (comp.empty() ? "" : ", ") + e.irrep + "=" + std::to_string(e.value) + " [" + provenance_name(e.provenance) + "]";
        tr.push_back({"lambda table over Z/8 from restriction to Q8 and " + std::to_string(c.lambda->detector_checks) +
                          " detector checks on C4",
                      comp, Provenance::Computed});
    }
    tr.push_back({"psi is injective on RO(G)/I for this filtration (ell = " + std::to_string(c.ell) + ")", "",
                  Provenance::CitedRule});
    PsiValue pr = psi_of_character(c, c.rho);
    PsiValue pv = psi_of_character(c, c.V);
    tr.push_back({"psi(rho) from dim, det and " + c.torsion_name + " on the detector", pr.str(), Provenance::Computed});
    tr.push_back({"psi(V) from the conjugation matrices", pv.str(), Provenance::Computed});
    tr.push_back({"the regular representation maps to the trivial Picard element", "", Provenance::CitedRule});
    tr.push_back({"the composite through the connective cover vanishes", "", Provenance::CitedRule});
    Reduction red = quotient_reduce(pr, pv);
    tr.push_back({"period from the Smith form of the relations", std::to_string(red.period), Provenance::Computed});
    tr.push_back({"V = c * 1 with c = dim V - t dim rho, t = " + std::to_string(red.multiple), std::to_string(red.c),
                  Provenance::Computed});
    tr.push_back({"D(E^hF) = (S^-V smash E)^hF, so the shift is -c", "", Provenance::CitedRule});
    out.period = red.period;
    out.shift = mod(-red.c, red.period);
    out.signed_form = c.tag == "honda" && out.shift > 0 ? out.shift - out.period : out.shift;
    tr.push_back({"shift", std::to_string(out.shift) + " mod " + std::to_string(out.period), Provenance::Computed});
    return out;
}

ShiftResult central_case_shift(int n) {
    if (n < 1) fail(ErrorKind::InvalidArgument, "n must be positive");
    ShiftResult out;
    out.name = "central n=" + std::to_string(n);
    out.shift = -static_cast<int64_t>(n) * n;
    out.signed_form = out.shift;
    out.period = 0;
    out.trail.push_back({"a central subgroup acts trivially on the Gross-Hopkins dualizing object", "", Provenance::CitedRule});
    out.trail.push_back({"shift = -dim of the adjoint representation = -n^2", std::to_string(out.shift), Provenance::Computed});
    return out;
}

ShiftResult exotic_picard_shift(int p) {
    if (p < 3 || !is_prime(p)) fail(ErrorKind::InvalidArgument, "p must be an odd prime");
    const int64_t n = p - 1, P = 2LL * p * p;
    ShiftResult out;
    out.name = "exotic p=" + std::to_string(p);
    out.period = P;
    const int64_t d = mod(-n * n * (1 + 2LL * p), P);
    ensure(d == mod(-(static_cast<int64_t>(p) * p + 1), P), "-n^2(1+2p) = -(p^2+1) mod 2p^2 failed");
    out.trail.push_back({"E^hC_p has period 2p^2", std::to_string(P), Provenance::CitedRule});
    out.trail.push_back({"D(E^hC_p) = Sigma^{-n^2(1+2p)}, reduced mod 2p^2 to -(p^2+1)", std::to_string(d), Provenance::Computed});
    out.trail.push_back({"I_n(E^hF) = Sigma^{n^2} E^hF", std::to_string(n * n), Provenance::PaperInput});
    out.trail.push_back({"the determinant sphere contributes S^{n^2-n}", std::to_string(n * n - n), Provenance::PaperInput});
    out.shift = mod(n * n - (n * n - n) - d, P);
    out.signed_form = out.shift;
    ensure(out.shift == mod(static_cast<int64_t>(p) * p + p, P), "exotic shift differs from p^2+p");
    out.trail.push_back({"n^2 - (n^2 - n) + (p^2 + 1)", std::to_string(out.shift) + " mod " + std::to_string(P), Provenance::Computed});
    return out;
}

int64_t period_of(const std::string& case_tag, const std::string& subgroup_tag, int p) {
    if (case_tag == "p3n2" && subgroup_tag == "G12") return sw_shift(make_case_p3n2()).period;
    if (case_tag == "p2n2" && subgroup_tag == "G24") return sw_shift(make_case_p2n2()).period;
    if (case_tag == "honda") {
        if (subgroup_tag == "Cp") {
            if (p < 3 || !is_prime(p)) fail(ErrorKind::InvalidArgument, "p must be an odd prime");
            return 2LL * p * p;
        }
        if (subgroup_tag == "G" || subgroup_tag == "H") return sw_shift(make_case_honda(p)).period;
    }
    fail(ErrorKind::UnknownTag, "no period recorded for " + case_tag + "/" + subgroup_tag);
}

}  // namespace swdual
