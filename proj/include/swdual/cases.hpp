#pragma once

#include "swdual/char_classes.hpp"
#include "swdual/characters.hpp"
#include "swdual/struct_order.hpp"
#include "swdual/truncated_on.hpp"

#include <optional>
#include <string>
#include <vector>

namespace swdual {

// Conjugation action of a unit group on a lattice, with its character and RO(G) class.
struct ConjugationRep {
    std::vector<IntMatrix> matrices;  // one per group element, row convention
    ClassFn character;
    std::vector<int64_t> ro;
};

// The unit group must be the group of T. Throws NotStable if a matrix is not integral.
ConjugationRep conjugation_rep(const StructOrder& O, const UnitGroup& U, const CharacterTable& T,
                               const RatMatrix& lattice_basis);
ConjugationRep conjugation_rep_from_matrices(const CharacterTable& T, std::vector<IntMatrix> matrices);

// The three finite-group settings behind the duality shifts.
struct CaseData {
    std::string tag;  // p3n2, p2n2, honda
    int p = 0, n = 0;
    TablePtr table;
    std::string torsion_name;     // lambda or ch_n
    int64_t torsion_modulus = 1;  // 3, 8 or p
    bool has_w1 = true;
    int ell = 0;                  // height of the connective cover in the filtration
    int w1_detector = -1;         // generator of the 2-part detector, -1 if w1 is not used
    int torsion_detector = -1;    // generator of the cyclic torsion detector
    std::vector<IntMatrix> v_matrices;
    std::vector<std::string> v_basis;
    ClassFn rho, V;
    std::optional<LambdaTable> lambda;
    std::vector<std::pair<std::string, std::vector<int64_t>>> named;  // named classes in RO(G)
    // Extra data by case.
    std::optional<UnitGroup> units;
    std::optional<StructOrder> order;
    std::optional<ZetaTau> zeta_tau;
    int64_t e = 0;  // honda: tau zeta tau^-1 = zeta^e

    std::vector<int64_t> ro(const ClassFn& chi) const { return table->decompose_real(chi); }
    const std::vector<int64_t>& named_class(const std::string& name) const;
};

CaseData make_case_p3n2();
CaseData make_case_p2n2();
// Requires p odd prime, n = p - 1, precision N >= 2.
CaseData make_case_honda(int p, int precision = 6);

// Real irreducible names for Q8 (1, chi_i, chi_j, chi_k, H) given the elements playing i and j.
std::vector<std::string> quaternion_real_names(const CharacterTable& T, int i, int j);

// The summands of the regular representation of C_p x| C_{n^2} in the form
// 1 + sigma + lambda_1..lambda_{(n^2-2)/2} + Lambda_1..Lambda_{n/2}.
struct RegularSummands {
    std::vector<std::string> names;
    std::vector<ClassFn> characters;
};
RegularSummands honda_regular_summands(const CaseData& c);

// The Z_p[zeta]-lattice spanned by zeta^a tau^j inside O_n, checked against the omega^i S^k basis.
struct HondaLatticeCheck {
    int dim = 0;
    BigInt det_mod;              // determinant of the coordinate matrix mod p^N
    int det_valuation = 0;
    int identities_checked = 0;  // conjugation identities verified in O_n
    bool stable = false;
};
HondaLatticeCheck verify_honda_lattice(const TruncatedOn& R, const ZetaTau& zt);

}  // namespace swdual
