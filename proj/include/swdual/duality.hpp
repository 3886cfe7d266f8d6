#pragma once

#include "swdual/cases.hpp"

#include <optional>
#include <string>
#include <vector>

namespace swdual {

struct TrailStep {
    std::string step;
    std::string value;
    Provenance provenance = Provenance::Computed;
};

// (dim, w1, torsion) in Z + Z/2 + Z/m; w1 is absent when H^1 vanishes.
struct PsiValue {
    std::string case_tag;
    int64_t dim = 0;
    std::optional<int64_t> w1;
    int64_t torsion = 0;
    int64_t modulus = 1;

    PsiValue operator+(const PsiValue& o) const;
    PsiValue scaled(int64_t k) const;
    bool operator==(const PsiValue& o) const;
    std::string str() const;
};

// Throws WrongGroup if the class does not live over the case's group.
PsiValue psi(const CaseData& c, const std::vector<int64_t>& ro);
PsiValue psi_of_character(const CaseData& c, const ClassFn& chi);

struct Reduction {
    int64_t c = 0;          // least nonnegative residue
    int64_t period = 1;
    int64_t multiple = 0;   // t with psi_W - c(1,0,0) = t psi_rho
};
// Solves psi_W = c (1,0,0) modulo <psi_rho>; the period is the order of the cyclic quotient,
// computed from the Smith form of the relations. Throws NotReducible.
Reduction quotient_reduce(const PsiValue& psi_rho, const PsiValue& psi_W);

struct ShiftResult {
    std::string name;
    int64_t shift = 0;   // least nonnegative residue
    int64_t signed_form = 0;
    int64_t period = 0;  // 0 when the shift is an integer with no period attached
    std::vector<TrailStep> trail;
    int paper_inputs() const;
};

// D(E^{hF}) = Sigma^{-c} E^{hF} where V = c 1 in RO(G)/(I + rho). Throws IncompleteCatalog.
ShiftResult sw_shift(const CaseData& c);
ShiftResult central_case_shift(int n);
ShiftResult exotic_picard_shift(int p);

// Recognized tags: G12 (p3n2), G24 (p2n2), G or H (honda), Cp (honda). Throws UnknownTag.
int64_t period_of(const std::string& case_tag, const std::string& subgroup_tag, int p = 0);

}  // namespace swdual
