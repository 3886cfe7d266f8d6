#pragma once

#include "swdual/characters.hpp"
#include "swdual/cohomology.hpp"
#include "swdual/polynomial.hpp"

#include <string>
#include <vector>

namespace swdual {

enum class Provenance { Computed, PaperInput, CitedRule };
const char* provenance_name(Provenance p);

// Total Chern class of a sum of lines C(m_i) on C_k, as coefficients of z0^j in Z/k.
struct ChernData {
    int64_t k = 1;
    std::vector<int64_t> c;  // c[0] = 1, c[j] = c_j mod k
    int64_t c_at(std::size_t j) const { return j < c.size() ? c[j] : 0; }
};
ChernData chern_on_cyclic(int64_t k, const std::vector<int64_t>& multipliers);

// A real representation of C_k read off from the eigenvalue multiplicities of a generator:
// trivial lines, sign lines, and one complex structure on the rest.
struct CyclicRealSplit {
    int64_t k = 1;
    int64_t trivial = 0;
    int64_t sign = 0;
    std::vector<int64_t> lines;  // multipliers m with 0 < m < k/2, with repetition
};
// Throws NotAClassFunction if the multiplicities are not those of a real representation.
CyclicRealSplit split_real_cyclic(const std::vector<int64_t>& eig_mult);

struct LambdaCyclic {
    int64_t k = 1;
    int64_t value = 0;                 // lambda as a multiple of z0^2 in Z/k
    std::vector<int64_t> d_choices;    // admissible d with 2d = c1
    std::vector<int64_t> values;       // lambda for each choice
};
// lambda = d c1 - c2 for a complex representation given by its line multipliers.
// Throws NotSpinnable, SpinAmbiguity.
LambdaCyclic lambda_on_cyclic(int64_t k, const std::vector<int64_t>& multipliers);
// Same for a real representation: trivial lines are dropped and sign lines are paired.
LambdaCyclic lambda_of_real_on_cyclic(const std::vector<int64_t>& eig_mult);

// ch_k = sum m^k / k! over the line multipliers, mod p. The real version halves the
// complexification. Throws IndexOutOfRange when k >= p.
int64_t chern_character_complex(const std::vector<int64_t>& eig_mult, int k, int64_t p);
int64_t chern_character_real(const std::vector<int64_t>& eig_mult, int k, int64_t p);

// Restriction of chi to the cyclic group generated by g, as eigenvalue multiplicities.
std::vector<int64_t> cyclic_restriction(const CharacterTable& T, const ClassFn& chi, int g);

struct LambdaEntry {
    std::string irrep;
    int64_t value = 0;
    Provenance provenance = Provenance::Computed;
};

struct LambdaSeed {
    std::vector<int64_t> coeffs;  // in RO(G)
    int64_t value = 0;
    std::string description;
};

struct LambdaDetector {
    std::string name;
    int element = 0;  // generator of the cyclic detector in G
};

struct LambdaTable {
    TablePtr table;
    std::string generator;     // name of the generator of the torsion group
    int64_t order = 1;
    std::vector<LambdaEntry> entries;
    std::vector<LambdaSeed> seeds;
    std::vector<std::vector<int64_t>> relations;  // kernel of restriction to the Sylow subgroup
    int detector_checks = 0;
};

// Solves for lambda on every real irreducible of G in Z/order from: additivity, lambda(1) = 0,
// injectivity of restriction to the Sylow subgroup H, and the seeds. Every entry is checked
// against the cyclic detectors modulo their order. Throws IncompleteTable.
LambdaTable build_lambda_table(const TablePtr& G, const CharacterTable& H, const std::vector<int>& embed,
                               int64_t order, const std::string& generator, const std::vector<LambdaSeed>& seeds,
                               const std::vector<LambdaDetector>& detectors);
int64_t lambda_on_group(const LambdaTable& T, const std::vector<int64_t>& coeffs);
// lambda of a class on a subgroup H of odd index, through a preimage under restriction.
int64_t lambda_via_restriction(const LambdaTable& T, const CharacterTable& H, const std::vector<int>& embed,
                               const std::vector<int64_t>& coeffs_H);

// Restriction of real representation classes: rows are the images of the real irreducibles of G.
std::vector<std::vector<int64_t>> real_restriction_matrix(const CharacterTable& G, const CharacterTable& H,
                                                          const std::vector<int>& embed);

// Total Stiefel-Whitney class in the mod 2 bar model, by components of degree 0..maxdeg.
// Real lines contribute 1 + w1 and complex lines 1 + (c1 mod 2). Throws NoDecomposition.
std::vector<CohClass> total_sw(const BarModelPtr& M, const CharacterTable& T, const std::vector<int64_t>& coeffs);

struct WuResult {
    bool holds = false;
    int r = 0, m = 0;
    MPoly q_in_e;    // q_n in the elementary symmetric polynomials
    MPoly reduced;   // after e_1 = ... = e_{m-1} = 0
    MPoly target;    // (-1)^{n(r+1)} r e_m
};
// Throws TooManyVariables when rn > 8, InvalidArgument for even p.
WuResult wu_congruence_check(int p, int n);

}  // namespace swdual
