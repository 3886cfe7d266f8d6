#pragma once

#include "swdual/error.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace swdual {

struct ConjClass {
    int rep;                 // least element index in the class
    int size;
    int order;               // element order
    std::vector<int> elements;
};

// A finite group given by its multiplication table. Element 0 is the identity.
class FiniteGroup {
public:
    static constexpr int kMaxOrder = 512;

    FiniteGroup() = default;
    // Validates the table exhaustively (identity, inverses, associativity).
    FiniteGroup(std::vector<int> table, int n, std::vector<std::string> names,
                std::vector<std::pair<std::string, int>> generators = {}, std::string label = "");

    int order() const { return n_; }
    int mul(int a, int b) const { return table_[a * n_ + b]; }
    int inv(int a) const { return inv_[a]; }
    int pow(int a, int64_t e) const;
    int conj(int g, int x) const { return mul(mul(g, x), inv_[g]); }  // g x g^-1
    int elem_order(int a) const { return ord_[a]; }
    int exponent() const;
    bool is_abelian() const;
    const std::string& name(int a) const { return names_[a]; }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& label() const { return label_; }
    void set_label(std::string s) { label_ = std::move(s); }
    const std::vector<std::pair<std::string, int>>& generators() const { return gens_; }
    std::optional<int> find(const std::string& name) const;
    const std::vector<int>& table() const { return table_; }

    const std::vector<ConjClass>& classes() const { return classes_; }
    int class_of(int a) const { return class_of_[a]; }
    std::vector<int> center() const;

    std::vector<int> generated_by(const std::vector<int>& gens) const;  // sorted element list
    bool is_subgroup(const std::vector<int>& elems) const;
    bool is_normal(const std::vector<int>& elems) const;

private:
    void compute_classes();
    int n_ = 0;
    std::vector<int> table_, inv_, ord_;
    std::vector<std::string> names_;
    std::vector<std::pair<std::string, int>> gens_;
    std::string label_;
    std::vector<ConjClass> classes_;
    std::vector<int> class_of_;
};

// H realised inside a parent group: embed[h] is the parent index of element h of H.
struct Subgroup {
    FiniteGroup group;
    std::vector<int> embed;
};

Subgroup make_subgroup(const FiniteGroup& G, const std::vector<int>& elems, const std::string& label = "");

FiniteGroup make_cyclic(int k, const std::string& gen = "g");
FiniteGroup make_direct_product(const FiniteGroup& A, const FiniteGroup& B);
// N x| H with h n h^-1 = action[h][n]. action must be a homomorphism H -> Aut(N).
FiniteGroup make_semidirect(const FiniteGroup& N, const FiniteGroup& H, const std::vector<std::vector<int>>& action);
// C_p x| C_m with tau zeta tau^-1 = zeta^e.
FiniteGroup make_metacyclic(int p, int m, int64_t e, const std::string& zeta = "zeta", const std::string& tau = "tau");
FiniteGroup make_quaternion8();
FiniteGroup make_g12();  // C_3 x| C_4, generator of C_4 inverting C_3
FiniteGroup make_g24();  // Q_8 x| C_3, C_3 cycling i -> j -> k

// Builds the group generated by gens under mul, identifying equal elements by key.
template <class E, class Key>
FiniteGroup group_closure(const E& one, const std::vector<std::pair<std::string, E>>& gens,
                          const std::function<E(const E&, const E&)>& mul, const std::function<Key(const E&)>& key,
                          const std::function<std::string(const E&)>& show, std::vector<E>* elements_out = nullptr,
                          const std::string& label = "") {
    std::vector<E> elems{one};
    std::map<Key, int> index{{key(one), 0}};
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (auto& [nm, g] : gens) {
            E x = mul(elems[i], g);
            Key k = key(x);
            if (!index.count(k)) {
                if (static_cast<int>(elems.size()) >= FiniteGroup::kMaxOrder)
                    fail(ErrorKind::TooLarge, "generated group exceeds order cap");
                index[k] = static_cast<int>(elems.size());
                elems.push_back(x);
            }
        }
    }
    const int n = static_cast<int>(elems.size());
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            auto it = index.find(key(mul(elems[a], elems[b])));
            if (it == index.end()) fail(ErrorKind::NotClosed, "product left the generated set");
            table[a * n + b] = it->second;
        }
    std::vector<std::string> names;
    for (auto& e : elems) names.push_back(show(e));
    std::vector<std::pair<std::string, int>> g;
    for (auto& [nm, x] : gens) g.emplace_back(nm, index.at(key(x)));
    if (elements_out) *elements_out = elems;
    return FiniteGroup(std::move(table), n, std::move(names), std::move(g), label);
}

// An isomorphism B -> A (as an index map) if one exists. Uses the generators of B.
std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& A, const FiniteGroup& B);

// Counts of elements of each order, as sorted (order, count) pairs.
std::vector<std::pair<int, int>> order_statistics(const FiniteGroup& G);

}  // namespace swdual
