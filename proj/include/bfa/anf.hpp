#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "bfa/truth_table.hpp"

namespace bfa {

// Algebraic normal form: a set of monomials over F2, each monomial a bitmask
// of variable indices (bit i = variable x_{i+1}; the empty mask is the
// constant term 1). Coefficients live in F2, so addition is symmetric
// difference of the monomial sets. The zero function is the empty set.
class Anf {
public:
    explicit Anf(int nvars);
    // Monomial list is canonicalized: sorted, duplicates cancel in pairs.
    Anf(int nvars, std::vector<std::uint32_t> monomials);

    static Anf zero(int nvars) { return Anf(nvars); }
    static Anf constant_one(int nvars) { return Anf(nvars, {0u}); }
    static Anf variable(int nvars, int index);

    int vars() const { return n_; }
    const std::vector<std::uint32_t>& monomials() const { return monos_; }

    // Max monomial size; 0 for both constants (is_zero disambiguates).
    int degree() const;
    bool is_zero() const { return monos_.empty(); }
    bool is_constant() const { return monos_.empty() || (monos_.size() == 1 && monos_[0] == 0); }
    bool constant_term() const { return !monos_.empty() && monos_[0] == 0; }

    bool contains(std::uint32_t monomial) const;
    bool evaluate(std::uint32_t x) const;

    // OR of all monomial masks: the variables the function actually uses.
    std::uint32_t support() const;
    int support_size() const;

    Anf operator+(const Anf& other) const;  // XOR of coefficient sets
    Anf operator*(const Anf& other) const;  // product in F2[x]/(x_i^2 = x_i)

    // Same function with every variable index shifted up by `offset`,
    // declared on nvars + offset variables.
    Anf shifted(int offset) const;

    // Restriction to the variables actually used, remapped to 1..s in order.
    // Constants stay declared on one variable.
    Anf compacted() const;

    // Split f = x_p * g + h: g = cofactor of the pivot variable (1-based),
    // h = monomials avoiding it. Both are returned on n-1 variables with the
    // remaining indices compacted in order.
    std::pair<Anf, Anf> pivot_split(int pivot) const;

    // Monomials filtered to an exact degree.
    Anf homogeneous_part(int deg) const;

    TruthTable to_table() const;
    static Anf from_table(const TruthTable& t);

    bool operator==(const Anf&) const = default;

private:
    int n_;
    std::vector<std::uint32_t> monos_;
};

// g(x_1..x_s) + h(x_{s+1}..x_{s+m}) on s+m variables.
Anf direct_sum(const Anf& g, const Anf& h);

// (x_1...x_m) g' + (1 + x_1...x_m) h' on m+n variables, where g' and h' are
// g and h shifted to variables m+1..m+n. For m=1 this is the convolutional
// product.
Anf conv_product(const Anf& g, const Anf& h, int m);

}  // namespace bfa
