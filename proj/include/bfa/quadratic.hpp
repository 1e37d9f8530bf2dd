#pragma once

#include <cstdint>
#include <vector>

#include "bfa/anf.hpp"
#include "bfa/truth_table.hpp"

namespace bfa {

enum class QuadKind { Balanced, UnbalancedPlus, UnbalancedMinus };

// Canonical data of a quadratic function: k pairs x_{2i-1}x_{2i} in the
// reduced form, the balanced/unbalanced(+/-) kind, and dim V(f) = n - 2k.
// Balanced <=> F(f) = 0; Plus <=> F(f) = +2^(n-k); Minus <=> F(f) = -2^(n-k).
struct QuadraticClass {
    int k = 0;
    QuadKind kind = QuadKind::Balanced;
    int dim_v = 0;
};

// Basis of the linear space V(f) = {a : D_a f constant}, together with the
// constant value of D_a f at each basis vector.
struct LinearSpaceBasis {
    std::vector<std::uint32_t> basis;
    std::vector<std::uint8_t> constants;

    int dim() const { return static_cast<int>(basis.size()); }
};

struct BilinearRank {
    int k = 0;                           // rank of the bilinear form is 2k
    std::vector<std::uint32_t> radical;  // basis of its null space
};

// Associated bilinear form of the quadratic part: B[i][j] = coefficient of
// x_{i+1}x_{j+1}, symmetric with zero diagonal. Requires deg(f) <= 2.
BilinearRank bilinear_rank(const Anf& f);

// Generic path scans all 2^n shifts (n <= 12); functions of degree <= 2 use
// the bilinear radical and have no cap below the global one.
LinearSpaceBasis linear_space(const TruthTable& t);

// Requires deg(f) = 2; affine input is rejected with a distinct message.
// Balancedness comes from the radical test, the sign of F(f) from a
// Dickson-style symbolic reduction (no 2^n scan on either path).
QuadraticClass classify_quadratic(const Anf& f);

std::int64_t quadratic_weight(const QuadraticClass& c, int n);
std::int64_t quadratic_nl(const QuadraticClass& c, int n);

// Two quadratics are affine equivalent iff weight and nonlinearity agree.
bool quadratics_affine_equivalent(const Anf& g, const Anf& h);

}  // namespace bfa
