#pragma once

#include <optional>
#include <vector>

#include "equibir/matrix.hpp"

namespace equibir {

struct SmithForm {
    IntMat u, d, v; // u * m * v = d, u and v unimodular, diagonal divisibility chain
};

/// Smith normal form with transforms; diagonal entries are nonnegative and
/// each divides the next.
SmithForm smith_normal_form(const IntMat& m);

/// Basis of the integer kernel {x : m x = 0} as matrix columns. The output
/// lattice is saturated (the V-columns of the Smith form are primitive).
IntMat integer_kernel(const IntMat& m);

/// One integral solution of m x = b, if any.
std::optional<std::vector<BigInt>> solve_integer(const IntMat& m, const std::vector<BigInt>& b);

/// Solve m x = b over Q, if consistent.
std::optional<std::vector<BigRat>> solve_rational(const RatMat& m, const std::vector<BigRat>& b);

/// Inverse of a matrix that is invertible over the integers (det = +-1).
std::optional<IntMat> integer_inverse(const IntMat& m);

BigInt determinant(const IntMat& m);

bool is_identity(const IntMat& m);

/// Elementary divisors of the cokernel Z^rows / im(m): the nonzero diagonal
/// of the Smith form, plus a 0 per free rank if the map is not surjective
/// onto a finite-index sublattice.
std::vector<BigInt> elementary_divisors(const IntMat& m);

inline RatMat to_rational(const IntMat& m) {
    RatMat out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = BigRat(m(i, j));
    return out;
}

} // namespace equibir
