#pragma once

#include <string>
#include <vector>

#include "equibir/matrix.hpp"

namespace equibir {

/// Finite-dimensional module over the standard sl2 triple (H, X, Y) with H
/// diagonal in the stored basis. Basis names are kept for printing.
struct WeightModule {
    std::vector<long> weights;
    std::vector<std::string> basis_names;
    RatMat h, x, y;

    std::size_t dim() const { return weights.size(); }
    /// [H,X] = 2X, [H,Y] = -2Y, [X,Y] = H as exact matrix identities.
    bool relations_hold() const;
};

/// Irreducible module of highest weight n on the chain w_n, w_{n-2}, ...:
/// Y steps down the chain by one, X returns with the coefficients forced by
/// the commutation relations.
WeightModule sym_power(unsigned n);

/// Exterior square with basis w_i ^ w_j (i < j) and the Leibniz action.
WeightModule wedge_square(const WeightModule& m);

/// Basis of ker(X) inside the weight-lambda subspace, each vector integral,
/// primitive, with positive first nonzero coordinate.
std::vector<std::vector<BigRat>> highest_weight_vectors(const WeightModule& m, long lambda);

/// v, Y v, Y^2 v, ... (steps entries after v).
std::vector<std::vector<BigRat>> lowering_orbit(const WeightModule& m,
                                                const std::vector<BigRat>& v, unsigned steps);

/// Multiset of irreducible summands (highest weight, multiplicity) of the
/// exterior square of the weight-n irreducible, by weight counting.
std::vector<std::pair<unsigned, unsigned>> decompose_wedge(unsigned n);

/// Render a vector in the module's named basis, e.g. "3*w2^w0 + -2*w4^w-2".
std::string format_vector(const WeightModule& m, const std::vector<BigRat>& v);

} // namespace equibir
