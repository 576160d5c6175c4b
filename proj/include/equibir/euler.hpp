#pragma once

#include <memory>
#include <vector>

#include "equibir/dp4.hpp"
#include "equibir/glattice.hpp"

namespace equibir {

/// Element x + sum y_i l_i + (z/2) p of the rank-8 lattice spanned by the
/// fundamental class, the six line classes and half the point class.
struct ChowVector {
    BigInt x;
    std::vector<BigInt> y; // 6 entries
    BigInt z;

    static ChowVector structure_sheaf() { return {1, std::vector<BigInt>(6, 0), 0}; }
    static ChowVector point() { return {0, std::vector<BigInt>(6, 0), 2}; }
    /// ch of a line bundle O(D): (1, D, D^2) with D^2 taken in the lattice.
    std::vector<BigInt> flat() const;
    static ChowVector from_flat(const std::vector<BigInt>& v);
};

/// The rank-8 lattice with the Euler pairing
///   chi(v, w) = x1 x2 - (x1 y2 - x2 y1).K/2 + (x1 z2 + x2 z1 - 2 y1.y2)/2,
/// built from the surface's intersection form and anticanonical class. The
/// generators act blockwise: trivially on the rank and point parts, by the
/// Picard matrices in the middle.
class EulerLattice {
public:
    explicit EulerLattice(const Dp4Data& d);

    BigRat pairing(const ChowVector& v, const ChowVector& w) const;
    RatMat gram() const; // 8x8 on the basis (1, l1..l6, p/2)

    /// Membership in the image of the Grothendieck group: z = y.y (mod 2),
    /// equivalently integrality of the pairing against the structure sheaf.
    bool in_k0(const ChowVector& v) const;

    BigInt intersect(const std::vector<BigInt>& a, const std::vector<BigInt>& b) const;
    ChowVector line_bundle(const std::vector<BigInt>& divisor) const;

    const IntMat& pic_gram() const { return pic_gram_; }
    const std::vector<BigInt>& neg_kx() const { return neg_kx_; }

    /// The group generated by the two Picard matrices.
    const std::shared_ptr<const FinGroup>& picard_group() const { return group_; }
    /// Block action of a group element on the rank-8 lattice.
    const IntMat& action(std::size_t elem) const { return lambda_->action(elem); }
    /// The rank-8 lattice as a module over the Picard group.
    const GLattice& lambda() const { return *lambda_; }
    /// The rank-6 Picard module itself.
    const GLattice& picard_module() const { return pic_module_; }

    ChowVector apply(std::size_t elem, const ChowVector& v) const;

private:
    IntMat pic_gram_;
    std::vector<BigInt> neg_kx_;
    std::shared_ptr<const FinGroup> group_;
    GLattice pic_module_;
    std::unique_ptr<GLattice> lambda_;
};

struct K0Report {
    bool rank_fixed = false;       // (1,0,0) fixed by all generators
    bool point_fixed = false;      // (0,0,z) line fixed
    bool picard_nontrivial = false; // some generator acts nontrivially on Pic
    std::size_t invariant_rank = 0; // rank of the fixed sublattice of Lambda
    bool k0_fixed_everything = false; // invariant_rank == 8
};

/// Block-structure and invariance facts of the induced action.
K0Report k0_decomposition_check(const EulerLattice& l);

} // namespace equibir
