#include "equibir/euler.hpp"

namespace equibir {

std::vector<BigInt> ChowVector::flat() const {
    std::vector<BigInt> out(8);
    out[0] = x;
    for (std::size_t i = 0; i < 6; ++i) out[1 + i] = y[i];
    out[7] = z;
    return out;
}

ChowVector ChowVector::from_flat(const std::vector<BigInt>& v) {
    if (v.size() != 8) throw Error("flat Chow vector needs 8 coordinates");
    ChowVector out;
    out.x = v[0];
    out.y.assign(v.begin() + 1, v.begin() + 7);
    out.z = v[7];
    return out;
}

EulerLattice::EulerLattice(const Dp4Data& d)
    : pic_gram_(d.basis.gram),
      neg_kx_(d.neg_kx),
      group_(std::make_shared<FinGroup>(
          FinGroup::close({GroupElement(d.b), GroupElement(d.c)}))),
      pic_module_(group_, {d.b, d.c}, d.basis.gram) {
    auto block = [](const IntMat& m) {
        IntMat out = IntMat::identity(8);
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < 6; ++j) out(1 + i, 1 + j) = m(i, j);
        return out;
    };
    lambda_ = std::make_unique<GLattice>(group_, std::vector<IntMat>{block(d.b), block(d.c)});
}

BigInt EulerLattice::intersect(const std::vector<BigInt>& a, const std::vector<BigInt>& b) const {
    BigInt acc = 0;
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) acc += a[i] * pic_gram_(i, j) * b[j];
    return acc;
}

BigRat EulerLattice::pairing(const ChowVector& v, const ChowVector& w) const {
    // K = -neg_kx; chi = x1 x2 - (x1 y2 - x2 y1).K / 2 + (x1 z2 + x2 z1 - 2 y1.y2) / 2
    BigInt mixed = 0;
    for (std::size_t i = 0; i < 6; ++i) {
        BigInt ki = 0;
        for (std::size_t j = 0; j < 6; ++j) ki += pic_gram_(i, j) * (-neg_kx_[j]);
        mixed += (v.x * w.y[i] - w.x * v.y[i]) * ki;
    }
    BigInt halves = v.x * w.z + w.x * v.z - 2 * intersect(v.y, w.y) - mixed;
    return BigRat(v.x * w.x) + make_rat(halves, 2);
}

RatMat EulerLattice::gram() const {
    RatMat g(8, 8);
    for (std::size_t i = 0; i < 8; ++i) {
        std::vector<BigInt> ei(8, 0);
        ei[i] = 1;
        ChowVector vi = ChowVector::from_flat(ei);
        for (std::size_t j = 0; j < 8; ++j) {
            std::vector<BigInt> ej(8, 0);
            ej[j] = 1;
            g(i, j) = pairing(vi, ChowVector::from_flat(ej));
        }
    }
    return g;
}

bool EulerLattice::in_k0(const ChowVector& v) const {
    BigRat chi = pairing(ChowVector::structure_sheaf(), v);
    BigRat chi_rev = pairing(v, ChowVector::structure_sheaf());
    return is_integer(chi) && is_integer(chi_rev);
}

ChowVector EulerLattice::line_bundle(const std::vector<BigInt>& divisor) const {
    ChowVector out;
    out.x = 1;
    out.y = divisor;
    out.z = intersect(divisor, divisor);
    return out;
}

ChowVector EulerLattice::apply(std::size_t elem, const ChowVector& v) const {
    return ChowVector::from_flat(action(elem) * v.flat());
}

K0Report k0_decomposition_check(const EulerLattice& l) {
    K0Report rep;
    const FinGroup& g = *l.picard_group();
    rep.rank_fixed = true;
    rep.point_fixed = true;
    rep.picard_nontrivial = false;
    for (const auto& gen : g.generators()) {
        const IntMat& m = l.action(g.index_of(gen));
        for (std::size_t i = 0; i < 8; ++i) {
            if (m(i, 0) != (i == 0 ? 1 : 0)) rep.rank_fixed = false;
            if (m(i, 7) != (i == 7 ? 1 : 0)) rep.point_fixed = false;
        }
        IntMat pic(6, 6);
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < 6; ++j) pic(i, j) = m(1 + i, 1 + j);
        if (!is_identity(pic)) rep.picard_nontrivial = true;
    }
    Subgroup whole;
    whole.elems.resize(g.order());
    for (std::size_t i = 0; i < g.order(); ++i) whole.elems[i] = i;
    rep.invariant_rank = invariant_sublattice(l.lambda(), whole).cols();
    rep.k0_fixed_everything = rep.invariant_rank == 8;
    return rep;
}

} // namespace equibir
