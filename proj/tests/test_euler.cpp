#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "equibir/euler.hpp"

using namespace equibir;

namespace {

const Dp4Data& data() {
    static Dp4Data d = dp4_pipeline();
    return d;
}

const EulerLattice& lattice() {
    static EulerLattice l(data());
    return l;
}

ChowVector rnd_vec(std::mt19937& rng) {
    ChowVector v;
    auto pick = [&] { return BigInt(static_cast<long>(rng() % 9) - 4); };
    v.x = pick();
    v.y.resize(6);
    for (auto& c : v.y) c = pick();
    v.z = pick();
    return v;
}

// reference 8x8 pairing matrix in the reference labeling
RatMat reference_gram() {
    const BigRat h = make_rat(1, 2);
    RatMat g(8, 8);
    for (std::size_t j = 1; j < 8; ++j) g(0, j) = h;
    g(0, 0) = 1;
    for (std::size_t i = 1; i < 7; ++i) g(i, 0) = -h;
    g(7, 0) = h;
    // middle block: minus the intersection form of the line basis
    IntMat gram = dp4ref::gram();
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) g(1 + i, 1 + j) = BigRat(-gram(i, j));
    return g;
}

} // namespace

TEST_CASE("unit pairings") {
    const auto& l = lattice();
    CHECK(l.pairing(ChowVector::structure_sheaf(), ChowVector::structure_sheaf()) == 1);
    CHECK(l.pairing(ChowVector::structure_sheaf(), ChowVector::point()) == 1);
    // half the point class alone pairs half-integrally
    ChowVector half{0, std::vector<BigInt>(6, 0), 1};
    CHECK(l.pairing(ChowVector::structure_sheaf(), half) == make_rat(1, 2));
    CHECK(!l.in_k0(half));
    CHECK(l.in_k0(ChowVector::point()));
    CHECK(l.in_k0(ChowVector::structure_sheaf()));
}

TEST_CASE("gram matrix matches the reference up to relabeling") {
    const auto& d = data();
    const auto& l = lattice();
    RatMat mine = l.gram();
    RatMat ref = reference_gram();
    REQUIRE(d.alignment.has_value());
    // extend the 6-relabeling to the 8-lattice (identity on slots 0 and 7)
    std::array<std::size_t, 8> sig;
    sig[0] = 0;
    sig[7] = 7;
    for (std::size_t i = 0; i < 6; ++i) sig[1 + i] = 1 + (*d.alignment)[i];
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) CHECK(mine(sig[i], sig[j]) == ref(i, j));
    CHECK(mine(0, 0) == 1);
    CHECK(mine(7, 0) == make_rat(1, 2));
    CHECK(mine != mine.transposed()); // the pairing is not symmetric
}

TEST_CASE("bilinearity") {
    const auto& l = lattice();
    std::mt19937 rng(123);
    for (int t = 0; t < 50; ++t) {
        ChowVector v = rnd_vec(rng), vp = rnd_vec(rng), w = rnd_vec(rng);
        long a = static_cast<long>(rng() % 7) - 3, b = static_cast<long>(rng() % 7) - 3;
        ChowVector lin;
        lin.x = a * v.x + b * vp.x;
        lin.y.resize(6);
        for (std::size_t i = 0; i < 6; ++i) lin.y[i] = a * v.y[i] + b * vp.y[i];
        lin.z = a * v.z + b * vp.z;
        CHECK(l.pairing(lin, w) == BigRat(a) * l.pairing(v, w) + BigRat(b) * l.pairing(vp, w));
    }
}

TEST_CASE("invariance under the group action") {
    const auto& l = lattice();
    const FinGroup& g = *l.picard_group();
    std::mt19937 rng(321);
    for (int t = 0; t < 40; ++t) {
        ChowVector v = rnd_vec(rng), w = rnd_vec(rng);
        for (std::size_t e = 0; e < g.order(); ++e)
            CHECK(l.pairing(l.apply(e, v), l.apply(e, w)) == l.pairing(v, w));
    }
}

TEST_CASE("line bundles are numerically exceptional") {
    const auto& d = data();
    const auto& l = lattice();
    for (std::size_t j = 0; j < 16; ++j) {
        std::vector<BigInt> divisor(6);
        for (std::size_t i = 0; i < 6; ++i) divisor[i] = d.line_classes(i, j);
        ChowVector ch = l.line_bundle(divisor);
        CHECK(l.pairing(ch, ch) == 1);
        CHECK(l.in_k0(ch));
    }
}

TEST_CASE("k0 decomposition blocks") {
    auto rep = k0_decomposition_check(lattice());
    CHECK(rep.rank_fixed);
    CHECK(rep.point_fixed);
    CHECK(rep.picard_nontrivial);
    CHECK(rep.invariant_rank == 3); // 1 + rank Pic^G + 1
    CHECK(!rep.k0_fixed_everything);
}

TEST_CASE("k0 membership parity") {
    const auto& l = lattice();
    std::mt19937 rng(555);
    for (int t = 0; t < 60; ++t) {
        ChowVector v = rnd_vec(rng);
        bool parity = (v.z - l.intersect(v.y, v.y)) % 2 == 0;
        CHECK(l.in_k0(v) == parity);
    }
}
