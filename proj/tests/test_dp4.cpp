#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "equibir/dp4.hpp"
#include "equibir/group.hpp"

using namespace equibir;

namespace {

const Dp4Data& data() {
    static Dp4Data d = dp4_pipeline();
    return d;
}

} // namespace

TEST_CASE("sixteen lines, each verified on both quadrics") {
    CHECK(data().lines.size() == 16);
    // the pipeline already throws if a plane fails the on-surface check
}

TEST_CASE("seed line is gamma-invariant and meets exactly five lines") {
    const auto& d = data();
    CHECK(d.gamma_line_perm[d.basis.base] == d.basis.base);
    CHECK(d.basis.neighbors.size() == 5);
    int meets = 0;
    for (std::size_t j = 0; j < 16; ++j)
        if (d.incidence(d.basis.base, j) == 1) ++meets;
    CHECK(meets == 5);
}

TEST_CASE("gamma fixes exactly four lines, two of them neighbors") {
    const auto& d = data();
    CHECK(d.basis.gamma_invariant.size() == 4);
    int inv_neighbors = 0;
    for (std::size_t i : d.basis.neighbors)
        if (d.gamma_line_perm[i] == i) ++inv_neighbors;
    CHECK(inv_neighbors == 2);
}

TEST_CASE("every line meets exactly five others") {
    const auto& d = data();
    for (std::size_t i = 0; i < 16; ++i) {
        int meets = 0;
        for (std::size_t j = 0; j < 16; ++j)
            if (d.incidence(i, j) == 1) ++meets;
        CHECK(meets == 5);
        CHECK(d.incidence(i, i) == -1);
    }
}

TEST_CASE("beta induces a line permutation of order dividing 4") {
    const auto& d = data();
    auto compose = [&](const std::vector<std::size_t>& p, const std::vector<std::size_t>& q) {
        std::vector<std::size_t> out(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) out[i] = p[q[i]];
        return out;
    };
    auto b2 = compose(d.beta_line_perm, d.beta_line_perm);
    auto b4 = compose(b2, b2);
    for (std::size_t i = 0; i < 16; ++i) CHECK(b4[i] == i);
}

TEST_CASE("basis data matches the reference up to the recorded relabeling") {
    const auto& d = data();
    REQUIRE(d.alignment.has_value());
    CHECK(align_matrix(*d.alignment, dp4ref::gram()) == d.basis.gram);
    CHECK(align_matrix(*d.alignment, dp4ref::b_matrix()) == d.b);
    CHECK(align_matrix(*d.alignment, dp4ref::c_matrix()) == d.c);
    CHECK(align_vector(*d.alignment, dp4ref::neg_kx()) == d.neg_kx);
    CHECK(align_vector(*d.alignment, dp4ref::base_class()) == d.base_class);
}

TEST_CASE("action matrices preserve the form and fix the anticanonical class") {
    const auto& d = data();
    CHECK(d.b.transposed() * d.basis.gram * d.b == d.basis.gram);
    CHECK(d.c.transposed() * d.basis.gram * d.c == d.basis.gram);
    std::vector<BigInt> k = d.neg_kx;
    CHECK(d.b * k == k);
    CHECK(d.c * k == k);
    CHECK(d.c * d.c * d.c == IntMat::identity(6));
}

TEST_CASE("the matrix group generated by B and C has order 12") {
    const auto& d = data();
    FinGroup g = FinGroup::close({GroupElement(d.b), GroupElement(d.c)});
    CHECK(g.order() == 12);
    auto subs = enumerate_subgroups(g);
    std::size_t proper_nontrivial = 0;
    for (const auto& h : subs)
        if (h.order() > 1 && h.order() < g.order()) {
            ++proper_nontrivial;
            CHECK(h.cyclic);
        }
    CHECK(proper_nontrivial == 6);
}

TEST_CASE("maps that do not preserve the surface are rejected") {
    const auto& d = data();
    // a generic monomial map moves lines off the configuration
    CycMat g(5, 5);
    g(0, 0) = CycNum::from_int(1);
    g(1, 1) = CycNum::from_int(2);
    g(2, 2) = CycNum::from_int(1);
    g(3, 3) = CycNum::from_int(1);
    g(4, 4) = CycNum::from_int(1);
    CHECK_THROWS_AS(line_permutation(g, d.lines), GeometryInconsistency);
}

TEST_CASE("intersection numbers are symmetric") {
    const auto& d = data();
    for (std::size_t i = 0; i < 16; ++i)
        for (std::size_t j = 0; j < 16; ++j) CHECK(d.incidence(i, j) == d.incidence(j, i));
}
