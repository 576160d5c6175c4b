#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "equibir/glattice.hpp"

using namespace equibir;

namespace {

std::shared_ptr<const FinGroup> c2() {
    return std::make_shared<FinGroup>(
        FinGroup::close({GroupElement(Perm::parse_cycles("(1 2)"))}));
}

std::vector<BigInt> nontrivial(std::vector<BigInt> divs) {
    std::erase(divs, BigInt(1));
    return divs;
}

} // namespace

TEST_CASE("sign action of C2 on Z has nonvanishing H1") {
    IntMat neg(1, 1, {-1});
    GLattice l(c2(), {neg});
    auto divs = h1(l, enumerate_subgroups(*l.group()).back());
    CHECK(nontrivial(divs) == std::vector<BigInt>{2});

    auto rep = h1_all_subgroups(l);
    CHECK(!rep.all_trivial);
}

TEST_CASE("trivial action has vanishing H1") {
    IntMat one(1, 1, {1});
    GLattice l(c2(), {one});
    auto rep = h1_all_subgroups(l);
    CHECK(rep.all_trivial);
}

TEST_CASE("regular-ish permutation action of C2 on Z^2") {
    // swap action: H^1(C2, Z[C2]) = 0
    IntMat swap(2, 2, {0, 1, 1, 0});
    GLattice l(c2(), {swap});
    auto rep = h1_all_subgroups(l);
    CHECK(rep.all_trivial);
}

TEST_CASE("invariant sublattice") {
    IntMat swap(2, 2, {0, 1, 1, 0});
    GLattice l(c2(), {swap});
    auto subs = enumerate_subgroups(*l.group());

    IntMat full = invariant_sublattice(l, subs.front()); // trivial subgroup
    CHECK(full.cols() == 2);

    IntMat diag = invariant_sublattice(l, subs.back());
    REQUIRE(diag.cols() == 1);
    CHECK(diag(0, 0) == diag(1, 0));
    CHECK(abs(diag(0, 0)) == 1); // saturated: (1,1), not (2,2)

    IntMat neg(2, 2, {-1, 0, 0, -1});
    GLattice ln(c2(), {neg});
    CHECK(invariant_sublattice(ln, subs.back()).cols() == 0);
}

TEST_CASE("form invariance is checked") {
    IntMat swap(2, 2, {0, 1, 1, 0});
    IntMat form(2, 2, {2, 1, 1, 2});
    GLattice l(c2(), {swap}, form);
    CHECK(l.form_invariant());
    IntMat skew(2, 2, {1, 0, 0, 2});
    GLattice l2(c2(), {swap}, skew);
    CHECK(!l2.form_invariant());
}

TEST_CASE("conjugate subgroups have identical divisor lists") {
    // S3 on its standard 2-dimensional sublattice of Z^3
    GroupElement a(Perm::parse_cycles("(1 2 3)"));
    GroupElement b(Perm::parse_cycles("(1 2)", 3));
    auto s3 = std::make_shared<FinGroup>(FinGroup::close({a, b}));
    // action on the sum-zero lattice with basis e1-e2, e2-e3
    IntMat ma(2, 2, {0, -1, 1, -1});
    IntMat mb(2, 2, {-1, 1, 0, 1});
    GLattice l(s3, {ma, mb});
    std::map<std::size_t, std::vector<BigInt>> by_order;
    for (const auto& h : enumerate_subgroups(*s3)) {
        auto divs = nontrivial(h1(l, h));
        auto [it, fresh] = by_order.try_emplace(h.order(), divs);
        if (!fresh) CHECK(it->second == divs);
    }
}

TEST_CASE("bad homomorphism data is rejected") {
    auto g = c2();
    IntMat m(1, 1, {1});
    IntMat n(1, 1, {-1});
    // one generator expected
    CHECK_THROWS_AS(GLattice(g, {m, n}), Error);
    // order-2 generator cannot act by an aperiodic matrix
    IntMat shear(2, 2, {1, 1, 0, 1});
    CHECK_THROWS_AS(GLattice(g, {shear}), Error);
}
