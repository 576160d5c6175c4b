#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "equibir/obstruction.hpp"

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

// the subgroup generated by the image of beta in the Picard group
Subgroup beta_subgroup() {
    const FinGroup& g = *lattice().picard_group();
    return cyclic_subgroup(g, g.index_of(GroupElement(data().b)));
}

using CoeffMap = std::map<std::pair<std::size_t, std::size_t>, BigRat>;

CoeffMap expected_chi_vv() {
    // z1^2 + 2 z2^2 + 8 z2 z3 + 4 z3^2 + z1 z4
    return {{{0, 0}, 1}, {{1, 1}, 2}, {{1, 2}, 8}, {{2, 2}, 4}, {{0, 3}, 1}};
}

CoeffMap expected_chi_vcv() {
    // z1^2 - z2^2 - 4 z2 z3 - 8 z3^2 + z1 z4
    return {{{0, 0}, 1}, {{1, 1}, -1}, {{1, 2}, -4}, {{2, 2}, -8}, {{0, 3}, 1}};
}

CoeffMap expected_difference() {
    // 3 z2^2 + 12 z2 z3 + 12 z3^2
    return {{{1, 1}, 3}, {{1, 2}, 12}, {{2, 2}, 12}};
}

// reparametrize the system onto the reference generators of the beta-fixed
// sublattice (transported through the recorded relabeling)
OrbitConditionSystem system_in_reference_parameters(const OrbitConditionSystem& sys) {
    const auto& d = data();
    REQUIRE(d.alignment.has_value());
    IntMat ref = dp4ref::beta_invariant_basis();
    IntMat aligned(8, ref.cols());
    std::array<std::size_t, 8> sig;
    sig[0] = 0;
    sig[7] = 7;
    for (std::size_t i = 0; i < 6; ++i) sig[1 + i] = 1 + (*d.alignment)[i];
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < ref.cols(); ++j) aligned(sig[i], j) = ref(i, j);

    // solve basis * T = aligned column by column
    REQUIRE(sys.invariant_basis.cols() == aligned.cols());
    IntMat t(sys.rank(), sys.rank());
    for (std::size_t j = 0; j < aligned.cols(); ++j) {
        std::vector<BigInt> rhs(8);
        for (std::size_t i = 0; i < 8; ++i) rhs[i] = aligned(i, j);
        auto sol = solve_integer(sys.invariant_basis, rhs);
        REQUIRE(sol.has_value());
        for (std::size_t i = 0; i < sys.rank(); ++i) t(i, j) = (*sol)[i];
    }
    BigInt det = determinant(t);
    REQUIRE((det == 1 || det == -1));
    return reparametrize(sys, t);
}

} // namespace

TEST_CASE("beta-fixed sublattice has rank 4") {
    OrbitConditionSystem sys = build_system(lattice(), beta_subgroup());
    CHECK(sys.rank() == 4);
    CHECK(sys.conditions.size() == 3); // three cosets in the order-12 group
    CHECK(sys.conditions[0].identity_coset);
    CHECK(sys.conditions[0].target == 1);
    CHECK(sys.conditions[1].target == 0);
    CHECK(sys.conditions[2].target == 0);
}

TEST_CASE("beta system reproduces the reference polynomials") {
    OrbitConditionSystem sys =
        system_in_reference_parameters(build_system(lattice(), beta_subgroup()));
    CHECK(sys.conditions[0].coefficients() == expected_chi_vv());
    // one of the non-identity cosets carries the displayed second equation
    bool found = sys.conditions[1].coefficients() == expected_chi_vcv() ||
                 sys.conditions[2].coefficients() == expected_chi_vcv();
    CHECK(found);

    // difference of the two displayed equations
    const auto& second = sys.conditions[1].coefficients() == expected_chi_vcv()
                             ? sys.conditions[1]
                             : sys.conditions[2];
    QuadCondition diff;
    diff.sym = sys.conditions[0].sym - second.sym;
    diff.target = sys.conditions[0].target - second.target;
    CHECK(diff.coefficients() == expected_difference());
    CHECK(diff.target == 1);
}

TEST_CASE("beta system has no solution modulo 3") {
    OrbitConditionSystem sys = build_system(lattice(), beta_subgroup());
    auto cert = infeasible_mod_p(sys, 3);
    REQUIRE(cert.has_value());
    CHECK(cert->modulus == 3);
    CHECK(cert->enumerated == 81); // 3^4
}

TEST_CASE("whole-group system has a single identity condition") {
    const FinGroup& g = *lattice().picard_group();
    Subgroup whole;
    whole.elems.resize(g.order());
    for (std::size_t i = 0; i < g.order(); ++i) whole.elems[i] = i;
    whole.cyclic = false;
    OrbitConditionSystem sys = build_system(lattice(), whole);
    CHECK(sys.conditions.size() == 1);
    CHECK(sys.conditions[0].identity_coset);
    CHECK(sys.conditions[0].target == 1);
    CHECK(sys.rank() == 3); // the fixed sublattice of the full group
    // chi(v, v) = 1 does have residue solutions: no certificate
    CHECK(!infeasible_mod_p(sys, 3).has_value());
}

TEST_CASE("trivially solvable system yields no certificate") {
    // single condition s1^2 = 1 over a rank-1 lattice
    OrbitConditionSystem sys;
    sys.invariant_basis = IntMat(8, 1);
    sys.invariant_basis(0, 0) = 1;
    QuadCondition c;
    c.sym = RatMat(1, 1);
    c.sym(0, 0) = 1;
    c.target = 1;
    c.identity_coset = true;
    sys.conditions.push_back(c);
    CHECK(!infeasible_mod_p(sys, 3).has_value());
    CHECK(integer_box_solvable(sys, 2));
}

TEST_CASE("modulus 2 and composite moduli are refused") {
    OrbitConditionSystem sys = build_system(lattice(), beta_subgroup());
    CHECK_THROWS_AS(infeasible_mod_p(sys, 2), Error);
    CHECK_THROWS_AS(infeasible_mod_p(sys, 9), Error);
}

TEST_CASE("reparametrization invariance of feasibility") {
    OrbitConditionSystem sys = build_system(lattice(), beta_subgroup());
    std::mt19937 rng(17);
    IntMat t = IntMat::identity(4);
    // random product of elementary operations stays unimodular
    for (int step = 0; step < 12; ++step) {
        std::size_t i = rng() % 4, j = rng() % 4;
        if (i == j) continue;
        IntMat e = IntMat::identity(4);
        e(i, j) = static_cast<long>(rng() % 5) - 2;
        t = t * e;
    }
    OrbitConditionSystem moved = reparametrize(sys, t);
    CHECK(infeasible_mod_p(moved, 3).has_value() == infeasible_mod_p(sys, 3).has_value());
}

TEST_CASE("mod-p certificates are sound on small ranks") {
    // certified infeasible => no integer point in a box, on synthetic systems
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 30; ++trial) {
        OrbitConditionSystem sys;
        std::size_t r = 1 + rng() % 3;
        sys.invariant_basis = IntMat(8, r);
        for (std::size_t i = 0; i < r; ++i) sys.invariant_basis(i, i) = 1;
        std::size_t ncond = 1 + rng() % 2;
        for (std::size_t k = 0; k < ncond; ++k) {
            QuadCondition c;
            c.sym = RatMat(r, r);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = i; j < r; ++j) {
                    BigRat v(static_cast<long>(rng() % 7) - 3);
                    c.sym(i, j) = c.sym(i, j) + v;
                    if (i != j) c.sym(j, i) = c.sym(j, i) + v;
                }
            c.target = static_cast<long>(rng() % 3);
            sys.conditions.push_back(std::move(c));
        }
        if (infeasible_mod_p(sys, 3).has_value()) CHECK(!integer_box_solvable(sys, 10));
    }
}

TEST_CASE("full pipeline certifies the obstruction") {
    ObstructionReport rep = theorem_pipeline(lattice());
    CHECK(rep.verdict == "NO_FULL_G_INVARIANT_SEQUENCE");
    CHECK(rep.group_order == 12);
    CHECK(rep.invariant_rank == 3);

    std::size_t certified = 0, orbit_excluded = 0;
    for (const auto& out : rep.subgroups) {
        CHECK(out.excluded);
        if (out.method == "mod-p") {
            ++certified;
            REQUIRE(out.certificate.has_value());
            CHECK(out.certificate->modulus == 3);
            // the tighter integral-pairing system certifies as well
            REQUIRE(out.restricted_certificate.has_value());
            CHECK(out.restricted_certificate->modulus == 3);
        } else {
            ++orbit_excluded;
            CHECK(out.index > 8);
        }
    }
    CHECK(certified == 6);      // the six nontrivial proper subgroups
    CHECK(orbit_excluded == 1); // the trivial subgroup, index 12 > 8
}

TEST_CASE("integral-pairing restriction has index at most 2") {
    OrbitConditionSystem sys = build_system(lattice(), beta_subgroup());
    OrbitConditionSystem restricted = restrict_to_integral(lattice(), sys);
    CHECK(restricted.rank() == sys.rank());
    // every column of the restricted basis pairs integrally
    for (std::size_t j = 0; j < restricted.rank(); ++j) {
        std::vector<BigInt> col(8);
        for (std::size_t i = 0; i < 8; ++i) col[i] = restricted.invariant_basis(i, j);
        CHECK(lattice().in_k0(ChowVector::from_flat(col)));
    }
    // dropping to the sublattice cannot create solutions
    if (infeasible_mod_p(sys, 3).has_value())
        CHECK(infeasible_mod_p(restricted, 3).has_value());
}

TEST_CASE("without a group action the method proves nothing") {
    Dp4Data d = data();
    d.b = IntMat::identity(6);
    d.c = IntMat::identity(6);
    EulerLattice trivial(d);
    ObstructionReport rep = theorem_pipeline(trivial);
    CHECK(rep.verdict == "INCONCLUSIVE");
}
