#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "equibir/euler.hpp"

namespace equibir {

/// One quadratic condition chi(v, g v) = target on the parameters of the
/// invariant sublattice, stored as a symmetric rational coefficient matrix:
/// p(s) = s^T sym s.
struct QuadCondition {
    RatMat sym;
    BigRat target;
    std::size_t coset_rep;   // element index of the defining coset
    bool identity_coset = false;

    /// Upper-triangular coefficient map (i <= j) of the polynomial.
    std::map<std::pair<std::size_t, std::size_t>, BigRat> coefficients() const;
    /// Doubled integer coefficients (denominators cleared) and target.
    std::map<std::pair<std::size_t, std::size_t>, BigInt> doubled_coefficients() const;
    BigInt doubled_target() const;
    std::string polynomial_str(const std::string& var = "z") const;
};

/// The full condition system for one stabilizer subgroup: one quadratic
/// equation per coset of H in the acting group, target 1 on the identity
/// coset and 0 elsewhere.
struct OrbitConditionSystem {
    Subgroup subgroup;
    IntMat invariant_basis; // 8 x r
    std::vector<QuadCondition> conditions;

    std::size_t rank() const { return invariant_basis.cols(); }
};

/// Builds the system and verifies that the polynomial depends only on the
/// coset of the acting element.
OrbitConditionSystem build_system(const EulerLattice& l, const Subgroup& h);

/// Same system on the sublattice of vectors with integral pairing (the
/// image of the Grothendieck group), an index-<=2 sublattice of the fixed
/// lattice.
OrbitConditionSystem restrict_to_integral(const EulerLattice& l,
                                          const OrbitConditionSystem& sys);

/// Substitute s = t s' for a unimodular t (r x r).
OrbitConditionSystem reparametrize(const OrbitConditionSystem& sys, const IntMat& t);

struct InfeasibilityCertificate {
    std::size_t subgroup_order;
    unsigned modulus;
    BigInt enumerated; // p^r residue vectors, all checked
    std::vector<std::string> polynomials;
    std::string note;
};

/// Exhaustive residue search; empty result means some residue satisfies all
/// conditions mod p (no certificate, NOT a proof a solution exists).
/// p must be an odd prime: the conditions are doubled to clear halves.
std::optional<InfeasibilityCertificate> infeasible_mod_p(const OrbitConditionSystem& sys,
                                                         unsigned p);

/// True when some integer point of the box [-bound, bound]^r satisfies every
/// condition exactly; brute force, intended for small ranks in tests.
bool integer_box_solvable(const OrbitConditionSystem& sys, long bound);

struct SubgroupOutcome {
    std::size_t order;
    std::size_t index;
    bool cyclic;
    std::string method; // "orbit-length" or "mod-p"
    std::optional<InfeasibilityCertificate> certificate;
    /// Certificate for the system restricted to vectors with integral
    /// pairing; informational (the verdict uses the full lattice).
    std::optional<InfeasibilityCertificate> restricted_certificate;
    bool excluded = false;
};

struct ObstructionReport {
    std::string verdict; // NO_FULL_G_INVARIANT_SEQUENCE or INCONCLUSIVE
    std::vector<SubgroupOutcome> subgroups;
    std::size_t slots;              // rank of the pairing lattice
    std::size_t group_order;
    std::size_t invariant_rank;     // fixed sublattice rank
    bool k0_moves;                  // group acts nontrivially
    std::string failing_subgroup;   // set when INCONCLUSIVE
};

/// For every proper subgroup H: exclude by orbit length when [G:H] exceeds
/// the number of slots, otherwise certify the condition system infeasible
/// modulo a prime (starting at `modulus`, escalating through small primes).
/// The remaining case H = G forces a pointwise-fixed basis, which the
/// nontrivial action rules out.
ObstructionReport theorem_pipeline(const EulerLattice& l, unsigned modulus = 3);

} // namespace equibir
