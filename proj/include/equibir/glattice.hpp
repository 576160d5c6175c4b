#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "equibir/group.hpp"
#include "equibir/intlinalg.hpp"

namespace equibir {

/// Free Z-module of finite rank with a group action by integer matrices
/// (acting on column vectors) and an optional bilinear form. The
/// generator-to-matrix assignment is extended along the group's
/// factorization links and verified to be a homomorphism.
class GLattice {
public:
    GLattice(std::shared_ptr<const FinGroup> group, std::vector<IntMat> generator_action,
             std::optional<IntMat> form = std::nullopt);

    std::size_t rank() const { return rank_; }
    const std::shared_ptr<const FinGroup>& group() const { return group_; }
    const IntMat& action(std::size_t elem) const { return action_[elem]; }
    const std::optional<IntMat>& form() const { return form_; }

    /// Whether g^T * form * g = form holds for every generator.
    bool form_invariant() const { return form_invariant_; }

    /// Same group acting by inverse-transpose matrices.
    GLattice dual() const;

private:
    std::shared_ptr<const FinGroup> group_;
    std::size_t rank_;
    std::vector<IntMat> action_;
    std::optional<IntMat> form_;
    bool form_invariant_ = false;
};

/// Columns form a saturated Z-basis of {v : h v = v for all h in H}.
IntMat invariant_sublattice(const GLattice& l, const Subgroup& h);

/// Elementary divisors of H^1(H, M) computed from the bar resolution:
/// cocycles f with f(gh) = f(g) + g f(h) modulo coboundaries g m - m.
/// All divisors equal to 1 (or an empty list) means the cohomology vanishes.
std::vector<BigInt> h1(const GLattice& l, const Subgroup& h);

/// Norm/(g-1) route for cyclic subgroups; used as an independent check.
std::vector<BigInt> h1_cyclic(const GLattice& l, const Subgroup& h);

struct H1Row {
    std::size_t subgroup_order;
    std::string subgroup_kind; // "cyclic" / "noncyclic", plus "normal" flag in text
    std::vector<BigInt> divisors;
    std::vector<BigInt> dual_divisors;
    bool trivial() const;
};

struct H1Report {
    std::vector<H1Row> rows;
    bool all_trivial = true;
};

/// H^1 of every subgroup on the module and on its dual.
H1Report h1_all_subgroups(const GLattice& l);

inline bool divisors_trivial(const std::vector<BigInt>& divs) {
    for (const auto& d : divs)
        if (d != 1) return false;
    return true;
}

} // namespace equibir
