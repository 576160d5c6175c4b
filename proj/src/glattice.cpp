#include "equibir/glattice.hpp"

#include <algorithm>

namespace equibir {

GLattice::GLattice(std::shared_ptr<const FinGroup> group, std::vector<IntMat> generator_action,
                   std::optional<IntMat> form)
    : group_(std::move(group)), form_(std::move(form)) {
    const FinGroup& g = *group_;
    if (generator_action.size() != g.generators().size())
        throw Error("one action matrix per group generator required");
    if (generator_action.empty()) throw Error("empty action");
    rank_ = generator_action.front().rows();
    for (const auto& m : generator_action) {
        if (m.rows() != rank_ || m.cols() != rank_) throw Error("action matrices must be square of equal rank");
        BigInt det = determinant(m);
        if (det != 1 && det != -1) throw BadGenerator("action matrix not invertible over Z");
    }

    // extend generator matrices along the BFS factorization of the group
    action_.assign(g.order(), IntMat());
    std::vector<bool> done(g.order(), false);
    action_[g.identity()] = IntMat::identity(rank_);
    done[g.identity()] = true;
    // elements are reachable from the identity through parent links
    std::vector<std::size_t> stack;
    for (std::size_t i = 0; i < g.order(); ++i) {
        if (done[i]) continue;
        stack.clear();
        std::size_t cur = i;
        while (!done[cur]) {
            stack.push_back(cur);
            cur = g.parent(cur).first;
        }
        while (!stack.empty()) {
            std::size_t e = stack.back();
            stack.pop_back();
            auto [p, gi] = g.parent(e);
            action_[e] = action_[p] * generator_action[gi];
            done[e] = true;
        }
    }

    // homomorphism check on all defining products elem * gen
    std::vector<std::size_t> gen_idx;
    for (const auto& gen : g.generators()) gen_idx.push_back(g.index_of(gen));
    for (std::size_t i = 0; i < g.order(); ++i)
        for (std::size_t gi = 0; gi < gen_idx.size(); ++gi) {
            std::size_t prod = g.mul(i, gen_idx[gi]);
            if (action_[prod] != action_[i] * generator_action[gi])
                throw Error("generator matrices do not define a group action");
        }

    if (form_) {
        if (form_->rows() != rank_ || form_->cols() != rank_)
            throw Error("form shape mismatch");
        form_invariant_ = true;
        for (const auto& m : generator_action)
            if (m.transposed() * *form_ * m != *form_) form_invariant_ = false;
    }
}

GLattice GLattice::dual() const {
    std::vector<IntMat> duals;
    for (const auto& gen : group_->generators()) {
        const IntMat& m = action_[group_->index_of(gen)];
        auto inv = integer_inverse(m);
        duals.push_back(inv->transposed());
    }
    return GLattice(group_, std::move(duals));
}

IntMat invariant_sublattice(const GLattice& l, const Subgroup& h) {
    // stack (action(h) - I) for a generating set of H; kernel columns are the
    // invariants, and the Smith-based kernel is saturated
    std::vector<std::size_t> gens = subgroup_generators(*l.group(), h);
    if (gens.empty()) return IntMat::identity(l.rank());
    IntMat stacked(l.rank() * gens.size(), l.rank());
    for (std::size_t k = 0; k < gens.size(); ++k) {
        const IntMat& m = l.action(gens[k]);
        for (std::size_t i = 0; i < l.rank(); ++i)
            for (std::size_t j = 0; j < l.rank(); ++j)
                stacked(k * l.rank() + i, j) = m(i, j) - (i == j ? 1 : 0);
    }
    return integer_kernel(stacked);
}

std::vector<BigInt> h1(const GLattice& l, const Subgroup& h) {
    const FinGroup& g = *l.group();
    const std::size_t n = l.rank();
    const std::size_t m = h.order();
    if (m == 1) return {};

    // unknowns: f(x) in Z^n for each non-identity x in H (f(1) = 0)
    std::vector<std::size_t> members;
    for (std::size_t e : h.elems)
        if (e != g.identity()) members.push_back(e);
    std::vector<std::size_t> slot(g.order(), SIZE_MAX);
    for (std::size_t k = 0; k < members.size(); ++k) slot[members[k]] = k;

    const std::size_t vars = members.size() * n;
    std::vector<std::vector<BigInt>> rows;
    // cocycle relations f(xy) - f(x) - x.f(y) = 0, one block row per (x, y)
    for (std::size_t x : h.elems)
        for (std::size_t y : h.elems) {
            if (x == g.identity() || y == g.identity()) continue; // trivially satisfied
            std::size_t xy = g.mul(x, y);
            std::vector<BigInt> block(n * vars, 0);
            // rows i = 0..n-1 of this relation
            for (std::size_t i = 0; i < n; ++i) {
                if (slot[xy] != SIZE_MAX) block[i * vars + slot[xy] * n + i] += 1;
                block[i * vars + slot[x] * n + i] -= 1;
                const IntMat& ax = l.action(x);
                for (std::size_t j = 0; j < n; ++j)
                    block[i * vars + slot[y] * n + j] -= ax(i, j);
            }
            for (std::size_t i = 0; i < n; ++i) {
                std::vector<BigInt> row(block.begin() + i * vars, block.begin() + (i + 1) * vars);
                rows.push_back(std::move(row));
            }
        }

    IntMat a(rows.size(), vars);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < vars; ++j) a(i, j) = rows[i][j];
    IntMat z1 = integer_kernel(a); // vars x k

    // coboundaries: delta(m)(x) = x.m - m stacked over members
    IntMat b1(vars, n);
    for (std::size_t k = 0; k < members.size(); ++k) {
        const IntMat& ax = l.action(members[k]);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                b1(k * n + i, j) = ax(i, j) - (i == j ? 1 : 0);
    }

    // express each coboundary generator in the kernel basis: z1 * X = b1
    const std::size_t kdim = z1.cols();
    IntMat x(kdim, n);
    for (std::size_t col = 0; col < n; ++col) {
        std::vector<BigInt> rhs(vars);
        for (std::size_t i = 0; i < vars; ++i) rhs[i] = b1(i, col);
        auto sol = solve_integer(z1, rhs);
        if (!sol) throw Error("coboundary outside the cocycle lattice");
        for (std::size_t i = 0; i < kdim; ++i) x(i, col) = (*sol)[i];
    }
    return elementary_divisors(x);
}

std::vector<BigInt> h1_cyclic(const GLattice& l, const Subgroup& h) {
    const FinGroup& g = *l.group();
    if (!h.cyclic) throw Error("h1_cyclic needs a cyclic subgroup");
    if (h.order() == 1) return {};
    std::size_t gen = SIZE_MAX;
    for (std::size_t e : h.elems)
        if (g.element_order(e) == h.order()) {
            gen = e;
            break;
        }
    const IntMat& a = l.action(gen);
    const std::size_t n = l.rank();
    IntMat norm(n, n), power = IntMat::identity(n);
    for (std::size_t k = 0; k < h.order(); ++k) {
        norm = norm + power;
        power = power * a;
    }
    // ker(norm) via saturated kernel; then quotient by im(a - 1) inside it
    IntMat ker = integer_kernel(norm);
    IntMat am1 = a - IntMat::identity(n);
    // columns of am1 lie in ker(norm); express them in the kernel basis
    IntMat x(ker.cols(), n);
    for (std::size_t col = 0; col < n; ++col) {
        std::vector<BigInt> rhs(n);
        for (std::size_t i = 0; i < n; ++i) rhs[i] = am1(i, col);
        auto sol = solve_integer(ker, rhs);
        if (!sol) throw Error("image of (g-1) escapes ker(norm)");
        for (std::size_t i = 0; i < ker.cols(); ++i) x(i, col) = (*sol)[i];
    }
    return elementary_divisors(x);
}

bool H1Row::trivial() const {
    return divisors_trivial(divisors) && divisors_trivial(dual_divisors);
}

H1Report h1_all_subgroups(const GLattice& l) {
    H1Report rep;
    GLattice dual = l.dual();
    for (const Subgroup& h : enumerate_subgroups(*l.group())) {
        H1Row row;
        row.subgroup_order = h.order();
        row.subgroup_kind = h.cyclic ? "cyclic" : "noncyclic";
        if (h.normal) row.subgroup_kind += " normal";
        row.divisors = h1(l, h);
        row.dual_divisors = h1(dual, h);
        if (h.cyclic && h.order() > 1) {
            // second route must agree up to trivial factors
            auto alt = h1_cyclic(l, h);
            auto strip = [](std::vector<BigInt> v) {
                v.erase(std::remove(v.begin(), v.end(), BigInt(1)), v.end());
                return v;
            };
            if (strip(alt) != strip(row.divisors))
                throw Error("cyclic-subgroup cohomology cross-check failed");
        }
        rep.all_trivial = rep.all_trivial && row.trivial();
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

} // namespace equibir
