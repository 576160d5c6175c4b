#include "equibir/obstruction.hpp"

#include <algorithm>
#include <sstream>

namespace equibir {

namespace {

bool is_small_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

ChowVector column_vector(const IntMat& basis, std::size_t j) {
    std::vector<BigInt> flat(8);
    for (std::size_t i = 0; i < 8; ++i) flat[i] = basis(i, j);
    return ChowVector::from_flat(flat);
}

// chi(v, g v) as a quadratic form in the basis parameters
RatMat condition_matrix(const EulerLattice& l, const IntMat& basis, std::size_t elem) {
    const std::size_t r = basis.cols();
    RatMat raw(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        ChowVector bi = column_vector(basis, i);
        for (std::size_t j = 0; j < r; ++j) {
            ChowVector gbj = l.apply(elem, column_vector(basis, j));
            raw(i, j) = l.pairing(bi, gbj);
        }
    }
    RatMat sym(r, r);
    const BigRat half = make_rat(1, 2);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) sym(i, j) = (raw(i, j) + raw(j, i)) * half;
    return sym;
}

} // namespace

std::map<std::pair<std::size_t, std::size_t>, BigRat> QuadCondition::coefficients() const {
    std::map<std::pair<std::size_t, std::size_t>, BigRat> out;
    const std::size_t r = sym.rows();
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i; j < r; ++j) {
            BigRat c = i == j ? sym(i, i) : sym(i, j) + sym(j, i);
            if (c != 0) out[{i, j}] = c;
        }
    return out;
}

std::map<std::pair<std::size_t, std::size_t>, BigInt> QuadCondition::doubled_coefficients()
    const {
    std::map<std::pair<std::size_t, std::size_t>, BigInt> out;
    for (const auto& [ij, c] : coefficients()) {
        BigRat twice = c * 2;
        if (!is_integer(twice)) throw Error("condition coefficients are not half-integral");
        out[ij] = twice.get_num();
    }
    return out;
}

BigInt QuadCondition::doubled_target() const {
    BigRat twice = target * 2;
    if (!is_integer(twice)) throw Error("condition target is not half-integral");
    return twice.get_num();
}

std::string QuadCondition::polynomial_str(const std::string& var) const {
    auto coeffs = coefficients();
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [ij, c] : coeffs) {
        if (!first) os << " + ";
        first = false;
        if (!(c == 1)) os << rat_str(c) << "*";
        os << var << ij.first + 1;
        if (ij.second == ij.first)
            os << "^2";
        else
            os << "*" << var << ij.second + 1;
    }
    return os.str();
}

OrbitConditionSystem build_system(const EulerLattice& l, const Subgroup& h) {
    const FinGroup& g = *l.picard_group();
    OrbitConditionSystem sys;
    sys.subgroup = h;
    sys.invariant_basis = invariant_sublattice(l.lambda(), h);

    // left cosets of H, represented by their least element; identity coset first
    std::vector<std::vector<std::size_t>> cosets;
    std::vector<bool> seen(g.order(), false);
    for (std::size_t e = 0; e < g.order(); ++e) {
        if (seen[e]) continue;
        std::vector<std::size_t> coset;
        for (std::size_t x : h.elems) {
            std::size_t m = g.mul(e, x);
            seen[m] = true;
            coset.push_back(m);
        }
        std::sort(coset.begin(), coset.end());
        cosets.push_back(std::move(coset));
    }
    std::stable_sort(cosets.begin(), cosets.end(), [&](const auto& a, const auto& b) {
        bool ia = std::binary_search(a.begin(), a.end(), g.identity());
        bool ib = std::binary_search(b.begin(), b.end(), g.identity());
        if (ia != ib) return ia;
        return a.front() < b.front();
    });

    for (const auto& coset : cosets) {
        QuadCondition cond;
        cond.coset_rep = coset.front();
        cond.identity_coset = std::binary_search(coset.begin(), coset.end(), g.identity());
        cond.target = cond.identity_coset ? 1 : 0;
        cond.sym = condition_matrix(l, sys.invariant_basis, cond.coset_rep);
        // the polynomial must not depend on the representative
        for (std::size_t other : coset)
            if (condition_matrix(l, sys.invariant_basis, other) != cond.sym)
                throw Error("condition polynomial varies inside a coset");
        sys.conditions.push_back(std::move(cond));
    }
    return sys;
}

OrbitConditionSystem restrict_to_integral(const EulerLattice& l,
                                          const OrbitConditionSystem& sys) {
    // parity functional vanishing exactly on the integral-pairing vectors
    const std::size_t r = sys.rank();
    std::vector<int> parity(r);
    bool any = false;
    for (std::size_t j = 0; j < r; ++j) {
        std::vector<BigInt> col(8);
        for (std::size_t i = 0; i < 8; ++i) col[i] = sys.invariant_basis(i, j);
        ChowVector v = ChowVector::from_flat(col);
        parity[j] = l.in_k0(v) ? 0 : 1;
        any = any || parity[j];
    }
    if (!any) return sys; // fixed lattice already sits inside
    std::size_t pivot = 0;
    while (parity[pivot] == 0) ++pivot;
    IntMat t(r, r);
    std::size_t col = 0;
    for (std::size_t j = 0; j < r; ++j) {
        if (j == pivot) continue;
        t(j, col) = 1;
        if (parity[j]) t(pivot, col) = -1;
        ++col;
    }
    t(pivot, r - 1) = 2;
    OrbitConditionSystem out = sys;
    out.invariant_basis = sys.invariant_basis * t;
    RatMat tq = to_rational(t);
    for (auto& cond : out.conditions) cond.sym = tq.transposed() * cond.sym * tq;
    return out;
}

OrbitConditionSystem reparametrize(const OrbitConditionSystem& sys, const IntMat& t) {
    BigInt det = determinant(t);
    if (det != 1 && det != -1) throw Error("reparametrization must be unimodular");
    OrbitConditionSystem out = sys;
    out.invariant_basis = sys.invariant_basis * t;
    RatMat tq = to_rational(t);
    for (auto& cond : out.conditions) cond.sym = tq.transposed() * cond.sym * tq;
    return out;
}

std::optional<InfeasibilityCertificate> infeasible_mod_p(const OrbitConditionSystem& sys,
                                                         unsigned p) {
    if (p == 2 || !is_small_prime(p))
        throw Error("modulus must be an odd prime (conditions are doubled)");
    const std::size_t r = sys.rank();

    struct Flat {
        std::vector<std::tuple<std::size_t, std::size_t, long>> terms;
        long target;
    };
    std::vector<Flat> flats;
    for (const auto& cond : sys.conditions) {
        Flat f;
        f.target = static_cast<long>(mpz_fdiv_ui(cond.doubled_target().get_mpz_t(), p));
        for (const auto& [ij, c] : cond.doubled_coefficients()) {
            long cm = static_cast<long>(mpz_fdiv_ui(c.get_mpz_t(), p));
            if (cm) f.terms.emplace_back(ij.first, ij.second, cm);
        }
        flats.push_back(std::move(f));
    }

    std::vector<long> s(r, 0);
    BigInt total = 1;
    for (std::size_t i = 0; i < r; ++i) total *= p;
    BigInt counted = 0;
    for (;;) {
        ++counted;
        bool all_ok = true;
        for (const auto& f : flats) {
            long acc = 0;
            for (const auto& [i, j, c] : f.terms) acc = (acc + c * s[i] % p * s[j]) % p;
            if (acc % p != f.target) {
                all_ok = false;
                break;
            }
        }
        if (all_ok) return std::nullopt; // residue solution found

        std::size_t pos = 0;
        while (pos < r && ++s[pos] == static_cast<long>(p)) s[pos++] = 0;
        if (pos == r) break;
    }
    if (counted != total) throw Error("residue enumeration miscounted");

    InfeasibilityCertificate cert;
    cert.subgroup_order = sys.subgroup.order();
    cert.modulus = p;
    cert.enumerated = total;
    for (const auto& cond : sys.conditions)
        cert.polynomials.push_back(cond.polynomial_str() + " = " + rat_str(cond.target));
    if (sys.conditions.size() >= 2) {
        QuadCondition diff;
        diff.sym = sys.conditions[0].sym - sys.conditions[1].sym;
        diff.target = sys.conditions[0].target - sys.conditions[1].target;
        cert.note = "difference of the first two conditions: " + diff.polynomial_str() + " = " +
                    rat_str(diff.target);
    }
    return cert;
}

bool integer_box_solvable(const OrbitConditionSystem& sys, long bound) {
    const std::size_t r = sys.rank();
    std::vector<long> s(r, -bound);
    for (;;) {
        bool all_ok = true;
        for (const auto& cond : sys.conditions) {
            BigRat acc(0);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j)
                    acc += cond.sym(i, j) * BigRat(s[i]) * BigRat(s[j]);
            if (acc != cond.target) {
                all_ok = false;
                break;
            }
        }
        if (all_ok) return true;
        std::size_t pos = 0;
        while (pos < r && ++s[pos] > bound) s[pos++] = -bound;
        if (pos == r) return false;
    }
}

ObstructionReport theorem_pipeline(const EulerLattice& l, unsigned modulus) {
    ObstructionReport rep;
    const FinGroup& g = *l.picard_group();
    rep.slots = 8;
    rep.group_order = g.order();
    K0Report k0 = k0_decomposition_check(l);
    rep.invariant_rank = k0.invariant_rank;
    rep.k0_moves = !k0.k0_fixed_everything;

    bool all_closed = true;
    for (const Subgroup& h : enumerate_subgroups(g)) {
        if (h.order() == g.order()) continue; // the H = G case is the fixed-lattice check
        SubgroupOutcome out;
        out.order = h.order();
        out.index = g.order() / h.order();
        out.cyclic = h.cyclic;
        if (out.index > rep.slots) {
            // an orbit with this stabilizer would need [G:H] > slots terms
            out.method = "orbit-length";
            out.excluded = true;
        } else {
            out.method = "mod-p";
            OrbitConditionSystem sys = build_system(l, h);
            for (unsigned p = modulus; p < 30 && !out.certificate; ++p) {
                if (p == 2 || !is_small_prime(p)) continue;
                out.certificate = infeasible_mod_p(sys, p);
            }
            out.excluded = out.certificate.has_value();
            // informational: the same search on the integral-pairing sublattice
            OrbitConditionSystem restricted = restrict_to_integral(l, sys);
            for (unsigned p = modulus; p < 30 && !out.restricted_certificate; ++p) {
                if (p == 2 || !is_small_prime(p)) continue;
                out.restricted_certificate = infeasible_mod_p(restricted, p);
            }
        }
        if (!out.excluded && rep.failing_subgroup.empty()) {
            all_closed = false;
            rep.failing_subgroup = "subgroup of order " + std::to_string(out.order);
        }
        rep.subgroups.push_back(std::move(out));
    }

    if (all_closed && rep.k0_moves)
        rep.verdict = "NO_FULL_G_INVARIANT_SEQUENCE";
    else {
        rep.verdict = "INCONCLUSIVE";
        if (rep.failing_subgroup.empty() && !rep.k0_moves)
            rep.failing_subgroup = "whole group fixes the lattice";
    }
    return rep;
}

} // namespace equibir
