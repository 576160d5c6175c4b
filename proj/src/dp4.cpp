#include "equibir/dp4.hpp"

#include <algorithm>
#include <sstream>

#include "equibir/errors.hpp"

namespace equibir {

namespace {

CycNum W() { return CycNum::zeta(3); }
CycNum W2() { return CycNum::zeta(3, 2); }
CycNum one() { return CycNum::from_int(1); }

CycMat diag_form(const std::vector<CycNum>& d) {
    CycMat m(5, 5);
    for (std::size_t i = 0; i < 5; ++i) m(i, i) = d[i];
    return m;
}

// q(row r1 of plane, row r2 of plane) under the symmetric form q
CycNum pair_form(const CycMat& q, const CycMat& plane, std::size_t r1, std::size_t r2) {
    CycNum acc;
    for (std::size_t i = 0; i < 5; ++i) {
        if (plane(r1, i).is_zero()) continue;
        for (std::size_t j = 0; j < 5; ++j)
            acc = acc + plane(r1, i) * q(i, j) * plane(r2, j);
    }
    return acc;
}

std::string plane_key(const CycMat& plane) {
    std::ostringstream os;
    for (std::size_t i = 0; i < plane.rows(); ++i)
        for (std::size_t j = 0; j < plane.cols(); ++j)
            os << plane(i, j).embedded(3).str() << "|";
    return os.str();
}

// generator must send the span of {q1, q2} to itself
void check_preserves_pencil(const SurfaceDP4& s, const CycMat& g, const std::string& name) {
    CycMat pull1 = g.transposed() * s.q1 * g;
    CycMat pull2 = g.transposed() * s.q2 * g;
    for (const CycMat* p : {&pull1, &pull2}) {
        // solve lam*q1 + mu*q2 = p on the (1,1) and (2,2) entries, then verify
        CycNum a = s.q1(1, 1), b = s.q2(1, 1), c = s.q1(2, 2), d = s.q2(2, 2);
        CycNum det = a * d - b * c;
        if (det.is_zero()) throw GeometryInconsistency("degenerate pencil coordinates");
        CycNum lam = ((*p)(1, 1) * d - b * (*p)(2, 2)) * det.inverse();
        CycNum mu = (a * (*p)(2, 2) - (*p)(1, 1) * c) * det.inverse();
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j)
                if ((*p)(i, j) != lam * s.q1(i, j) + mu * s.q2(i, j))
                    throw GeometryInconsistency(name + " does not preserve the quadric pencil");
    }
}

void check_on_surface(const SurfaceDP4& s, const CycMat& plane) {
    for (const CycMat* q : {&s.q1, &s.q2}) {
        if (!pair_form(*q, plane, 0, 0).is_zero() || !pair_form(*q, plane, 1, 1).is_zero() ||
            !pair_form(*q, plane, 0, 1).is_zero())
            throw GeometryInconsistency("candidate plane does not lie on both quadrics");
    }
}

LineOnSurface line_from_plane(CycMat plane) {
    std::size_t rank = rref(plane);
    if (rank != 2) throw GeometryInconsistency("plane rank is not 2");
    CycMat top(2, 5);
    for (std::size_t j = 0; j < 5; ++j) {
        top(0, j) = plane(0, j);
        top(1, j) = plane(1, j);
    }
    LineOnSurface out{std::move(top), ""};
    out.key = plane_key(out.plane);
    return out;
}

} // namespace

SurfaceDP4 SurfaceDP4::standard() {
    SurfaceDP4 s;
    s.q1 = diag_form({one(), W(), W2(), one(), CycNum()});
    s.q2 = diag_form({one(), W2(), W(), CycNum(), one()});

    // gamma: (x1..x5) -> (x2, x3, x1, w x4, w^2 x5)
    s.gamma = CycMat(5, 5);
    s.gamma(0, 1) = one();
    s.gamma(1, 2) = one();
    s.gamma(2, 0) = one();
    s.gamma(3, 3) = W();
    s.gamma(4, 4) = W2();

    // beta: (x1..x5) -> (x1, x3, x2, -x5, x4)
    s.beta = CycMat(5, 5);
    s.beta(0, 0) = one();
    s.beta(1, 2) = one();
    s.beta(2, 1) = one();
    s.beta(3, 4) = -one();
    s.beta(4, 3) = one();

    const CycNum w = W(), w2 = W2();
    s.seed_skew = CycMat(5, 5);
    auto set = [&](std::size_t i, std::size_t j, const CycNum& v) {
        s.seed_skew(i, j) = v;
        s.seed_skew(j, i) = -v;
    };
    set(0, 1, one());
    set(0, 2, -one());
    set(0, 3, one());
    set(0, 4, one());
    set(1, 2, one());
    set(1, 3, w2);
    set(1, 4, w);
    set(2, 3, w);
    set(2, 4, w2);
    set(3, 4, w - w2);
    return s;
}

std::vector<LineOnSurface> enumerate_lines(const SurfaceDP4& s) {
    check_preserves_pencil(s, s.gamma, "gamma");
    check_preserves_pencil(s, s.beta, "beta");

    std::vector<LineOnSurface> lines;
    for (unsigned mask = 0; mask < 32; ++mask) {
        CycMat n(5, 5);
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j) {
                int sign = ((mask >> i) & 1u ? -1 : 1) * ((mask >> j) & 1u ? -1 : 1);
                n(i, j) = sign > 0 ? s.seed_skew(i, j) : -s.seed_skew(i, j);
            }
        LineOnSurface line = line_from_plane(std::move(n));
        check_on_surface(s, line.plane);
        bool dup = false;
        for (const auto& known : lines) dup = dup || known.key == line.key;
        if (!dup) lines.push_back(std::move(line));
    }
    if (lines.size() != 16)
        throw GeometryInconsistency("expected 16 distinct lines, found " +
                                    std::to_string(lines.size()));
    std::sort(lines.begin(), lines.end(),
              [](const LineOnSurface& a, const LineOnSurface& b) { return a.key < b.key; });
    return lines;
}

int intersection_number(const LineOnSurface& a, const LineOnSurface& b) {
    if (a.key == b.key) return -1;
    CycMat stacked(4, 5);
    for (std::size_t j = 0; j < 5; ++j) {
        stacked(0, j) = a.plane(0, j);
        stacked(1, j) = a.plane(1, j);
        stacked(2, j) = b.plane(0, j);
        stacked(3, j) = b.plane(1, j);
    }
    return rank_of(stacked) <= 3 ? 1 : 0;
}

std::size_t act_on_line(const CycMat& g, const LineOnSurface& line,
                        const std::vector<LineOnSurface>& all) {
    CycMat image = line.plane * g.transposed();
    LineOnSurface moved = line_from_plane(std::move(image));
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i].key == moved.key) return i;
    throw GeometryInconsistency("image of a line is not a line of the surface");
}

std::vector<std::size_t> line_permutation(const CycMat& g,
                                          const std::vector<LineOnSurface>& all) {
    std::vector<std::size_t> out(all.size());
    std::vector<bool> hit(all.size(), false);
    for (std::size_t i = 0; i < all.size(); ++i) {
        out[i] = act_on_line(g, all[i], all);
        if (hit[out[i]]) throw GeometryInconsistency("line action is not a permutation");
        hit[out[i]] = true;
    }
    return out;
}

PicardBasis select_basis(const SurfaceDP4& s, const std::vector<LineOnSurface>& lines) {
    PicardBasis out;
    LineOnSurface seed = line_from_plane(s.seed_skew);
    check_on_surface(s, seed.plane);
    out.base = SIZE_MAX;
    for (std::size_t i = 0; i < lines.size(); ++i)
        if (lines[i].key == seed.key) out.base = i;
    if (out.base == SIZE_MAX) throw GeometryInconsistency("seed line missing from enumeration");

    auto gperm = line_permutation(s.gamma, lines);
    for (std::size_t i = 0; i < lines.size(); ++i)
        if (gperm[i] == i) out.gamma_invariant.push_back(i);
    if (out.gamma_invariant.size() != 4)
        throw GeometryInconsistency("expected 4 gamma-invariant lines, found " +
                                    std::to_string(out.gamma_invariant.size()));
    if (gperm[out.base] != out.base)
        throw GeometryInconsistency("seed line is not gamma-invariant");

    for (std::size_t i = 0; i < lines.size(); ++i)
        if (intersection_number(lines[i], lines[out.base]) == 1) out.neighbors.push_back(i);
    if (out.neighbors.size() != 5)
        throw GeometryInconsistency("expected 5 neighbors of the seed line, found " +
                                    std::to_string(out.neighbors.size()));

    std::vector<std::size_t> inv_neighbors, other_neighbors;
    for (std::size_t i : out.neighbors)
        (gperm[i] == i ? inv_neighbors : other_neighbors).push_back(i);
    if (inv_neighbors.size() != 2)
        throw GeometryInconsistency("expected 2 gamma-invariant neighbors, found " +
                                    std::to_string(inv_neighbors.size()));

    std::vector<std::size_t> last;
    for (std::size_t i : out.gamma_invariant)
        if (i != out.base && i != inv_neighbors[0] && i != inv_neighbors[1]) last.push_back(i);
    if (last.size() != 1)
        throw GeometryInconsistency("fourth gamma-invariant line is not unique");

    // ties inside {L1, L2} and {L3, L4, L5} resolved by canonical key order;
    // the vectors above already follow the canonical line order
    out.lines = {inv_neighbors[0], inv_neighbors[1], other_neighbors[0],
                 other_neighbors[1], other_neighbors[2], last[0]};
    out.tie_break_log.push_back("L1,L2 = gamma-invariant neighbors in canonical key order");
    out.tie_break_log.push_back("L3,L4,L5 = remaining neighbors in canonical key order");

    out.gram = IntMat(6, 6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            out.gram(i, j) = intersection_number(lines[out.lines[i]], lines[out.lines[j]]);
    BigInt det = determinant(out.gram);
    if (det != 1 && det != -1)
        throw GeometryInconsistency("selected classes are not a unimodular basis (det " +
                                    det.get_str() + ")");
    return out;
}

namespace {

std::vector<BigInt> class_of_line(const std::vector<LineOnSurface>& lines,
                                  const PicardBasis& basis, std::size_t idx) {
    std::vector<BigInt> rhs(6);
    for (std::size_t i = 0; i < 6; ++i)
        rhs[i] = intersection_number(lines[idx], lines[basis.lines[i]]);
    auto sol = solve_integer(basis.gram, rhs);
    if (!sol) throw GeometryInconsistency("line class is not integral in the basis");
    return *sol;
}

} // namespace

Dp4Data dp4_pipeline() {
    Dp4Data d;
    d.surface = SurfaceDP4::standard();
    d.lines = enumerate_lines(d.surface);
    d.basis = select_basis(d.surface, d.lines);

    d.incidence = Mat<int>(16, 16);
    for (std::size_t i = 0; i < 16; ++i)
        for (std::size_t j = 0; j < 16; ++j)
            d.incidence(i, j) = intersection_number(d.lines[i], d.lines[j]);

    d.beta_line_perm = line_permutation(d.surface.beta, d.lines);
    d.gamma_line_perm = line_permutation(d.surface.gamma, d.lines);
    for (std::size_t g = 0; g < 2; ++g) {
        const auto& perm = g ? d.gamma_line_perm : d.beta_line_perm;
        for (std::size_t i = 0; i < 16; ++i)
            for (std::size_t j = 0; j < 16; ++j)
                if (d.incidence(perm[i], perm[j]) != d.incidence(i, j))
                    throw GeometryInconsistency("line action does not preserve incidence");
    }

    d.line_classes = IntMat(6, 16);
    for (std::size_t j = 0; j < 16; ++j) {
        auto cls = class_of_line(d.lines, d.basis, j);
        for (std::size_t i = 0; i < 6; ++i) d.line_classes(i, j) = cls[i];
    }
    d.base_class = class_of_line(d.lines, d.basis, d.basis.base);

    // Picard action in the basis, columns = images of basis classes
    auto action_matrix = [&](const std::vector<std::size_t>& perm) {
        IntMat m(6, 6);
        for (std::size_t j = 0; j < 6; ++j) {
            auto cls = class_of_line(d.lines, d.basis, perm[d.basis.lines[j]]);
            for (std::size_t i = 0; i < 6; ++i) m(i, j) = cls[i];
        }
        return m;
    };
    d.b = action_matrix(d.beta_line_perm);
    d.c = action_matrix(d.gamma_line_perm);
    for (const IntMat* m : {&d.b, &d.c}) {
        BigInt det = determinant(*m);
        if (det != 1 && det != -1) throw GeometryInconsistency("action matrix not unimodular");
        if (m->transposed() * d.basis.gram * *m != d.basis.gram)
            throw GeometryInconsistency("action matrix does not preserve the intersection form");
    }
    if (d.c * d.c * d.c != IntMat::identity(6))
        throw GeometryInconsistency("gamma action is not of order dividing 3");

    // anticanonical class: pairs to 1 with every line
    {
        std::vector<BigInt> ones(6, 1);
        auto sol = solve_integer(d.basis.gram, ones);
        if (!sol) throw GeometryInconsistency("anticanonical class is not integral");
        d.neg_kx = *sol;
    }
    for (std::size_t j = 0; j < 16; ++j) {
        std::vector<BigInt> gram_cls(6, 0);
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t k = 0; k < 6; ++k)
                gram_cls[i] += d.basis.gram(i, k) * d.line_classes(k, j);
        BigInt pairing = 0;
        for (std::size_t i = 0; i < 6; ++i) pairing += d.neg_kx[i] * gram_cls[i];
        if (pairing != 1)
            throw GeometryInconsistency("anticanonical degree of a line is not 1");
    }
    {
        // (-K)^2 = 4 and -K equals the sum of the four gamma-invariant lines
        std::vector<BigInt> gram_k(6, 0);
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t k = 0; k < 6; ++k) gram_k[i] += d.basis.gram(i, k) * d.neg_kx[k];
        BigInt sq = 0;
        for (std::size_t i = 0; i < 6; ++i) sq += d.neg_kx[i] * gram_k[i];
        if (sq != 4) throw GeometryInconsistency("(-K)^2 is not 4");
        std::vector<BigInt> total(6, 0);
        for (std::size_t idx : d.basis.gamma_invariant) {
            auto cls = class_of_line(d.lines, d.basis, idx);
            for (std::size_t i = 0; i < 6; ++i) total[i] += cls[i];
        }
        if (total != d.neg_kx)
            throw GeometryInconsistency(
                "anticanonical class differs from the sum of gamma-invariant lines");
    }

    // relabeling onto the reference labeling: swap L1/L2, permute L3,L4,L5
    {
        const IntMat gram_ref = dp4ref::gram();
        const IntMat b_ref = dp4ref::b_matrix();
        const IntMat c_ref = dp4ref::c_matrix();
        const auto negk_ref = dp4ref::neg_kx();
        const auto base_ref = dp4ref::base_class();
        for (int swap12 = 0; swap12 < 2; ++swap12) {
            std::array<std::size_t, 3> perm{2, 3, 4};
            do {
                std::array<std::size_t, 6> sigma{swap12 ? 1ul : 0ul, swap12 ? 0ul : 1ul,
                                                 perm[0],           perm[1],
                                                 perm[2],           5};
                bool ok = true;
                for (std::size_t i = 0; i < 6 && ok; ++i) {
                    ok = d.neg_kx[sigma[i]] == negk_ref[i] &&
                         d.base_class[sigma[i]] == base_ref[i];
                    for (std::size_t j = 0; j < 6 && ok; ++j)
                        ok = d.basis.gram(sigma[i], sigma[j]) == gram_ref(i, j) &&
                             d.b(sigma[i], sigma[j]) == b_ref(i, j) &&
                             d.c(sigma[i], sigma[j]) == c_ref(i, j);
                }
                if (ok) {
                    ++d.alignment_matches;
                    if (!d.alignment) d.alignment = sigma;
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }
    return d;
}

namespace dp4ref {

IntMat gram() {
    return IntMat(6, 6, {-1, 0, 0, 0, 0, 1,  //
                         0, -1, 0, 0, 0, 1,  //
                         0, 0, -1, 0, 0, 0,  //
                         0, 0, 0, -1, 0, 0,  //
                         0, 0, 0, 0, -1, 0,  //
                         1, 1, 0, 0, 0, -1});
}

// reference matrices are stated for classes as row vectors; transposed here
// for the column-vector convention
IntMat b_matrix() {
    IntMat rowwise(6, 6, {1, 1, -1, -1, -1, 2, //
                          0, 0, 0, 0, 0, 1,   //
                          1, 0, 0, -1, 0, 1,  //
                          1, 0, -1, 0, 0, 1,  //
                          1, 0, 0, 0, -1, 1,  //
                          1, 0, 0, 0, 0, 0});
    return rowwise.transposed();
}

IntMat c_matrix() {
    IntMat rowwise(6, 6, {1, 0, 0, 0, 0, 0, //
                          0, 1, 0, 0, 0, 0, //
                          0, 0, 0, 0, 1, 0, //
                          0, 0, 1, 0, 0, 0, //
                          0, 0, 0, 1, 0, 0, //
                          0, 0, 0, 0, 0, 1});
    return rowwise.transposed();
}

std::vector<BigInt> neg_kx() { return {2, 2, -1, -1, -1, 3}; }

std::vector<BigInt> base_class() { return {1, 1, -1, -1, -1, 2}; }

IntMat beta_invariant_basis() {
    // beta-fixed vectors (x, y1..y6, z), one column per parameter:
    // (z1, -2 z3, -2 z3, -z2 - z3, z2 + 3 z3, z3, -3 z3, z4)
    return IntMat(8, 4, {1, 0, 0, 0,   //
                         0, 0, -2, 0,  //
                         0, 0, -2, 0,  //
                         0, -1, -1, 0, //
                         0, 1, 3, 0,   //
                         0, 0, 1, 0,   //
                         0, 0, -3, 0,  //
                         0, 0, 0, 1});
}

} // namespace dp4ref

std::vector<BigInt> align_vector(const std::array<std::size_t, 6>& alignment,
                                 const std::vector<BigInt>& ref) {
    std::vector<BigInt> out(6);
    for (std::size_t i = 0; i < 6; ++i) out[alignment[i]] = ref[i];
    return out;
}

IntMat align_matrix(const std::array<std::size_t, 6>& alignment, const IntMat& ref) {
    IntMat out(6, 6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) out(alignment[i], alignment[j]) = ref(i, j);
    return out;
}

} // namespace equibir
