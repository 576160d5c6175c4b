#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "equibir/cyclotomic.hpp"
#include "equibir/intlinalg.hpp"
#include "equibir/matrix.hpp"

namespace equibir {

/// The degree-4 Del Pezzo surface cut out of P^4 by
///   x1^2 + w x2^2 + w^2 x3^2 + x4^2   and   x1^2 + w^2 x2^2 + w x3^2 + x5^2,
/// w a primitive cube root of unity, together with the two monomial
/// symmetries gamma (order 3) and beta (order 4 on the surface). All action
/// matrices act on column vectors.
struct SurfaceDP4 {
    CycMat q1, q2;      // 5x5 symmetric forms
    CycMat gamma, beta; // 5x5 monomial generators
    CycMat seed_skew;   // rank-2 skew matrix whose row space is a line

    static SurfaceDP4 standard();
};

/// A line on the surface, stored as the reduced row echelon form of the
/// 2-plane in k^5 that projectivizes to it. Equal lines have byte-equal keys.
struct LineOnSurface {
    CycMat plane; // 2x5 RREF
    std::string key;
};

/// All 16 lines in canonical key order; every returned plane is verified to
/// lie on both quadrics exactly.
std::vector<LineOnSurface> enumerate_lines(const SurfaceDP4& s);

/// -1 for equal lines, 1 if the planes meet nontrivially, else 0.
int intersection_number(const LineOnSurface& a, const LineOnSurface& b);

/// Index of g(line) among `all`; throws GeometryInconsistency if the image
/// is not one of them.
std::size_t act_on_line(const CycMat& g, const LineOnSurface& line,
                        const std::vector<LineOnSurface>& all);

/// Permutation of all lines induced by g: out[i] = index of g(line_i).
std::vector<std::size_t> line_permutation(const CycMat& g,
                                          const std::vector<LineOnSurface>& all);

struct PicardBasis {
    std::size_t base;                       // the distinguished seed line
    std::array<std::size_t, 6> lines;       // L1..L6 as indices into the 16
    std::vector<std::size_t> neighbors;     // the 5 lines meeting the base
    std::vector<std::size_t> gamma_invariant; // all gamma-fixed lines (4)
    IntMat gram;                            // 6x6 intersection matrix
    std::vector<std::string> tie_break_log;
};

PicardBasis select_basis(const SurfaceDP4& s, const std::vector<LineOnSurface>& lines);

/// Everything the rest of the toolkit consumes from the surface.
struct Dp4Data {
    SurfaceDP4 surface;
    std::vector<LineOnSurface> lines;
    Mat<int> incidence;            // 16x16
    PicardBasis basis;
    IntMat line_classes;           // 6x16, column j = class of line j
    IntMat b, c;                   // Picard action of beta and gamma
    std::vector<std::size_t> beta_line_perm, gamma_line_perm;
    std::vector<BigInt> neg_kx;    // anticanonical class in the basis
    std::vector<BigInt> base_class;

    /// Relabeling onto the reference labeling: reference L_i is our
    /// L_{alignment[i]}. Empty when no relabeling matches (reported, not fatal).
    std::optional<std::array<std::size_t, 6>> alignment;
    std::size_t alignment_matches = 0;
};

/// Full pipeline with all internal verifications.
Dp4Data dp4_pipeline();

/// Reference values in the standard labeling (column-vector convention).
namespace dp4ref {
IntMat gram();
IntMat b_matrix();
IntMat c_matrix();
std::vector<BigInt> neg_kx();
std::vector<BigInt> base_class();
/// The beta-fixed sublattice of the rank-8 pairing lattice, as generator
/// columns (x, y1..y6, z).
IntMat beta_invariant_basis();
} // namespace dp4ref

/// Apply the alignment to reference coordinates: out[alignment[i]] = in[i].
std::vector<BigInt> align_vector(const std::array<std::size_t, 6>& alignment,
                                 const std::vector<BigInt>& ref);
IntMat align_matrix(const std::array<std::size_t, 6>& alignment, const IntMat& ref);

} // namespace equibir
