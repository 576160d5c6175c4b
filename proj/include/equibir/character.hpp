#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "equibir/cyclotomic.hpp"
#include "equibir/group.hpp"

namespace equibir {

/// Class function on a finite group with cyclotomic values, indexed by the
/// group's conjugacy classes.
struct ClassFunction {
    std::shared_ptr<const FinGroup> group;
    std::vector<CycNum> values;

    const CycNum& at(std::size_t c) const { return values[c]; }
    /// Value at the identity class; for characters, the degree.
    const CycNum& degree() const { return values[0]; }
};

struct CharTable {
    std::shared_ptr<const FinGroup> group;
    std::vector<ClassFunction> rows;
    std::vector<std::string> labels;

    const ClassFunction& row(const std::string& label) const;
    std::size_t row_index(const std::string& label) const;
};

/// Standard inner product (1/|G|) sum |C| a(g) conj(b(g)), conjugation via
/// the Galois map zeta -> zeta^-1.
CycNum inner_product(const ClassFunction& a, const ClassFunction& b);

/// Character of the exterior square: g -> (chi(g)^2 - chi(g^2)) / 2.
ClassFunction wedge_square(const ClassFunction& chi);
/// Character of the symmetric square: g -> (chi(g)^2 + chi(g^2)) / 2.
ClassFunction sym_square(const ClassFunction& chi);

struct TableReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/// Row orthogonality, row count, and degree-square sum.
TableReport verify_table(const CharTable& t);

/// Multiplicities of chi against every row; throws NotACharacter if any
/// multiplicity is not a nonnegative rational integer or the rows do not
/// reassemble chi exactly.
std::vector<std::pair<std::string, BigInt>> decompose(const ClassFunction& chi,
                                                      const CharTable& t);

/// Restriction to a subgroup given as its own enumerated group; elements of
/// `sub` must literally be elements of chi's group.
ClassFunction restrict_to(const ClassFunction& chi, std::shared_ptr<const FinGroup> sub);

} // namespace equibir
