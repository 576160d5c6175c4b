#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "equibir/errors.hpp"

namespace equibir {

// Arbitrary-precision integers and rationals. mpq_class keeps values
// canonical (lowest terms, positive denominator) as long as inputs are.
using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigRat make_rat(BigInt num, BigInt den) {
    if (den == 0) throw DivisionByZero();
    BigRat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const BigRat& q) { return q.get_den() == 1; }

inline std::string rat_str(const BigRat& q) {
    return q.get_den() == 1 ? q.get_num().get_str()
                            : q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Accepts "p" or "p/q" with optional leading minus.
BigRat parse_rat(std::string_view text);

} // namespace equibir
