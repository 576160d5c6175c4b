#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "equibir/rational.hpp"

namespace equibir {

/// Element of the cyclotomic field Q(zeta_n), stored in the power basis
/// 1, z, ..., z^(phi(n)-1) after reduction modulo the n-th cyclotomic
/// polynomial. Zero coefficients are never stored. Values are immutable;
/// mixed-conductor arithmetic embeds both operands into lcm(m, n).
class CycNum {
public:
    CycNum() = default; // zero at conductor 1

    static CycNum from_rational(const BigRat& q);
    static CycNum from_int(long v) { return from_rational(BigRat(v)); }
    static CycNum zeta(unsigned n, unsigned long k = 1);

    unsigned conductor() const { return n_; }
    bool is_zero() const { return c_.empty(); }
    const std::map<unsigned, BigRat>& coefficients() const { return c_; }

    /// Same value viewed in Q(zeta_m); m must be a multiple of the conductor.
    CycNum embedded(unsigned m) const;

    CycNum operator-() const;
    friend CycNum operator+(const CycNum& a, const CycNum& b);
    friend CycNum operator-(const CycNum& a, const CycNum& b);
    friend CycNum operator*(const CycNum& a, const CycNum& b);
    CycNum& operator+=(const CycNum& o) { return *this = *this + o; }
    CycNum& operator-=(const CycNum& o) { return *this = *this - o; }
    CycNum& operator*=(const CycNum& o) { return *this = *this * o; }

    CycNum inverse() const; // throws DivisionByZero on zero
    CycNum scaled(const BigRat& q) const;

    /// Galois automorphism zeta -> zeta^k; requires gcd(k, conductor) = 1.
    CycNum galois(long k) const;
    /// Complex conjugation zeta -> zeta^-1.
    CycNum conjugate() const { return galois(-1); }

    std::optional<BigInt> rational_integer() const;
    std::optional<BigRat> rational() const;

    bool operator==(const CycNum& o) const;
    bool operator!=(const CycNum& o) const { return !(*this == o); }

    /// Textual form: plain rational at conductor 1, otherwise
    /// "z(n) a0 + a1*z + a2*z^2 + ...".
    std::string str() const;
    static CycNum parse(std::string_view text);

    /// Conductors above the cap are refused (default 64).
    static void set_conductor_cap(unsigned cap);
    static unsigned conductor_cap();

private:
    unsigned n_ = 1;
    std::map<unsigned, BigRat> c_;

    static CycNum from_dense(unsigned n, std::vector<BigRat> dense);
};

/// Coefficients of Phi_n, little-endian. Cached; thread-safe.
const std::vector<BigInt>& cyclotomic_polynomial(unsigned n);

unsigned euler_phi(unsigned n);

inline CycNum operator*(const BigRat& q, const CycNum& a) { return a.scaled(q); }

} // namespace equibir
