#include "equibir/intlinalg.hpp"

#include <algorithm>

namespace equibir {

namespace {

// true if every entry of the trailing block (from t,t) is divisible by q
bool block_divisible(const IntMat& d, std::size_t t, const BigInt& q, std::size_t& bi,
                     std::size_t& bj) {
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            if (d(i, j) % q != 0) {
                bi = i;
                bj = j;
                return false;
            }
        }
    return true;
}

} // namespace

SmithForm smith_normal_form(const IntMat& m) {
    SmithForm out{IntMat::identity(m.rows()), m, IntMat::identity(m.cols())};
    IntMat& d = out.d;
    IntMat& u = out.u;
    IntMat& v = out.v;
    const std::size_t n = std::min(d.rows(), d.cols());

    auto smallest_in_block = [&](std::size_t t, std::size_t& pi, std::size_t& pj) {
        bool found = false;
        BigInt best;
        for (std::size_t i = t; i < d.rows(); ++i)
            for (std::size_t j = t; j < d.cols(); ++j) {
                if (d(i, j) == 0) continue;
                BigInt a = abs(d(i, j));
                if (!found || a < best) {
                    best = a;
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        return found;
    };

    for (std::size_t t = 0; t < n; ++t) {
        std::size_t pi, pj;
        if (!smallest_in_block(t, pi, pj)) break;
        for (;;) {
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            // euclidean clearing of the pivot row and column; residues shrink
            // strictly, so repeating with a fresh minimal pivot terminates
            bool dirty = false;
            for (std::size_t i = t + 1; i < d.rows(); ++i) {
                if (d(i, t) == 0) continue;
                BigInt q = d(i, t) / d(t, t);
                if (q != 0) {
                    for (std::size_t j = 0; j < d.cols(); ++j) d(i, j) -= q * d(t, j);
                    for (std::size_t j = 0; j < u.cols(); ++j) u(i, j) -= q * u(t, j);
                }
                if (d(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < d.cols(); ++j) {
                if (d(t, j) == 0) continue;
                BigInt q = d(t, j) / d(t, t);
                if (q != 0) {
                    for (std::size_t i = 0; i < d.rows(); ++i) d(i, j) -= q * d(i, t);
                    for (std::size_t i = 0; i < v.rows(); ++i) v(i, j) -= q * v(i, t);
                }
                if (d(t, j) != 0) dirty = true;
            }
            if (!dirty) {
                std::size_t bi, bj;
                if (block_divisible(d, t + 1, d(t, t), bi, bj)) break;
                // pull the offending row up so the next pivot divides it
                for (std::size_t j = 0; j < d.cols(); ++j) d(t, j) += d(bi, j);
                for (std::size_t j = 0; j < u.cols(); ++j) u(t, j) += u(bi, j);
            }
            smallest_in_block(t, pi, pj);
        }
        if (d(t, t) < 0) {
            for (std::size_t j = 0; j < u.cols(); ++j) u(t, j) = -u(t, j);
            d(t, t) = -d(t, t);
        }
    }
    return out;
}

IntMat integer_kernel(const IntMat& m) {
    SmithForm s = smith_normal_form(m);
    std::size_t rank = 0;
    const std::size_t n = std::min(m.rows(), m.cols());
    while (rank < n && s.d(rank, rank) != 0) ++rank;
    IntMat ker(m.cols(), m.cols() - rank);
    for (std::size_t j = rank; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.cols(); ++i) ker(i, j - rank) = s.v(i, j);
    return ker;
}

std::optional<std::vector<BigInt>> solve_integer(const IntMat& m, const std::vector<BigInt>& b) {
    if (b.size() != m.rows()) throw Error("solve shape mismatch");
    SmithForm s = smith_normal_form(m);
    std::vector<BigInt> ub(m.rows(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.rows(); ++j) ub[i] += s.u(i, j) * b[j];
    std::vector<BigInt> y(m.cols(), 0);
    const std::size_t n = std::min(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        BigInt di = i < n ? s.d(i, i) : BigInt(0);
        if (di == 0) {
            if (ub[i] != 0) return std::nullopt;
        } else {
            if (ub[i] % di != 0) return std::nullopt;
            y[i] = ub[i] / di;
        }
    }
    std::vector<BigInt> x(m.cols(), 0);
    for (std::size_t i = 0; i < m.cols(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) x[i] += s.v(i, j) * y[j];
    return x;
}

std::optional<std::vector<BigRat>> solve_rational(const RatMat& m, const std::vector<BigRat>& b) {
    if (b.size() != m.rows()) throw Error("solve shape mismatch");
    RatMat aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    rref(aug);
    std::vector<BigRat> x(m.cols(), BigRat(0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::size_t lead = 0;
        while (lead < m.cols() && aug(i, lead) == 0) ++lead;
        if (lead == m.cols()) {
            if (aug(i, m.cols()) != 0) return std::nullopt;
            continue;
        }
        x[lead] = aug(i, m.cols());
    }
    return x;
}

std::optional<IntMat> integer_inverse(const IntMat& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    BigInt det = determinant(m);
    if (det != 1 && det != -1) return std::nullopt;
    const std::size_t n = m.rows();
    RatMat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = BigRat(m(i, j));
        aug(i, n + i) = 1;
    }
    if (rref(aug) != n) return std::nullopt;
    IntMat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            BigRat q = aug(i, n + j);
            if (!is_integer(q)) return std::nullopt;
            inv(i, j) = q.get_num();
        }
    return inv;
}

BigInt determinant(const IntMat& m) {
    if (m.rows() != m.cols()) throw Error("determinant of non-square matrix");
    RatMat w = to_rational(m);
    BigRat det(1);
    const std::size_t n = w.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && w(pivot, col) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            w.swap_rows(col, pivot);
            det = -det;
        }
        det *= w(col, col);
        BigRat inv = 1 / w(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (w(i, col) == 0) continue;
            BigRat f = w(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) w(i, j) -= f * w(col, j);
        }
    }
    return det.get_num(); // exact: product of pivots of an integer matrix
}

bool is_identity(const IntMat& m) {
    if (m.rows() != m.cols()) return false;
    return m == IntMat::identity(m.rows());
}

std::vector<BigInt> elementary_divisors(const IntMat& m) {
    SmithForm s = smith_normal_form(m);
    std::vector<BigInt> out;
    const std::size_t n = std::min(m.rows(), m.cols());
    std::size_t rank = 0;
    while (rank < n && s.d(rank, rank) != 0) ++rank;
    for (std::size_t i = 0; i < rank; ++i) out.push_back(s.d(i, i));
    for (std::size_t i = rank; i < m.rows(); ++i) out.push_back(0); // free cokernel rank
    return out;
}

} // namespace equibir
