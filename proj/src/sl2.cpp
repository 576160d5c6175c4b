#include "equibir/sl2.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "equibir/errors.hpp"

namespace equibir {

bool WeightModule::relations_hold() const {
    auto bracket = [](const RatMat& a, const RatMat& b) { return a * b - b * a; };
    RatMat two_x(x.rows(), x.cols()), neg_two_y(y.rows(), y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) {
            two_x(i, j) = x(i, j) * 2;
            neg_two_y(i, j) = y(i, j) * -2;
        }
    return bracket(h, x) == two_x && bracket(h, y) == neg_two_y && bracket(x, y) == h;
}

WeightModule sym_power(unsigned n) {
    WeightModule m;
    const std::size_t d = n + 1;
    m.weights.resize(d);
    m.basis_names.resize(d);
    for (std::size_t k = 0; k < d; ++k) {
        m.weights[k] = static_cast<long>(n) - 2 * static_cast<long>(k);
        m.basis_names[k] = "w" + std::to_string(m.weights[k]);
    }
    m.h = RatMat(d, d);
    m.x = RatMat(d, d);
    m.y = RatMat(d, d);
    for (std::size_t k = 0; k < d; ++k) {
        m.h(k, k) = m.weights[k];
        if (k + 1 < d) m.y(k + 1, k) = 1; // Y w_{n-2k} = w_{n-2k-2}
        if (k > 0) m.x(k - 1, k) = BigRat(static_cast<long>(k) * static_cast<long>(n - k + 1));
    }
    return m;
}

WeightModule wedge_square(const WeightModule& m) {
    const std::size_t d = m.dim();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) pairs.emplace_back(i, j);

    WeightModule w;
    const std::size_t dd = pairs.size();
    w.weights.resize(dd);
    w.basis_names.resize(dd);
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
    for (std::size_t t = 0; t < dd; ++t) {
        auto [i, j] = pairs[t];
        w.weights[t] = m.weights[i] + m.weights[j];
        w.basis_names[t] = m.basis_names[i] + "^" + m.basis_names[j];
        index[pairs[t]] = t;
    }
    w.h = RatMat(dd, dd);
    w.x = RatMat(dd, dd);
    w.y = RatMat(dd, dd);
    for (std::size_t t = 0; t < dd; ++t) w.h(t, t) = w.weights[t];

    // Leibniz: g(a ^ b) = g(a) ^ b + a ^ g(b), resorted into i < j order
    auto fill = [&](const RatMat& op, RatMat& target) {
        for (std::size_t t = 0; t < dd; ++t) {
            auto [i, j] = pairs[t];
            for (std::size_t k = 0; k < d; ++k) {
                if (!elem_is_zero(op(k, i)) && k != j) {
                    auto key = k < j ? std::make_pair(k, j) : std::make_pair(j, k);
                    BigRat sign = k < j ? 1 : -1;
                    target(index[key], t) += sign * op(k, i);
                }
                if (!elem_is_zero(op(k, j)) && k != i) {
                    auto key = i < k ? std::make_pair(i, k) : std::make_pair(k, i);
                    BigRat sign = i < k ? 1 : -1;
                    target(index[key], t) += sign * op(k, j);
                }
            }
        }
    };
    fill(m.x, w.x);
    fill(m.y, w.y);
    return w;
}

namespace {

std::vector<BigRat> normalize_primitive(std::vector<BigRat> v) {
    // clear denominators, divide by the gcd, make the first nonzero positive
    BigInt lcm = 1;
    for (const auto& c : v) lcm = lcm * c.get_den() / gcd(lcm, c.get_den());
    BigInt g = 0;
    for (auto& c : v) {
        c *= BigRat(lcm);
        g = gcd(g, c.get_num());
    }
    if (g == 0) return v;
    int sign = 0;
    for (const auto& c : v)
        if (c != 0) {
            sign = c > 0 ? 1 : -1;
            break;
        }
    for (auto& c : v) c /= BigRat(sign > 0 ? g : -g);
    return v;
}

} // namespace

std::vector<std::vector<BigRat>> highest_weight_vectors(const WeightModule& m, long lambda) {
    std::vector<std::size_t> slots;
    for (std::size_t i = 0; i < m.dim(); ++i)
        if (m.weights[i] == lambda) slots.push_back(i);
    if (slots.empty()) return {};

    // rows: all coordinates of X v restricted to the lambda-slot unknowns
    RatMat a(m.dim(), slots.size());
    for (std::size_t c = 0; c < slots.size(); ++c)
        for (std::size_t r = 0; r < m.dim(); ++r) a(r, c) = m.x(r, slots[c]);
    // kernel over Q by elimination
    RatMat work = a;
    std::size_t rank = rref(work);
    std::vector<std::size_t> lead;
    std::vector<bool> is_lead(slots.size(), false);
    for (std::size_t r = 0; r < rank; ++r) {
        std::size_t c = 0;
        while (c < slots.size() && work(r, c) == 0) ++c;
        lead.push_back(c);
        is_lead[c] = true;
    }
    std::vector<std::vector<BigRat>> out;
    for (std::size_t free = 0; free < slots.size(); ++free) {
        if (is_lead[free]) continue;
        std::vector<BigRat> coords(slots.size(), BigRat(0));
        coords[free] = 1;
        for (std::size_t r = 0; r < rank; ++r) coords[lead[r]] = -work(r, free);
        std::vector<BigRat> full(m.dim(), BigRat(0));
        for (std::size_t c = 0; c < slots.size(); ++c) full[slots[c]] = coords[c];
        out.push_back(normalize_primitive(std::move(full)));
    }
    return out;
}

std::vector<std::vector<BigRat>> lowering_orbit(const WeightModule& m,
                                                const std::vector<BigRat>& v, unsigned steps) {
    std::vector<std::vector<BigRat>> out{v};
    for (unsigned k = 0; k < steps; ++k) out.push_back(m.y * out.back());
    return out;
}

std::vector<std::pair<unsigned, unsigned>> decompose_wedge(unsigned n) {
    if (n == 0) return {};
    std::map<long, unsigned> count;
    for (long i = 0; i <= static_cast<long>(n); ++i)
        for (long j = i + 1; j <= static_cast<long>(n); ++j)
            ++count[2 * static_cast<long>(n) - 2 * (i + j)];
    std::vector<std::pair<unsigned, unsigned>> out;
    for (auto it = count.rbegin(); it != count.rend(); ++it) {
        long w = it->first;
        if (w < 0) break;
        unsigned mult = it->second - (count.count(w + 2) ? count[w + 2] : 0);
        if (mult) out.emplace_back(static_cast<unsigned>(w), mult);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string format_vector(const WeightModule& m, const std::vector<BigRat>& v) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (!(v[i] == 1)) os << rat_str(v[i]) << "*";
        os << m.basis_names[i];
    }
    return first ? "0" : os.str();
}

} // namespace equibir
