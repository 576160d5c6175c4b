#include "equibir/cyclotomic.hpp"

#include <atomic>
#include <cctype>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace equibir {

namespace {

std::atomic<unsigned> g_conductor_cap{64};

// little-endian polynomial division over Q: num becomes the remainder,
// quot (if given) receives the quotient
void poly_divmod(std::vector<BigRat>& num, const std::vector<BigRat>& den,
                 std::vector<BigRat>* quot) {
    std::size_t dn = den.size();
    while (dn > 0 && den[dn - 1] == 0) --dn;
    if (dn == 0) throw DivisionByZero();
    const BigRat lead = den[dn - 1];
    if (quot) quot->assign(num.size() >= dn ? num.size() - dn + 1 : 1, BigRat(0));
    for (std::size_t i = num.size(); i-- > dn - 1;) {
        BigRat c = num[i] / lead;
        if (c == 0) continue;
        const std::size_t shift = i - (dn - 1);
        if (quot) (*quot)[shift] = c;
        for (std::size_t j = 0; j < dn; ++j) num[shift + j] -= c * den[j];
    }
    while (!num.empty() && num.back() == 0) num.pop_back();
}

std::vector<BigRat> to_rat(const std::vector<BigInt>& v) {
    std::vector<BigRat> out;
    out.reserve(v.size());
    for (const auto& x : v) out.emplace_back(x);
    return out;
}

} // namespace

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

const std::vector<BigInt>& cyclotomic_polynomial(unsigned n) {
    static std::mutex mu;
    static std::unordered_map<unsigned, std::vector<BigInt>> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // Phi_n = (t^n - 1) / prod_{d | n, d < n} Phi_d, computed bottom-up so the
    // recursion never re-enters the lock.
    std::vector<unsigned> stack{n};
    for (std::size_t s = 0; s < stack.size(); ++s)
        for (unsigned d = 1; d < stack[s]; ++d)
            if (stack[s] % d == 0 && !cache.count(d)) stack.push_back(d);
    std::sort(stack.begin(), stack.end());
    for (unsigned m : stack) {
        if (cache.count(m)) continue;
        std::vector<BigRat> phi(m + 1, BigRat(0));
        phi[0] = -1;
        phi[m] = 1;
        for (unsigned d = 1; d < m; ++d) {
            if (m % d != 0) continue;
            std::vector<BigRat> q;
            poly_divmod(phi, to_rat(cache.at(d)), &q);
            phi = std::move(q);
        }
        std::vector<BigInt> out;
        out.reserve(phi.size());
        for (const auto& c : phi) out.push_back(c.get_num()); // exact: denominators are 1
        cache.emplace(m, std::move(out));
    }
    return cache.at(n);
}

void CycNum::set_conductor_cap(unsigned cap) { g_conductor_cap.store(cap); }
unsigned CycNum::conductor_cap() { return g_conductor_cap.load(); }

CycNum CycNum::from_dense(unsigned n, std::vector<BigRat> dense) {
    if (n == 0 || n > g_conductor_cap.load())
        throw Error("conductor " + std::to_string(n) + " outside the allowed range");
    dense.resize(std::max<std::size_t>(dense.size(), n), BigRat(0));
    // fold exponents >= n (zeta^n = 1)
    for (std::size_t e = dense.size(); e-- > n;) {
        if (dense[e] != 0) dense[e % n] += dense[e];
        if (e >= n) dense[e] = 0;
    }
    dense.resize(n);
    const auto& phi = cyclotomic_polynomial(n);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t e = n; e-- > deg;) {
        if (dense[e] == 0) continue;
        BigRat c = dense[e];
        dense[e] = 0;
        for (std::size_t j = 0; j < phi.size(); ++j)
            dense[e - deg + j] -= c * BigRat(phi[j]);
    }
    CycNum out;
    out.n_ = n;
    for (unsigned e = 0; e < deg; ++e)
        if (dense[e] != 0) out.c_.emplace(e, dense[e]);
    return out;
}

CycNum CycNum::from_rational(const BigRat& q) {
    CycNum out;
    if (q != 0) out.c_.emplace(0, q);
    return out;
}

CycNum CycNum::zeta(unsigned n, unsigned long k) {
    std::vector<BigRat> dense(n, BigRat(0));
    if (n == 0) throw Error("conductor must be positive");
    dense[k % n] = 1;
    return from_dense(n, std::move(dense));
}

CycNum CycNum::embedded(unsigned m) const {
    if (m == n_) return *this;
    if (m % n_ != 0) throw Error("embedding target must be a conductor multiple");
    std::vector<BigRat> dense(m, BigRat(0));
    const unsigned f = m / n_;
    for (const auto& [e, v] : c_) dense[e * f] = v;
    return from_dense(m, std::move(dense));
}

CycNum operator+(const CycNum& a, const CycNum& b) {
    unsigned m = std::lcm(a.n_, b.n_);
    CycNum ea = a.embedded(m), eb = b.embedded(m);
    for (const auto& [e, v] : eb.c_) {
        auto [it, fresh] = ea.c_.try_emplace(e, v);
        if (!fresh) {
            it->second += v;
            if (it->second == 0) ea.c_.erase(it);
        }
    }
    return ea;
}

CycNum CycNum::operator-() const {
    CycNum out = *this;
    for (auto& [e, v] : out.c_) v = -v;
    return out;
}

CycNum operator-(const CycNum& a, const CycNum& b) { return a + (-b); }

CycNum operator*(const CycNum& a, const CycNum& b) {
    unsigned m = std::lcm(a.n_, b.n_);
    CycNum ea = a.embedded(m), eb = b.embedded(m);
    std::vector<BigRat> dense(2 * m, BigRat(0));
    for (const auto& [e1, v1] : ea.c_)
        for (const auto& [e2, v2] : eb.c_) dense[e1 + e2] += v1 * v2;
    return CycNum::from_dense(m, std::move(dense));
}

CycNum CycNum::scaled(const BigRat& q) const {
    CycNum out;
    out.n_ = n_;
    if (q == 0) return out;
    for (const auto& [e, v] : c_) out.c_.emplace(e, v * q);
    return out;
}

CycNum CycNum::inverse() const {
    if (is_zero()) throw DivisionByZero();
    // extended euclid in Q[t] against Phi_n; the element is a unit there
    const auto& phi_int = cyclotomic_polynomial(n_);
    const std::size_t deg = phi_int.size() - 1;
    std::vector<BigRat> r0(phi_int.size());
    for (std::size_t i = 0; i < phi_int.size(); ++i) r0[i] = BigRat(phi_int[i]);
    std::vector<BigRat> r1(deg, BigRat(0));
    for (const auto& [e, v] : c_) r1[e] = v;
    while (!r1.empty() && r1.back() == 0) r1.pop_back();
    std::vector<BigRat> s0{BigRat(0)}, s1{BigRat(1)}; // coefficients of *this
    while (true) {
        std::vector<BigRat> q;
        std::vector<BigRat> rem = r0;
        poly_divmod(rem, r1, &q);
        if (rem.empty()) {
            // r1 is the gcd, a nonzero constant
            BigRat lead = r1.back();
            CycNum out;
            out.n_ = n_;
            for (std::size_t e = 0; e < s1.size(); ++e)
                if (s1[e] != 0) out.c_.emplace(static_cast<unsigned>(e), s1[e] / lead);
            return out;
        }
        std::vector<BigRat> s2(std::max(s0.size(), q.size() + s1.size() - 1), BigRat(0));
        for (std::size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
        for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
        while (!s2.empty() && s2.back() == 0) s2.pop_back();
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
}

CycNum CycNum::galois(long k) const {
    long km = k % static_cast<long>(n_);
    if (km < 0) km += n_;
    if (std::gcd(static_cast<unsigned long>(km), static_cast<unsigned long>(n_)) != 1
        && !(n_ == 1 && km == 0))
        throw InvalidGaloisIndex("galois index " + std::to_string(k) +
                                 " not coprime to conductor " + std::to_string(n_));
    std::vector<BigRat> dense(n_, BigRat(0));
    for (const auto& [e, v] : c_) dense[(e * km) % n_] += v;
    return from_dense(n_, std::move(dense));
}

std::optional<BigRat> CycNum::rational() const {
    if (c_.empty()) return BigRat(0);
    if (c_.size() == 1 && c_.begin()->first == 0) return c_.begin()->second;
    return std::nullopt;
}

std::optional<BigInt> CycNum::rational_integer() const {
    auto q = rational();
    if (!q || !is_integer(*q)) return std::nullopt;
    return q->get_num();
}

bool CycNum::operator==(const CycNum& o) const {
    if (n_ == o.n_) return c_ == o.c_;
    unsigned m = std::lcm(n_, o.n_);
    return embedded(m).c_ == o.embedded(m).c_;
}

std::string CycNum::str() const {
    if (n_ == 1) return c_.empty() ? "0" : rat_str(c_.begin()->second);
    if (c_.empty()) return "0";
    std::ostringstream os;
    os << "z(" << n_ << ") ";
    bool first = true;
    for (const auto& [e, v] : c_) {
        if (!first) os << " + ";
        first = false;
        os << rat_str(v);
        if (e == 1)
            os << "*z";
        else if (e > 1)
            os << "*z^" << e;
    }
    return os.str();
}

namespace {

void skip_ws(std::string_view& s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
}

BigRat take_rat(std::string_view& s) {
    skip_ws(s);
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i < s.size() && s[i] == '/') {
        ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    }
    std::string tok(s.substr(0, i));
    s.remove_prefix(i);
    return parse_rat(tok);
}

} // namespace

BigRat parse_rat(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw Error("empty rational literal");
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) return BigRat(BigInt(s));
        return make_rat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw Error("bad rational literal: " + s);
    }
}

CycNum CycNum::parse(std::string_view text) {
    skip_ws(text);
    if (text.empty()) throw Error("empty cyclotomic literal");
    if (text.substr(0, 2) != "z(") {
        return from_rational(take_rat(text));
    }
    text.remove_prefix(2);
    std::size_t close = text.find(')');
    if (close == std::string_view::npos) throw Error("missing ')' in conductor header");
    unsigned n = static_cast<unsigned>(std::stoul(std::string(text.substr(0, close))));
    text.remove_prefix(close + 1);
    std::vector<BigRat> dense(n, BigRat(0));
    while (true) {
        BigRat coef = take_rat(text);
        unsigned long e = 0;
        skip_ws(text);
        if (!text.empty() && text.front() == '*') {
            text.remove_prefix(1);
            skip_ws(text);
            if (text.empty() || text.front() != 'z') throw Error("expected z after '*'");
            text.remove_prefix(1);
            e = 1;
            skip_ws(text);
            if (!text.empty() && text.front() == '^') {
                text.remove_prefix(1);
                skip_ws(text);
                std::size_t i = 0;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
                e = std::stoul(std::string(text.substr(0, i)));
                text.remove_prefix(i);
            }
        }
        dense[e % n] += coef;
        skip_ws(text);
        if (text.empty()) break;
        if (text.front() != '+') throw Error("expected '+' between terms");
        text.remove_prefix(1);
    }
    return from_dense(n, std::move(dense));
}

} // namespace equibir
