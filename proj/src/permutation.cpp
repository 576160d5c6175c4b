#include "equibir/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace equibir {

Perm::Perm(std::vector<std::uint32_t> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (auto v : img_) {
        if (v >= img_.size() || seen[v]) throw BadGenerator("not a permutation");
        seen[v] = true;
    }
}

Perm Perm::identity(std::size_t m) {
    std::vector<std::uint32_t> v(m);
    for (std::size_t i = 0; i < m; ++i) v[i] = static_cast<std::uint32_t>(i);
    return Perm(std::move(v));
}

Perm Perm::parse_cycles(std::string_view text, std::size_t min_degree) {
    std::vector<std::vector<std::uint32_t>> cycles;
    std::size_t maxpt = min_degree;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    while (i < text.size()) {
        if (text[i] != '(') throw FixtureError("expected '(' in cycle notation");
        ++i;
        std::vector<std::uint32_t> cyc;
        skip();
        while (i < text.size() && text[i] != ')') {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            if (j == i) throw FixtureError("expected point in cycle notation");
            unsigned long p = std::stoul(std::string(text.substr(i, j - i)));
            if (p == 0) throw FixtureError("points are one-based");
            cyc.push_back(static_cast<std::uint32_t>(p - 1));
            maxpt = std::max<std::size_t>(maxpt, p);
            i = j;
            skip();
            if (i < text.size() && (text[i] == ',')) {
                ++i;
                skip();
            }
        }
        if (i == text.size()) throw FixtureError("unterminated cycle");
        ++i; // ')'
        skip();
        if (!cyc.empty()) cycles.push_back(std::move(cyc));
    }
    // compose cycles right-to-left so overlapping cycles mean composition
    Perm out = Perm::identity(maxpt);
    for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
        std::vector<std::uint32_t> img(maxpt);
        for (std::size_t k = 0; k < maxpt; ++k) img[k] = static_cast<std::uint32_t>(k);
        for (std::size_t k = 0; k < it->size(); ++k) {
            if (img[(*it)[k]] != (*it)[k]) throw FixtureError("repeated point inside a cycle");
            img[(*it)[k]] = (*it)[(k + 1) % it->size()];
        }
        out = Perm(std::move(img)) * out;
    }
    return out;
}

Perm operator*(const Perm& a, const Perm& b) {
    if (a.degree() != b.degree()) throw BadGenerator("permutation degree mismatch");
    std::vector<std::uint32_t> v(a.degree());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.img_[b.img_[i]];
    return Perm(std::move(v));
}

Perm Perm::inverse() const {
    std::vector<std::uint32_t> v(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) v[img_[i]] = static_cast<std::uint32_t>(i);
    return Perm(std::move(v));
}

bool Perm::is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != i) return false;
    return true;
}

unsigned Perm::order() const {
    Perm p = *this;
    unsigned k = 1;
    while (!p.is_identity()) {
        p = p * *this;
        ++k;
    }
    return k;
}

std::string Perm::cycle_str() const {
    std::vector<bool> seen(img_.size(), false);
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (seen[i] || img_[i] == i) {
            seen[i] = true;
            continue;
        }
        os << '(';
        std::size_t j = i;
        bool first = true;
        while (!seen[j]) {
            if (!first) os << ' ';
            first = false;
            os << j + 1;
            seen[j] = true;
            j = img_[j];
        }
        os << ')';
        any = true;
    }
    return any ? os.str() : "()";
}

} // namespace equibir
