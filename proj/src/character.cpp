#include "equibir/character.hpp"

#include <algorithm>

namespace equibir {

const ClassFunction& CharTable::row(const std::string& label) const {
    return rows[row_index(label)];
}

std::size_t CharTable::row_index(const std::string& label) const {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw Error("no character row labeled " + label);
    return static_cast<std::size_t>(it - labels.begin());
}

CycNum inner_product(const ClassFunction& a, const ClassFunction& b) {
    if (a.group != b.group) throw GroupMismatch("inner product across different groups");
    const FinGroup& g = *a.group;
    CycNum acc;
    for (std::size_t c = 0; c < g.num_classes(); ++c) {
        CycNum term = a.values[c] * b.values[c].conjugate();
        acc = acc + term.scaled(BigRat(static_cast<long>(g.class_size(c))));
    }
    return acc.scaled(make_rat(1, static_cast<long>(g.order())));
}

namespace {

ClassFunction square_combination(const ClassFunction& chi, int sign) {
    auto deg = chi.degree().rational_integer();
    if (!deg || *deg < 0) throw NotACharacter("degree must be a nonnegative integer");
    const FinGroup& g = *chi.group;
    ClassFunction out{chi.group, {}};
    out.values.reserve(g.num_classes());
    const BigRat half = make_rat(1, 2);
    for (std::size_t c = 0; c < g.num_classes(); ++c) {
        const CycNum& v = chi.values[c];
        const CycNum& v2 = chi.values[g.power_class(c, 2)];
        CycNum s = sign > 0 ? v * v + v2 : v * v - v2;
        out.values.push_back(s.scaled(half));
    }
    return out;
}

} // namespace

ClassFunction wedge_square(const ClassFunction& chi) { return square_combination(chi, -1); }
ClassFunction sym_square(const ClassFunction& chi) { return square_combination(chi, +1); }

TableReport verify_table(const CharTable& t) {
    TableReport rep;
    auto fail = [&](std::string msg) {
        rep.ok = false;
        rep.violations.push_back(std::move(msg));
    };
    const FinGroup& g = *t.group;
    if (t.rows.size() != g.num_classes())
        fail("row count " + std::to_string(t.rows.size()) + " != class count " +
             std::to_string(g.num_classes()));
    BigInt degsum = 0;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        auto d = t.rows[i].degree().rational_integer();
        if (!d || *d <= 0) {
            fail("row " + t.labels[i] + " has non-positive or non-integral degree");
            continue;
        }
        degsum += *d * *d;
    }
    if (degsum != static_cast<long>(g.order()))
        fail("degree square sum " + degsum.get_str() + " != group order " +
             std::to_string(g.order()));
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        for (std::size_t j = i; j < t.rows.size(); ++j) {
            CycNum ip = inner_product(t.rows[i], t.rows[j]);
            CycNum want = CycNum::from_int(i == j ? 1 : 0);
            if (ip != want) {
                fail("orthogonality fails at (" + t.labels[i] + ", " + t.labels[j] +
                     "): got " + ip.str());
                if (rep.violations.size() > 8) return rep;
            }
        }
    return rep;
}

std::vector<std::pair<std::string, BigInt>> decompose(const ClassFunction& chi,
                                                      const CharTable& t) {
    if (chi.group != t.group) throw GroupMismatch("decompose across different groups");
    std::vector<std::pair<std::string, BigInt>> out;
    std::vector<CycNum> rebuilt(t.group->num_classes());
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        CycNum m = inner_product(chi, t.rows[i]);
        auto mi = m.rational_integer();
        if (!mi || *mi < 0)
            throw NotACharacter("multiplicity of " + t.labels[i] + " is " + m.str());
        out.emplace_back(t.labels[i], *mi);
        if (*mi != 0) {
            BigRat scale(*mi);
            for (std::size_t c = 0; c < rebuilt.size(); ++c)
                rebuilt[c] = rebuilt[c] + t.rows[i].values[c].scaled(scale);
        }
    }
    for (std::size_t c = 0; c < rebuilt.size(); ++c)
        if (rebuilt[c] != chi.values[c])
            throw NotACharacter("multiplicities do not reassemble the class function");
    return out;
}

ClassFunction restrict_to(const ClassFunction& chi, std::shared_ptr<const FinGroup> sub) {
    const FinGroup& g = *chi.group;
    ClassFunction out{std::move(sub), {}};
    out.values.reserve(out.group->num_classes());
    for (std::size_t c = 0; c < out.group->num_classes(); ++c) {
        const GroupElement& rep = out.group->elements()[out.group->class_rep(c)];
        out.values.push_back(chi.values[g.class_of(g.index_of(rep))]);
    }
    return out;
}

} // namespace equibir
