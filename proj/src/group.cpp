#include "equibir/group.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace equibir {

GroupElement::GroupElement(Perm p) : v_(std::move(p)) { make_key(); }

GroupElement::GroupElement(IntMat m) : v_(std::move(m)) {
    const IntMat& mm = matrix();
    if (mm.rows() != mm.cols()) throw BadGenerator("matrix generator must be square");
    BigInt det = determinant(mm);
    if (det != 1 && det != -1)
        throw BadGenerator("matrix generator must be invertible over Z (det " + det.get_str() +
                           ")");
    make_key();
}

void GroupElement::make_key() {
    std::ostringstream os;
    if (is_permutation()) {
        const Perm& p = perm();
        os << "p" << p.degree() << ":";
        for (std::size_t i = 0; i < p.degree(); ++i) os << p.images()[i] << ",";
    } else {
        const IntMat& m = matrix();
        os << "m" << m.rows() << ":";
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) os << m(i, j).get_str() << ",";
    }
    key_ = os.str();
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    if (a.is_permutation() != b.is_permutation())
        throw BadGenerator("cannot mix permutation and matrix elements");
    if (a.is_permutation()) return GroupElement(a.perm() * b.perm());
    return GroupElement(a.matrix() * b.matrix());
}

GroupElement GroupElement::inverse() const {
    if (is_permutation()) return GroupElement(perm().inverse());
    auto inv = integer_inverse(matrix());
    if (!inv) throw BadGenerator("matrix element not invertible over Z");
    return GroupElement(std::move(*inv));
}

bool GroupElement::is_identity() const {
    if (is_permutation()) return perm().is_identity();
    return equibir::is_identity(matrix());
}

GroupElement GroupElement::identity_like() const {
    if (is_permutation()) return GroupElement(Perm::identity(perm().degree()));
    return GroupElement(IntMat::identity(matrix().rows()));
}

std::string GroupElement::display() const {
    if (is_permutation()) return perm().cycle_str();
    const IntMat& m = matrix();
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) os << "; ";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << " ";
            os << m(i, j).get_str();
        }
    }
    os << "]";
    return os.str();
}

FinGroup FinGroup::close(std::vector<GroupElement> gens, std::size_t cap) {
    if (gens.empty()) throw BadGenerator("need at least one generator");
    for (const auto& g : gens)
        if (g.is_permutation() != gens.front().is_permutation())
            throw BadGenerator("generators must share one element kind");

    FinGroup out;
    out.gens_ = gens;
    GroupElement id = gens.front().identity_like();

    // BFS closure recording, per element, one factorization elem = parent * gen
    std::vector<GroupElement> pool{id};
    std::unordered_map<std::string, std::size_t> seen{{id.key(), 0}};
    std::vector<std::pair<std::size_t, std::size_t>> parent{{SIZE_MAX, SIZE_MAX}};
    for (std::size_t i = 0; i < pool.size(); ++i) {
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            GroupElement next = pool[i] * gens[gi];
            auto [it, fresh] = seen.try_emplace(next.key(), pool.size());
            if (fresh) {
                pool.push_back(std::move(next));
                parent.emplace_back(i, gi);
                if (pool.size() > cap)
                    throw GroupTooLarge("closure exceeds cap " + std::to_string(cap));
            }
        }
    }

    // canonical order, then remap the factorization links
    std::vector<std::size_t> by_key(pool.size());
    for (std::size_t i = 0; i < pool.size(); ++i) by_key[i] = i;
    std::sort(by_key.begin(), by_key.end(),
              [&](std::size_t a, std::size_t b) { return pool[a].key() < pool[b].key(); });
    std::vector<std::size_t> new_of_old(pool.size());
    for (std::size_t n = 0; n < by_key.size(); ++n) new_of_old[by_key[n]] = n;
    out.elements_.resize(pool.size());
    out.parent_.resize(pool.size());
    for (std::size_t old = 0; old < pool.size(); ++old) {
        out.elements_[new_of_old[old]] = pool[old];
        auto [p, g] = parent[old];
        out.parent_[new_of_old[old]] =
            p == SIZE_MAX ? std::make_pair(SIZE_MAX, SIZE_MAX) : std::make_pair(new_of_old[p], g);
    }
    for (std::size_t i = 0; i < out.elements_.size(); ++i)
        out.index_.emplace(out.elements_[i].key(), i);
    out.identity_ = out.index_.at(id.key());

    out.inverse_.resize(out.order());
    out.element_order_.resize(out.order());
    for (std::size_t i = 0; i < out.order(); ++i) {
        out.inverse_[i] = out.index_.at(out.elements_[i].inverse().key());
        unsigned k = 1;
        std::size_t x = i;
        while (x != out.identity_) {
            x = out.mul(x, i);
            ++k;
        }
        out.element_order_[i] = k;
    }

    // conjugacy classes: orbits under conjugation by the generators;
    // identity class first, then ordered by least member index
    std::vector<std::size_t> gen_idx;
    for (const auto& g : out.gens_) gen_idx.push_back(out.index_.at(g.key()));
    out.class_of_.assign(out.order(), SIZE_MAX);
    std::vector<std::size_t> scan_order(out.order());
    for (std::size_t i = 0; i < out.order(); ++i) scan_order[i] = i;
    std::swap(scan_order[0], scan_order[out.identity_]);
    for (std::size_t s : scan_order) {
        if (out.class_of_[s] != SIZE_MAX) continue;
        std::size_t c = out.class_members_.size();
        std::vector<std::size_t> members{s};
        out.class_of_[s] = c;
        for (std::size_t w = 0; w < members.size(); ++w) {
            for (std::size_t gi : gen_idx) {
                std::size_t y = out.mul(out.mul(gi, members[w]), out.inverse_[gi]);
                if (out.class_of_[y] == SIZE_MAX) {
                    out.class_of_[y] = c;
                    members.push_back(y);
                }
            }
        }
        std::sort(members.begin(), members.end());
        out.class_members_.push_back(std::move(members));
    }
    // identity class stays first; the rest sorted by least member
    std::sort(out.class_members_.begin() + 1, out.class_members_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (std::size_t c = 0; c < out.class_members_.size(); ++c)
        for (std::size_t e : out.class_members_[c]) out.class_of_[e] = c;
    return out;
}

std::optional<std::size_t> FinGroup::find(const GroupElement& g) const {
    auto it = index_.find(g.key());
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t FinGroup::index_of(const GroupElement& g) const {
    auto i = find(g);
    if (!i) throw GroupMismatch("element not in group: " + g.display());
    return *i;
}

std::size_t FinGroup::mul(std::size_t i, std::size_t j) const {
    return index_.at((elements_[i] * elements_[j]).key());
}

std::size_t FinGroup::power(std::size_t i, long k) const {
    unsigned n = element_order_[i];
    long km = k % static_cast<long>(n);
    if (km < 0) km += n;
    std::size_t acc = identity_;
    std::size_t base = i;
    unsigned long e = static_cast<unsigned long>(km);
    while (e) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

std::size_t FinGroup::power_class(std::size_t c, long k) const {
    return class_of_[power(class_rep(c), k)];
}

bool Subgroup::contains(std::size_t e) const {
    return std::binary_search(elems.begin(), elems.end(), e);
}

Subgroup cyclic_subgroup(const FinGroup& g, std::size_t elem) {
    Subgroup h;
    std::size_t x = g.identity();
    do {
        h.elems.push_back(x);
        x = g.mul(x, elem);
    } while (x != g.identity());
    std::sort(h.elems.begin(), h.elems.end());
    h.cyclic = true;
    return h;
}

namespace {

std::vector<std::size_t> close_subset(const FinGroup& g, std::vector<std::size_t> seed) {
    std::set<std::size_t> have(seed.begin(), seed.end());
    have.insert(g.identity());
    std::vector<std::size_t> work(have.begin(), have.end());
    for (std::size_t i = 0; i < work.size(); ++i) {
        for (std::size_t j = 0; j < work.size(); ++j) {
            std::size_t p = g.mul(work[i], work[j]);
            if (have.insert(p).second) work.push_back(p);
        }
        std::size_t inv = g.inv(work[i]);
        if (have.insert(inv).second) work.push_back(inv);
    }
    return {have.begin(), have.end()};
}

bool subgroup_is_normal(const FinGroup& g, const std::vector<std::size_t>& elems) {
    for (const auto& gen : g.generators()) {
        std::size_t gi = g.index_of(gen);
        for (std::size_t e : elems) {
            std::size_t conj = g.mul(g.mul(gi, e), g.inv(gi));
            if (!std::binary_search(elems.begin(), elems.end(), conj)) return false;
        }
    }
    return true;
}

bool subgroup_is_cyclic(const FinGroup& g, const std::vector<std::size_t>& elems) {
    for (std::size_t e : elems)
        if (g.element_order(e) == elems.size()) return true;
    return false;
}

} // namespace

std::vector<Subgroup> enumerate_subgroups(const FinGroup& g) {
    if (g.order() > FinGroup::kDefaultCap)
        throw GroupTooLarge("subgroup enumeration capped at order 5000");

    std::set<std::vector<std::size_t>> found;
    for (std::size_t e = 0; e < g.order(); ++e)
        found.insert(cyclic_subgroup(g, e).elems);

    // close under pairwise joins until stable; every subgroup is a join of
    // cyclic ones, so this is exhaustive
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<std::size_t>> snapshot(found.begin(), found.end());
        for (std::size_t a = 0; a < snapshot.size(); ++a)
            for (std::size_t b = a + 1; b < snapshot.size(); ++b) {
                std::vector<std::size_t> seed = snapshot[a];
                seed.insert(seed.end(), snapshot[b].begin(), snapshot[b].end());
                auto join = close_subset(g, std::move(seed));
                if (found.insert(join).second) grew = true;
            }
    }

    std::vector<Subgroup> out;
    for (const auto& elems : found) {
        Subgroup h;
        h.elems = elems;
        h.cyclic = subgroup_is_cyclic(g, elems);
        h.normal = subgroup_is_normal(g, elems);
        out.push_back(std::move(h));
    }
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elems < b.elems;
    });
    return out;
}

std::vector<std::size_t> subgroup_generators(const FinGroup& g, const Subgroup& h) {
    std::vector<std::size_t> gens;
    std::vector<std::size_t> have{g.identity()};
    for (std::size_t e : h.elems) {
        if (std::binary_search(have.begin(), have.end(), e)) continue;
        gens.push_back(e);
        std::vector<std::size_t> seed = have;
        seed.push_back(e);
        have = close_subset(g, std::move(seed));
        std::sort(have.begin(), have.end());
        if (have.size() == h.order()) break;
    }
    return gens;
}

} // namespace equibir
