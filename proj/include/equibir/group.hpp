#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "equibir/intlinalg.hpp"
#include "equibir/matrix.hpp"
#include "equibir/permutation.hpp"

namespace equibir {

/// Group element: a permutation or an invertible integer matrix, with a
/// canonical byte key for hashing, equality and deterministic ordering.
class GroupElement {
public:
    GroupElement() = default;
    explicit GroupElement(Perm p);
    explicit GroupElement(IntMat m); // must be invertible over Z

    bool is_permutation() const { return std::holds_alternative<Perm>(v_); }
    const Perm& perm() const { return std::get<Perm>(v_); }
    const IntMat& matrix() const { return std::get<IntMat>(v_); }

    friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
    GroupElement inverse() const;
    bool is_identity() const;
    GroupElement identity_like() const;

    const std::string& key() const { return key_; }
    bool operator==(const GroupElement& o) const { return key_ == o.key_; }
    bool operator<(const GroupElement& o) const { return key_ < o.key_; }

    std::string display() const; // cycle notation or row-major matrix

private:
    std::variant<Perm, IntMat> v_;
    std::string key_;
    void make_key();
};

/// Enumerated finite group. Elements are sorted by canonical key; class 0 is
/// the class of the identity, later classes ordered by least member index.
/// Immutable after construction.
class FinGroup {
public:
    static constexpr std::size_t kDefaultCap = 5000;

    /// Closure of the generators; throws GroupTooLarge past the cap and
    /// BadGenerator for non-invertible input.
    static FinGroup close(std::vector<GroupElement> gens, std::size_t cap = kDefaultCap);

    std::size_t order() const { return elements_.size(); }
    const std::vector<GroupElement>& elements() const { return elements_; }
    const std::vector<GroupElement>& generators() const { return gens_; }

    std::size_t identity() const { return identity_; }
    std::optional<std::size_t> find(const GroupElement& g) const;
    std::size_t index_of(const GroupElement& g) const;

    std::size_t mul(std::size_t i, std::size_t j) const;
    std::size_t inv(std::size_t i) const { return inverse_[i]; }
    std::size_t power(std::size_t i, long k) const;
    unsigned element_order(std::size_t i) const { return element_order_[i]; }

    std::size_t num_classes() const { return class_members_.size(); }
    std::size_t class_of(std::size_t elem) const { return class_of_[elem]; }
    const std::vector<std::size_t>& class_members(std::size_t c) const {
        return class_members_[c];
    }
    std::size_t class_rep(std::size_t c) const { return class_members_[c].front(); }
    std::size_t class_size(std::size_t c) const { return class_members_[c].size(); }
    unsigned class_order(std::size_t c) const { return element_order_[class_rep(c)]; }

    /// Class of g^k for g in class c; independent of the representative.
    std::size_t power_class(std::size_t c, long k) const;

    /// Factorization link: for a non-identity element i, some (j, g) with
    /// i = j * gens[g]. Used to extend generator data along the group.
    std::pair<std::size_t, std::size_t> parent(std::size_t i) const { return parent_[i]; }

private:
    FinGroup() = default;
    std::vector<GroupElement> gens_;
    std::vector<GroupElement> elements_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::size_t> inverse_;
    std::vector<unsigned> element_order_;
    std::vector<std::size_t> class_of_;
    std::vector<std::vector<std::size_t>> class_members_;
    std::vector<std::pair<std::size_t, std::size_t>> parent_;
    std::size_t identity_ = 0;
};

/// Subgroup given by its sorted element indices in the parent group.
struct Subgroup {
    std::vector<std::size_t> elems;
    bool cyclic = false;
    bool normal = false;

    std::size_t order() const { return elems.size(); }
    bool contains(std::size_t e) const;
    bool is_trivial() const { return elems.size() == 1; }
};

/// Cyclic subgroup generated by one element.
Subgroup cyclic_subgroup(const FinGroup& g, std::size_t elem);

/// All subgroups, each exactly once, sorted by (order, element indices).
/// Exhaustive: closes cyclic subgroups under pairwise joins.
std::vector<Subgroup> enumerate_subgroups(const FinGroup& g);

/// A compact generating set of the subgroup (greedy).
std::vector<std::size_t> subgroup_generators(const FinGroup& g, const Subgroup& h);

} // namespace equibir
