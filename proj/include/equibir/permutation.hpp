#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "equibir/errors.hpp"

namespace equibir {

/// Permutation of {0..m-1} stored as the image vector.
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<std::uint32_t> images);
    static Perm identity(std::size_t m);
    /// One-based cycle notation, e.g. "(1 2 3)(4 5)" or "()".
    static Perm parse_cycles(std::string_view text, std::size_t min_degree = 0);

    std::size_t degree() const { return img_.size(); }
    std::uint32_t operator()(std::uint32_t x) const { return img_[x]; }
    const std::vector<std::uint32_t>& images() const { return img_; }

    /// (a*b)(x) = a(b(x))
    friend Perm operator*(const Perm& a, const Perm& b);
    Perm inverse() const;
    bool is_identity() const;
    unsigned order() const;

    bool operator==(const Perm& o) const { return img_ == o.img_; }
    std::string cycle_str() const;

private:
    std::vector<std::uint32_t> img_;
};

} // namespace equibir
