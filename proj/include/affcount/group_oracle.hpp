#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "affcount/exact_arith.hpp"
#include "affcount/gf_matrix.hpp"

namespace affcount {

/// Brute-force ground truth at tiny sizes. Every entry point checks its
/// size guard and throws std::invalid_argument when it is exceeded.
namespace oracle_limits {
inline constexpr std::uint64_t kStreamedGroup = 10'000'000; ///< |AGL| for streaming sums
inline constexpr std::uint64_t kTableGroup = 500'000;       ///< |AGL| for a materialized table
inline constexpr std::uint64_t kPoints = std::uint64_t{1} << 16;
inline constexpr std::uint64_t kFunctionSpace = std::uint64_t{1} << 20;
} // namespace oracle_limits

/// Point permutation x -> s(x) on indices sum x_i q^i.
std::vector<std::uint32_t> point_permutation(const AffineMap& s);

/// Calls visit on every element of AGL(n, F_q): invertible matrices in
/// increasing base-q order of their entries, then translations.
void for_each_group_element(unsigned n, const PrimePower& q,
                            const std::function<void(const AffineMap&)>& visit);

/// A generating set: transvections I + cE_ij (c in {1, w}), diag(w,1,...,1)
/// with w primitive, and the translation by e_1.
std::vector<AffineMap> agl_generators(unsigned n, const PrimePower& q);

/// All of AGL(n, F_q), materialized as maps and point permutations.
class GroupElementTable {
public:
    GroupElementTable(unsigned n, const PrimePower& q);

    unsigned n() const noexcept { return n_; }
    const PrimePower& field() const noexcept { return q_; }
    std::size_t size() const noexcept { return maps_.size(); }
    const AffineMap& element(std::size_t i) const { return maps_.at(i); }
    const std::vector<std::uint32_t>& perm(std::size_t i) const { return perms_.at(i); }
    std::optional<std::size_t> find(const std::vector<std::uint32_t>& perm) const;
    std::optional<std::size_t> find(const AffineMap& s) const { return find(point_permutation(s)); }
    /// Index of element(i) o element(j).
    std::size_t compose(std::size_t i, std::size_t j) const;
    std::size_t inverse(std::size_t i) const;

private:
    struct PermHash {
        std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept;
    };
    unsigned n_;
    PrimePower q_;
    std::vector<AffineMap> maps_;
    std::vector<std::vector<std::uint32_t>> perms_;
    std::unordered_map<std::vector<std::uint32_t>, std::size_t, PermHash> index_;
};

/// N_{q,n}: sum of q^{orbits of <g>} over every g, divided by |G|.
ExactInt burnside_full(unsigned n, const PrimePower& q);

/// N_{q,n} by union-find over all q^{q^n} functions under the generators.
ExactInt orbit_enumeration(unsigned n, const PrimePower& q);

/// |{g : g s = s g}|.
ExactInt brute_centralizer(const GroupElementTable& table, const AffineMap& s);

/// Number of conjugacy classes, by closure under conjugation by generators.
std::uint64_t brute_conjugacy_classes(const GroupElementTable& table);

/// Orbits of AGL(n, F_2) on R(r,n)/R(s-1,n) by Burnside over every element.
ExactInt burnside_full_quotient(unsigned n, unsigned s, unsigned r);

/// Same count by union-find over all 2^dim cosets under the generators.
ExactInt orbit_enumeration_quotient(unsigned n, unsigned s, unsigned r);

} // namespace affcount
