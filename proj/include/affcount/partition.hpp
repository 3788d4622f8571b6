#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "affcount/exact_arith.hpp"

namespace affcount {

/// A partition in multiplicity form: mult[i-1] is the number of parts equal
/// to i. Trailing zeros are always stripped, so equal partitions compare
/// equal as vectors.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<unsigned> multiplicities);

    /// Builds from a list of parts, e.g. {3,1,1,1} -> (3,0,1).
    static Partition from_parts(const std::vector<unsigned>& parts);

    const std::vector<unsigned>& multiplicities() const noexcept { return mult_; }

    /// lambda_i, zero past the stored range; i >= 1.
    unsigned operator[](unsigned i) const noexcept
    {
        return i >= 1 && i <= mult_.size() ? mult_[i - 1] : 0;
    }

    /// Sum of i * lambda_i.
    unsigned weight() const noexcept;
    /// Largest part, 0 for the empty partition.
    unsigned max_part() const noexcept { return static_cast<unsigned>(mult_.size()); }
    /// Part sizes with nonzero multiplicity, ascending.
    std::vector<unsigned> support() const;
    /// Parts listed in descending order (display form).
    std::vector<unsigned> parts() const;
    bool empty() const noexcept { return mult_.empty(); }

    /// "(3,0,1)"; the empty partition prints as "()".
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<unsigned> mult_;
};

/// Total order: smaller weight first; for equal weight, compare the entries
/// at the largest index where they differ.
std::strong_ordering partition_compare(const Partition& a, const Partition& b) noexcept;

inline std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept
{
    return partition_compare(a, b);
}

/// All partitions of `weight`, ascending under partition_compare.
std::vector<Partition> enumerate_partitions(unsigned weight);

/// A sorted tuple of psi(d) partitions attached to one d. Only the nonempty
/// entries are stored; the empty partition is the least element, so the full
/// tuple is (psi - parts.size()) empties followed by `parts`.
struct PartitionTuple {
    std::uint64_t d = 0;
    std::uint64_t psi = 0;
    std::vector<Partition> parts;

    unsigned weight() const noexcept;
    unsigned max_part() const noexcept;
    std::uint64_t empty_count() const noexcept { return psi - parts.size(); }

    /// The full psi-length tuple. Only sensible for small psi.
    std::vector<Partition> entries() const;

    std::string to_string() const;

    friend bool operator==(const PartitionTuple&, const PartitionTuple&) = default;
};

/// Number of distinct orderings of the tuple: psi! / (k_1! ... k_t!).
ExactInt permutation_count_s(const PartitionTuple& t);

/// One conjugacy class of AGL(n, F_q). `lam_d` lists only the d with a
/// nonempty tuple, in ascending d; a missing d means all-empty.
struct ClassIndex {
    Partition lam;
    std::vector<PartitionTuple> lam_d;
    std::optional<unsigned> marker_t;

    bool is_translation_type() const noexcept { return marker_t.has_value(); }
    const PartitionTuple* tuple_for(std::uint64_t d) const noexcept;
    std::string to_string() const;

    friend bool operator==(const ClassIndex&, const ClassIndex&) = default;
};

/// Per-d data: o_d(q), psi(d) and the factorization of d.
struct DInfo {
    std::uint64_t d;
    std::uint64_t degree; // o_d(q)
    std::uint64_t psi;
    Factorization factors;
};

/// {d > 1 : o_d(q) <= n}, ascending.
std::vector<std::uint64_t> compute_D(unsigned n, const PrimePower& q);

/// Everything the class formulas need about (n, q), computed once.
class AglContext {
public:
    AglContext(unsigned n, const PrimePower& q);

    unsigned n() const noexcept { return n_; }
    const PrimePower& field() const noexcept { return q_; }
    std::uint64_t q() const noexcept { return q_.q(); }
    std::uint64_t p() const noexcept { return q_.p(); }
    const std::vector<DInfo>& D() const noexcept { return d_; }
    const DInfo& info(std::uint64_t d) const;
    const ExactInt& group_order() const noexcept { return group_order_; }

    /// Throws std::invalid_argument if idx violates the dimension or marker
    /// constraints for this (n, q).
    void validate(const ClassIndex& idx) const;

private:
    unsigned n_;
    PrimePower q_;
    std::vector<DInfo> d_;
    ExactInt group_order_;
};

using ClassVisitor = std::function<void(const ClassIndex&)>;

/// Every (lambda, (lambda_d)) with |lambda| + sum o_d |lambda_d| = n, each
/// once, markers absent. Order: |lambda| descending, lambda ascending, then
/// the per-d tuples.
void enumerate_omega(const AglContext& ctx, const ClassVisitor& visit);

/// enumerate_omega, with each index followed by its translation-type
/// variants (one per t in the support of lambda).
void enumerate_classes(const AglContext& ctx, const ClassVisitor& visit);

std::vector<ClassIndex> collect_classes(const AglContext& ctx);

} // namespace affcount
