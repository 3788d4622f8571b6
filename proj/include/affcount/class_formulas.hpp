#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "affcount/exact_arith.hpp"
#include "affcount/partition.hpp"

namespace affcount {

/// Closed-form data for one conjugacy class of AGL(n, F_q).
struct ClassEvaluation {
    ClassIndex index;
    ExactInt centralizer;  ///< |c(gamma)|
    ExactInt order;        ///< o(gamma)
    ExactInt fix_exponent; ///< number of <gamma>-orbits on F_q^n
    ExactInt multiplicity; ///< prod_d s(lambda_d)
};

/// Size of the centralizer of the class representative in AGL(n, F_q).
ExactInt centralizer_order(const AglContext& ctx, const ClassIndex& idx);

/// Order of the class representative.
ExactInt element_order(const AglContext& ctx, const ClassIndex& idx);

/// Element order together with its prime factorization (the divisor sums
/// need both). The order must fit in 64 bits.
struct FactoredOrder {
    std::uint64_t value;
    Factorization factors;
};
FactoredOrder factored_element_order(const AglContext& ctx, const ClassIndex& idx);

/// Exponent of q in the number of points of F_q^n fixed by gamma^k, or
/// nullopt when gamma^k has no fixed point (translation-type classes whose
/// p-part of k is too small). k >= 1.
std::optional<std::uint64_t> fix_exponent_at(const AglContext& ctx, const ClassIndex& idx,
                                             std::uint64_t k);

/// Number of <gamma>-orbits on F_q^n, via the divisor sum over k | o(gamma)
/// of phi(o/k) * q^{fix exponent}. Fix(gamma) on all functions is q^this.
ExactInt orbit_exponent(const AglContext& ctx, const ClassIndex& idx);

/// prod over d of s(lambda_d): how many class indices the sorted
/// representative stands for.
ExactInt class_multiplicity(const ClassIndex& idx);

ClassEvaluation evaluate_class(const AglContext& ctx, const ClassIndex& idx);

/// sum over classes of multiplicity * |G| / centralizer. Equals |G| when the
/// enumeration and centralizer formulas are right.
ExactInt class_equation_sum(const AglContext& ctx, unsigned parallelism = 1);

/// Number of conjugacy classes of AGL(n, F_q): the multiplicity-weighted
/// size of the enumeration.
ExactInt conjugacy_class_count(const AglContext& ctx);

struct FunctionClassCount {
    ExactInt count;           ///< number of AGL(n,F_q)-orbits on all functions
    ExactInt burnside_sum;    ///< sum of |class| * Fix, before dividing by |G|
    ExactInt group_order;
    ExactInt class_count;     ///< conjugacy classes
    std::uint64_t index_count = 0; ///< enumerated class indices (sorted representatives)
};

/// Orbits of AGL(n, F_q) on functions F_q^n -> F_q. n = 0 gives q.
FunctionClassCount count_function_classes(unsigned n, const PrimePower& q,
                                          unsigned parallelism = 1);

/// Per-class breakdown, in enumeration order (for verbose reports).
void for_each_class_evaluation(const AglContext& ctx,
                               const std::function<void(const ClassEvaluation&)>& visit);

} // namespace affcount
