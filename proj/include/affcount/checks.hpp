#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "affcount/compound.hpp"
#include "affcount/exact_arith.hpp"

namespace affcount {

/// Outcome of one cross-check; `detail` carries counts on success and the
/// first counterexample on failure.
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

using Progress = std::function<void(const std::string&)>;

/// centralizer_order on q=2, lambda=(3,0,1), lambda_7=((1,2),(2,0,1)), with
/// and without t=3, against 2^63 3^5 7^7 and 2^60 3^5 7^7.
CheckResult check_worked_example();

/// count_function_classes = burnside_full = orbit_enumeration (the latter
/// two only within their guards).
CheckResult check_function_count_oracles(unsigned n, const PrimePower& q, unsigned parallelism = 1);

/// Brute-force class count and centralizers against the formulas.
CheckResult check_class_oracles(unsigned n, const PrimePower& q);

/// sum multiplicity * |G| / centralizer = |AGL(n, F_q)|.
CheckResult check_class_equation(unsigned n, const PrimePower& q, unsigned parallelism = 1);

/// verify_class on every class of (n, q).
CheckResult check_representatives(unsigned n, const PrimePower& q, const Progress& progress = {});

/// |irreducibles_of_order(d)| = psi(d) and degree = o_d(q) for d in D(n, q).
CheckResult check_irreducible_counts(unsigned n, const PrimePower& q);

/// theta(n; s, r) = theta(n; n-r, n-s) for all 0 <= s <= r <= n.
CheckResult check_theta_duality(unsigned n, unsigned parallelism = 1);

/// theta(n; 0, n) = N_{2,n}.
CheckResult check_theta_full_space(unsigned n, unsigned parallelism = 1);

/// theta(n; 0, n-2) = theta(n; 2, n); n >= 2.
CheckResult check_M_readings(unsigned n, unsigned parallelism = 1);

/// coset_class_count_M(n) against full-group Burnside (n <= 4) and quotient
/// orbit enumeration (quotient dimension <= 20).
CheckResult check_M_oracles(unsigned n);

/// check_jordan_block_structure for all 1 <= r <= m <= n_max.
CheckResult check_jordan_structure_sweep(unsigned n_max);

/// check_rank_bound for all 1 <= r <= m <= n_max.
CheckResult check_rank_bound_sweep(unsigned n_max);

/// check_kronecker_embedding on `pairs` random F_2 pairs for every size
/// pair up to max_size, all k and l. Deterministic in `seed`.
CheckResult check_kronecker_sweep(unsigned max_size, unsigned pairs, std::uint64_t seed);

/// Fix of x -> x + e_n on R(n-2, n) equals 2^{2^{n-1}-1}.
CheckResult check_translation_fix(unsigned n);

/// For every non-identity class of AGL(n, F_2): Fix on R(n-2, n) is below
/// 2^{2^{n-1}} when the linear part is not unipotent, and at most
/// 2^{2^n - C(floor(n/2), 3)} otherwise.
CheckResult check_case_bounds(unsigned n);

/// Properties of the ratio table: constant digits, rho_n > 1, rho_n
/// strictly decreasing from n = 5, and 8 |rho_10 - 1| <= |rho_6 - 1|.
std::vector<CheckResult> check_asymptotics(const AsymptoticReport& report);

struct SuiteOptions {
    unsigned q = 2;
    unsigned n = 4;
    unsigned parallelism = 1;
    std::uint64_t seed = 20240601;
    Progress progress;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool pass() const noexcept;
};

/// Suites: reps, class-equation, oracle, duality, compound, asymptotic.
/// `n` is the upper end of a sweep 1..n (2..n for asymptotic). Throws
/// std::invalid_argument for an unknown suite.
SuiteReport run_suite(const std::string& suite, const SuiteOptions& options);

const std::vector<std::string>& suite_names();

} // namespace affcount
