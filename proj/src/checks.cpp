#include "affcount/checks.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "affcount/class_formulas.hpp"
#include "affcount/class_reps.hpp"
#include "affcount/group_oracle.hpp"
#include "affcount/rm_action.hpp"

namespace affcount {

namespace {

std::string label(const std::string& base, unsigned n, const PrimePower& q)
{
    return base + " q=" + std::to_string(q.q()) + " n=" + std::to_string(n);
}

std::string label(const std::string& base, unsigned n)
{
    return base + " n=" + std::to_string(n);
}

bool is_identity_class(const ClassIndex& idx, unsigned n)
{
    return !idx.marker_t && idx.lam_d.empty() && idx.lam.multiplicities() == std::vector<unsigned>{n};
}

/// prod (1 - 2^{-i}) via Euler's pentagonal series
/// sum_k (-1)^k x^{k(3k-1)/2}, x = 1/2, truncated once the exponent passes
/// `bits`; the error is below 2^{-bits}.
ExactRatio pentagonal_constant(unsigned bits)
{
    ExactRatio sum = 1;
    for (long long k = 1;; ++k) {
        const long long e1 = k * (3 * k - 1) / 2, e2 = k * (3 * k + 1) / 2;
        if (e1 > bits) break;
        const ExactRatio t1(ExactInt(1), ipow(2, static_cast<std::uint64_t>(e1)));
        const ExactRatio t2(ExactInt(1), ipow(2, static_cast<std::uint64_t>(e2)));
        if (k % 2) sum -= t1 + t2;
        else sum += t1 + t2;
    }
    sum.canonicalize();
    return sum;
}

} // namespace

CheckResult check_worked_example()
{
    CheckResult r{"worked example centralizers", false, ""};
    const AglContext ctx(36, PrimePower(2));
    ClassIndex idx;
    idx.lam = Partition({3, 0, 1});
    PartitionTuple t;
    t.d = 7;
    t.psi = 2;
    t.parts = {Partition({1, 2}), Partition({2, 0, 1})};
    idx.lam_d = {t};
    const ExactInt a1 = centralizer_order(ctx, idx);
    idx.marker_t = 3;
    const ExactInt a2 = centralizer_order(ctx, idx);
    const ExactInt e1 = ipow(2, 63) * ipow(3, 5) * ipow(7, 7);
    const ExactInt e2 = ipow(2, 60) * ipow(3, 5) * ipow(7, 7);
    r.pass = a1 == e1 && a2 == e2;
    r.detail = "a1=" + to_decimal(a1) + " (expected " + to_decimal(e1) + "), a2=" + to_decimal(a2) +
               " (expected " + to_decimal(e2) + ")";
    return r;
}

CheckResult check_function_count_oracles(unsigned n, const PrimePower& q, unsigned parallelism)
{
    CheckResult r{label("function classes vs oracles", n, q), true, ""};
    const ExactInt formula = count_function_classes(n, q, parallelism).count;
    std::ostringstream os;
    os << "formula=" << formula;
    auto compare = [&](const char* name, const std::function<ExactInt()>& f) {
        try {
            const ExactInt v = f();
            os << ' ' << name << '=' << v;
            if (v != formula) r.pass = false;
        } catch (const std::invalid_argument&) {
            os << ' ' << name << "=not-runnable";
        }
    };
    compare("burnside_full", [&] { return burnside_full(n, q); });
    compare("orbit_enumeration", [&] { return orbit_enumeration(n, q); });
    r.detail = os.str();
    return r;
}

CheckResult check_class_oracles(unsigned n, const PrimePower& q)
{
    CheckResult r{label("conjugacy classes vs brute force", n, q), true, ""};
    const GroupElementTable table(n, q);
    const AglContext ctx(n, q);
    const std::uint64_t brute = brute_conjugacy_classes(table);
    const ExactInt weighted = conjugacy_class_count(ctx);
    std::ostringstream os;
    os << "brute=" << brute << " formula=" << weighted;
    if (weighted != ExactInt(static_cast<unsigned long>(brute))) r.pass = false;
    std::size_t checked = 0, bad = 0;
    enumerate_classes(ctx, [&](const ClassIndex& idx) {
        ++checked;
        const ExactInt b = brute_centralizer(table, build_representative(ctx, idx));
        const ExactInt f = centralizer_order(ctx, idx);
        if (b != f) {
            if (bad++ == 0) os << " first centralizer mismatch " << idx.to_string() << ": brute=" << b << " formula=" << f;
            r.pass = false;
        }
    });
    os << " centralizers checked=" << checked << " mismatches=" << bad;
    r.detail = os.str();
    return r;
}

CheckResult check_class_equation(unsigned n, const PrimePower& q, unsigned parallelism)
{
    CheckResult r{label("class equation", n, q), false, ""};
    const AglContext ctx(n, q);
    const ExactInt sum = class_equation_sum(ctx, parallelism);
    r.pass = sum == ctx.group_order();
    r.detail = "sum=" + to_decimal(sum) + " |AGL|=" + to_decimal(ctx.group_order()) +
               " classes=" + to_decimal(conjugacy_class_count(ctx));
    return r;
}

CheckResult check_representatives(unsigned n, const PrimePower& q, const Progress& progress)
{
    CheckResult r{label("representatives vs formulas", n, q), true, ""};
    const AglContext ctx(n, q);
    std::size_t classes = 0, bad = 0;
    std::string first;
    enumerate_classes(ctx, [&](const ClassIndex& idx) {
        ++classes;
        const ClassVerification v = verify_class(ctx, idx);
        if (!v.ok()) {
            if (bad++ == 0) first = v.describe_failures();
            r.pass = false;
        }
        if (progress) progress("reps " + idx.to_string() + (v.ok() ? " ok" : " MISMATCH"));
    });
    r.detail = "classes=" + std::to_string(classes) + " mismatches=" + std::to_string(bad);
    if (!first.empty()) r.detail += " first: " + first.substr(0, first.find('\n'));
    return r;
}

CheckResult check_irreducible_counts(unsigned n, const PrimePower& q)
{
    CheckResult r{label("irreducible counts", n, q), true, ""};
    const AglContext ctx(n, q);
    std::size_t checked = 0, skipped = 0;
    for (const auto& info : ctx.D()) {
        std::vector<IrreducibleRecord> irr;
        try {
            irr = irreducibles_of_order(info.d, q);
        } catch (const std::invalid_argument&) {
            ++skipped;
            continue;
        }
        ++checked;
        bool ok = irr.size() == info.psi;
        for (const auto& rec : irr) ok = ok && rec.degree == info.degree && rec.order == info.d;
        if (!ok && r.pass) {
            r.pass = false;
            r.detail = "d=" + std::to_string(info.d) + " found " + std::to_string(irr.size()) + " expected " +
                       std::to_string(info.psi) + "; ";
        }
    }
    r.detail += "d checked=" + std::to_string(checked) + " beyond scan limit=" + std::to_string(skipped);
    return r;
}

CheckResult check_theta_duality(unsigned n, unsigned parallelism)
{
    CheckResult r{label("theta duality", n), true, ""};
    std::size_t pairs = 0;
    for (unsigned s = 0; s <= n; ++s)
        for (unsigned t = s; t <= n; ++t) {
            if (s + t > n) continue; // (s,t) and its dual are the same check
            ++pairs;
            const ExactInt a = theta(n, s, t, parallelism);
            const ExactInt b = theta(n, n - t, n - s, parallelism);
            if (a != b && r.pass) {
                r.pass = false;
                r.detail = "theta(" + std::to_string(n) + ";" + std::to_string(s) + "," + std::to_string(t) +
                           ")=" + to_decimal(a) + " but dual=" + to_decimal(b) + "; ";
            }
        }
    r.detail += "pairs=" + std::to_string(pairs);
    return r;
}

CheckResult check_theta_full_space(unsigned n, unsigned parallelism)
{
    CheckResult r{label("theta(n;0,n) = N_2,n", n), false, ""};
    const ExactInt a = theta(n, 0, n, parallelism);
    const ExactInt b = count_function_classes(n, PrimePower(2), parallelism).count;
    r.pass = a == b;
    r.detail = "theta=" + to_decimal(a) + " N=" + to_decimal(b);
    return r;
}

CheckResult check_M_readings(unsigned n, unsigned parallelism)
{
    CheckResult r{label("theta(n;0,n-2) = theta(n;2,n)", n), false, ""};
    const ExactInt a = coset_class_count_M(n, parallelism);
    const ExactInt b = theta(n, 2, n, parallelism);
    r.pass = a == b;
    r.detail = "theta(n;0,n-2)=" + to_decimal(a) + " theta(n;2,n)=" + to_decimal(b);
    return r;
}

CheckResult check_M_oracles(unsigned n)
{
    CheckResult r{label("M_n vs oracles", n), true, ""};
    const ExactInt m = coset_class_count_M(n);
    std::ostringstream os;
    os << "formula=" << m;
    auto compare = [&](const char* name, const std::function<ExactInt()>& f) {
        try {
            const ExactInt v = f();
            os << ' ' << name << '=' << v;
            if (v != m) r.pass = false;
        } catch (const std::invalid_argument&) {
            os << ' ' << name << "=not-runnable";
        }
    };
    compare("burnside_full", [&] { return burnside_full_quotient(n, 0, n - 2); });
    compare("orbit_enumeration", [&] { return orbit_enumeration_quotient(n, 0, n - 2); });
    r.detail = os.str();
    return r;
}

CheckResult check_jordan_structure_sweep(unsigned n_max)
{
    CheckResult r{"compound Jordan block structure up to n=" + std::to_string(n_max), true, ""};
    std::size_t cases = 0;
    for (unsigned n = 1; n <= n_max; ++n)
        for (unsigned k = 1; k <= n; ++k) {
            ++cases;
            if (!check_jordan_block_structure(n, k) && r.pass) {
                r.pass = false;
                r.detail = "fails at n=" + std::to_string(n) + " r=" + std::to_string(k) + "; ";
            }
        }
    r.detail += "cases=" + std::to_string(cases);
    return r;
}

CheckResult check_rank_bound_sweep(unsigned n_max)
{
    CheckResult r{"compound rank bound up to n=" + std::to_string(n_max), true, ""};
    std::size_t cases = 0;
    for (unsigned n = 1; n <= n_max; ++n)
        for (unsigned k = 1; k <= n; ++k) {
            ++cases;
            if (!check_rank_bound(n, k) && r.pass) {
                r.pass = false;
                r.detail = "fails at n=" + std::to_string(n) + " r=" + std::to_string(k) + " rank=" +
                           std::to_string(compound_jordan_defect_rank(n, k)) + "; ";
            }
        }
    r.detail += "cases=" + std::to_string(cases);
    return r;
}

CheckResult check_kronecker_sweep(unsigned max_size, unsigned pairs, std::uint64_t seed)
{
    CheckResult r{"compound Kronecker embedding sizes<=" + std::to_string(max_size), true, ""};
    std::mt19937_64 rng(seed);
    const FieldPtr F2 = FieldTable::get(2);
    std::size_t cases = 0;
    auto random_matrix = [&](unsigned k) {
        std::vector<Elem> d(k * k);
        for (auto& e : d) e = static_cast<Elem>(rng() & 1);
        return GFMatrix(k, k, F2, std::move(d));
    };
    for (unsigned m = 1; m <= max_size; ++m)
        for (unsigned n = 1; n <= max_size; ++n)
            for (unsigned p = 0; p < pairs; ++p) {
                const GFMatrix a = random_matrix(m), b = random_matrix(n);
                for (unsigned k = 0; k <= m; ++k)
                    for (unsigned l = 0; l <= n; ++l) {
                        ++cases;
                        if (!check_kronecker_embedding(a, b, k, l) && r.pass) {
                            r.pass = false;
                            r.detail = "fails at m=" + std::to_string(m) + " n=" + std::to_string(n) +
                                       " k=" + std::to_string(k) + " l=" + std::to_string(l) + "; ";
                        }
                    }
            }
    r.detail += "cases=" + std::to_string(cases);
    return r;
}

CheckResult check_translation_fix(unsigned n)
{
    CheckResult r{label("translation Fix on R(n-2,n)", n), false, ""};
    const FieldPtr F2 = FieldTable::get(2);
    std::vector<Elem> e(n, 0);
    e[n - 1] = 1;
    const ExactInt fix = fix_on_quotient(AffineMap::translation(e, F2), RMQuotientBasis(n, -1, n - 2));
    const ExactInt expected = ipow(2, (std::uint64_t{1} << (n - 1)) - 1);
    r.pass = fix == expected;
    r.detail = "Fix=" + to_decimal(fix) + " expected=" + to_decimal(expected);
    return r;
}

CheckResult check_case_bounds(unsigned n)
{
    CheckResult r{label("Fix case bounds on R(n-2,n)", n), true, ""};
    const AglContext ctx(n, PrimePower(2));
    const RMQuotientBasis basis(n, -1, n - 2);
    const FieldPtr F2 = FieldTable::get(2);
    const std::uint64_t eigen_bound = std::uint64_t{1} << (n - 1);
    const ExactInt unip_bound = ExactInt(static_cast<unsigned long>(std::uint64_t{1} << n)) - binomial(n / 2, 3);
    std::size_t non_unipotent = 0, unipotent = 0;
    enumerate_classes(ctx, [&](const ClassIndex& idx) {
        if (is_identity_class(idx, n)) return;
        const AffineMap s = build_representative(ctx, idx);
        const unsigned e = fix_exponent_on_quotient(s, basis);
        const GFMatrix nil = matrix_power(s.matrix() - GFMatrix::identity(n, F2), n);
        const bool has_other_eigenvalue = rank(nil) > 0;
        bool ok;
        if (has_other_eigenvalue) {
            ++non_unipotent;
            ok = e < eigen_bound;
        } else {
            ++unipotent;
            ok = ExactInt(e) <= unip_bound;
        }
        if (!ok && r.pass) {
            r.pass = false;
            r.detail = "violated by " + idx.to_string() + " with Fix=2^" + std::to_string(e) + "; ";
        }
    });
    r.detail += "non-unipotent classes=" + std::to_string(non_unipotent) +
                " unipotent classes=" + std::to_string(unipotent);
    return r;
}

std::vector<CheckResult> check_asymptotics(const AsymptoticReport& report)
{
    std::vector<CheckResult> out;

    {
        CheckResult c{"constant prod(1-2^-i) certified to 30 digits", false, ""};
        const ExactRatio pent = pentagonal_constant(140);
        const ExactRatio tol(ExactInt(1), ipow(10, 30));
        const bool inside = pent >= report.constant.lower - tol && pent <= report.constant.upper + tol;
        ExactRatio width = report.constant.upper - report.constant.lower;
        const std::size_t sig = report.constant_decimal.size() > 2 ? report.constant_decimal.size() - 2 : 0;
        c.pass = inside && width < tol && sig >= 30;
        c.detail = report.constant_decimal + " (partial products N=" + std::to_string(report.constant.terms) +
                   ", pentagonal series agrees=" + (inside ? "yes" : "no") + ")";
        out.push_back(std::move(c));
    }

    const ExactRatio one(1);
    {
        CheckResult c{"rho_n > 1 for all computed n", true, ""};
        std::string below;
        for (const auto& row : report.rows)
            if (!(row.rho_lower > one)) {
                c.pass = false;
                below += (below.empty() ? "" : ",") + std::to_string(row.n);
            }
        c.detail = below.empty() ? "all above 1" : "rho_n <= 1 at n=" + below;
        out.push_back(std::move(c));
    }
    {
        CheckResult c{"rho_n strictly decreasing for n >= 5", true, ""};
        std::string rises;
        for (std::size_t i = 1; i < report.rows.size(); ++i) {
            const auto& prev = report.rows[i - 1];
            const auto& cur = report.rows[i];
            if (prev.n < 5) continue;
            if (!(cur.rho_upper < prev.rho_lower)) {
                c.pass = false;
                rises += (rises.empty() ? "" : ",") + std::to_string(prev.n) + "->" + std::to_string(cur.n);
            }
        }
        c.detail = rises.empty() ? "decreasing" : "not decreasing at " + rises;
        out.push_back(std::move(c));
    }
    {
        CheckResult c{"8|rho_10 - 1| <= |rho_6 - 1|", false, ""};
        const AsymptoticRow *r6 = nullptr, *r10 = nullptr;
        for (const auto& row : report.rows) {
            if (row.n == 6) r6 = &row;
            if (row.n == 10) r10 = &row;
        }
        if (!r6 || !r10) {
            c.detail = "needs n_max >= 10";
        } else {
            auto dist = [&](const AsymptoticRow& row) {
                // upper bound on |rho - 1| from the enclosure
                ExactRatio a = row.rho_upper - one, b = one - row.rho_lower;
                return abs(a) > abs(b) ? ExactRatio(abs(a)) : ExactRatio(abs(b));
            };
            auto dist_low = [&](const AsymptoticRow& row) {
                ExactRatio a = abs(row.rho_upper - one), b = abs(row.rho_lower - one);
                return a < b ? a : b;
            };
            c.pass = 8 * dist(*r10) <= dist_low(*r6);
            c.detail = "rho_6=" + r6->rho + " rho_10=" + r10->rho;
        }
        out.push_back(std::move(c));
    }
    return out;
}

bool SuiteReport::pass() const noexcept
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"reps", "class-equation", "oracle", "duality", "compound",
                                                "asymptotic"};
    return names;
}

SuiteReport run_suite(const std::string& suite, const SuiteOptions& o)
{
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end())
        throw std::invalid_argument("unknown suite '" + suite + "'");
    SuiteReport rep;
    rep.suite = suite;
    const PrimePower q(o.q);
    auto add = [&](CheckResult c) {
        if (o.progress) o.progress(std::string(c.pass ? "pass " : "FAIL ") + c.name);
        rep.checks.push_back(std::move(c));
    };

    if (suite == "reps") {
        for (unsigned n = 1; n <= o.n; ++n) {
            add(check_irreducible_counts(n, q));
            add(check_representatives(n, q));
        }
    } else if (suite == "class-equation") {
        for (unsigned n = 1; n <= o.n; ++n) add(check_class_equation(n, q, o.parallelism));
    } else if (suite == "oracle") {
        for (unsigned n = 1; n <= o.n; ++n) {
            add(check_function_count_oracles(n, q, o.parallelism));
            if (agl_group_order(n, q) <= ExactInt(static_cast<unsigned long>(oracle_limits::kTableGroup))) add(check_class_oracles(n, q));
        }
    } else if (suite == "duality") {
        if (o.q != 2) throw std::invalid_argument("duality suite is binary only (q=2)");
        for (unsigned n = 1; n <= o.n; ++n) {
            add(check_theta_duality(n, o.parallelism));
            if (n <= 4) add(check_theta_full_space(n, o.parallelism));
            if (n >= 2) {
                add(check_M_readings(n, o.parallelism));
                if (n <= 4) add(check_M_oracles(n));
            }
        }
    } else if (suite == "compound") {
        add(check_jordan_structure_sweep(o.n));
        add(check_rank_bound_sweep(o.n));
        add(check_kronecker_sweep(std::min(o.n, 5u), 50, o.seed));
    } else { // asymptotic
        if (o.n < 2) throw std::invalid_argument("asymptotic suite needs n >= 2");
        for (unsigned n = 2; n <= std::min(o.n, 8u); ++n) {
            add(check_translation_fix(n));
            add(check_case_bounds(n));
        }
        const AsymptoticReport report = asymptotic_report(o.n, o.parallelism);
        for (auto& c : check_asymptotics(report)) add(std::move(c));
    }
    return rep;
}

} // namespace affcount
