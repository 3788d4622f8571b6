#include "affcount/class_formulas.hpp"

#include <algorithm>
#include <map>

#include "affcount/parallel_fold.hpp"

namespace affcount {

namespace {

/// sum_{j,k} min(j,k) lambda_j lambda_k
std::uint64_t pair_min_sum(const Partition& lam)
{
    const auto& m = lam.multiplicities();
    std::uint64_t s = 0;
    for (std::size_t j = 0; j < m.size(); ++j) {
        if (m[j] == 0) continue;
        s += static_cast<std::uint64_t>(j + 1) * m[j] * m[j];
        for (std::size_t k = j + 1; k < m.size(); ++k)
            s += 2 * static_cast<std::uint64_t>(j + 1) * m[j] * m[k];
    }
    return s;
}

/// sum_j min(cap, j) lambda_j
std::uint64_t capped_weight(const Partition& lam, std::uint64_t cap)
{
    const auto& m = lam.multiplicities();
    std::uint64_t s = 0;
    for (std::size_t j = 0; j < m.size(); ++j)
        s += std::min<std::uint64_t>(cap, j + 1) * m[j];
    return s;
}

/// Folds prod_{l=1}^{count} (1 - q^{-step*l}) into q^{-exp} * units.
void fold_unit_product(std::uint64_t q, std::uint64_t step, unsigned count, std::uint64_t& exp,
                       ExactInt& units)
{
    for (unsigned l = 1; l <= count; ++l) {
        exp += step * l;
        units *= ipow(q, step * l) - 1;
    }
}

unsigned overall_max_part(const ClassIndex& idx)
{
    unsigned m = idx.lam.max_part();
    for (const auto& t : idx.lam_d) m = std::max(m, t.max_part());
    return m;
}

} // namespace

ExactInt centralizer_order(const AglContext& ctx, const ClassIndex& idx)
{
    ctx.validate(idx);
    const std::uint64_t q = ctx.q();

    std::uint64_t exp = pair_min_sum(idx.lam);
    const auto& m = idx.lam.multiplicities();
    const unsigned from = idx.marker_t ? *idx.marker_t : 1;
    for (std::size_t j = from - 1; j < m.size(); ++j) exp += m[j];

    std::uint64_t neg_exp = 0;
    ExactInt units = 1;
    for (unsigned lj : m) fold_unit_product(q, 1, lj, neg_exp, units);
    for (const auto& tup : idx.lam_d) {
        const std::uint64_t deg = ctx.info(tup.d).degree;
        for (const auto& part : tup.parts) {
            exp += deg * pair_min_sum(part);
            for (unsigned lj : part.multiplicities()) fold_unit_product(q, deg, lj, neg_exp, units);
        }
    }
    if (neg_exp > exp) throw InternalFault("centralizer_order: negative power of q");
    ExactInt value = ipow(q, exp - neg_exp) * units;
    if (idx.marker_t) value = exact_div(value, ipow(q, idx.lam[*idx.marker_t]) - 1, "centralizer_order");
    return value;
}

FactoredOrder factored_element_order(const AglContext& ctx, const ClassIndex& idx)
{
    ctx.validate(idx);
    const std::uint64_t p = ctx.p();
    std::map<std::uint64_t, unsigned> exps;
    for (const auto& tup : idx.lam_d) {
        for (auto [r, e] : ctx.info(tup.d).factors) exps[r] = std::max(exps[r], e);
    }
    const unsigned mmax = overall_max_part(idx);
    unsigned pe = ceil_log(mmax, p);
    if (idx.marker_t) {
        const unsigned t = *idx.marker_t;
        unsigned dmax = 0;
        for (const auto& tup : idx.lam_d) dmax = std::max(dmax, tup.max_part());
        if (t == idx.lam.max_part() && t >= dmax && is_power_of(t, p)) ++pe;
    }
    if (pe > 0) exps[p] = pe;

    FactoredOrder out{1, {}};
    unsigned __int128 v = 1;
    for (auto [r, e] : exps) {
        out.factors.emplace_back(r, e);
        for (unsigned i = 0; i < e; ++i) {
            v *= r;
            if (v > static_cast<unsigned __int128>(UINT64_MAX))
                throw std::invalid_argument("element order exceeds 64 bits");
        }
    }
    out.value = static_cast<std::uint64_t>(v);
    return out;
}

ExactInt element_order(const AglContext& ctx, const ClassIndex& idx)
{
    return ExactInt(static_cast<unsigned long>(factored_element_order(ctx, idx).value));
}

std::optional<std::uint64_t> fix_exponent_at(const AglContext& ctx, const ClassIndex& idx,
                                             std::uint64_t k)
{
    if (k == 0) throw std::invalid_argument("fix_exponent_at: k must be >= 1");
    const std::uint64_t p = ctx.p();
    const unsigned nu = p_adic_valuation(k, p);
    if (idx.marker_t && nu < floor_log_plus_one(*idx.marker_t, p)) return std::nullopt;

    // p^nu, saturated: only min(p^nu, j) with j <= n matters
    std::uint64_t cap = 1;
    for (unsigned i = 0; i < nu && cap <= ctx.n(); ++i) cap *= p;

    std::uint64_t e = capped_weight(idx.lam, cap);
    for (const auto& tup : idx.lam_d) {
        if (k % tup.d != 0) continue;
        std::uint64_t inner = 0;
        for (const auto& part : tup.parts) inner += capped_weight(part, cap);
        e += ctx.info(tup.d).degree * inner;
    }
    return e;
}

ExactInt orbit_exponent(const AglContext& ctx, const ClassIndex& idx)
{
    const FactoredOrder b = factored_element_order(ctx, idx);
    const std::uint64_t p = ctx.p();
    const unsigned min_nu = idx.marker_t ? floor_log_plus_one(*idx.marker_t, p) : 0;

    ExactInt sum = 0;
    bool any = false;
    // Walk divisors k of b as exponent vectors; phi(b/k) comes from the gaps.
    const auto& f = b.factors;
    std::vector<unsigned> ke(f.size(), 0);
    for (;;) {
        std::uint64_t k = 1;
        std::uint64_t phi = 1;
        unsigned nu = 0;
        for (std::size_t i = 0; i < f.size(); ++i) {
            for (unsigned e = 0; e < ke[i]; ++e) k *= f[i].first;
            const unsigned gap = f[i].second - ke[i];
            if (gap > 0) {
                phi *= f[i].first - 1;
                for (unsigned e = 1; e < gap; ++e) phi *= f[i].first;
            }
            if (f[i].first == p) nu = ke[i];
        }
        if (nu >= min_nu) {
            const auto fe = fix_exponent_at(ctx, idx, k);
            if (!fe) throw InternalFault("orbit_exponent: fixed-point exponent missing for admissible k");
            ExactInt term = ipow(ctx.q(), *fe);
            mpz_addmul_ui(sum.get_mpz_t(), term.get_mpz_t(), phi);
            any = true;
        }
        std::size_t i = 0;
        while (i < f.size() && ke[i] == f[i].second) ke[i++] = 0;
        if (i == f.size()) break;
        ++ke[i];
    }
    if (!any) throw InternalFault("orbit_exponent: empty divisor sum for " + idx.to_string());
    return exact_div(sum, ExactInt(static_cast<unsigned long>(b.value)), "orbit_exponent");
}

ExactInt class_multiplicity(const ClassIndex& idx)
{
    ExactInt s = 1;
    for (const auto& tup : idx.lam_d) s *= permutation_count_s(tup);
    return s;
}

ClassEvaluation evaluate_class(const AglContext& ctx, const ClassIndex& idx)
{
    return ClassEvaluation{idx, centralizer_order(ctx, idx), element_order(ctx, idx),
                           orbit_exponent(ctx, idx), class_multiplicity(idx)};
}

ExactInt class_equation_sum(const AglContext& ctx, unsigned parallelism)
{
    const ExactInt& g = ctx.group_order();
    auto res = fold_classes(
        [&](const ClassVisitor& v) { enumerate_classes(ctx, v); },
        [&](const ClassIndex& idx) -> ExactInt {
            return class_multiplicity(idx) * exact_div(g, centralizer_order(ctx, idx), "class size");
        },
        parallelism);
    return res.sum;
}

ExactInt conjugacy_class_count(const AglContext& ctx)
{
    ExactInt total = 0;
    enumerate_classes(ctx, [&](const ClassIndex& idx) { total += class_multiplicity(idx); });
    return total;
}

FunctionClassCount count_function_classes(unsigned n, const PrimePower& q, unsigned parallelism)
{
    FunctionClassCount out;
    if (n == 0) {
        out.count = static_cast<unsigned long>(q.q());
        out.burnside_sum = out.count;
        out.group_order = 1;
        out.class_count = 1;
        out.index_count = 1;
        return out;
    }
    const AglContext ctx(n, q);
    const ExactInt& g = ctx.group_order();
    auto res = fold_classes(
        [&](const ClassVisitor& v) { enumerate_classes(ctx, v); },
        [&](const ClassIndex& idx) -> ExactInt {
            ExactInt size = class_multiplicity(idx) * exact_div(g, centralizer_order(ctx, idx), "class size");
            const ExactInt e = orbit_exponent(ctx, idx);
            if (!e.fits_ulong_p()) throw std::invalid_argument("orbit exponent too large");
            if (q.q() == 2) {
                mpz_mul_2exp(size.get_mpz_t(), size.get_mpz_t(), e.get_ui());
                return size;
            }
            return ExactInt(size * ipow(q.q(), e.get_ui()));
        },
        parallelism);
    out.burnside_sum = res.sum;
    out.group_order = g;
    out.index_count = res.count;
    out.class_count = conjugacy_class_count(ctx);
    out.count = exact_div(res.sum, g, "count_function_classes (Burnside sum not divisible by |G|)");
    return out;
}

void for_each_class_evaluation(const AglContext& ctx,
                               const std::function<void(const ClassEvaluation&)>& visit)
{
    enumerate_classes(ctx, [&](const ClassIndex& idx) { visit(evaluate_class(ctx, idx)); });
}

} // namespace affcount
