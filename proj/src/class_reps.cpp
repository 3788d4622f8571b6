#include "affcount/class_reps.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "affcount/class_formulas.hpp"

namespace affcount {

namespace {

constexpr std::uint64_t kScanLimit = std::uint64_t{1} << 20;

std::uint64_t scan_size(std::uint64_t q, std::uint64_t degree)
{
    std::uint64_t total = 1;
    for (std::uint64_t i = 0; i < degree; ++i) {
        total *= q;
        if (total > kScanLimit) throw std::invalid_argument("irreducible scan: q^degree exceeds 2^20");
    }
    return total;
}

Poly monic_from_index(std::uint64_t low, unsigned degree, unsigned q)
{
    std::vector<Elem> c(degree + 1, 0);
    for (unsigned i = 0; i < degree; ++i) {
        c[i] = static_cast<Elem>(low % q);
        low /= q;
    }
    c[degree] = 1;
    return Poly(std::move(c));
}

std::uint64_t order_by_stepping(const FieldTable& F, const Poly& f)
{
    const Poly one({1});
    const Poly x = poly_mod(F, Poly({0, 1}), f);
    Poly cur = x;
    for (std::uint64_t e = 1;; ++e) {
        if (cur == one) return e;
        cur = poly_mulmod(F, cur, x, f);
    }
}

void check_order_args(std::uint64_t d, const PrimePower& q)
{
    if (d == 0) throw std::invalid_argument("irreducibles_of_order: d must be >= 1");
    if (gcd_u64(d, q.q()) != 1) throw std::invalid_argument("irreducibles_of_order: gcd(d, q) must be 1");
}

/// All monic irreducibles of one degree with f(0) != 0, grouped by order.
using OrderBuckets = std::map<std::uint64_t, std::vector<IrreducibleRecord>>;

const OrderBuckets& scan_degree(const PrimePower& q, unsigned degree)
{
    static std::mutex mu;
    static std::map<std::pair<std::uint64_t, unsigned>, OrderBuckets> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(q.q(), degree);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    const FieldPtr F = FieldTable::get(q.q());
    const std::uint64_t total = scan_size(q.q(), degree);
    OrderBuckets buckets;
    for (std::uint64_t low = 0; low < total; ++low) {
        if (low % q.q() == 0) continue; // X divides f
        Poly f = monic_from_index(low, degree, F->size());
        if (!is_irreducible(*F, f)) continue;
        const std::uint64_t ord = poly_order(*F, f);
        buckets[ord].push_back(IrreducibleRecord{std::move(f), degree, ord});
    }
    for (auto& [ord, list] : buckets)
        std::sort(list.begin(), list.end(),
                  [](const IrreducibleRecord& a, const IrreducibleRecord& b) { return poly_less(a.f, b.f); });
    return cache.emplace(key, std::move(buckets)).first->second;
}

void append_block(GFMatrix& acc, std::vector<Elem>& trans, const GFMatrix& block,
                  const std::vector<Elem>& t)
{
    acc = acc.rows() == 0 ? block : direct_sum(acc, block);
    trans.insert(trans.end(), t.begin(), t.end());
}

} // namespace

std::vector<IrreducibleRecord> irreducibles_of_order(std::uint64_t d, const PrimePower& q)
{
    check_order_args(d, q);
    const unsigned degree = static_cast<unsigned>(multiplicative_order(q.q(), d));
    const auto& buckets = scan_degree(q, degree);
    auto it = buckets.find(d);
    if (it == buckets.end()) return {};
    return it->second;
}

std::vector<IrreducibleRecord> irreducibles_of_order_reference(std::uint64_t d, const PrimePower& q)
{
    check_order_args(d, q);
    const unsigned degree = static_cast<unsigned>(multiplicative_order(q.q(), d));
    const FieldPtr F = FieldTable::get(q.q());
    const std::uint64_t total = scan_size(q.q(), degree);
    std::vector<IrreducibleRecord> out;
    for (std::uint64_t low = 0; low < total; ++low) {
        Poly f = monic_from_index(low, degree, F->size());
        if (f.coeff(0) == 0 || !is_irreducible_trial(*F, f)) continue;
        if (order_by_stepping(*F, f) != d) continue;
        out.push_back(IrreducibleRecord{std::move(f), degree, d});
    }
    std::sort(out.begin(), out.end(),
              [](const IrreducibleRecord& a, const IrreducibleRecord& b) { return poly_less(a.f, b.f); });
    return out;
}

AffineMap build_representative(const AglContext& ctx, const ClassIndex& idx)
{
    ctx.validate(idx);
    const FieldPtr F = FieldTable::get(ctx.q());
    GFMatrix acc;
    std::vector<Elem> trans;

    const auto& m = idx.lam.multiplicities();
    for (unsigned j = 1; j <= m.size(); ++j) {
        for (unsigned c = 0; c < m[j - 1]; ++c) {
            std::vector<Elem> t(j, 0);
            if (idx.marker_t && *idx.marker_t == j && c == 0) t[0] = 1;
            append_block(acc, trans, jordan_block(j, F), t);
        }
    }

    for (const auto& tup : idx.lam_d) {
        const auto irr = irreducibles_of_order(tup.d, ctx.field());
        if (irr.size() != tup.psi)
            throw InternalFault("build_representative: found " + std::to_string(irr.size()) +
                                " irreducibles of order " + std::to_string(tup.d) + ", expected " +
                                std::to_string(tup.psi));
        const std::size_t skip = static_cast<std::size_t>(tup.empty_count());
        for (std::size_t i = 0; i < tup.parts.size(); ++i) {
            const Poly& f = irr[skip + i].f;
            const auto& pm = tup.parts[i].multiplicities();
            for (unsigned j = 1; j <= pm.size(); ++j) {
                if (pm[j - 1] == 0) continue;
                const GFMatrix block = companion_matrix(F, poly_pow(*F, f, j));
                for (unsigned c = 0; c < pm[j - 1]; ++c)
                    append_block(acc, trans, block, std::vector<Elem>(block.rows(), 0));
            }
        }
    }
    if (acc.rows() != ctx.n())
        throw InternalFault("build_representative: dimension " + std::to_string(acc.rows()) + " != n");
    return AffineMap::trusted(std::move(acc), std::move(trans));
}

bool ClassVerification::ok() const noexcept
{
    return std::all_of(checks.begin(), checks.end(), [](const ClassCheck& c) { return c.ok; });
}

std::string ClassVerification::describe_failures() const
{
    std::ostringstream os;
    for (const auto& c : checks)
        if (!c.ok)
            os << index.to_string() << ": " << c.what << " expected " << c.expected << " got " << c.actual
               << '\n';
    return os.str();
}

ClassVerification verify_class(const AglContext& ctx, const ClassIndex& idx)
{
    std::uint64_t points = 1;
    for (unsigned i = 0; i < ctx.n(); ++i) {
        points *= ctx.q();
        if (points > (std::uint64_t{1} << 20)) throw std::invalid_argument("verify_class: q^n exceeds 2^20");
    }
    ClassVerification out;
    out.index = idx;
    const AffineMap s = build_representative(ctx, idx);

    auto add = [&](std::string what, const ExactInt& expected, const ExactInt& actual) {
        out.checks.push_back(
            ClassCheck{std::move(what), to_decimal(expected), to_decimal(actual), expected == actual});
    };

    const ExactInt order = element_order(ctx, idx);
    const ExactInt actual_order = affine_order(s);
    add("order", order, actual_order);

    if (actual_order.fits_ulong_p()) {
        const std::uint64_t o = actual_order.get_ui();
        for (std::uint64_t k : divisors(factorize(o))) {
            const auto fe = fix_exponent_at(ctx, idx, k);
            const ExactInt expected = fe ? ExactInt(ipow(ctx.q(), *fe)) : ExactInt(0);
            add("fix(s^" + std::to_string(k) + ")", expected, fixed_point_count(power(s, k)));
        }
    }
    add("orbits", orbit_exponent(ctx, idx), cyclic_orbit_count(s));
    return out;
}

} // namespace affcount
