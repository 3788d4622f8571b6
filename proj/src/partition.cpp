#include "affcount/partition.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

namespace affcount {

Partition::Partition(std::vector<unsigned> multiplicities) : mult_(std::move(multiplicities))
{
    while (!mult_.empty() && mult_.back() == 0) mult_.pop_back();
}

Partition Partition::from_parts(const std::vector<unsigned>& parts)
{
    std::vector<unsigned> m;
    for (unsigned part : parts) {
        if (part == 0) throw std::invalid_argument("partition parts must be positive");
        if (m.size() < part) m.resize(part, 0);
        ++m[part - 1];
    }
    return Partition(std::move(m));
}

unsigned Partition::weight() const noexcept
{
    unsigned w = 0;
    for (std::size_t i = 0; i < mult_.size(); ++i) w += static_cast<unsigned>(i + 1) * mult_[i];
    return w;
}

std::vector<unsigned> Partition::support() const
{
    std::vector<unsigned> out;
    for (std::size_t i = 0; i < mult_.size(); ++i)
        if (mult_[i] > 0) out.push_back(static_cast<unsigned>(i + 1));
    return out;
}

std::vector<unsigned> Partition::parts() const
{
    std::vector<unsigned> out;
    for (std::size_t i = mult_.size(); i-- > 0;)
        out.insert(out.end(), mult_[i], static_cast<unsigned>(i + 1));
    return out;
}

std::string Partition::to_string() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < mult_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(mult_[i]);
    }
    return s + ")";
}

std::strong_ordering partition_compare(const Partition& a, const Partition& b) noexcept
{
    if (auto c = a.weight() <=> b.weight(); c != 0) return c;
    const auto& x = a.multiplicities();
    const auto& y = b.multiplicities();
    for (std::size_t i = std::max(x.size(), y.size()); i-- > 0;) {
        const unsigned xi = i < x.size() ? x[i] : 0;
        const unsigned yi = i < y.size() ? y[i] : 0;
        if (xi != yi) return xi <=> yi;
    }
    return std::strong_ordering::equal;
}

namespace {

void gen_partitions(unsigned remaining, unsigned max_part, std::vector<unsigned>& mult,
                    std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(mult);
        return;
    }
    if (max_part == 0) return;
    for (unsigned k = 0; k * max_part <= remaining; ++k) {
        mult[max_part - 1] = k;
        gen_partitions(remaining - k * max_part, max_part - 1, mult, out);
    }
    mult[max_part - 1] = 0;
}

const std::vector<Partition>& cached_partitions(unsigned weight)
{
    static std::mutex mu;
    static std::map<unsigned, std::vector<Partition>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(weight);
    if (it != cache.end()) return it->second;
    std::vector<Partition> out;
    std::vector<unsigned> mult(weight, 0);
    gen_partitions(weight, weight, mult, out);
    std::sort(out.begin(), out.end());
    return cache.emplace(weight, std::move(out)).first->second;
}

} // namespace

std::vector<Partition> enumerate_partitions(unsigned weight)
{
    return cached_partitions(weight);
}

unsigned PartitionTuple::weight() const noexcept
{
    unsigned w = 0;
    for (const auto& p : parts) w += p.weight();
    return w;
}

unsigned PartitionTuple::max_part() const noexcept
{
    unsigned m = 0;
    for (const auto& p : parts) m = std::max(m, p.max_part());
    return m;
}

std::vector<Partition> PartitionTuple::entries() const
{
    std::vector<Partition> out(empty_count());
    out.insert(out.end(), parts.begin(), parts.end());
    return out;
}

std::string PartitionTuple::to_string() const
{
    std::ostringstream os;
    os << "d" << d << "=[";
    if (empty_count() > 0) os << empty_count() << "x()";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i || empty_count() > 0) os << ',';
        os << parts[i].to_string();
    }
    os << ']';
    return os.str();
}

ExactInt permutation_count_s(const PartitionTuple& t)
{
    if (t.parts.size() > t.psi) throw std::invalid_argument("tuple has more entries than psi(d)");
    if (!std::is_sorted(t.parts.begin(), t.parts.end()))
        throw std::invalid_argument("tuple entries must be sorted");
    // psi! / (k_empty! * prod k_i!) = psi (psi-1) ... (k_empty+1) / prod k_i!
    ExactInt num = 1;
    for (std::uint64_t i = t.empty_count() + 1; i <= t.psi; ++i) num *= static_cast<unsigned long>(i);
    ExactInt den = 1;
    for (std::size_t i = 0; i < t.parts.size();) {
        std::size_t j = i;
        while (j < t.parts.size() && t.parts[j] == t.parts[i]) ++j;
        den *= factorial(static_cast<unsigned>(j - i));
        i = j;
    }
    return exact_div(num, den, "permutation_count_s");
}

const PartitionTuple* ClassIndex::tuple_for(std::uint64_t d) const noexcept
{
    for (const auto& t : lam_d)
        if (t.d == d) return &t;
    return nullptr;
}

std::string ClassIndex::to_string() const
{
    std::string s = "lam=" + lam.to_string();
    for (const auto& t : lam_d) s += " " + t.to_string();
    if (marker_t) s += " t=" + std::to_string(*marker_t);
    return s;
}

std::vector<std::uint64_t> compute_D(unsigned n, const PrimePower& q)
{
    std::set<std::uint64_t> ds;
    std::uint64_t qi = 1;
    for (unsigned i = 1; i <= n; ++i) {
        if (qi > std::numeric_limits<std::uint64_t>::max() / q.q() / 2)
            throw std::invalid_argument("q^n too large for class enumeration");
        qi *= q.q();
        for (std::uint64_t d : divisors(factorize(qi - 1)))
            if (d > 1) ds.insert(d);
    }
    return {ds.begin(), ds.end()};
}

AglContext::AglContext(unsigned n, const PrimePower& q)
    : n_(n), q_(q), group_order_(agl_group_order(n, q))
{
    if (n >= 1) {
        for (std::uint64_t d : compute_D(n, q)) {
            d_.push_back(DInfo{d, multiplicative_order(q.q(), d), psi(d, q), factorize(d)});
        }
    }
}

const DInfo& AglContext::info(std::uint64_t d) const
{
    auto it = std::lower_bound(d_.begin(), d_.end(), d,
                               [](const DInfo& a, std::uint64_t v) { return a.d < v; });
    if (it == d_.end() || it->d != d)
        throw std::invalid_argument("d=" + std::to_string(d) + " is not in D");
    return *it;
}

void AglContext::validate(const ClassIndex& idx) const
{
    std::uint64_t dim = idx.lam.weight();
    std::uint64_t prev = 0;
    for (const auto& t : idx.lam_d) {
        if (t.d <= prev) throw std::invalid_argument("lam_d must be strictly ascending in d");
        prev = t.d;
        const DInfo& di = info(t.d);
        if (t.psi != di.psi) throw std::invalid_argument("tuple psi does not match psi(d)");
        if (t.parts.empty()) throw std::invalid_argument("all-empty tuples must be omitted");
        if (t.parts.size() > t.psi) throw std::invalid_argument("tuple longer than psi(d)");
        for (const auto& p : t.parts)
            if (p.empty()) throw std::invalid_argument("stored tuple entries must be nonempty");
        if (!std::is_sorted(t.parts.begin(), t.parts.end()))
            throw std::invalid_argument("tuple entries must be sorted");
        dim += di.degree * t.weight();
    }
    if (dim != n_)
        throw std::invalid_argument("class index has dimension " + std::to_string(dim) +
                                    ", expected " + std::to_string(n_));
    if (idx.marker_t) {
        if (idx.lam.empty() || idx.lam[*idx.marker_t] == 0)
            throw std::invalid_argument("marker t must lie in the support of lambda");
    }
}

namespace {

/// All nonempty partitions of weight <= w, ascending.
std::vector<Partition> nonempty_upto(unsigned w)
{
    std::vector<Partition> out;
    for (unsigned k = 1; k <= w; ++k) {
        const auto& ps = cached_partitions(k);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

class OmegaWalker {
public:
    OmegaWalker(const AglContext& ctx, const ClassVisitor& visit)
        : ctx_(ctx), visit_(visit), pool_(nonempty_upto(ctx.n()))
    {
    }

    void run()
    {
        const unsigned n = ctx_.n();
        for (unsigned w0 = n + 1; w0-- > 0;) {
            for (const Partition& lam : cached_partitions(w0)) {
                idx_.lam = lam;
                idx_.lam_d.clear();
                over_d(0, n - w0);
            }
        }
    }

private:
    void over_d(std::size_t start, unsigned rem)
    {
        if (rem == 0) {
            visit_(idx_);
            return;
        }
        const auto& D = ctx_.D();
        for (std::size_t j = start; j < D.size(); ++j) {
            const DInfo& di = D[j];
            if (di.degree > rem) continue;
            for (unsigned w = 1; w * di.degree <= rem; ++w) {
                idx_.lam_d.push_back(PartitionTuple{di.d, di.psi, {}});
                tuples(j, w, 0, rem - w * static_cast<unsigned>(di.degree));
                idx_.lam_d.pop_back();
            }
        }
    }

    // Fill idx_.lam_d.back().parts with a nondecreasing run of pool entries
    // whose weights sum to `need`.
    void tuples(std::size_t j, unsigned need, std::size_t from, unsigned rem_after)
    {
        const std::size_t slot = idx_.lam_d.size() - 1;
        if (need == 0) {
            over_d(j + 1, rem_after);
            return;
        }
        if (idx_.lam_d[slot].parts.size() >= idx_.lam_d[slot].psi) return;
        for (std::size_t i = from; i < pool_.size(); ++i) {
            const unsigned w = pool_[i].weight();
            if (w > need) break; // pool ascends by weight
            idx_.lam_d[slot].parts.push_back(pool_[i]);
            tuples(j, need - w, i, rem_after);
            idx_.lam_d[slot].parts.pop_back();
        }
    }

    const AglContext& ctx_;
    const ClassVisitor& visit_;
    std::vector<Partition> pool_;
    ClassIndex idx_;
};

} // namespace

void enumerate_omega(const AglContext& ctx, const ClassVisitor& visit)
{
    if (ctx.n() == 0) throw std::invalid_argument("enumerate_omega requires n >= 1");
    OmegaWalker(ctx, visit).run();
}

void enumerate_classes(const AglContext& ctx, const ClassVisitor& visit)
{
    enumerate_omega(ctx, [&](const ClassIndex& base) {
        visit(base);
        if (base.lam.empty()) return;
        ClassIndex with_t = base;
        for (unsigned t : base.lam.support()) {
            with_t.marker_t = t;
            visit(with_t);
        }
    });
}

std::vector<ClassIndex> collect_classes(const AglContext& ctx)
{
    std::vector<ClassIndex> out;
    enumerate_classes(ctx, [&](const ClassIndex& c) { out.push_back(c); });
    return out;
}

} // namespace affcount
