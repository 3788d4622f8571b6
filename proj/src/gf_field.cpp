#include "affcount/gf_field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace affcount {

namespace {

// Arithmetic on F_p[x] coefficient vectors, used only while building tables.
using PrimePoly = std::vector<unsigned>;

void trim(PrimePoly& a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PrimePoly prime_mod(PrimePoly a, const PrimePoly& m, unsigned p)
{
    trim(a);
    const std::size_t dm = m.size() - 1;
    // m is monic
    while (a.size() > dm) {
        const unsigned c = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i)
            a[shift + i] = (a[shift + i] + (p - c) * m[i]) % p;
        trim(a);
    }
    return a;
}

bool prime_divides(const PrimePoly& d, const PrimePoly& a, unsigned p)
{
    return prime_mod(a, d, p).empty();
}

PrimePoly decode(unsigned v, unsigned p, unsigned len)
{
    PrimePoly out(len, 0);
    for (unsigned i = 0; i < len; ++i) {
        out[i] = v % p;
        v /= p;
    }
    return out;
}

unsigned encode(const PrimePoly& a, unsigned p)
{
    unsigned v = 0;
    for (std::size_t i = a.size(); i-- > 0;) v = v * p + a[i];
    return v;
}

bool prime_irreducible(const PrimePoly& f, unsigned p)
{
    const unsigned deg = static_cast<unsigned>(f.size() - 1);
    for (unsigned dd = 1; dd <= deg / 2; ++dd) {
        unsigned count = 1;
        for (unsigned i = 0; i < dd; ++i) count *= p;
        for (unsigned low = 0; low < count; ++low) {
            PrimePoly g = decode(low, p, dd);
            g.push_back(1);
            if (prime_divides(g, f, p)) return false;
        }
    }
    return true;
}

PrimePoly choose_modulus(unsigned p, unsigned m)
{
    if (m == 1) return {0, 1};
    unsigned count = 1;
    for (unsigned i = 0; i < m; ++i) count *= p;
    for (unsigned weight = 2; weight <= m + 1; ++weight) {
        for (unsigned low = 0; low < count; ++low) {
            PrimePoly f = decode(low, p, m);
            f.push_back(1);
            const auto nz = std::count_if(f.begin(), f.end(), [](unsigned c) { return c != 0; });
            if (static_cast<unsigned>(nz) != weight) continue;
            if (prime_irreducible(f, p)) return f;
        }
    }
    throw InternalFault("no irreducible modulus found");
}

} // namespace

std::shared_ptr<const FieldTable> FieldTable::get(std::uint64_t q)
{
    static std::mutex mu;
    static std::map<std::uint64_t, std::shared_ptr<const FieldTable>> cache;
    if (q > 512) throw std::invalid_argument("field size must be <= 512");
    PrimePower pq(q);
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it != cache.end()) return it->second;
    auto table = std::make_shared<const FieldTable>(pq);
    if (!table->check_pairwise_axioms()) throw InternalFault("field table failed axiom check");
    cache.emplace(q, table);
    return table;
}

FieldTable::FieldTable(const PrimePower& q) : q_(q)
{
    if (q.q() > 512) throw std::invalid_argument("field size must be <= 512");
    const unsigned p = static_cast<unsigned>(q.p());
    const unsigned m = q.m();
    const unsigned n = static_cast<unsigned>(q.q());
    modulus_ = choose_modulus(p, m);

    add_.resize(n * n);
    mul_.resize(n * n);
    neg_.resize(n);
    inv_.assign(n, 0);
    for (unsigned a = 0; a < n; ++a) {
        const PrimePoly pa = decode(a, p, m);
        PrimePoly na(m);
        for (unsigned i = 0; i < m; ++i) na[i] = (p - pa[i]) % p;
        neg_[a] = static_cast<Elem>(encode(na, p));
        for (unsigned b = 0; b < n; ++b) {
            const PrimePoly pb = decode(b, p, m);
            PrimePoly s(m);
            for (unsigned i = 0; i < m; ++i) s[i] = (pa[i] + pb[i]) % p;
            add_[a * n + b] = static_cast<Elem>(encode(s, p));
            if (m == 1) {
                mul_[a * n + b] = static_cast<Elem>(a * b % p);
                continue;
            }
            PrimePoly prod(2 * m, 0);
            for (unsigned i = 0; i < m; ++i)
                for (unsigned j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
            PrimePoly r = prime_mod(prod, modulus_, p);
            r.resize(m, 0);
            mul_[a * n + b] = static_cast<Elem>(encode(r, p));
        }
    }
    for (unsigned a = 1; a < n; ++a)
        for (unsigned b = 1; b < n; ++b)
            if (mul_[a * n + b] == 1) inv_[a] = static_cast<Elem>(b);

    // smallest generator of the multiplicative group
    exp_.assign(n - 1, 0);
    log_.assign(n, 0);
    for (unsigned g = 1; g < n; ++g) {
        Elem x = 1;
        unsigned k = 0;
        do {
            exp_[k] = x;
            x = mul_[x * n + g];
            ++k;
        } while (x != 1 && k < n - 1);
        if (k == n - 1 && x == 1) {
            primitive_ = static_cast<Elem>(g);
            for (unsigned i = 0; i < n - 1; ++i) log_[exp_[i]] = i;
            break;
        }
    }
}

Elem FieldTable::inv(Elem a) const
{
    if (a == 0) throw std::domain_error("inverse of zero");
    return inv_[a];
}

Elem FieldTable::pow(Elem a, std::uint64_t e) const noexcept
{
    if (e == 0) return 1;
    if (a == 0) return 0;
    return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % (size() - 1))) % (size() - 1)];
}

bool FieldTable::check_pairwise_axioms() const
{
    const unsigned n = size();
    for (unsigned a = 0; a < n; ++a) {
        if (add(a, 0) != a || mul(a, 1) != a || mul(a, 0) != 0) return false;
        if (add(a, neg(a)) != 0) return false;
        if (a != 0 && mul(a, inv_[a]) != 1) return false;
        for (unsigned b = 0; b < n; ++b) {
            if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a)) return false;
            if (add(a, b) >= n || mul(a, b) >= n) return false;
            if (a != 0 && b != 0 && mul(a, b) == 0) return false;
        }
    }
    return primitive_ != 0 && exp(0) == 1;
}

Poly::Poly(std::vector<Elem> coeffs) : c_(std::move(coeffs))
{
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monomial(Elem c, unsigned degree)
{
    std::vector<Elem> v(degree + 1, 0);
    v[degree] = c;
    return Poly(std::move(v));
}

Poly Poly::from_high(const std::vector<Elem>& high_first)
{
    return Poly(std::vector<Elem>(high_first.rbegin(), high_first.rend()));
}

std::string Poly::to_string() const
{
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!first) os << '+';
        first = false;
        const bool show_coeff = c_[i] != 1 || i == 0;
        if (show_coeff) os << c_[i];
        if (i >= 1) os << (show_coeff ? "*" : "") << 'X';
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

bool poly_less(const Poly& a, const Poly& b) noexcept
{
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = a.coeffs().size(); i-- > 0;)
        if (a.coeffs()[i] != b.coeffs()[i]) return a.coeffs()[i] < b.coeffs()[i];
    return false;
}

Poly poly_add(const FieldTable& F, const Poly& a, const Poly& b)
{
    std::vector<Elem> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.add(a.coeff(static_cast<unsigned>(i)), b.coeff(static_cast<unsigned>(i)));
    return Poly(std::move(c));
}

Poly poly_sub(const FieldTable& F, const Poly& a, const Poly& b)
{
    std::vector<Elem> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.sub(a.coeff(static_cast<unsigned>(i)), b.coeff(static_cast<unsigned>(i)));
    return Poly(std::move(c));
}

Poly poly_mul(const FieldTable& F, const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Elem> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] = F.add(c[i + j], F.mul(a.coeffs()[i], b.coeffs()[j]));
    }
    return Poly(std::move(c));
}

Poly poly_scale(const FieldTable& F, const Poly& a, Elem c)
{
    std::vector<Elem> v(a.coeffs());
    for (auto& x : v) x = F.mul(x, c);
    return Poly(std::move(v));
}

std::pair<Poly, Poly> poly_divmod(const FieldTable& F, const Poly& a, const Poly& b)
{
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Elem> r = a.coeffs();
    const std::size_t db = b.coeffs().size() - 1;
    if (r.size() <= db) return {Poly{}, a};
    std::vector<Elem> quot(r.size() - db, 0);
    const Elem lead_inv = F.inv(b.leading());
    for (std::size_t i = r.size(); i-- > db;) {
        const Elem c = F.mul(r[i], lead_inv);
        if (c == 0) continue;
        quot[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j)
            r[i - db + j] = F.sub(r[i - db + j], F.mul(c, b.coeffs()[j]));
    }
    return {Poly(std::move(quot)), Poly(std::move(r))};
}

Poly poly_mod(const FieldTable& F, const Poly& a, const Poly& b)
{
    return poly_divmod(F, a, b).second;
}

Poly poly_gcd(const FieldTable& F, Poly a, Poly b)
{
    while (!b.is_zero()) {
        Poly r = poly_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return poly_scale(F, a, F.inv(a.leading()));
}

Poly poly_pow(const FieldTable& F, const Poly& a, unsigned e)
{
    Poly r({1});
    Poly base = a;
    while (e != 0) {
        if (e & 1) r = poly_mul(F, r, base);
        e >>= 1;
        if (e != 0) base = poly_mul(F, base, base);
    }
    return r;
}

Poly poly_mulmod(const FieldTable& F, const Poly& a, const Poly& b, const Poly& m)
{
    return poly_mod(F, poly_mul(F, a, b), m);
}

Poly poly_x_pow_mod(const FieldTable& F, std::uint64_t e, const Poly& m)
{
    Poly r = poly_mod(F, Poly({1}), m);
    Poly base = poly_mod(F, Poly({0, 1}), m);
    while (e != 0) {
        if (e & 1) r = poly_mulmod(F, r, base, m);
        e >>= 1;
        if (e != 0) base = poly_mulmod(F, base, base, m);
    }
    return r;
}

bool is_irreducible(const FieldTable& F, const Poly& f)
{
    const int deg = f.degree();
    if (deg < 1) return false;
    if (deg == 1) return true;
    const Poly x({0, 1});
    Poly xp = poly_mod(F, x, f);
    for (int i = 1; i <= deg / 2; ++i) {
        // xp <- xp^q mod f
        Poly acc({1});
        Poly base = xp;
        for (std::uint64_t e = F.size(); e != 0; e >>= 1) {
            if (e & 1) acc = poly_mulmod(F, acc, base, f);
            if (e > 1) base = poly_mulmod(F, base, base, f);
        }
        xp = acc;
        const Poly g = poly_gcd(F, f, poly_sub(F, xp, x));
        if (g.degree() > 0) return false;
    }
    return true;
}

bool is_irreducible_trial(const FieldTable& F, const Poly& f)
{
    const int deg = f.degree();
    if (deg < 1) return false;
    const unsigned q = F.size();
    for (int dd = 1; dd <= deg / 2; ++dd) {
        std::uint64_t count = 1;
        for (int i = 0; i < dd; ++i) count *= q;
        for (std::uint64_t low = 0; low < count; ++low) {
            std::vector<Elem> g(dd + 1, 0);
            std::uint64_t v = low;
            for (int i = 0; i < dd; ++i) {
                g[i] = static_cast<Elem>(v % q);
                v /= q;
            }
            g[dd] = 1;
            if (poly_mod(F, f, Poly(g)).is_zero()) return false;
        }
    }
    return true;
}

std::uint64_t poly_order(const FieldTable& F, const Poly& f)
{
    if (f.coeff(0) == 0) throw std::invalid_argument("poly_order: f(0) must be nonzero");
    const int deg = f.degree();
    if (deg == 0) return 1;
    if (is_irreducible(F, f)) {
        std::uint64_t e = 1;
        for (int i = 0; i < deg; ++i) e *= F.size();
        e -= 1;
        for (auto [prime, exp] : factorize(e)) {
            for (unsigned i = 0; i < exp; ++i) {
                if (poly_x_pow_mod(F, e / prime, f) == Poly({1})) e /= prime;
                else break;
            }
        }
        return e;
    }
    std::uint64_t bound = 1;
    for (int i = 0; i < deg; ++i) bound *= F.size();
    const Poly x = poly_mod(F, Poly({0, 1}), f);
    Poly cur = x;
    for (std::uint64_t e = 1; e <= bound; ++e) {
        if (cur == Poly({1})) return e;
        cur = poly_mulmod(F, cur, x, f);
    }
    throw InternalFault("poly_order: no order found");
}

} // namespace affcount
