#include "resolventlab/fppoly.hpp"

#include "resolventlab/primes.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace rlab {

namespace {

void trim(FpPoly& f)
{
    while (!f.c.empty() && f.c.back() == 0)
        f.c.pop_back();
}

void check_same_field(const FpPoly& a, const FpPoly& b)
{
    if (a.p != b.p)
        throw std::invalid_argument("FpPoly modulus mismatch");
}

} // namespace

FpPoly fp_make(uint64_t p, std::vector<uint64_t> coeffs)
{
    FpPoly f{p, std::move(coeffs)};
    for (auto& x : f.c)
        x %= p;
    trim(f);
    return f;
}

FpPoly fp_from_z(const ZPoly& f, uint64_t p)
{
    FpPoly r{p, {}};
    r.c.resize(f.size());
    Int m;
    for (size_t i = 0; i < f.size(); ++i) {
        mpz_mod_ui(m.get_mpz_t(), f[i].get_mpz_t(), p);
        r.c[i] = m.get_ui();
    }
    trim(r);
    return r;
}

FpPoly fp_x(uint64_t p) { return fp_make(p, {0, 1}); }
FpPoly fp_one(uint64_t p) { return fp_make(p, {1}); }

FpPoly fp_add(const FpPoly& a, const FpPoly& b)
{
    check_same_field(a, b);
    FpPoly r{a.p, std::vector<uint64_t>(std::max(a.c.size(), b.c.size()), 0)};
    for (size_t i = 0; i < a.c.size(); ++i)
        r.c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i)
        r.c[i] = (r.c[i] + b.c[i]) % a.p;
    trim(r);
    return r;
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b)
{
    check_same_field(a, b);
    FpPoly r{a.p, std::vector<uint64_t>(std::max(a.c.size(), b.c.size()), 0)};
    for (size_t i = 0; i < a.c.size(); ++i)
        r.c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i)
        r.c[i] = (r.c[i] + a.p - b.c[i]) % a.p;
    trim(r);
    return r;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b)
{
    check_same_field(a, b);
    if (a.is_zero() || b.is_zero())
        return FpPoly{a.p, {}};
    FpPoly r{a.p, std::vector<uint64_t>(a.c.size() + b.c.size() - 1, 0)};
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0)
            continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = (r.c[i + j] + mulmod_u64(a.c[i], b.c[j], a.p)) % a.p;
    }
    trim(r);
    return r;
}

FpPoly fp_scale(const FpPoly& a, uint64_t s)
{
    FpPoly r = a;
    s %= a.p;
    for (auto& x : r.c)
        x = mulmod_u64(x, s, a.p);
    trim(r);
    return r;
}

std::pair<FpPoly, FpPoly> fp_divrem(const FpPoly& a, const FpPoly& b)
{
    check_same_field(a, b);
    if (b.is_zero())
        throw std::domain_error("FpPoly division by zero");
    const uint64_t p = a.p;
    const int db = b.degree();
    FpPoly q{p, {}}, r = a;
    if (a.degree() >= db)
        q.c.assign(static_cast<size_t>(a.degree() - db) + 1, 0);
    const uint64_t inv = invmod_u64(b.lc(), p);
    while (!r.is_zero() && r.degree() >= db) {
        const int k = r.degree() - db;
        const uint64_t t = mulmod_u64(r.lc(), inv, p);
        q.c[static_cast<size_t>(k)] = t;
        for (int i = 0; i <= db; ++i) {
            auto& ri = r.c[static_cast<size_t>(i + k)];
            ri = (ri + p - mulmod_u64(t, b.c[static_cast<size_t>(i)], p)) % p;
        }
        trim(r);
    }
    trim(q);
    return {std::move(q), std::move(r)};
}

FpPoly fp_mod(const FpPoly& a, const FpPoly& m) { return fp_divrem(a, m).second; }

FpPoly fp_monic(const FpPoly& a)
{
    if (a.is_zero())
        return a;
    return fp_scale(a, invmod_u64(a.lc(), a.p));
}

FpPoly fp_gcd(FpPoly a, FpPoly b)
{
    check_same_field(a, b);
    while (!b.is_zero()) {
        FpPoly r = fp_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return fp_monic(a);
}

FpPoly fp_derivative(const FpPoly& a)
{
    if (a.c.size() <= 1)
        return FpPoly{a.p, {}};
    FpPoly d{a.p, std::vector<uint64_t>(a.c.size() - 1, 0)};
    for (size_t i = 1; i < a.c.size(); ++i)
        d.c[i - 1] = mulmod_u64(a.c[i], i % a.p, a.p);
    trim(d);
    return d;
}

FpPoly fp_powmod(const FpPoly& base, const Int& e, const FpPoly& m)
{
    if (sgn(e) < 0)
        throw std::domain_error("negative exponent");
    FpPoly r = fp_one(m.p);
    FpPoly b = fp_mod(base, m);
    const size_t nbits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0)
        return r;
    for (size_t i = 0; i < nbits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), i))
            r = fp_mod(fp_mul(r, b), m);
        b = fp_mod(fp_mul(b, b), m);
    }
    return r;
}

bool fp_equal(const FpPoly& a, const FpPoly& b) { return a.p == b.p && a.c == b.c; }

FpBezout fp_ext_gcd(const FpPoly& a, const FpPoly& b)
{
    check_same_field(a, b);
    const uint64_t p = a.p;
    FpPoly r0 = a, r1 = b;
    FpPoly s0 = fp_one(p), s1{p, {}};
    FpPoly t0{p, {}}, t1 = fp_one(p);
    while (!r1.is_zero()) {
        auto [q, r2] = fp_divrem(r0, r1);
        FpPoly s2 = fp_sub(s0, fp_mul(q, s1));
        FpPoly t2 = fp_sub(t0, fp_mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (!r0.is_zero()) {
        const uint64_t inv = invmod_u64(r0.lc(), p);
        r0 = fp_scale(r0, inv);
        s0 = fp_scale(s0, inv);
        t0 = fp_scale(t0, inv);
    }
    return {std::move(r0), std::move(s0), std::move(t0)};
}

namespace {

// Squarefree decomposition in characteristic p. Returns (g_i, m_i) with
// f = lc * prod g_i^(m_i), g_i monic squarefree pairwise coprime.
void squarefree_decompose(const FpPoly& f, unsigned mult, std::vector<std::pair<FpPoly, unsigned>>& out)
{
    const uint64_t p = f.p;
    FpPoly fm = fp_monic(f);
    FpPoly d = fp_derivative(fm);
    if (d.is_zero()) {
        // f = g(x^p) = g(x)^p over F_p
        FpPoly g{p, {}};
        g.c.resize((fm.c.size() - 1) / p + 1);
        for (size_t i = 0; i < g.c.size(); ++i)
            g.c[i] = fm.c[i * p];
        squarefree_decompose(g, mult * static_cast<unsigned>(p), out);
        return;
    }
    FpPoly c = fp_gcd(fm, d);
    FpPoly w = fp_divrem(fm, c).first;
    unsigned i = 1;
    while (w.degree() > 0) {
        FpPoly y = fp_gcd(w, c);
        FpPoly part = fp_divrem(w, y).first;
        if (part.degree() > 0)
            out.emplace_back(fp_monic(part), mult * i);
        w = std::move(y);
        c = fp_divrem(c, w).first;
        ++i;
    }
    if (c.degree() > 0)
        squarefree_decompose(c, mult, out); // c = h(x^p)
}

// Distinct-degree split of monic squarefree f: list of (product, d).
std::vector<std::pair<FpPoly, int>> distinct_degree(FpPoly f)
{
    std::vector<std::pair<FpPoly, int>> out;
    const uint64_t p = f.p;
    FpPoly h = fp_x(p); // will hold x^(p^d) mod f
    int d = 0;
    while (f.degree() > 0 && 2 * (d + 1) <= f.degree()) {
        ++d;
        h = fp_powmod(h, Int(static_cast<unsigned long>(p)), f);
        FpPoly g = fp_gcd(f, fp_sub(h, fp_x(p)));
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            f = fp_divrem(f, g).first;
            h = fp_mod(h, f);
        }
    }
    if (f.degree() > 0)
        out.emplace_back(f, f.degree());
    return out;
}

// Equal-degree splitting (Cantor-Zassenhaus) of monic squarefree f whose
// irreducible factors all have degree d.
void equal_degree(const FpPoly& f, int d, std::mt19937_64& rng, std::vector<FpPoly>& out)
{
    if (f.degree() == d) {
        out.push_back(fp_monic(f));
        return;
    }
    const uint64_t p = f.p;
    const int n = f.degree();
    FpPoly g{p, {}};
    while (true) {
        // random nonconstant a of degree < n
        std::vector<uint64_t> ac(static_cast<size_t>(n), 0);
        for (auto& x : ac)
            x = rng() % p;
        FpPoly a = fp_make(p, std::move(ac));
        if (a.degree() < 1)
            continue;
        if (p == 2) {
            // trace map sum_{i<d} a^(2^i)
            FpPoly t = a;
            FpPoly cur = a;
            for (int i = 1; i < d; ++i) {
                cur = fp_mod(fp_mul(cur, cur), f);
                t = fp_add(t, cur);
            }
            g = fp_gcd(f, t);
        } else {
            Int e;
            mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
            e = (e - 1) / 2;
            FpPoly b = fp_powmod(a, e, f);
            g = fp_gcd(f, fp_sub(b, fp_one(p)));
        }
        if (g.degree() > 0 && g.degree() < f.degree())
            break;
    }
    equal_degree(g, d, rng, out);
    equal_degree(fp_divrem(f, g).first, d, rng, out);
}

bool fp_less(const FpPoly& a, const FpPoly& b)
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    return std::lexicographical_compare(a.c.begin(), a.c.end(), b.c.begin(), b.c.end());
}

} // namespace

std::vector<std::pair<FpPoly, unsigned>> factor_mod_p(const FpPoly& f, uint64_t seed)
{
    if (f.is_zero())
        throw std::invalid_argument("factor_mod_p: zero polynomial");
    std::vector<std::pair<FpPoly, unsigned>> sqf;
    if (f.degree() > 0)
        squarefree_decompose(f, 1, sqf);
    std::mt19937_64 rng(seed ^ (f.p * 0x9e3779b97f4a7c15ull));
    std::vector<std::pair<FpPoly, unsigned>> factors;
    for (const auto& [part, mult] : sqf) {
        for (const auto& [prod, d] : distinct_degree(part)) {
            std::vector<FpPoly> irr;
            equal_degree(prod, d, rng, irr);
            for (auto& g : irr)
                factors.emplace_back(std::move(g), mult);
        }
    }
    std::sort(factors.begin(), factors.end(),
              [](const auto& a, const auto& b) { return fp_less(a.first, b.first); });
    return factors;
}

std::vector<int> fp_factor_degrees_squarefree(const FpPoly& f)
{
    std::vector<int> degs;
    for (const auto& [prod, d] : distinct_degree(fp_monic(f))) {
        for (int i = 0; i < prod.degree() / d; ++i)
            degs.push_back(d);
    }
    std::sort(degs.begin(), degs.end());
    return degs;
}

} // namespace rlab
