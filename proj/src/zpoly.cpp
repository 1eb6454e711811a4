#include "resolventlab/zpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace rlab {

int zdeg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

void ztrim(ZPoly& f)
{
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

bool zis_zero(const ZPoly& f) { return f.empty(); }

const Int& zlc(const ZPoly& f)
{
    if (f.empty())
        throw std::domain_error("lc of zero polynomial");
    return f.back();
}

ZPoly zadd(const ZPoly& a, const ZPoly& b)
{
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i)
        r[i] += b[i];
    ztrim(r);
    return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b)
{
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i)
        r[i] -= b[i];
    ztrim(r);
    return r;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    ZPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

ZPoly zscale(const ZPoly& a, const Int& s)
{
    if (s == 0)
        return {};
    ZPoly r(a);
    for (auto& c : r)
        c *= s;
    return r;
}

ZPoly zshift(const ZPoly& a, int k)
{
    if (a.empty())
        return {};
    ZPoly r(a.size() + static_cast<size_t>(k), Int(0));
    std::copy(a.begin(), a.end(), r.begin() + k);
    return r;
}

ZPoly zneg(const ZPoly& a)
{
    ZPoly r(a);
    for (auto& c : r)
        c = -c;
    return r;
}

Int zeval(const ZPoly& a, const Int& x)
{
    Int acc(0);
    for (size_t i = a.size(); i-- > 0;)
        acc = acc * x + a[i];
    return acc;
}

Int zcontent(const ZPoly& f)
{
    Int g(0);
    for (const auto& c : f) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

ZPoly zprimitive(const ZPoly& f)
{
    Int g = zcontent(f);
    if (g == 0 || g == 1)
        return f;
    return zdivexact_scalar(f, g);
}

ZPoly zdivexact_scalar(const ZPoly& f, const Int& s)
{
    if (s == 0)
        throw std::domain_error("exact division by zero");
    ZPoly r(f.size());
    for (size_t i = 0; i < f.size(); ++i)
        mpz_divexact(r[i].get_mpz_t(), f[i].get_mpz_t(), s.get_mpz_t());
    return r;
}

ZPoly zprem(const ZPoly& a, const ZPoly& b)
{
    if (b.empty())
        throw std::domain_error("pseudo-remainder by zero");
    const int db = zdeg(b);
    ZPoly r = a;
    int e = zdeg(a) - db + 1;
    const Int& d = zlc(b);
    while (!r.empty() && zdeg(r) >= db) {
        ZPoly t = zshift(zscale(b, zlc(r)), zdeg(r) - db);
        r = zsub(zscale(r, d), t);
        --e;
    }
    // normalize to exactly lc(b)^(deg a - deg b + 1) * a mod b
    while (e-- > 0)
        r = zscale(r, d);
    return r;
}

std::pair<ZPoly, bool> zdivide(const ZPoly& a, const ZPoly& b)
{
    if (b.empty())
        return {{}, false};
    if (a.empty())
        return {{}, true};
    if (zdeg(a) < zdeg(b))
        return {{}, false};
    ZPoly q(static_cast<size_t>(zdeg(a) - zdeg(b)) + 1, Int(0));
    ZPoly r = a;
    const int db = zdeg(b);
    while (!r.empty() && zdeg(r) >= db) {
        Int c, rem;
        mpz_tdiv_qr(c.get_mpz_t(), rem.get_mpz_t(), zlc(r).get_mpz_t(), zlc(b).get_mpz_t());
        if (rem != 0)
            return {{}, false};
        const int k = zdeg(r) - db;
        q[static_cast<size_t>(k)] = c;
        r = zsub(r, zshift(zscale(b, c), k));
    }
    if (!r.empty())
        return {{}, false};
    return {std::move(q), true};
}

// Subresultant PRS (Collins; see Cohen, Alg. 3.3.7). Contents are pulled
// out first so the sequence runs on primitive parts.
Int zresultant(const ZPoly& a0, const ZPoly& b0)
{
    if (a0.empty() || b0.empty())
        return 0;
    ZPoly A = a0, B = b0;
    int s = 1;
    if (zdeg(A) < zdeg(B)) {
        if ((zdeg(A) & 1) && (zdeg(B) & 1))
            s = -s;
        std::swap(A, B);
    }
    if (zdeg(B) == 0) {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), B[0].get_mpz_t(), static_cast<unsigned long>(zdeg(A)));
        return s > 0 ? r : -r;
    }
    const Int ca = zcontent(A), cb = zcontent(B);
    A = zdivexact_scalar(A, ca);
    B = zdivexact_scalar(B, cb);
    Int mult, t1, t2;
    mpz_pow_ui(t1.get_mpz_t(), ca.get_mpz_t(), static_cast<unsigned long>(zdeg(B)));
    mpz_pow_ui(t2.get_mpz_t(), cb.get_mpz_t(), static_cast<unsigned long>(zdeg(A)));
    mult = t1 * t2;

    Int g(1), h(1);
    while (true) {
        const int da = zdeg(A), db = zdeg(B);
        const int delta = da - db;
        if ((da & 1) && (db & 1))
            s = -s;
        ZPoly R = zprem(A, B);
        A = std::move(B);
        Int divisor = g;
        for (int i = 0; i < delta; ++i)
            divisor *= h;
        B = R.empty() ? ZPoly{} : zdivexact_scalar(R, divisor);
        g = zlc(A);
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            Int gp, hp;
            mpz_pow_ui(gp.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
            mpz_pow_ui(hp.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
            mpz_divexact(h.get_mpz_t(), gp.get_mpz_t(), hp.get_mpz_t());
        }
        if (B.empty())
            return 0;
        if (zdeg(B) == 0)
            break;
    }
    // res(A, B) with B constant: lc(B)^deg(A) / h^(deg(A)-1)
    Int num, den, res;
    mpz_pow_ui(num.get_mpz_t(), B[0].get_mpz_t(), static_cast<unsigned long>(zdeg(A)));
    mpz_pow_ui(den.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(zdeg(A) - 1));
    mpz_divexact(res.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    res *= mult;
    return s > 0 ? res : -res;
}

std::pair<ZPoly, Int> clear_denominators(const RatPoly& f)
{
    Int d(1);
    for (const auto& c : f.coeffs())
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get_den().get_mpz_t());
    ZPoly F(f.coeffs().size());
    for (size_t i = 0; i < F.size(); ++i) {
        Rat scaled = f.coeffs()[i] * Rat(d);
        F[i] = scaled.get_num(); // denominator is 1 by construction
    }
    return {std::move(F), std::move(d)};
}

RatPoly to_ratpoly(const ZPoly& f)
{
    std::vector<Rat> c(f.size());
    for (size_t i = 0; i < f.size(); ++i)
        c[i] = Rat(f[i]);
    return RatPoly(std::move(c));
}

Int zheight(const ZPoly& f)
{
    Int h(0);
    for (const auto& c : f) {
        Int a = abs(c);
        if (a > h)
            h = a;
    }
    return h;
}

} // namespace rlab
