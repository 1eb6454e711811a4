#include "resolventlab/sturm.hpp"

#include <algorithm>
#include <stdexcept>

namespace rlab {

namespace {

// sign of P(a/b) for b > 0, via the homogeneous form sum P_i a^i b^(n-i).
int sign_at_rational(const ZPoly& P, const Int& a, const Int& b)
{
    if (P.empty())
        return 0;
    Int acc(0), bpow(1);
    // Horner in a, collecting powers of b from the top down:
    // value = P_n a^n + P_{n-1} a^{n-1} b + ... = sum P_i a^i b^{n-i}
    for (size_t i = P.size(); i-- > 0;) {
        acc = acc * a + P[i] * bpow;
        if (i > 0)
            bpow *= b;
    }
    return sgn(acc);
}

int sign_at_rational(const ZPoly& P, const Rat& x)
{
    return sign_at_rational(P, x.get_num(), x.get_den());
}

int count_variations(const std::vector<int>& signs)
{
    int v = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0)
            continue;
        if (prev != 0 && s != prev)
            ++v;
        prev = s;
    }
    return v;
}

ZPoly primitive_signed(const RatPoly& p)
{
    auto [z, d] = clear_denominators(p);
    (void)d;
    return zprimitive(z);
}

} // namespace

SturmChain::SturmChain(const RatPoly& f)
{
    if (f.is_zero())
        throw std::invalid_argument("Sturm chain of the zero polynomial");
    chain_.push_back(primitive_signed(f));
    if (f.degree() == 0) {
        squarefree_ = true;
        return;
    }
    RatPoly prev = f;
    RatPoly cur = f.derivative();
    chain_.push_back(primitive_signed(cur));
    while (true) {
        RatPoly rem = divrem(prev, cur).second;
        if (rem.is_zero())
            break;
        RatPoly next = -rem;
        chain_.push_back(primitive_signed(next));
        prev = std::move(cur);
        cur = std::move(next);
        if (cur.degree() == 0)
            break;
    }
    squarefree_ = zdeg(chain_.back()) == 0 && !chain_.back().empty();
}

int SturmChain::variations_at(const Rat& x) const
{
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& p : chain_)
        signs.push_back(sign_at_rational(p, x));
    return count_variations(signs);
}

int SturmChain::variations_at_plus_inf() const
{
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& p : chain_)
        signs.push_back(p.empty() ? 0 : sgn(zlc(p)));
    return count_variations(signs);
}

int SturmChain::variations_at_minus_inf() const
{
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& p : chain_) {
        if (p.empty()) {
            signs.push_back(0);
            continue;
        }
        int s = sgn(zlc(p));
        if (zdeg(p) % 2 == 1)
            s = -s;
        signs.push_back(s);
    }
    return count_variations(signs);
}

int SturmChain::sign_at(const Rat& x) const
{
    return sign_at_rational(chain_.front(), x);
}

Rat cauchy_bound(const RatPoly& f)
{
    if (f.is_zero())
        throw std::invalid_argument("Cauchy bound of the zero polynomial");
    Rat m(0);
    const Rat lead = abs(f.lc());
    for (int i = 0; i < f.degree(); ++i) {
        Rat q = abs(f.coeff(i)) / lead;
        if (q > m)
            m = q;
    }
    return m + 1;
}

int count_real_roots(const RatPoly& f, std::optional<std::pair<Rat, Rat>> interval)
{
    if (f.is_zero())
        throw std::invalid_argument("count_real_roots: zero polynomial");
    if (f.degree() == 0)
        return 0;
    SturmChain chain(f);
    if (!chain.input_squarefree())
        throw std::domain_error("count_real_roots: polynomial is not squarefree");
    Rat lo, hi;
    if (interval) {
        lo = interval->first;
        hi = interval->second;
        if (lo >= hi)
            throw std::invalid_argument("count_real_roots: empty interval");
        if (chain.sign_at(lo) == 0 || chain.sign_at(hi) == 0)
            throw std::domain_error("count_real_roots: interval endpoint is a root");
        return chain.variations_at(lo) - chain.variations_at(hi);
    }
    return chain.variations_at_minus_inf() - chain.variations_at_plus_inf();
}

ConjugationType conjugation_type(const RatPoly& f)
{
    const int n = f.degree();
    const int real = count_real_roots(f);
    if ((n - real) % 2 != 0)
        throw std::logic_error("conjugation_type: odd number of non-real roots");
    return ConjugationType{real, (n - real) / 2};
}

bool condition2_holds(const RatPoly& f)
{
    const int n = f.degree();
    if (n != 5 && n != 6)
        throw std::invalid_argument("condition2_holds: degree must be 5 or 6");
    const int real = count_real_roots(f);
    return n == 6 ? real == 2 : real == 1;
}

namespace {

// gcd over Q[x], monic (or zero).
RatPoly ratpoly_gcd(RatPoly a, RatPoly b)
{
    while (!b.is_zero()) {
        RatPoly r = divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero())
        return a;
    return a.monic();
}

} // namespace

std::vector<Rat> rational_roots(const RatPoly& f)
{
    if (f.is_zero())
        throw std::invalid_argument("rational_roots: zero polynomial");
    if (f.degree() == 0)
        return {};
    // squarefree part
    RatPoly g = f;
    RatPoly d = ratpoly_gcd(f, f.derivative());
    if (d.degree() > 0)
        g = divrem(f, d).first;
    // monicize the integer model: roots of G at y/l for integer roots y of
    // ghat(y) = l^(n-1) G(y/l), which is monic with integer coefficients.
    auto [G, den] = clear_denominators(g);
    (void)den;
    G = zprimitive(G);
    const int n = zdeg(G);
    const Int l = zlc(G);
    ZPoly ghat(G.size());
    ghat[static_cast<size_t>(n)] = 1;
    Int lp(1);
    for (int i = n - 1; i >= 0; --i) {
        ghat[static_cast<size_t>(i)] = G[static_cast<size_t>(i)] * lp;
        lp *= l;
    }

    SturmChain chain(to_ratpoly(ghat));
    // All roots of the squarefree monic ghat are bounded by 1 + height;
    // its rational roots are integers, so half-integer bisection points
    // can never hit a root.
    Int bound = zheight(ghat) + 1;
    const Rat half = make_rat(1, 2);
    std::vector<Int> found;
    std::vector<std::pair<Rat, Rat>> stack;
    stack.emplace_back(Rat(-bound) - half, Rat(bound) + half);
    while (!stack.empty()) {
        auto [lo, hi] = stack.back();
        stack.pop_back();
        const int roots = chain.variations_at(lo) - chain.variations_at(hi);
        if (roots <= 0)
            continue;
        if (hi - lo <= 1) {
            // exactly one integer candidate in (lo, hi]
            Int k = rat_floor(hi);
            if (Rat(k) > lo && sign_at_rational(ghat, Rat(k).get_num(), Rat(k).get_den()) == 0)
                found.push_back(k);
            continue;
        }
        Rat mid = Rat(rat_floor((lo + hi) / 2)) + half;
        stack.emplace_back(lo, mid);
        stack.emplace_back(mid, hi);
    }
    std::vector<Rat> roots;
    roots.reserve(found.size());
    for (const auto& k : found)
        roots.push_back(make_rat(k, l));
    std::sort(roots.begin(), roots.end());
    return roots;
}

bool has_rational_root(const RatPoly& f)
{
    return !rational_roots(f).empty();
}

} // namespace rlab
