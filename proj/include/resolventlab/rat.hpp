#ifndef RESOLVENTLAB_RAT_HPP
#define RESOLVENTLAB_RAT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rlab {

// Exact arbitrary-precision integers and rationals. Rationals are kept
// canonical (reduced, positive denominator) at all times.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den)
{
    if (den == 0)
        throw std::invalid_argument("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(long num, long den = 1)
{
    return make_rat(Int(num), Int(den));
}

inline int sign(const Rat& r) { return sgn(r); }
inline int sign(const Int& n) { return sgn(n); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int rat_num(const Rat& r) { return r.get_num(); }
inline Int rat_den(const Rat& r) { return r.get_den(); }

// Largest integer <= r.
inline Int rat_floor(const Rat& r)
{
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

inline Int rat_ceil(const Rat& r)
{
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

inline bool is_perfect_square(const Int& n)
{
    return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

// True iff r = q^2 for some rational q. A reduced fraction is a square
// exactly when numerator and denominator are both perfect squares.
inline bool is_rational_square(const Rat& r)
{
    if (sgn(r) < 0)
        return false;
    return is_perfect_square(r.get_num()) && is_perfect_square(r.get_den());
}

// Parses "n", "-n" or "n/d". Throws on malformed input or zero denominator.
inline Rat parse_rat(const std::string& s)
{
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return make_rat(Int(s), Int(1));
        return make_rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("parse_rat: cannot parse '" + s + "'");
    }
}

inline std::string to_string(const Rat& r)
{
    if (r.get_den() == 1)
        return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

} // namespace rlab

#endif
