#ifndef RESOLVENTLAB_FPPOLY_HPP
#define RESOLVENTLAB_FPPOLY_HPP

#include "resolventlab/zpoly.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace rlab {

// Dense polynomial over F_p, p an odd or even prime fitting in 63 bits.
// Coefficients are residues in [0, p), constant term first.
struct FpPoly {
    uint64_t p = 0;
    std::vector<uint64_t> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    uint64_t lc() const { return c.back(); }
};

FpPoly fp_make(uint64_t p, std::vector<uint64_t> coeffs);
FpPoly fp_from_z(const ZPoly& f, uint64_t p);
FpPoly fp_x(uint64_t p);
FpPoly fp_one(uint64_t p);

FpPoly fp_add(const FpPoly& a, const FpPoly& b);
FpPoly fp_sub(const FpPoly& a, const FpPoly& b);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b);
FpPoly fp_scale(const FpPoly& a, uint64_t s);
std::pair<FpPoly, FpPoly> fp_divrem(const FpPoly& a, const FpPoly& b);
FpPoly fp_mod(const FpPoly& a, const FpPoly& m);
FpPoly fp_monic(const FpPoly& a);
// Monic gcd.
FpPoly fp_gcd(FpPoly a, FpPoly b);
FpPoly fp_derivative(const FpPoly& a);
// base^e mod m, exponent an arbitrary non-negative big integer.
FpPoly fp_powmod(const FpPoly& base, const Int& e, const FpPoly& m);
bool fp_equal(const FpPoly& a, const FpPoly& b);

// Extended Euclid: returns (g, s, t) with g = gcd monic, s*a + t*b = g.
struct FpBezout {
    FpPoly g, s, t;
};
FpBezout fp_ext_gcd(const FpPoly& a, const FpPoly& b);

// Full factorization: squarefree decomposition, then distinct-degree and
// seeded Cantor-Zassenhaus equal-degree splitting. Factors are monic
// irreducible, sorted canonically; the leading unit is dropped.
std::vector<std::pair<FpPoly, unsigned>> factor_mod_p(const FpPoly& f, uint64_t seed);

// Degrees of the irreducible factors of squarefree monic f, ascending,
// computed by distinct-degree factorization alone.
std::vector<int> fp_factor_degrees_squarefree(const FpPoly& f);

} // namespace rlab

#endif
