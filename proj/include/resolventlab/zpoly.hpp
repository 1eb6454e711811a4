#ifndef RESOLVENTLAB_ZPOLY_HPP
#define RESOLVENTLAB_ZPOLY_HPP

#include "resolventlab/rat.hpp"
#include "resolventlab/ratpoly.hpp"

#include <utility>
#include <vector>

namespace rlab {

// Integer polynomial support used by the resultant and the factorization
// code: dense coefficient vector, constant term first, no trailing zeros.
using ZPoly = std::vector<Int>;

int zdeg(const ZPoly& f);
void ztrim(ZPoly& f);
bool zis_zero(const ZPoly& f);
const Int& zlc(const ZPoly& f);

ZPoly zadd(const ZPoly& a, const ZPoly& b);
ZPoly zsub(const ZPoly& a, const ZPoly& b);
ZPoly zmul(const ZPoly& a, const ZPoly& b);
ZPoly zscale(const ZPoly& a, const Int& s);
ZPoly zshift(const ZPoly& a, int k); // a * x^k
ZPoly zneg(const ZPoly& a);
Int zeval(const ZPoly& a, const Int& x);

// gcd of all coefficients (non-negative; 0 for the zero polynomial).
Int zcontent(const ZPoly& f);
// f / content(f), sign of the leading coefficient preserved.
ZPoly zprimitive(const ZPoly& f);
// Divides every coefficient by s, which must divide exactly.
ZPoly zdivexact_scalar(const ZPoly& f, const Int& s);

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r with
// deg r < deg b. Returns r. Requires b nonzero, deg a >= deg b.
ZPoly zprem(const ZPoly& a, const ZPoly& b);

// Exact division; returns (quotient, true) when b | a over Z.
std::pair<ZPoly, bool> zdivide(const ZPoly& a, const ZPoly& b);

// Subresultant PRS resultant over Z.
Int zresultant(const ZPoly& a, const ZPoly& b);

// Clears denominators: returns (F, d) with F integer and F = d * f.
std::pair<ZPoly, Int> clear_denominators(const RatPoly& f);

RatPoly to_ratpoly(const ZPoly& f);

// max |a_i|
Int zheight(const ZPoly& f);

} // namespace rlab

#endif
