#ifndef RESOLVENTLAB_RATPOLY_HPP
#define RESOLVENTLAB_RATPOLY_HPP

#include "resolventlab/rat.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace rlab {

// Dense univariate polynomial over Q, coefficient of x^i at index i.
// The zero polynomial has an empty coefficient vector and degree -1.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    RatPoly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }

    static RatPoly zero() { return RatPoly(); }
    static RatPoly constant(const Rat& a);
    // c * x^k
    static RatPoly monomial(const Rat& c, int k);
    static RatPoly x() { return monomial(Rat(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    const Rat& lc() const;
    // Coefficient of x^i; zero beyond the degree.
    Rat coeff(int i) const;
    const std::vector<Rat>& coeffs() const { return c_; }

    RatPoly operator-() const;
    RatPoly& operator+=(const RatPoly& o);
    RatPoly& operator-=(const RatPoly& o);

    friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const Rat& s, const RatPoly& a);
    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

    RatPoly derivative() const;
    Rat eval(const Rat& x) const;
    RatPoly monic() const;

    // Comma-separated coefficient list, constant term first (the CLI and
    // file exchange format), e.g. "11,64,80,40,0,4,1".
    std::string coeff_list() const;
    // Human-readable form, highest power first.
    std::string pretty() const;

private:
    void trim();
    std::vector<Rat> c_;
};

// Quotient and remainder with a = q*b + r, deg r < deg b. Throws on b = 0.
std::pair<RatPoly, RatPoly> divrem(const RatPoly& a, const RatPoly& b);

// True iff b divides a exactly.
bool divides(const RatPoly& b, const RatPoly& a);

// Resultant via the subresultant polynomial remainder sequence on the
// integer models of a and b. Zero if either argument is zero; throws if
// both are.
Rat resultant(const RatPoly& a, const RatPoly& b);

// (-1)^(n(n-1)/2) res(f, f') / lc(f). Throws for constants.
Rat discriminant(const RatPoly& f);

// Parses the constant-first comma list, entries integer or "n/d".
RatPoly parse_poly(const std::string& csv);

} // namespace rlab

#endif
