#ifndef RESOLVENTLAB_STURM_HPP
#define RESOLVENTLAB_STURM_HPP

#include "resolventlab/ratpoly.hpp"
#include "resolventlab/zpoly.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace rlab {

// Signed remainder sequence p0 = f, p1 = f', p_{i+1} = -rem(p_{i-1}, p_i).
// Each member is stored as a primitive integer polynomial (positive
// rescaling preserves every sign the chain is queried for). The chain
// terminates in a nonzero constant exactly when f is squarefree.
class SturmChain {
public:
    explicit SturmChain(const RatPoly& f);

    bool input_squarefree() const { return squarefree_; }

    // Sign variations of the chain evaluated at x.
    int variations_at(const Rat& x) const;
    int variations_at_minus_inf() const;
    int variations_at_plus_inf() const;

    // Exact sign of f at x.
    int sign_at(const Rat& x) const;

    const std::vector<ZPoly>& polys() const { return chain_; }

private:
    std::vector<ZPoly> chain_;
    bool squarefree_ = false;
};

// 1 + max |a_i / a_n|; every real root has absolute value strictly below it.
Rat cauchy_bound(const RatPoly& f);

// Number of distinct real roots of squarefree f, in (lo, hi] when an
// interval is given. Throws on non-squarefree input or when an endpoint
// is a root.
int count_real_roots(const RatPoly& f,
                     std::optional<std::pair<Rat, Rat>> interval = std::nullopt);

// Cycle structure of complex conjugation acting on the roots of f.
struct ConjugationType {
    int fixed_points = 0;
    int two_cycles = 0;
};

ConjugationType conjugation_type(const RatPoly& f);

// The real-root-count form of the type-(2,2) condition: a squarefree
// sextic qualifies with exactly 2 real roots, a quintic with exactly 1.
bool condition2_holds(const RatPoly& f);

// All rational roots of f (without multiplicity), exact. Uses Sturm
// bisection on the monicized integer model, so no integer factoring is
// ever needed. Throws on the zero polynomial.
std::vector<Rat> rational_roots(const RatPoly& f);

bool has_rational_root(const RatPoly& f);

} // namespace rlab

#endif
