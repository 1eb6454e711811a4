#ifndef RESOLVENTLAB_SYMPLECTIC_HPP
#define RESOLVENTLAB_SYMPLECTIC_HPP

#include "resolventlab/perm6.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace rlab {

// F2^6 vectors are packed into the low six bits of a byte, bit i = slot i.
using Vec6 = uint8_t;

constexpr Vec6 kAllOnes6 = 0x3f;

inline int parity6(Vec6 v) { return __builtin_popcount(v & kAllOnes6) & 1; }

// The basis of W = V/U used throughout:
// e1=(1,1,0,0,0,0) e2=(0,0,0,1,1,0) e3=(0,0,0,1,0,1) e4=(1,0,1,0,0,0)
extern const std::array<Vec6, 4> kWBasis;

// Element of W in basis coordinates, bit i = coefficient of e_{i+1}.
struct WVec {
    uint8_t coords = 0;

    friend bool operator==(const WVec&, const WVec&) = default;
};

// Lift to the representative in the span of the basis vectors.
Vec6 w_lift(WVec w);
// The coset representative whose first slot is 0.
Vec6 w_canonical_rep(WVec w);
// Reduce any lift v in V (even weight) to basis coordinates.
WVec w_reduce(Vec6 v);

// <x,y> of any lifts; well-defined on cosets.
int pairing_w(WVec x, WVec y);

// 4x4 matrix over F2, bit (4*row + col).
struct SpMat4 {
    uint16_t bits = 0;

    static SpMat4 identity();
    int at(int r, int c) const { return (bits >> (4 * r + c)) & 1; }
    void set(int r, int c, int v);

    friend bool operator==(const SpMat4&, const SpMat4&) = default;
    friend auto operator<=>(const SpMat4&, const SpMat4&) = default;
};

SpMat4 mat_mul(const SpMat4& a, const SpMat4& b);
SpMat4 mat_transpose(const SpMat4& a);
int mat_trace(const SpMat4& a);
WVec mat_apply(const SpMat4& a, WVec v);
std::string mat_to_string(const SpMat4& a);

// Gram matrix of the pairing in the basis above, computed from pairing_w.
SpMat4 gram_matrix();
// The antidiagonal block matrix [[0,s],[-s,0]], s=[[0,1],[1,0]], reduced
// mod 2. Coincides with gram_matrix(); the selftest asserts it.
SpMat4 block_j_mod2();

bool is_symplectic(const SpMat4& x);

// Matrix of the permutation action of g on W in the fixed basis.
SpMat4 phi(const Perm6& g);

struct Gsp4Check {
    size_t phi_image_size = 0;
    size_t equation_solutions = 0;
    bool injective = false;
    bool images_equal_solutions = false;
};

// Enumerates phi(S6) and the full solution set of tXJX = J over all 2^16
// candidate matrices; both must come out to 720 and coincide.
Gsp4Check gsp4_order_check();

enum class S5Type { S5a, S5b };

// Classifies an S5 subgroup of S6 by transitivity and cross-checks the
// order-3/6 trace criterion; throws if the two criteria disagree or the
// subgroup does not have order 120.
S5Type classify_s5_image(const std::vector<Perm6>& subgroup);

// Verification table for the `group selftest` CLI command.
struct GroupSelfTest {
    bool ok = false;
    std::string report;
};

GroupSelfTest run_group_selftest();

} // namespace rlab

#endif
