#include "resolventlab/symplectic.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rlab {

const std::array<Vec6, 4> kWBasis = {
    static_cast<Vec6>(0b000011), // e1 = (1,1,0,0,0,0), slot i -> bit i
    static_cast<Vec6>(0b011000), // e2 = (0,0,0,1,1,0)
    static_cast<Vec6>(0b101000), // e3 = (0,0,0,1,0,1)
    static_cast<Vec6>(0b000101), // e4 = (1,0,1,0,0,0)
};

Vec6 w_lift(WVec w)
{
    Vec6 v = 0;
    for (int i = 0; i < 4; ++i)
        if ((w.coords >> i) & 1)
            v ^= kWBasis[static_cast<size_t>(i)];
    return v;
}

Vec6 w_canonical_rep(WVec w)
{
    Vec6 v = w_lift(w);
    if (v & 1)
        v ^= kAllOnes6;
    return v;
}

WVec w_reduce(Vec6 v)
{
    v &= kAllOnes6;
    if (parity6(v))
        throw std::invalid_argument("w_reduce: vector not in V (odd weight)");
    // The basis spans the vectors with v1+v2+v3 = 0; the other coset
    // representative is v + (1,...,1).
    if (__builtin_popcount(v & 0b000111) & 1)
        v ^= kAllOnes6;
    // From sum c_i e_i = (c1+c4, c1, c4, c2+c3, c2, c3):
    WVec w;
    w.coords = static_cast<uint8_t>(((v >> 1) & 1)        // c1 = slot 2
                                    | (((v >> 4) & 1) << 1) // c2 = slot 5
                                    | (((v >> 5) & 1) << 2) // c3 = slot 6
                                    | (((v >> 2) & 1) << 3)); // c4 = slot 3
    return w;
}

int pairing_w(WVec x, WVec y)
{
    return __builtin_popcount(w_lift(x) & w_lift(y)) & 1;
}

SpMat4 SpMat4::identity()
{
    SpMat4 m;
    for (int i = 0; i < 4; ++i)
        m.set(i, i, 1);
    return m;
}

void SpMat4::set(int r, int c, int v)
{
    const uint16_t mask = static_cast<uint16_t>(1u << (4 * r + c));
    if (v)
        bits |= mask;
    else
        bits &= static_cast<uint16_t>(~mask);
}

SpMat4 mat_mul(const SpMat4& a, const SpMat4& b)
{
    SpMat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            int v = 0;
            for (int k = 0; k < 4; ++k)
                v ^= a.at(i, k) & b.at(k, j);
            r.set(i, j, v);
        }
    return r;
}

SpMat4 mat_transpose(const SpMat4& a)
{
    SpMat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            r.set(i, j, a.at(j, i));
    return r;
}

int mat_trace(const SpMat4& a)
{
    return (a.at(0, 0) ^ a.at(1, 1) ^ a.at(2, 2) ^ a.at(3, 3));
}

WVec mat_apply(const SpMat4& a, WVec v)
{
    WVec r;
    for (int i = 0; i < 4; ++i) {
        int bit = 0;
        for (int j = 0; j < 4; ++j)
            bit ^= a.at(i, j) & ((v.coords >> j) & 1);
        r.coords |= static_cast<uint8_t>(bit << i);
    }
    return r;
}

std::string mat_to_string(const SpMat4& a)
{
    std::ostringstream os;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j)
            os << a.at(i, j);
        if (i < 3)
            os << '/';
    }
    return os.str();
}

SpMat4 gram_matrix()
{
    SpMat4 j;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            WVec x{static_cast<uint8_t>(1 << r)}, y{static_cast<uint8_t>(1 << c)};
            j.set(r, c, pairing_w(x, y));
        }
    return j;
}

SpMat4 block_j_mod2()
{
    // [[0,s],[-s,0]] with s = [[0,1],[1,0]]; -1 = 1 mod 2.
    SpMat4 j;
    j.set(0, 3, 1);
    j.set(1, 2, 1);
    j.set(2, 1, 1);
    j.set(3, 0, 1);
    return j;
}

bool is_symplectic(const SpMat4& x)
{
    static const SpMat4 j = gram_matrix();
    return mat_mul(mat_mul(mat_transpose(x), j), x) == j;
}

SpMat4 phi(const Perm6& g)
{
    SpMat4 m;
    for (int col = 0; col < 4; ++col) {
        Vec6 e = kWBasis[static_cast<size_t>(col)];
        Vec6 ge = 0;
        for (int slot = 0; slot < 6; ++slot)
            if ((e >> slot) & 1)
                ge |= static_cast<Vec6>(1u << g.img[static_cast<size_t>(slot)]);
        WVec w = w_reduce(ge);
        for (int row = 0; row < 4; ++row)
            m.set(row, col, (w.coords >> row) & 1);
    }
    return m;
}

Gsp4Check gsp4_order_check()
{
    Gsp4Check out;
    std::set<SpMat4> images;
    for (const auto& g : all_perm6())
        images.insert(phi(g));
    out.phi_image_size = images.size();
    out.injective = images.size() == 720;

    std::set<SpMat4> solutions;
    for (uint32_t bits = 0; bits < (1u << 16); ++bits) {
        SpMat4 m{static_cast<uint16_t>(bits)};
        if (is_symplectic(m))
            solutions.insert(m);
    }
    out.equation_solutions = solutions.size();
    out.images_equal_solutions = images == solutions;
    return out;
}

S5Type classify_s5_image(const std::vector<Perm6>& subgroup)
{
    std::vector<Perm6> h = subgroup;
    std::sort(h.begin(), h.end());
    h.erase(std::unique(h.begin(), h.end()), h.end());
    if (h.size() != 120 || !is_subgroup(h))
        throw std::invalid_argument("classify_s5_image: not an order-120 subgroup");

    const bool transitive = is_transitive(h);
    // Cross-check against the trace criterion on orders 3 and 6.
    bool all_zero = true, all_one = true;
    for (const auto& g : h) {
        const int o = perm_order(g);
        if (o != 3 && o != 6)
            continue;
        const int t = mat_trace(phi(g));
        all_zero = all_zero && t == 0;
        all_one = all_one && t == 1;
    }
    const bool trace_says_a = all_zero && !all_one;
    const bool trace_says_b = all_one && !all_zero;
    if (transitive != trace_says_a || transitive == trace_says_b)
        throw std::logic_error("classify_s5_image: transitivity and trace criteria disagree");
    return transitive ? S5Type::S5a : S5Type::S5b;
}

GroupSelfTest run_group_selftest()
{
    GroupSelfTest out;
    std::ostringstream os;
    bool ok = true;
    auto check = [&](bool cond, const std::string& what) {
        os << (cond ? "  ok   " : "  FAIL ") << what << '\n';
        ok = ok && cond;
    };

    os << "symplectic space W = V/U over F2, basis e1..e4\n";
    check(gram_matrix() == block_j_mod2(),
          "Gram matrix of <,>_W equals the antidiagonal block J mod 2");

    // pairing: alternating, bilinear, nondegenerate
    bool alternating = true, bilinear = true;
    for (int x = 0; x < 16; ++x) {
        alternating = alternating && pairing_w(WVec{(uint8_t)x}, WVec{(uint8_t)x}) == 0;
        for (int y = 0; y < 16; ++y)
            for (int z = 0; z < 16; ++z)
                bilinear = bilinear &&
                           pairing_w(WVec{(uint8_t)(x ^ y)}, WVec{(uint8_t)z}) ==
                               (pairing_w(WVec{(uint8_t)x}, WVec{(uint8_t)z}) ^
                                pairing_w(WVec{(uint8_t)y}, WVec{(uint8_t)z}));
    }
    bool nondegenerate = true;
    for (int x = 1; x < 16; ++x) {
        bool hits = false;
        for (int y = 0; y < 16; ++y)
            hits = hits || pairing_w(WVec{(uint8_t)x}, WVec{(uint8_t)y}) == 1;
        nondegenerate = nondegenerate && hits;
    }
    check(alternating, "pairing is alternating");
    check(bilinear, "pairing is bilinear");
    check(nondegenerate, "pairing is nondegenerate");

    const auto counts = gsp4_order_check();
    os << "  |phi(S6)| = " << counts.phi_image_size
       << ", |{X : tXJX = J}| = " << counts.equation_solutions << '\n';
    check(counts.phi_image_size == 720, "phi image has 720 elements");
    check(counts.equation_solutions == 720, "symplectic equation has 720 solutions");
    check(counts.injective, "phi is injective");
    check(counts.images_equal_solutions, "phi(S6) equals the solution set");

    bool preserves = true;
    bool homomorphism = true;
    const auto s6 = all_perm6();
    for (const auto& g : s6)
        preserves = preserves && is_symplectic(phi(g));
    check(preserves, "phi(g) preserves the pairing for all 720 g");
    // spot-check the homomorphism on a deterministic sample
    for (size_t i = 0; i < s6.size(); i += 7)
        for (size_t j = 0; j < s6.size(); j += 11)
            homomorphism = homomorphism &&
                           phi(compose(s6[i], s6[j])) == mat_mul(phi(s6[i]), phi(s6[j]));
    check(homomorphism, "phi(gh) = phi(g)phi(h) on a sample grid");

    const auto t5 = transitive_s5();
    check(t5.size() == 120, "transitive S5 has order 120");
    check(is_subgroup(t5), "transitive S5 is closed under composition");
    check(is_transitive(t5), "transitive S5 acts transitively on six letters");
    bool has33 = false;
    for (const auto& g : t5)
        has33 = has33 || cycle_type(g) == std::vector<int>{3, 3};
    check(has33, "transitive S5 contains an element of type (3,3)");
    check(classify_s5_image(t5) == S5Type::S5a, "transitive copy classified S5(a)");
    check(classify_s5_image(point_stabilizer_s5()) == S5Type::S5b,
          "point stabilizer classified S5(b)");

    // trace table for orders 3 and 6 in both copies
    bool trace_a = true, trace_b = true;
    for (const auto& g : t5) {
        const int o = perm_order(g);
        if (o == 3 || o == 6)
            trace_a = trace_a && mat_trace(phi(g)) == 0;
    }
    for (const auto& g : point_stabilizer_s5()) {
        const int o = perm_order(g);
        if (o == 3 || o == 6)
            trace_b = trace_b && mat_trace(phi(g)) == 1;
    }
    check(trace_a, "S5(a): order-3/6 elements have trace 0");
    check(trace_b, "S5(b): order-3/6 elements have trace 1");

    // fixed-point table of the transitive copy keyed by S5 cycle structure
    const auto a5 = derived_subgroup(t5);
    os << "  transitive S5 fixed-point table (order, in A5 -> fixed points, S6 type):\n";
    std::map<std::pair<int, bool>, std::set<std::pair<int, std::string>>> table;
    for (const auto& g : t5) {
        const bool even = std::binary_search(a5.begin(), a5.end(), g);
        table[{perm_order(g), even}].insert({fixed_points(g), cycle_type_string(g)});
    }
    for (const auto& [key, vals] : table) {
        os << "    order " << key.first << (key.second ? " even:" : " odd: ");
        for (const auto& [fp, ct] : vals)
            os << "  fp=" << fp << " type=" << ct;
        os << '\n';
    }
    auto single = [&](int order, bool even, int fp) {
        auto it = table.find({order, even});
        return it != table.end() && it->second.size() == 1 &&
               it->second.begin()->first == fp;
    };
    check(a5.size() == 60, "derived subgroup has order 60");
    check(single(2, true, 2), "S5-type (2,2) elements fix exactly 2 letters");
    check(single(2, false, 0), "transpositions fix 0 letters");
    check(single(3, true, 0), "order-3 elements fix 0 letters (type (3,3))");
    check(single(4, false, 2), "order-4 elements fix 2 letters");
    check(single(5, true, 1), "order-5 elements fix 1 letter");
    check(single(6, false, 0), "order-6 elements fix 0 letters");

    out.ok = ok;
    out.report = os.str();
    return out;
}

} // namespace rlab
