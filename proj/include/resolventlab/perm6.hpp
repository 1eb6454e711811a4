#ifndef RESOLVENTLAB_PERM6_HPP
#define RESOLVENTLAB_PERM6_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace rlab {

// Permutation of {0,...,5}; img[i] is the image of i.
struct Perm6 {
    std::array<uint8_t, 6> img{0, 1, 2, 3, 4, 5};

    static Perm6 identity() { return Perm6{}; }
    // (a b) as 0-based letters.
    static Perm6 transposition(int a, int b);

    uint8_t operator()(int i) const { return img[static_cast<size_t>(i)]; }

    friend bool operator==(const Perm6&, const Perm6&) = default;
    friend auto operator<=>(const Perm6&, const Perm6&) = default;
};

// (a*b)(i) = a(b(i))
Perm6 compose(const Perm6& a, const Perm6& b);
Perm6 inverse(const Perm6& p);
int perm_order(const Perm6& p);
int fixed_points(const Perm6& p);
// Cycle lengths, ascending (e.g. {1,1,2,2} for a (2,2)-type element).
std::vector<int> cycle_type(const Perm6& p);
std::string cycle_type_string(const Perm6& p);

// All 720 elements of S6, sorted.
std::vector<Perm6> all_perm6();

// The transitive S5 inside S6: the action of PGL2(F5) on the six points
// of P^1(F5), enumerated in the frozen order (inf, 0, 1, 2, 3, 4).
std::vector<Perm6> transitive_s5();

// The point stabilizer of the last letter: S5 acting on {0..4}.
std::vector<Perm6> point_stabilizer_s5();

bool is_subgroup(const std::vector<Perm6>& sorted_elems);
bool is_transitive(const std::vector<Perm6>& elems);
// Closure of a generating set under composition.
std::vector<Perm6> generated_subgroup(const std::vector<Perm6>& gens);
// Commutator subgroup (A5 for any S5 copy).
std::vector<Perm6> derived_subgroup(const std::vector<Perm6>& sorted_group);

} // namespace rlab

#endif
