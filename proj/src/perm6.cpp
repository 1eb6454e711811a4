#include "resolventlab/perm6.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace rlab {

Perm6 Perm6::transposition(int a, int b)
{
    Perm6 p;
    std::swap(p.img[static_cast<size_t>(a)], p.img[static_cast<size_t>(b)]);
    return p;
}

Perm6 compose(const Perm6& a, const Perm6& b)
{
    Perm6 r;
    for (int i = 0; i < 6; ++i)
        r.img[static_cast<size_t>(i)] = a.img[b.img[static_cast<size_t>(i)]];
    return r;
}

Perm6 inverse(const Perm6& p)
{
    Perm6 r;
    for (int i = 0; i < 6; ++i)
        r.img[p.img[static_cast<size_t>(i)]] = static_cast<uint8_t>(i);
    return r;
}

int perm_order(const Perm6& p)
{
    Perm6 q = p;
    int n = 1;
    while (q != Perm6::identity()) {
        q = compose(p, q);
        ++n;
    }
    return n;
}

int fixed_points(const Perm6& p)
{
    int n = 0;
    for (int i = 0; i < 6; ++i)
        if (p.img[static_cast<size_t>(i)] == i)
            ++n;
    return n;
}

std::vector<int> cycle_type(const Perm6& p)
{
    std::vector<int> type;
    std::array<bool, 6> seen{};
    for (int i = 0; i < 6; ++i) {
        if (seen[static_cast<size_t>(i)])
            continue;
        int len = 0;
        int j = i;
        do {
            seen[static_cast<size_t>(j)] = true;
            j = p.img[static_cast<size_t>(j)];
            ++len;
        } while (j != i);
        type.push_back(len);
    }
    std::sort(type.begin(), type.end());
    return type;
}

std::string cycle_type_string(const Perm6& p)
{
    std::string s;
    for (int len : cycle_type(p)) {
        if (!s.empty())
            s += ',';
        s += std::to_string(len);
    }
    return s;
}

std::vector<Perm6> all_perm6()
{
    std::array<uint8_t, 6> img{0, 1, 2, 3, 4, 5};
    std::vector<Perm6> out;
    out.reserve(720);
    do {
        out.push_back(Perm6{img});
    } while (std::next_permutation(img.begin(), img.end()));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// P^1(F5) in the frozen order inf, 0, 1, 2, 3, 4.
// Points are (x:y) with y=0 for inf and y=1 otherwise.
struct P1F5 {
    int x, y;
};

int p1_index(int x, int y)
{
    // normalize (x:y), y != 0 => (x/y : 1)
    if (y % 5 == 0)
        return 0; // inf
    static const int inv[5] = {0, 1, 3, 2, 4};
    int xi = ((x % 5) + 5) % 5;
    int yi = ((y % 5) + 5) % 5;
    return 1 + (xi * inv[yi]) % 5;
}

} // namespace

std::vector<Perm6> transitive_s5()
{
    static const P1F5 pts[6] = {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}};
    std::set<Perm6> found;
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
            for (int c = 0; c < 5; ++c)
                for (int d = 0; d < 5; ++d) {
                    if ((a * d - b * c) % 5 == 0)
                        continue;
                    Perm6 p;
                    for (int i = 0; i < 6; ++i) {
                        const int nx = a * pts[i].x + b * pts[i].y;
                        const int ny = c * pts[i].x + d * pts[i].y;
                        p.img[static_cast<size_t>(i)] =
                            static_cast<uint8_t>(p1_index(nx, ny));
                    }
                    found.insert(p);
                }
    return {found.begin(), found.end()};
}

std::vector<Perm6> point_stabilizer_s5()
{
    std::array<uint8_t, 5> img{0, 1, 2, 3, 4};
    std::vector<Perm6> out;
    out.reserve(120);
    do {
        Perm6 p;
        for (int i = 0; i < 5; ++i)
            p.img[static_cast<size_t>(i)] = img[static_cast<size_t>(i)];
        p.img[5] = 5;
        out.push_back(p);
    } while (std::next_permutation(img.begin(), img.end()));
    std::sort(out.begin(), out.end());
    return out;
}

bool is_subgroup(const std::vector<Perm6>& sorted)
{
    if (sorted.empty())
        return false;
    for (const auto& a : sorted)
        for (const auto& b : sorted)
            if (!std::binary_search(sorted.begin(), sorted.end(), compose(a, b)))
                return false;
    return true;
}

bool is_transitive(const std::vector<Perm6>& elems)
{
    std::array<bool, 6> orbit{};
    orbit[0] = true;
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& g : elems)
            for (int i = 0; i < 6; ++i)
                if (orbit[static_cast<size_t>(i)] && !orbit[g.img[static_cast<size_t>(i)]]) {
                    orbit[g.img[static_cast<size_t>(i)]] = true;
                    grew = true;
                }
    }
    return std::all_of(orbit.begin(), orbit.end(), [](bool b) { return b; });
}

std::vector<Perm6> generated_subgroup(const std::vector<Perm6>& gens)
{
    std::set<Perm6> grp{Perm6::identity()};
    std::vector<Perm6> frontier{Perm6::identity()};
    while (!frontier.empty()) {
        std::vector<Perm6> next;
        for (const auto& h : frontier)
            for (const auto& g : gens) {
                Perm6 c = compose(g, h);
                if (grp.insert(c).second)
                    next.push_back(c);
            }
        frontier = std::move(next);
    }
    return {grp.begin(), grp.end()};
}

std::vector<Perm6> derived_subgroup(const std::vector<Perm6>& group)
{
    std::vector<Perm6> comms;
    for (const auto& a : group)
        for (const auto& b : group)
            comms.push_back(compose(compose(a, b), compose(inverse(a), inverse(b))));
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    return generated_subgroup(comms);
}

} // namespace rlab
