#include "resolventlab/primes.hpp"

#include <stdexcept>

namespace rlab {

std::vector<uint64_t> primes_upto(uint64_t bound)
{
    std::vector<uint64_t> out;
    if (bound < 2)
        return out;
    std::vector<bool> composite(bound + 1, false);
    for (uint64_t i = 2; i <= bound; ++i) {
        if (composite[i])
            continue;
        out.push_back(i);
        for (uint64_t j = i * i; j <= bound; j += i)
            composite[j] = true;
    }
    return out;
}

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m)
{
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m)
{
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1)
            r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

uint64_t invmod_u64(uint64_t a, uint64_t p)
{
    a %= p;
    if (a == 0)
        throw std::domain_error("invmod of zero");
    // p prime
    return powmod_u64(a, p - 2, p);
}

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(uint64_t n)
{
    if (n < 2)
        return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0)
            return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness)
            return false;
    }
    return true;
}

} // namespace rlab
