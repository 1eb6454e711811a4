#ifndef RESOLVENTLAB_PRIMES_HPP
#define RESOLVENTLAB_PRIMES_HPP

#include <cstdint>
#include <vector>

namespace rlab {

// All primes <= bound, ascending.
std::vector<uint64_t> primes_upto(uint64_t bound);

bool is_prime_u64(uint64_t n);

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m);
uint64_t invmod_u64(uint64_t a, uint64_t p);

} // namespace rlab

#endif
