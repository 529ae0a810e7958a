#ifndef PSL2CODES_NUMTHEORY_HPP
#define PSL2CODES_NUMTHEORY_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace psl2codes {

bool is_prime(std::uint64_t n);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

// Prime factorization, (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

// Order of a in (Z/nZ)^*; requires gcd(a, n) = 1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n);

bool is_primitive_root(std::uint64_t a, std::uint64_t p);

} // namespace psl2codes

#endif
