#include "psl2codes/numtheory.hpp"

#include <algorithm>
#include <numeric>

#include "psl2codes/common.hpp"

namespace psl2codes {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    // Deterministic Miller-Rabin for 64-bit with the first twelve primes as bases.
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

namespace {

std::uint64_t pollard_rho(std::uint64_t n) {
    if ((n & 1) == 0) return 2;
    for (std::uint64_t c = 1;; ++c) {
        auto step = [n, c](std::uint64_t x) { return (mulmod(x, x, n) + c) % n; };
        std::uint64_t x = 2, y = 2, d = 1;
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void factor_rec(std::uint64_t n, std::vector<std::uint64_t>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    std::uint64_t d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

} // namespace

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        while (n % p == 0) { primes.push_back(p); n /= p; }
    }
    factor_rec(n, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<std::uint64_t, int>> out;
    for (std::uint64_t p : primes) {
        if (!out.empty() && out.back().first == p) {
            ++out.back().second;
        } else {
            out.emplace_back(p, 1);
        }
    }
    return out;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n) {
    if (n < 2 || std::gcd(a % n, n) != 1) fail(errc::invalid_argument, "multiplicative_order: gcd(a, n) != 1");
    std::uint64_t t = a % n, k = 1;
    while (t != 1) {
        t = mulmod(t, a, n);
        if (++k > n) fail(errc::internal, "multiplicative_order: no order found");
    }
    return k;
}

bool is_primitive_root(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) return false;
    for (const auto& [q, e] : factorize(p - 1)) {
        (void)e;
        if (powmod(a, (p - 1) / q, p) == 1) return false;
    }
    return true;
}

} // namespace psl2codes
