#ifndef PSL2CODES_GF2M_HPP
#define PSL2CODES_GF2M_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "psl2codes/common.hpp"

namespace psl2codes {

// Polynomial over GF(2), bit i of word i/64 = coefficient of x^i.
// The zero polynomial has degree -1; arithmetic is carry-less.
class BinaryPolynomial {
public:
    BinaryPolynomial() = default;

    static BinaryPolynomial zero() { return {}; }
    static BinaryPolynomial one() { return from_bits(1); }
    static BinaryPolynomial x() { return from_bits(2); }
    static BinaryPolynomial from_bits(std::uint64_t coeffs);
    // "1101" reads low-to-high: 1 + x + x^3.
    static BinaryPolynomial from_bitstring(std::string_view s);
    static BinaryPolynomial x_pow(std::size_t k);
    // x^n - 1 = x^n + 1 over GF(2).
    static BinaryPolynomial x_n_minus_1(std::uint32_t n);

    int degree() const;
    bool is_zero() const { return words_.empty(); }
    bool coeff(std::size_t i) const;
    void set_coeff(std::size_t i, bool v);
    // Lowest 64 coefficients, for callers that know degree < 64.
    std::uint64_t low_bits() const { return words_.empty() ? 0 : words_[0]; }

    BinaryPolynomial operator+(const BinaryPolynomial& g) const;
    BinaryPolynomial operator*(const BinaryPolynomial& g) const;
    // (quotient, remainder) with f = q*g + r, deg r < deg g; g must be nonzero.
    std::pair<BinaryPolynomial, BinaryPolynomial> divmod(const BinaryPolynomial& g) const;
    BinaryPolynomial operator/(const BinaryPolynomial& g) const { return divmod(g).first; }
    BinaryPolynomial operator%(const BinaryPolynomial& g) const { return divmod(g).second; }
    BinaryPolynomial shifted(std::size_t k) const; // multiply by x^k

    static BinaryPolynomial gcd(BinaryPolynomial a, BinaryPolynomial b);

    bool divides(const BinaryPolynomial& f) const; // *this | f

    // Coefficient string low-to-high ("1101" = 1 + x + x^3); "" for zero.
    std::string to_bitstring() const;

    friend bool operator==(const BinaryPolynomial&, const BinaryPolynomial&) = default;

private:
    std::vector<std::uint64_t> words_;
    void trim();
    friend class FieldContext;
};

// Element of GF(2^m) in the polynomial basis of its FieldContext; bit i of
// `bits` is the coordinate of x^i. Only meaningful relative to a context.
struct FieldElement {
    std::uint64_t bits = 0;
    bool is_zero() const { return bits == 0; }
    friend bool operator==(FieldElement, FieldElement) = default;
};

// GF(2^m) for m = ord_n(2), carrying the n-th primitive root of unity
// beta = alpha^((2^m-1)/n). Immutable after construction and freely
// shareable across threads; all operations are pure.
class FieldContext {
public:
    // n must be an odd prime, n <= 61. The modulus is the lexicographically
    // smallest (coefficient bitmask as integer, low bit = constant term)
    // irreducible degree-m polynomial whose root x generates GF(2^m)^*.
    static FieldContext build(std::uint32_t n);

    std::uint32_t n() const { return n_; }
    std::uint32_t m() const { return m_; }
    std::uint64_t order() const { return order_; } // 2^m - 1
    BinaryPolynomial modulus() const { return BinaryPolynomial::from_bits(modulus_); }
    std::uint64_t modulus_bits() const { return modulus_; }
    FieldElement alpha() const { return {2}; }
    FieldElement beta() const { return beta_; }
    bool uses_tables() const { return !log_.empty(); }

    FieldElement add(FieldElement a, FieldElement b) const { return {a.bits ^ b.bits}; }
    FieldElement mul(FieldElement a, FieldElement b) const;
    FieldElement inv(FieldElement a) const;
    // Square-and-multiply; exponent reduced mod 2^m-1 for nonzero base.
    // pow(0, 0) = 1, pow(0, e) = 0 for e > 0.
    FieldElement pow(FieldElement a, std::uint64_t e) const;
    FieldElement square(FieldElement a) const { return mul(a, a); }

    // beta^e with e taken mod n (e may be any integer).
    FieldElement beta_pow(std::int64_t e) const;

    // Horner evaluation of a GF(2)[x] polynomial at a field point.
    FieldElement eval(const BinaryPolynomial& f, FieldElement at) const;

private:
    std::uint32_t n_ = 0;
    std::uint32_t m_ = 0;
    std::uint64_t order_ = 0;
    std::uint64_t modulus_ = 0;
    FieldElement beta_;
    std::vector<std::uint32_t> log_;       // log_[a] for a in [1, 2^m)
    std::vector<std::uint32_t> alog_;      // alog_[k] = alpha^k, k in [0, 2^m-1)
    std::vector<std::uint64_t> beta_pows_; // beta^k, k in [0, n)

    std::uint64_t raw_mul(std::uint64_t a, std::uint64_t b) const;
};

} // namespace psl2codes

#endif
