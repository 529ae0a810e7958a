#ifndef PSL2CODES_SPECTRAL_HPP
#define PSL2CODES_SPECTRAL_HPP

#include <cstdint>
#include <vector>

#include "psl2codes/codes.hpp"
#include "psl2codes/cyclotomic.hpp"

namespace psl2codes {

// Fourier (Mattson-Solomon) spectrum of a length-n binary word:
// C_j = c(beta^j), j = 0..n-1.
struct Spectrum {
    std::vector<FieldElement> values;
};

Spectrum fourier(const FieldContext& ctx, std::uint64_t word);

// Inverse transform c_i = C_0 + sum_{k=1}^{n-1} beta^{-ik} C_k. Lands in
// {0, 1} exactly when the spectrum satisfies the binary conjugacy constraint.
std::vector<FieldElement> inverse_fourier(const FieldContext& ctx, const Spectrum& spec);

// Spectrum reindexed by powers of the distinguished primitive root pi:
// values[s] = C_{pi^{-s}} for s = 0..n-2, plus the time-domain constant
// term c_0 (recovered as sum_j C_j), which the reindexed transform equation
// C'_s = c_0 + sum_r beta^{pi^{r-s}} c'_r carries as an additive constant.
struct PermutedSpectrum {
    std::vector<FieldElement> values;
    FieldElement c0;
};

PermutedSpectrum permuted_spectrum(const FieldContext& ctx, const ResidueSplit& split, const Spectrum& spec);

// u(x) = sum_{r=0}^{n-2} beta^{pi^{-r}} x^r, coefficients low-to-high.
std::vector<FieldElement> u_polynomial(const FieldContext& ctx, const ResidueSplit& split);

// Fourier identity for the T-image of a parity-extended word. Writes the
// transform of d = T(c) as a polynomial congruence mod x^{n-1}-1:
//
//   sum_s D_{pi^{-s}} x^s  ==  u(x)^2 * sum_t C_{pi^t} x^t.
//
// Note the two primed sequences run in opposite index directions; with both
// stored in the PermutedSpectrum layout (negative powers of pi) the right
// side reads u(x)^2 * C'(1/x). Exact field equality, no tolerance.
bool check_blahut(const FieldContext& ctx, const ResidueSplit& split, std::uint64_t extended_word);

// Solves f(beta^l) = a with deg f < m over GF(2); {1, beta^l, ...,
// beta^{l(m-1)}} is a basis of GF(2^m) over GF(2) for every l != 0, so the
// system is always solvable.
BinaryPolynomial basis_representation(const FieldContext& ctx, FieldElement a, std::uint32_t l);

// Constructive spectral witness: a codeword of the cyclic code with defining
// set T whose T-image has a nonzero permuted-spectrum value at target_index.
// For l a quadratic residue the target is the even index 2s; for l a
// nonresidue the mirror construction targets 2s+1 (even indices are
// unreachable there: the linearized map degenerates to zero).
struct WitnessReport {
    std::uint32_t l = 0;
    std::uint32_t s = 0;
    std::uint32_t target_index = 0;
    FieldElement gamma;
    BinaryPolynomial a;
    std::uint64_t codeword = 0; // length-n bit vector
    FieldElement d_value;       // recomputed from scratch, nonzero
};

WitnessReport spectral_witness(const FieldContext& ctx, const CosetTable& cosets, const ResidueSplit& split,
                               std::uint64_t defining_mask, std::uint32_t l, std::uint32_t s);

} // namespace psl2codes

#endif
