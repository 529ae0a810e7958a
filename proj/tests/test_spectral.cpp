#include <doctest.h>

#include <bit>
#include <random>

#include "psl2codes/psl2.hpp"
#include "psl2codes/spectral.hpp"

using namespace psl2codes;

namespace {

struct Fixture {
    FieldContext ctx;
    CosetTable cosets;
    ResidueSplit split;
    explicit Fixture(std::uint32_t n) : ctx(FieldContext::build(n)), cosets(build_cosets(n)), split(residue_split(n)) {}
};

std::uint64_t parity_extend(std::uint64_t w, std::uint32_t n) {
    return w | (std::uint64_t(std::popcount(w & ((std::uint64_t(1) << n) - 1)) & 1) << n);
}

// The reindexed transform equation: C'(x) = u(x) c'(x) + c_0 (1 + x + ... +
// x^{n-2}) mod x^{n-1}-1, with c'_r = c_{pi^r}. Checked coefficientwise.
bool check_transform_equation(const Fixture& f, std::uint64_t word) {
    const std::uint32_t n = f.ctx.n();
    Spectrum spec = fourier(f.ctx, word);
    PermutedSpectrum ps = permuted_spectrum(f.ctx, f.split, spec);
    std::vector<FieldElement> u = u_polynomial(f.ctx, f.split);
    std::vector<FieldElement> rhs(n - 1, ps.c0);
    for (std::uint32_t r = 0; r + 1 < n; ++r) {
        if (!((word >> f.split.pi_pow[r]) & 1)) continue; // c'_r = c_{pi^r}
        for (std::uint32_t k = 0; k + 1 < n; ++k) {
            std::uint32_t e = (r + k) % (n - 1);
            rhs[e] = f.ctx.add(rhs[e], u[k]);
        }
    }
    return rhs == ps.values;
}

} // namespace

TEST_CASE("fourier basics at n=7") {
    Fixture f(7);
    Spectrum zero = fourier(f.ctx, 0);
    for (const FieldElement& v : zero.values) CHECK(v.is_zero());

    Spectrum ones = fourier(f.ctx, 0x7f);
    CHECK(ones.values[0] == FieldElement{1}); // seven ones in characteristic 2
    for (std::uint32_t j = 1; j < 7; ++j) CHECK(ones.values[j].is_zero());

    // The generator of the Q-side QR code vanishes exactly on Q.
    auto [q, nn] = qr_codes(f.ctx, f.cosets, f.split);
    (void)nn;
    Spectrum g_spec = fourier(f.ctx, q.g.low_bits());
    for (std::uint32_t j = 0; j < 7; ++j) {
        CHECK(g_spec.values[j].is_zero() == f.split.is_residue(j));
    }
}

TEST_CASE("inverse transform round-trips") {
    Fixture f7(7);
    for (std::uint64_t w = 0; w < 128; ++w) {
        std::vector<FieldElement> back = inverse_fourier(f7.ctx, fourier(f7.ctx, w));
        for (std::uint32_t i = 0; i < 7; ++i) {
            CHECK(back[i].bits == ((w >> i) & 1));
        }
    }
    Fixture f17(17);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        std::uint64_t w = rng() & ((std::uint64_t(1) << 17) - 1);
        std::vector<FieldElement> back = inverse_fourier(f17.ctx, fourier(f17.ctx, w));
        for (std::uint32_t i = 0; i < 17; ++i) CHECK(back[i].bits == ((w >> i) & 1));
    }
}

TEST_CASE("conjugacy constraint of binary spectra") {
    Fixture f(17);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 1000; ++trial) {
        std::uint64_t w = rng() & ((std::uint64_t(1) << 17) - 1);
        Spectrum spec = fourier(f.ctx, w);
        for (std::uint32_t j = 0; j < 17; ++j) {
            CHECK(spec.values[(2 * j) % 17] == f.ctx.square(spec.values[j]));
        }
    }
}

TEST_CASE("permuted spectrum indexing") {
    Fixture f(7); // pi = 3, pi^-1 = 5
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        std::uint64_t w = rng() & 0x7f;
        Spectrum spec = fourier(f.ctx, w);
        PermutedSpectrum ps = permuted_spectrum(f.ctx, f.split, spec);
        CHECK(ps.values[0] == spec.values[1]);
        CHECK(ps.values[1] == spec.values[5]);
        CHECK(ps.values[2] == spec.values[4]); // 5^2 = 25 = 4 mod 7
        // c0 recovered from the spectrum equals the time-domain constant term.
        CHECK(ps.c0.bits == (w & 1));
        // The index map covers {1, ..., n-1}: un-permuting recovers the spectrum.
        for (std::uint32_t s = 0; s + 1 < 7; ++s) {
            CHECK(ps.values[s] == spec.values[f.split.pi_inv_pow[s]]);
        }
    }
    // Constant spectrum stays constant under reindexing.
    Spectrum constant;
    constant.values.assign(7, FieldElement{3});
    PermutedSpectrum ps = permuted_spectrum(f.ctx, f.split, constant);
    for (const FieldElement& v : ps.values) CHECK(v == FieldElement{3});
}

TEST_CASE("u polynomial") {
    Fixture f(7);
    std::vector<FieldElement> u = u_polynomial(f.ctx, f.split);
    REQUIRE(u.size() == 6);
    CHECK(u[0] == f.ctx.beta());       // pi^0 = 1
    CHECK(u[1] == f.ctx.beta_pow(5));  // pi^-1 = 5 mod 7
    for (const FieldElement& c : u) {
        CHECK(!c.is_zero());
        CHECK(f.ctx.pow(c, 7) == FieldElement{1}); // nonzero 7th roots of unity
    }
}

TEST_CASE("reindexed transform equation holds") {
    Fixture f7(7);
    for (std::uint64_t w = 0; w < 128; ++w) CHECK(check_transform_equation(f7, w));
    Fixture f17(17);
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 100; ++trial) {
        CHECK(check_transform_equation(f17, rng() & ((std::uint64_t(1) << 17) - 1)));
    }
}

TEST_CASE("fourier identity for T-images: QR codewords and random parity words") {
    Fixture f(7);
    CHECK(check_blahut(f.ctx, f.split, 0));

    auto [q, nn] = qr_codes(f.ctx, f.cosets, f.split);
    (void)nn;
    LinearCode ext = extend(q);
    // All 16 extended QR codewords.
    for (std::uint64_t idx = 0; idx < 16; ++idx) {
        std::uint64_t word = 0;
        for (std::uint32_t b = 0; b < 4; ++b) {
            if ((idx >> b) & 1) word ^= ext.basis[b];
        }
        CHECK(check_blahut(f.ctx, f.split, word));
    }

    // Exhaustive over every parity-extended word for the smallest primes.
    for (std::uint32_t n : {3u, 5u, 7u}) {
        Fixture fx(n);
        for (std::uint64_t w = 0; w < (std::uint64_t(1) << n); ++w) {
            CHECK(check_blahut(fx.ctx, fx.split, parity_extend(w, n)));
        }
    }
    for (std::uint32_t n : {7u, 17u}) {
        Fixture fx(n);
        std::mt19937_64 rng(31);
        for (int trial = 0; trial < 1000; ++trial) {
            std::uint64_t w = rng() & ((std::uint64_t(1) << n) - 1);
            CHECK(check_blahut(fx.ctx, fx.split, parity_extend(w, n)));
        }
    }

    // The identity uses the parity structure: flipping the extended
    // coordinate of the zero word breaks it.
    CHECK(!check_blahut(f.ctx, f.split, std::uint64_t(1) << 7));
}

TEST_CASE("basis representation") {
    Fixture f(7);
    CHECK(basis_representation(f.ctx, FieldElement{1}, 3) == BinaryPolynomial::one());
    CHECK(basis_representation(f.ctx, f.ctx.beta_pow(3), 3) == BinaryPolynomial::x());
    CHECK_THROWS_AS(basis_representation(f.ctx, FieldElement{1}, 0), psl2codes::error);

    for (std::uint32_t n : {7u, 11u}) {
        Fixture fx(n);
        std::mt19937_64 rng(37);
        for (std::uint32_t l = 1; l < n; ++l) {
            for (int trial = 0; trial < 10; ++trial) {
                FieldElement a{rng() & fx.ctx.order()};
                BinaryPolynomial rep = basis_representation(fx.ctx, a, l);
                CHECK(rep.degree() < static_cast<int>(fx.ctx.m()));
                CHECK(fx.ctx.eval(rep, fx.ctx.beta_pow(l)) == a);
            }
        }
    }
}

TEST_CASE("spectral witnesses at n=7 (2 in Q)") {
    Fixture f(7);
    for (std::uint32_t s = 0; s <= 2; ++s) {
        WitnessReport rep = spectral_witness(f.ctx, f.cosets, f.split, 0, 1, s);
        CHECK(rep.target_index == 2 * s); // l = 1 = pi^0 is a residue
        CHECK(!rep.d_value.is_zero());
        CHECK(rep.a.degree() < 3);
        CHECK(rep.codeword != 0);
    }
    // Nonresidue l: the mirror statement targets the odd index 2s+1.
    WitnessReport repn = spectral_witness(f.ctx, f.cosets, f.split, 0, 3, 0);
    CHECK(repn.target_index == 1);
    CHECK(!repn.d_value.is_zero());

    CHECK_THROWS_AS(spectral_witness(f.ctx, f.cosets, f.split, 0, 0, 0), psl2codes::error);
    CHECK_THROWS_AS(spectral_witness(f.ctx, f.cosets, f.split, 0, 1, 3), psl2codes::error);
    // l inside the defining set is rejected.
    CHECK_THROWS_AS(spectral_witness(f.ctx, f.cosets, f.split, f.split.residue_mask, 1, 0), psl2codes::error);
}

TEST_CASE("spectral witness at n=11 (2 in N branch, m even)") {
    Fixture f(11);
    WitnessReport rep = spectral_witness(f.ctx, f.cosets, f.split, 0, 1, 0);
    CHECK(rep.target_index == 0);
    CHECK(!rep.d_value.is_zero());
    // Independent recomputation of the reported value.
    std::uint64_t ext = parity_extend(rep.codeword, 11);
    auto [s_perm, t_perm] = generators(11);
    (void)s_perm;
    std::uint64_t d = apply(t_perm, ext) & ((std::uint64_t(1) << 11) - 1);
    PermutedSpectrum ps = permuted_spectrum(f.ctx, f.split, fourier(f.ctx, d));
    CHECK(ps.values[rep.target_index] == rep.d_value);
}

TEST_CASE("witness inside a nontrivial code stays in the code") {
    Fixture f(7);
    // T = N = {3,5,6}; l = 1 lies outside T.
    CyclicCode code = cyclic_from_defining_set(f.ctx, f.cosets, f.split.nonresidue_mask);
    for (std::uint32_t s = 0; s <= 2; ++s) {
        WitnessReport rep = spectral_witness(f.ctx, f.cosets, f.split, f.split.nonresidue_mask, 1, s);
        CHECK(code.to_linear().contains(rep.codeword));
        CHECK(code.g.divides(BinaryPolynomial::from_bits(rep.codeword)));
        CHECK(!rep.d_value.is_zero());
    }
}

TEST_CASE("classified invariant codes satisfy the residue-saturation dichotomy") {
    for (std::uint32_t n : {5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u}) {
        Fixture f(n);
        for (const ClassifyEntry& e : classify_extended_cyclic(f.ctx, f.cosets, f.split)) {
            if (!e.invariant) continue;
            std::uint64_t t_mask = 0;
            for (std::uint32_t r : e.defining_set) t_mask |= std::uint64_t(1) << r;
            std::uint64_t qm = f.split.residue_mask, nm = f.split.nonresidue_mask;
            CHECK(((t_mask & qm) == 0 || (t_mask & qm) == qm));
            CHECK(((t_mask & nm) == 0 || (t_mask & nm) == nm));
        }
    }
}
