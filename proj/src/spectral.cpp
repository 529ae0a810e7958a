#include "psl2codes/spectral.hpp"

#include <bit>

#include "psl2codes/psl2.hpp"

namespace psl2codes {

Spectrum fourier(const FieldContext& ctx, std::uint64_t word) {
    const std::uint32_t n = ctx.n();
    Spectrum spec;
    spec.values.assign(n, FieldElement{0});
    std::uint64_t w = word & ((std::uint64_t(1) << n) - 1);
    while (w) {
        std::uint32_t i = static_cast<std::uint32_t>(std::countr_zero(w));
        w &= w - 1;
        for (std::uint32_t j = 0; j < n; ++j) {
            spec.values[j] = ctx.add(spec.values[j], ctx.beta_pow(static_cast<std::int64_t>(i) * j));
        }
    }
    return spec;
}

std::vector<FieldElement> inverse_fourier(const FieldContext& ctx, const Spectrum& spec) {
    const std::uint32_t n = ctx.n();
    if (spec.values.size() != n) fail(errc::invalid_argument, "inverse_fourier: spectrum length mismatch");
    std::vector<FieldElement> out(n, FieldElement{0});
    for (std::uint32_t i = 0; i < n; ++i) {
        FieldElement acc = spec.values[0];
        for (std::uint32_t k = 1; k < n; ++k) {
            acc = ctx.add(acc, ctx.mul(ctx.beta_pow(-static_cast<std::int64_t>(i) * k), spec.values[k]));
        }
        out[i] = acc;
    }
    return out;
}

PermutedSpectrum permuted_spectrum(const FieldContext& ctx, const ResidueSplit& split, const Spectrum& spec) {
    const std::uint32_t n = ctx.n();
    if (split.n != n) fail(errc::invalid_argument, "permuted_spectrum: mismatched n");
    if (spec.values.size() != n) fail(errc::invalid_argument, "permuted_spectrum: spectrum length mismatch");
    PermutedSpectrum p;
    p.values.resize(n - 1);
    for (std::uint32_t s = 0; s + 1 < n; ++s) p.values[s] = spec.values[split.pi_inv_pow[s]];
    // c_0 = sum_j C_j (the inverse transform at i = 0).
    FieldElement c0{0};
    for (const FieldElement& v : spec.values) c0 = ctx.add(c0, v);
    p.c0 = c0;
    return p;
}

std::vector<FieldElement> u_polynomial(const FieldContext& ctx, const ResidueSplit& split) {
    const std::uint32_t n = ctx.n();
    std::vector<FieldElement> u(n - 1);
    for (std::uint32_t r = 0; r + 1 < n; ++r) u[r] = ctx.beta_pow(split.pi_inv_pow[r]);
    return u;
}

bool check_blahut(const FieldContext& ctx, const ResidueSplit& split, std::uint64_t extended_word) {
    const std::uint32_t n = ctx.n();
    std::uint64_t c = extended_word & ((std::uint64_t(1) << n) - 1);
    auto [s_perm, t_perm] = generators(n);
    (void)s_perm;
    std::uint64_t d = apply(t_perm, extended_word) & ((std::uint64_t(1) << n) - 1);

    Spectrum C = fourier(ctx, c);
    Spectrum D = fourier(ctx, d);

    // Left side: coefficient s is D_{pi^{-s}}, the permuted spectrum of d.
    std::vector<FieldElement> lhs = permuted_spectrum(ctx, split, D).values;

    // Right side: u(x)^2 * sum_t C_{pi^t} x^t  (mod x^{n-1} - 1).
    std::vector<FieldElement> u = u_polynomial(ctx, split);
    std::vector<FieldElement> u2(n - 1, FieldElement{0});
    for (std::uint32_t r = 0; r + 1 < n; ++r) {
        std::uint32_t e = (2 * r) % (n - 1);
        u2[e] = ctx.add(u2[e], ctx.square(u[r]));
    }
    std::vector<FieldElement> cpos(n - 1);
    for (std::uint32_t t = 0; t + 1 < n; ++t) cpos[t] = C.values[split.pi_pow[t]];
    std::vector<FieldElement> rhs(n - 1, FieldElement{0});
    for (std::uint32_t a = 0; a + 1 < n; ++a) {
        if (u2[a].is_zero()) continue;
        for (std::uint32_t b = 0; b + 1 < n; ++b) {
            if (cpos[b].is_zero()) continue;
            std::uint32_t e = (a + b) % (n - 1);
            rhs[e] = ctx.add(rhs[e], ctx.mul(u2[a], cpos[b]));
        }
    }
    return lhs == rhs;
}

BinaryPolynomial basis_representation(const FieldContext& ctx, FieldElement a, std::uint32_t l) {
    const std::uint32_t n = ctx.n();
    const std::uint32_t m = ctx.m();
    if (l % n == 0) fail(errc::invalid_argument, "basis_representation: l must be nonzero mod n");
    // Augmented system rows: row i holds bit i of each basis element beta^{lj}
    // in column j and bit i of a in column m.
    std::vector<std::uint64_t> rows(m, 0);
    for (std::uint32_t j = 0; j < m; ++j) {
        FieldElement bj = ctx.beta_pow(static_cast<std::int64_t>(l) * j);
        for (std::uint32_t i = 0; i < m; ++i) {
            if ((bj.bits >> i) & 1) rows[i] |= std::uint64_t(1) << j;
        }
    }
    for (std::uint32_t i = 0; i < m; ++i) {
        if ((a.bits >> i) & 1) rows[i] |= std::uint64_t(1) << m;
    }
    // Gauss-Jordan over GF(2).
    std::vector<std::uint32_t> pivot_row(m, UINT32_MAX);
    std::uint32_t rank = 0;
    for (std::uint32_t col = 0; col < m && rank < m; ++col) {
        std::uint32_t sel = UINT32_MAX;
        for (std::uint32_t r = rank; r < m; ++r) {
            if ((rows[r] >> col) & 1) { sel = r; break; }
        }
        if (sel == UINT32_MAX) continue;
        std::swap(rows[rank], rows[sel]);
        for (std::uint32_t r = 0; r < m; ++r) {
            if (r != rank && ((rows[r] >> col) & 1)) rows[r] ^= rows[rank];
        }
        pivot_row[col] = rank;
        ++rank;
    }
    if (rank != m) {
        fail(errc::internal, "basis_representation: singular system for l = " + std::to_string(l) +
                                 " (this would falsify the power-basis property)");
    }
    BinaryPolynomial f;
    for (std::uint32_t col = 0; col < m; ++col) {
        if ((rows[pivot_row[col]] >> m) & 1) f.set_coeff(col, true);
    }
    if (!(ctx.eval(f, ctx.beta_pow(l)) == a)) fail(errc::internal, "basis_representation: verification failed");
    return f;
}

WitnessReport spectral_witness(const FieldContext& ctx, const CosetTable& cosets, const ResidueSplit& split,
                               std::uint64_t defining_mask, std::uint32_t l, std::uint32_t s) {
    const std::uint32_t n = ctx.n();
    const std::uint32_t m = ctx.m();
    if (l == 0 || l >= n) fail(errc::invalid_argument, "spectral_witness: l must lie in [1, n-1]");
    if ((defining_mask >> l) & 1) fail(errc::invalid_argument, "spectral_witness: l must not lie in the defining set");
    if (s > (n - 3) / 2) fail(errc::invalid_argument, "spectral_witness: s out of range [0, (n-3)/2]");
    CyclicCode code = cyclic_from_defining_set(ctx, cosets, defining_mask); // validates T

    // Target permuted-spectrum index: even for l in Q, odd for l in N.
    std::uint32_t dl = split.dlog[l];
    std::uint32_t target = 2 * s + (dl & 1);

    // D'_{target}, as a function of gamma = C_l, is the linearized map
    //   L(x) = sum_w (beta^{2 pi^{e_w}} + beta^{-2 pi^{e_w}}) x^{2^w}
    // over the w for which pi^{dl - target + h w} is a square (e_w = half the
    // exponent): all w when 2 is a residue (h even), every other w when 2 is
    // a nonresidue (h odd, m even).
    std::vector<FieldElement> coeffs(m, FieldElement{0});
    bool nonzero = false;
    for (std::uint32_t w = 0; w < m; ++w) {
        std::int64_t aexp = (static_cast<std::int64_t>(dl) - target + static_cast<std::int64_t>(split.h) * w) %
                            static_cast<std::int64_t>(n - 1);
        if (aexp < 0) aexp += n - 1;
        if (aexp & 1) continue;
        std::uint32_t e = static_cast<std::uint32_t>(aexp / 2);
        std::int64_t pe = split.pi_pow[e];
        coeffs[w] = ctx.add(ctx.beta_pow(2 * pe), ctx.beta_pow(-2 * pe));
        if (!coeffs[w].is_zero()) nonzero = true;
    }
    if (!nonzero) {
        fail(errc::falsification, "spectral_witness: linearized map vanished identically (l = " +
                                      std::to_string(l) + ", s = " + std::to_string(s) + ")");
    }
    auto eval_L = [&](FieldElement x) {
        FieldElement acc{0}, y = x;
        for (std::uint32_t w = 0; w < m; ++w) {
            if (!coeffs[w].is_zero()) acc = ctx.add(acc, ctx.mul(coeffs[w], y));
            y = ctx.square(y);
        }
        return acc;
    };

    // A nonzero linearized map of degree <= 2^{m-1} cannot vanish on a basis,
    // so scanning the power basis of beta^l must hit a usable gamma.
    FieldElement gamma{0};
    bool found = false;
    for (std::uint32_t j = 0; j < m; ++j) {
        FieldElement cand = ctx.beta_pow(static_cast<std::int64_t>(l) * j);
        if (!eval_L(cand).is_zero()) {
            gamma = cand;
            found = true;
            break;
        }
    }
    if (!found) {
        fail(errc::falsification, "spectral_witness: linearized map vanished on a full basis");
    }

    BinaryPolynomial m_l = minimal_polynomial(cosets, ctx, l);
    BinaryPolynomial m_bar = BinaryPolynomial::x_n_minus_1(n) / m_l;
    FieldElement m_bar_at = ctx.eval(m_bar, ctx.beta_pow(l));
    if (m_bar_at.is_zero()) fail(errc::internal, "spectral_witness: complement polynomial vanished at beta^l");
    BinaryPolynomial a = basis_representation(ctx, ctx.mul(gamma, ctx.inv(m_bar_at)), l);

    BinaryPolynomial c_poly = (a * m_bar) % BinaryPolynomial::x_n_minus_1(n);
    std::uint64_t codeword = c_poly.low_bits();
    if (!code.g.divides(c_poly)) fail(errc::internal, "spectral_witness: constructed word left the code");
    if (!(ctx.eval(c_poly, ctx.beta_pow(l)) == gamma)) fail(errc::internal, "spectral_witness: C_l != gamma");

    // Independent verification: extend, apply T, transform, reindex.
    std::uint64_t ext = codeword | (std::uint64_t(std::popcount(codeword) & 1) << n);
    auto [s_perm, t_perm] = generators(n);
    (void)s_perm;
    std::uint64_t d = apply(t_perm, ext) & ((std::uint64_t(1) << n) - 1);
    PermutedSpectrum dp = permuted_spectrum(ctx, split, fourier(ctx, d));
    FieldElement recomputed = dp.values[target];
    if (recomputed.is_zero()) {
        fail(errc::falsification, "spectral_witness: recomputed spectrum value is zero (l = " +
                                      std::to_string(l) + ", s = " + std::to_string(s) + ")");
    }
    if (!(recomputed == eval_L(gamma))) {
        fail(errc::internal, "spectral_witness: recomputed value disagrees with the linearized map");
    }

    WitnessReport rep;
    rep.l = l;
    rep.s = s;
    rep.target_index = target;
    rep.gamma = gamma;
    rep.a = a;
    rep.codeword = codeword;
    rep.d_value = recomputed;
    return rep;
}

} // namespace psl2codes
