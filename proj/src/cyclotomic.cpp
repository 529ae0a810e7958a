#include "psl2codes/cyclotomic.hpp"

#include <algorithm>

#include "psl2codes/numtheory.hpp"

namespace psl2codes {

CosetTable build_cosets(std::uint32_t n) {
    if (n < 3 || n % 2 == 0 || !is_prime(n)) fail(errc::invalid_argument, "build_cosets: n must be an odd prime");
    CosetTable t;
    t.n = n;
    t.coset_index.assign(n, UINT32_MAX);
    for (std::uint32_t i = 0; i < n; ++i) {
        if (t.coset_index[i] != UINT32_MAX) continue; // i is not a leader
        std::vector<std::uint32_t> coset;
        std::uint32_t j = i;
        do {
            coset.push_back(j);
            j = (j * 2) % n;
        } while (j != i);
        std::sort(coset.begin(), coset.end());
        std::uint32_t idx = static_cast<std::uint32_t>(t.cosets.size());
        for (std::uint32_t r : coset) t.coset_index[r] = idx;
        t.leaders.push_back(coset.front());
        t.cosets.push_back(std::move(coset));
    }
    return t;
}

BinaryPolynomial minimal_polynomial(const CosetTable& table, const FieldContext& ctx, std::uint32_t i) {
    if (table.n != ctx.n()) fail(errc::invalid_argument, "minimal_polynomial: coset table and field built for different n");
    const auto& coset = table.coset_of(i % table.n);
    // Expand prod_{j in coset} (x - beta^j) over GF(2^m), low-to-high coefficients.
    std::vector<FieldElement> poly{FieldElement{1}};
    for (std::uint32_t j : coset) {
        FieldElement root = ctx.beta_pow(j);
        poly.insert(poly.begin(), FieldElement{0});
        for (std::size_t k = 0; k + 1 < poly.size(); ++k) {
            poly[k] = ctx.add(poly[k], ctx.mul(poly[k + 1], root));
        }
    }
    BinaryPolynomial out;
    for (std::size_t k = 0; k < poly.size(); ++k) {
        if (poly[k].bits > 1) fail(errc::internal, "minimal_polynomial: coefficient escaped GF(2)");
        if (poly[k].bits) out.set_coeff(k, true);
    }
    if (out.degree() != static_cast<int>(coset.size())) fail(errc::internal, "minimal_polynomial: degree mismatch");
    return out;
}

ResidueSplit residue_split(std::uint32_t n) {
    if (n < 3 || !is_prime(n)) fail(errc::invalid_argument, "residue_split: n must be an odd prime > 2");
    ResidueSplit s;
    s.n = n;
    s.m = static_cast<std::uint32_t>(multiplicative_order(2, n));
    s.h = (n - 1) / s.m;
    for (std::uint32_t x = 1; x < n; ++x) {
        std::uint32_t sq = (x * x) % n;
        s.residue_mask |= std::uint64_t(1) << sq;
    }
    for (std::uint32_t x = 1; x < n; ++x) {
        if (s.is_residue(x)) {
            s.residues.push_back(x);
        } else {
            s.nonresidues.push_back(x);
            s.nonresidue_mask |= std::uint64_t(1) << x;
        }
    }
    s.two_is_residue = s.is_residue(2 % n);

    for (std::uint32_t g = 2; g < n; ++g) {
        if (powmod(g, s.h, n) == 2 % n && is_primitive_root(g, n)) {
            s.pi = g;
            break;
        }
    }
    if (s.pi == 0) fail(errc::internal, "residue_split: no primitive root pi with pi^h = 2 exists");

    std::uint32_t piinv = static_cast<std::uint32_t>(powmod(s.pi, n - 2, n));
    s.pi_pow.resize(n - 1);
    s.pi_inv_pow.resize(n - 1);
    s.dlog.assign(n, 0);
    std::uint64_t p = 1, q = 1;
    for (std::uint32_t r = 0; r + 1 < n; ++r) {
        s.pi_pow[r] = static_cast<std::uint32_t>(p);
        s.pi_inv_pow[r] = static_cast<std::uint32_t>(q);
        s.dlog[p] = r;
        p = (p * s.pi) % n;
        q = (q * piinv) % n;
    }
    return s;
}

} // namespace psl2codes
