#include "psl2codes/psl2.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>

#include "psl2codes/numtheory.hpp"

namespace psl2codes {

namespace {

std::int64_t mod_reduce(std::int64_t v, std::uint32_t n) {
    std::int64_t r = v % static_cast<std::int64_t>(n);
    return r < 0 ? r + n : r;
}

} // namespace

ProjPermutation fractional_linear(std::uint32_t n, std::int64_t a, std::int64_t b, std::int64_t c,
                                  std::int64_t d) {
    if (!is_prime(n) || n < 3) fail(errc::invalid_argument, "fractional_linear: n must be an odd prime");
    std::int64_t det = mod_reduce(a * d - b * c, n);
    if (det != 1) fail(errc::invalid_argument, "fractional_linear: ad - bc must be 1 mod n");
    ProjPermutation p;
    p.n = n;
    p.params = {a, b, c, d};
    p.map.resize(n + 1);
    auto inv = [n](std::int64_t v) { return static_cast<std::int64_t>(powmod(static_cast<std::uint64_t>(v), n - 2, n)); };
    for (std::uint32_t x = 0; x < n; ++x) {
        std::int64_t num = mod_reduce(a * x + c, n);
        std::int64_t den = mod_reduce(b * x + d, n);
        p.map[x] = (den == 0) ? static_cast<std::uint8_t>(n)
                              : static_cast<std::uint8_t>(mod_reduce(num * inv(den), n));
    }
    std::int64_t bb = mod_reduce(b, n);
    p.map[n] = (bb == 0) ? static_cast<std::uint8_t>(n)
                         : static_cast<std::uint8_t>(mod_reduce(mod_reduce(a, n) * inv(bb), n));
    // Bijectivity is forced by ad - bc = 1; verify anyway.
    std::uint64_t seen = 0;
    for (std::uint8_t v : p.map) seen |= std::uint64_t(1) << v;
    if (std::popcount(seen) != static_cast<int>(n + 1)) fail(errc::internal, "fractional_linear: map is not a bijection");
    return p;
}

ProjPermutation identity_permutation(std::uint32_t n) { return fractional_linear(n, 1, 0, 0, 1); }

std::pair<ProjPermutation, ProjPermutation> generators(std::uint32_t n) {
    ProjPermutation s = fractional_linear(n, 1, 0, 1, 1);                        // y -> y + 1
    ProjPermutation t = fractional_linear(n, 0, 1, static_cast<std::int64_t>(n) - 1, 0); // y -> -1/y
    return {s, t};
}

ProjPermutation compose(const ProjPermutation& s, const ProjPermutation& t) {
    if (s.n != t.n) fail(errc::invalid_argument, "compose: mismatched n");
    ProjPermutation r;
    r.n = s.n;
    r.map.resize(s.n + 1);
    for (std::uint32_t p = 0; p <= s.n; ++p) r.map[p] = s.map[t.map[p]];
    return r;
}

ProjPermutation inverse(const ProjPermutation& p) {
    ProjPermutation r;
    r.n = p.n;
    r.map.resize(p.n + 1);
    for (std::uint32_t i = 0; i <= p.n; ++i) r.map[p.map[i]] = static_cast<std::uint8_t>(i);
    return r;
}

std::uint64_t apply(const ProjPermutation& perm, std::uint64_t word) {
    std::uint64_t out = 0;
    for (std::uint32_t p = 0; p <= perm.n; ++p) {
        if ((word >> perm.map[p]) & 1) out |= std::uint64_t(1) << p;
    }
    return out;
}

GroupClosure group_closure(std::uint32_t n, std::uint64_t cap) {
    auto [s, t] = generators(n);
    std::uint64_t predicted = std::uint64_t(n) * (std::uint64_t(n) * n - 1) / 2;
    if (predicted > cap) {
        fail(errc::cap_exceeded, "group_closure: predicted order " + std::to_string(predicted) +
                                     " exceeds the cap of " + std::to_string(cap));
    }
    GroupClosure g;
    g.n = n;
    std::set<std::vector<std::uint8_t>> seen;
    std::deque<ProjPermutation> queue;
    ProjPermutation id = identity_permutation(n);
    seen.insert(id.map);
    queue.push_back(id);
    g.elements.push_back(id);
    while (!queue.empty()) {
        ProjPermutation cur = std::move(queue.front());
        queue.pop_front();
        for (const ProjPermutation* gen : {&s, &t}) {
            ProjPermutation next = compose(cur, *gen);
            if (seen.insert(next.map).second) {
                if (seen.size() > cap) fail(errc::cap_exceeded, "group_closure: cap exceeded during closure");
                g.elements.push_back(next);
                queue.push_back(next);
            }
        }
    }
    g.order = seen.size();
    return g;
}

bool is_invariant(const LinearCode& code, std::uint32_t n) {
    if (code.length != n + 1) fail(errc::invalid_argument, "is_invariant: code length must be n + 1");
    auto [s, t] = generators(n);
    for (std::uint64_t b : code.basis) {
        if (!code.contains(apply(s, b)) || !code.contains(apply(t, b))) return false;
    }
    return true;
}

namespace {

// Incremental RREF basis over packed words; insert() keeps canonical form.
struct Rref {
    std::vector<std::uint64_t> rows; // sorted by pivot (lowest set bit)

    std::uint64_t reduce(std::uint64_t w) const {
        for (std::uint64_t b : rows) {
            if ((w >> std::countr_zero(b)) & 1) w ^= b;
        }
        return w;
    }

    // Returns true if w was linearly independent (and got inserted).
    bool insert(std::uint64_t w) {
        w = reduce(w);
        if (!w) return false;
        for (std::uint64_t& b : rows) {
            if ((b >> std::countr_zero(w)) & 1) b ^= w;
        }
        rows.insert(std::upper_bound(rows.begin(), rows.end(), w,
                                     [](std::uint64_t a, std::uint64_t b) {
                                         return std::countr_zero(a) < std::countr_zero(b);
                                     }),
                    w);
        return true;
    }
};

} // namespace

LinearCode spin(std::uint32_t n, std::uint64_t seed) {
    auto [s, t] = generators(n);
    std::uint64_t mask = (std::uint64_t(1) << (n + 1)) - 1;
    Rref basis;
    std::deque<std::uint64_t> queue{seed & mask};
    while (!queue.empty()) {
        std::uint64_t v = basis.reduce(queue.front());
        queue.pop_front();
        if (!v) continue;
        basis.insert(v);
        queue.push_back(apply(s, v));
        queue.push_back(apply(t, v));
    }
    return LinearCode{n + 1, basis.rows};
}

std::vector<LinearCode> all_invariant_subspaces(std::uint32_t n, std::uint32_t max_spin_n) {
    if (!is_prime(n) || n < 3) fail(errc::invalid_argument, "all_invariant_subspaces: n must be an odd prime");
    if (n > max_spin_n) {
        fail(errc::cap_exceeded, "all_invariant_subspaces: n = " + std::to_string(n) +
                                     " exceeds the exhaustive-spin cap of " + std::to_string(max_spin_n));
    }
    std::set<std::vector<std::uint64_t>> lattice;
    std::uint64_t total = std::uint64_t(1) << (n + 1);
    for (std::uint64_t seed = 0; seed < total; ++seed) {
        lattice.insert(spin(n, seed).basis);
    }
    // Close under pairwise sums; invariant subspaces need not be cyclic, but
    // every one is a sum of spins of its members.
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<std::uint64_t>> items(lattice.begin(), lattice.end());
        for (std::size_t i = 0; i < items.size(); ++i) {
            for (std::size_t j = i + 1; j < items.size(); ++j) {
                std::vector<std::uint64_t> rows = items[i];
                rows.insert(rows.end(), items[j].begin(), items[j].end());
                LinearCode sum = LinearCode::from_rows(n + 1, std::move(rows));
                if (lattice.insert(sum.basis).second) grew = true;
            }
        }
    }
    std::vector<LinearCode> out;
    out.reserve(lattice.size());
    for (const auto& rows : lattice) out.push_back(LinearCode{n + 1, rows});
    std::sort(out.begin(), out.end(), [](const LinearCode& a, const LinearCode& b) {
        if (a.dimension() != b.dimension()) return a.dimension() < b.dimension();
        return a.basis < b.basis;
    });
    return out;
}

namespace {

std::string label_for(std::uint64_t defining_mask, std::uint32_t n, const ResidueSplit& split) {
    std::uint64_t all = (std::uint64_t(1) << n) - 1;
    if (defining_mask == all) return "ZERO";
    if (defining_mask == (all & ~std::uint64_t(1))) return "REPETITION";
    if (defining_mask == 0) return "EVEN_WEIGHT_EXT";
    if (defining_mask == split.residue_mask) return "QR_Q";
    if (defining_mask == split.nonresidue_mask) return "QR_N";
    return "OTHER";
}

} // namespace

std::vector<ClassifyEntry> classify_extended_cyclic(const FieldContext& ctx, const CosetTable& cosets,
                                                    const ResidueSplit& split, std::uint32_t max_cosets) {
    std::uint32_t c = static_cast<std::uint32_t>(cosets.cosets.size());
    if (c > max_cosets) {
        fail(errc::cap_exceeded, "classify_extended_cyclic: " + std::to_string(c) +
                                     " cosets exceed the enumeration cap of " + std::to_string(max_cosets));
    }
    std::vector<std::uint64_t> coset_masks(c, 0);
    for (std::uint32_t i = 0; i < c; ++i) {
        for (std::uint32_t r : cosets.cosets[i]) coset_masks[i] |= std::uint64_t(1) << r;
    }
    std::vector<ClassifyEntry> out;
    out.reserve(std::size_t(1) << c);
    for (std::uint64_t pick = 0; pick < (std::uint64_t(1) << c); ++pick) {
        std::uint64_t mask = 0;
        for (std::uint32_t i = 0; i < c; ++i) {
            if ((pick >> i) & 1) mask |= coset_masks[i];
        }
        CyclicCode code = cyclic_from_defining_set(ctx, cosets, mask);
        ClassifyEntry e;
        e.defining_set = code.defining_set;
        e.dimension = code.dimension;
        e.invariant = is_invariant(extend(code), ctx.n());
        e.label = label_for(mask, ctx.n(), split);
        out.push_back(std::move(e));
    }
    return out;
}

ExtendedCyclicCheck as_extended_cyclic(const LinearCode& code, const FieldContext& ctx,
                                       const CosetTable& cosets) {
    const std::uint32_t n = ctx.n();
    if (code.length != n + 1) fail(errc::invalid_argument, "as_extended_cyclic: code length must be n + 1");
    ExtendedCyclicCheck res;
    if (code.dimension() == 0) {
        res.is_extended_cyclic = true;
        for (std::uint32_t r = 0; r < n; ++r) res.defining_set.push_back(r);
        return res;
    }
    LinearCode punctured = puncture(code, n);
    if (punctured.dimension() != code.dimension()) return res;
    for (std::uint64_t b : punctured.basis) {
        if (!punctured.contains(cyclic_shift(b, n))) return res;
    }
    // Generator polynomial = gcd of the basis polynomials (the basis spans g
    // over GF(2), so the gcd of the cofactors is 1).
    BinaryPolynomial g = BinaryPolynomial::zero();
    for (std::uint64_t b : punctured.basis) g = BinaryPolynomial::gcd(g, BinaryPolynomial::from_bits(b));
    if (!g.divides(BinaryPolynomial::x_n_minus_1(n))) return res;
    std::uint64_t mask = 0;
    for (std::uint32_t i = 0; i < cosets.cosets.size(); ++i) {
        if (minimal_polynomial(cosets, ctx, cosets.leaders[i]).divides(g)) {
            for (std::uint32_t r : cosets.cosets[i]) mask |= std::uint64_t(1) << r;
        }
    }
    CyclicCode rebuilt = cyclic_from_defining_set(ctx, cosets, mask);
    if (rebuilt.g != g) return res;
    if (extend(rebuilt) != code) return res;
    res.is_extended_cyclic = true;
    res.defining_set = rebuilt.defining_set;
    return res;
}

} // namespace psl2codes
