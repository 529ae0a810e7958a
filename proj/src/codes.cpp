#include "psl2codes/codes.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <thread>

namespace psl2codes {

// ---------------------------------------------------------------------------
// LinearCode
// ---------------------------------------------------------------------------

LinearCode LinearCode::from_rows(std::uint32_t length, std::vector<std::uint64_t> rows) {
    if (length == 0 || length > 62) fail(errc::invalid_argument, "LinearCode: length must be in [1, 62]");
    LinearCode c;
    c.length = length;
    for (std::uint64_t w : rows) {
        w &= c.mask();
        for (std::uint64_t b : c.basis) {
            if ((w >> std::countr_zero(b)) & 1) w ^= b;
        }
        if (!w) continue;
        // Clear the new pivot from existing rows, keep rows sorted by pivot.
        for (std::uint64_t& b : c.basis) {
            if ((b >> std::countr_zero(w)) & 1) b ^= w;
        }
        c.basis.insert(std::upper_bound(c.basis.begin(), c.basis.end(), w,
                                        [](std::uint64_t a, std::uint64_t b) {
                                            return std::countr_zero(a) < std::countr_zero(b);
                                        }),
                       w);
    }
    return c;
}

LinearCode LinearCode::full(std::uint32_t length) {
    std::vector<std::uint64_t> rows;
    for (std::uint32_t i = 0; i < length; ++i) rows.push_back(std::uint64_t(1) << i);
    return from_rows(length, std::move(rows));
}

bool LinearCode::contains(std::uint64_t word) const {
    word &= mask();
    for (std::uint64_t b : basis) {
        if ((word >> std::countr_zero(b)) & 1) word ^= b;
    }
    return word == 0;
}

// ---------------------------------------------------------------------------
// Cyclic codes
// ---------------------------------------------------------------------------

CyclicCode cyclic_from_defining_set(const FieldContext& ctx, const CosetTable& cosets,
                                    std::uint64_t defining_mask) {
    const std::uint32_t n = ctx.n();
    if (cosets.n != n) fail(errc::invalid_argument, "cyclic_from_defining_set: mismatched n");
    defining_mask &= (n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1);
    // T must be closed under doubling mod n.
    for (std::uint32_t r = 0; r < n; ++r) {
        if (!((defining_mask >> r) & 1)) continue;
        std::uint32_t rr = (2 * r) % n;
        if (!((defining_mask >> rr) & 1)) {
            fail(errc::invalid_argument,
                 "defining set is not a union of 2-cyclotomic cosets: contains " + std::to_string(r) +
                     " but not " + std::to_string(rr));
        }
    }

    CyclicCode c;
    c.n = n;
    c.defining_mask = defining_mask;
    for (std::uint32_t r = 0; r < n; ++r) {
        if ((defining_mask >> r) & 1) c.defining_set.push_back(r);
    }
    c.g = BinaryPolynomial::one();
    for (std::uint32_t leader : cosets.leaders) {
        if ((defining_mask >> leader) & 1) c.g = c.g * minimal_polynomial(cosets, ctx, leader);
    }
    auto [h, rem] = BinaryPolynomial::x_n_minus_1(n).divmod(c.g);
    if (!rem.is_zero()) fail(errc::internal, "generator polynomial does not divide x^n - 1");
    c.h = h;
    c.dimension = n - static_cast<std::uint32_t>(c.defining_set.size());
    if (static_cast<int>(n) - c.g.degree() != static_cast<int>(c.dimension)) {
        fail(errc::internal, "cyclic code dimension mismatch");
    }
    return c;
}

CyclicCode cyclic_from_defining_set(const FieldContext& ctx, const CosetTable& cosets,
                                    const std::vector<std::uint32_t>& defining_set) {
    std::uint64_t mask = 0;
    for (std::uint32_t r : defining_set) {
        if (r >= ctx.n()) fail(errc::invalid_argument, "defining set residue out of range");
        mask |= std::uint64_t(1) << r;
    }
    return cyclic_from_defining_set(ctx, cosets, mask);
}

LinearCode CyclicCode::to_linear() const {
    std::vector<std::uint64_t> rows;
    std::uint64_t gbits = g.low_bits();
    for (std::uint32_t i = 0; i < dimension; ++i) rows.push_back(gbits << i);
    return LinearCode::from_rows(n, std::move(rows));
}

std::pair<CyclicCode, CyclicCode> qr_codes(const FieldContext& ctx, const CosetTable& cosets,
                                           const ResidueSplit& split) {
    if (!split.two_is_residue) {
        fail(errc::invalid_argument,
             "qr_codes: no binary quadratic residue codes for n = " + std::to_string(split.n) +
                 " (2 is a nonresidue; n must be +-1 mod 8)");
    }
    CyclicCode q = cyclic_from_defining_set(ctx, cosets, split.residue_mask);
    CyclicCode nn = cyclic_from_defining_set(ctx, cosets, split.nonresidue_mask);
    if (q.dimension != (ctx.n() + 1) / 2 || nn.dimension != (ctx.n() + 1) / 2) {
        fail(errc::internal, "qr_codes: dimension is not (n+1)/2");
    }
    return {q, nn};
}

// ---------------------------------------------------------------------------
// Extension, puncturing, duality
// ---------------------------------------------------------------------------

LinearCode extend(const LinearCode& code) {
    if (code.length > 61) fail(errc::invalid_argument, "extend: resulting length would exceed 62");
    std::vector<std::uint64_t> rows;
    rows.reserve(code.basis.size());
    for (std::uint64_t b : code.basis) {
        rows.push_back(b | (std::uint64_t(std::popcount(b) & 1) << code.length));
    }
    return LinearCode::from_rows(code.length + 1, std::move(rows));
}

LinearCode extend(const CyclicCode& code) { return extend(code.to_linear()); }

LinearCode puncture(const LinearCode& code, std::uint32_t pos) {
    if (pos >= code.length) fail(errc::invalid_argument, "puncture: position out of range");
    if (code.length == 1) fail(errc::invalid_argument, "puncture: cannot puncture length-1 code");
    std::uint64_t low = (std::uint64_t(1) << pos) - 1;
    std::vector<std::uint64_t> rows;
    rows.reserve(code.basis.size());
    for (std::uint64_t b : code.basis) {
        rows.push_back((b & low) | ((b >> (pos + 1)) << pos));
    }
    return LinearCode::from_rows(code.length - 1, std::move(rows));
}

LinearCode dual(const LinearCode& code) {
    // Null space of the RREF basis: one generator per free coordinate.
    std::uint64_t pivot_mask = 0;
    for (std::uint64_t b : code.basis) pivot_mask |= b & (~b + 1);
    std::vector<std::uint64_t> rows;
    for (std::uint32_t f = 0; f < code.length; ++f) {
        if ((pivot_mask >> f) & 1) continue;
        std::uint64_t v = std::uint64_t(1) << f;
        for (std::uint64_t b : code.basis) {
            if ((b >> f) & 1) v |= b & (~b + 1); // set the row's pivot coordinate
        }
        rows.push_back(v);
    }
    return LinearCode::from_rows(code.length, std::move(rows));
}

// ---------------------------------------------------------------------------
// Weight enumeration
// ---------------------------------------------------------------------------

namespace {

unsigned worker_count() {
    if (const char* env = std::getenv("PSL2CODES_THREADS")) {
        long v = std::atol(env);
        if (v >= 1) return static_cast<unsigned>(std::min<long>(v, 64));
    }
    return 1;
}

// Accumulate weights of codewords with Gray index in [first, last) into counts.
void enumerate_range(const std::vector<std::uint64_t>& basis, std::uint64_t first, std::uint64_t last,
                     std::vector<std::uint64_t>& counts) {
    std::uint64_t word = 0;
    std::uint64_t gray = first ^ (first >> 1);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if ((gray >> i) & 1) word ^= basis[i];
    }
    counts[static_cast<std::size_t>(std::popcount(word))]++;
    for (std::uint64_t i = first + 1; i < last; ++i) {
        word ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
        counts[static_cast<std::size_t>(std::popcount(word))]++;
    }
}

} // namespace

WeightDistribution weight_distribution(const LinearCode& code, std::uint32_t max_dimension) {
    if (code.dimension() > max_dimension) {
        fail(errc::cap_exceeded, "weight_distribution: dimension " + std::to_string(code.dimension()) +
                                     " exceeds the enumeration cap of " + std::to_string(max_dimension));
    }
    WeightDistribution wd;
    wd.counts.assign(code.length + 1, 0);
    std::uint64_t total = std::uint64_t(1) << code.dimension();
    unsigned workers = worker_count();
    if (workers <= 1 || total < (std::uint64_t(1) << 16)) {
        enumerate_range(code.basis, 0, total, wd.counts);
        return wd;
    }
    std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(code.length + 1, 0));
    std::vector<std::thread> pool;
    std::uint64_t chunk = total / workers;
    for (unsigned t = 0; t < workers; ++t) {
        std::uint64_t first = t * chunk;
        std::uint64_t last = (t + 1 == workers) ? total : first + chunk;
        pool.emplace_back(enumerate_range, std::cref(code.basis), first, last, std::ref(partial[t]));
    }
    for (auto& th : pool) th.join();
    for (const auto& p : partial) {
        for (std::size_t w = 0; w <= code.length; ++w) wd.counts[w] += p[w];
    }
    return wd;
}

std::uint32_t min_distance(const LinearCode& code, std::uint32_t max_dimension) {
    if (code.dimension() == 0) fail(errc::invalid_argument, "min_distance: undefined for the zero code");
    WeightDistribution wd = weight_distribution(code, max_dimension);
    for (std::uint32_t w = 1; w <= code.length; ++w) {
        if (wd.counts[w]) return w;
    }
    fail(errc::internal, "min_distance: no nonzero weight found");
}

Type2Result is_type2_extremal(const LinearCode& code, std::uint32_t max_dimension) {
    Type2Result r;
    r.target_distance = 4 * (code.length / 24) + 4;
    if (dual(code) != code) {
        r.reason = "not self-dual";
        return r;
    }
    WeightDistribution wd = weight_distribution(code, max_dimension);
    for (std::uint32_t w = 1; w <= code.length; ++w) {
        if (wd.counts[w] && w % 4 != 0) {
            r.reason = "weight " + std::to_string(w) + " not divisible by 4";
            return r;
        }
    }
    std::uint32_t d = 0;
    for (std::uint32_t w = 1; w <= code.length; ++w) {
        if (wd.counts[w]) { d = w; break; }
    }
    if (d != r.target_distance) {
        r.reason = "minimum distance " + std::to_string(d) + " != " + std::to_string(r.target_distance);
        return r;
    }
    r.extremal = true;
    return r;
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

std::string row_to_hex(std::uint64_t row, std::uint32_t length) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    std::uint32_t bytes = (length + 7) / 8;
    for (std::uint32_t j = 0; j < bytes; ++j) {
        unsigned byte = static_cast<unsigned>((row >> (8 * j)) & 0xff);
        out.push_back(digits[byte >> 4]);
        out.push_back(digits[byte & 0xf]);
    }
    return out;
}

nlohmann::json to_json(const LinearCode& code) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::uint64_t b : code.basis) rows.push_back(row_to_hex(b, code.length));
    return {{"length", code.length}, {"dimension", code.dimension()}, {"basis", rows}};
}

nlohmann::json to_json(const CyclicCode& code, bool extended) {
    return {{"n", code.n},
            {"defining_set", code.defining_set},
            {"g", code.g.to_bitstring()},
            {"extended", extended}};
}

} // namespace psl2codes
