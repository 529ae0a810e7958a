#include "psl2codes/designs.hpp"

#include <algorithm>
#include <bit>

namespace psl2codes {

namespace {

// C(v, t), capped: returns max_subsets + 1 once the product exceeds it.
std::uint64_t binomial_capped(std::uint32_t v, std::uint32_t t, std::uint64_t cap) {
    unsigned __int128 acc = 1;
    for (std::uint32_t i = 0; i < t; ++i) {
        acc = acc * (v - i) / (i + 1);
        if (acc > cap) return cap + 1;
    }
    return static_cast<std::uint64_t>(acc);
}

std::uint64_t binomial(std::uint32_t v, std::uint32_t t) {
    unsigned __int128 acc = 1;
    for (std::uint32_t i = 0; i < t; ++i) acc = acc * (v - i) / (i + 1);
    return static_cast<std::uint64_t>(acc);
}

// Next t-subset mask in colex-free lexicographic order (Gosper's hack).
std::uint64_t next_subset(std::uint64_t x) {
    std::uint64_t c = x & (~x + 1);
    std::uint64_t r = x + c;
    return (((r ^ x) >> 2) / c) | r;
}

} // namespace

BlockDesign blocks_of_weight(const LinearCode& code, std::uint32_t k, std::uint32_t max_dimension) {
    if (code.dimension() > max_dimension) {
        fail(errc::cap_exceeded, "blocks_of_weight: dimension exceeds the enumeration cap");
    }
    BlockDesign d;
    d.v = code.length;
    d.k = k;
    if (k == 0) return d; // the zero word's support is not a k-set for k >= 1
    std::uint64_t total = std::uint64_t(1) << code.dimension();
    std::uint64_t word = 0;
    if (std::popcount(word) == static_cast<int>(k)) d.blocks.push_back(word);
    for (std::uint64_t i = 1; i < total; ++i) {
        word ^= code.basis[static_cast<std::size_t>(std::countr_zero(i))];
        if (std::popcount(word) == static_cast<int>(k)) d.blocks.push_back(word);
    }
    std::sort(d.blocks.begin(), d.blocks.end());
    d.blocks.erase(std::unique(d.blocks.begin(), d.blocks.end()), d.blocks.end());
    return d;
}

DesignCheck verify_design(const BlockDesign& design, std::uint32_t t, std::uint64_t max_subsets) {
    if (t == 0 || t > design.k || design.k > design.v) {
        fail(errc::invalid_argument, "verify_design: need 1 <= t <= k <= v");
    }
    if (binomial_capped(design.v, t, max_subsets) > max_subsets) {
        fail(errc::cap_exceeded, "verify_design: C(v, t) exceeds the subset cap");
    }
    DesignCheck res;
    std::uint64_t first_mask = (std::uint64_t(1) << t) - 1;
    std::uint64_t limit = std::uint64_t(1) << design.v;
    bool have_first = false;
    std::uint64_t first_count = 0;
    for (std::uint64_t mask = first_mask; mask < limit; mask = next_subset(mask)) {
        std::uint64_t count = 0;
        for (std::uint64_t block : design.blocks) {
            if ((block & mask) == mask) ++count;
        }
        if (!have_first) {
            have_first = true;
            first_count = count;
            res.subset_a = mask;
            res.count_a = count;
        } else if (count != first_count) {
            res.subset_b = mask;
            res.count_b = count;
            return res; // not a design; the two offending subsets are recorded
        }
    }
    res.is_design = true;
    res.lambda = first_count;
    return res;
}

std::vector<DesignRow> design_sweep(const FieldContext& ctx, const CosetTable& cosets, const ResidueSplit& split,
                                    std::uint32_t max_dimension) {
    const std::uint32_t n = ctx.n();
    auto [q_code, n_code] = qr_codes(ctx, cosets, split); // rejects n = +-3 mod 8
    (void)n_code;
    LinearCode ext = extend(q_code);
    WeightDistribution wd = weight_distribution(ext, max_dimension);
    bool three_homogeneous = (n % 4 == 3);

    std::vector<DesignRow> rows;
    for (std::uint32_t k = 1; k <= ext.length; ++k) {
        if (wd.counts[k] == 0) continue;
        DesignRow row;
        row.k = k;
        row.b = wd.counts[k];
        try {
            BlockDesign blocks = blocks_of_weight(ext, k, max_dimension);
            if (blocks.blocks.size() != wd.counts[k]) fail(errc::internal, "design_sweep: block count mismatch");
            DesignCheck two = verify_design(blocks, 2);
            if (!two.is_design) {
                row.t = 2;
                row.ok = false;
                row.note = "2-subset counts differ";
                rows.push_back(row);
                continue;
            }
            row.t = 2;
            row.lambda = two.lambda;
            row.ok = true;
            if (three_homogeneous && k >= 3) {
                DesignCheck three = verify_design(blocks, 3);
                if (!three.is_design) {
                    row.ok = false;
                    row.note = "3-subset counts differ";
                } else {
                    row.t = 3;
                    row.lambda = three.lambda;
                }
            }
            // Exact integer counting identity lambda * C(v, t) = b * C(k, t).
            if (row.ok &&
                row.lambda * binomial(ext.length, row.t) != row.b * binomial(k, row.t)) {
                row.ok = false;
                row.note = "counting identity violated";
            }
        } catch (const error& e) {
            if (e.code() != errc::cap_exceeded) throw;
            row.ok = false;
            row.note = e.what();
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace psl2codes
