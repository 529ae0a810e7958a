#ifndef PSL2CODES_DESIGNS_HPP
#define PSL2CODES_DESIGNS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "psl2codes/codes.hpp"

namespace psl2codes {

// Supports of the weight-k codewords of a code, as packed point masks over
// {0, ..., v-1}. Simple by construction: distinct binary codewords have
// distinct supports, and the list is deduplicated anyway.
struct BlockDesign {
    std::uint32_t v = 0;
    std::uint32_t k = 0;
    std::vector<std::uint64_t> blocks; // sorted, unique
};

BlockDesign blocks_of_weight(const LinearCode& code, std::uint32_t k, std::uint32_t max_dimension = 28);

struct DesignCheck {
    bool is_design = false;
    std::uint64_t lambda = 0;
    // First two t-subsets with differing containment counts, when not a design.
    std::uint64_t subset_a = 0, subset_b = 0;
    std::uint64_t count_a = 0, count_b = 0;
};

// Counts, for every t-subset of points, the blocks containing it (mask AND
// block == mask); a t-design iff the count is constant. Exact integers.
DesignCheck verify_design(const BlockDesign& design, std::uint32_t t, std::uint64_t max_subsets = 1'000'000);

struct DesignRow {
    std::uint32_t k = 0;
    std::uint64_t b = 0;
    std::uint32_t t = 0;
    std::uint64_t lambda = 0;
    bool ok = false;
    std::string note; // set when a cap was hit or a verification failed
};

// For the extended quadratic residue code of length n+1: verify a 2-design
// on every nonempty weight layer, and a 3-design additionally when
// n = 3 mod 4 (the group is 3-homogeneous there). Rows report the largest
// t verified.
std::vector<DesignRow> design_sweep(const FieldContext& ctx, const CosetTable& cosets, const ResidueSplit& split,
                                    std::uint32_t max_dimension = 28);

} // namespace psl2codes

#endif
