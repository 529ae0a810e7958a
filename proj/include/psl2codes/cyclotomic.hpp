#ifndef PSL2CODES_CYCLOTOMIC_HPP
#define PSL2CODES_CYCLOTOMIC_HPP

#include <cstdint>
#include <vector>

#include "psl2codes/gf2m.hpp"

namespace psl2codes {

// 2-cyclotomic cosets mod an odd prime n. Cosets are listed in increasing
// leader order and each coset is sorted; the leader is the smallest member.
struct CosetTable {
    std::uint32_t n = 0;
    std::vector<std::vector<std::uint32_t>> cosets;
    std::vector<std::uint32_t> leaders;
    std::vector<std::uint32_t> coset_index; // residue -> index into cosets

    const std::vector<std::uint32_t>& coset_of(std::uint32_t residue) const {
        return cosets[coset_index[residue]];
    }
};

CosetTable build_cosets(std::uint32_t n);

// Minimal polynomial of beta^i over GF(2): the product over the coset of i
// of (x - beta^j), expanded over GF(2^m) and checked to land in GF(2)[x].
BinaryPolynomial minimal_polynomial(const CosetTable& table, const FieldContext& ctx, std::uint32_t i);

// Quadratic residues/nonresidues mod n together with the distinguished
// primitive root pi satisfying pi^h = 2 (h = (n-1)/ord_n(2)). pi is the
// smallest such primitive root, for reproducible permuted spectra.
struct ResidueSplit {
    std::uint32_t n = 0;
    std::uint32_t pi = 0;
    std::uint32_t h = 0;
    std::uint32_t m = 0; // ord_n(2)
    bool two_is_residue = false;
    std::vector<std::uint32_t> residues;    // Q, sorted
    std::vector<std::uint32_t> nonresidues; // N, sorted
    std::uint64_t residue_mask = 0;
    std::uint64_t nonresidue_mask = 0;
    std::vector<std::uint32_t> pi_pow;     // pi^r mod n, r in [0, n-1)
    std::vector<std::uint32_t> pi_inv_pow; // pi^-r mod n, r in [0, n-1)
    std::vector<std::uint32_t> dlog;       // dlog[x] = r with pi^r = x; dlog[0] unused

    bool is_residue(std::uint32_t x) const { return (residue_mask >> x) & 1; }
};

ResidueSplit residue_split(std::uint32_t n);

} // namespace psl2codes

#endif
