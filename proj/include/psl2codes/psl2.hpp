#ifndef PSL2CODES_PSL2_HPP
#define PSL2CODES_PSL2_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "psl2codes/codes.hpp"

namespace psl2codes {

// Permutation of {0, ..., n-1, inf} with inf stored at index n, given by a
// fractional-linear map (a*x + c)/(b*x + d) with ad - bc = 1 and the
// conventions a/0 = inf, (inf*a + c)/(inf*b + d) = a/b.
struct ProjPermutation {
    std::uint32_t n = 0;
    std::vector<std::uint8_t> map; // size n+1
    std::optional<std::array<std::int64_t, 4>> params; // (a, b, c, d) when known

    friend bool operator==(const ProjPermutation&, const ProjPermutation&) = default;
};

ProjPermutation fractional_linear(std::uint32_t n, std::int64_t a, std::int64_t b, std::int64_t c,
                                  std::int64_t d);
ProjPermutation identity_permutation(std::uint32_t n);

// The standard generators S: y -> y+1 and T: y -> -1/y.
std::pair<ProjPermutation, ProjPermutation> generators(std::uint32_t n);

// Composition is chosen so that apply(compose(s, t), w) == apply(t, apply(s, w)):
// compose(s, t).map[p] = s.map[t.map[p]].
ProjPermutation compose(const ProjPermutation& s, const ProjPermutation& t);
ProjPermutation inverse(const ProjPermutation& p);

// Action on words: output coordinate p reads input coordinate tau(p),
// i.e. apply(tau, w)[p] = w[tau(p)].
std::uint64_t apply(const ProjPermutation& perm, std::uint64_t word);

struct GroupClosure {
    std::uint32_t n = 0;
    std::uint64_t order = 0;
    std::vector<ProjPermutation> elements;
};

// Breadth-first closure of {S, T} under composition. The textbook order
// n(n^2-1)/2 is used only as an upfront cap estimate; the BFS itself is the
// ground truth for the group order.
GroupClosure group_closure(std::uint32_t n, std::uint64_t cap = 10'000'000);

// Invariance under the whole group, tested via the generators only: S and T
// generate PSL2(n) and the action is linear, so stability of the basis under
// S and T suffices. Code length must be n+1.
bool is_invariant(const LinearCode& code, std::uint32_t n);

// Smallest PSL2(n)-invariant subspace containing the seed word (length n+1).
LinearCode spin(std::uint32_t n, std::uint64_t seed);

// Spins every vector of GF(2)^(n+1), dedupes, then closes the collection
// under pairwise sums: the full lattice of invariant subspaces, sorted by
// dimension (then lexicographically by basis).
std::vector<LinearCode> all_invariant_subspaces(std::uint32_t n, std::uint32_t max_spin_n = 13);

struct ClassifyEntry {
    std::vector<std::uint32_t> defining_set;
    std::uint32_t dimension = 0; // of the cyclic code = of its extension
    bool invariant = false;
    std::string label; // ZERO, REPETITION, EVEN_WEIGHT_EXT, QR_Q, QR_N, OTHER
};

// For every union T of 2-cyclotomic cosets, build the extended cyclic code
// and test invariance under PSL2(n).
std::vector<ClassifyEntry> classify_extended_cyclic(const FieldContext& ctx, const CosetTable& cosets,
                                                    const ResidueSplit& split,
                                                    std::uint32_t max_cosets = 20);

// Recognizer used to verify lattice members independently: punctures at inf,
// checks the punctured code is cyclic, recovers its defining set from the
// gcd of the basis polynomials, and re-extends.
struct ExtendedCyclicCheck {
    bool is_extended_cyclic = false;
    std::vector<std::uint32_t> defining_set; // valid when is_extended_cyclic
};

ExtendedCyclicCheck as_extended_cyclic(const LinearCode& code, const FieldContext& ctx,
                                       const CosetTable& cosets);

inline std::uint64_t cyclic_shift(std::uint64_t w, std::uint32_t n) {
    std::uint64_t mask = (n == 64) ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
    return ((w << 1) | (w >> (n - 1))) & mask;
}

} // namespace psl2codes

#endif
