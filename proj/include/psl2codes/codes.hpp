#ifndef PSL2CODES_CODES_HPP
#define PSL2CODES_CODES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "psl2codes/cyclotomic.hpp"
#include "psl2codes/gf2m.hpp"

namespace psl2codes {

// Binary linear code of length <= 62, codewords packed one per machine word
// (bit i = coordinate i). The basis is kept in canonical reduced row-echelon
// form with pivots increasing, so two codes are equal as sets iff their
// LinearCode representations compare equal.
struct LinearCode {
    std::uint32_t length = 0;
    std::vector<std::uint64_t> basis;

    static LinearCode from_rows(std::uint32_t length, std::vector<std::uint64_t> rows);
    static LinearCode zero(std::uint32_t length) { return LinearCode{length, {}}; }
    static LinearCode full(std::uint32_t length);

    std::uint32_t dimension() const { return static_cast<std::uint32_t>(basis.size()); }
    bool contains(std::uint64_t word) const;
    std::uint64_t mask() const { return length == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << length) - 1; }

    friend bool operator==(const LinearCode&, const LinearCode&) = default;
};

// Cyclic code of odd prime length n, carried by its defining set T (a union
// of 2-cyclotomic cosets) and generator polynomial g = prod M_{beta^i}.
struct CyclicCode {
    std::uint32_t n = 0;
    std::vector<std::uint32_t> defining_set; // sorted
    std::uint64_t defining_mask = 0;
    BinaryPolynomial g;
    BinaryPolynomial h; // check polynomial, g*h = x^n - 1
    std::uint32_t dimension = 0;

    LinearCode to_linear() const;
};

CyclicCode cyclic_from_defining_set(const FieldContext& ctx, const CosetTable& cosets, std::uint64_t defining_mask);
CyclicCode cyclic_from_defining_set(const FieldContext& ctx, const CosetTable& cosets,
                                    const std::vector<std::uint32_t>& defining_set);

// Odd-like quadratic residue codes (defining sets Q and N); only exists for
// n = +-1 mod 8, where 2 is a quadratic residue and Q, N are coset unions.
std::pair<CyclicCode, CyclicCode> qr_codes(const FieldContext& ctx, const CosetTable& cosets,
                                           const ResidueSplit& split);

// Parity extension: coordinate infinity lives at index n (the last position),
// with c_inf = sum of the other coordinates over GF(2).
LinearCode extend(const LinearCode& code);
LinearCode extend(const CyclicCode& code);

LinearCode puncture(const LinearCode& code, std::uint32_t pos);

LinearCode dual(const LinearCode& code);

struct WeightDistribution {
    std::vector<std::uint64_t> counts; // counts[w] = number of codewords of weight w
};

// Exact distribution by full codeword enumeration (Gray-code traversal,
// optionally partitioned across workers via PSL2CODES_THREADS).
WeightDistribution weight_distribution(const LinearCode& code, std::uint32_t max_dimension = 28);

std::uint32_t min_distance(const LinearCode& code, std::uint32_t max_dimension = 28);

struct Type2Result {
    bool extremal = false;
    std::uint32_t target_distance = 0; // 4*floor(N/24) + 4
    std::string reason;                // empty when extremal
};

// Self-dual + all weights divisible by 4 + minimum distance 4*floor(N/24)+4.
Type2Result is_type2_extremal(const LinearCode& code, std::uint32_t max_dimension = 28);

// Serialization. Basis rows as lowercase hex of ceil(length/8) bytes with
// bit i of the decoded string = coordinate i; polynomials as coefficient
// strings low-to-high.
std::string row_to_hex(std::uint64_t row, std::uint32_t length);
nlohmann::json to_json(const LinearCode& code);
nlohmann::json to_json(const CyclicCode& code, bool extended);

} // namespace psl2codes

#endif
