#ifndef PSL2CODES_PIPELINES_HPP
#define PSL2CODES_PIPELINES_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "psl2codes/common.hpp"

namespace psl2codes {

inline constexpr std::string_view kSchema = "psl2codes/1";

struct Caps {
    std::uint32_t max_dimension = 28;
    std::uint64_t max_group_order = 10'000'000;
    std::uint32_t max_spin_n = 13;
};

struct RunConfig {
    std::uint32_t n = 0;
    std::uint64_t seed = 0;
    std::uint64_t trials = 1000;
    bool extremal = false;
    Caps caps;
};

// Dispatch on one of: field, cosets, qr, classify, spin, designs,
// fourier-check, witness. Deterministic under a fixed config: identical
// flags and seed produce byte-identical JSON.
nlohmann::json run_command(std::string_view command, const RunConfig& cfg);

// 0 when the result is consistent with the classification/verification it
// encodes, 1 when the run completed but found a theorem-inconsistent result.
int verdict_exit_code(const nlohmann::json& result);

// Human-readable rendering of a command result (the --output text path).
std::string render_text(const nlohmann::json& result);

} // namespace psl2codes

#endif
