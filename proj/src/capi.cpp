#include "psl2codes.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "psl2codes/common.hpp"
#include "psl2codes/pipelines.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (p) std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

int status_for(psl2codes::errc code) {
    switch (code) {
    case psl2codes::errc::invalid_argument: return PSL2CODES_USAGE_ERROR;
    case psl2codes::errc::cap_exceeded: return PSL2CODES_CAP_EXCEEDED;
    case psl2codes::errc::falsification:
    case psl2codes::errc::internal: return PSL2CODES_INCONSISTENT;
    }
    return PSL2CODES_INCONSISTENT;
}

} // namespace

struct psl2codes_config {
    psl2codes::RunConfig cfg;
};

extern "C" {

psl2codes_config* psl2codes_config_new(void) { return new (std::nothrow) psl2codes_config(); }

void psl2codes_config_free(psl2codes_config* cfg) { delete cfg; }

int psl2codes_config_set(psl2codes_config* cfg, const char* key, long long value) {
    if (!cfg || !key) {
        g_last_error = "null config or key";
        return PSL2CODES_USAGE_ERROR;
    }
    std::string k(key);
    if (value < 0) {
        g_last_error = "settings must be non-negative";
        return PSL2CODES_USAGE_ERROR;
    }
    if (k == "n") {
        cfg->cfg.n = static_cast<std::uint32_t>(value);
    } else if (k == "seed") {
        cfg->cfg.seed = static_cast<std::uint64_t>(value);
    } else if (k == "trials") {
        cfg->cfg.trials = static_cast<std::uint64_t>(value);
    } else if (k == "extremal") {
        cfg->cfg.extremal = (value != 0);
    } else if (k == "max_dimension") {
        cfg->cfg.caps.max_dimension = static_cast<std::uint32_t>(value);
    } else if (k == "max_group_order") {
        cfg->cfg.caps.max_group_order = static_cast<std::uint64_t>(value);
    } else if (k == "max_spin_n") {
        cfg->cfg.caps.max_spin_n = static_cast<std::uint32_t>(value);
    } else {
        g_last_error = "unknown setting: " + k;
        return PSL2CODES_USAGE_ERROR;
    }
    return PSL2CODES_OK;
}

int psl2codes_run(const psl2codes_config* cfg, const char* command, char** json_out) {
    if (!cfg || !command || !json_out) {
        g_last_error = "null argument";
        return PSL2CODES_USAGE_ERROR;
    }
    try {
        nlohmann::json result = psl2codes::run_command(command, cfg->cfg);
        *json_out = dup_string(result.dump());
        if (!*json_out) {
            g_last_error = "out of memory";
            return PSL2CODES_INCONSISTENT;
        }
        return psl2codes::verdict_exit_code(result);
    } catch (const psl2codes::error& e) {
        g_last_error = e.what();
        return status_for(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return PSL2CODES_INCONSISTENT;
    }
}

int psl2codes_render_text(const char* json, char** text_out) {
    if (!json || !text_out) {
        g_last_error = "null argument";
        return PSL2CODES_USAGE_ERROR;
    }
    try {
        nlohmann::json j = nlohmann::json::parse(json);
        *text_out = dup_string(psl2codes::render_text(j));
        if (!*text_out) {
            g_last_error = "out of memory";
            return PSL2CODES_INCONSISTENT;
        }
        return PSL2CODES_OK;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return PSL2CODES_USAGE_ERROR;
    }
}

void psl2codes_string_free(char* s) { std::free(s); }

const char* psl2codes_last_error(void) { return g_last_error.c_str(); }

const char* psl2codes_version(void) { return "1.0.0"; }

} // extern "C"
