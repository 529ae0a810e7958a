// Command-line frontend: batch subcommands over the C API, JSON (default)
// or text output on stdout.

#include <cstdio>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "psl2codes.h"

namespace {

struct Options {
    long long n = 0;
    long long seed = 0;
    long long trials = 1000;
    long long max_dim = 28;
    bool extremal = false;
    std::string output = "json";
};

void add_common_flags(CLI::App* sub, Options& opt, bool with_trials, bool with_extremal) {
    sub->add_option("--n", opt.n, "odd prime length")->required();
    sub->add_option("--output", opt.output, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--seed", opt.seed, "seed for randomized checks (default 0)");
    sub->add_option("--max-dim", opt.max_dim, "codeword-enumeration dimension cap (default 28)");
    if (with_trials) sub->add_option("--trials", opt.trials, "number of randomized trials (default 1000)");
    if (with_extremal) sub->add_flag("--extremal", opt.extremal, "also run the Type II extremality test");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"binary cyclic / quadratic-residue codes, PSL2(n) invariance, spectra and designs"};
    app.require_subcommand(1);

    Options opt;
    struct SubSpec {
        const char* name;
        const char* desc;
        bool trials;
        bool extremal;
    };
    const SubSpec specs[] = {
        {"field", "construct GF(2^m) with the n-th root of unity beta", false, false},
        {"cosets", "2-cyclotomic cosets, residue split and the root pi with pi^h = 2", false, false},
        {"qr", "quadratic residue codes, extension parameters, optional extremality", false, true},
        {"classify", "enumerate coset-union defining sets and test PSL2(n) invariance", false, false},
        {"spin", "exhaustive invariant-subspace lattice by spinning all seeds", false, false},
        {"designs", "verify the t-designs held by the weight layers of the extended QR code", false, false},
        {"fourier-check", "randomized check of the permuted-spectrum identity for T-images", true, false},
        {"witness", "constructive nonzero-spectrum witnesses for all (l, s) pairs", false, false},
    };
    for (const SubSpec& s : specs) {
        CLI::App* sub = app.add_subcommand(s.name, s.desc);
        add_common_flags(sub, opt, s.trials, s.extremal);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : PSL2CODES_USAGE_ERROR;
    }

    std::string command = app.get_subcommands().front()->get_name();

    std::unique_ptr<psl2codes_config, decltype(&psl2codes_config_free)> cfg(psl2codes_config_new(),
                                                                            &psl2codes_config_free);
    psl2codes_config_set(cfg.get(), "n", opt.n);
    psl2codes_config_set(cfg.get(), "seed", opt.seed);
    psl2codes_config_set(cfg.get(), "trials", opt.trials);
    psl2codes_config_set(cfg.get(), "max_dimension", opt.max_dim);
    psl2codes_config_set(cfg.get(), "extremal", opt.extremal ? 1 : 0);

    char* json = nullptr;
    int rc = psl2codes_run(cfg.get(), command.c_str(), &json);
    if (rc != PSL2CODES_OK && rc != PSL2CODES_INCONSISTENT) {
        std::fprintf(stderr, "%s: %s\n", command.c_str(), psl2codes_last_error());
        return rc;
    }

    if (opt.output == "text") {
        char* text = nullptr;
        int trc = psl2codes_render_text(json, &text);
        if (trc != PSL2CODES_OK) {
            std::fprintf(stderr, "%s: %s\n", command.c_str(), psl2codes_last_error());
            psl2codes_string_free(json);
            return trc;
        }
        std::fputs(text, stdout);
        psl2codes_string_free(text);
    } else {
        std::puts(json);
    }
    psl2codes_string_free(json);
    return rc;
}
