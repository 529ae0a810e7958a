// Acceptance suite: runs every verification criterion end to end and prints
// one PASS/FAIL line each. Exit code = number of failed criteria.

#include <bit>
#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "psl2codes.h"
#include "psl2codes/designs.hpp"
#include "psl2codes/pipelines.hpp"
#include "psl2codes/psl2.hpp"
#include "psl2codes/spectral.hpp"

using namespace psl2codes;

namespace {

int g_failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(int index, const std::string& name, bool pass, double elapsed) {
    std::printf("[%s] criterion %d: %s (%.2fs)\n", pass ? "PASS" : "FAIL", index, name.c_str(), elapsed);
    if (!pass) ++g_failures;
}

struct Fixture {
    FieldContext ctx;
    CosetTable cosets;
    ResidueSplit split;
    explicit Fixture(std::uint32_t n) : ctx(FieldContext::build(n)), cosets(build_cosets(n)), split(residue_split(n)) {}
};

std::set<std::vector<std::uint32_t>> expected_invariant_sets(std::uint32_t n, const ResidueSplit& split,
                                                             bool with_qr) {
    std::set<std::vector<std::uint32_t>> expected;
    std::vector<std::uint32_t> all, nonzero;
    for (std::uint32_t r = 0; r < n; ++r) all.push_back(r);
    for (std::uint32_t r = 1; r < n; ++r) nonzero.push_back(r);
    expected.insert(std::vector<std::uint32_t>{});
    expected.insert(nonzero);
    expected.insert(all);
    if (with_qr) {
        expected.insert(split.residues);
        expected.insert(split.nonresidues);
    }
    return expected;
}

// Criterion 1: exact classification per residue class mod 8, < 5 s per prime.
void criterion_classification() {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    for (std::uint32_t n : {7u, 17u, 23u, 31u, 5u, 11u, 13u, 19u, 29u}) {
        auto tn = std::chrono::steady_clock::now();
        Fixture f(n);
        bool with_qr = (n % 8 == 1 || n % 8 == 7);
        std::set<std::vector<std::uint32_t>> got;
        for (const ClassifyEntry& e : classify_extended_cyclic(f.ctx, f.cosets, f.split)) {
            if (e.invariant) got.insert(e.defining_set);
        }
        if (got != expected_invariant_sets(n, f.split, with_qr)) {
            std::printf("  classification mismatch at n=%u\n", n);
            pass = false;
        }
        double dt = seconds_since(tn);
        if (dt >= 5.0) {
            std::printf("  classification at n=%u took %.2fs (budget 5s)\n", n, dt);
            pass = false;
        }
    }
    report(1, "classification of invariant defining sets for n in {5,7,11,13,17,19,23,29,31}", pass,
           seconds_since(t0));
}

// Criterion 2: lattice sizes 4, 6, 4, 4 for n = 5, 7, 11, 13; every proper
// member other than the full space is an extended cyclic code; < 60 s at 13.
void criterion_spin_lattice() {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    const std::pair<std::uint32_t, std::size_t> expected[] = {{5, 4}, {7, 6}, {11, 4}, {13, 4}};
    for (auto [n, count] : expected) {
        auto tn = std::chrono::steady_clock::now();
        Fixture f(n);
        std::vector<LinearCode> lattice = all_invariant_subspaces(n);
        if (lattice.size() != count) {
            std::printf("  lattice at n=%u has %zu members, expected %zu\n", n, lattice.size(), count);
            pass = false;
        }
        for (const LinearCode& sub : lattice) {
            if (sub.dimension() == n + 1) continue; // the full space
            ExtendedCyclicCheck chk = as_extended_cyclic(sub, f.ctx, f.cosets);
            if (!chk.is_extended_cyclic) {
                std::printf("  non-extended-cyclic proper member at n=%u (dim %u)\n", n, sub.dimension());
                pass = false;
            }
        }
        double dt = seconds_since(tn);
        if (n == 13 && dt >= 60.0) {
            std::printf("  spin at n=13 took %.2fs (budget 60s)\n", dt);
            pass = false;
        }
    }
    report(2, "invariant-subspace lattices by exhaustive spinning for n in {5,7,11,13}", pass,
           seconds_since(t0));
}

// Criterion 3: the Fourier identity on all 16 extended-QR words at n=7 and
// on 1000 seeded random parity-extended words at each n in {7, 17, 23}.
void criterion_fourier_identity() {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = true;

    Fixture f7(7);
    auto [q7, nn7] = qr_codes(f7.ctx, f7.cosets, f7.split);
    (void)nn7;
    LinearCode ext = extend(q7);
    for (std::uint64_t idx = 0; idx < 16; ++idx) {
        std::uint64_t word = 0;
        for (std::uint32_t b = 0; b < 4; ++b) {
            if ((idx >> b) & 1) word ^= ext.basis[b];
        }
        if (!check_blahut(f7.ctx, f7.split, word)) {
            std::printf("  identity failed on extended QR codeword %llu\n", static_cast<unsigned long long>(word));
            pass = false;
        }
    }

    for (std::uint32_t n : {7u, 17u, 23u}) {
        Fixture f(n);
        std::mt19937_64 rng(0);
        int failures = 0;
        for (int trial = 0; trial < 1000; ++trial) {
            std::uint64_t w = rng() & ((std::uint64_t(1) << n) - 1);
            std::uint64_t extw = w | (std::uint64_t(std::popcount(w) & 1) << n);
            if (!check_blahut(f.ctx, f.split, extw)) ++failures;
        }
        if (failures != 0) {
            std::printf("  %d/1000 random-word failures at n=%u\n", failures, n);
            pass = false;
        }
    }
    report(3, "Fourier identity for T-images, exhaustive at n=7 plus 3000 random parity words", pass,
           seconds_since(t0));
}

// Criterion 4: a spectral witness with independently recomputed nonzero
// value for every admissible (l, s) at n in {7, 11, 17}, T empty; covers
// both the 2-residue (7, 17) and 2-nonresidue (11) exponent lattices.
void criterion_spectral_witness() {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    for (std::uint32_t n : {7u, 11u, 17u}) {
        Fixture f(n);
        for (std::uint32_t l = 1; l < n; ++l) {
            for (std::uint32_t s = 0; s <= (n - 3) / 2; ++s) {
                try {
                    WitnessReport rep = spectral_witness(f.ctx, f.cosets, f.split, 0, l, s);
                    if (rep.d_value.is_zero()) {
                        std::printf("  zero witness value at n=%u l=%u s=%u\n", n, l, s);
                        pass = false;
                    }
                } catch (const error& e) {
                    std::printf("  witness failed at n=%u l=%u s=%u: %s\n", n, l, s, e.what());
                    pass = false;
                }
            }
        }
    }
    report(4, "spectral witnesses for every (l, s) pair at n in {7,11,17}", pass, seconds_since(t0));
}

// Criterion 5: extended QR parameters by full enumeration, self-duality,
// and Type II extremality at lengths 8 and 24.
void criterion_qr_parameters() {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    struct Expect {
        std::uint32_t n, length, dim, dist;
        bool check_extremal;
    };
    const Expect cases[] = {{7, 8, 4, 4, true}, {17, 18, 9, 6, false}, {23, 24, 12, 8, true}};
    for (const Expect& e : cases) {
        Fixture f(e.n);
        auto [q, nn] = qr_codes(f.ctx, f.cosets, f.split);
        (void)nn;
        LinearCode ext = extend(q);
        if (ext.length != e.length || ext.dimension() != e.dim) {
            std::printf("  [%u,%u] != expected [%u,%u] at n=%u\n", ext.length, ext.dimension(), e.length, e.dim, e.n);
            pass = false;
        }
        std::uint32_t d = min_distance(ext);
        if (d != e.dist) {
            std::printf("  min distance %u != %u at n=%u\n", d, e.dist, e.n);
            pass = false;
        }
        if (e.n == 7 && dual(ext) != ext) {
            std::printf("  extended QR at n=7 is not self-dual\n");
            pass = false;
        }
        if (e.check_extremal) {
            Type2Result t2 = is_type2_extremal(ext);
            if (!t2.extremal) {
                std::printf("  length-%u code not Type II extremal: %s\n", e.length, t2.reason.c_str());
                pass = false;
            }
        }
    }
    report(5, "extended QR parameters [8,4,4] / [18,9,6] / [24,12,8] with Type II extremality at 8 and 24",
           pass, seconds_since(t0));
}

// Criterion 6: the named designs with exact integer counting identities.
void criterion_designs() {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    auto binom = [](std::uint32_t n, std::uint32_t k) {
        unsigned __int128 acc = 1;
        for (std::uint32_t i = 0; i < k; ++i) acc = acc * (n - i) / (i + 1);
        return static_cast<std::uint64_t>(acc);
    };

    {
        Fixture f(7);
        auto [q, nn] = qr_codes(f.ctx, f.cosets, f.split);
        (void)nn;
        BlockDesign d = blocks_of_weight(extend(q), 4);
        DesignCheck chk = verify_design(d, 3);
        if (!(chk.is_design && chk.lambda == 1 && d.blocks.size() == 14)) {
            std::printf("  weight-4 layer at n=7 is not a 3-(8,4,1) design\n");
            pass = false;
        }
    }
    {
        Fixture f(23);
        auto [q, nn] = qr_codes(f.ctx, f.cosets, f.split);
        (void)nn;
        BlockDesign d = blocks_of_weight(extend(q), 8);
        DesignCheck chk = verify_design(d, 3); // 2024 triples against 759 blocks
        if (!(chk.is_design && chk.lambda == 21 && d.blocks.size() == 759)) {
            std::printf("  weight-8 layer at n=23 is not a 3-(24,8,21) design\n");
            pass = false;
        }
    }
    {
        Fixture f(17);
        std::vector<DesignRow> rows = design_sweep(f.ctx, f.cosets, f.split);
        for (const DesignRow& r : rows) {
            if (r.k >= 18) continue; // proper layers only
            bool identity = r.lambda * binom(18, 2) == r.b * binom(r.k, 2);
            if (!(r.ok && r.t == 2 && identity)) {
                std::printf("  layer k=%u at n=17 failed (ok=%d t=%u identity=%d)\n", r.k, r.ok, r.t, identity);
                pass = false;
            }
        }
        if (rows.empty()) pass = false;
    }
    report(6, "designs 3-(8,4,1), 3-(24,8,21), and 2-designs on every proper layer at n=17", pass,
           seconds_since(t0));
}

// Criterion 7: byte-identical JSON for identical command, flags and seed,
// through the public C API.
void criterion_reproducibility() {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    struct Cmd {
        const char* name;
        std::uint32_t n;
        long long seed, trials, extremal;
    };
    const Cmd cmds[] = {
        {"field", 7, 0, 0, 0},   {"cosets", 7, 0, 0, 0},       {"qr", 23, 0, 0, 1},
        {"classify", 7, 0, 0, 0}, {"spin", 5, 0, 0, 0},        {"designs", 7, 0, 0, 0},
        {"fourier-check", 7, 1, 1000, 0}, {"witness", 7, 0, 0, 0},
    };
    for (const Cmd& c : cmds) {
        std::string first, second;
        for (int round = 0; round < 2; ++round) {
            psl2codes_config* cfg = psl2codes_config_new();
            psl2codes_config_set(cfg, "n", c.n);
            psl2codes_config_set(cfg, "seed", c.seed);
            if (c.trials) psl2codes_config_set(cfg, "trials", c.trials);
            psl2codes_config_set(cfg, "extremal", c.extremal);
            char* out = nullptr;
            int rc = psl2codes_run(cfg, c.name, &out);
            if (rc != PSL2CODES_OK || !out) {
                std::printf("  %s --n %u returned %d\n", c.name, c.n, rc);
                pass = false;
            } else {
                (round == 0 ? first : second) = out;
            }
            psl2codes_string_free(out);
            psl2codes_config_free(cfg);
        }
        if (first != second || first.empty()) {
            std::printf("  %s --n %u not byte-identical across runs\n", c.name, c.n);
            pass = false;
        }
    }
    report(7, "byte-identical JSON across repeated runs of every command", pass, seconds_since(t0));
}

} // namespace

int main() {
    criterion_classification();
    criterion_spin_lattice();
    criterion_fourier_identity();
    criterion_spectral_witness();
    criterion_qr_parameters();
    criterion_designs();
    criterion_reproducibility();
    if (g_failures == 0) {
        std::printf("all acceptance criteria passed\n");
    } else {
        std::printf("%d acceptance criteria FAILED\n", g_failures);
    }
    return g_failures;
}
