#include "psl2codes/pipelines.hpp"

#include <bit>
#include <random>
#include <set>
#include <sstream>

#include "psl2codes/designs.hpp"
#include "psl2codes/numtheory.hpp"
#include "psl2codes/psl2.hpp"
#include "psl2codes/spectral.hpp"

namespace psl2codes {

namespace {

using nlohmann::json;

struct PrimeData {
    FieldContext ctx;
    CosetTable cosets;
    ResidueSplit split;
};

PrimeData prime_data(std::uint32_t n) {
    return {FieldContext::build(n), build_cosets(n), residue_split(n)};
}

std::string hex_elem(FieldElement e) {
    std::ostringstream os;
    os << std::hex << e.bits;
    return os.str();
}

std::string word_bits(std::uint64_t w, std::uint32_t len) {
    std::string s(len, '0');
    for (std::uint32_t i = 0; i < len; ++i) {
        if ((w >> i) & 1) s[i] = '1';
    }
    return s;
}

json base_result(std::string_view command, std::uint32_t n) {
    return {{"schema", std::string(kSchema)}, {"command", std::string(command)}, {"n", n}};
}

json cmd_field(const RunConfig& cfg) {
    FieldContext ctx = FieldContext::build(cfg.n);
    json j = base_result("field", cfg.n);
    j["m"] = ctx.m();
    j["order"] = ctx.order();
    j["modulus"] = ctx.modulus().to_bitstring();
    j["alpha"] = hex_elem(ctx.alpha());
    j["beta"] = hex_elem(ctx.beta());
    j["log_tables"] = ctx.uses_tables();
    return j;
}

json cmd_cosets(const RunConfig& cfg) {
    CosetTable cosets = build_cosets(cfg.n);
    ResidueSplit split = residue_split(cfg.n);
    json j = base_result("cosets", cfg.n);
    j["m"] = split.m;
    j["cosets"] = cosets.cosets;
    j["leaders"] = cosets.leaders;
    j["pi"] = split.pi;
    j["h"] = split.h;
    j["two_is_residue"] = split.two_is_residue;
    j["quadratic_residues"] = split.residues;
    j["nonresidues"] = split.nonresidues;
    return j;
}

json cmd_qr(const RunConfig& cfg) {
    PrimeData pd = prime_data(cfg.n);
    auto [q_code, n_code] = qr_codes(pd.ctx, pd.cosets, pd.split);
    LinearCode ext = extend(q_code);
    json j = base_result("qr", cfg.n);
    j["length"] = ext.length;
    j["dimension"] = ext.dimension();
    j["defining_set_q"] = q_code.defining_set;
    j["defining_set_n"] = n_code.defining_set;
    j["g_q"] = q_code.g.to_bitstring();
    j["g_n"] = n_code.g.to_bitstring();
    j["code_q"] = to_json(q_code, false);
    j["code_n"] = to_json(n_code, false);
    j["extended_code"] = to_json(ext);
    j["min_distance"] = min_distance(ext, cfg.caps.max_dimension);
    j["self_dual"] = (dual(ext) == ext);
    if (cfg.extremal) {
        Type2Result t2 = is_type2_extremal(ext, cfg.caps.max_dimension);
        j["type2_extremal"] = t2.extremal;
        j["target_distance"] = t2.target_distance;
        if (!t2.extremal) j["extremal_failure"] = t2.reason;
    }
    return j;
}

json classify_result(const PrimeData& pd, std::uint32_t n) {
    std::vector<ClassifyEntry> entries = classify_extended_cyclic(pd.ctx, pd.cosets, pd.split);
    json results = json::array();
    json invariant_sets = json::array();
    for (const ClassifyEntry& e : entries) {
        results.push_back({{"defining_set", e.defining_set},
                           {"dimension", e.dimension},
                           {"invariant", e.invariant},
                           {"label", e.label}});
        if (e.invariant) invariant_sets.push_back(e.defining_set);
    }
    // The classification predicts exactly {Z_n, Z_n \ {0}, empty} and, when
    // 2 is a quadratic residue, additionally {Q, N}.
    std::set<std::vector<std::uint32_t>> expected;
    std::vector<std::uint32_t> all, nonzero;
    for (std::uint32_t r = 0; r < n; ++r) all.push_back(r);
    for (std::uint32_t r = 1; r < n; ++r) nonzero.push_back(r);
    expected.insert(all);
    expected.insert(nonzero);
    expected.insert(std::vector<std::uint32_t>{});
    if (pd.split.two_is_residue) {
        expected.insert(pd.split.residues);
        expected.insert(pd.split.nonresidues);
    }
    std::set<std::vector<std::uint32_t>> got;
    for (const ClassifyEntry& e : entries) {
        if (e.invariant) got.insert(e.defining_set);
    }
    json expected_sets = json::array();
    for (const auto& ds : expected) expected_sets.push_back(ds);
    json j = base_result("classify", n);
    j["m"] = pd.split.m;
    j["residue_mod_8"] = n % 8;
    j["results"] = results;
    j["invariant_defining_sets"] = invariant_sets;
    j["expected_invariant_sets"] = expected_sets;
    j["invariant_count"] = got.size();
    j["expected_invariant_count"] = expected.size();
    j["consistent"] = (got == expected);
    return j;
}

json cmd_classify(const RunConfig& cfg) {
    PrimeData pd = prime_data(cfg.n);
    return classify_result(pd, cfg.n);
}

json cmd_spin(const RunConfig& cfg) {
    PrimeData pd = prime_data(cfg.n);
    std::vector<LinearCode> lattice = all_invariant_subspaces(cfg.n, cfg.caps.max_spin_n);
    json subspaces = json::array();
    bool proper_all_cyclic = true;
    std::set<std::vector<std::uint32_t>> spin_sets;
    bool full_space_seen = false;
    for (const LinearCode& sub : lattice) {
        ExtendedCyclicCheck chk = as_extended_cyclic(sub, pd.ctx, pd.cosets);
        json row = {{"dimension", sub.dimension()}, {"extended_cyclic", chk.is_extended_cyclic}};
        if (chk.is_extended_cyclic) {
            row["defining_set"] = chk.defining_set;
            spin_sets.insert(chk.defining_set);
        } else {
            row["defining_set"] = nullptr;
            if (sub.dimension() == cfg.n + 1) {
                full_space_seen = true;
            } else {
                proper_all_cyclic = false;
            }
        }
        subspaces.push_back(std::move(row));
    }
    // Cross-check against the defining-set enumeration: the lattice must be
    // exactly the invariant extended cyclic codes plus the full space.
    json classify = classify_result(pd, cfg.n);
    std::set<std::vector<std::uint32_t>> classify_sets;
    for (const json& ds : classify["invariant_defining_sets"]) {
        classify_sets.insert(ds.get<std::vector<std::uint32_t>>());
    }
    json j = base_result("spin", cfg.n);
    j["count"] = lattice.size();
    j["subspaces"] = subspaces;
    j["consistent"] = proper_all_cyclic && full_space_seen && (spin_sets == classify_sets);
    return j;
}

json cmd_designs(const RunConfig& cfg) {
    PrimeData pd = prime_data(cfg.n);
    std::vector<DesignRow> rows = design_sweep(pd.ctx, pd.cosets, pd.split, cfg.caps.max_dimension);
    json table = json::array();
    bool all_ok = true;
    for (const DesignRow& r : rows) {
        json row = {{"k", r.k}, {"b", r.b}, {"t", r.t}, {"lambda", r.lambda}, {"ok", r.ok}};
        if (!r.note.empty()) row["note"] = r.note;
        if (!r.ok) all_ok = false;
        table.push_back(std::move(row));
    }
    json j = base_result("designs", cfg.n);
    j["length"] = cfg.n + 1;
    j["dimension"] = (cfg.n + 1) / 2;
    j["table"] = table;
    j["status"] = all_ok ? "verified" : "failed";
    return j;
}

json cmd_fourier_check(const RunConfig& cfg) {
    PrimeData pd = prime_data(cfg.n);
    std::mt19937_64 rng(cfg.seed);
    json failures = json::array();
    for (std::uint64_t t = 0; t < cfg.trials; ++t) {
        std::uint64_t w = rng() & ((std::uint64_t(1) << cfg.n) - 1);
        std::uint64_t ext = w | (std::uint64_t(std::popcount(w) & 1) << cfg.n);
        if (!check_blahut(pd.ctx, pd.split, ext)) {
            failures.push_back(row_to_hex(ext, cfg.n + 1));
        }
    }
    json j = base_result("fourier-check", cfg.n);
    j["trials"] = cfg.trials;
    j["seed"] = cfg.seed;
    j["failures"] = failures;
    return j;
}

json cmd_witness(const RunConfig& cfg) {
    PrimeData pd = prime_data(cfg.n);
    json pairs = json::array();
    bool all_nonzero = true;
    for (std::uint32_t l = 1; l < cfg.n; ++l) {
        for (std::uint32_t s = 0; s <= (cfg.n - 3) / 2; ++s) {
            json row = {{"l", l}, {"s", s}};
            try {
                WitnessReport rep = spectral_witness(pd.ctx, pd.cosets, pd.split, 0, l, s);
                row["target_index"] = rep.target_index;
                row["gamma"] = hex_elem(rep.gamma);
                row["a"] = rep.a.to_bitstring();
                row["codeword"] = word_bits(rep.codeword, cfg.n);
                row["value"] = hex_elem(rep.d_value);
                row["nonzero"] = true;
            } catch (const error& e) {
                if (e.code() != errc::falsification) throw;
                row["nonzero"] = false;
                row["error"] = e.what();
                all_nonzero = false;
            }
            pairs.push_back(std::move(row));
        }
    }
    json j = base_result("witness", cfg.n);
    j["defining_set"] = json::array();
    j["pair_count"] = pairs.size();
    j["pairs"] = pairs;
    j["all_nonzero"] = all_nonzero;
    return j;
}

} // namespace

json run_command(std::string_view command, const RunConfig& cfg) {
    if (command == "field") return cmd_field(cfg);
    if (command == "cosets") return cmd_cosets(cfg);
    if (command == "qr") return cmd_qr(cfg);
    if (command == "classify") return cmd_classify(cfg);
    if (command == "spin") return cmd_spin(cfg);
    if (command == "designs") return cmd_designs(cfg);
    if (command == "fourier-check") return cmd_fourier_check(cfg);
    if (command == "witness") return cmd_witness(cfg);
    fail(errc::invalid_argument, "unknown command: " + std::string(command));
}

int verdict_exit_code(const json& result) {
    if (result.contains("consistent") && !result["consistent"].get<bool>()) return 1;
    if (result.contains("all_nonzero") && !result["all_nonzero"].get<bool>()) return 1;
    if (result.contains("failures") && !result["failures"].empty()) return 1;
    if (result.contains("status") && result["status"] != "verified") return 1;
    return 0;
}

namespace {

std::string set_to_string(const json& arr) {
    std::string s = "{";
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(arr[i].get<std::uint64_t>());
    }
    return s + "}";
}

} // namespace

std::string render_text(const json& j) {
    std::ostringstream os;
    std::string cmd = j.value("command", "");
    os << cmd << " n=" << j.value("n", 0u) << "\n";
    if (cmd == "field") {
        os << "  m = " << j["m"] << "\n";
        os << "  modulus (coefficients low-to-high) = " << j["modulus"].get<std::string>() << "\n";
        os << "  alpha = " << j["alpha"].get<std::string>() << "  beta = " << j["beta"].get<std::string>() << "\n";
        os << "  multiplicative order = " << j["order"] << ", log tables: " << (j["log_tables"].get<bool>() ? "yes" : "no") << "\n";
    } else if (cmd == "cosets") {
        os << "  m = " << j["m"] << ", pi = " << j["pi"] << ", h = " << j["h"] << "\n";
        os << "  leaders = " << set_to_string(j["leaders"]) << "\n";
        for (const json& c : j["cosets"]) os << "  coset " << set_to_string(c) << "\n";
        os << "  Q = " << set_to_string(j["quadratic_residues"]) << "\n";
        os << "  N = " << set_to_string(j["nonresidues"]) << "\n";
    } else if (cmd == "qr") {
        os << "  [" << j["length"] << "," << j["dimension"] << "," << j["min_distance"] << "] self-dual: "
           << (j["self_dual"].get<bool>() ? "yes" : "no") << "\n";
        os << "  g_Q = " << j["g_q"].get<std::string>() << "  g_N = " << j["g_n"].get<std::string>() << "\n";
        if (j.contains("type2_extremal")) {
            os << "  Type II extremal: " << (j["type2_extremal"].get<bool>() ? "yes" : "no")
               << " (target d = " << j["target_distance"] << ")\n";
            if (j.contains("extremal_failure")) os << "  failure: " << j["extremal_failure"].get<std::string>() << "\n";
        }
    } else if (cmd == "classify") {
        for (const json& r : j["results"]) {
            os << "  T=" << set_to_string(r["defining_set"]) << " dim=" << r["dimension"]
               << " invariant=" << (r["invariant"].get<bool>() ? "yes" : "no") << " label=" << r["label"].get<std::string>()
               << "\n";
        }
        os << "  invariant sets: " << j["invariant_count"] << " (expected " << j["expected_invariant_count"]
           << "), consistent: " << (j["consistent"].get<bool>() ? "yes" : "no") << "\n";
    } else if (cmd == "spin") {
        for (const json& r : j["subspaces"]) {
            os << "  dim=" << r["dimension"] << " extended_cyclic=" << (r["extended_cyclic"].get<bool>() ? "yes" : "no");
            if (!r["defining_set"].is_null()) os << " T=" << set_to_string(r["defining_set"]);
            os << "\n";
        }
        os << "  subspaces: " << j["count"] << ", consistent: " << (j["consistent"].get<bool>() ? "yes" : "no") << "\n";
    } else if (cmd == "designs") {
        for (const json& r : j["table"]) {
            os << "  k=" << r["k"] << " b=" << r["b"] << " t=" << r["t"] << " lambda=" << r["lambda"]
               << (r["ok"].get<bool>() ? "" : " FAILED") << "\n";
        }
        os << "  status: " << j["status"].get<std::string>() << "\n";
    } else if (cmd == "fourier-check") {
        os << "  trials = " << j["trials"] << ", seed = " << j["seed"] << ", failures = " << j["failures"].size() << "\n";
    } else if (cmd == "witness") {
        for (const json& r : j["pairs"]) {
            os << "  l=" << r["l"] << " s=" << r["s"];
            if (r["nonzero"].get<bool>()) {
                os << " target=" << r["target_index"] << " value=" << r["value"].get<std::string>();
            } else {
                os << " FAILED";
            }
            os << "\n";
        }
        os << "  all nonzero: " << (j["all_nonzero"].get<bool>() ? "yes" : "no") << "\n";
    } else {
        os << j.dump(2) << "\n";
    }
    return os.str();
}

} // namespace psl2codes
