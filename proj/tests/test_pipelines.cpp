#include <doctest.h>

#include <set>

#include "psl2codes/pipelines.hpp"

using namespace psl2codes;
using nlohmann::json;

namespace {
RunConfig config_for(std::uint32_t n) {
    RunConfig cfg;
    cfg.n = n;
    return cfg;
}
} // namespace

TEST_CASE("classify pipeline") {
    json j = run_command("classify", config_for(7));
    CHECK(j["schema"] == "psl2codes/1");
    CHECK(j["command"] == "classify");
    CHECK(j["n"] == 7);
    CHECK(j["results"].size() == 8);
    CHECK(j["invariant_count"] == 5);
    CHECK(j["expected_invariant_count"] == 5);
    CHECK(j["consistent"] == true);
    CHECK(verdict_exit_code(j) == 0);

    std::set<std::string> labels;
    for (const json& r : j["results"]) {
        if (r["invariant"].get<bool>()) labels.insert(r["label"].get<std::string>());
    }
    CHECK(labels == std::set<std::string>{"ZERO", "REPETITION", "EVEN_WEIGHT_EXT", "QR_Q", "QR_N"});

    json j11 = run_command("classify", config_for(11));
    CHECK(j11["invariant_count"] == 3);
    CHECK(j11["consistent"] == true);

    CHECK_THROWS_AS(run_command("classify", config_for(4)), psl2codes::error);
    CHECK_THROWS_AS(run_command("bogus", config_for(7)), psl2codes::error);
}

TEST_CASE("spin pipeline") {
    json j = run_command("spin", config_for(5));
    CHECK(j["count"] == 4);
    CHECK(j["consistent"] == true);
    CHECK(verdict_exit_code(j) == 0);
    int cyclic = 0;
    for (const json& s : j["subspaces"]) {
        if (s["extended_cyclic"].get<bool>()) ++cyclic;
        else CHECK(s["dimension"] == 6); // only the full space
    }
    CHECK(cyclic == 3);

    json j13 = run_command("spin", config_for(13));
    CHECK(j13["count"] == 4);
    CHECK(j13["consistent"] == true);

    try {
        run_command("spin", config_for(17));
        CHECK(false);
    } catch (const error& e) {
        CHECK(e.code() == errc::cap_exceeded);
    }
}

TEST_CASE("qr pipeline") {
    RunConfig cfg = config_for(23);
    cfg.extremal = true;
    json j = run_command("qr", cfg);
    CHECK(j["length"] == 24);
    CHECK(j["dimension"] == 12);
    CHECK(j["min_distance"] == 8);
    CHECK(j["self_dual"] == true);
    CHECK(j["type2_extremal"] == true);
    CHECK(j["target_distance"] == 8);
    CHECK(verdict_exit_code(j) == 0);

    json j17 = run_command("qr", config_for(17));
    CHECK(j17["min_distance"] == 6);
    CHECK(!j17.contains("type2_extremal"));
}

TEST_CASE("designs pipeline") {
    json j = run_command("designs", config_for(7));
    CHECK(j["status"] == "verified");
    REQUIRE(j["table"].size() == 2);
    CHECK(j["table"][0] == json({{"k", 4}, {"b", 14}, {"t", 3}, {"lambda", 1}, {"ok", true}}));
    CHECK(j["table"][1] == json({{"k", 8}, {"b", 1}, {"t", 3}, {"lambda", 1}, {"ok", true}}));
    CHECK(verdict_exit_code(j) == 0);

    CHECK_THROWS_AS(run_command("designs", config_for(5)), psl2codes::error);
}

TEST_CASE("fourier-check pipeline") {
    RunConfig cfg = config_for(17);
    cfg.trials = 200;
    cfg.seed = 1;
    json j = run_command("fourier-check", cfg);
    CHECK(j["trials"] == 200);
    CHECK(j["seed"] == 1);
    CHECK(j["failures"].empty());
    CHECK(verdict_exit_code(j) == 0);
}

TEST_CASE("witness pipeline") {
    json j = run_command("witness", config_for(7));
    CHECK(j["pair_count"] == 18); // 6 values of l, 3 of s
    CHECK(j["all_nonzero"] == true);
    CHECK(verdict_exit_code(j) == 0);
    for (const json& p : j["pairs"]) {
        CHECK(p["nonzero"] == true);
        // Residues target even indices, nonresidues odd ones.
        CHECK(p["target_index"].get<std::uint32_t>() % 2 ==
              (std::set<std::uint32_t>{3, 5, 6}.count(p["l"].get<std::uint32_t>()) ? 1u : 0u));
    }
}

TEST_CASE("field and cosets pipelines") {
    json f = run_command("field", config_for(7));
    CHECK(f["m"] == 3);
    CHECK(f["modulus"] == "1101");
    CHECK(f["alpha"] == "2");
    CHECK(f["beta"] == "2");
    CHECK(f["log_tables"] == true);

    json c = run_command("cosets", config_for(7));
    CHECK(c["leaders"] == json::array({0, 1, 3}));
    CHECK(c["pi"] == 3);
    CHECK(c["h"] == 2);
    CHECK(c["two_is_residue"] == true);
    CHECK(c["quadratic_residues"] == json::array({1, 2, 4}));
}

TEST_CASE("fixed config implies byte-identical JSON") {
    for (const char* cmd : {"classify", "qr", "designs", "witness"}) {
        RunConfig cfg = config_for(7);
        CHECK(run_command(cmd, cfg).dump() == run_command(cmd, cfg).dump());
    }
    RunConfig cfg = config_for(7);
    cfg.seed = 5;
    cfg.trials = 50;
    CHECK(run_command("fourier-check", cfg).dump() == run_command("fourier-check", cfg).dump());
}

TEST_CASE("text rendering") {
    json j = run_command("classify", config_for(7));
    std::string text = render_text(j);
    CHECK(text.find("classify n=7") != std::string::npos);
    CHECK(text.find("consistent: yes") != std::string::npos);

    std::string qr_text = render_text(run_command("qr", config_for(17)));
    CHECK(qr_text.find("[18,9,6]") != std::string::npos);
}

TEST_CASE("verdict exit codes") {
    json inconsistent = {{"consistent", false}};
    CHECK(verdict_exit_code(inconsistent) == 1);
    json failures = {{"failures", json::array({"00"})}};
    CHECK(verdict_exit_code(failures) == 1);
    json ok = {{"consistent", true}};
    CHECK(verdict_exit_code(ok) == 0);
}
