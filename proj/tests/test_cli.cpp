#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using Json = nlohmann::json;

namespace {

struct CliResult {
    int status = -1;
    std::string output;
};

// Runs the installed binary with the given arguments, capturing stdout.
CliResult run_cli(const std::string& args) {
    CliResult result;
    const std::string command = std::string(SETQ_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) result.output.append(buffer, got);
    const int rc = pclose(pipe);
    result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return result;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("generate emits the full instance schema") {
        const auto res = run_cli("generate --kind set_equality --n 6 --promise equal "
                                 "--variant one_to_one --seed 3");
        REQUIRE(res.status == 0);
        const Json j = Json::parse(res.output);
        for (const char* key : {"kind", "n", "m", "r", "promise", "a", "b", "f", "seed"})
            CHECK(j.contains(key));
        CHECK(j["kind"] == "set_equality");
        CHECK(j["n"] == 6);
        CHECK(j["m"] == 12);  // defaults to 2n
        CHECK(j["f"].is_null());
        CHECK(j["a"].size() == 6);

        const auto coll = run_cli("generate --kind collision --n 8 --r 2 --promise r_to_one "
                                  "--seed 1");
        REQUIRE(coll.status == 0);
        const Json cj = Json::parse(coll.output);
        CHECK(cj["kind"] == "collision");
        CHECK(cj["a"].is_null());
        CHECK(cj["f"].size() == 8);
        CHECK(cj["m"] == 8);
    }

    TEST_CASE("generate is byte-identical per seed and writes files") {
        const char* path_a = "cli_gen_a.json";
        const char* path_b = "cli_gen_b.json";
        REQUIRE(run_cli(std::string("generate --kind collision --n 12 --r 3 --promise r_to_one "
                                    "--seed 9 --out ") +
                        path_a)
                    .status == 0);
        REQUIRE(run_cli(std::string("generate --kind collision --n 12 --r 3 --promise r_to_one "
                                    "--seed 9 --out ") +
                        path_b)
                    .status == 0);
        const auto a = read_file(path_a);
        const auto b = read_file(path_b);
        CHECK_FALSE(a.empty());
        CHECK(a == b);

        const auto stdout_run = run_cli("generate --kind collision --n 12 --r 3 "
                                        "--promise r_to_one --seed 9");
        CHECK(stdout_run.output == a);
        std::remove(path_b);
        std::remove(path_a);
    }

    TEST_CASE("verify recomputes the promise from the tables") {
        const char* path = "cli_verify_inst.json";
        REQUIRE(run_cli(std::string("generate --kind set_equality --n 8 --promise disjoint "
                                    "--variant bounded --r 2 --seed 5 --out ") +
                        path)
                    .status == 0);
        const auto res = run_cli(std::string("verify --in ") + path);
        REQUIRE(res.status == 0);
        const Json j = Json::parse(res.output);
        CHECK(j["observed_promise"] == "disjoint");
        CHECK(j["matches_declared"] == true);
        CHECK(j["max_preimage_a"].get<int>() <= 2);
        std::remove(path);

        // A hand-built violation file is reported, not thrown.
        const char* bad = "cli_verify_bad.json";
        {
            std::ofstream out(bad);
            out << R"({"kind":"set_equality","n":2,"m":3,"r":null,"promise":"equal",)"
                << R"("a":[1,2],"b":[1,3],"f":null,"seed":null})";
        }
        const auto vres = run_cli(std::string("verify --in ") + bad);
        REQUIRE(vres.status == 0);
        const Json vj = Json::parse(vres.output);
        CHECK(vj["observed_promise"] == "violation");
        CHECK(vj["matches_declared"] == false);
        std::remove(bad);
    }

    TEST_CASE("reduce pipes a collision file into a set-equality instance") {
        const char* path = "cli_reduce_coll.json";
        REQUIRE(run_cli(std::string("generate --kind collision --n 8 --r 2 --promise r_to_one "
                                    "--seed 1 --out ") +
                        path)
                    .status == 0);
        const auto res = run_cli(std::string("reduce --in ") + path + " --seed 9");
        REQUIRE(res.status == 0);
        const Json j = Json::parse(res.output);
        CHECK(j.contains("predicted"));
        CHECK(j["side_a"].size() == 4);
        CHECK(j["a"].size() == 4);
        if (j["predicted"] == "equal") {
            REQUIRE(j["instance"].is_object());
            CHECK(j["instance"]["kind"] == "set_equality");
            CHECK(j["instance"]["n"] == 4);
        } else {
            CHECK(j["predicted"] == "reduction_failed");
            CHECK(j["instance"].is_null());
        }
        std::remove(path);
    }

    TEST_CASE("adversary reports the lower-bound parameters") {
        const auto res = run_cli("adversary --n 16");
        REQUIRE(res.status == 0);
        const Json j = Json::parse(res.output);
        CHECK(j["m"] == 16);
        CHECK(j["m_prime"] == 1);
        CHECK(j["l"] == 1);
        CHECK(j["l_prime"] == 1);
        CHECK(j["bound"].get<double>() == doctest::Approx(4.0).epsilon(1e-12));
        CHECK(j["wellformed"] == true);
    }

    TEST_CASE("lemma modes emit exact fractions and estimates") {
        const auto enumerated = run_cli("lemma --n 4 --r 2 --mode enumerate");
        REQUIRE(enumerated.status == 0);
        const Json ej = Json::parse(enumerated.output);
        CHECK(ej["num"] == "1");
        CHECK(ej["den"] == "3");

        const auto exact = run_cli("lemma --n 16 --r 4 --mode exact");
        REQUIRE(exact.status == 0);
        CHECK(Json::parse(exact.output)["den"] == "13");

        const auto unionb = run_cli("lemma --n 1024 --r 10 --mode union");
        REQUIRE(unionb.status == 0);
        const Json uj = Json::parse(unionb.output);
        CHECK(uj["num"] == "1");
        CHECK(uj["den"] == "5");

        const auto mc = run_cli("lemma --n 16 --r 4 --mode montecarlo --trials 2000 --seed 7");
        REQUIRE(mc.status == 0);
        const Json mj = Json::parse(mc.output);
        CHECK(mj["trials"] == 2000);
        CHECK(mj["p_hat"].get<double>() >= 0.0);
        CHECK(mj["p_hat"].get<double>() <= 1.0);
    }

    TEST_CASE("simulate runs an algorithm against an instance file") {
        const char* path = "cli_sim_inst.json";
        REQUIRE(run_cli(std::string("generate --kind set_equality --n 16 --promise equal "
                                    "--variant one_to_one --seed 2 --out ") +
                        path)
                    .status == 0);

        const auto scan = run_cli(std::string("simulate --in ") + path + " --algorithm scan");
        REQUIRE(scan.status == 0);
        const Json sj = Json::parse(scan.output);
        CHECK(sj["answer"] == "equal");
        CHECK(sj["queries"] == 32);
        CHECK(sj["success"] == true);

        const auto quantum = run_cli(std::string("simulate --in ") + path +
                                     " --algorithm general --seed 4");
        REQUIRE(quantum.status == 0);
        const Json qj = Json::parse(quantum.output);
        CHECK(qj["queries"].get<int>() <= 40);
        CHECK((qj["answer"] == "equal" || qj["answer"] == "disjoint"));
        std::remove(path);
    }

    TEST_CASE("sweep prints the pinned CSV schema and fit reads it back") {
        const auto res = run_cli("sweep --sizes 4,8,16 --algorithm scan --trials 3 --seed 2");
        REQUIRE(res.status == 0);
        CHECK(res.output.starts_with(
            "n,algorithm,trials,success_rate,median_queries,mean_queries,p10_queries,"
            "p90_queries"));
        CHECK(res.output.find("classical_scan") != std::string::npos);

        const char* csv = "cli_sweep.csv";
        REQUIRE(run_cli(std::string("sweep --sizes 4,8,16,32 --algorithm scan --trials 3 "
                                    "--seed 2 --out ") +
                        csv)
                    .status == 0);
        const auto fit = run_cli(std::string("fit --in ") + csv);
        REQUIRE(fit.status == 0);
        const Json fj = Json::parse(fit.output);
        // scan costs exactly 2n queries: a pure n^1 power law.
        CHECK(fj["slope"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(fj["r_squared"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
        std::remove(csv);
    }

    TEST_CASE("sweep reruns are byte-identical") {
        const char* csv_a = "cli_sweep_a.csv";
        const char* csv_b = "cli_sweep_b.csv";
        const std::string args = "sweep --sizes 8,16 --algorithm one_to_one --trials 10 --seed 77";
        REQUIRE(run_cli(args + " --out " + csv_a).status == 0);
        REQUIRE(run_cli(args + " --out " + csv_b).status == 0);
        const auto a = read_file(csv_a);
        CHECK_FALSE(a.empty());
        CHECK(a == read_file(csv_b));
        std::remove(csv_a);
        std::remove(csv_b);
    }

    TEST_CASE("domain errors exit 1 with a machine-readable object") {
        const auto res = run_cli("lemma --n 26 --r 13 --mode enumerate");
        CHECK(res.status == 1);
        const Json j = Json::parse(res.output);
        CHECK(j["error"] == "too_large");
        CHECK(j["detail"].is_string());

        const auto gen = run_cli("generate --kind collision --n 6 --r 4 --promise r_to_one");
        CHECK(gen.status == 1);
        CHECK(Json::parse(gen.output)["error"] == "non_divisible");

        const auto missing = run_cli("verify --in no_such_instance_file.json");
        CHECK(missing.status == 1);
        CHECK(Json::parse(missing.output)["error"] == "invalid_params");
    }

    TEST_CASE("usage errors exit 2") {
        CHECK(run_cli("frobnicate").status == 2);
        CHECK(run_cli("generate --promise equal").status == 2);  // missing required --n
        CHECK(run_cli("").status == 2);                          // subcommand required
        CHECK(run_cli("--help").status == 0);
    }
}
