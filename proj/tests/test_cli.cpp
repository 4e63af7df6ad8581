#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bindinfo/cli.hpp"
#include "bindinfo/entropy_functional.hpp"
#include "bindinfo/io.hpp"
#include "bindinfo/measures.hpp"
#include "bindinfo/prover.hpp"

using namespace bindinfo;
using nlohmann::json;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& stem, const std::string& contents) {
    const std::filesystem::path path =
        std::filesystem::temp_directory_path() / ("bindinfo_cli_" + stem + ".txt");
    std::ofstream file(path);
    file << contents;
    return path;
}

int field_count(const std::string& line) {
    int fields = 1;
    for (const char c : line) fields += c == ',';
    return fields;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    REQUIRE(slash != std::string::npos);
    using Int = boost::multiprecision::cpp_int;
    return Rational(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
}

const std::string kChainFile = [] {
    return write_temp("chain", "2\n0.9 0.1\n0.1 0.9\n").string();
}();

} // namespace

TEST_CASE("canonical pipeline: process feeds measure") {
    const CliResult table = run_cli({"process", "--kind", "parity", "--n", "6", "--k", "2",
                                     "--m", "0"});
    REQUIRE(table.code == 0);

    const CliResult measured = run_cli({"measure"}, table.out);
    REQUIRE(measured.code == 0);
    const json report = json::parse(measured.out);
    CHECK(report["joint_entropy"].get<double>() == doctest::Approx(5.0).epsilon(1e-9));
    CHECK(report["multi_information"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(report["binding_information"].get<double>() == doctest::Approx(5.0).epsilon(1e-9));

    // Key order is part of the output contract.
    CHECK(measured.out.rfind("{\"n\":6,\"k\":2,\"joint_entropy\":", 0) == 0);
}

TEST_CASE("process feeds bounds as well") {
    const CliResult table = run_cli({"process", "--kind", "parity", "--n", "3", "--k", "2"});
    const CliResult bounds = run_cli({"bounds", "--format", "json"}, table.out);
    CHECK(bounds.code == 0);
    const json report = json::parse(bounds.out);
    CHECK(report["all_satisfied"].get<bool>());
    CHECK(report["records"].size() == 7);
}

TEST_CASE("measure emits an ordering profile on request") {
    const CliResult table = run_cli({"process", "--kind", "parity", "--n", "3", "--k", "2"});
    const CliResult measured =
        run_cli({"measure", "--ordering", "2,1,3"}, table.out);
    REQUIRE(measured.code == 0);
    const json report = json::parse(measured.out);
    const auto profile = report["pir_profile"].get<std::vector<double>>();
    REQUIRE(profile.size() == 3);
    CHECK(profile[0] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(profile[1] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(profile[2] == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(report["pir_sum"].get<double>() ==
          doctest::Approx(report["binding_information"].get<double>()).epsilon(1e-9));

    const CliResult bad = run_cli({"measure", "--ordering", "1,1,2"}, table.out);
    CHECK(bad.code == 1);
    CHECK(!bad.err.empty());
}

TEST_CASE("measure csv carries one header and one row") {
    const CliResult table = run_cli({"process", "--kind", "random", "--n", "3", "--k", "2",
                                     "--seed", "4"});
    const CliResult measured = run_cli({"measure", "--format", "csv"}, table.out);
    REQUIRE(measured.code == 0);
    const auto lines = lines_of(measured.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] ==
          "n,k,joint_entropy,multi_information,binding_information,residual_entropy,H_1,H_2,H_3");
    CHECK(field_count(lines[1]) == 9);
}

TEST_CASE("process kinds cover the canonical family") {
    const CliResult giant = run_cli({"process", "--kind", "giant_bit", "--n", "2", "--k", "2",
                                     "--b-set", "1"});
    REQUIRE(giant.code == 0);
    std::istringstream gin(giant.out);
    const JointTable gt = read_joint_table(gin);
    CHECK(gt.probs[1] == doctest::Approx(0.5));
    CHECK(gt.probs[2] == doctest::Approx(0.5));

    const CliResult known = run_cli({"process", "--kind", "known", "--n", "2", "--k", "3",
                                     "--state", "2,1"});
    REQUIRE(known.code == 0);
    std::istringstream kin(known.out);
    const JointTable kt = read_joint_table(kin);
    CHECK(kt.probs[2 + 1 * 3] == 1.0);

    CHECK(run_cli({"process", "--kind", "bogus", "--n", "2"}).code == 1);
    CHECK(run_cli({"process", "--kind", "giant_bit", "--n", "2", "--k", "3"}).code == 1);
    CHECK(run_cli({"process", "--kind", "giant_bit", "--n", "2", "--b-set", "5"}).code == 1);
}

TEST_CASE("markov reports rates and identity residuals") {
    const CliResult res = run_cli({"markov", "--transition", kChainFile, "--nmax", "5"});
    REQUIRE(res.code == 0);
    const json report = json::parse(res.out);
    const double hb = -(0.1 * std::log2(0.1) + 0.9 * std::log2(0.9));
    CHECK(report["entropy_rate"].get<double>() == doctest::Approx(hb).epsilon(1e-9));
    CHECK(report["max_violation"].get<double>() < 1e-9);
    CHECK(report["identity_checks"].size() == 5);

    const CliResult csv = run_cli({"markov", "--transition", kChainFile, "--format", "csv"});
    const auto lines = lines_of(csv.out);
    REQUIRE(lines.size() == 2);
    CHECK(field_count(lines[1]) == 7);
    // 12 significant digits exactly.
    CHECK(csv.out.find("0.468995593589") != std::string::npos);
}

TEST_CASE("bounds batch emits seeded plot-ready csv") {
    const CliResult res = run_cli({"bounds", "--random", "--n", "3", "--k", "2", "--samples",
                                   "100", "--seed", "11"});
    REQUIRE(res.code == 0);
    const auto lines = lines_of(res.out);
    REQUIRE(lines.size() == 101);
    CHECK(lines[0] ==
          "seed,H,I,B,I<=N*logK-H,I<=(N-1)*H,B<=H,B<=(N-1)*(N*logK-H),I+B<=N*logK,"
          "I<=(N-1)*B,B<=(N-1)*I");
    for (const auto& line : lines) CHECK(field_count(line) == 11);
    CHECK(lines[1].rfind("11,", 0) == 0);
    CHECK(lines[100].rfind("110,", 0) == 0);
}

TEST_CASE("bounds on one table drops the seed column") {
    const CliResult table = run_cli({"process", "--kind", "parity", "--n", "6", "--k", "2"});
    const CliResult res = run_cli({"bounds"}, table.out);
    REQUIRE(res.code == 0);
    const auto lines = lines_of(res.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0].rfind("H,I,B,", 0) == 0);
    CHECK(field_count(lines[0]) == 10);
    CHECK(field_count(lines[1]) == 10);
}

TEST_CASE("prove certifies and refutes with exact rationals") {
    const CliResult proven = run_cli({"prove", "--target", "(N-1)B-I", "--n", "3"});
    CHECK(proven.code == 0);
    const json proof = json::parse(proven.out);
    CHECK(proof["proven"].get<bool>());
    CHECK(proof["cone"].get<std::string>() == "symmetric_reduced");
    CHECK(proof["multipliers"] == json::array({"0/1", "3/1", "0/1"}));

    const CliResult refuted = run_cli({"prove", "--target", "B-I", "--n", "3"});
    CHECK(refuted.code == 2);
    const json refutation = json::parse(refuted.out);
    CHECK(!refutation["proven"].get<bool>());
    CHECK(refutation["refutation"]["coordinates"] ==
          json::array({"0/1", "1/1", "1/1", "1/1"}));
    CHECK(refutation["refutation"]["target_value"].get<std::string>() == "-1/1");

    const CliResult general = run_cli({"prove", "--target", "(N-1)I-B", "--n", "4", "--cone",
                                       "general"});
    CHECK(general.code == 0);
    CHECK(json::parse(general.out)["cone"].get<std::string>() == "elemental");

    CHECK(run_cli({"prove", "--target", "B<=I", "--n", "3"}).code == 1);
}

TEST_CASE("emitted certificates round-trip losslessly") {
    const auto path = std::filesystem::temp_directory_path() / "bindinfo_cli_cert.json";
    const CliResult res = run_cli({"prove", "--target", "(N-1)B-I", "--n", "5",
                                   "--emit-certificate", path.string()});
    REQUIRE(res.code == 0);

    std::ifstream file(path);
    const json cert = json::parse(file);
    CHECK(cert["n"].get<int>() == 5);
    ProofCertificate rebuilt{cert["n"].get<int>(), ConeKind::symmetric_reduced, {}};
    for (const auto& m : cert["multipliers"])
        rebuilt.multipliers.push_back(parse_rational(m.get<std::string>()));
    const SymmetricFunctional target =
        symmetrize(functional_from_measure(5, MeasureTarget::scaled_binding_minus_multi));
    CHECK(verify_certificate(target, rebuilt));
    std::filesystem::remove(path);
}

TEST_CASE("maximize summary and table file agree") {
    const auto path = std::filesystem::temp_directory_path() / "bindinfo_cli_best.txt";
    const CliResult res = run_cli({"maximize", "--objective", "binding", "--n", "3", "--k", "2",
                                   "--restarts", "5", "--seed", "7", "--out", path.string()});
    REQUIRE(res.code == 0);
    const json summary = json::parse(res.out);
    CHECK(summary["best_value"].get<double>() >= 1.99);
    CHECK(summary["converged"].get<bool>());
    CHECK(summary["pseudo_independent"].get<bool>());

    const JointTable best = read_joint_table(path.string());
    CHECK(binding_information(best) ==
          doctest::Approx(summary["best_value"].get<double>()).epsilon(1e-9));
    std::filesystem::remove(path);

    const CliResult inline_table = run_cli({"maximize", "--objective", "binding", "--n", "2",
                                            "--k", "2", "--restarts", "2", "--seed", "1"});
    REQUIRE(inline_table.code == 0);
    CHECK(json::parse(inline_table.out)["table"].size() == 4);
}

TEST_CASE("sample feeds estimate through a pipe") {
    const CliResult sampled = run_cli({"sample", "--transition", kChainFile, "--length",
                                       "20000", "--seed", "3"});
    REQUIRE(sampled.code == 0);
    CHECK(lines_of(sampled.out).size() == 20000);

    const CliResult est = run_cli({"estimate", "--k", "2", "--nmax", "3"}, sampled.out);
    REQUIRE(est.code == 0);
    const auto lines = lines_of(est.out);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] ==
          "n,block_entropy,entropy_rate,excess_entropy,multi_information_rate,block_binding");

    const CliResult as_json =
        run_cli({"estimate", "--k", "2", "--nmax", "3", "--format", "json"}, sampled.out);
    const json report = json::parse(as_json.out);
    CHECK(report["sequence_length"].get<int>() == 20000);
    CHECK(report["block_entropy"].size() == 3);
}

TEST_CASE("every subcommand is byte-deterministic") {
    const std::vector<std::vector<std::string>> invocations = {
        {"process", "--kind", "random", "--n", "3", "--k", "3", "--seed", "12"},
        {"markov", "--transition", kChainFile},
        {"bounds", "--random", "--n", "3", "--k", "2", "--samples", "20", "--seed", "9"},
        {"prove", "--target", "(N-1)I-B", "--n", "6"},
        {"maximize", "--n", "3", "--k", "2", "--restarts", "3", "--seed", "5"},
        {"sample", "--transition", kChainFile, "--length", "500", "--seed", "8"},
    };
    for (const auto& args : invocations) {
        const CliResult first = run_cli(args);
        const CliResult second = run_cli(args);
        CHECK(first.code == 0);
        CHECK(first.out == second.out);
    }

    const CliResult table = run_cli({"process", "--kind", "parity", "--n", "4", "--k", "2"});
    CHECK(run_cli({"measure"}, table.out).out == run_cli({"measure"}, table.out).out);
    const CliResult seq = run_cli({"sample", "--transition", kChainFile, "--length", "300",
                                   "--seed", "2"});
    CHECK(run_cli({"estimate", "--k", "2"}, seq.out).out ==
          run_cli({"estimate", "--k", "2"}, seq.out).out);
}

TEST_CASE("--out writes the same bytes the stream would get") {
    const CliResult table = run_cli({"process", "--kind", "parity", "--n", "3", "--k", "2"});
    const auto path = std::filesystem::temp_directory_path() / "bindinfo_cli_out.json";
    const CliResult to_file = run_cli({"measure", "--out", path.string()}, table.out);
    REQUIRE(to_file.code == 0);
    CHECK(to_file.out.empty());
    std::ifstream file(path);
    std::stringstream contents;
    contents << file.rdbuf();
    CHECK(contents.str() == run_cli({"measure"}, table.out).out);
    std::filesystem::remove(path);
}

TEST_CASE("usage and input errors exit with one") {
    CHECK(run_cli({}).code == 1);
    CHECK(run_cli({"nonsense"}).code == 1);
    CHECK(run_cli({"measure", "--bogus-flag"}).code == 1);

    const CliResult missing = run_cli({"measure", "--joint", "/nonexistent/nope.txt"});
    CHECK(missing.code == 1);
    CHECK(missing.err.find("cannot open") != std::string::npos);

    const CliResult not_a_distribution = run_cli({"measure"}, "2 2\n0.1 0.1 0.1 0.1\n");
    CHECK(not_a_distribution.code == 1);

    const CliResult bad_alphabet = run_cli({"estimate", "--k", "1"}, "0 1 0\n");
    CHECK(bad_alphabet.code == 1);

    const CliResult help = run_cli({"prove", "--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("--target") != std::string::npos);
}
