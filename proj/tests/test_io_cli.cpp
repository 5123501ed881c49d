#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include <sys/wait.h>

#include "hamest/io.hpp"
#include "hamest/metric.hpp"
#include "test_util.hpp"

using namespace hamest;

namespace {

std::filesystem::path temp_dir() {
    const auto dir = std::filesystem::temp_directory_path() / "hamest-io-tests";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Runs the CLI binary (path from the HAMEST_CLI env var) and returns the exit
// code; stdout/stderr go to a scratch file to keep test output clean.
int run_cli(const std::string& args) {
    const char* cli = std::getenv("HAMEST_CLI");
    REQUIRE_MESSAGE(cli != nullptr, "HAMEST_CLI must point at the hamest binary");
    const std::string cmd = std::string(cli) + " " + args + " > " +
                            (temp_dir() / "cli.log").string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

} // namespace

TEST_CASE("operators round-trip through JSON exactly") {
    for (int trial = 0; trial < 20; ++trial) {
        SplitMix64 gen = trial_rng(71, static_cast<std::uint64_t>(trial));
        const int dim = 1 + static_cast<int>(gen.next_u64() % 6);
        const HermitianOperator h(testutil::random_hermitian_matrix(dim, gen));
        const HermitianOperator back = operator_from_json(operator_to_json(h));
        CHECK((h.matrix() - back.matrix()).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("states and layouts round-trip through JSON exactly") {
    const SpaceLayout layout(2, 1, 2);
    const SpaceLayout back = layout_from_json(layout_to_json(layout));
    CHECK(back == layout);

    SplitMix64 gen = trial_rng(72, 0);
    const QuantumState psi(layout, testutil::random_state_vector(layout.total_dim(), gen));
    const QuantumState psi_back = state_from_json(state_to_json(psi));
    CHECK(psi_back.layout() == layout);
    // The JSON carries the amplitudes exactly; reconstruction renormalises,
    // which may move the last ulp.
    CHECK((psi.amplitudes() - psi_back.amplitudes()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("protocols round-trip through JSON exactly") {
    SplitMix64 gen = trial_rng(73, 0);
    const SpaceLayout layout(2, 1, 1);
    std::vector<ProtocolStep> steps;
    for (int k = 0; k < 3; ++k) {
        steps.emplace_back(0.25 * gen.next_open_double(),
                           testutil::random_unitary(layout.total_dim(), gen));
    }
    const DiscriminationProtocol protocol(
        layout, QuantumState(layout, testutil::random_state_vector(3, gen)), steps);
    const DiscriminationProtocol back = protocol_from_json(protocol_to_json(protocol));
    REQUIRE(back.steps().size() == protocol.steps().size());
    CHECK(back.layout() == protocol.layout());
    for (std::size_t k = 0; k < steps.size(); ++k) {
        CHECK(back.steps()[k].dwell() == protocol.steps()[k].dwell());
        CHECK((back.steps()[k].control() - protocol.steps()[k].control())
                  .cwiseAbs()
                  .maxCoeff() == 0.0);
    }
}

TEST_CASE("malformed JSON inputs are rejected with a parse error") {
    CHECK_THROWS_AS(matrix_from_json(nlohmann::json{{"dim", 2}}), Error);
    CHECK_THROWS_AS(matrix_from_json(nlohmann::json{
                        {"dim", 2}, {"entries", {{1.0, 0.0}}}}),
                    Error);
    CHECK_THROWS_AS(layout_from_json(nlohmann::json{{"box_dim", 1}}), Error);
    CHECK_THROWS_AS(load_json_file("/nonexistent/path.json"), Error);

    const auto bad = temp_dir() / "bad.json";
    std::ofstream(bad) << "{ not json";
    CHECK_THROWS_AS(load_json_file(bad.string()), Error);
}

TEST_CASE("csv writer emits stable shortest-round-trip numbers") {
    std::ostringstream out;
    write_csv(out, {"a", "b"}, {{1.0, 0.1}, {-2.5, 3.0000000000000004}});
    CHECK(out.str() == "a,b\n1,0.1\n-2.5,3.0000000000000004\n");
    std::ostringstream bad;
    CHECK_THROWS_AS(write_csv(bad, {"a"}, {{1.0, 2.0}}), DimensionError);
}

TEST_CASE("cli: dist prints the bound and writes JSON") {
    const auto out = temp_dir() / "dist.json";
    std::filesystem::remove(out);
    const int code =
        run_cli("dist --h1 pauli-z --h2 shifted-identity:2:-1 --out " + out.string());
    CHECK(code == 0);
    const nlohmann::json j = load_json_file(out.string());
    // sigma_z vs -I: difference diag(2, 0), distance 2.
    CHECK(j.at("d0").get<double>() == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(j.at("min_discrimination_time").get<double>() ==
          doctest::Approx(std::numbers::pi / 2.0).epsilon(1e-12));
}

TEST_CASE("cli: identical pairs are a domain error (exit 3)") {
    CHECK(run_cli("dist --h1 pauli-z --h2 pauli-z") == 3);
}

TEST_CASE("cli: dist honours --no-extension") {
    const auto out = temp_dir() / "dist_noext.json";
    // sigma_z vs -2I: difference diag(3, 1), distance 3 but spread only 2.
    REQUIRE(run_cli("dist --h1 pauli-z --h2 shifted-identity:2:-2 --no-extension --out " +
                    out.string()) == 0);
    CHECK(load_json_file(out.string()).at("min_discrimination_time").get<double>() ==
          doctest::Approx(std::numbers::pi / 2.0).epsilon(1e-12));
    REQUIRE(run_cli("dist --h1 pauli-z --h2 shifted-identity:2:-2 --out " + out.string()) ==
            0);
    CHECK(load_json_file(out.string()).at("min_discrimination_time").get<double>() ==
          doctest::Approx(std::numbers::pi / 3.0).epsilon(1e-12));
    // A pure identity shift has zero spread: without the extension the pair is
    // indistinguishable.
    CHECK(run_cli("dist --h1 shifted-identity:2:1 --h2 zero:2 --no-extension") == 3);
    CHECK(run_cli("dist --h1 shifted-identity:2:1 --h2 zero:2") == 0);
}

TEST_CASE("cli: bound integrates constant and scheduled pairs") {
    const auto out = temp_dir() / "bound.json";
    REQUIRE(run_cli("bound --h1 pauli-z --h2 shifted-identity:2:0 --dt 1 --out " +
                    out.string()) == 0);
    nlohmann::json j = load_json_file(out.string());
    CHECK(j.at("integral").get<double>() == doctest::Approx(2.0).epsilon(1e-12));
    CHECK_FALSE(j.at("certain_discrimination_possible").get<bool>());

    // Piecewise schedule accumulating past pi.
    const auto schedule = temp_dir() / "schedule.json";
    const nlohmann::json seg = {{"duration", 0.5},
                                {"h1", operator_to_json(pauli_z())},
                                {"h2", operator_to_json(-1.0 * pauli_z())}};
    save_json_file(schedule.string(), {{"segments", {seg, seg}}});
    REQUIRE(run_cli("bound --schedule " + schedule.string() + " --out " + out.string()) == 0);
    j = load_json_file(out.string());
    CHECK(j.at("integral").get<double>() == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(j.at("certain_discrimination_possible").get<bool>());

    // Neither a schedule nor a complete constant pair is a config error.
    CHECK(run_cli("bound --h1 pauli-z --h2 pauli-x") == 2);
}

TEST_CASE("cli: bad flags and unknown generators are config errors (exit 2)") {
    CHECK(run_cli("dist --h1 pauli-z") == 2);
    CHECK(run_cli("dist --h1 pauli-q --h2 pauli-z") == 2);
    CHECK(run_cli("dist --h1 pauli-z --h2 pauli-x --bogus") == 2);
    CHECK(run_cli("nonsense") == 2);
    CHECK(run_cli("estimate --pair bogus") == 2);
}

TEST_CASE("cli: estimate writes the documented CSV header and is reproducible") {
    const auto out1 = temp_dir() / "est1.csv";
    const auto out2 = temp_dir() / "est2.csv";
    const std::string common =
        "estimate --pair spin --grid 5 --trials 2000 --steps 60 --seed 7 --out ";
    REQUIRE(run_cli(common + out1.string()) == 0);
    REQUIRE(run_cli(common + out2.string()) == 0);
    const std::string body = slurp(out1);
    CHECK(body == slurp(out2));
    CHECK(body.rfind("delta_t,delta_h_closed,delta_h_empirical,stderr,product,bound_025_ok\n",
                     0) == 0);
    // 5 grid rows plus the header.
    CHECK(std::count(body.begin(), body.end(), '\n') == 6);

    // A different seed must change the Monte-Carlo column.
    const auto out3 = temp_dir() / "est3.csv";
    REQUIRE(run_cli("estimate --pair spin --grid 5 --trials 2000 --steps 60 --seed 8 --out " +
                    out3.string()) == 0);
    CHECK(slurp(out3) != body);

    // Spot-check the closed-form columns of the first grid row (delta_t = 0):
    // for the spin pair d0 = 4, so delta_h_closed = 2 and the product is 0.
    std::istringstream lines(body);
    std::string header, first_row;
    std::getline(lines, header);
    std::getline(lines, first_row);
    std::vector<double> fields;
    std::istringstream cells(first_row);
    for (std::string cell; std::getline(cells, cell, ',');) {
        fields.push_back(std::stod(cell));
    }
    REQUIRE(fields.size() == 6);
    CHECK(fields[0] == 0.0);
    CHECK(fields[1] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(fields[4] == 0.0);
    CHECK(fields[5] == 0.0);
}

TEST_CASE("cli: protocol writes a trajectory and round-trips via --save-protocol") {
    const auto traj_csv = temp_dir() / "traj.csv";
    const auto proto_json = temp_dir() / "proto.json";
    REQUIRE(run_cli("protocol --h1 pauli-x --h2 pauli-z --layout 2,1,1 --steps 50 "
                    "--save-protocol " +
                    proto_json.string() + " --out " + traj_csv.string()) == 0);
    const std::string body = slurp(traj_csv);
    CHECK(body.rfind("time,re_overlap,im_overlap,theta\n", 0) == 0);
    CHECK(std::count(body.begin(), body.end(), '\n') == 52);  // header + 51 points

    // Re-running the saved protocol reproduces the same trajectory file.
    const auto traj2 = temp_dir() / "traj2.csv";
    REQUIRE(run_cli("protocol --h1 pauli-x --h2 pauli-z --layout 2,1,1 --protocol " +
                    proto_json.string() + " --out " + traj2.string()) == 0);
    CHECK(slurp(traj2) == body);
}

TEST_CASE("cli: product, spy, decay and scenario emit their reports") {
    const auto product_csv = temp_dir() / "product.csv";
    REQUIRE(run_cli("product --d0 2 --grid 30 --out " + product_csv.string()) == 0);
    CHECK(slurp(product_csv).rfind("delta_t,delta_h,product,bound_025_ok\n", 0) == 0);

    const auto spy_json = temp_dir() / "spy.json";
    REQUIRE(run_cli("spy --h1 pauli-z --level 0 --dt 1 --out " + spy_json.string()) == 0);
    const nlohmann::json spy = load_json_file(spy_json.string());
    CHECK(spy.at("product").get<double>() >= 0.25);
    CHECK(spy.at("bound_satisfied").get<bool>());

    const auto decay_json = temp_dir() / "decay.json";
    const auto decay_stats = temp_dir() / "decay_stats.csv";
    const auto decay_table = temp_dir() / "decay_table.csv";
    REQUIRE(run_cli("decay --gamma 1 --trials 20000 --seed 5 --out " + decay_json.string() +
                    " --stats-out " + decay_stats.string() + " --table-out " +
                    decay_table.string()) == 0);
    const nlohmann::json decay = load_json_file(decay_json.string());
    CHECK(decay.at("mean_time").get<double>() == doctest::Approx(1.0).epsilon(0.05));
    CHECK(decay.at("truncated").size() == 3);
    CHECK(slurp(decay_stats).rfind("mean_time,fwhm\n", 0) == 0);
    const std::string table = slurp(decay_table);
    CHECK(table.rfind("lambda,truncated_dE\n", 0) == 0);
    CHECK(std::count(table.begin(), table.end(), '\n') == 4);

    const auto scenario_json = temp_dir() / "scenario.json";
    const auto sweep_csv = temp_dir() / "scenario_sweep.csv";
    REQUIRE(run_cli("scenario --name spin-fields --out " + scenario_json.string() +
                    " --sweep-out " + sweep_csv.string()) == 0);
    const nlohmann::json scenario = load_json_file(scenario_json.string());
    CHECK(scenario.at("passed").get<bool>());
    CHECK(scenario.at("name").get<std::string>() == "spin-fields");
    CHECK(slurp(sweep_csv).rfind("time,re_overlap,im_overlap,abs_overlap\n", 0) == 0);

    // Domain failures surface as exit 3.
    CHECK(run_cli("decay --gamma 0 --trials 100") == 3);
    CHECK(run_cli("scenario --name phase-box --phi1 0.5 --phi2 0.5") == 3);
}
