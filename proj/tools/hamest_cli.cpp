// hamest command-line runner: thin dispatch over the library modules.
// Exit codes: 0 success, 2 configuration error, 3 domain/numerical error.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hamest/energy.hpp"
#include "hamest/estimation.hpp"
#include "hamest/io.hpp"
#include "hamest/metric.hpp"
#include "hamest/protocol.hpp"
#include "hamest/scenarios.hpp"
#include "hamest/spectral.hpp"

namespace {

using hamest::HermitianOperator;

// Operator inputs: named generators ("pauli-x", "pauli-y", "pauli-z",
// "zero:D", "shifted-identity:D:SHIFT", "random-hermitian:D:SEED") or a path
// to a JSON file {"dim": n, "entries": [[re, im], ...]}.
HermitianOperator parse_operator_spec(const std::string& spec) {
    const auto split = [](const std::string& s) {
        std::vector<std::string> parts;
        std::size_t start = 0;
        while (true) {
            const std::size_t colon = s.find(':', start);
            parts.push_back(s.substr(start, colon - start));
            if (colon == std::string::npos) {
                return parts;
            }
            start = colon + 1;
        }
    };
    const std::vector<std::string> parts = split(spec);
    const std::string& name = parts[0];
    try {
        if (name == "pauli-x") {
            return hamest::pauli_x();
        }
        if (name == "pauli-y") {
            return hamest::pauli_y();
        }
        if (name == "pauli-z") {
            return hamest::pauli_z();
        }
        if (name == "zero") {
            if (parts.size() != 2) {
                throw hamest::Error("generator syntax: zero:DIM");
            }
            return hamest::zero_operator(std::stoi(parts[1]));
        }
        if (name == "shifted-identity") {
            if (parts.size() != 3) {
                throw hamest::Error("generator syntax: shifted-identity:DIM:SHIFT");
            }
            return hamest::shifted_identity(std::stoi(parts[1]), std::stod(parts[2]));
        }
        if (name == "random-hermitian") {
            if (parts.size() != 3) {
                throw hamest::Error("generator syntax: random-hermitian:DIM:SEED");
            }
            return hamest::random_hermitian(std::stoi(parts[1]),
                                            std::stoull(parts[2]));
        }
    } catch (const std::invalid_argument&) {
        throw hamest::Error("bad numeric field in generator spec: " + spec);
    } catch (const std::out_of_range&) {
        throw hamest::Error("numeric field out of range in generator spec: " + spec);
    }
    return hamest::load_operator(spec);
}

hamest::SpaceLayout parse_layout(const std::string& text) {
    int b = 0, n = 0, a = 0;
    char c1 = 0, c2 = 0;
    std::istringstream in(text);
    if (!(in >> b >> c1 >> n >> c2 >> a) || c1 != ',' || c2 != ',') {
        throw hamest::Error("layout syntax: BOX,NOBOX,ANCILLA (e.g. 2,1,1)");
    }
    return hamest::SpaceLayout(b, n, a);
}

// "4..256" doubles from 4 to 256; "4,8,12" is an explicit list.
std::vector<int> parse_dims(const std::string& text) {
    std::vector<int> dims;
    const std::size_t dots = text.find("..");
    if (dots != std::string::npos) {
        const int lo = std::stoi(text.substr(0, dots));
        const int hi = std::stoi(text.substr(dots + 2));
        if (lo < 1 || hi < lo) {
            throw hamest::Error("dims range must satisfy 1 <= LO <= HI");
        }
        for (int d = lo; d <= hi; d *= 2) {
            dims.push_back(d);
        }
        return dims;
    }
    std::istringstream in(text);
    std::string field;
    while (std::getline(in, field, ',')) {
        dims.push_back(std::stoi(field));
    }
    if (dims.empty()) {
        throw hamest::Error("dims list is empty");
    }
    return dims;
}

std::string fmt(double v) { return hamest::format_double(v); }

struct DistArgs {
    std::string h1, h2;
    bool no_extension = false;
    std::string out;
};

int run_dist(const DistArgs& args) {
    const HermitianOperator h1 = parse_operator_spec(args.h1);
    const HermitianOperator h2 = parse_operator_spec(args.h2);
    const double d0 = hamest::dist0(h1, h2);
    const double min_time = hamest::min_discrimination_time(h1, h2, !args.no_extension);
    std::cout << "dist0 = " << fmt(d0)
              << "; certain discrimination needs t >= pi/D0 = " << fmt(min_time)
              << " [bound pi/D0]\n";
    if (!args.out.empty()) {
        hamest::save_json_file(args.out, {{"d0", d0}, {"min_discrimination_time", min_time}});
    }
    return 0;
}

struct BoundArgs {
    std::string schedule;
    std::string h1, h2;
    double dt = 0.0;
    std::string out;
};

int run_bound(const BoundArgs& args) {
    std::vector<hamest::ScheduleSegment> segments;
    if (!args.schedule.empty()) {
        const nlohmann::json j = hamest::load_json_file(args.schedule);
        if (!j.is_object() || !j.contains("segments")) {
            throw hamest::Error("schedule file needs a \"segments\" array");
        }
        for (const auto& seg : j.at("segments")) {
            segments.push_back({seg.at("duration").get<double>(),
                                hamest::operator_from_json(seg.at("h1")),
                                hamest::operator_from_json(seg.at("h2"))});
        }
    } else {
        if (args.h1.empty() || args.h2.empty() || !(args.dt > 0.0)) {
            throw hamest::Error("bound needs --schedule or --h1/--h2/--dt");
        }
        segments.push_back({args.dt, parse_operator_spec(args.h1),
                            parse_operator_spec(args.h2)});
    }
    const hamest::HamiltonianSchedule schedule(std::move(segments));
    const hamest::TimeDependentBound bound = hamest::time_dependent_bound(schedule);
    std::cout << "integral dist0 dt = " << fmt(bound.integral) << " over t = "
              << fmt(schedule.total_duration()) << "; certain discrimination "
              << (bound.certain_discrimination_possible ? "possible" : "impossible")
              << " [bound: integral >= pi]\n";
    if (!args.out.empty()) {
        hamest::save_json_file(
            args.out,
            {{"integral", bound.integral},
             {"certain_discrimination_possible", bound.certain_discrimination_possible}});
    }
    return 0;
}

struct ProtocolArgs {
    std::string h1, h2;
    std::string layout = "2,1,1";
    int steps = 1000;
    double nu = 0.5;
    double time = -1.0;
    std::string protocol_in;
    std::string save_protocol;
    std::string out;
};

int run_protocol_cmd(const ProtocolArgs& args) {
    const HermitianOperator h1 = parse_operator_spec(args.h1);
    const HermitianOperator h2 = parse_operator_spec(args.h2);
    const hamest::SpaceLayout layout = parse_layout(args.layout);
    const hamest::DiscriminationProtocol protocol =
        !args.protocol_in.empty()
            ? hamest::protocol_from_json(hamest::load_json_file(args.protocol_in))
            : (args.time >= 0.0
                   ? hamest::saturation_protocol(h1, h2, layout, args.steps, args.nu,
                                                 args.time)
                   : hamest::saturation_protocol(h1, h2, layout, args.steps, args.nu));
    if (!args.save_protocol.empty()) {
        hamest::save_json_file(args.save_protocol, hamest::protocol_to_json(protocol));
    }
    const hamest::Trajectory traj = hamest::run_protocol(protocol, h1, h2);
    const double total_time = traj.times.back();
    const double final_theta = traj.thetas.back();
    const double bound_time = hamest::min_discrimination_time(h1, h2);
    std::cout << "final theta = " << fmt(final_theta) << " (target pi/2 = "
              << fmt(std::numbers::pi / 2) << ") after t = " << fmt(total_time)
              << " [bound pi/D0 = " << fmt(bound_time) << "]\n";
    if (!args.out.empty()) {
        std::vector<std::vector<double>> rows;
        rows.reserve(traj.times.size());
        for (std::size_t i = 0; i < traj.times.size(); ++i) {
            rows.push_back({traj.times[i], traj.overlaps[i].real(),
                            traj.overlaps[i].imag(), traj.thetas[i]});
        }
        hamest::write_csv_file(args.out, {"time", "re_overlap", "im_overlap", "theta"},
                               rows);
    }
    return 0;
}

struct EstimateArgs {
    std::string pair = "spin";
    std::string h1, h2;
    int grid = 20;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 0;
    int steps = 1000;
    std::string out;
};

int run_estimate(const EstimateArgs& args) {
    HermitianOperator h1 = hamest::pauli_z();
    HermitianOperator h2 = -1.0 * hamest::pauli_z();
    if (!args.h1.empty() || !args.h2.empty()) {
        if (args.h1.empty() || args.h2.empty()) {
            throw hamest::Error("estimate needs both --h1 and --h2 (or neither)");
        }
        h1 = parse_operator_spec(args.h1);
        h2 = parse_operator_spec(args.h2);
    } else if (args.pair != "spin") {
        throw hamest::Error("unknown named pair: " + args.pair);
    }
    if (args.grid < 2) {
        throw hamest::Error("estimate needs --grid >= 2");
    }
    const hamest::HypothesisPair pair(h1, h2);
    const double d0 = hamest::dist0(h1, h2);
    if (d0 <= 0.0) {
        throw hamest::DomainError("estimate: the two hypotheses are identical");
    }
    const double t_max = std::numbers::pi / d0;
    std::vector<std::vector<double>> rows;
    double worst_sigmas = 0.0;
    for (int k = 0; k < args.grid; ++k) {
        const double dt = t_max * k / (args.grid - 1);
        const hamest::EstimationSample sample = hamest::simulate_dichotomic_estimation(
            pair, dt, args.trials, args.seed + static_cast<std::uint64_t>(k), args.steps);
        if (sample.std_error > 0.0) {
            worst_sigmas = std::max(worst_sigmas,
                                    std::abs(sample.delta_h_empirical - sample.delta_h_closed) /
                                        sample.std_error);
        }
        rows.push_back({sample.delta_t, sample.delta_h_closed, sample.delta_h_empirical,
                        sample.std_error, sample.product,
                        sample.bound_satisfied ? 1.0 : 0.0});
    }
    std::cout << "estimation curve over " << args.grid << " points of [0, pi/D0 = "
              << fmt(t_max) << "]; worst MC deviation = " << fmt(worst_sigmas)
              << " sigma [bound max_t t*DH >= 1/4]\n";
    if (!args.out.empty()) {
        hamest::write_csv_file(args.out,
                               {"delta_t", "delta_h_closed", "delta_h_empirical", "stderr",
                                "product", "bound_025_ok"},
                               rows);
    }
    return 0;
}

struct ProductArgs {
    std::string h1, h2;
    double d0 = 0.0;
    int grid = 100;
    std::string out;
};

int run_product(const ProductArgs& args) {
    double d0 = args.d0;
    if (!args.h1.empty() && !args.h2.empty()) {
        d0 = hamest::dist0(parse_operator_spec(args.h1), parse_operator_spec(args.h2));
    }
    if (!(d0 > 0.0)) {
        throw hamest::DomainError("product: need --d0 > 0 or a distinguishable --h1/--h2 pair");
    }
    if (args.grid < 2) {
        throw hamest::Error("product needs --grid >= 2");
    }
    std::vector<double> grid;
    const double t_max = std::numbers::pi / d0;
    for (int k = 0; k < args.grid; ++k) {
        grid.push_back(t_max * k / (args.grid - 1));
    }
    const auto curve = hamest::uncertainty_product_curve(d0, grid);
    const hamest::ProductMaximum best = hamest::max_uncertainty_product(d0);
    std::cout << "max delta_t*DH = " << fmt(best.product_star) << " at delta_t = "
              << fmt(best.delta_t_star) << " (x* = " << fmt(best.x_star)
              << "); bound 1/4 " << (best.product_star >= 0.25 ? "satisfied" : "violated")
              << " [bound max_t t*DH >= 1/4]\n";
    if (!args.out.empty()) {
        std::vector<std::vector<double>> rows;
        for (const auto& report : curve) {
            rows.push_back({report.delta_t, report.delta_h, report.product,
                            report.bound_satisfied ? 1.0 : 0.0});
        }
        hamest::write_csv_file(args.out, {"delta_t", "delta_h", "product", "bound_025_ok"},
                               rows);
    }
    return 0;
}

struct SpyArgs {
    std::string h1 = "pauli-z";
    int level = 0;
    double dt = 1.0;
    std::string out;
};

int run_spy(const SpyArgs& args) {
    const HermitianOperator h0 = parse_operator_spec(args.h1);
    const hamest::UncertaintyReport report =
        hamest::spy_bound_experiment(h0, args.level, args.dt);
    const double eps = 2.0 * hamest::max_uncertainty_product(1.0).x_star / args.dt;
    std::cout << "spy shift eps = " << fmt(eps) << "; DeltaE = " << fmt(report.delta_h)
              << "; DeltaE*dt = " << fmt(report.product) << " "
              << (report.bound_satisfied ? ">=" : "<") << " 1/4 [bound dt*DeltaE >= 1/4]\n";
    if (!args.out.empty()) {
        hamest::save_json_file(args.out, {{"delta_t", report.delta_t},
                                          {"epsilon", eps},
                                          {"delta_e", report.delta_h},
                                          {"product", report.product},
                                          {"bound_satisfied", report.bound_satisfied}});
    }
    return 0;
}

struct DecayArgs {
    double gamma = 1.0;
    double e0 = 0.0;
    std::uint64_t trials = 1000000;
    std::uint64_t seed = 0;
    std::string out;
    std::string stats_out;
    std::string table_out;
};

int run_decay(const DecayArgs& args) {
    const hamest::DecayModel model(args.gamma, args.e0);
    const hamest::DecayStats stats =
        hamest::decay_measurement_simulation(model, args.trials, args.seed);
    std::cout << "gamma*mean_time = " << fmt(stats.mean_time * args.gamma)
              << " (lifetime-linewidth product = 1 by construction); FWHM = "
              << fmt(stats.fwhm_estimate) << " (expected " << fmt(stats.fwhm_expected)
              << "); truncated DeltaE = ";
    for (std::size_t i = 0; i < stats.truncated.size(); ++i) {
        std::cout << (i ? ", " : "") << fmt(stats.truncated[i].monte_carlo) << " @ "
                  << fmt(stats.truncated[i].cutoff);
    }
    std::cout << " (unbounded: full moment diverges)\n";
    if (!args.out.empty()) {
        nlohmann::json truncated = nlohmann::json::array();
        for (const auto& t : stats.truncated) {
            truncated.push_back({{"cutoff", t.cutoff},
                                 {"monte_carlo", t.monte_carlo},
                                 {"closed_form", t.closed_form}});
        }
        hamest::save_json_file(args.out,
                               {{"mean_time", stats.mean_time},
                                {"mean_time_expected", stats.mean_time_expected},
                                {"fwhm_estimate", stats.fwhm_estimate},
                                {"fwhm_expected", stats.fwhm_expected},
                                {"truncated", std::move(truncated)},
                                {"trials", stats.trials}});
    }
    if (!args.stats_out.empty()) {
        hamest::write_csv_file(args.stats_out, {"mean_time", "fwhm"},
                               {{stats.mean_time, stats.fwhm_estimate}});
    }
    if (!args.table_out.empty()) {
        std::vector<std::vector<double>> rows;
        for (const auto& t : stats.truncated) {
            rows.push_back({t.cutoff, t.monte_carlo});
        }
        hamest::write_csv_file(args.table_out, {"lambda", "truncated_dE"}, rows);
    }
    return 0;
}

struct ScenarioArgs {
    std::string name;
    double mu_b0 = 1.0;
    double phi1 = 1.0;
    double phi2 = 0.0;
    std::string h1 = "zero:2";
    double energy = 1.0;
    double threshold = 0.9;
    std::string dims = "4..256";
    double delta_e = 1.0;
    int k0 = 0;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 0;
    std::string out;
    std::string sweep_out;
};

int run_scenario(const ScenarioArgs& args) {
    hamest::ScenarioResult result;
    std::string bound_note;
    if (args.name == "spin-fields") {
        result = hamest::scenario_spin_fields(args.mu_b0);
        bound_note = "pi/D0";
    } else if (args.name == "phase-box") {
        result = hamest::scenario_phase_box(args.phi1, args.phi2,
                                            parse_operator_spec(args.h1));
        bound_note = "pi/D0";
    } else if (args.name == "farhi-gutmann") {
        result = hamest::scenario_farhi_gutmann(args.energy, parse_dims(args.dims),
                                                args.threshold);
        bound_note = "sqrt(d)";
    } else if (args.name == "shared-eigenbasis") {
        const std::vector<int> dims = parse_dims(args.dims);
        if (dims.size() != 1) {
            throw hamest::Error("shared-eigenbasis takes a single --dims value");
        }
        std::vector<double> e1(static_cast<std::size_t>(dims[0]));
        for (std::size_t k = 0; k < e1.size(); ++k) {
            e1[k] = static_cast<double>(k);
        }
        std::vector<double> e2 = e1;
        if (args.k0 < 0 || args.k0 >= dims[0]) {
            throw hamest::Error("--k0 out of range for --dims");
        }
        e2[args.k0] += args.delta_e;
        result = hamest::scenario_shared_eigenbasis(e1, e2, args.k0, args.trials, args.seed);
        bound_note = "pi/(dim*dE)";
    } else {
        throw hamest::Error("unknown scenario: " + args.name +
                            " (spin-fields, phase-box, farhi-gutmann, shared-eigenbasis)");
    }
    std::cout << "scenario " << result.name << ": " << (result.passed ? "PASS" : "FAIL")
              << " [bound " << bound_note << "]";
    for (const auto& [key, value] : result.metrics) {
        std::cout << " " << key << "=" << fmt(value);
    }
    std::cout << "\n";
    if (!args.out.empty()) {
        hamest::save_json_file(args.out, hamest::scenario_to_json(result));
    }
    if (!args.sweep_out.empty()) {
        hamest::write_csv_file(args.sweep_out, result.sweep_columns, result.sweep_rows);
    }
    return result.passed ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hamest: Hamiltonian discrimination and estimation experiments"};
    app.require_subcommand(1);

    DistArgs dist_args;
    CLI::App* dist = app.add_subcommand("dist", "Distance D0 and the minimum "
                                                "discrimination time pi/D0");
    dist->add_option("--h1", dist_args.h1, "first Hamiltonian (file or generator)")
        ->required();
    dist->add_option("--h2", dist_args.h2, "second Hamiltonian (file or generator)")
        ->required();
    dist->add_flag("--no-extension", dist_args.no_extension,
                   "forbid the no-box level (bound becomes pi/spread)");
    dist->add_option("--out", dist_args.out, "write the report as JSON");

    BoundArgs bound_args;
    CLI::App* bound = app.add_subcommand("bound", "Time-dependent discrimination bound "
                                                  "integral dist0 dt >= pi");
    bound->add_option("--schedule", bound_args.schedule, "piecewise schedule JSON file");
    bound->add_option("--h1", bound_args.h1, "first Hamiltonian (constant schedule)");
    bound->add_option("--h2", bound_args.h2, "second Hamiltonian (constant schedule)");
    bound->add_option("--dt", bound_args.dt, "duration of the constant schedule");
    bound->add_option("--out", bound_args.out, "write the report as JSON");

    ProtocolArgs protocol_args;
    CLI::App* protocol = app.add_subcommand("protocol", "Build and run the saturation "
                                                        "protocol; write the trajectory");
    protocol->add_option("--h1", protocol_args.h1, "first Hamiltonian")->required();
    protocol->add_option("--h2", protocol_args.h2, "second Hamiltonian")->required();
    protocol->add_option("--layout", protocol_args.layout, "layout BOX,NOBOX,ANCILLA");
    protocol->add_option("--steps", protocol_args.steps, "number of protocol steps");
    protocol->add_option("--nu", protocol_args.nu, "control strength nu (default 1/2)");
    protocol->add_option("--time", protocol_args.time,
                         "total time (default: the bound time pi/D0)");
    protocol->add_option("--protocol", protocol_args.protocol_in,
                         "run a protocol loaded from JSON instead of building one");
    protocol->add_option("--save-protocol", protocol_args.save_protocol,
                         "write the protocol itself as JSON");
    protocol->add_option("--out", protocol_args.out, "trajectory CSV path");

    EstimateArgs estimate_args;
    CLI::App* estimate = app.add_subcommand("estimate", "Monte-Carlo dichotomic estimation "
                                                        "curve vs the closed form");
    estimate->add_option("--pair", estimate_args.pair, "named pair (spin)");
    estimate->add_option("--h1", estimate_args.h1, "first Hamiltonian (overrides --pair)");
    estimate->add_option("--h2", estimate_args.h2, "second Hamiltonian (overrides --pair)");
    estimate->add_option("--grid", estimate_args.grid, "number of delta_t grid points");
    estimate->add_option("--trials", estimate_args.trials, "Monte-Carlo trials per point");
    estimate->add_option("--seed", estimate_args.seed, "RNG seed (default 0)");
    estimate->add_option("--steps", estimate_args.steps, "protocol steps per point");
    estimate->add_option("--out", estimate_args.out, "CSV output path");

    ProductArgs product_args;
    CLI::App* product = app.add_subcommand("product", "Uncertainty product curve "
                                                      "delta_t * DH and its maximum");
    product->add_option("--d0", product_args.d0, "pair distance D0");
    product->add_option("--h1", product_args.h1, "first Hamiltonian (alternative to --d0)");
    product->add_option("--h2", product_args.h2, "second Hamiltonian");
    product->add_option("--grid", product_args.grid, "number of delta_t grid points");
    product->add_option("--out", product_args.out, "CSV output path");

    SpyArgs spy_args;
    CLI::App* spy = app.add_subcommand("spy", "Adversarial shift: energy accuracy times "
                                              "time stays above 1/4");
    spy->add_option("--h1", spy_args.h1, "base Hamiltonian whose level is estimated");
    spy->add_option("--level", spy_args.level, "level index being estimated");
    spy->add_option("--dt", spy_args.dt, "estimation time");
    spy->add_option("--out", spy_args.out, "write the report as JSON");

    DecayArgs decay_args;
    CLI::App* decay = app.add_subcommand("decay", "Exponential decay / Lorentzian line "
                                                  "sampling statistics");
    decay->add_option("--gamma", decay_args.gamma, "linewidth gamma");
    decay->add_option("--e0", decay_args.e0, "line centre");
    decay->add_option("--trials", decay_args.trials, "number of sampled decays");
    decay->add_option("--seed", decay_args.seed, "RNG seed (default 0)");
    decay->add_option("--out", decay_args.out, "write the statistics as JSON");
    decay->add_option("--stats-out", decay_args.stats_out,
                      "trial statistics CSV (mean_time, fwhm)");
    decay->add_option("--table-out", decay_args.table_out,
                      "cutoff table CSV (lambda, truncated_dE)");

    ScenarioArgs scenario_args;
    CLI::App* scenario = app.add_subcommand("scenario", "Worked end-to-end scenarios");
    scenario->add_option("--name", scenario_args.name,
                         "spin-fields | phase-box | farhi-gutmann | shared-eigenbasis")
        ->required();
    scenario->add_option("--mu-b0", scenario_args.mu_b0, "field strength (spin-fields)");
    scenario->add_option("--phi1", scenario_args.phi1, "first potential (phase-box)");
    scenario->add_option("--phi2", scenario_args.phi2, "second potential (phase-box)");
    scenario->add_option("--h1", scenario_args.h1, "box Hamiltonian (phase-box)");
    scenario->add_option("--energy", scenario_args.energy, "drive energy (farhi-gutmann)");
    scenario->add_option("--threshold", scenario_args.threshold,
                         "identification probability threshold (farhi-gutmann)");
    scenario->add_option("--dims", scenario_args.dims,
                         "dimensions: LO..HI doubling range or comma list");
    scenario->add_option("--delta-e", scenario_args.delta_e,
                         "level shift (shared-eigenbasis)");
    scenario->add_option("--k0", scenario_args.k0, "shifted level (shared-eigenbasis)");
    scenario->add_option("--trials", scenario_args.trials, "Monte-Carlo trials");
    scenario->add_option("--seed", scenario_args.seed, "RNG seed (default 0)");
    scenario->add_option("--out", scenario_args.out, "scenario JSON output path");
    scenario->add_option("--sweep-out", scenario_args.sweep_out, "sweep CSV output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (dist->parsed()) {
            return run_dist(dist_args);
        }
        if (bound->parsed()) {
            return run_bound(bound_args);
        }
        if (protocol->parsed()) {
            return run_protocol_cmd(protocol_args);
        }
        if (estimate->parsed()) {
            return run_estimate(estimate_args);
        }
        if (product->parsed()) {
            return run_product(product_args);
        }
        if (spy->parsed()) {
            return run_spy(spy_args);
        }
        if (decay->parsed()) {
            return run_decay(decay_args);
        }
        if (scenario->parsed()) {
            return run_scenario(scenario_args);
        }
    } catch (const hamest::DimensionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const hamest::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const hamest::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
