#include "baswarm/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "baswarm/design.hpp"
#include "baswarm/errors.hpp"
#include "baswarm/scenario.hpp"

namespace baswarm {

namespace {

namespace fs = std::filesystem;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ValidationError("config", "cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out)
        throw Error("cannot write '" + path.string() + "'");
}

void write_outputs(const ScenarioResult& result, const std::string& out_dir) {
    const fs::path dir(out_dir);
    fs::create_directories(dir);
    write_file(dir / "trace.csv", emit_trace_csv(result.trace));
    write_file(dir / "concentrations.csv", emit_concentrations_csv(result.maps));
    const std::string summary = format_summary(result);
    write_file(dir / "summary.txt", summary);
    std::cout << summary;
}

std::vector<double> parse_point(const std::string& text) {
    std::vector<double> point;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string token = text.substr(pos, comma - pos);
        try {
            std::size_t used = 0;
            point.push_back(std::stod(token, &used));
            if (used != token.size())
                throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw ValidationError("--at", "'" + token + "' is not a number");
        }
        pos = comma + 1;
    }
    return point;
}

std::string format_type(int sign, const Cell& cell) {
    std::string out = sign > 0 ? "+1" : "-1";
    for (int k : cell)
        out += "," + std::to_string(k);
    return out;
}

std::string join_ints(const std::vector<int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(values[i]);
    }
    return out;
}

std::string join_numbers(const std::vector<double>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += format_number(values[i]);
    }
    return out;
}

void cmd_simulate(const std::string& config_path, const std::string& out_dir) {
    write_outputs(run_scenario(load_config(read_file(config_path))), out_dir);
}

void cmd_design(const std::string& config_path, double epsilon, int samples) {
    const ScenarioConfig config = load_config(read_file(config_path));
    const std::vector<std::array<double, 2>> bounds = build_partition(config).bounds();
    const TargetFn f = make_function(config.program.front().target, "program[0].target");
    DesignProblem problem;
    problem.bounds = bounds;
    problem.epsilon = epsilon;
    problem.grad_norms = estimate_grad_norms(f, bounds, samples);
    const DesignSolution solution = near_minimal_types(problem);
    const DesignReport report = verify_design(f, problem, solution, samples);
    std::cout << "grad_norms=" << join_numbers(problem.grad_norms) << "\n"
              << "q=" << join_ints(solution.q) << "\n"
              << "h=" << join_numbers(solution.h) << "\n"
              << "n_types=" << solution.n_types << "\n"
              << "bound=" << format_number(solution.bound_value) << "\n"
              << "measured_sup_error=" << format_number(report.measured_sup_error) << "\n"
              << "epsilon=" << format_number(epsilon) << "\n"
              << "passed=" << (report.passed ? "yes" : "no") << "\n";
}

void cmd_approx(const std::string& config_path, const std::string& at_text) {
    const ScenarioConfig config = load_config(read_file(config_path));
    const BasisConfig cfg = build_basis_config(config);
    const ConcentrationMap map =
        program(make_function(config.program.front().target, "program[0].target"), cfg);
    const std::vector<double> point = parse_point(at_text);
    const double value = approximate(map, cfg, point);
    const Cell cell = cfg.partition.cell_index(point);
    const double net = map.net(cell);
    std::cout << "approximate: " << format_number(value) << "\n"
              << "active: " << (net == 0.0 ? "none" : format_type(net > 0 ? +1 : -1, cell))
              << "\n";
}

void cmd_paper_example(const std::string& input_kind, const std::string& out_dir) {
    const ExampleInput kind =
        input_kind == "ramp" ? ExampleInput::Ramp : ExampleInput::Step;
    write_outputs(run_paper_example(kind), out_dir);
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"function computation by concentration-programmed basis-agent swarms"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = ".";
    std::string at_text;
    std::string input_kind;
    double epsilon = 0.0;
    int samples = 1001;

    CLI::App* sim = app.add_subcommand("simulate", "run a scenario and write CSV outputs");
    sim->add_option("config", config_path, "scenario JSON file")->required();
    sim->add_option("--out", out_dir, "output directory (default: .)");

    CLI::App* design =
        app.add_subcommand("design", "size the smallest grid meeting an accuracy target");
    design->add_option("config", config_path, "scenario JSON file")->required();
    design->add_option("--epsilon", epsilon, "sup-error bound to meet")->required();
    design->add_option("--samples", samples, "samples per dimension (default: 1001)");

    CLI::App* approx =
        app.add_subcommand("approx", "evaluate the programmed approximation at a point");
    approx->add_option("config", config_path, "scenario JSON file")->required();
    approx->add_option("--at", at_text, "comma-separated input components")->required();

    CLI::App* paper = app.add_subcommand(
        "paper-example", "run the bundled three-function demo and write CSV outputs");
    paper->add_option("--input", input_kind, "input waveform")
        ->required()
        ->check(CLI::IsMember({"ramp", "step"}));
    paper->add_option("--out", out_dir, "output directory (default: .)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (sim->parsed())
            cmd_simulate(config_path, out_dir);
        else if (design->parsed())
            cmd_design(config_path, epsilon, samples);
        else if (approx->parsed())
            cmd_approx(config_path, at_text);
        else if (paper->parsed())
            cmd_paper_example(input_kind, out_dir);
        return 0;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const OutOfDomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

int run_cli(int argc, const char* const argv[]) {
    std::vector<std::string> args;
    args.reserve(argc > 0 ? static_cast<std::size_t>(argc - 1) : 0);
    for (int i = 1; i < argc; ++i)
        args.emplace_back(argv[i]);
    return run_cli(args);
}

}  // namespace baswarm
