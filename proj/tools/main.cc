#include <CLI11.hpp>
#include <iostream>

#include "cli/commands.h"

namespace {

void add_optimizer_flags(CLI::App *cmd, qcap::OptimizerConfig &cfg) {
    cmd->add_option("--tol", cfg.tol, "Convergence tolerance")->capture_default_str();
    cmd->add_option("--starts", cfg.starts, "Number of optimizer starts")->capture_default_str();
    cmd->add_option("--max-iter", cfg.max_iter, "Iteration cap per start")->capture_default_str();
    cmd->add_option("--seed", cfg.seed, "Seed for the random starts")->capture_default_str();
}

}  // namespace

int main(int argc, char **argv) {
    namespace cli = qcap::cli;
    CLI::App app{"Capacity bounds for two-qubit channels"};
    app.require_subcommand(1);

    cli::CapacityOptions cap;
    auto *capacity = app.add_subcommand("capacity", "Quantum capacity of a degradable Phi_{x,y,z}");
    capacity->add_option("--x", cap.params.x)->required();
    capacity->add_option("--y", cap.params.y)->required();
    capacity->add_option("--z", cap.params.z)->required();
    add_optimizer_flags(capacity, cap.optimizer);

    cli::CurveOptions curve;
    double pmin = 0.0;
    double pmax = 0.0;
    auto *curve_cmd = app.add_subcommand("curve", "Write a bound or capacity curve as CSV");
    curve_cmd->add_option("kind", curve.kind, "dep4, ad or symmetric")->required();
    auto *pmin_opt = curve_cmd->add_option("--pmin", pmin, "Grid start (defaults per kind)");
    auto *pmax_opt = curve_cmd->add_option("--pmax", pmax, "Grid end (defaults per kind)");
    curve_cmd->add_option("--steps", curve.steps, "Number of grid points")->capture_default_str();
    curve_cmd->add_option("--out", curve.out_path, "Output file (default: standard output)");
    add_optimizer_flags(curve_cmd, curve.optimizer);

    cli::TwirlOptions tw;
    std::string twirl_format = "table";
    auto *twirl = app.add_subcommand("twirl", "Pauli twirl probability table");
    twirl->add_option("--x", tw.params.x);
    twirl->add_option("--y", tw.params.y);
    twirl->add_option("--z", tw.params.z);
    twirl->add_option("--channel", tw.channel_json, "Channel as JSON instead of --x/--y/--z");
    twirl->add_flag("--local", tw.local, "Follow with the localized Clifford twirl");
    twirl->add_option("--format", twirl_format, "table, csv or json")->capture_default_str();

    cli::VerifyOptions ver;
    auto *verify = app.add_subcommand("verify", "Run the oracle and property suite");
    verify->add_option("--seed", ver.seed)->capture_default_str();
    verify->add_option("--tolerance-scale", ver.tolerance_scale)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kExitBadInput;
    }

    if (*capacity) {
        return cli::cmd_capacity(cap, std::cout, std::cerr);
    }
    if (*curve_cmd) {
        if (*pmin_opt) {
            curve.pmin = pmin;
        }
        if (*pmax_opt) {
            curve.pmax = pmax;
        }
        return cli::cmd_curve(curve, std::cout, std::cerr);
    }
    if (*twirl) {
        const int code = cli::run_guarded(
            [&] {
                tw.format = cli::parse_format(twirl_format);
                return 0;
            },
            std::cerr);
        if (code != 0) {
            return code;
        }
        return cli::cmd_twirl(tw, std::cout, std::cerr);
    }
    return cli::cmd_verify(ver, std::cout, std::cerr);
}
