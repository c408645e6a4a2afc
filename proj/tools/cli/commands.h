#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qcap/capacity.h"
#include "qcap/twirl.h"

namespace qcap::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitVerifyFailed = 1,
    kExitBadInput = 2,
    kExitNumerical = 3,
};

enum class OutputFormat { Csv, Json, Table };

OutputFormat parse_format(const std::string &name);

struct CapacityOptions {
    ChannelParamsXYZ params;
    OptimizerConfig optimizer;
};

struct CurveOptions {
    std::string kind;
    std::optional<double> pmin;
    std::optional<double> pmax;
    int steps = 2001;
    std::string out_path;  // empty: standard output
    OptimizerConfig optimizer;
};

struct TwirlOptions {
    ChannelParamsXYZ params;
    std::string channel_json;  // overrides params when non-empty
    bool local = false;
    OutputFormat format = OutputFormat::Table;
};

struct VerifyOptions {
    std::uint64_t seed = 1;
    // Test hook: every tolerance is multiplied by this before comparison.
    double tolerance_scale = 1.0;
};

/// Each command validates its inputs before computing, maps exceptions to
/// exit codes and writes a single-line diagnostic to `err` on failure.
int cmd_capacity(const CapacityOptions &opts, std::ostream &out, std::ostream &err);
int cmd_curve(const CurveOptions &opts, std::ostream &out, std::ostream &err);
int cmd_twirl(const TwirlOptions &opts, std::ostream &out, std::ostream &err);
int cmd_verify(const VerifyOptions &opts, std::ostream &out, std::ostream &err);

/// Runs `body`, translating qcap and standard exceptions to exit codes.
int run_guarded(const std::function<int()> &body, std::ostream &err);

/// %.12g, with negative zero printed as 0.
std::string format_number(double v);

/// Writes `contents` to a sibling temporary file and renames it over `path`.
void write_file_atomically(const std::string &path, const std::string &contents);

/// Channel description:
///   {"type": "phi_xyz", "params": {"x": .., "y": .., "z": ..}}
///   {"type": "pauli", "params": {"probs": {"II": .., "XZ": ..}}}
///   {"type": "depolarizing", "params": {"p": .., "num_qubits": 2}}
struct ParsedChannel {
    KrausChannel channel;
    unsigned num_qubits;
    std::optional<ChannelParamsXYZ> xyz;
};

ParsedChannel parse_channel_json(const std::string &text);

struct CheckResult {
    std::string name;
    double error = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

/// The oracle and property checks run by `verify`.
std::vector<CheckResult> run_verification(const VerifyOptions &opts);

}  // namespace qcap::cli
