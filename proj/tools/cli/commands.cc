#include "commands.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <stdexcept>
#include <system_error>
#include <unistd.h>

#include "qcap/bounds.h"
#include "qcap/errors.h"

namespace qcap::cli {

namespace {

using Json = nlohmann::ordered_json;

// Round-trips through %.12g so the serializer prints at most 12 digits.
double rounded(double v) {
    return std::strtod(format_number(v).c_str(), nullptr);
}

void require_finite(double v, const char *name) {
    if (!std::isfinite(v)) {
        throw ParameterError(std::string(name) + " must be finite");
    }
}

void validate_optimizer(const OptimizerConfig &cfg) {
    if (!(cfg.tol > 0.0)) {
        throw ParameterError("--tol must be positive");
    }
    if (cfg.max_iter < 1) {
        throw ParameterError("--max-iter must be at least 1");
    }
    if (cfg.starts < 1) {
        throw ParameterError("--starts must be at least 1");
    }
}

void validate_params(const ChannelParamsXYZ &p) {
    require_finite(p.x, "x");
    require_finite(p.y, "y");
    require_finite(p.z, "z");
}

std::string single_line(std::string s) {
    for (auto &c : s) {
        if (c == '\n' || c == '\r') {
            c = ' ';
        }
    }
    return s;
}

}  // namespace

OutputFormat parse_format(const std::string &name) {
    if (name == "csv") {
        return OutputFormat::Csv;
    }
    if (name == "json") {
        return OutputFormat::Json;
    }
    if (name == "table") {
        return OutputFormat::Table;
    }
    throw ParameterError("unknown format '" + name + "' (expected csv, json or table)");
}

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v + 0.0);
    return buf;
}

void write_file_atomically(const std::string &path, const std::string &contents) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) {
            throw ParameterError("cannot open " + tmp.string() + " for writing");
        }
        f << contents;
        f.flush();
        if (!f) {
            f.close();
            std::error_code ec;
            fs::remove(tmp, ec);
            throw ParameterError("failed writing " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw ParameterError("cannot rename output into " + path);
    }
}

int run_guarded(const std::function<int()> &body, std::ostream &err) {
    try {
        return body();
    } catch (const NumericalError &e) {
        err << "numerical failure: " << single_line(e.what()) << "\n";
        return kExitNumerical;
    } catch (const ConsistencyError &e) {
        err << "error: " << single_line(e.what()) << "\n";
        return kExitBadInput;
    } catch (const nlohmann::json::exception &e) {
        err << "error: invalid channel JSON: " << single_line(e.what()) << "\n";
        return kExitBadInput;
    } catch (const std::invalid_argument &e) {
        err << "error: " << single_line(e.what()) << "\n";
        return kExitBadInput;
    } catch (const std::exception &e) {
        err << "internal failure: " << single_line(e.what()) << "\n";
        return kExitNumerical;
    }
}

int cmd_capacity(const CapacityOptions &opts, std::ostream &out, std::ostream &err) {
    return run_guarded(
        [&] {
            validate_params(opts.params);
            validate_optimizer(opts.optimizer);
            require_degradable_regime(opts.params);
            const CapacityResult r = capacity_diagonal_program(opts.params, opts.optimizer);
            Json j;
            j["capacity"] = rounded(r.value);
            Json argmax = Json::array();
            for (double p : r.argmax.probs()) {
                argmax.push_back(rounded(p));
            }
            j["argmax"] = std::move(argmax);
            j["converged"] = r.converged;
            out << j.dump() << "\n";
            return int{kExitOk};
        },
        err);
}

int cmd_curve(const CurveOptions &opts, std::ostream &out, std::ostream &err) {
    return run_guarded(
        [&] {
            const CurveKind kind = parse_curve_kind(opts.kind);
            validate_optimizer(opts.optimizer);
            SweepGrid grid = default_grid(kind, opts.steps);
            if (opts.pmin) {
                require_finite(*opts.pmin, "--pmin");
                grid.min = *opts.pmin;
            }
            if (opts.pmax) {
                require_finite(*opts.pmax, "--pmax");
                grid.max = *opts.pmax;
            }
            const std::string csv = sweep_curve(kind, grid, opts.optimizer).to_csv();
            if (opts.out_path.empty()) {
                out << csv;
            } else {
                write_file_atomically(opts.out_path, csv);
            }
            return int{kExitOk};
        },
        err);
}

int cmd_twirl(const TwirlOptions &opts, std::ostream &out, std::ostream &err) {
    return run_guarded(
        [&] {
            std::optional<ParsedChannel> parsed;
            if (!opts.channel_json.empty()) {
                parsed.emplace(parse_channel_json(opts.channel_json));
            } else {
                validate_params(opts.params);
                if (auto v = channel_params_violation(opts.params)) {
                    throw ParameterError(*v);
                }
                parsed.emplace(ParsedChannel{make_phi_xyz(opts.params), 2, opts.params});
            }
            if (opts.local && parsed->num_qubits != 2) {
                throw ShapeError("--local needs a two-qubit channel");
            }
            PauliChannel twirled = pauli_twirl(parsed->channel, parsed->num_qubits);
            if (opts.local) {
                twirled = local_clifford_twirl(twirled);
            }
            switch (opts.format) {
                case OutputFormat::Table:
                    // Zero-probability strings are omitted from the table.
                    out << "pauli  probability  weight\n";
                    for (const auto &[p, q] : twirled.probs()) {
                        if (q > 0.0) {
                            out << p.to_text() << "  " << format_number(q) << "  " << p.weight() << "\n";
                        }
                    }
                    break;
                case OutputFormat::Csv:
                    out << "pauli,probability,weight\n";
                    for (const auto &[p, q] : twirled.probs()) {
                        out << p.to_text() << "," << format_number(q) << "," << p.weight() << "\n";
                    }
                    break;
                case OutputFormat::Json: {
                    Json j;
                    Json probs = Json::object();
                    for (const auto &[p, q] : twirled.probs()) {
                        probs[p.to_text()] = rounded(q);
                    }
                    j["probabilities"] = std::move(probs);
                    Json masses = Json::array();
                    for (double m : twirled.weight_class_masses()) {
                        masses.push_back(rounded(m));
                    }
                    j["weight_class_masses"] = std::move(masses);
                    if (parsed->xyz) {
                        Json printed = Json::array();
                        for (double q : printed_symmetric_coefficients(*parsed->xyz)) {
                            printed.push_back(rounded(q));
                        }
                        j["printed_coefficients"] = std::move(printed);
                    }
                    out << j.dump() << "\n";
                    break;
                }
            }
            return int{kExitOk};
        },
        err);
}

int cmd_verify(const VerifyOptions &opts, std::ostream &out, std::ostream &err) {
    return run_guarded(
        [&] {
            const auto results = run_verification(opts);
            const CheckResult *first_failure = nullptr;
            for (const auto &r : results) {
                out << (r.passed ? "PASS " : "FAIL ") << r.name << " error=" << format_number(r.error)
                    << " tol=" << format_number(r.tolerance) << "\n";
                if (!r.passed && first_failure == nullptr) {
                    first_failure = &r;
                }
            }
            if (first_failure != nullptr) {
                err << "verification failed: first failing check: " << first_failure->name << "\n";
                return int{kExitVerifyFailed};
            }
            return int{kExitOk};
        },
        err);
}

ParsedChannel parse_channel_json(const std::string &text) {
    const Json j = Json::parse(text);
    const std::string type = j.at("type").get<std::string>();
    const Json &params = j.at("params");
    if (type == "phi_xyz") {
        const ChannelParamsXYZ p{params.at("x").get<double>(), params.at("y").get<double>(),
                                 params.at("z").get<double>()};
        validate_params(p);
        return {make_phi_xyz(p), 2, p};
    }
    if (type == "pauli") {
        PauliDistribution dist;
        std::optional<unsigned> m;
        for (const auto &[key, value] : params.at("probs").items()) {
            const PauliString s = PauliString::from_text(key);
            if (m && *m != s.num_qubits) {
                throw ShapeError("Pauli strings of different lengths in one channel");
            }
            m = s.num_qubits;
            dist[s] = value.get<double>();
        }
        if (!m) {
            throw ParameterError("pauli channel needs at least one probability");
        }
        return {make_pauli_channel(dist), *m, std::nullopt};
    }
    if (type == "depolarizing") {
        const unsigned m = params.value("num_qubits", 2u);
        if (m < 1 || m > 4) {
            throw ParameterError("depolarizing channel needs 1 <= num_qubits <= 4");
        }
        return {make_depolarizing(params.at("p").get<double>(), m), m, std::nullopt};
    }
    throw ParameterError("unknown channel type '" + type + "' (expected phi_xyz, pauli or depolarizing)");
}

}  // namespace qcap::cli
