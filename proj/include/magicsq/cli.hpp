// Copyright 2026 The magicsq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "magicsq/channels.hpp"
#include "magicsq/csv.hpp"
#include "magicsq/experiments.hpp"
#include "magicsq/fidelity.hpp"
#include "magicsq/game.hpp"

namespace magicsq::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kUsageError = 2,
};

struct CliConfig {
    std::string command;
    std::string channel = "all";
    std::optional<double> alpha;
    std::optional<int> row;
    std::optional<int> col;
    int points = 101;
    int qubits = 4;
    std::string output = "-";
    double tolerance = 1e-7;
    double target = kClassicalLimit;
};

namespace detail {

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

inline std::vector<ChannelKind> resolve_channels(const std::string &name) {
    if (name == "all") {
        return {kAllChannels.begin(), kAllChannels.end()};
    }
    if (auto k = parse_channel(name)) {
        return {*k};
    }
    throw UsageError("unknown channel '" + name + "'");
}

inline ChannelKind single_channel(const CliConfig &cfg) {
    auto kinds = resolve_channels(cfg.channel);
    if (kinds.size() != 1) {
        throw UsageError(cfg.command + " needs a single --channel, not 'all'");
    }
    return kinds.front();
}

inline int dispatch(const CliConfig &cfg, std::ostream &out) {
    if (cfg.command == "simulate") {
        const ChannelKind kind = single_channel(cfg);
        if (!cfg.alpha) {
            throw UsageError("simulate requires --alpha");
        }
        if (cfg.row.has_value() != cfg.col.has_value()) {
            throw UsageError("simulate takes both --row and --col, or neither for the mean");
        }
        const ChannelSpec spec(kind, *cfg.alpha);
        const double p = cfg.row ? success_probability(GameInput(*cfg.row, *cfg.col), spec) : mean_success(spec);
        out << csv::number(p) << '\n';
        return kOk;
    }
    if (cfg.command == "sweep") {
        const auto kinds = resolve_channels(cfg.channel);
        const bool multi = kinds.size() > 1;
        bool header = true;
        for (ChannelKind k : kinds) {
            csv::write_sweep(out, sweep(k, cfg.points), header, multi);
            header = false;
        }
        return kOk;
    }
    if (cfg.command == "parametric") {
        const auto kinds = resolve_channels(cfg.channel);
        const bool multi = kinds.size() > 1;
        bool header = true;
        for (ChannelKind k : kinds) {
            csv::write_parametric(out, k, parametric_dataset(k, cfg.points), header, multi);
            header = false;
        }
        return kOk;
    }
    if (cfg.command == "fidelity") {
        const auto kinds = resolve_channels(cfg.channel);
        if (cfg.alpha) {
            if (kinds.size() != 1) {
                throw UsageError("fidelity --alpha needs a single --channel");
            }
            out << csv::number(channel_fidelity(ChannelSpec(kinds.front(), *cfg.alpha), cfg.qubits)) << '\n';
            return kOk;
        }
        const bool multi = kinds.size() > 1;
        out << (multi ? "channel," : "") << "alpha,delta1,delta4\n";
        for (ChannelKind k : kinds) {
            for (double a : alpha_grid(cfg.points)) {
                const ChannelSpec spec(k, a);
                if (multi) {
                    out << channel_name(k) << ',';
                }
                out << csv::number(a) << ',' << csv::number(channel_fidelity(spec, 1)) << ','
                    << csv::number(channel_fidelity(spec, 4)) << '\n';
            }
        }
        return kOk;
    }
    if (cfg.command == "verify") {
        const VerificationReport report = verify_against_paper(cfg.tolerance);
        csv::write_verification(out, report);
        return report.all_passed() ? kOk : kVerificationFailed;
    }
    if (cfg.command == "threshold") {
        const auto kinds = resolve_channels(cfg.channel);
        auto fmt = [](const std::optional<double> &a) { return a ? csv::number(*a) : std::string("none"); };
        if (kinds.size() == 1) {
            out << fmt(threshold_crossing(kinds.front(), cfg.target, cfg.points)) << '\n';
            return kOk;
        }
        out << "channel,alpha\n";
        for (ChannelKind k : kinds) {
            out << channel_name(k) << ',' << fmt(threshold_crossing(k, cfg.target, cfg.points)) << '\n';
        }
        return kOk;
    }
    throw UsageError("unknown command '" + cfg.command + "'");
}

}  // namespace detail

/// Parses `args` (without the program name), runs one command and writes its
/// data to `out` (or the --output file) and diagnostics to `err`.
inline int run(const std::vector<std::string> &args, std::ostream &out = std::cout, std::ostream &err = std::cerr) {
    CliConfig cfg;
    CLI::App app{"Magic square game under single-qubit noise", "magicsq"};
    app.require_subcommand(1);

    auto add_channel = [&](CLI::App *sub, bool required) {
        auto *opt = sub->add_option("--channel", cfg.channel, "channel name or 'all'");
        if (required) {
            opt->required();
        }
    };
    auto add_output = [&](CLI::App *sub) { sub->add_option("-o,--output", cfg.output, "output file, '-' for stdout"); };

    auto *simulate = app.add_subcommand("simulate", "success probability for one input, or the mean");
    add_channel(simulate, true);
    simulate->add_option("--alpha", cfg.alpha, "noise level in [0,1]")->required();
    simulate->add_option("--row", cfg.row, "row 1..3");
    simulate->add_option("--col", cfg.col, "column 1..3");
    add_output(simulate);

    auto *sweep_cmd = app.add_subcommand("sweep", "per-input and mean success over an alpha grid");
    add_channel(sweep_cmd, false);
    sweep_cmd->add_option("--points", cfg.points, "grid size (>= 2)");
    add_output(sweep_cmd);

    auto *fid = app.add_subcommand("fidelity", "channel fidelity");
    add_channel(fid, false);
    fid->add_option("--alpha", cfg.alpha, "noise level in [0,1]");
    fid->add_option("--qubits", cfg.qubits, "1 or 4");
    fid->add_option("--points", cfg.points, "grid size (>= 2)");
    add_output(fid);

    auto *para = app.add_subcommand("parametric", "(delta4, mean) curve over an alpha grid");
    add_channel(para, false);
    para->add_option("--points", cfg.points, "grid size (>= 2)");
    add_output(para);

    auto *ver = app.add_subcommand("verify", "check reconstructed polynomials against the reference table");
    ver->add_option("--tolerance", cfg.tolerance, "max coefficient deviation");
    ver->add_option("--channel", cfg.channel, "ignored");
    add_output(ver);

    auto *thr = app.add_subcommand("threshold", "smallest alpha where the mean reaches --target");
    add_channel(thr, false);
    thr->add_option("--target", cfg.target, "target mean success, default 8/9");
    thr->add_option("--points", cfg.points, "grid used to locate the minimum");
    add_output(thr);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    cfg.command = app.get_subcommands().front()->get_name();

    std::ofstream file;
    std::ostringstream buffer;
    try {
        const int code = detail::dispatch(cfg, buffer);
        if (cfg.output == "-") {
            out << buffer.str();
        } else {
            file.open(cfg.output, std::ios::binary);
            if (!file) {
                err << "error: cannot open output file '" << cfg.output << "'\n";
                return kUsageError;
            }
            file << buffer.str();
        }
        return code;
    } catch (const detail::UsageError &e) {
        err << "error: " << e.what() << '\n';
    } catch (const DomainError &e) {
        err << "error: " << e.what() << '\n';
    } catch (const ContractViolation &e) {
        err << "error: " << e.what() << '\n';
    }
    return kUsageError;
}

}  // namespace magicsq::cli
