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

#include <cstdio>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "magicsq/experiments.hpp"

namespace magicsq::csv {

inline constexpr std::string_view kSweepHeader = "alpha,p11,p12,p13,p21,p22,p23,p31,p32,p33,mean,delta4";
inline constexpr std::string_view kParametricHeader = "alpha,delta4,mean";
inline constexpr std::string_view kVerifyHeader = "channel,row,col,max_coeff_dev,pass";

/// Probabilities, noise levels and fidelities: fixed point, 12 decimals.
inline std::string number(double x) {
    if (x == 0.0) {
        x = 0.0;  // no "-0.000000000000"
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", x);
    return buf;
}

/// Small residues such as coefficient deviations: 12 significant digits.
inline std::string residue(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

/// Rows of a sweep; with `channel_column` each line is prefixed by the
/// channel name (used when several channels share one stream).
inline void write_sweep(std::ostream &os, const SweepTable &t, bool header = true, bool channel_column = false) {
    if (header) {
        os << (channel_column ? "channel," : "") << kSweepHeader << '\n';
    }
    for (const auto &r : t.rows) {
        if (channel_column) {
            os << channel_name(t.channel) << ',';
        }
        os << number(r.alpha);
        for (double p : r.probabilities) {
            os << ',' << number(p);
        }
        os << ',' << number(r.mean) << ',' << number(r.delta4) << '\n';
    }
}

inline void write_parametric(std::ostream &os, ChannelKind kind, const std::vector<ParametricPoint> &pts,
                             bool header = true, bool channel_column = false) {
    if (header) {
        os << (channel_column ? "channel," : "") << kParametricHeader << '\n';
    }
    for (const auto &p : pts) {
        if (channel_column) {
            os << channel_name(kind) << ',';
        }
        os << number(p.alpha) << ',' << number(p.delta4) << ',' << number(p.mean) << '\n';
    }
}

inline void write_verification(std::ostream &os, const VerificationReport &report) {
    os << kVerifyHeader << '\n';
    for (const auto &r : report.rows) {
        os << channel_name(r.channel) << ',' << r.input.row() << ',' << r.input.col() << ',' << residue(r.max_coeff_dev)
           << ',' << (r.pass ? "true" : "false") << '\n';
    }
}

}  // namespace magicsq::csv
