// Copyright 2026 The spincat authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Deterministic parameter sweeps emitted as CSV or JSON, a single-point
 * inspection report, and the verify front end over the adjudicator.
 *
 * Figure values are always recomputed from the closed-form evaluators --
 * sweeps are thin views, nothing is cached. Identical specs produce
 * byte-identical files.
 */

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "spincat/oracle.hpp"
#include "spincat/repeat.hpp"

namespace spincat::figures {

enum class Format { Csv, Json };

/// A sweep: one x variable, one series dimension (spin values or attempt
/// depths), fixed parity/angle, deterministic row order (series outer,
/// x ascending inner).
struct SweepSpec {
    std::string figure = "custom";
    std::string x_var = "p";  ///< p | concurrence | omega
    double start = 0.0;
    double stop = 1.0;
    int steps = 201;
    std::vector<double> j_values;  ///< series for spin-indexed figures
    std::vector<int> depths;       ///< series for depth-indexed figures
    int m = 0;
    double omega = 0.0;
    double p_fixed = 0.5;  ///< channel overlap for omega sweeps
    std::string quantity = "concurrence";  ///< custom sweeps only
    std::string out_path;
    Format format = Format::Csv;
};

/// Preset for one of the built-in figure ids (fig1, fig3a, fig3b, fig4a,
/// fig4b, fig5a, fig5b, fig5c, custom). Throws InvalidSpec otherwise.
SweepSpec figure_spec(const std::string& id);

/// Throws InvalidSpec when steps < 2 or the range leaves the variable's
/// valid domain.
void validate(const SweepSpec& spec);

/// Write the sweep in the chosen format.
void emit_figure(const SweepSpec& spec, std::ostream& out);

/// Write to spec.out_path (defaulted to "<figure>.<ext>" when empty).
/// Returns the path written.
std::string emit_figure_to_file(const SweepSpec& spec);

/// Channel descriptor, the primary-attempt outcome table and cumulative
/// statistics through the requested attempt depth, in human-readable form.
void inspect(const ChannelParams& params, const TargetState& target, int depth,
             std::ostream& out);

struct VerifySummary {
    size_t rows = 0;
    size_t agree = 0;
    size_t paper_differs = 0;
    size_t disagree = 0;

    bool ok() const { return disagree == 0; }
};

/// Run the adjudicator, stream the ledger, and return the verdict counts.
VerifySummary run_verify(const oracle::AdjudicationGrid& grid, std::ostream& ledger);

/// Grid configuration from a JSON file; absent keys keep the defaults.
/// Throws InvalidSpec on unreadable or malformed input.
oracle::AdjudicationGrid load_grid(const std::string& path);

}  // namespace spincat::figures
