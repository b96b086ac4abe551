// Copyright 2026 The ppslab Authors
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

/**
 * @file
 * Subcommands of the ppslab command-line tool: sweep, violation, classical
 * and check. Each builds rows in memory and renders them as CSV or JSON.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ppslab/meter.hpp"
#include "ppslab/pigeonhole.hpp"

namespace ppslab::cli {

enum class Engine { closed_form, circuit, both };
enum class Format { csv, json };

Engine parse_engine(std::string_view text);
Format parse_format(std::string_view text);

/// Comma-separated selections. Empty lists and duplicates are rejected.
std::vector<pigeonhole::Device> parse_devices(std::string_view text);
std::vector<pigeonhole::PostLabel> parse_postselections(std::string_view text);
std::vector<Quadrature> parse_quadratures(std::string_view text);

/// `n` points from 0.01 to 1.0 inclusive.
std::vector<double> default_grid(std::size_t n = 101);

/// Either a comma list of strengths or `grid:<n>`. Values must lie in
/// [kMinStrength, 1] and be strictly increasing.
std::vector<double> parse_strengths(std::string_view text);

/// 12 significant digits, locale independent, no negative zero.
std::string format_number(double x);

struct SweepConfig {
    std::vector<pigeonhole::Device> devices{pigeonhole::kDevices.begin(),
                                            pigeonhole::kDevices.end()};
    std::vector<pigeonhole::PostLabel> postselections{pigeonhole::kPostselections.begin(),
                                                      pigeonhole::kPostselections.end()};
    std::vector<double> strengths = default_grid();
    std::vector<Quadrature> quadratures{Quadrature::real, Quadrature::imaginary};
    Engine engine = Engine::closed_form;
    bool weak_limit = true;
};

struct SweepRow {
    pigeonhole::Device device;
    pigeonhole::PostLabel post;
    Quadrature quadrature;
    std::string engine;             ///< closed_form, circuit or weak_value
    std::optional<double> strength;  ///< empty for the weak_limit row
    double meter_prob;
    double system_value;
    double success_prob;
};

/// Rows sorted by (device, postselection, quadrature, engine, strength),
/// names compared bytewise and weak_limit ahead of numeric strengths.
std::vector<SweepRow> sweep_rows(const SweepConfig& cfg);
std::string render_sweep(const std::vector<SweepRow>& rows, Format format);

struct ViolationRow {
    std::optional<double> strength;
    double direct_same_system;
    double indirect_sum_system;
    double delta;
    double classical_floor;
    bool pigeonhole_violated;
};

std::vector<ViolationRow> violation_rows(const std::vector<double>& strengths, bool weak_limit);
std::string render_violation(const std::vector<ViolationRow>& rows, Format format);

struct ClassicalRow {
    std::string distribution;
    double exact_same_pair;
    double sampled_same_pair;
    double standard_error;
    std::size_t samples;
    std::uint64_t seed;
};

std::vector<ClassicalRow> classical_rows(std::size_t samples, std::uint64_t seed);
std::string render_classical(const std::vector<ClassicalRow>& rows, Format format);

struct CheckResult {
    std::string name;
    bool passed;
    double max_error;
    double tolerance;
};

/// Default 1e-9; overridden by PPSLAB_TOLERANCE.
double tolerance_from_env();
std::vector<CheckResult> run_checks(double tolerance);

/// Parses argv and dispatches. Returns the process exit status: 0 on
/// success, 1 on a failed check or degenerate run, 2 on invalid input.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ppslab::cli
