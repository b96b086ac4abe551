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

#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <tuple>

#include "CLI11.hpp"
#include "json.hpp"
#include "ppslab/classical.hpp"
#include "ppslab/errors.hpp"
#include "ppslab/pps.hpp"

namespace ppslab::cli {

namespace {

using pigeonhole::Device;
using pigeonhole::PostLabel;
using nlohmann::ordered_json;

constexpr std::string_view kWeakLimit = "weak_limit";

std::vector<std::string_view> split(std::string_view text) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        parts.push_back(text.substr(start, comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return parts;
}

template <typename T, typename Parse>
std::vector<T> parse_selection(std::string_view text, std::string_view what, Parse parse) {
    if (text.empty()) throw InvalidValue("empty " + std::string(what) + " selection");
    std::vector<T> out;
    for (auto part : split(text)) {
        const T value = parse(part);
        if (std::find(out.begin(), out.end(), value) != out.end()) {
            throw InvalidValue("duplicate " + std::string(what) + " '" + std::string(part) + "'");
        }
        out.push_back(value);
    }
    return out;
}

double parse_double(std::string_view text) {
    double value = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || text.empty()) {
        throw InvalidValue("not a number: '" + std::string(text) + "'");
    }
    return value;
}

std::string strength_text(const std::optional<double>& s) {
    return s ? format_number(*s) : std::string(kWeakLimit);
}

ordered_json strength_json(const std::optional<double>& s) {
    if (!s) return std::string(kWeakLimit);
    return parse_double(format_number(*s));
}

/// Value rounded to the 12 digits printed in CSV, so JSON carries the same data.
double rounded(double x) { return parse_double(format_number(x)); }

std::string render_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows) {
    std::string out;
    for (std::size_t i = 0; i < header.size(); ++i) out += (i ? "," : "") + header[i];
    out += '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + row[i];
        out += '\n';
    }
    return out;
}

std::string render_json(const ordered_json& rows) { return rows.dump(2) + "\n"; }

void check_strength_order(const std::vector<double>& strengths) {
    if (strengths.empty()) throw InvalidValue("empty strength selection");
    for (std::size_t i = 0; i < strengths.size(); ++i) {
        const double s = strengths[i];
        if (!(s >= kMinStrength && s <= 1.0)) {
            throw InvalidValue("strength " + format_number(s) + " outside [" +
                               format_number(kMinStrength) +
                               ", 1]; the s -> 0 limit is the weak_limit row");
        }
        if (i > 0 && !(s > strengths[i - 1])) {
            throw InvalidValue("strengths must be strictly increasing");
        }
    }
}

SweepRow closed_form_row(Device d, PostLabel p, double s, Quadrature q) {
    const auto r = readout(pigeonhole::scenario(d, p), Strength::from_s(s));
    return {d, p, q, "closed_form", s, r.meter_prob(q), r.system_value(q), r.ps_prob};
}

SweepRow circuit_row(Device d, PostLabel p, double s, Quadrature q) {
    const auto st = Strength::from_s(s);
    const auto run = pigeonhole::run_photonic_circuit(d, p, st, q);
    return {d, p, q, "circuit", s, run.yes_prob, meter_to_system(run.yes_prob, st, q),
            run.success_prob};
}

SweepRow weak_limit_row(Device d, PostLabel p, Quadrature q) {
    const auto sc = pigeonhole::scenario(d, p);
    const Complex wv = weak_value(sc);
    const double overlap = std::norm(inner(sc.postselection(), sc.preselection()));
    const double value = q == Quadrature::real ? wv.real() : wv.imag();
    return {d, p, q, "weak_value", std::nullopt, 0.5, value, overlap};
}

template <typename T>
void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw T("cannot open output file '" + path + "'");
    file << text;
    if (!file) throw T("failed writing output file '" + path + "'");
}

struct Accumulator {
    double worst = 0.0;
    bool ok = true;
    void add(double error) {
        if (!std::isfinite(error)) ok = false;
        worst = std::max(worst, error);
    }
    void require(bool condition) { ok = ok && condition; }
};

}  // namespace

Engine parse_engine(std::string_view text) {
    if (text == "closed_form") return Engine::closed_form;
    if (text == "circuit") return Engine::circuit;
    if (text == "both") return Engine::both;
    throw InvalidValue("unknown engine '" + std::string(text) + "'");
}

Format parse_format(std::string_view text) {
    if (text == "csv") return Format::csv;
    if (text == "json") return Format::json;
    throw InvalidValue("unknown format '" + std::string(text) + "'");
}

std::vector<Device> parse_devices(std::string_view text) {
    return parse_selection<Device>(text, "device", pigeonhole::parse_device);
}

std::vector<PostLabel> parse_postselections(std::string_view text) {
    return parse_selection<PostLabel>(text, "postselection", pigeonhole::parse_postselection);
}

std::vector<Quadrature> parse_quadratures(std::string_view text) {
    return parse_selection<Quadrature>(text, "quadrature", parse_quadrature);
}

std::vector<double> default_grid(std::size_t n) {
    if (n < 2) throw InvalidValue("a strength grid needs at least 2 points");
    constexpr double lo = 0.01, hi = 1.0;
    std::vector<double> grid(n);
    for (std::size_t k = 0; k < n; ++k) {
        grid[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n - 1);
    }
    grid.back() = hi;
    return grid;
}

std::vector<double> parse_strengths(std::string_view text) {
    std::vector<double> strengths;
    if (text.starts_with("grid:")) {
        const double n = parse_double(text.substr(5));
        if (n != std::floor(n) || n < 2 || n > 1e6) {
            throw InvalidValue("grid size must be an integer in [2, 1000000]");
        }
        strengths = default_grid(static_cast<std::size_t>(n));
    } else {
        if (text.empty()) throw InvalidValue("empty strength selection");
        for (auto part : split(text)) strengths.push_back(parse_double(part));
    }
    check_strength_order(strengths);
    return strengths;
}

std::string format_number(double x) {
    if (x == 0.0) x = 0.0;
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 12);
    if (ec != std::errc{}) throw Error("number formatting failed");
    return std::string(buf, ptr);
}

std::vector<SweepRow> sweep_rows(const SweepConfig& cfg) {
    if (cfg.devices.empty() || cfg.postselections.empty() || cfg.quadratures.empty()) {
        throw InvalidValue("sweep selections must be non-empty");
    }
    check_strength_order(cfg.strengths);

    std::vector<SweepRow> rows;
    for (Device d : cfg.devices)
        for (PostLabel p : cfg.postselections)
            for (Quadrature q : cfg.quadratures) {
                if (cfg.weak_limit) rows.push_back(weak_limit_row(d, p, q));
                for (double s : cfg.strengths) {
                    if (cfg.engine != Engine::circuit) rows.push_back(closed_form_row(d, p, s, q));
                    if (cfg.engine != Engine::closed_form) rows.push_back(circuit_row(d, p, s, q));
                }
            }

    const auto key = [](const SweepRow& r) {
        return std::make_tuple(std::string(pigeonhole::to_string(r.device)),
                               std::string(pigeonhole::to_string(r.post)),
                               std::string(to_string(r.quadrature)), r.engine, r.strength.has_value(),
                               r.strength.value_or(0.0));
    };
    std::sort(rows.begin(), rows.end(),
              [&](const SweepRow& a, const SweepRow& b) { return key(a) < key(b); });
    return rows;
}

std::string render_sweep(const std::vector<SweepRow>& rows, Format format) {
    if (format == Format::json) {
        ordered_json out = ordered_json::array();
        for (const auto& r : rows) {
            out.push_back({{"device", pigeonhole::to_string(r.device)},
                           {"postselection", pigeonhole::to_string(r.post)},
                           {"quadrature", to_string(r.quadrature)},
                           {"engine", r.engine},
                           {"strength", strength_json(r.strength)},
                           {"meter_prob", rounded(r.meter_prob)},
                           {"system_value", rounded(r.system_value)},
                           {"success_prob", rounded(r.success_prob)}});
        }
        return render_json(out);
    }
    std::vector<std::vector<std::string>> table;
    for (const auto& r : rows) {
        table.push_back({std::string(pigeonhole::to_string(r.device)),
                         std::string(pigeonhole::to_string(r.post)),
                         std::string(to_string(r.quadrature)), r.engine, strength_text(r.strength),
                         format_number(r.meter_prob), format_number(r.system_value),
                         format_number(r.success_prob)});
    }
    return render_table({"device", "postselection", "quadrature", "engine", "strength",
                         "meter_prob", "system_value", "success_prob"},
                        table);
}

std::vector<ViolationRow> violation_rows(const std::vector<double>& strengths, bool weak_limit) {
    check_strength_order(strengths);
    const double floor = pigeonhole::classical_same_hole_floor();
    const auto same = pigeonhole::scenario(Device::same, PostLabel::paradox);
    const auto ll = pigeonhole::scenario(Device::LL, PostLabel::paradox);
    const auto rr = pigeonhole::scenario(Device::RR, PostLabel::paradox);

    std::vector<ViolationRow> rows;
    const auto push = [&](std::optional<double> s, double direct, double indirect) {
        rows.push_back({s, direct, indirect, indirect - direct, floor, direct < floor});
    };
    if (weak_limit) {
        push(std::nullopt, weak_value(same).real(), weak_value(ll).real() + weak_value(rr).real());
    }
    for (double s : strengths) {
        const auto st = Strength::from_s(s);
        push(s, readout(same, st).real_system,
             readout(ll, st).real_system + readout(rr, st).real_system);
    }
    return rows;
}

std::string render_violation(const std::vector<ViolationRow>& rows, Format format) {
    if (format == Format::json) {
        ordered_json out = ordered_json::array();
        for (const auto& r : rows) {
            out.push_back({{"strength", strength_json(r.strength)},
                           {"direct_same_system", rounded(r.direct_same_system)},
                           {"indirect_sum_system", rounded(r.indirect_sum_system)},
                           {"delta", rounded(r.delta)},
                           {"classical_floor", rounded(r.classical_floor)},
                           {"pigeonhole_violated", r.pigeonhole_violated}});
        }
        return render_json(out);
    }
    std::vector<std::vector<std::string>> table;
    for (const auto& r : rows) {
        table.push_back({strength_text(r.strength), format_number(r.direct_same_system),
                         format_number(r.indirect_sum_system), format_number(r.delta),
                         format_number(r.classical_floor),
                         r.pigeonhole_violated ? "true" : "false"});
    }
    return render_table({"strength", "direct_same_system", "indirect_sum_system", "delta",
                         "classical_floor", "pigeonhole_violated"},
                        table);
}

std::vector<ClassicalRow> classical_rows(std::size_t samples, std::uint64_t seed) {
    using classical::PigeonDistribution;
    const auto minimum = classical::minimize_same_pair();
    const std::vector<std::pair<std::string, PigeonDistribution>> cases{
        {"uniform", PigeonDistribution::uniform()},
        {"uniform_mixed", PigeonDistribution::uniform_mixed()},
        {"minimizer", minimum.witness}};

    std::vector<ClassicalRow> rows;
    for (const auto& [name, d] : cases) {
        const double p = classical::same_pair_probability(d);
        const double se = std::sqrt(p * (1 - p) / static_cast<double>(samples));
        rows.push_back(
            {name, p, classical::sample_assignments(d, samples, seed), se, samples, seed});
    }
    return rows;
}

std::string render_classical(const std::vector<ClassicalRow>& rows, Format format) {
    if (format == Format::json) {
        ordered_json out = ordered_json::array();
        for (const auto& r : rows) {
            out.push_back({{"distribution", r.distribution},
                           {"exact_same_pair", rounded(r.exact_same_pair)},
                           {"sampled_same_pair", rounded(r.sampled_same_pair)},
                           {"standard_error", rounded(r.standard_error)},
                           {"samples", r.samples},
                           {"seed", r.seed}});
        }
        return render_json(out);
    }
    std::vector<std::vector<std::string>> table;
    for (const auto& r : rows) {
        table.push_back({r.distribution, format_number(r.exact_same_pair),
                         format_number(r.sampled_same_pair), format_number(r.standard_error),
                         std::to_string(r.samples), std::to_string(r.seed)});
    }
    return render_table({"distribution", "exact_same_pair", "sampled_same_pair", "standard_error",
                         "samples", "seed"},
                        table);
}

double tolerance_from_env() {
    const char* text = std::getenv("PPSLAB_TOLERANCE");
    if (text == nullptr || *text == '\0') return 1e-9;
    const double tol = parse_double(text);
    if (!(tol > 0.0) || !std::isfinite(tol)) {
        throw InvalidValue("PPSLAB_TOLERANCE must be a positive number");
    }
    return tol;
}

std::vector<CheckResult> run_checks(double tolerance) {
    std::vector<CheckResult> results;
    const auto record = [&](std::string name, const Accumulator& acc, double tol) {
        results.push_back({std::move(name), acc.ok && acc.worst <= tol, acc.worst, tol});
    };
    const auto grid = default_grid();
    std::vector<double> tenths;
    for (int k = 0; k <= 10; ++k) tenths.push_back(k / 10.0);

    {
        Accumulator acc;
        for (Device d : pigeonhole::kDevices)
            for (PostLabel p : pigeonhole::kPostselections)
                for (double s : tenths)
                    for (Quadrature q : {Quadrature::real, Quadrature::imaginary}) {
                        const auto st = Strength::from_s(s);
                        const auto circuit = pigeonhole::run_photonic_circuit(d, p, st, q);
                        const auto closed = pigeonhole::run_closed_form(d, p, st, q);
                        acc.add(std::abs(circuit.yes_prob - closed.yes_prob));
                        acc.add(std::abs(circuit.success_prob / closed.success_prob -
                                         pigeonhole::loss_factor(d)));
                    }
        record("engine_equivalence", acc, tolerance);
    }
    {
        Accumulator weak, strong;
        for (Device d : pigeonhole::kDevices)
            for (PostLabel p : pigeonhole::kPostselections) {
                const auto sc = pigeonhole::scenario(d, p);
                const Complex wv = weak_value(sc);
                const auto w = readout(sc, Strength::from_s(kMinStrength));
                weak.add(std::abs(w.real_system - wv.real()));
                weak.add(std::abs(w.imag_system - wv.imag()));
                const auto s1 = readout(sc, Strength::from_s(1.0));
                strong.add(std::abs(s1.real_system - abl_probability(sc)));
                strong.add(std::abs(s1.imag_system - strong_imaginary_value(sc)));
            }
        record("weak_limit", weak, std::max(1e-5, tolerance));
        record("strong_limit", strong, tolerance);
    }
    const auto same = pigeonhole::scenario(Device::same, PostLabel::paradox);
    const auto ll = pigeonhole::scenario(Device::LL, PostLabel::paradox);
    const auto rr = pigeonhole::scenario(Device::RR, PostLabel::paradox);
    {
        Accumulator cancel, violation, curve, joint;
        for (double s : grid) {
            const auto st = Strength::from_s(s);
            const auto a = readout(same, st), b = readout(ll, st), c = readout(rr, st);
            cancel.add(std::abs(b.imag_system + c.imag_system));
            violation.add(std::abs(a.real_system));
            violation.require(a.real_system < pigeonhole::classical_same_hole_floor());
            const double overlap = std::sqrt(1 - s * s);
            curve.add(std::abs(b.real_system + c.real_system - a.real_system -
                               (1 - overlap) / (3 - overlap)));
            joint.add(std::abs(joint_imag_expectation(ll, st) - 0.125));
        }
        record("imaginary_cancellation", cancel, tolerance);
        record("pigeonhole_violation", violation, tolerance);
        record("sum_rule_curve", curve, tolerance);
        record("joint_imaginary", joint, tolerance);
    }
    {
        Accumulator acc;
        constexpr double h = 1e-5;
        for (Device d : pigeonhole::kDevices)
            for (double s : {0.2, 0.5, 0.8, 1.0}) {
                const auto sc = pigeonhole::scenario(d, PostLabel::paradox);
                const auto st = Strength::from_s(s);
                const double slope = (std::log(ps_probability_deformed(sc, st, h)) -
                                      std::log(ps_probability_deformed(sc, st, -h))) /
                                     (2 * h);
                acc.add(std::abs(slope - 2 * readout(sc, st).imag_system));
            }
        record("sensitivity", acc, std::max(1e-6, tolerance));
    }
    {
        Accumulator acc;
        const auto minimum = classical::minimize_same_pair();
        acc.add(std::abs(minimum.value - 1.0 / 3));
        acc.add(std::abs(classical::same_pair_probability_enumerated(minimum.witness) -
                         minimum.value));
        acc.add(std::abs(pigeonhole::classical_same_hole_floor() - 1.0 / 3));
        record("classical_bound", acc, tolerance);
    }
    return results;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Variable-strength pre- and postselected measurement simulator"};
    app.name("ppslab");
    app.require_subcommand(1);

    std::string devices = "same,LL,RR";
    std::string posts = "paradox,CC,CA,AC,AA";
    std::string strengths = "grid:101";
    std::string quadratures = "real,imaginary";
    std::string engine = "closed_form";
    std::string format = "csv";
    std::string output = "-";
    bool no_weak_limit = false;
    std::uint64_t seed = 2026;
    std::size_t samples = 1'000'000;

    const auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "csv or json")->capture_default_str();
        cmd->add_option("--output", output, "output file, - for stdout")->capture_default_str();
    };

    auto* sweep = app.add_subcommand("sweep", "readout curves for every selected configuration");
    sweep->add_option("--devices", devices, "comma list of same, LL, RR")->capture_default_str();
    sweep->add_option("--postselections", posts, "comma list of paradox, CC, CA, AC, AA")
        ->capture_default_str();
    sweep->add_option("--strengths", strengths, "comma list or grid:<n>")->capture_default_str();
    sweep->add_option("--quadratures", quadratures, "comma list of real, imaginary")
        ->capture_default_str();
    sweep->add_option("--engine", engine, "closed_form, circuit or both")->capture_default_str();
    sweep->add_flag("--no-weak-limit", no_weak_limit, "omit the weak_limit rows");
    add_output(sweep);

    auto* violation = app.add_subcommand("violation", "pigeonhole and sum-rule violation curves");
    violation->add_option("--strengths", strengths, "comma list or grid:<n>")
        ->capture_default_str();
    violation->add_flag("--no-weak-limit", no_weak_limit, "omit the weak_limit row");
    add_output(violation);

    auto* classical_cmd = app.add_subcommand("classical", "classical same-hole statistics");
    classical_cmd->add_option("--seed", seed, "sampler seed")->capture_default_str();
    classical_cmd->add_option("--samples", samples, "Monte Carlo sample count")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    add_output(classical_cmd);

    auto* check = app.add_subcommand("check", "run the invariant suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        std::string text;
        if (*sweep) {
            SweepConfig cfg;
            try {
                cfg.devices = parse_devices(devices);
                cfg.postselections = parse_postselections(posts);
                cfg.strengths = parse_strengths(strengths);
                cfg.quadratures = parse_quadratures(quadratures);
                cfg.engine = parse_engine(engine);
                cfg.weak_limit = !no_weak_limit;
            } catch (const Error& e) {
                err << "ppslab sweep: " << e.what() << "\n";
                return 2;
            }
            const Format fmt = parse_format(format);
            text = render_sweep(sweep_rows(cfg), fmt);
        } else if (*violation) {
            const auto grid = parse_strengths(strengths);
            text = render_violation(violation_rows(grid, !no_weak_limit), parse_format(format));
        } else if (*classical_cmd) {
            text = render_classical(classical_rows(samples, seed), parse_format(format));
        } else if (*check) {
            const double tol = tolerance_from_env();
            bool all = true;
            for (const auto& r : run_checks(tol)) {
                all = all && r.passed;
                out << (r.passed ? "PASS " : "FAIL ") << r.name
                    << " max_error=" << format_number(r.max_error)
                    << " tolerance=" << format_number(r.tolerance) << "\n";
            }
            out << (all ? "all checks passed" : "some checks failed") << "\n";
            return all ? 0 : 1;
        }
        write_output<InvalidValue>(output, text, out);
        return 0;
    } catch (const InvalidValue& e) {
        err << "ppslab: " << e.what() << "\n";
        return 2;
    } catch (const DegenerateRun& e) {
        err << "ppslab: degenerate run at stage '" << e.stage() << "': " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "ppslab: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace ppslab::cli
