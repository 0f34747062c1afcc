// Copyright 2026 The codeswitch Authors
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

#include "codeswitch/cli.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "codeswitch/analysis.h"
#include "codeswitch/catalog.h"
#include "codeswitch/circuit.h"
#include "codeswitch/error.h"
#include "codeswitch/io.h"
#include "codeswitch/parallel.h"
#include "codeswitch/rsra.h"
#include "codeswitch/sim.h"

namespace codeswitch {

namespace {


struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

StabilizerCode load_code(const std::string &spec) {
    try {
        return resolve_code(spec);
    } catch (const Error &e) {
        if (e.code() == ErrorCode::IoError) {
            throw;
        }
        throw UsageError("cannot load code '" + spec + "': " + e.what());
    }
}

ConversionPath load_path(const std::string &file) {
    return path_from_json_text(read_text_file(file));
}

/// Rejects paths whose steps do not connect consecutive intermediates.
void check_path_structure(const ConversionPath &path) {
    try {
        for (size_t i = 0; i < path.steps.size(); i++) {
            check_adjacent(path.intermediates[i], path.steps[i]);
            auto gens = path.intermediates[i].generators();
            gens[path.steps[i].replaced_index] = path.steps[i].measure;
            if (gens != path.intermediates[i + 1].generators()) {
                throw Error(ErrorCode::AdjacencyViolation, "step " + std::to_string(i) + " does not produce the next code");
            }
        }
        if (!path.intermediates.front().same_group(path.source) || !path.intermediates.back().same_group(path.target)) {
            throw Error(ErrorCode::EndpointMismatch, "endpoints do not match source and target");
        }
        for (const auto &a : path.ancillas) {
            if (!in_group(path.target, PauliOp::single(path.num_qubits(), a.qubit, a.basis)).in_group) {
                throw Error(ErrorCode::EndpointMismatch, "ancilla qubit is not fixed by the target code");
            }
        }
    } catch (const Error &e) {
        throw Error(ErrorCode::ParseError, std::string("inconsistent path: ") + e.what());
    }
}

std::string distance_text(const DistanceReport &r) {
    return (r.exact ? "" : ">=") + std::to_string(r.distance);
}

size_t default_distance(const StabilizerCode &a, const StabilizerCode &b) {
    return std::min(code_distance(a, a.n()).distance, code_distance(b, b.n()).distance);
}

void print_verification(std::ostream &out, const ConversionPath &path, const PathVerification &v, size_t d) {
    out << "code  n  k  distance  witness" << std::string(std::max<size_t>(path.num_qubits(), 7) - 6, ' ')
        << "status\n";
    for (size_t i = 0; i < v.reports.size(); i++) {
        const auto &r = v.reports[i];
        std::string witness = r.witness ? r.witness->str() : "-";
        out << std::left << std::setw(6) << i << std::setw(3) << path.intermediates[i].n() << std::setw(3)
            << path.intermediates[i].k() << std::setw(10) << distance_text(r) << std::setw(static_cast<int>(path.num_qubits()) + 3)
            << witness << (r.distance >= d ? "ok" : "FAIL") << std::right << "\n";
    }
}

// ---------------------------------------------------------------- convert

struct ConvertArgs {
    std::string from, to, out, circuit;
    size_t m = 0;
    uint64_t seed = 0;
    size_t retries = 1000;
    size_t min_distance = 0;
    size_t gbar_samples = 0;
};

int cmd_convert(const ConvertArgs &args, std::ostream &out) {
    StabilizerCode source = load_code(args.from);
    StabilizerCode target = load_code(args.to);
    if (source.k() != target.k()) {
        throw UsageError(
            "codes encode different numbers of logical qubits (" + std::to_string(source.k()) + " vs " +
            std::to_string(target.k()) + ")");
    }
    RsraConfig config;
    config.m = args.m;
    config.seed = args.seed;
    config.max_retries = args.retries;
    config.min_distance = args.min_distance ? args.min_distance : default_distance(source, target);
    config.gbar_weight_search = args.gbar_samples;

    out << "converting " << args.from << " [[" << source.n() << "," << source.k() << "]] -> " << args.to << " [["
        << target.n() << "," << target.k() << "]] with m = " << args.m << ", target distance "
        << config.min_distance << "\n";
    SearchResult result = search(source, target, config);
    if (result.exhausted()) {
        out << "search exhausted after " << result.retries << " retries; best minimum distance "
            << result.best_min_distance << "\n";
        size_t shown = std::min<size_t>(result.rejections.size(), 5);
        for (size_t i = 0; i < shown; i++) {
            const auto &r = result.rejections[i];
            out << "  retry " << r.retry << ": code " << r.code_index << " has logical " << r.witness.str()
                << " (distance " << r.min_distance << ")\n";
        }
        return kExitSearchExhausted;
    }
    const ConversionPath &path = *result.path;
    out << "found a path at retry " << path.retry << " (" << result.retries << " draws)\n";
    out << "steps: " << path.steps.size() << ", multi-qubit gates: " << gate_count(path) << "\n";
    for (size_t i = 0; i < path.steps.size(); i++) {
        const auto &s = path.steps[i];
        out << "  " << std::setw(3) << i << "  slot " << std::setw(2) << s.replaced_index << "  " << s.correct.str()
            << " -> " << s.measure.str() << "\n";
    }
    if (!args.out.empty()) {
        write_text_file(args.out, path_to_json_text(path));
        out << "wrote " << args.out << "\n";
    }
    if (!args.circuit.empty()) {
        write_text_file(args.circuit, bundle_to_json_text(emit(path)));
        out << "wrote " << args.circuit << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const std::string &file, size_t d, bool subsystem, const std::string &json_out, std::ostream &out) {
    ConversionPath path = load_path(file);
    if (d == 0) {
        d = default_distance(path.source, path.target);
    }
    PathVerification v = verify_path(path, d);
    out << "verifying " << path.intermediates.size() << " codes on " << path.num_qubits()
        << " qubits for distance >= " << d << "\n";
    print_verification(out, path, v, d);
    if (subsystem) {
        size_t t = (d - 1) / 2;
        out << "subsystem distances per step (gauge pair {outgoing, incoming}), t = " << t << ":\n";
        for (size_t i = 0; i < path.steps.size(); i++) {
            auto r = step_subsystem_distance(path.intermediates[i], path.steps[i], d);
            out << "  step " << std::setw(3) << i << "  distance " << std::setw(4)
                << ((r.exact ? "" : ">=") + std::to_string(r.distance)) << "  "
                << (r.tolerates(t) ? "tolerates" : "does not tolerate") << " " << t << " fault(s)";
            if (r.witness) {
                out << "  witness " << r.witness->str();
            }
            out << "\n";
        }
    }
    if (!json_out.empty()) {
        write_text_file(json_out, verification_to_json_text(v, d));
    }
    if (v.pass) {
        out << "PASS: every code has distance >= " << d << "\n";
        return kExitOk;
    }
    out << "FAIL: code " << *v.first_failure << " has logical " << v.witness->str() << " of weight "
        << v.witness->weight() << "\n";
    return kExitCheckFailed;
}

int cmd_verify_sampled(const std::string &file, size_t d, uint64_t samples, uint64_t seed, std::ostream &out) {
    ConversionPath path = load_path(file);
    if (d == 0) {
        d = default_distance(path.source, path.target);
    }
    Rng rng(seed);
    SampledVerification v = sample_path(path, d, samples, rng);
    out << "sampled " << v.errors_checked << " errors of weight < " << d << " over " << path.intermediates.size()
        << " codes\n";
    if (v.pass) {
        out << "PASS: no undetectable logical error sampled (not exhaustive)\n";
        return kExitOk;
    }
    out << "FAIL: code " << *v.first_failure << " has logical " << v.witness->str() << " of weight "
        << v.witness->weight() << "\n";
    return kExitCheckFailed;
}

// ---------------------------------------------------------------- simulate

int cmd_simulate(
    const std::string &file, size_t trials, uint64_t seed, const std::string &policy_text, const std::string &json_out,
    std::ostream &out) {
    OutcomePolicy policy;
    try {
        policy = OutcomePolicy::parse(policy_text);
    } catch (const Error &e) {
        throw UsageError(e.what());
    }
    ConversionPath path = load_path(file);
    check_path_structure(path);
    SimulationSummary summary = simulate(path, trials, seed, policy);
    for (size_t i = 0; i < summary.trials.size(); i++) {
        const auto &t = summary.trials[i];
        out << "trial " << std::setw(3) << i << "  seed " << std::setw(20) << t.seed;
        for (const auto &r : t.runs) {
            size_t corrected = 0;
            for (const auto &s : r.steps) {
                corrected += s.corrected;
            }
            out << "  +" << r.basis << ": " << (r.pass() ? "pass" : "FAIL") << " (" << corrected << "/"
                << r.steps.size() << " corrected)";
        }
        out << "\n";
        for (const auto &r : t.runs) {
            if (!r.failure.empty()) {
                out << "    " << r.failure << "\n";
            }
        }
    }
    out << summary.passed << "/" << summary.trials.size()
        << " trials preserved the encoded logical state (target stabilized, ancillas disentangled)\n";
    if (!json_out.empty()) {
        write_text_file(json_out, simulation_to_json_text(summary));
    }
    return summary.passed == summary.trials.size() ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------- emit

int cmd_emit(const std::string &file, const std::string &json_out, std::ostream &out) {
    ConversionPath path = load_path(file);
    check_path_structure(path);
    CircuitBundle bundle = emit(path);
    for (const auto &g : bundle.gadgets) {
        out << "gadget " << std::setw(3) << g.step << "  measure " << g.measure.str() << "  cat size " << g.cat_size
            << "\n";
    }
    out << "total multi-qubit gates: " << bundle.total_multiqubit_gates << "\n";
    if (!json_out.empty()) {
        write_text_file(json_out, bundle_to_json_text(bundle));
        out << "wrote " << json_out << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------- bounds

struct BoundsArgs {
    std::optional<size_t> n, d, lemma1;
    std::optional<double> eps;
    bool min_ancilla = false;
    bool distance_exponent = false;
    size_t m_max = 0;
    uint64_t seed = 0;
    uint64_t samples = 100000;
};

int cmd_bounds(const BoundsArgs &args, std::ostream &out) {
    if (!args.n && !args.lemma1) {
        throw UsageError("bounds needs --n/--d/--eps or --lemma1");
    }
    out << std::setprecision(6);
    if (args.n) {
        if (!args.d || !args.eps) {
            throw UsageError("--n requires --d and --eps");
        }
        BoundExponent exponent = args.distance_exponent ? BoundExponent::Distance : BoundExponent::WeightBelowDistance;
        size_t n = *args.n, d = *args.d;
        double eps = *args.eps;
        std::optional<AncillaEstimate> est;
        try {
            est = min_ancilla(n, d, eps, exponent);
        } catch (const Error &e) {
            if (e.code() != ErrorCode::Infeasible) {
                throw;
            }
        }
        size_t top = args.m_max ? args.m_max : (est ? est->m + 2 : 16);
        out << "failure bound for n = " << n << ", d = " << d << ", |G_C| = m\n";
        out << "   m  log(bound)       bound        clamped\n";
        for (size_t m = 0; m <= top; m++) {
            out << std::setw(4) << m << "  ";
            try {
                FailureBound b = failure_bound({n, m, d, m}, exponent);
                out << std::setw(12) << b.log_raw << "  " << std::setw(12) << b.raw << "  " << std::setw(10)
                    << b.effective << (b.raw < eps ? "  < eps" : "") << "\n";
            } catch (const Error &e) {
                out << "outside the bound's domain\n";
            }
        }
        if (args.min_ancilla) {
            if (est) {
                out << "min ancilla: m = " << est->m << " (bound " << est->bound_at_m.raw << " < " << eps
                    << "); reference d log2(n/d) + log2(1/eps) = " << est->asymptotic_reference << "\n";
            } else {
                out << "min ancilla: no m brings the bound below " << eps << "\n";
            }
        }
    }
    if (args.lemma1) {
        size_t n = *args.lemma1;
        if (n < 2 || n > 20) {
            throw UsageError("--lemma1 expects 2 <= n <= 20");
        }
        Fraction exact = lemma1_exact(n);
        double bound = static_cast<double>(n - 1) / std::ldexp(1.0, static_cast<int>(n));
        out << "basis-ordering probability, n = " << n << ": exact " << exact.numerator << "/" << exact.denominator << " = "
            << exact.value() << ", bound (n-1)/2^n = " << bound << "\n";
        BitVector v = BitVector::unit(n, 0);
        BitVector w = BitVector::unit(n, n - 1);
        try {
            Fraction e = lemma1_enumerate(n, v, w);
            out << "  enumerated over GL(F2," << n << "): " << e.numerator << "/" << e.denominator << "\n";
        } catch (const Error &e) {
            if (e.code() != ErrorCode::Infeasible) {
                throw;
            }
            out << "  enumeration skipped: " << e.what() << "\n";
        }
        Rng rng(args.seed);
        Estimate mc = lemma1_mc(n, v, w, args.samples, rng);
        out << "  Monte Carlo (" << mc.trials << " samples): " << mc.mean << " +- " << mc.standard_error << "\n";
        if (exact.value() > bound) {
            out << "  warning: the exact probability exceeds the bound (n-1)/2^n at n = " << n << "\n";
        }
    }
    return kExitOk;
}

// ---------------------------------------------------------------- reproduce

int cmd_reproduce(const std::string &table, std::ostream &out) {
    Decomposition dec;
    try {
        dec = load_fixture_decomposition(fixture_text(table));
    } catch (const Error &e) {
        if (e.code() == ErrorCode::ParseError) {
            throw UsageError("unknown table '" + table + "' (expected table1, table2 or table3)");
        }
        throw;
    }
    ConversionPath path = build_path(dec);
    const size_t d = 3;
    out << table << ": " << path.num_qubits() << " qubits, m = " << path.m << ", |G_A| = " << dec.gA.size()
        << ", |G_B| = " << dec.gB.size() << ", |G_C| = " << dec.gC.size() << ", " << path.steps.size() << " steps\n";
    for (size_t i = 0; i < dec.gbars.size(); i++) {
        out << "bridge " << i << ": " << dec.gB[i].str() << " -> " << dec.gbars[i].str() << " -> " << dec.gBp[i].str()
            << "\n";
    }
    PathVerification v = verify_path(path, d);
    print_verification(out, path, v, d);
    bool all_exact_three = true;
    for (const auto &r : v.reports) {
        all_exact_three = all_exact_three && r.exact && r.distance == d;
    }
    SimulationSummary sim = simulate(path, 20, 0);
    InjectionReport inj = inject_and_check(path, d - 1);
    size_t gates = gate_count(path);
    out << "distance-preserving at d = " << d << ": " << (v.pass ? "yes" : "NO")
        << (all_exact_three ? " (every code has distance exactly 3)" : "") << "\n";
    out << "fault injection up to weight " << d - 1 << ": " << (inj.pass ? "all detected" : "UNDETECTED ERROR")
        << " (" << inj.errors_checked << " errors)\n";
    out << "simulation: " << sim.passed << "/" << sim.trials.size() << " trials preserved +Z and +X logical states\n";
    out << "multi-qubit gates: " << gates << "\n";
    bool ok = v.pass && inj.pass && inj.syndromes_agree && sim.passed == sim.trials.size();
    out << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------- distance

int cmd_distance(const std::string &spec, size_t cap, std::ostream &out) {
    StabilizerCode code = load_code(spec);
    DistanceReport r = code_distance(code, cap ? cap : code.n());
    out << "[[" << code.n() << "," << code.k() << "," << distance_text(r) << "]]";
    if (r.witness) {
        out << "  witness " << r.witness->str();
    }
    out << "\n";
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Stabilizer code switching by randomized stabilizer rewiring", "codeswitch"};
    app.require_subcommand(1);
    // Lets --threads follow the subcommand as well as precede it.
    app.fallthrough();
    int threads = 0;
    app.add_option("--threads", threads, "Thread cap for parallel kernels (default: RSRA_THREADS or all cores)");

    ConvertArgs convert;
    auto *c = app.add_subcommand("convert", "Search for a distance-preserving conversion path");
    c->add_option("--from", convert.from, "Source code (catalog name, perm(code,cycles) or file)")->required();
    c->add_option("--to", convert.to, "Target code")->required();
    c->add_option("--ancillas", convert.m, "Number of extra ancilla qubits m");
    c->add_option("--seed", convert.seed, "Root seed");
    c->add_option("--retries", convert.retries, "Maximum number of randomized draws");
    c->add_option("--min-distance", convert.min_distance, "Required distance (default: smaller endpoint distance)");
    c->add_option("--gbar-samples", convert.gbar_samples, "Coset samples per bridge operator");
    c->add_option("--out", convert.out, "Write the ConversionPath JSON here");
    c->add_option("--emit-circuit", convert.circuit, "Write the gadget netlist JSON here");

    std::string verify_file, verify_json;
    size_t verify_d = 0;
    bool verify_subsystem = false;
    auto *v = app.add_subcommand("verify", "Check the distance of every code along a path");
    v->add_option("path", verify_file, "ConversionPath JSON")->required();
    v->add_option("--min-distance", verify_d, "Required distance (default: smaller endpoint distance)");
    v->add_flag("--subsystem", verify_subsystem, "Also report per-step subsystem distances");
    v->add_option("--json", verify_json, "Write the distance reports as JSON here");
    uint64_t verify_samples = 0, verify_seed = 0;
    v->add_option("--sampled", verify_samples, "Random errors per weight instead of exhaustive enumeration");
    v->add_option("--seed", verify_seed, "Seed for --sampled");

    std::string sim_file, sim_json, sim_policy = "random";
    size_t sim_trials = 20;
    uint64_t sim_seed = 0;
    auto *s = app.add_subcommand("simulate", "Run the measure-and-correct channel on a tableau simulator");
    s->add_option("path", sim_file, "ConversionPath JSON")->required();
    s->add_option("--trials", sim_trials, "Number of seeded trials");
    s->add_option("--seed", sim_seed, "Root seed");
    s->add_option("--force-outcomes", sim_policy, "random, all-plus, all-minus, or a +/- pattern per step");
    s->add_option("--out", sim_json, "Write the trial reports as JSON here");

    std::string emit_file, emit_json;
    auto *e = app.add_subcommand("emit", "Emit Shor-style measurement gadgets for a path");
    e->add_option("path", emit_file, "ConversionPath JSON")->required();
    e->add_option("--out", emit_json, "Write the gadget netlist JSON here");

    BoundsArgs bounds;
    auto *b = app.add_subcommand("bounds", "Evaluate the failure bound and the basis-ordering probability");
    b->add_option("--n", bounds.n, "Number of qubits");
    b->add_option("--d", bounds.d, "Target distance");
    b->add_option("--eps", bounds.eps, "Target failure probability");
    b->add_option("--m-max", bounds.m_max, "Largest m printed in the curve");
    b->add_flag("--min-ancilla", bounds.min_ancilla, "Report the smallest m with bound < eps");
    b->add_flag("--distance-exponent", bounds.distance_exponent, "Use d/(n+m) instead of (d-1)/(n+m)");
    b->add_option("--lemma1", bounds.lemma1, "Report the ordering probability for GL(F2,n)");
    b->add_option("--samples", bounds.samples, "Monte Carlo samples for --lemma1");
    b->add_option("--seed", bounds.seed, "Seed for --lemma1 Monte Carlo");

    std::string table;
    auto *r = app.add_subcommand("reproduce", "Rebuild and check a built-in conversion fixture");
    r->add_option("table", table, "table1, table2 or table3")->required();

    std::string dist_code;
    size_t dist_cap = 0;
    auto *dcmd = app.add_subcommand("distance", "Exhaustive distance of a code");
    dcmd->add_option("code", dist_code, "Code specifier")->required();
    dcmd->add_option("--cap", dist_cap, "Largest weight enumerated (default: n)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &ex) {
        int code = app.exit(ex, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (threads > 0) {
            set_thread_budget(threads);
        }
        if (*c) {
            return cmd_convert(convert, out);
        }
        if (*v) {
            if (verify_samples > 0) {
                return cmd_verify_sampled(verify_file, verify_d, verify_samples, verify_seed, out);
            }
            return cmd_verify(verify_file, verify_d, verify_subsystem, verify_json, out);
        }
        if (*s) {
            return cmd_simulate(sim_file, sim_trials, sim_seed, sim_policy, sim_json, out);
        }
        if (*e) {
            return cmd_emit(emit_file, emit_json, out);
        }
        if (*b) {
            return cmd_bounds(bounds, out);
        }
        if (*r) {
            return cmd_reproduce(table, out);
        }
        if (*dcmd) {
            return cmd_distance(dist_code, dist_cap, out);
        }
    } catch (const UsageError &ex) {
        err << "error: " << ex.what() << "\n";
        return kExitUsage;
    } catch (const Error &ex) {
        err << "error: " << ex.what() << "\n";
        switch (ex.code()) {
            case ErrorCode::IoError:
                return kExitIo;
            case ErrorCode::ParseError:
            case ErrorCode::FixtureInvalid:
                return kExitMalformedFile;
            case ErrorCode::MismatchedLogicalCount:
            case ErrorCode::DomainError:
            case ErrorCode::Infeasible:
            case ErrorCode::ZeroLogicalQubits:
            case ErrorCode::Unsupported:
                return kExitUsage;
            default:
                return kExitInternal;
        }
    }
    return kExitUsage;
}

}  // namespace codeswitch
