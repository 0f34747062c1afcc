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

#include "codeswitch/analysis.h"

#include <cmath>
#include <limits>
#include <numeric>

#include "codeswitch/distance_kernel.h"
#include "codeswitch/error.h"
#include "codeswitch/parallel.h"
#include "codeswitch/rsra.h"

namespace codeswitch {

namespace {

std::optional<LogicalSearch::Hit> scan(const LogicalSearch &search, size_t w, Kernel kernel) {
    if (kernel == Kernel::Serial) {
        return search.scan_serial(w);
    }
    return search.scan_parallel(w, thread_budget());
}

bool in_span(const StabilizerCode &code, const PauliOp &e) {
    return in_group(code, e).in_group;
}

}  // namespace

DistanceReport code_distance(const StabilizerCode &code, size_t cap, Kernel kernel) {
    if (code.k() == 0) {
        throw Error(ErrorCode::ZeroLogicalQubits, "distance is undefined for a code without logical qubits");
    }
    LogicalSearch search(code.n(), code.generators(), code.generators());
    DistanceReport report;
    for (size_t w = 1; w <= std::min(cap, code.n()); w++) {
        auto hit = scan(search, w, kernel);
        if (hit) {
            report.distance = w;
            report.exact = true;
            report.witness = std::move(hit->op);
            report.per_weight_counts.push_back(hit->ordinal + 1);
            return report;
        }
        report.per_weight_counts.push_back(search.count_at_weight(w));
    }
    report.distance = cap + 1;
    return report;
}

PathVerification verify_path(const ConversionPath &path, size_t d, Kernel kernel) {
    PathVerification out;
    for (size_t i = 0; i < path.intermediates.size(); i++) {
        auto report = code_distance(path.intermediates[i], d, kernel);
        if (report.distance < d && out.pass) {
            out.pass = false;
            out.first_failure = i;
            out.witness = report.witness;
        }
        out.reports.push_back(std::move(report));
    }
    return out;
}

SampledVerification sample_path(const ConversionPath &path, size_t d, uint64_t samples_per_weight, Rng &rng) {
    static constexpr char kLetters[3] = {'X', 'Y', 'Z'};
    SampledVerification out;
    size_t n = path.num_qubits();
    std::vector<size_t> qubits(n);
    for (size_t i = 0; i < path.intermediates.size() && out.pass; i++) {
        const auto &code = path.intermediates[i];
        for (size_t w = 1; w < d && w <= n && out.pass; w++) {
            for (uint64_t s = 0; s < samples_per_weight; s++) {
                std::iota(qubits.begin(), qubits.end(), size_t{0});
                PauliOp e(n);
                for (size_t j = 0; j < w; j++) {
                    std::swap(qubits[j], qubits[j + uniform_below(rng, n - j)]);
                    e.set_letter(qubits[j], kLetters[uniform_below(rng, 3)]);
                }
                out.errors_checked++;
                if (syndrome(code, e).is_zero() && !in_span(code, e)) {
                    out.pass = false;
                    out.first_failure = i;
                    out.witness = e;
                    break;
                }
            }
        }
    }
    return out;
}

const char *error_class_name(ErrorClass c) {
    switch (c) {
        case ErrorClass::InBothGroups:
            return "in-both-groups";
        case ErrorClass::InSNotNormalizerSp:
            return "in-source-not-target-normalizer";
        case ErrorClass::InSpNotNormalizerS:
            return "in-target-not-source-normalizer";
        case ErrorClass::OutsideBothNormalizers:
            return "outside-both-normalizers";
        case ErrorClass::Other:
            return "other";
    }
    return "?";
}

ErrorClass classify_error(const PauliOp &e, const StabilizerCode &s, const StabilizerCode &sp) {
    bool in_s = in_span(s, e);
    bool in_sp = in_span(sp, e);
    bool in_ns = syndrome(s, e).is_zero();
    bool in_nsp = syndrome(sp, e).is_zero();
    if (in_s && in_sp) {
        return ErrorClass::InBothGroups;
    }
    if (in_s && !in_nsp) {
        return ErrorClass::InSNotNormalizerSp;
    }
    if (in_sp && !in_ns) {
        return ErrorClass::InSpNotNormalizerS;
    }
    if (!in_ns && !in_nsp) {
        return ErrorClass::OutsideBothNormalizers;
    }
    return ErrorClass::Other;
}

bool detectable(const StabilizerCode &code, const PauliOp &e) {
    return !syndrome(code, e).is_zero() || in_span(code, e);
}

SubsystemReport step_subsystem_distance(
    const StabilizerCode &pre_code, const ConversionStep &step, size_t cap, Kernel kernel) {
    std::vector<PauliOp> remaining;
    for (size_t i = 0; i < pre_code.num_generators(); i++) {
        if (i != step.replaced_index) {
            remaining.push_back(pre_code.generator(i));
        }
    }
    std::vector<PauliOp> gauge = remaining;
    gauge.push_back(step.correct);
    gauge.push_back(step.measure);
    LogicalSearch search(pre_code.n(), remaining, gauge);
    SubsystemReport report;
    for (size_t w = 1; w <= std::min(cap, pre_code.n()); w++) {
        if (auto hit = scan(search, w, kernel)) {
            report.distance = w;
            report.exact = true;
            report.witness = std::move(hit->op);
            return report;
        }
    }
    report.distance = cap + 1;
    return report;
}

double kl_divergence(double p, double q) {
    auto term = [](double a, double b) { return a == 0 ? 0.0 : a * std::log(a / b); };
    return term(p, q) + term(1 - p, 1 - q);
}

FailureBound failure_bound(const BoundInputs &in, BoundExponent exponent) {
    if (in.d < 1) {
        throw Error(ErrorCode::DomainError, "d must be at least 1");
    }
    if (in.gc < in.m) {
        throw Error(ErrorCode::DomainError, "|G_C| must be at least m");
    }
    size_t total = in.n + in.m;
    if (total == 0) {
        throw Error(ErrorCode::DomainError, "n + m must be positive");
    }
    double weight = exponent == BoundExponent::WeightBelowDistance ? static_cast<double>(in.d - 1) : static_cast<double>(in.d);
    double p = weight / static_cast<double>(total);
    if (!(p < 0.75)) {
        throw Error(ErrorCode::DomainError, "weight fraction must be below 3/4");
    }
    double nt = static_cast<double>(total);
    FailureBound out;
    out.log_raw = nt * std::log(4.0) - kl_divergence(p, 0.75) * nt + std::log(static_cast<double>(in.gc) + 1) -
                  static_cast<double>(in.gc) * std::log(2.0);
    out.raw = std::exp(out.log_raw);
    out.effective = std::min(1.0, out.raw);
    return out;
}

AncillaEstimate min_ancilla(size_t n, size_t d, double epsilon, BoundExponent exponent, size_t max_m) {
    if (!(epsilon > 0)) {
        throw Error(ErrorCode::DomainError, "epsilon must be positive");
    }
    if (n == 0 || d < 1) {
        throw Error(ErrorCode::DomainError, "n and d must be positive");
    }
    for (size_t m = 0; m <= max_m; m++) {
        FailureBound b;
        try {
            b = failure_bound({n, m, d, m}, exponent);
        } catch (const Error &) {
            continue;
        }
        if (b.raw < epsilon) {
            AncillaEstimate out;
            out.m = m;
            out.bound_at_m = b;
            out.asymptotic_reference = static_cast<double>(d) * std::log2(static_cast<double>(n) / d) + std::log2(1 / epsilon);
            return out;
        }
    }
    throw Error(ErrorCode::Infeasible, "no m up to " + std::to_string(max_m) + " brings the bound below epsilon");
}

Fraction lemma1_exact(size_t n) {
    if (n < 2) {
        return {0, 1};
    }
    if (n > 31) {
        throw Error(ErrorCode::Unsupported, "closed form limited to n <= 31");
    }
    uint64_t half = uint64_t{1} << (n - 1);
    uint64_t num = (n - 2) * half + 1;
    uint64_t den = (2 * half - 1) * (half - 1);
    uint64_t g = std::gcd(num, den);
    return {num / g, den / g};
}

bool lemma1_event(const BitMatrix &u, const BitMatrix &u_inverse, const BitVector &v, const BitVector &w) {
    auto i0 = u.apply(v).last_set();
    auto i1 = u_inverse.transposed().apply(w).first_set();
    return i0 && i1 && *i0 < *i1;
}

uint64_t gl_order(size_t n) {
    unsigned __int128 r = 1;
    for (size_t i = 0; i < n; i++) {
        if (n >= 64) {
            return std::numeric_limits<uint64_t>::max();
        }
        r *= (uint64_t{1} << n) - (uint64_t{1} << i);
        if (r > std::numeric_limits<uint64_t>::max()) {
            return std::numeric_limits<uint64_t>::max();
        }
    }
    return static_cast<uint64_t>(r);
}

Fraction lemma1_enumerate(size_t n, const BitVector &v, const BitVector &w, uint64_t budget) {
    if (v.size() != n || w.size() != n) {
        throw Error(ErrorCode::LengthMismatch, "vectors must have n entries");
    }
    uint64_t order = gl_order(n);
    if (order > budget || n * n > 62) {
        throw Error(
            ErrorCode::Infeasible,
            "|GL(F2," + std::to_string(n) + ")| = " + std::to_string(order) + " exceeds the enumeration budget");
    }
    const int64_t total = int64_t{1} << (n * n);
    uint64_t hits = 0;
    uint64_t count = 0;
#pragma omp parallel for reduction(+ : hits, count) num_threads(thread_budget())
    for (int64_t bits = 0; bits < total; bits++) {
        BitMatrix u(n, n);
        for (size_t r = 0; r < n; r++) {
            for (size_t c = 0; c < n; c++) {
                u.set(r, c, (bits >> (r * n + c)) & 1);
            }
        }
        if (rank(u) != n) {
            continue;
        }
        count++;
        if (lemma1_event(u, invert(u), v, w)) {
            hits++;
        }
    }
    uint64_t g = std::gcd(hits, count);
    if (g == 0) {
        return {0, 1};
    }
    return {hits / g, count / g};
}

Estimate lemma1_mc(size_t n, const BitVector &v, const BitVector &w, uint64_t trials, Rng &rng) {
    uint64_t hits = 0;
    for (uint64_t t = 0; t < trials; t++) {
        BitMatrix u = random_gl(n, rng);
        if (lemma1_event(u, invert(u), v, w)) {
            hits++;
        }
    }
    Estimate out;
    out.trials = trials;
    out.mean = trials ? static_cast<double>(hits) / static_cast<double>(trials) : 0;
    out.standard_error = trials ? std::sqrt(out.mean * (1 - out.mean) / static_cast<double>(trials)) : 0;
    return out;
}

size_t commutation_rank(const StabilizerCode &s, const StabilizerCode &sp) {
    BitMatrix m(s.num_generators(), sp.num_generators());
    for (size_t i = 0; i < s.num_generators(); i++) {
        for (size_t j = 0; j < sp.num_generators(); j++) {
            m.set(i, j, !s.generator(i).commutes_with(sp.generator(j)));
        }
    }
    return rank(m);
}

CommutativityReport lemma2_check(const StabilizerCode &s, const StabilizerCode &sp, size_t m) {
    PaddedPair padded = pad(s, sp, m);
    CommutativityReport out;
    out.m = m;
    out.arbitrary_rank = commutation_rank(padded.source, padded.target);
    try {
        Decomposition dec = decompose(padded, m);
        out.gc = dec.gC.size();
        out.h_invertible = dec.commutativity_matrix().is_identity();
    } catch (const Error &e) {
        if (e.code() != ErrorCode::SingularCommutativityMatrix) {
            throw;
        }
        out.h_invertible = false;
    }
    out.gc_at_least_m = out.gc >= m;
    out.rank_matches = out.arbitrary_rank == out.gc;
    return out;
}

}  // namespace codeswitch
