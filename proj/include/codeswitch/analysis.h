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

#ifndef CODESWITCH_ANALYSIS_H
#define CODESWITCH_ANALYSIS_H

#include <cstdint>
#include <optional>
#include <vector>

#include "codeswitch/path.h"
#include "codeswitch/pauli.h"
#include "codeswitch/rng.h"

namespace codeswitch {

enum class Kernel { Serial, Parallel };

struct DistanceReport {
    /// Exact distance when `exact`, otherwise the lower bound cap + 1.
    size_t distance = 0;
    bool exact = false;
    /// Lowest-weight nontrivial logical found (first in enumeration order).
    std::optional<PauliOp> witness;
    /// per_weight_counts[w - 1]: operators examined at weight w. For the weight
    /// where the witness was found this is the witness ordinal + 1.
    std::vector<uint64_t> per_weight_counts;
};

/// Minimum weight of N(S) \ S by exhaustive enumeration up to weight `cap`.
/// Throws ZeroLogicalQubits when k = 0.
DistanceReport code_distance(const StabilizerCode &code, size_t cap, Kernel kernel = Kernel::Parallel);

struct PathVerification {
    bool pass = true;
    std::vector<DistanceReport> reports;
    std::optional<size_t> first_failure;
    std::optional<PauliOp> witness;
};

/// Checks every intermediate (endpoints included) for distance >= d.
/// Each report is exact up to weight d.
PathVerification verify_path(const ConversionPath &path, size_t d, Kernel kernel = Kernel::Parallel);

struct SampledVerification {
    bool pass = true;
    uint64_t errors_checked = 0;
    std::optional<size_t> first_failure;
    std::optional<PauliOp> witness;
};

/// Randomized alternative to verify_path for codes too large to enumerate:
/// draws `samples_per_weight` uniformly random Pauli errors of each weight
/// 1..d-1 on every code and fails on an undetectable one outside the group.
/// A pass is evidence, not proof.
SampledVerification sample_path(const ConversionPath &path, size_t d, uint64_t samples_per_weight, Rng &rng);

enum class ErrorClass {
    InBothGroups,
    InSNotNormalizerSp,
    InSpNotNormalizerS,
    OutsideBothNormalizers,
    Other,
};
const char *error_class_name(ErrorClass c);

/// Assigns an error to one of the four cases of the distance argument
/// (membership is tested on vectors, signs ignored).
ErrorClass classify_error(const PauliOp &e, const StabilizerCode &s, const StabilizerCode &sp);

/// Nonzero syndrome, or e in the group (vector level).
bool detectable(const StabilizerCode &code, const PauliOp &e);

struct SubsystemReport {
    size_t distance = 0;
    bool exact = false;
    std::optional<PauliOp> witness;
    bool tolerates(size_t t) const {
        return distance >= 2 * t + 1;
    }
};

/// Distance of the subsystem code whose gauge group is generated by the step's
/// pair {g, g'} together with the remaining generators of `pre_code`:
/// the least weight of an operator commuting with the remaining generators
/// but outside <remaining, g, g'>. Enumerated up to `cap`.
SubsystemReport step_subsystem_distance(
    const StabilizerCode &pre_code, const ConversionStep &step, size_t cap, Kernel kernel = Kernel::Parallel);

enum class BoundExponent {
    /// (d - 1) / (n + m), as in the union bound over errors of weight < d.
    WeightBelowDistance,
    /// d / (n + m).
    Distance,
};

struct BoundInputs {
    size_t n = 0;
    size_t m = 0;
    size_t d = 1;
    size_t gc = 0;
};

struct FailureBound {
    double log_raw = 0;
    double raw = 0;
    /// raw clamped to [0, 1].
    double effective = 0;
};

/// D(p || q) in nats.
double kl_divergence(double p, double q);

/// 4^{n+m} · exp(-D(p || 3/4)(n+m)) · (gc + 1) · 2^{-gc}, evaluated in log space.
/// Throws DomainError unless p < 3/4, d >= 1 and gc >= m.
FailureBound failure_bound(const BoundInputs &in, BoundExponent exponent = BoundExponent::WeightBelowDistance);

struct AncillaEstimate {
    size_t m = 0;
    FailureBound bound_at_m;
    /// d·log2(n/d) + log2(1/eps), for context only.
    double asymptotic_reference = 0;
};

/// Smallest m with failure_bound(n, m, d, gc = m) < eps, by linear scan.
AncillaEstimate min_ancilla(
    size_t n, size_t d, double epsilon, BoundExponent exponent = BoundExponent::WeightBelowDistance,
    size_t max_m = 1 << 16);

struct Fraction {
    uint64_t numerator = 0;
    uint64_t denominator = 1;
    double value() const {
        return denominator ? static_cast<double>(numerator) / static_cast<double>(denominator) : 0.0;
    }
};

/// ((n-2)·2^{n-1} + 1) / ((2^n - 1)(2^{n-1} - 1)); 0 for n = 1 where no
/// orthogonal nonzero pair exists.
Fraction lemma1_exact(size_t n);

/// The random-basis ordering event for a pair (v, w) of nonzero vectors:
/// with i0 the last set index of U v and i1 the first set index of
/// (U^{-1})^T w, the event is i0 < i1.
bool lemma1_event(const BitMatrix &u, const BitMatrix &u_inverse, const BitVector &v, const BitVector &w);

/// Exact probability of the event over all of GL(F2, n).
/// Throws Infeasible when |GL(F2, n)| exceeds `budget`.
Fraction lemma1_enumerate(size_t n, const BitVector &v, const BitVector &w, uint64_t budget = 1 << 16);

struct Estimate {
    double mean = 0;
    double standard_error = 0;
    uint64_t trials = 0;
};
/// Monte Carlo estimate with U drawn by random_gl.
Estimate lemma1_mc(size_t n, const BitVector &v, const BitVector &w, uint64_t trials, Rng &rng);

/// |GL(F2, n)|, saturating at UINT64_MAX.
uint64_t gl_order(size_t n);

struct CommutativityReport {
    size_t gc = 0;
    size_t m = 0;
    bool h_invertible = false;
    bool gc_at_least_m = false;
    /// rank(G^T B G') from the padded input generator matrices.
    size_t arbitrary_rank = 0;
    bool rank_matches = false;
    bool pass() const {
        return h_invertible && gc_at_least_m && rank_matches;
    }
};

/// rank(G^T B G') for two generator lists on the same qubits.
size_t commutation_rank(const StabilizerCode &s, const StabilizerCode &sp);

/// Pads both codes with m ancillas, decomposes them, and checks the
/// commutativity matrix of the complementary blocks.
CommutativityReport lemma2_check(const StabilizerCode &s, const StabilizerCode &sp, size_t m);

}  // namespace codeswitch

#endif
