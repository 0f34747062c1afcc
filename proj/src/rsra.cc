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

#include "codeswitch/rsra.h"

#include <algorithm>
#include <exception>

#include "codeswitch/analysis.h"
#include "codeswitch/error.h"
#include "codeswitch/parallel.h"

namespace codeswitch {

namespace {

PauliOp widen(const PauliOp &op, size_t n) {
    BitVector xs(n);
    BitVector zs(n);
    for (size_t q = 0; q < op.num_qubits(); q++) {
        xs.set(q, op.xs().get(q));
        zs.set(q, op.zs().get(q));
    }
    return PauliOp(std::move(xs), std::move(zs), op.negative());
}

std::vector<PauliOp> widen_all(const StabilizerCode &code, size_t n) {
    std::vector<PauliOp> out;
    for (const auto &g : code.generators()) {
        out.push_back(widen(g, n));
    }
    return out;
}

std::vector<PauliOp> concat(std::initializer_list<const std::vector<PauliOp> *> parts) {
    std::vector<PauliOp> out;
    for (const auto *p : parts) {
        out.insert(out.end(), p->begin(), p->end());
    }
    return out;
}

/// Elements of `group` (signed, as products of its generators) whose vectors
/// commute with every operator in `others`.
std::vector<PauliOp> normalized_part(const std::vector<PauliOp> &group, const std::vector<PauliOp> &others, size_t n) {
    BitMatrix m(group.size(), others.size());
    for (size_t i = 0; i < group.size(); i++) {
        for (size_t j = 0; j < others.size(); j++) {
            m.set(i, j, !group[i].commutes_with(others[j]));
        }
    }
    // c · M = 0  <=>  M^T c = 0.
    BitMatrix ker = kernel(m.transposed());
    std::vector<PauliOp> out;
    for (const auto &c : ker.rows()) {
        out.push_back(product_of(group, c, n));
    }
    return out;
}

/// Appends to `basis` the members of `pool` that extend it greedily (in order).
void extend_with(std::vector<PauliOp> &basis, const std::vector<PauliOp> &pool, size_t n) {
    BitMatrix partial = symplectic_matrix(basis, n);
    BitMatrix space = symplectic_matrix(pool, n);
    for (size_t idx : extend_basis_indices(partial, space)) {
        basis.push_back(pool[idx]);
    }
}

/// out[i] = prod_j ops[j]^{a[i][j]}.
std::vector<PauliOp> combine(const BitMatrix &a, const std::vector<PauliOp> &ops, size_t n) {
    std::vector<PauliOp> out;
    for (size_t i = 0; i < a.num_rows(); i++) {
        out.push_back(product_of(ops, a.row(i), n));
    }
    return out;
}

/// ops[i] <- ops[i] · prod_j extra[j]^{v[i][j]}.
void absorb(std::vector<PauliOp> &ops, const BitMatrix &v, const std::vector<PauliOp> &extra, size_t n) {
    for (size_t i = 0; i < ops.size(); i++) {
        if (!extra.empty()) {
            ops[i] = multiply(ops[i], product_of(extra, v.row(i), n));
        }
    }
}

}  // namespace

BitMatrix Decomposition::commutativity_matrix() const {
    BitMatrix h(gCp.size(), gC.size());
    for (size_t i = 0; i < gCp.size(); i++) {
        for (size_t j = 0; j < gC.size(); j++) {
            h.set(i, j, !gCp[i].commutes_with(gC[j]));
        }
    }
    return h;
}

PaddedPair pad(const StabilizerCode &source, const StabilizerCode &target, size_t m) {
    if (source.k() != target.k()) {
        throw Error(
            ErrorCode::MismatchedLogicalCount,
            "source encodes " + std::to_string(source.k()) + " logical qubits but target encodes " +
                std::to_string(target.k()));
    }
    size_t base = std::max(source.n(), target.n());
    size_t n = base + m;
    auto s = widen_all(source, n);
    auto t = widen_all(target, n);
    PaddedPair out;
    for (size_t q = source.n(); q < base; q++) {
        s.push_back(PauliOp::single(n, q, 'Z'));
        out.source_ancillas.push_back({q, 'Z'});
    }
    for (size_t q = target.n(); q < base; q++) {
        t.push_back(PauliOp::single(n, q, 'Z'));
        out.ancillas.push_back({q, 'Z'});
    }
    for (size_t q = base; q < n; q++) {
        s.push_back(PauliOp::single(n, q, 'Z'));
        out.source_ancillas.push_back({q, 'Z'});
        t.push_back(PauliOp::single(n, q, 'X'));
        out.ancillas.push_back({q, 'X'});
    }
    out.source = StabilizerCode(n, std::move(s));
    out.target = StabilizerCode(n, std::move(t));
    return out;
}

Decomposition decompose(const PaddedPair &padded, size_t m) {
    const auto &s = padded.source;
    const auto &sp = padded.target;
    size_t n = s.n();
    if (sp.n() != n) {
        throw Error(ErrorCode::LengthMismatch, "padded codes have different qubit counts");
    }
    Decomposition dec;
    dec.padded_n = n;
    dec.m = m;
    dec.source = s;
    dec.target = sp;
    dec.ancillas = padded.ancillas;
    dec.source_ancillas = padded.source_ancillas;

    // Shared vectors. An element whose sign differs between the groups is not
    // in the signed intersection; products of two such elements are.
    BitMatrix shared = intersect_rowspaces(s.generator_matrix(), sp.generator_matrix());
    std::optional<PauliOp> odd_s, odd_sp;
    for (const auto &row : shared.rows()) {
        PauliOp letters = PauliOp::from_symplectic(row);
        PauliOp in_s = *group_element(s.generators(), letters, n);
        PauliOp in_sp = *group_element(sp.generators(), letters, n);
        if (in_s == in_sp) {
            dec.gA.push_back(in_s);
        } else if (!odd_s) {
            odd_s = in_s;
            odd_sp = in_sp;
        } else {
            dec.gA.push_back(multiply(in_s, *odd_s));
        }
    }

    auto ns = normalized_part(s.generators(), sp.generators(), n);
    auto nsp = normalized_part(sp.generators(), s.generators(), n);
    {
        std::vector<PauliOp> basis = dec.gA;
        if (odd_s) {
            basis.push_back(*odd_s);
        }
        extend_with(basis, ns, n);
        dec.gB.assign(basis.begin() + dec.gA.size(), basis.end());
    }
    {
        std::vector<PauliOp> basis = dec.gA;
        if (odd_sp) {
            basis.push_back(*odd_sp);
        }
        extend_with(basis, nsp, n);
        dec.gBp.assign(basis.begin() + dec.gA.size(), basis.end());
    }
    {
        auto basis = concat({&dec.gA, &dec.gB});
        extend_with(basis, s.generators(), n);
        dec.gC.assign(basis.begin() + dec.gA.size() + dec.gB.size(), basis.end());
    }
    {
        auto basis = concat({&dec.gA, &dec.gBp});
        extend_with(basis, sp.generators(), n);
        dec.gCp.assign(basis.begin() + dec.gA.size() + dec.gBp.size(), basis.end());
    }
    if (dec.gB.size() != dec.gBp.size() || dec.gC.size() != dec.gCp.size()) {
        throw Error(ErrorCode::SingularCommutativityMatrix, "complementary blocks have different sizes");
    }

    BitMatrix h = dec.commutativity_matrix();
    BitMatrix h_inverse;
    try {
        h_inverse = invert(h);
    } catch (const Error &) {
        throw Error(ErrorCode::SingularCommutativityMatrix, "commutativity matrix is singular");
    }
    dec.gCp = combine(h_inverse, dec.gCp, n);
    return dec;
}

Decomposition randomize_with(Decomposition dec, const BitMatrix &v, const BitMatrix &vp, const BitMatrix &u) {
    size_t n = dec.padded_n;
    size_t c = dec.gC.size();
    if (u.num_rows() != c || u.num_cols() != c || v.num_rows() != c || vp.num_rows() != c ||
        v.num_cols() != dec.gB.size() || vp.num_cols() != dec.gBp.size()) {
        throw Error(ErrorCode::LengthMismatch, "randomization matrices do not match the block sizes");
    }
    BitMatrix u_inverse_t = invert(u).transposed();
    absorb(dec.gC, v, dec.gB, n);
    absorb(dec.gCp, vp, dec.gBp, n);
    dec.gC = combine(u, dec.gC, n);
    dec.gCp = combine(u_inverse_t, dec.gCp, n);
    return dec;
}

Decomposition randomize(Decomposition dec, Rng &rng) {
    size_t c = dec.gC.size();
    BitMatrix v = BitMatrix::random(c, dec.gB.size(), rng);
    BitMatrix vp = BitMatrix::random(c, dec.gBp.size(), rng);
    BitMatrix u = random_gl(c, rng);
    return randomize_with(std::move(dec), v, vp, u);
}

std::vector<std::pair<PauliOp, bool>> gbar_constraints(const Decomposition &dec, size_t i) {
    std::vector<std::pair<PauliOp, bool>> out;
    auto add = [&](const PauliOp &op, bool anticommute) { out.emplace_back(op, anticommute); };
    for (const auto &g : dec.gA) {
        add(g, false);
    }
    for (const auto &g : dec.gC) {
        add(g, false);
    }
    for (const auto &g : dec.gCp) {
        add(g, false);
    }
    for (size_t j = i + 1; j < dec.gB.size(); j++) {
        add(dec.gB[j], false);
        add(dec.gBp[j], false);
    }
    for (size_t j = 0; j < i && j < dec.gbars.size(); j++) {
        add(dec.gbars[j], false);
    }
    add(dec.gB[i], true);
    add(dec.gBp[i], true);
    return out;
}

Decomposition solve_gbars(Decomposition dec, Rng *rng, size_t samples) {
    size_t n = dec.padded_n;
    dec.gbars.clear();
    for (size_t i = 0; i < dec.gB.size(); i++) {
        auto constraints = gbar_constraints(dec, i);
        std::vector<PauliOp> ops;
        BitVector rhs(constraints.size());
        for (size_t r = 0; r < constraints.size(); r++) {
            ops.push_back(constraints[r].first);
            rhs.set(r, constraints[r].second);
        }
        AffineSolution sol;
        try {
            sol = solve_affine(check_matrix(ops, n), rhs);
        } catch (const Error &) {
            throw Error(ErrorCode::Inconsistent, "no bridge operator satisfies the constraints for row " + std::to_string(i));
        }
        PauliOp best = PauliOp::from_symplectic(sol.particular);
        if (rng != nullptr && samples > 0 && sol.kernel.num_rows() > 0) {
            for (size_t t = 0; t < samples; t++) {
                BitVector coeffs = BitVector::random(sol.kernel.num_rows(), *rng);
                PauliOp candidate = PauliOp::from_symplectic(sol.particular ^ sol.kernel.combine_rows(coeffs));
                size_t cw = candidate.weight();
                size_t bw = best.weight();
                if (cw < bw || (cw == bw && candidate.letters() < best.letters())) {
                    best = std::move(candidate);
                }
            }
        }
        dec.gbars.push_back(std::move(best));
    }
    return dec;
}

void check_adjacent(const StabilizerCode &code, const ConversionStep &step) {
    if (step.replaced_index >= code.num_generators()) {
        throw Error(ErrorCode::AdjacencyViolation, "replaced index out of range");
    }
    if (code.generator(step.replaced_index) != step.correct) {
        throw Error(ErrorCode::AdjacencyViolation, "outgoing operator is not the generator at the replaced index");
    }
    if (step.measure.commutes_with(step.correct)) {
        throw Error(ErrorCode::AdjacencyViolation, "incoming " + step.measure.str() + " commutes with outgoing " + step.correct.str());
    }
    for (size_t i = 0; i < code.num_generators(); i++) {
        if (i != step.replaced_index && !step.measure.commutes_with(code.generator(i))) {
            throw Error(
                ErrorCode::AdjacencyViolation,
                "incoming " + step.measure.str() + " anticommutes with generator " + std::to_string(i));
        }
    }
}

ConversionPath build_path(const Decomposition &dec) {
    if (dec.gbars.size() != dec.gB.size()) {
        throw Error(ErrorCode::AdjacencyViolation, "bridge operators have not been solved");
    }
    size_t n = dec.padded_n;
    std::vector<PauliOp> current;
    // Generator slots of the B and C rows in the working list.
    std::vector<size_t> slot_b(dec.gB.size()), slot_c(dec.gC.size());
    // Step schedule as (kind, index, phase) with phase 0: g -> ḡ, 1: ḡ -> g'.
    struct Move {
        char kind;
        size_t index;
        int phase;
    };
    std::vector<Move> moves;
    if (dec.layout.empty()) {
        current = concat({&dec.gA, &dec.gB, &dec.gC});
        for (size_t i = 0; i < dec.gB.size(); i++) {
            slot_b[i] = dec.gA.size() + i;
            moves.push_back({'B', i, 0});
        }
        for (size_t i = 0; i < dec.gC.size(); i++) {
            slot_c[i] = dec.gA.size() + dec.gB.size() + i;
            moves.push_back({'C', i, 0});
        }
        for (size_t i = dec.gB.size(); i-- > 0;) {
            moves.push_back({'B', i, 1});
        }
    } else {
        for (const auto &row : dec.layout) {
            size_t slot = current.size();
            if (row.kind == 'A') {
                current.push_back(dec.gA.at(row.index));
            } else if (row.kind == 'B') {
                current.push_back(dec.gB.at(row.index));
                slot_b.at(row.index) = slot;
                moves.push_back({'B', row.index, 0});
                moves.push_back({'B', row.index, 1});
            } else {
                current.push_back(dec.gC.at(row.index));
                slot_c.at(row.index) = slot;
                moves.push_back({'C', row.index, 0});
            }
        }
        if (current.size() != dec.gA.size() + dec.gB.size() + dec.gC.size()) {
            throw Error(ErrorCode::FixtureInvalid, "layout does not cover every row exactly once");
        }
    }

    ConversionPath path;
    path.source = dec.source;
    path.target = dec.target;
    path.ancillas = dec.ancillas;
    path.m = dec.m;
    path.intermediates.emplace_back(n, current);
    for (const auto &mv : moves) {
        ConversionStep step;
        if (mv.kind == 'C') {
            step.replaced_index = slot_c[mv.index];
            step.measure = dec.gCp[mv.index];
        } else {
            step.replaced_index = slot_b[mv.index];
            step.measure = mv.phase == 0 ? dec.gbars[mv.index] : dec.gBp[mv.index];
        }
        step.correct = current[step.replaced_index];
        check_adjacent(path.intermediates.back(), step);
        current[step.replaced_index] = step.measure;
        path.intermediates.emplace_back(n, current);
        path.steps.push_back(std::move(step));
    }
    if (!path.intermediates.front().same_group(dec.source)) {
        throw Error(ErrorCode::EndpointMismatch, "first code does not generate the source group");
    }
    if (!path.intermediates.back().same_group(dec.target)) {
        throw Error(ErrorCode::EndpointMismatch, "last code does not generate the target group");
    }
    return path;
}

Decomposition reversed(const Decomposition &dec) {
    Decomposition r = dec;
    std::swap(r.source, r.target);
    std::swap(r.ancillas, r.source_ancillas);
    std::swap(r.gB, r.gBp);
    r.gC.assign(dec.gCp.rbegin(), dec.gCp.rend());
    r.gCp.assign(dec.gC.rbegin(), dec.gC.rend());
    r.layout.assign(dec.layout.rbegin(), dec.layout.rend());
    for (auto &row : r.layout) {
        if (row.kind == 'C') {
            row.index = dec.gC.size() - 1 - row.index;
        }
    }
    return r;
}

ConversionPath draw_path(const Decomposition &base, const RsraConfig &config, uint64_t retry) {
    Rng rng(child_seed(config.seed, retry));
    Decomposition dec = randomize(base, rng);
    dec = solve_gbars(std::move(dec), &rng, config.gbar_weight_search);
    ConversionPath path = build_path(dec);
    path.seed = config.seed;
    path.retry = retry;
    return path;
}

namespace {

struct Evaluation {
    std::optional<ConversionPath> path;
    bool success = false;
    size_t min_distance = 0;
    size_t code_index = 0;
    PauliOp witness;
};

Evaluation evaluate(const Decomposition &base, const RsraConfig &config, uint64_t retry) {
    Evaluation ev;
    ConversionPath path = draw_path(base, config, retry);
    size_t target = std::max<size_t>(config.min_distance, 1);
    ev.min_distance = target;
    ev.success = true;
    for (size_t i = 0; i < path.intermediates.size(); i++) {
        DistanceReport rep = code_distance(path.intermediates[i], target - 1, Kernel::Serial);
        if (rep.distance < ev.min_distance) {
            if (ev.success) {
                ev.code_index = i;
                ev.witness = *rep.witness;
            }
            ev.success = false;
            ev.min_distance = rep.distance;
        }
    }
    if (ev.success) {
        ev.path = std::move(path);
    }
    return ev;
}

}  // namespace

SearchResult search(const StabilizerCode &source, const StabilizerCode &target, const RsraConfig &config) {
    if (config.min_distance < 1) {
        throw Error(ErrorCode::DomainError, "min_distance must be at least 1");
    }
    PaddedPair padded = pad(source, target, config.m);
    Decomposition base = decompose(padded, config.m);
    int threads = config.threads > 0 ? config.threads : thread_budget();
    const uint64_t batch = static_cast<uint64_t>(std::max(threads, 1)) * 8;

    SearchResult result;
    for (uint64_t start = 0; start < config.max_retries; start += batch) {
        uint64_t end = std::min<uint64_t>(start + batch, config.max_retries);
        std::vector<Evaluation> evals(end - start);
        std::vector<std::exception_ptr> errors(end - start);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
        for (int64_t r = static_cast<int64_t>(start); r < static_cast<int64_t>(end); r++) {
            try {
                evals[r - start] = evaluate(base, config, static_cast<uint64_t>(r));
            } catch (...) {
                errors[r - start] = std::current_exception();
            }
        }
        for (uint64_t r = start; r < end; r++) {
            if (errors[r - start]) {
                std::rethrow_exception(errors[r - start]);
            }
            auto &ev = evals[r - start];
            result.best_min_distance = std::max(result.best_min_distance, ev.min_distance);
            result.retries = r + 1;
            if (ev.success) {
                result.path = std::move(ev.path);
                return result;
            }
            result.rejections.push_back({r, ev.code_index, ev.witness, ev.min_distance});
        }
    }
    return result;
}

}  // namespace codeswitch
