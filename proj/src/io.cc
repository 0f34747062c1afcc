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

#include "codeswitch/io.h"

#include <fstream>
#include <sstream>

#include "codeswitch/error.h"
#include "json.hpp"

namespace codeswitch {

using json = nlohmann::ordered_json;

namespace {

json code_json(const StabilizerCode &code) {
    json gens = json::array();
    for (const auto &g : code.generators()) {
        gens.push_back(g.str());
    }
    return json{{"n", code.n()}, {"k", code.k()}, {"generators", gens}};
}

StabilizerCode code_from(const json &j) {
    size_t n = j.at("n").get<size_t>();
    std::vector<PauliOp> gens;
    for (const auto &g : j.at("generators")) {
        gens.push_back(PauliOp::from_string(g.get<std::string>()));
    }
    StabilizerCode code(n, std::move(gens));
    if (j.contains("k") && j.at("k").get<size_t>() != code.k()) {
        throw Error(ErrorCode::ParseError, "declared k does not match the generator count");
    }
    return code;
}

json report_json(const DistanceReport &r) {
    json j{{"distance", r.distance}, {"exact", r.exact}};
    j["witness"] = r.witness ? json(r.witness->str()) : json(nullptr);
    j["per_weight_counts"] = r.per_weight_counts;
    return j;
}

template <typename F>
auto parsing(F &&f) -> decltype(f()) {
    try {
        return f();
    } catch (const json::exception &e) {
        throw Error(ErrorCode::ParseError, e.what());
    } catch (const Error &e) {
        if (e.code() == ErrorCode::ParseError) {
            throw;
        }
        throw Error(ErrorCode::ParseError, e.what());
    }
}

}  // namespace

std::string code_to_json_text(const StabilizerCode &code) {
    return code_json(code).dump(2) + "\n";
}

StabilizerCode code_from_json_text(std::string_view text) {
    return parsing([&] { return code_from(json::parse(text)); });
}

std::string path_to_json_text(const ConversionPath &path) {
    json j;
    j["n"] = path.num_qubits();
    json qubits = json::array();
    std::string bases;
    for (const auto &a : path.ancillas) {
        qubits.push_back(a.qubit);
        bases.push_back(a.basis);
    }
    j["ancilla_qubits"] = qubits;
    j["ancilla_basis"] = bases;
    j["source"] = code_json(path.source);
    j["target"] = code_json(path.target);
    json steps = json::array();
    for (const auto &s : path.steps) {
        steps.push_back({{"measure", s.measure.str()}, {"correct", s.correct.str()}, {"replaced_index", s.replaced_index}});
    }
    j["steps"] = steps;
    json inter = json::array();
    for (const auto &c : path.intermediates) {
        inter.push_back(code_json(c));
    }
    j["intermediates"] = inter;
    j["seed"] = path.seed;
    j["retry"] = path.retry;
    j["m"] = path.m;
    return j.dump(2) + "\n";
}

ConversionPath path_from_json_text(std::string_view text) {
    return parsing([&] {
        json j = json::parse(text);
        ConversionPath path;
        path.source = code_from(j.at("source"));
        path.target = code_from(j.at("target"));
        size_t n = j.at("n").get<size_t>();
        if (path.source.n() != n || path.target.n() != n) {
            throw Error(ErrorCode::ParseError, "code sizes do not match n");
        }
        auto qubits = j.at("ancilla_qubits").get<std::vector<size_t>>();
        std::string bases = j.value("ancilla_basis", std::string(qubits.size(), 'Z'));
        if (bases.size() != qubits.size()) {
            throw Error(ErrorCode::ParseError, "ancilla_basis length does not match ancilla_qubits");
        }
        for (size_t i = 0; i < qubits.size(); i++) {
            if (qubits[i] >= n || (bases[i] != 'X' && bases[i] != 'Z')) {
                throw Error(ErrorCode::ParseError, "bad ancilla entry");
            }
            path.ancillas.push_back({qubits[i], bases[i]});
        }
        for (const auto &s : j.at("steps")) {
            ConversionStep step;
            step.measure = PauliOp::from_string(s.at("measure").get<std::string>());
            step.correct = PauliOp::from_string(s.at("correct").get<std::string>());
            step.replaced_index = s.at("replaced_index").get<size_t>();
            if (step.measure.num_qubits() != n || step.correct.num_qubits() != n) {
                throw Error(ErrorCode::ParseError, "step operator has the wrong qubit count");
            }
            path.steps.push_back(std::move(step));
        }
        for (const auto &c : j.at("intermediates")) {
            path.intermediates.push_back(code_from(c));
            if (path.intermediates.back().n() != n) {
                throw Error(ErrorCode::ParseError, "intermediate code has the wrong qubit count");
            }
        }
        if (path.intermediates.size() != path.steps.size() + 1) {
            throw Error(ErrorCode::ParseError, "expected one more intermediate than steps");
        }
        path.seed = j.value("seed", uint64_t{0});
        path.retry = j.value("retry", uint64_t{0});
        path.m = j.value("m", size_t{0});
        return path;
    });
}

std::string bundle_to_json_text(const CircuitBundle &bundle) {
    json gadgets = json::array();
    for (const auto &g : bundle.gadgets) {
        json ops = json::array();
        for (const auto &op : g.ops) {
            switch (op.kind) {
                case GadgetOp::PrepareCat:
                    ops.push_back({{"op", "prepare_cat"}, {"size", op.size}});
                    break;
                case GadgetOp::ControlledPauli:
                    ops.push_back({{"op", "cpauli"}, {"cat", op.cat}, {"data", op.data}, {"letter", std::string(1, op.letter)}});
                    break;
                case GadgetOp::MeasureCatX:
                    ops.push_back({{"op", "measure_cat_x"}});
                    break;
                case GadgetOp::ConditionalPauli: {
                    json letters = json::object();
                    for (const auto &[q, l] : op.letters) {
                        letters[std::to_string(q)] = std::string(1, l);
                    }
                    ops.push_back({{"op", "cond_pauli"}, {"condition", "parity!=target"}, {"letters", letters}});
                    break;
                }
            }
        }
        gadgets.push_back({{"step", g.step}, {"measure", g.measure.str()}, {"cat_size", g.cat_size}, {"ops", ops}});
    }
    json j{{"gadgets", gadgets}, {"total_multiqubit_gates", bundle.total_multiqubit_gates}};
    return j.dump(2) + "\n";
}

CircuitBundle bundle_from_json_text(std::string_view text) {
    return parsing([&] {
        json j = json::parse(text);
        CircuitBundle bundle;
        bundle.total_multiqubit_gates = j.at("total_multiqubit_gates").get<size_t>();
        for (const auto &gj : j.at("gadgets")) {
            Gadget g;
            g.step = gj.at("step").get<size_t>();
            g.measure = PauliOp::from_string(gj.at("measure").get<std::string>());
            g.cat_size = gj.at("cat_size").get<size_t>();
            for (const auto &oj : gj.at("ops")) {
                GadgetOp op;
                std::string kind = oj.at("op").get<std::string>();
                if (kind == "prepare_cat") {
                    op.kind = GadgetOp::PrepareCat;
                    op.size = oj.at("size").get<size_t>();
                } else if (kind == "cpauli") {
                    op.kind = GadgetOp::ControlledPauli;
                    op.cat = oj.at("cat").get<size_t>();
                    op.data = oj.at("data").get<size_t>();
                    op.letter = oj.at("letter").get<std::string>().at(0);
                } else if (kind == "measure_cat_x") {
                    op.kind = GadgetOp::MeasureCatX;
                    op.size = g.cat_size;
                } else if (kind == "cond_pauli") {
                    op.kind = GadgetOp::ConditionalPauli;
                    for (const auto &[q, l] : oj.at("letters").items()) {
                        op.letters.emplace_back(std::stoul(q), l.get<std::string>().at(0));
                    }
                } else {
                    throw Error(ErrorCode::ParseError, "unknown gadget op '" + kind + "'");
                }
                g.ops.push_back(std::move(op));
            }
            bundle.gadgets.push_back(std::move(g));
        }
        return bundle;
    });
}

std::string verification_to_json_text(const PathVerification &v, size_t d) {
    json reports = json::array();
    for (const auto &r : v.reports) {
        reports.push_back(report_json(r));
    }
    json j{{"min_distance", d}, {"pass", v.pass}, {"reports", reports}};
    j["first_failure"] = v.first_failure ? json(*v.first_failure) : json(nullptr);
    j["witness"] = v.witness ? json(v.witness->str()) : json(nullptr);
    return j.dump(2) + "\n";
}

std::string simulation_to_json_text(const SimulationSummary &summary) {
    json trials = json::array();
    for (const auto &t : summary.trials) {
        json runs = json::array();
        for (const auto &r : t.runs) {
            json outcomes = json::array();
            json branches = json::array();
            for (const auto &s : r.steps) {
                outcomes.push_back(s.outcome);
                branches.push_back(s.corrected ? "corrected" : (s.random ? "no-correction" : "deterministic"));
            }
            runs.push_back({
                {"basis", std::string(1, r.basis)},
                {"outcomes", outcomes},
                {"branches", branches},
                {"target_stabilized", r.target_stabilized},
                {"ancillas_disentangled", r.ancillas_disentangled},
                {"logical_preserved", r.logical_preserved},
                {"pass", r.pass()},
            });
        }
        trials.push_back({{"seed", t.seed}, {"runs", runs}, {"pass", t.pass()}});
    }
    json j{{"trials", trials}, {"passed", summary.passed}, {"total", summary.trials.size()}};
    return j.dump(2) + "\n";
}

std::string read_text_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::IoError, "cannot read " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::filesystem::path &path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(ErrorCode::IoError, "cannot write " + path.string());
    }
    out << text;
    if (!out) {
        throw Error(ErrorCode::IoError, "write failed for " + path.string());
    }
}

}  // namespace codeswitch
