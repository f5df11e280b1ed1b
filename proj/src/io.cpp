// Copyright 2026 The sdcap Authors
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

#include "sdcap/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <utility>

namespace sdcap {

using nlohmann::json;

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string matrix_to_json(const ComplexMatrix& m) {
    std::string out = "[";
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        out += r ? ", [" : "[";
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (c) out += ", ";
            out += "[" + format_double(m(r, c).real()) + ", " + format_double(m(r, c).imag()) + "]";
        }
        out += "]";
    }
    return out + "]";
}

ComplexMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) {
        throw FormatError("matrix must be a non-empty array of rows");
    }
    const std::size_t rows = j.size();
    const std::size_t cols = j.front().is_array() ? j.front().size() : 0;
    ComplexMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols) {
            throw FormatError("matrix row " + std::to_string(r) + " has the wrong length");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            const json& e = j[r][c];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
                throw FormatError("matrix entries must be [re, im] number pairs");
            }
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                Complex(e[0].get<double>(), e[1].get<double>());
        }
    }
    return m;
}

std::string state_to_json(const BipartiteState& s) {
    return "{\"dA\": " + std::to_string(s.dA()) + ", \"dB\": " + std::to_string(s.dB()) +
           ", \"rho\": " + matrix_to_json(s.rho()) + "}\n";
}

namespace {

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
}

int positive_int(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<int>() < 1) {
        throw FormatError(std::string("field '") + key + "' must be a positive integer");
    }
    return j[key].get<int>();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw FormatError("cannot open " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

BipartiteState state_from_json(const std::string& text) {
    json j = parse(text);
    if (!j.is_object() || !j.contains("rho")) {
        throw FormatError("state must be an object with dA, dB and rho");
    }
    return BipartiteState(positive_int(j, "dA"), positive_int(j, "dB"), matrix_from_json(j["rho"]));
}

BipartiteState read_state_file(const std::string& path) { return state_from_json(slurp(path)); }

void write_state_file(const std::string& path, const BipartiteState& s) {
    std::ofstream out(path);
    if (!out) {
        throw FormatError("cannot write " + path);
    }
    out << state_to_json(s);
}

std::string channel_to_json(const KrausChannel& ch) {
    std::string out = "{\"dIn\": " + std::to_string(ch.dIn()) + ", \"dOut\": " + std::to_string(ch.dOut()) +
                      ", \"kraus\": [";
    for (std::size_t k = 0; k < ch.kraus().size(); ++k) {
        if (k) out += ", ";
        out += matrix_to_json(ch.kraus()[k]);
    }
    return out + "]}\n";
}

KrausChannel channel_from_json(const std::string& text) {
    json j = parse(text);
    if (!j.is_object() || !j.contains("kraus") || !j["kraus"].is_array()) {
        throw FormatError("channel must be an object with dIn, dOut and kraus");
    }
    std::vector<ComplexMatrix> kraus;
    for (const auto& k : j["kraus"]) {
        kraus.push_back(matrix_from_json(k));
    }
    return KrausChannel(positive_int(j, "dIn"), positive_int(j, "dOut"), std::move(kraus));
}

json to_json(const ChannelParams& p) {
    std::vector<double> angles(p.angles.data(), p.angles.data() + p.angles.size());
    return {{"dIn", p.dIn}, {"dOut", p.dOut}, {"envDim", p.envDim}, {"angles", angles}};
}

json to_json(const CapacityReport& r) {
    json history = json::array();
    for (const auto& [it, v] : r.history) {
        history.push_back({it, v});
    }
    json outputs = json::array();
    for (const auto& o : r.outputs) {
        outputs.push_back(
            {{"dOut", o.dOut}, {"envDim", o.envDim}, {"bestValue", o.best_value}, {"bestRestart", o.best_restart}});
    }
    json j;
    j["objective"] = to_string(r.objective);
    j["n"] = r.n;
    j["dOut"] = r.requested_dOut ? json(*r.requested_dOut) : json("searched");
    j["bestDOut"] = r.best_params.dOut;
    j["bestValue"] = r.best_value;
    j["rawValue"] = r.raw_value;
    j["bestParams"] = to_json(r.best_params);
    j["bestRestart"] = r.best_restart;
    j["restarts"] = r.restarts;
    j["iterations"] = r.iterations;
    j["evaluations"] = r.evaluations;
    j["history"] = history;
    j["outputs"] = outputs;
    j["seed"] = r.seed;
    j["units"] = r.objective == Objective::cd ? "bits per channel use" : "bits per qubit";
    j["note"] = "best value found for this n and the searched output dimensions; a lower bound on the "
                "supremum over maps and over n";
    return j;
}

json to_json(const StudyReport& r, bool include_records) {
    json j;
    j["trials"] = r.trials;
    j["seed"] = r.seed;
    j["restarts"] = r.budget.restarts;
    j["iterations"] = r.budget.iterations;
    j["tol"] = r.budget.tolerance;
    j["gainTolerance"] = r.gain_tolerance;
    j["gainCount"] = r.gain_count;
    j["maxGain"] = r.max_gain;
    j["entangledTrials"] = r.entangled_trials;
    if (include_records) {
        json recs = json::array();
        for (const auto& x : r.records) {
            recs.push_back({{"seed", x.seed}, {"rank", x.rank}, {"ibBefore", x.before},
                            {"ibAfter", x.best_after}, {"gain", x.gain}});
        }
        j["records"] = recs;
    }
    return j;
}

json to_json(const VerifyReport& r, bool include_records) {
    json j;
    j["preset"] = to_string(r.preset);
    j["pairs"] = r.records.size();
    j["seed"] = r.seed;
    j["maxGap"] = r.max_gap;
    j["maxMapGap"] = r.max_map_gap;
    j["mapUsed"] = r.map_used;
    if (include_records) {
        json recs = json::array();
        for (const auto& x : r.records) {
            recs.push_back({{"seed", x.seed}, {"lhs", x.check.lhs}, {"rhs", x.check.rhs}, {"gap", x.check.gap},
                            {"usedMap", x.check.used_map}});
        }
        j["records"] = recs;
    }
    return j;
}

std::string history_csv(const CapacityReport& r) {
    std::string out = "iteration,value\n";
    for (const auto& [it, v] : r.history) {
        out += std::to_string(it) + "," + format_double(v) + "\n";
    }
    return out;
}

std::string study_csv(const StudyReport& r) {
    std::string out = "seed,ib_before,ib_after,gain,rank\n";
    for (const auto& x : r.records) {
        out += std::to_string(x.seed) + "," + format_double(x.before) + "," + format_double(x.best_after) + "," +
               format_double(x.gain) + "," + std::to_string(x.rank) + "\n";
    }
    return out;
}

std::string verify_csv(const VerifyReport& r) {
    std::string out = "seed,lhs,rhs,gap,used_map,map_holevo,map_bound\n";
    for (const auto& x : r.records) {
        out += std::to_string(x.seed) + "," + format_double(x.check.lhs) + "," + format_double(x.check.rhs) + "," +
               format_double(x.check.gap) + "," + (x.check.used_map ? "1" : "0") + "," +
               format_double(x.check.map_holevo) + "," + format_double(x.check.map_bound) + "\n";
    }
    return out;
}

}  // namespace sdcap
