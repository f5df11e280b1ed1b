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

#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "sdcap/capacity.hpp"
#include "sdcap/channels.hpp"
#include "sdcap/criteria.hpp"
#include "sdcap/errors.hpp"
#include "sdcap/encoding.hpp"
#include "sdcap/states.hpp"

namespace sdcap {

/// Malformed or inconsistent input file.
struct FormatError : Error {
    using Error::Error;
};

// Matrices are row-major arrays of rows, each entry a [re, im] pair.
// Writers print every number with 17 significant digits.

std::string matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

/// {"dA": int, "dB": int, "rho": matrix}
std::string state_to_json(const BipartiteState& s);
BipartiteState state_from_json(const std::string& text);
BipartiteState read_state_file(const std::string& path);
void write_state_file(const std::string& path, const BipartiteState& s);

/// {"dIn": int, "dOut": int, "kraus": [matrix, ...]}
std::string channel_to_json(const KrausChannel& ch);
KrausChannel channel_from_json(const std::string& text);

nlohmann::json to_json(const ChannelParams& p);
nlohmann::json to_json(const CapacityReport& r);
nlohmann::json to_json(const StudyReport& r, bool include_records);
nlohmann::json to_json(const VerifyReport& r, bool include_records);

/// iteration,value
std::string history_csv(const CapacityReport& r);
/// seed,ib_before,ib_after,gain,rank
std::string study_csv(const StudyReport& r);
/// seed,lhs,rhs,gap,used_map,map_holevo,map_bound
std::string verify_csv(const VerifyReport& r);

/// Fixed 17-significant-digit rendering used by every writer.
std::string format_double(double v);

}  // namespace sdcap
