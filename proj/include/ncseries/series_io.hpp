// Copyright 2026 The ncseries Authors
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

#ifndef NCSERIES_SERIES_IO_HPP
#define NCSERIES_SERIES_IO_HPP

#include <string>

#include <json.hpp>

#include "ncseries/series.hpp"

namespace ncs {

// {"context": {"max_len": L, "max_weight": W},
//  "terms": [{"word": [k1, ...], "coeff": "p/q"}, ...]}
// Terms are emitted in canonical order, so output is byte-deterministic.
nlohmann::json to_json(const NCSeries& r);
// Inverse of to_json. Out-of-context words and zero coefficients are dropped,
// duplicates summed. Throws nlohmann::json::exception or std::invalid_argument
// on malformed input.
NCSeries series_from_json(const nlohmann::json& j);

// "1 + X1 - 1/2*X1X2", or "0".
std::string to_text(const NCSeries& r);

}  // namespace ncs

#endif  // NCSERIES_SERIES_IO_HPP
