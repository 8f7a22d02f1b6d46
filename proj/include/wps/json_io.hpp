// Copyright 2026 The wpscount Authors
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

#ifndef WPS_JSON_IO_HPP
#define WPS_JSON_IO_HPP

#include <optional>

#include <json.hpp>

#include "wps/binform.hpp"
#include "wps/census.hpp"
#include "wps/counting.hpp"
#include "wps/motive.hpp"
#include "wps/tate.hpp"
#include "wps/verify.hpp"
#include "wps/wls.hpp"

namespace wps {

using Json = nlohmann::ordered_json;

/// Readers throw ParseError naming the JSON path of the first problem.
PrimeField field_from_json(const Json& j, const std::string& where = "$");
BinaryForm form_from_json(const Json& j, const PrimeField& field, const std::string& where = "$");
Place place_from_json(const Json& j, const PrimeField& field, const std::string& where = "$");
/// {"p"?, "weights", "n", "forms"}; `p` overrides or supplies the field.
WeightedLinearSeries series_from_json(const Json& j, std::optional<std::uint64_t> p = std::nullopt);
/// {"p"?, "n", "a4", "a6"} or a series with weights (4,6).
WeierstrassModel model_from_json(const Json& j, std::optional<std::uint64_t> p = std::nullopt);
MotiveClass motive_from_json(const Json& j, const std::string& where = "$");

Json to_json(const Rational& q);
Json to_json(const BinaryForm& f);
Json to_json(const Place& x);
Json to_json(const Divisor& d);
Json to_json(const TwistDatum& t);
Json to_json(const WeightedLinearSeries& w);
Json to_json(const HeightReport& r);
Json to_json(const FiberReport& r);
Json to_json(const Classification& c);
Json to_json(const MotiveClass& m);
Json to_json(const CensusResult& r);
Json to_json(const CountResult& r);
Json to_json(const CaseResult& r);

}  // namespace wps

#endif  // WPS_JSON_IO_HPP
