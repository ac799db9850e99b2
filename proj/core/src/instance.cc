// Copyright 2026 The kip Authors
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

#include "kip/instance.h"

#include <fstream>
#include <iterator>
#include <set>
#include <sstream>

#include "json.hpp"
#include "kip/error.h"

namespace kip {
namespace {

using Json = nlohmann::json;

Int ParseValue(const Json& value, const std::string& field) {
  if (value.is_number_unsigned()) {
    return Int(std::to_string(value.get<std::uint64_t>()), 10);
  }
  if (value.is_number_integer()) {
    throw Error(ErrorCode::kNegativeValue, "field '" + field + "'");
  }
  if (value.is_string()) {
    const auto& text = value.get_ref<const std::string&>();
    if (!text.empty() && text.front() == '-' &&
        ParseNonNegativeInt(std::string_view(text).substr(1))) {
      throw Error(ErrorCode::kNegativeValue, "field '" + field + "'");
    }
    if (auto v = ParseNonNegativeInt(text)) return *v;
  }
  if (value.is_number_float() && value.get<double>() < 0) {
    throw Error(ErrorCode::kNegativeValue, "field '" + field + "'");
  }
  throw Error(ErrorCode::kSchemaViolation,
              "field '" + field +
                  "' must be a non-negative integer (use a decimal string "
                  "beyond 64 bits)");
}

std::vector<Int> ParseArray(const Json& value, const std::string& field,
                            std::size_t expected) {
  if (!value.is_array()) {
    throw Error(ErrorCode::kSchemaViolation,
                "field '" + field + "' must be an array");
  }
  if (value.size() != expected) {
    throw Error(ErrorCode::kSchemaViolation,
                "field '" + field + "' has length " +
                    std::to_string(value.size()) + ", expected " +
                    std::to_string(expected));
  }
  std::vector<Int> out;
  out.reserve(expected);
  for (const auto& v : value) out.push_back(ParseValue(v, field));
  return out;
}

std::size_t ParseSize(const Json& value, const std::string& field) {
  const Int v = ParseValue(value, field);
  auto narrowed = ToUint64(v);
  if (!narrowed || *narrowed > (1ull << 40)) {
    throw Error(ErrorCode::kSchemaViolation,
                "field '" + field + "' is too large");
  }
  return static_cast<std::size_t>(*narrowed);
}

void AppendValue(std::string& out, const Int& v) {
  if (ToUint64(v)) {
    out += v.get_str();
  } else {
    out += '"';
    out += v.get_str();
    out += '"';
  }
}

void AppendArray(std::string& out, const std::vector<Int>& values) {
  out += '[';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    AppendValue(out, values[i]);
  }
  out += ']';
}

}  // namespace

void Instance::Validate() const {
  if (t < 1) {
    throw Error(ErrorCode::kSchemaViolation, "field 't' must be at least 1");
  }
  if (profits.size() != n) {
    throw Error(ErrorCode::kSchemaViolation, "field 'p' length != n");
  }
  if (costs.size() != n) {
    throw Error(ErrorCode::kSchemaViolation, "field 'c' length != n");
  }
  if (weights.size() != t) {
    throw Error(ErrorCode::kSchemaViolation, "field 'w' must have t rows");
  }
  for (const auto& row : weights) {
    if (row.size() != n) {
      throw Error(ErrorCode::kSchemaViolation, "field 'w' row length != n");
    }
    for (const auto& v : row) {
      if (sgn(v) < 0) throw Error(ErrorCode::kNegativeValue, "field 'w'");
    }
  }
  if (capacities.size() != t) {
    throw Error(ErrorCode::kSchemaViolation, "field 'C' length != t");
  }
  for (const auto& v : profits) {
    if (sgn(v) < 0) throw Error(ErrorCode::kNegativeValue, "field 'p'");
  }
  for (const auto& v : costs) {
    if (sgn(v) < 0) throw Error(ErrorCode::kNegativeValue, "field 'c'");
  }
  for (const auto& v : capacities) {
    if (sgn(v) < 0) throw Error(ErrorCode::kNegativeValue, "field 'C'");
  }
  if (sgn(budget) < 0) throw Error(ErrorCode::kNegativeValue, "field 'B'");
}

Int Instance::TotalProfit() const {
  Int sum = 0;
  for (const auto& v : profits) sum += v;
  return sum;
}

Int Instance::TotalCost() const {
  Int sum = 0;
  for (const auto& v : costs) sum += v;
  return sum;
}

InterdictionVector::InterdictionVector(std::vector<bool> bits,
                                       std::span<const Int> costs)
    : bits_(std::move(bits)) {
  if (costs.size() != bits_.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "interdiction vector and cost vector differ in length");
  }
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) cost_ += costs[i];
  }
}

InterdictionVector InterdictionVector::None(std::size_t n) {
  InterdictionVector x;
  x.bits_.assign(n, false);
  return x;
}

InterdictionVector InterdictionVector::FromMask(unsigned long long mask,
                                                std::size_t n,
                                                std::span<const Int> costs) {
  std::vector<bool> bits(n);
  for (std::size_t i = 0; i < n; ++i) bits[i] = (mask >> i) & 1ull;
  return InterdictionVector(std::move(bits), costs);
}

std::size_t InterdictionVector::count() const {
  std::size_t k = 0;
  for (bool b : bits_) k += b;
  return k;
}

InterdictionVector Preprocessed::Lift(
    const InterdictionVector& reduced,
    std::span<const Int> original_costs) const {
  if (reduced.size() != to_original.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "interdiction does not match the reduced instance");
  }
  std::vector<bool> bits(to_reduced.size(), false);
  for (std::size_t r = 0; r < reduced.size(); ++r) {
    bits[to_original[r]] = reduced[r];
  }
  return InterdictionVector(std::move(bits), original_costs);
}

Instance ParseInstance(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kMalformedSyntax, e.what());
  }
  if (!doc.is_object()) {
    throw Error(ErrorCode::kSchemaViolation, "top level must be an object");
  }
  static const std::set<std::string> kKeys = {"n", "t", "p", "c",
                                              "w", "B", "C"};
  for (const auto& item : doc.items()) {
    if (!kKeys.contains(item.key())) {
      throw Error(ErrorCode::kSchemaViolation,
                  "unknown field '" + item.key() + "'");
    }
  }
  for (const auto& key : kKeys) {
    if (!doc.contains(key)) {
      throw Error(ErrorCode::kSchemaViolation, "missing field '" + key + "'");
    }
  }

  Instance inst;
  inst.n = ParseSize(doc["n"], "n");
  inst.t = ParseSize(doc["t"], "t");
  if (inst.t < 1) {
    throw Error(ErrorCode::kSchemaViolation, "field 't' must be at least 1");
  }
  inst.profits = ParseArray(doc["p"], "p", inst.n);
  inst.costs = ParseArray(doc["c"], "c", inst.n);
  const Json& w = doc["w"];
  if (!w.is_array() || w.size() != inst.t) {
    throw Error(ErrorCode::kSchemaViolation,
                "field 'w' must be an array of t arrays");
  }
  for (const auto& row : w) inst.weights.push_back(ParseArray(row, "w", inst.n));
  inst.budget = ParseValue(doc["B"], "B");
  inst.capacities = ParseArray(doc["C"], "C", inst.t);
  inst.Validate();
  return inst;
}

Instance LoadInstance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kMalformedSyntax, "cannot read '" + path + "'");
  }
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return ParseInstance(text);
}

std::string SerializeInstance(const Instance& inst) {
  std::string out = "{\"n\":" + std::to_string(inst.n) +
                    ",\"t\":" + std::to_string(inst.t) + ",\"p\":";
  AppendArray(out, inst.profits);
  out += ",\"c\":";
  AppendArray(out, inst.costs);
  out += ",\"w\":[";
  for (std::size_t j = 0; j < inst.weights.size(); ++j) {
    if (j > 0) out += ',';
    AppendArray(out, inst.weights[j]);
  }
  out += "],\"B\":";
  AppendValue(out, inst.budget);
  out += ",\"C\":";
  AppendArray(out, inst.capacities);
  out += "}\n";
  return out;
}

Preprocessed Preprocess(const Instance& inst) {
  Preprocessed result;
  result.to_reduced.resize(inst.n);
  Instance& reduced = result.instance;
  reduced.t = inst.t;
  reduced.budget = inst.budget;
  reduced.capacities = inst.capacities;
  reduced.weights.resize(inst.t);
  for (std::size_t i = 0; i < inst.n; ++i) {
    bool fits = true;
    for (std::size_t j = 0; j < inst.t && fits; ++j) {
      fits = inst.weights[j][i] <= inst.capacities[j];
    }
    if (!fits) continue;
    result.to_reduced[i] = result.to_original.size();
    result.to_original.push_back(i);
    reduced.profits.push_back(inst.profits[i]);
    reduced.costs.push_back(inst.costs[i]);
    for (std::size_t j = 0; j < inst.t; ++j) {
      reduced.weights[j].push_back(inst.weights[j][i]);
    }
  }
  reduced.n = result.to_original.size();
  return result;
}

}  // namespace kip
