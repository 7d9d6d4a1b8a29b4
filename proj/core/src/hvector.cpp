// Copyright 2026 The hcone Authors
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

#include "hcone/hvector.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>

#include "hcone/errors.hpp"

namespace hcone {
namespace {

const Rational kZero{};

Rational parse_entry(std::string_view token) {
  Rational r = Rational::parse(token);
  if (r.sign() < 0) {
    throw ParseError("negative entry '" + std::string(token) + "'");
  }
  return r;
}

std::string_view strip(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

Grading::Grading(std::int64_t n) : n_(n) {
  if (n < 1) {
    throw DomainError("grading weight n must be >= 1, got " +
                      std::to_string(n));
  }
}

HVector::HVector(std::vector<Rational> entries) : entries_(std::move(entries)) {
  for (const auto& e : entries_) {
    if (e.sign() < 0) throw DomainError("negative h-vector entry " + e.str());
  }
  while (!entries_.empty() && entries_.back().is_zero()) entries_.pop_back();
}

HVector::HVector(std::initializer_list<Rational> entries)
    : HVector(std::vector<Rational>(entries)) {}

const Rational& HVector::operator[](std::int64_t i) const {
  if (i < 0 || i > degree()) return kZero;
  return entries_[static_cast<std::size_t>(i)];
}

bool leq_pointwise(const HVector& a, const HVector& b) {
  const std::int64_t top = std::max(a.degree(), b.degree());
  for (std::int64_t i = 0; i <= top; ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

HVector linear_combine(std::span<const std::pair<Rational, HVector>> terms) {
  std::size_t len = 0;
  for (const auto& [c, v] : terms) {
    if (c.sign() < 0) {
      throw DomainError("negative coefficient " + c.str() + " in combination");
    }
    len = std::max(len, v.size());
  }
  std::vector<Rational> sum(len);
  for (const auto& [c, v] : terms) {
    for (std::size_t i = 0; i < v.size(); ++i) sum[i] += c * v.entries()[i];
  }
  return HVector(std::move(sum));
}

HVector parse_hvector(std::string_view text) {
  const std::string_view body = strip(text);
  std::vector<Rational> out;
  if (body.empty()) return HVector{};
  if (body.front() == '[') {
    nlohmann::json arr;
    try {
      arr = nlohmann::json::parse(body);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("malformed JSON array: ") + e.what());
    }
    if (!arr.is_array()) throw ParseError("expected a JSON array");
    for (const auto& item : arr) {
      if (item.is_string()) {
        out.push_back(parse_entry(item.get<std::string>()));
      } else if (item.is_number_integer()) {
        out.push_back(parse_entry(item.dump()));
      } else {
        throw ParseError("unsupported JSON element '" + item.dump() + "'");
      }
    }
    return HVector(std::move(out));
  }
  std::size_t pos = 0;
  while (true) {
    const auto comma = body.find(',', pos);
    const std::string_view token = body.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos
                                             : comma - pos);
    out.push_back(parse_entry(token));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return HVector(std::move(out));
}

std::string format_hvector_list(const HVector& h) {
  std::string s;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i) s += ',';
    s += h.entries()[i].str();
  }
  return s;
}

std::string format_hvector(const HVector& h) {
  return "(" + format_hvector_list(h) + ")";
}

}  // namespace hcone
