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

#include "hcone/oracle.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "hcone/errors.hpp"

namespace hcone {
namespace {

// Index of h_i^j (row k = j-1) in the diagram system for top degree d.
struct DiagramLayout {
  std::int64_t n;
  std::int64_t d;
  std::vector<std::size_t> row_offset;  // per row k

  DiagramLayout(Grading g, std::int64_t top) : n(g.n()), d(top) {
    std::size_t next = 0;
    for (std::int64_t k = 0; n * k <= d; ++k) {
      row_offset.push_back(next);
      next += static_cast<std::size_t>(d - n * k + 1);
    }
    row_offset.push_back(next);
  }

  std::size_t rows() const { return row_offset.size() - 1; }
  std::size_t size() const { return row_offset.back(); }
  std::size_t index(std::int64_t k, std::int64_t i) const {
    return row_offset[static_cast<std::size_t>(k)] +
           static_cast<std::size_t>(i - n * k);
  }
};

using Terms = std::vector<std::pair<std::size_t, Rational>>;

// Sum q_w expand(w) = v over the given points; coefficient sums are implied
// by the degree-0 entry since every generator starts with 1.
LinearSystem hull_system(const std::vector<HVector>& points,
                         const HVector& v) {
  std::int64_t top = v.degree();
  for (const auto& p : points) top = std::max(top, p.degree());
  LinearSystem sys;
  sys.num_vars = points.size();
  sys.nonnegative.assign(points.size(), true);
  for (std::int64_t i = 0; i <= top; ++i) {
    Terms terms;
    for (std::size_t w = 0; w < points.size(); ++w) {
      if (!points[w][i].is_zero()) terms.emplace_back(w, points[w][i]);
    }
    sys.add(terms, Relation::kEqual, v[i]);
  }
  return sys;
}

}  // namespace

LinearSystem diagram_system(Grading g, const HVector& h) {
  const DiagramLayout layout(g, h.degree());
  const std::int64_t n = g.n();
  const std::int64_t d = h.degree();
  LinearSystem sys;
  sys.num_vars = layout.size();
  sys.nonnegative.assign(sys.num_vars, true);
  const auto rows = static_cast<std::int64_t>(layout.rows());
  for (std::int64_t k = 0; k < rows; ++k) {
    for (std::int64_t i = n * k; i <= d; ++i) {
      // (1) h_i^j >= h_{i+1}^j
      if (i + 1 <= d) {
        const Terms t{{layout.index(k, i), Rational{1}},
                      {layout.index(k, i + 1), Rational{-1}}};
        sys.add(t, Relation::kGreaterEqual, Rational{});
      }
      // (2) h_i^j >= h_{i+n}^{j+1}
      if (k + 1 < rows && i + n <= d) {
        const Terms t{{layout.index(k, i), Rational{1}},
                      {layout.index(k + 1, i + n), Rational{-1}}};
        sys.add(t, Relation::kGreaterEqual, Rational{});
      }
    }
  }
  for (std::int64_t i = 0; i <= d; ++i) {
    Terms t;
    for (std::int64_t k = 0; k < rows && n * k <= i; ++k) {
      t.emplace_back(layout.index(k, i), Rational{1});
    }
    sys.add(t, Relation::kEqual, h[i]);
  }
  return sys;
}

OracleVerdict membership_oracle(Grading g, const HVector& h,
                                LpBackend backend) {
  if (h.is_zero()) return {true, HDiagram{g, {}}};
  const Feasibility f = lp_feasible(diagram_system(g, h), backend);
  if (!f.feasible) return {false, std::nullopt};

  const DiagramLayout layout(g, h.degree());
  HDiagram diag{g, {}};
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(layout.rows()); ++k) {
    std::vector<Rational> row;
    for (std::int64_t i = g.n() * k; i <= h.degree(); ++i) {
      row.push_back(f.witness[layout.index(k, i)]);
    }
    while (!row.empty() && row.back().is_zero()) row.pop_back();
    diag.rows.push_back(std::move(row));
  }
  while (!diag.rows.empty() && diag.rows.back().empty()) diag.rows.pop_back();
  const DiagramCheck check = check_hdiagram(diag, h);
  if (!check.ok()) {
    throw InternalError("oracle witness is not a valid diagram: " +
                        check.message());
  }
  return {true, std::move(diag)};
}

ConeVerdict cone_membership_via_ex(Grading g, const HVector& h,
                                   LpBackend backend) {
  if (h.is_zero()) return {true, Decomposition{}};
  const auto catalogue = enumerate_ex(g, h.degree());
  std::vector<HVector> points;
  points.reserve(catalogue.size());
  for (const auto& p : catalogue) points.push_back(expand(g, p));
  const Feasibility f = lp_feasible(hull_system(points, h), backend);
  if (!f.feasible) return {false, {}};
  Decomposition dec;
  for (std::size_t w = 0; w < catalogue.size(); ++w) {
    if (f.witness[w].sign() > 0) dec.terms.push_back({f.witness[w], catalogue[w]});
  }
  dec = canonicalize(g, dec);
  if (reconstruct(g, dec) != h) {
    throw InternalError("cone witness does not reconstruct its target");
  }
  return {true, std::move(dec)};
}

bool is_extremal_candidate(Grading g, std::int64_t d, const HVector& v,
                           LpBackend backend) {
  if (v.degree() > d) {
    throw DomainError("candidate " + format_hvector(v) +
                      " exceeds degree " + std::to_string(d));
  }
  std::vector<HVector> others;
  for (const auto& p : enumerate_ex(g, d)) {
    HVector e = expand(g, p);
    if (e != v) others.push_back(std::move(e));
  }
  if (others.empty()) return true;
  return !lp_feasible(hull_system(others, v), backend).feasible;
}

bool is_extremal_oracle(Grading g, std::int64_t d, const ExtremalPoint& p,
                        LpBackend backend) {
  const auto catalogue = enumerate_ex(g, d);
  if (std::find(catalogue.begin(), catalogue.end(), p) == catalogue.end()) {
    throw DomainError(p.name() + " is not in Ex(" + std::to_string(d) + ")");
  }
  return is_extremal_candidate(g, d, expand(g, p), backend);
}

}  // namespace hcone
