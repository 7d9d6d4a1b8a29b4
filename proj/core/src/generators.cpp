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

#include "hcone/generators.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hcone/errors.hpp"

namespace hcone {
namespace {

struct DivMod {
  std::int64_t m;
  std::int64_t r;
};

DivMod split_degree(Grading g, std::int64_t d) {
  return {d / g.n(), d % g.n()};
}

void require_degree(std::int64_t d) {
  if (d < 0) throw DomainError("degree must be >= 0, got " + std::to_string(d));
}

// Largest admissible degree of a vector glued onto t^d, or -1 if none.
std::int64_t glue_capacity(Grading g, std::int64_t d) {
  const auto [m, r] = split_degree(g, d);
  if (r == g.n() - 1) return -1;
  return std::max<std::int64_t>(d - 2 * r - 3, -1);
}

}  // namespace

std::int64_t s_coeff(Grading g, std::int64_t i) {
  return i < 0 ? 1 : i / g.n() + 1;
}

HVector s_vector(Grading g, std::int64_t d) {
  require_degree(d);
  std::vector<Rational> v;
  v.reserve(static_cast<std::size_t>(d + 1));
  for (std::int64_t i = 0; i <= d; ++i) v.emplace_back(s_coeff(g, i));
  return HVector(std::move(v));
}

HVector t_vector(Grading g, std::int64_t d) {
  require_degree(d);
  const auto [m, r] = split_degree(g, d);
  std::vector<Rational> v;
  v.reserve(static_cast<std::size_t>(d + 1));
  for (std::int64_t i = 0; i <= d; ++i) v.emplace_back(i % g.n() <= r ? 1 : 0);
  return HVector(std::move(v));
}

HVector star(Grading g, std::int64_t d, const HVector& h) {
  require_degree(d);
  const auto [m, r] = split_degree(g, d);
  if (r == g.n() - 1) {
    throw DomainError("cannot glue onto t^" + std::to_string(d) +
                      ": d is congruent to n-1 mod n");
  }
  if (h.degree() > d - 2 * r - 3) {
    throw DomainError("glued vector of degree " + std::to_string(h.degree()) +
                      " exceeds " + std::to_string(d - 2 * r - 3) +
                      " for t^" + std::to_string(d));
  }
  const HVector tower = t_vector(g, d);
  std::vector<Rational> v(tower.entries().begin(), tower.entries().end());
  for (std::int64_t j = 0; j <= h.degree(); ++j) {
    v[static_cast<std::size_t>(r + 1 + j)] += h[j];
  }
  return HVector(std::move(v));
}

ExtremalPoint ExtremalPoint::max(std::int64_t d) {
  require_degree(d);
  return ExtremalPoint(PointKind::kMax, d, nullptr);
}

ExtremalPoint ExtremalPoint::tower(Grading g, std::int64_t d) {
  require_degree(d);
  if (d <= g.n() - 1) return max(d);  // t^d = s^d
  if (split_degree(g, d).r == g.n() - 1) {
    throw DomainError("t^" + std::to_string(d) +
                      " is not extremal: d is congruent to n-1 mod n");
  }
  return ExtremalPoint(PointKind::kTower, d, nullptr);
}

ExtremalPoint ExtremalPoint::glued(Grading g, std::int64_t d,
                                   ExtremalPoint inner) {
  require_degree(d);
  const std::int64_t cap = glue_capacity(g, d);
  if (cap < 0) {
    throw DomainError("nothing can be glued onto t^" + std::to_string(d));
  }
  validate_point(g, inner);
  if (inner.degree() > cap) {
    throw DomainError(inner.name() + " is too long to glue onto t^" +
                      std::to_string(d));
  }
  return ExtremalPoint(PointKind::kGlued, d,
                       std::make_shared<const ExtremalPoint>(std::move(inner)));
}

std::string ExtremalPoint::name() const {
  switch (kind_) {
    case PointKind::kMax:
      return "s^" + std::to_string(degree_);
    case PointKind::kTower:
      return "t^" + std::to_string(degree_);
    case PointKind::kGlued:
      return "t^" + std::to_string(degree_) + "*" + inner_->name();
  }
  return {};
}

bool operator==(const ExtremalPoint& a, const ExtremalPoint& b) {
  return (a <=> b) == 0;
}

std::strong_ordering operator<=>(const ExtremalPoint& a,
                                 const ExtremalPoint& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  if (a.kind_ != PointKind::kGlued) return std::strong_ordering::equal;
  return *a.inner_ <=> *b.inner_;
}

void validate_point(Grading g, const ExtremalPoint& p) {
  switch (p.kind()) {
    case PointKind::kMax:
      return;
    case PointKind::kTower:
      if (p.degree() <= g.n() - 1 ||
          split_degree(g, p.degree()).r == g.n() - 1) {
        throw DomainError(p.name() + " is not a canonical tower for n=" +
                          std::to_string(g.n()));
      }
      return;
    case PointKind::kGlued: {
      const std::int64_t cap = glue_capacity(g, p.degree());
      validate_point(g, p.inner());
      if (cap < 0 || p.inner().degree() > cap) {
        throw DomainError(p.name() + " is not a valid glued point for n=" +
                          std::to_string(g.n()));
      }
      return;
    }
  }
}

HVector expand(Grading g, const ExtremalPoint& p) {
  validate_point(g, p);
  switch (p.kind()) {
    case PointKind::kMax:
      return s_vector(g, p.degree());
    case PointKind::kTower:
      return t_vector(g, p.degree());
    case PointKind::kGlued:
      return star(g, p.degree(), expand(g, p.inner()));
  }
  return {};
}

std::vector<ExtremalPoint> enumerate_ex(Grading g, std::int64_t d) {
  if (d < 0) return {};
  // by_degree[e] holds the points new in degree e; Ex(e) is the union of
  // by_degree[0..e].
  std::vector<std::vector<ExtremalPoint>> by_degree;
  std::set<HVector> seen;
  auto admit = [&](std::vector<ExtremalPoint>& bucket, ExtremalPoint p) {
    if (seen.insert(expand(g, p)).second) bucket.push_back(std::move(p));
  };
  for (std::int64_t e = 0; e <= d; ++e) {
    std::vector<ExtremalPoint> fresh;
    admit(fresh, ExtremalPoint::max(e));
    const auto [m, r] = split_degree(g, e);
    if (e > g.n() - 1 && r != g.n() - 1) {
      admit(fresh, ExtremalPoint::tower(g, e));
      const std::int64_t cap = e - 2 * r - 3;
      for (std::int64_t k = 0; k <= cap; ++k) {
        for (const auto& inner : by_degree[static_cast<std::size_t>(k)]) {
          admit(fresh, ExtremalPoint::glued(g, e, inner));
        }
      }
    }
    by_degree.push_back(std::move(fresh));
  }
  std::vector<ExtremalPoint> out;
  for (auto& bucket : by_degree) {
    for (auto& p : bucket) out.push_back(std::move(p));
  }
  return out;
}

Decomposition canonicalize(Grading g, const Decomposition& dec) {
  std::map<ExtremalPoint, Rational> merged;
  for (const auto& t : dec.terms) merged[t.point] += t.coeff;
  struct Keyed {
    HVector expansion;
    Term term;
  };
  std::vector<Keyed> keyed;
  for (auto& [p, c] : merged) {
    if (c.is_zero()) continue;
    keyed.push_back({expand(g, p), Term{c, p}});
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    if (a.expansion.degree() != b.expansion.degree()) {
      return a.expansion.degree() > b.expansion.degree();
    }
    return a.expansion > b.expansion;
  });
  Decomposition out;
  for (auto& k : keyed) out.terms.push_back(std::move(k.term));
  return out;
}

HVector reconstruct(Grading g, const Decomposition& dec) {
  std::vector<std::pair<Rational, HVector>> parts;
  parts.reserve(dec.terms.size());
  for (const auto& t : dec.terms) parts.emplace_back(t.coeff, expand(g, t.point));
  return linear_combine(parts);
}

std::string format_decomposition(const Decomposition& dec) {
  if (dec.terms.empty()) return "0";
  std::string s;
  for (const auto& t : dec.terms) {
    if (!s.empty()) s += " + ";
    if (t.coeff != Rational(1)) s += t.coeff.str() + "*";
    s += t.point.name();
  }
  return s;
}

Decomposition tower_decomposition(Grading g, std::int64_t m) {
  if (m < 1) throw DomainError("tower_decomposition needs m >= 1");
  std::vector<Rational> q(static_cast<std::size_t>(m + 1));
  Rational tail;  // sum of q_k for k > l
  for (std::int64_t l = m; l >= 1; --l) {
    q[static_cast<std::size_t>(l)] = Rational(1, l) - tail;
    tail += q[static_cast<std::size_t>(l)];
  }
  Decomposition dec;
  for (std::int64_t l = m; l >= 1; --l) {
    dec.terms.push_back(
        {q[static_cast<std::size_t>(l)], ExtremalPoint::max(g.n() * l - 1)});
  }
  return dec;
}

}  // namespace hcone
