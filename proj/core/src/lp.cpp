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

#include "hcone/lp.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "hcone/errors.hpp"

namespace hcone {
namespace {

constexpr std::size_t kFourierMotzkinMaxVars = 40;
// kAuto abandons elimination early and switches to the simplex method; an
// explicit Fourier-Motzkin request tolerates far more growth.
constexpr std::size_t kAutoMaxRows = 300;
constexpr std::size_t kForcedMaxRows = 200000;

using Origin = std::vector<std::uint64_t>;  // bitset of input inequalities

Origin single_origin(std::size_t index) {
  Origin o(index / 64 + 1, 0);
  o[index / 64] = std::uint64_t{1} << (index % 64);
  return o;
}

Origin merge(const Origin& x, const Origin& y) {
  Origin out(std::max(x.size(), y.size()), 0);
  for (std::size_t k = 0; k < x.size(); ++k) out[k] |= x[k];
  for (std::size_t k = 0; k < y.size(); ++k) out[k] |= y[k];
  return out;
}

bool subset(const Origin& x, const Origin& y) {
  for (std::size_t k = 0; k < x.size(); ++k) {
    const std::uint64_t yk = k < y.size() ? y[k] : 0;
    if ((x[k] & ~yk) != 0) return false;
  }
  return true;
}

std::size_t weight(const Origin& o) {
  std::size_t w = 0;
  for (auto word : o) w += static_cast<std::size_t>(std::popcount(word));
  return w;
}

// a . x >= b, derived from the input inequalities in origin, which mention
// the variables in occurs.
struct Row {
  std::vector<Rational> a;
  Rational b;
  Origin origin;
  Origin occurs;
};

Origin support(const std::vector<Rational>& a) {
  Origin o(a.size() / 64 + 1, 0);
  for (std::size_t v = 0; v < a.size(); ++v) {
    if (!a[v].is_zero()) o[v / 64] |= std::uint64_t{1} << (v % 64);
  }
  return o;
}

// Variables in occurs that no longer appear in a.
std::size_t eliminated_count(const std::vector<Rational>& a, const Origin& occurs) {
  const Origin now = support(a);
  std::size_t count = 0;
  for (std::size_t k = 0; k < occurs.size(); ++k) {
    count += static_cast<std::size_t>(std::popcount(occurs[k] & ~now[k]));
  }
  return count;
}

bool is_trivial(const Row& row) {
  for (const auto& c : row.a) {
    if (!c.is_zero()) return false;
  }
  return true;
}

// Positive scaling so the first nonzero coefficient is +-1.
void normalize(Row& row) {
  for (const auto& c : row.a) {
    if (c.is_zero()) continue;
    const Rational scale = abs(c);
    for (auto& x : row.a) x /= scale;
    row.b /= scale;
    return;
  }
}

void check_shape(const LinearSystem& sys) {
  for (std::size_t k = 0; k < sys.constraints.size(); ++k) {
    if (sys.constraints[k].coeffs.size() != sys.num_vars) {
      throw DomainError("constraint " + std::to_string(k) + " has " +
                        std::to_string(sys.constraints[k].coeffs.size()) +
                        " coefficients for " + std::to_string(sys.num_vars) +
                        " variables");
    }
  }
  if (!sys.nonnegative.empty() && sys.nonnegative.size() != sys.num_vars) {
    throw DomainError("nonnegativity flags do not match the variable count");
  }
}

bool is_nonnegative(const LinearSystem& sys, std::size_t v) {
  return !sys.nonnegative.empty() && sys.nonnegative[v];
}

// x_var = constant + sum coeffs_j x_j
struct Substitution {
  std::size_t var;
  std::vector<Rational> coeffs;
  Rational constant;
};

struct Elimination {
  std::size_t var;
  std::vector<Row> rows;  // the rows that mentioned var before elimination
};

// nullopt: elimination exceeded the row cap.
std::optional<Feasibility> fourier_motzkin(const LinearSystem& sys,
                                           std::size_t max_rows) {
  const std::size_t nv = sys.num_vars;
  std::vector<Row> ineqs;
  std::vector<Row> eqs;
  for (const auto& c : sys.constraints) {
    if (c.relation == Relation::kEqual) {
      eqs.push_back({c.coeffs, c.rhs, {}, {}});
    } else {
      ineqs.push_back({c.coeffs, c.rhs, single_origin(ineqs.size()), {}});
    }
  }
  for (std::size_t v = 0; v < nv; ++v) {
    if (!is_nonnegative(sys, v)) continue;
    Row row{std::vector<Rational>(nv), Rational{}, single_origin(ineqs.size()), {}};
    row.a[v] = 1;
    ineqs.push_back(std::move(row));
  }

  Feasibility infeasible{false, {}, LpBackend::kFourierMotzkin};

  // Equalities: Gaussian substitution.
  std::vector<Substitution> subs;
  for (std::size_t e = 0; e < eqs.size(); ++e) {
    Row& eq = eqs[e];
    std::size_t pivot = nv;
    for (std::size_t v = 0; v < nv; ++v) {
      if (!eq.a[v].is_zero()) {
        pivot = v;
        break;
      }
    }
    if (pivot == nv) {
      if (!eq.b.is_zero()) return infeasible;
      continue;
    }
    Substitution s{pivot, std::vector<Rational>(nv), eq.b / eq.a[pivot]};
    for (std::size_t v = 0; v < nv; ++v) {
      if (v != pivot) s.coeffs[v] = -eq.a[v] / eq.a[pivot];
    }
    auto apply = [&](Row& row) {
      const Rational factor = row.a[pivot];
      if (factor.is_zero()) return;
      for (std::size_t v = 0; v < nv; ++v) row.a[v] += factor * s.coeffs[v];
      row.a[pivot] = Rational{};
      row.b -= factor * s.constant;
    };
    for (std::size_t f = e + 1; f < eqs.size(); ++f) apply(eqs[f]);
    for (auto& row : ineqs) apply(row);
    subs.push_back(std::move(s));
  }

  for (auto& row : ineqs) row.occurs = support(row.a);

  // Inequalities: eliminate one variable at a time. Chernikov's rule drops
  // any row combined from more than k+1 inputs after k eliminations, and
  // Imbert's refinement replaces k by the number of variables that occur in
  // the row's inputs but not in the row; such rows are implied by the others. Parallel rows are merged only when the
  // survivor is at least as tight and built from a subset of the inputs,
  // otherwise the rule could lose the row it relies on.
  std::vector<Elimination> history;
  std::vector<Rational> scratch(nv);
  Rational tmp;
  while (true) {
    std::vector<Row> live;
    live.reserve(ineqs.size());
    for (auto& row : ineqs) {
      if (is_trivial(row)) {
        if (row.b.sign() > 0) return infeasible;
        continue;
      }
      normalize(row);
      live.push_back(std::move(row));
    }
    std::sort(live.begin(), live.end(),
              [](const Row& x, const Row& y) { return x.a < y.a; });
    ineqs.clear();
    for (std::size_t first = 0; first < live.size();) {
      std::size_t last = first + 1;
      while (last < live.size() && live[last].a == live[first].a) ++last;
      const std::size_t group = ineqs.size();
      for (std::size_t k = first; k < last; ++k) {
        Row& row = live[k];
        const auto kept = std::span(ineqs).subspan(group);
        if (std::any_of(kept.begin(), kept.end(), [&](const Row& o) {
              return row.b <= o.b && subset(o.origin, row.origin);
            })) {
          continue;
        }
        const auto stale = std::remove_if(
            ineqs.begin() + static_cast<std::ptrdiff_t>(group), ineqs.end(),
            [&](const Row& o) { return o.b <= row.b && subset(row.origin, o.origin); });
        ineqs.erase(stale, ineqs.end());
        ineqs.push_back(std::move(row));
      }
      first = last;
    }
    if (ineqs.empty()) break;
    if (ineqs.size() > max_rows) return std::nullopt;

    std::size_t best = nv;
    std::size_t best_cost = 0;
    for (std::size_t v = 0; v < nv; ++v) {
      std::size_t pos = 0;
      std::size_t neg = 0;
      for (const auto& row : ineqs) {
        if (row.a[v].sign() > 0) ++pos;
        if (row.a[v].sign() < 0) ++neg;
      }
      if (pos + neg == 0) continue;
      const std::size_t cost = pos * neg;
      if (best == nv || cost < best_cost) {
        best = v;
        best_cost = cost;
      }
    }

    Elimination elim{best, {}};
    std::vector<Row> next;
    for (auto& row : ineqs) {
      (row.a[best].is_zero() ? next : elim.rows).push_back(std::move(row));
    }
    const std::size_t origin_limit = history.size() + 2;
    for (const auto& lo : elim.rows) {
      if (lo.a[best].sign() < 0) continue;
      for (const auto& up : elim.rows) {
        if (up.a[best].sign() > 0) continue;
        Origin origin = merge(lo.origin, up.origin);
        if (weight(origin) > origin_limit) continue;
        if (next.size() >= max_rows) return std::nullopt;
        const Rational wl = -up.a[best];
        const Rational& wu = lo.a[best];
        for (std::size_t v = 0; v < nv; ++v) {
          const bool l = !lo.a[v].is_zero();
          const bool u = !up.a[v].is_zero();
          if (v == best || (!l && !u)) {
            scratch[v] = Rational{};
            continue;
          }
          scratch[v] = l ? wl * lo.a[v] : Rational{};
          if (u) {
            tmp = wu;
            tmp *= up.a[v];
            scratch[v] += tmp;
          }
        }
        Origin occurs = merge(lo.occurs, up.occurs);
        if (weight(origin) > eliminated_count(scratch, occurs) + 1) continue;
        next.push_back({scratch, wl * lo.b + wu * up.b, std::move(origin),
                        std::move(occurs)});
      }
    }
    history.push_back(std::move(elim));
    ineqs = std::move(next);
  }

  // Back-substitution.
  std::vector<Rational> x(nv);
  for (auto it = history.rbegin(); it != history.rend(); ++it) {
    const std::size_t v = it->var;
    std::optional<Rational> lo;
    std::optional<Rational> hi;
    for (const auto& row : it->rows) {
      Rational rest = row.b;
      for (std::size_t j = 0; j < nv; ++j) {
        if (j != v) rest -= row.a[j] * x[j];
      }
      const Rational bound = rest / row.a[v];
      if (row.a[v].sign() > 0) {
        if (!lo || *lo < bound) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    x[v] = lo ? *lo : hi ? *hi : Rational{};
  }
  for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
    Rational value = it->constant;
    for (std::size_t j = 0; j < nv; ++j) value += it->coeffs[j] * x[j];
    x[it->var] = value;
  }
  return Feasibility{true, std::move(x), LpBackend::kFourierMotzkin};
}

// Phase one of the simplex method with Bland's rule on a dense tableau.
Feasibility simplex(const LinearSystem& sys) {
  const std::size_t nv = sys.num_vars;
  // Column layout: structural (split when free), slacks, artificials.
  std::vector<std::size_t> pos_col(nv);
  std::vector<std::optional<std::size_t>> neg_col(nv);
  std::size_t cols = 0;
  for (std::size_t v = 0; v < nv; ++v) {
    pos_col[v] = cols++;
    if (!is_nonnegative(sys, v)) neg_col[v] = cols++;
  }
  const std::size_t m = sys.constraints.size();
  std::vector<std::optional<std::size_t>> slack(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (sys.constraints[i].relation == Relation::kGreaterEqual) slack[i] = cols++;
  }
  const std::size_t first_artificial = cols;
  cols += m;
  const std::size_t rhs = cols;

  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(cols + 1));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = sys.constraints[i];
    auto& row = t[i];
    for (std::size_t v = 0; v < nv; ++v) {
      row[pos_col[v]] = c.coeffs[v];
      if (neg_col[v]) row[*neg_col[v]] = -c.coeffs[v];
    }
    if (slack[i]) row[*slack[i]] = -1;
    row[rhs] = c.rhs;
    if (c.rhs.sign() < 0) {
      for (auto& x : row) x = -x;
    }
    row[first_artificial + i] = 1;
    basis[i] = first_artificial + i;
  }
  // Reduced costs of "minimise the sum of artificials".
  std::vector<Rational> obj(cols + 1);
  for (std::size_t j = 0; j <= cols; ++j) {
    if (j >= first_artificial && j < rhs) continue;
    for (std::size_t i = 0; i < m; ++i) obj[j] -= t[i][j];
  }

  while (true) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (obj[j].sign() < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;
    std::size_t leave = m;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter].sign() <= 0) continue;
      const Rational ratio = t[i][rhs] / t[i][enter];
      if (leave == m || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) {
      throw InternalError("phase-one simplex is unbounded");
    }
    const Rational pivot = t[leave][enter];
    for (auto& x : t[leave]) x /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter].is_zero()) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= f * t[leave][j];
    }
    if (!obj[enter].is_zero()) {
      const Rational f = obj[enter];
      for (std::size_t j = 0; j <= cols; ++j) obj[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  if (!obj[rhs].is_zero()) return {false, {}, LpBackend::kSimplex};
  std::vector<Rational> y(cols);
  for (std::size_t i = 0; i < m; ++i) y[basis[i]] = t[i][rhs];
  std::vector<Rational> x(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    x[v] = y[pos_col[v]];
    if (neg_col[v]) x[v] -= y[*neg_col[v]];
  }
  return {true, std::move(x), LpBackend::kSimplex};
}

}  // namespace

void LinearSystem::add(std::span<const std::pair<std::size_t, Rational>> terms,
                       Relation relation, const Rational& rhs) {
  Constraint c{std::vector<Rational>(num_vars), relation, rhs};
  for (const auto& [index, coeff] : terms) {
    if (index >= num_vars) throw DomainError("variable index out of range");
    c.coeffs[index] += coeff;
  }
  constraints.push_back(std::move(c));
}

bool satisfies(const LinearSystem& sys, std::span<const Rational> x) {
  if (x.size() != sys.num_vars) return false;
  for (std::size_t v = 0; v < sys.num_vars; ++v) {
    if (is_nonnegative(sys, v) && x[v].sign() < 0) return false;
  }
  for (const auto& c : sys.constraints) {
    Rational lhs;
    for (std::size_t v = 0; v < sys.num_vars; ++v) lhs += c.coeffs[v] * x[v];
    if (c.relation == Relation::kEqual ? lhs != c.rhs : lhs < c.rhs) {
      return false;
    }
  }
  return true;
}

Feasibility lp_feasible(const LinearSystem& sys, LpBackend backend) {
  check_shape(sys);
  std::optional<Feasibility> result;
  if (backend == LpBackend::kFourierMotzkin ||
      (backend == LpBackend::kAuto && sys.num_vars <= kFourierMotzkinMaxVars)) {
    const bool forced = backend == LpBackend::kFourierMotzkin;
    result = fourier_motzkin(sys, forced ? kForcedMaxRows : kAutoMaxRows);
    if (!result && forced) {
      throw DomainError("Fourier-Motzkin elimination exceeded " +
                        std::to_string(kForcedMaxRows) + " rows");
    }
  }
  if (!result) result = simplex(sys);
  if (result->feasible && !satisfies(sys, result->witness)) {
    throw InternalError("LP witness does not satisfy its system");
  }
  return *std::move(result);
}

}  // namespace hcone
