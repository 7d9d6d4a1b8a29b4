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

#include "hcone/decompose.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "hcone/errors.hpp"

namespace hcone {
namespace {

// Scratch vector of the state machine. Unlike HVector it may hold negative
// entries for the instant before a negativity check rejects the input.
class Work {
 public:
  Work() = default;
  explicit Work(std::span<const Rational> v) : v_(v.begin(), v.end()) {}
  explicit Work(std::vector<Rational> v) : v_(std::move(v)) {}

  Rational get(std::int64_t j) const {
    if (j < 0 || j >= static_cast<std::int64_t>(v_.size())) return Rational{};
    return v_[static_cast<std::size_t>(j)];
  }
  Rational& at(std::int64_t j) {
    if (j >= static_cast<std::int64_t>(v_.size())) {
      v_.resize(static_cast<std::size_t>(j + 1));
    }
    return v_[static_cast<std::size_t>(j)];
  }
  bool has_negative() const {
    return std::any_of(v_.begin(), v_.end(),
                       [](const Rational& x) { return x.sign() < 0; });
  }

 private:
  std::vector<Rational> v_;
};

struct Frame {
  std::int64_t d;
  std::int64_t r;
  Work g;
};

using CoeffMap = std::map<ExtremalPoint, Rational>;

void record(CoeffMap& map, const ExtremalPoint& p, const Rational& q) {
  if (q.is_zero()) return;
  map[p] += q;
}

Rational min_ratio(Grading g, const Work& h, std::int64_t d) {
  Rational q = h.get(0);
  for (std::int64_t j = 1; j <= d; ++j) {
    q = std::min(q, h.get(j) / Rational(s_coeff(g, j)));
  }
  return q;
}

enum class Node { kStrip, kAdvance, kColumnRemoval, kReassemble };

MembershipCertificate reject(std::string step, std::int64_t degree,
                             std::int64_t depth) {
  MembershipCertificate c;
  c.witness = {std::move(step), degree, depth};
  return c;
}

}  // namespace

StripResult strip_max(Grading g, const HVector& h, std::int64_t d,
                      const Budget& budget) {
  Rational q;
  if (d >= 0) q = min_ratio(g, Work(h.entries()), d);
  if (budget && *budget < q) q = *budget;
  std::vector<Rational> rest(h.entries().begin(), h.entries().end());
  for (std::int64_t j = 0; j <= d && j <= h.degree(); ++j) {
    rest[static_cast<std::size_t>(j)] -= q * Rational(s_coeff(g, j));
  }
  return {q, HVector(std::move(rest))};
}

bool is_reduced(Grading /*g*/, const HVector& h, std::int64_t d) {
  if (h[d].sign() <= 0) return false;
  for (std::int64_t k = 0; k < d; ++k) {
    if (h[k].is_zero()) return true;
  }
  return false;
}

MembershipCertificate decompose(Grading g, const HVector& target,
                                DecomposeStats* stats) {
  const std::int64_t n = g.n();
  MembershipCertificate cert;
  if (target.is_zero()) {
    cert.member = true;
    return cert;
  }

  const std::int64_t d0 = target.degree();
  const std::int64_t step_limit = 64 * (d0 + 2) * (d0 + 2);

  Work h(target.entries());
  std::int64_t d = d0;
  std::int64_t i = 0;
  std::vector<Budget> budget{std::nullopt};
  std::vector<Frame> frames;
  std::vector<CoeffMap> coeffs(1);

  Node node = Node::kStrip;
  std::int64_t steps = 0;
  while (true) {
    if (++steps > step_limit) {
      throw InternalError("decomposition exceeded its step budget of " +
                          std::to_string(step_limit));
    }
    const std::int64_t m = d >= 0 ? d / n : 0;
    const std::int64_t r = d >= 0 ? d % n : 0;
    switch (node) {
      case Node::kStrip: {
        const Rational q = d < 0 ? Rational{} : min_ratio(g, h, d);
        auto& p = budget.back();
        if (p && !(*p - q > Rational{})) {
          // Budget exhausted: this level is done.
          if (d >= 0) record(coeffs.back(), ExtremalPoint::max(d), *p);
          p = Rational{};
          node = Node::kReassemble;
          break;
        }
        if (p) *p -= q;
        for (std::int64_t j = 0; j <= d; ++j) {
          h.at(j) -= q * Rational(s_coeff(g, j));
        }
        if (d >= 0) record(coeffs.back(), ExtremalPoint::max(d), q);
        node = Node::kAdvance;
        break;
      }

      case Node::kAdvance: {
        if (h.get(d).is_zero()) {
          --d;
          if (d >= 1) {
            node = Node::kStrip;
            break;
          }
          const Rational h0 = h.get(0);
          if (i == 0) {
            record(coeffs[0], ExtremalPoint::max(0), h0);
            cert.member = true;
            for (const auto& [p, q] : coeffs[0]) {
              cert.decomposition.terms.push_back({q, p});
            }
            cert.decomposition = canonicalize(g, cert.decomposition);
            if (stats) stats->steps = steps;
            if (reconstruct(g, cert.decomposition) != target ||
                !chain_check(g, cert.decomposition)) {
              throw InternalError("decomposition of " + format_hvector(target) +
                                  " failed validation: " +
                                  format_decomposition(cert.decomposition));
            }
            return cert;
          }
          auto& p = *budget.back();
          if (h0 <= p) {
            record(coeffs.back(), ExtremalPoint::max(0), h0);
            p -= h0;
          } else {
            record(coeffs.back(), ExtremalPoint::max(0), p);
            p = Rational{};
          }
          node = Node::kReassemble;
          break;
        }
        if (r == n - 1) {
          if (i == 0) {
            if (stats) stats->steps = steps;
            return reject("reduced_top_level", d, 0);
          }
          node = Node::kColumnRemoval;
          break;
        }

        // Tower step: take t^d up to height min(h_d, p_i).
        Rational height = h.get(d);
        const bool capped = budget.back() && height > *budget.back();
        if (capped) height = *budget.back();
        Work tower_rest = h;
        for (std::int64_t j = 0; j <= d; ++j) {
          if (j % n <= r) tower_rest.at(j) -= height;
        }
        if (capped) tower_rest.at(d) = Rational{};
        if (tower_rest.has_negative()) {
          if (i == 0) {
            if (stats) stats->steps = steps;
            return reject("tower_negative", d, 1);
          }
          // Back out of the tentative level; h is untouched.
          node = Node::kColumnRemoval;
          break;
        }

        // Cut off everything right of column r+1.
        const std::int64_t inner_degree = d - 2 * r - 3;
        Work cut;
        for (std::int64_t j = 0; j <= inner_degree; ++j) {
          const std::int64_t idx = j + r + 1;
          const std::int64_t k = idx % n;
          cut.at(j) = k < r ? tower_rest.get(idx) - tower_rest.get(m * n + k)
                            : tower_rest.get(idx);
        }
        if (budget.back()) *budget.back() -= height;
        frames.push_back({d, r, std::move(tower_rest)});
        budget.emplace_back(height);
        coeffs.emplace_back();
        ++i;
        d = inner_degree;
        h = std::move(cut);
        if (h.has_negative()) {
          if (stats) stats->steps = steps;
          return reject("cut_negative", frames.back().d, i);
        }
        node = Node::kStrip;
        break;
      }

      case Node::kColumnRemoval: {
        const Rational top = h.get(d);
        for (std::int64_t j = r; j <= d; j += n) h.at(j) -= top;
        --d;
        if (h.has_negative()) {
          if (stats) stats->steps = steps;
          return reject("column_removal_negative", d + 1, i);
        }
        node = Node::kStrip;
        break;
      }

      case Node::kReassemble: {
        Frame frame = std::move(frames.back());
        frames.pop_back();
        h = std::move(frame.g);
        CoeffMap inner = std::move(coeffs.back());
        coeffs.pop_back();
        for (const auto& [v, q] : inner) {
          const HVector e = expand(g, v);
          for (std::int64_t j = 0; j <= e.degree(); ++j) {
            h.at(frame.r + 1 + j) -= q * e[j];
          }
        }
        if (h.has_negative()) {
          if (stats) stats->steps = steps;
          return reject("reassemble_negative", frame.d, i);
        }
        for (const auto& [v, q] : inner) {
          record(coeffs.back(), ExtremalPoint::glued(g, frame.d, v), q);
        }
        record(coeffs.back(), ExtremalPoint::tower(g, frame.d), *budget.back());
        budget.pop_back();
        --i;
        d = frame.d - 1;
        node = Node::kStrip;
        break;
      }
    }
  }
}

bool validate_decomposition(Grading g, const HVector& target,
                            const Decomposition& dec) {
  try {
    const auto catalogue = enumerate_ex(g, target.degree());
    const std::set<ExtremalPoint> allowed(catalogue.begin(), catalogue.end());
    for (const auto& t : dec.terms) {
      if (t.coeff.sign() <= 0 || !allowed.count(t.point)) return false;
    }
    return reconstruct(g, dec) == target;
  } catch (const DomainError&) {
    return false;
  }
}

bool chain_check(Grading g, const Decomposition& dec) {
  std::vector<HVector> expansions;
  for (const auto& t : dec.terms) expansions.push_back(expand(g, t.point));
  for (std::size_t a = 0; a < expansions.size(); ++a) {
    for (std::size_t b = a + 1; b < expansions.size(); ++b) {
      if (!leq_pointwise(expansions[a], expansions[b]) &&
          !leq_pointwise(expansions[b], expansions[a])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace hcone
