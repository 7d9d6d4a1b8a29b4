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

// Prints one PASS/FAIL line per acceptance criterion and exits nonzero if
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hcone/decompose.hpp"
#include "hcone/diagram.hpp"
#include "hcone/generators.hpp"
#include "hcone/oracle.hpp"
#include "hcone_cli/selftest.hpp"
#include "support.hpp"

namespace hcone {
namespace {

using testing::H;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    if (pass) detail = what;
    pass = false;
  }
};

std::string expect_decomposition(Grading g, const std::string& h, const std::string& want) {
  const auto cert = decompose(g, H(h));
  if (!cert.member) return "(" + h + ") rejected";
  const std::string got = format_decomposition(cert.decomposition);
  return got == want ? "" : "(" + h + ") gave " + got;
}

Outcome worked_examples() {
  Outcome o;
  for (const auto& [n, h, want] : std::vector<std::tuple<int, std::string, std::string>>{
           {3, "3,3,2,4,2,1,2,1", "1/3*s^7 + 1/6*s^6 + 1/2*t^6*s^3 + s^3 + s^1"},
           {4, "3,3,2,2,3,3,2,0,1,1", "t^9*s^4 + 1/2*s^5 + 1/2*s^3 + s^1"},
           {2, "2,1,2,0,1", "t^4*s^1 + s^0"}}) {
    const std::string err = expect_decomposition(Grading(n), h, want);
    o.require(err.empty(), err);
  }
  return o;
}

Outcome alternative_decompositions() {
  Outcome o;
  const Grading g2(2);
  const Decomposition first{{{Rational(1), ExtremalPoint::glued(g2, 4, ExtremalPoint::max(0))},
                             {Rational(1), ExtremalPoint::tower(g2, 2)}}};
  o.require(validate_decomposition(g2, H("2,1,2,0,1"), first), "t^4*s^0 + t^2 rejected");
  const Grading g4(4);
  const Decomposition second{
      {{Rational(1), ExtremalPoint::glued(g4, 9, ExtremalPoint::glued(g4, 4, ExtremalPoint::max(0)))},
       {Rational(1, 2), ExtremalPoint::max(6)},
       {Rational(1, 2), ExtremalPoint::max(5)},
       {Rational(1), ExtremalPoint::max(1)}}};
  o.require(validate_decomposition(g4, H("3,3,2,2,3,3,2,0,1,1"), second),
            "t^9*t^4*s^0 + 1/2 s^6 + 1/2 s^5 + s^1 rejected");
  return o;
}

Outcome glue_golden() {
  Outcome o;
  const HVector got = star(Grading(3), 7, H("1,1"));
  o.require(got == H("1,1,1,2,1,0,1,1"), "star gave " + format_hvector(got));
  return o;
}

Outcome tower_identity() {
  Outcome o;
  for (std::int64_t n = 1; n <= 5; ++n) {
    const Grading g(n);
    for (std::int64_t m = 1; m <= 8; ++m) {
      const Decomposition dec = tower_decomposition(g, m);
      std::vector<Rational> sum(static_cast<std::size_t>(n * m));
      bool top_ok = false;
      for (const auto& t : dec.terms) {
        o.require(t.coeff > Rational(0), "nonpositive coefficient");
        if (t.point == ExtremalPoint::max(n * m - 1)) top_ok = t.coeff == Rational(1, m);
        const HVector e = expand(g, t.point);
        for (std::int64_t i = 0; i <= e.degree(); ++i) sum[static_cast<std::size_t>(i)] += t.coeff * e[i];
      }
      std::ostringstream where;
      where << "n=" << n << " m=" << m;
      o.require(top_ok, where.str() + ": q_m != 1/m");
      o.require(HVector(sum) == HVector(std::vector<Rational>(sum.size(), Rational(1))),
                where.str() + ": sum is not all ones");
    }
  }
  return o;
}

Outcome extremal_catalogue() {
  Outcome o;
  const Grading g(2);
  const std::size_t counts[] = {1, 2, 4, 5, 9, 10, 17};
  for (std::int64_t d = 0; d <= 6; ++d) {
    const auto ex = enumerate_ex(g, d);
    o.require(ex.size() == counts[d], "|Ex(" + std::to_string(d) + ")| = " + std::to_string(ex.size()));
    for (const auto& p : ex) {
      o.require(is_extremal_oracle(g, d, p), p.name() + " not extremal in Ex(" + std::to_string(d) + ")");
      const auto cert = decompose(g, expand(g, p));
      o.require(cert.member && cert.decomposition.terms.size() == 1 &&
                    cert.decomposition.terms[0].coeff == Rational(1) &&
                    cert.decomposition.terms[0].point == p,
                "decompose(" + p.name() + ") is not itself");
    }
  }
  return o;
}

struct SweepCase {
  Grading g;
  HVector h;
  MembershipCertificate cert;
  bool oracle = false;
};

std::vector<SweepCase> sweep() {
  std::vector<SweepCase> cases;
  for (std::int64_t n = 1; n <= 3; ++n) {
    for (std::int64_t d = 0; d <= 5; ++d) {
      testing::for_each_vector(d, 3, [&](const HVector& h) {
        const Grading g(n);
        cases.push_back({g, h, decompose(g, h), membership_oracle(g, h).member});
      });
    }
  }
  return cases;
}

std::string describe(const SweepCase& c) {
  return "n=" + std::to_string(c.g.n()) + " h=" + format_hvector(c.h);
}

Outcome verdict_equivalence(const std::vector<SweepCase>& cases) {
  Outcome o;
  o.require(cases.size() == 12285, "unexpected case count " + std::to_string(cases.size()));
  std::size_t mismatches = 0;
  for (const auto& c : cases) {
    if (c.cert.member == c.oracle) continue;
    ++mismatches;
    o.require(false, "mismatch at " + describe(c));
  }
  o.detail = std::to_string(cases.size()) + " cases, " + std::to_string(mismatches) +
             " mismatches" + (o.pass ? "" : "; first " + o.detail);
  return o;
}

Outcome chain_property(const std::vector<SweepCase>& cases) {
  Outcome o;
  std::size_t members = 0;
  for (const auto& c : cases) {
    if (!c.cert.member) continue;
    ++members;
    o.require(chain_check(c.g, c.cert.decomposition), "chain broken at " + describe(c));
    o.require(validate_decomposition(c.g, c.h, c.cert.decomposition),
              "reconstruction failed at " + describe(c));
  }
  if (o.pass) o.detail = std::to_string(members) + " member certificates";
  return o;
}

Outcome reduced_rejection(const std::vector<SweepCase>& cases) {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& c : cases) {
    const std::int64_t n = c.g.n();
    const std::int64_t d = c.h.degree();
    if (d % n != n - 1) continue;
    bool interior_zero = false;
    for (std::int64_t k = 1; k < d; ++k) interior_zero = interior_zero || c.h[k] == Rational(0);
    if (!interior_zero) continue;
    ++checked;
    o.require(!c.cert.member && !c.oracle, "accepted " + describe(c));
  }
  o.require(checked > 0, "no reduced vectors in the sweep");
  if (o.pass) o.detail = std::to_string(checked) + " reduced vectors rejected by both";
  return o;
}

Outcome lex_golden() {
  Outcome o;
  const Grading g(2);
  const LexSegment seg = lex_segment(g, H("1,1,2,2,2,1"));
  o.require(seg.staircase == Staircase({4, 3, 2}), "staircase mismatch");
  o.require(seg.generators == std::vector<std::string>{"x^4", "x^3*y", "x^2*y^2", "y^3"},
            "generator mismatch");
  o.require(staircase_hvector(g, Staircase({4, 3, 2})) == H("1,1,2,2,2,1"), "(4,3,2) h-vector");
  o.require(staircase_hvector(g, Staircase({6, 2, 1})) == H("1,1,2,2,2,1"), "(6,2,1) h-vector");
  return o;
}

Outcome diagram_calculus() {
  Outcome o;
  std::mt19937_64 rng(0);
  for (int k = 0; k < 1000 && o.pass; ++k) {
    const HDiagram diag = cli::random_hdiagram(rng, 4, 12, 6);
    const HVector total = diag.summed();
    const std::string where = "diagram " + std::to_string(k);
    o.require(diag.grading.n() <= 4 && total.degree() <= 12, where + " out of range");
    o.require(check_hdiagram(diag, total).ok(), where + " invalid");
    const auto levels = extract_levels(diag);
    std::vector<std::pair<Rational, HVector>> parts;
    for (std::size_t l = 0; l < levels.size(); ++l) {
      parts.emplace_back(levels[l].height, staircase_hvector(diag.grading, levels[l].staircase));
      if (l == 0) continue;
      const auto& inner = levels[l].staircase.rows();
      const auto& outer = levels[l - 1].staircase.rows();
      bool nested = inner.size() <= outer.size();
      for (std::size_t b = 0; nested && b < inner.size(); ++b) nested = inner[b] <= outer[b];
      o.require(nested, where + " levels not nested");
    }
    o.require(linear_combine(parts) == total, where + " does not reconstruct");
  }
  if (o.pass) o.detail = "1000 diagrams";
  return o;
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;  // 0 for no limit
  std::function<Outcome()> check;
};

}  // namespace
}  // namespace hcone

int main() {
  using namespace hcone;
  using Clock = std::chrono::steady_clock;
  std::vector<SweepCase> cases;
  const std::vector<Criterion> criteria{
      {1, "worked-example reproduction", 1.0, worked_examples},
      {2, "alternative-decomposition validation", 0, alternative_decompositions},
      {3, "glue golden value", 0, glue_golden},
      {4, "tower identity", 1.0, tower_identity},
      {5, "extremal catalogue", 30.0, extremal_catalogue},
      {6, "verdict equivalence", 120.0,
       [&] {
         cases = sweep();
         return verdict_equivalence(cases);
       }},
      {7, "chain property", 0, [&] { return chain_property(cases); }},
      {8, "reduced vectors rejected", 0, [&] { return reduced_rejection(cases); }},
      {9, "lex-segment golden", 0, lex_golden},
      {10, "diagram calculus", 0, diagram_calculus},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      o.pass = false;
      o.detail += (o.detail.empty() ? "" : "; ") + std::string("over time limit");
    }
    failed += o.pass ? 0 : 1;
    std::printf("%s [%d] %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, secs,
                o.detail.empty() ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
