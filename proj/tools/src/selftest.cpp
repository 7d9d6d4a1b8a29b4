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

#include "hcone_cli/selftest.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hcone/decompose.hpp"
#include "hcone/generators.hpp"
#include "hcone/oracle.hpp"

namespace hcone::cli {
namespace {

constexpr std::size_t kMaxReportedFailures = 5;

class Recorder {
 public:
  explicit Recorder(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& repro) {
    ++result_.cases;
    if (ok) return;
    ++result_.failure_count;
    if (result_.failures.size() < kMaxReportedFailures) {
      result_.failures.push_back(repro());
    }
  }

  PropertyResult take() { return std::move(result_); }

 private:
  PropertyResult result_;
};

std::string decompose_repro(std::int64_t n, const HVector& h) {
  return "hcone decompose -n " + std::to_string(n) + " --h " +
         format_hvector_list(h) + " --check-oracle";
}

// Calls f on every integer vector of degree exactly d with entries
// 0..entry_max.
void for_each_vector(std::int64_t d, std::int64_t entry_max,
                     const std::function<void(const HVector&)>& f) {
  std::vector<std::int64_t> e(static_cast<std::size_t>(d + 1), 0);
  e.back() = 1;
  while (true) {
    std::vector<Rational> v(e.begin(), e.end());
    f(HVector(std::move(v)));
    std::size_t k = 0;
    while (k < e.size()) {
      const std::int64_t floor = k + 1 == e.size() ? 1 : 0;
      if (++e[k] <= entry_max) break;
      e[k] = floor;
      ++k;
    }
    if (k == e.size()) return;
  }
}

bool has_lower_zero(const HVector& h) {
  for (std::int64_t i = 0; i < h.degree(); ++i) {
    if (h[i].is_zero()) return true;
  }
  return false;
}

Rational random_rational(std::mt19937_64& rng, std::int64_t num_max,
                         std::int64_t den_max) {
  std::uniform_int_distribution<std::int64_t> num(0, num_max);
  std::uniform_int_distribution<std::int64_t> den(1, den_max);
  return Rational(num(rng), den(rng));
}

}  // namespace

std::int64_t exhaustive_case_count(const SelftestBounds& b) {
  std::int64_t per_n = 0;
  std::int64_t power = 1;
  for (std::int64_t d = 0; d <= b.d_max; ++d) {
    per_n += b.entry_max * power;
    power *= b.entry_max + 1;
    if (per_n > (std::int64_t{1} << 40)) break;
  }
  const std::int64_t cap = std::int64_t{1} << 40;
  return b.n_max > cap / std::max<std::int64_t>(per_n, 1) ? cap : per_n * b.n_max;
}

HDiagram random_hdiagram(std::mt19937_64& rng, std::int64_t n_max,
                         std::int64_t d_max, std::int64_t den_max) {
  const std::int64_t n = std::uniform_int_distribution<std::int64_t>(1, n_max)(rng);
  const std::int64_t d = std::uniform_int_distribution<std::int64_t>(0, d_max)(rng);
  const int pieces = std::uniform_int_distribution<int>(1, 4)(rng);
  HDiagram diag{Grading(n), {}};
  for (int p = 0; p < pieces; ++p) {
    // Row j+1 covers degrees n*j .. n*j + len_j - 1 with weakly decreasing
    // lengths; that is exactly a down-set for conditions (1) and (2).
    std::vector<std::int64_t> lens;
    std::int64_t prev = d + 1;
    for (std::int64_t j = 0; n * j <= d; ++j) {
      const std::int64_t cap = std::min(prev, d - n * j + 1);
      const std::int64_t lo = j == 0 ? 1 : 0;
      const std::int64_t len = std::uniform_int_distribution<std::int64_t>(lo, cap)(rng);
      if (len == 0) break;
      lens.push_back(len);
      prev = len;
    }
    Rational q = random_rational(rng, den_max, den_max);
    if (q.is_zero()) q = Rational(1, den_max);
    if (diag.rows.size() < lens.size()) diag.rows.resize(lens.size());
    for (std::size_t j = 0; j < lens.size(); ++j) {
      auto& row = diag.rows[j];
      if (row.size() < static_cast<std::size_t>(lens[j])) {
        row.resize(static_cast<std::size_t>(lens[j]));
      }
      for (std::int64_t c = 0; c < lens[j]; ++c) row[static_cast<std::size_t>(c)] += q;
    }
  }
  return diag;
}

LinearSystem random_system(std::mt19937_64& rng, std::size_t max_vars) {
  std::uniform_int_distribution<std::size_t> vars(1, max_vars);
  std::uniform_int_distribution<std::int64_t> coeff(-3, 3);
  std::uniform_int_distribution<std::int64_t> rhs(-5, 5);
  std::uniform_int_distribution<int> coin(0, 3);
  LinearSystem sys;
  sys.num_vars = vars(rng);
  sys.nonnegative.resize(sys.num_vars);
  for (std::size_t v = 0; v < sys.num_vars; ++v) sys.nonnegative[v] = coin(rng) != 0;
  const std::size_t m = std::uniform_int_distribution<std::size_t>(1, sys.num_vars + 4)(rng);
  for (std::size_t k = 0; k < m; ++k) {
    Constraint c;
    c.coeffs.resize(sys.num_vars);
    for (auto& x : c.coeffs) x = coin(rng) == 0 ? Rational{} : Rational(coeff(rng));
    c.relation = coin(rng) == 0 ? Relation::kEqual : Relation::kGreaterEqual;
    c.rhs = Rational(rhs(rng));
    sys.constraints.push_back(std::move(c));
  }
  return sys;
}

SelftestReport run_selftest(const SelftestBounds& bounds) {
  Recorder verdicts("verdict_equivalence");
  Recorder reconstruction("reconstruction");
  Recorder chain("chain");
  Recorder reduced("reduced_top_degree_rejected");
  Recorder bound("necessary_row_bound");
  Recorder stripping("max_strip_stays_in_cone");
  Recorder characterizations("oracle_characterizations_agree");

  for (std::int64_t n = 1; n <= bounds.n_max; ++n) {
    const Grading g(n);
    for (std::int64_t d = 0; d <= bounds.d_max; ++d) {
      for_each_vector(d, bounds.entry_max, [&](const HVector& h) {
        const auto repro = [&] { return decompose_repro(n, h); };
        const MembershipCertificate cert = decompose(g, h);
        const bool oracle = membership_oracle(g, h).member;
        verdicts.check(cert.member == oracle, repro);
        characterizations.check(cone_membership_via_ex(g, h).member == oracle,
                                repro);
        if (d % n == n - 1 && has_lower_zero(h)) {
          reduced.check(!cert.member && !oracle, repro);
        }
        if (!cert.member) return;
        reconstruction.check(validate_decomposition(g, h, cert.decomposition),
                             repro);
        chain.check(chain_check(g, cert.decomposition), repro);
        bool within = true;
        for (std::int64_t i = 0; i <= d; ++i) {
          within = within && h[i] <= h[0] * Rational(s_coeff(g, i));
        }
        bound.check(within, repro);
        const StripResult strip = strip_max(g, h, d);
        stripping.check(membership_oracle(g, strip.remainder).member, [&] {
          return decompose_repro(n, strip.remainder);
        });
      });
    }
  }

  Recorder idempotence("generator_idempotence");
  Recorder extremality("catalogue_extremality");
  for (std::int64_t n = 1; n <= bounds.n_max; ++n) {
    const Grading g(n);
    for (const auto& p : enumerate_ex(g, bounds.d_max)) {
      const HVector e = expand(g, p);
      const auto repro = [&] { return decompose_repro(n, e); };
      const MembershipCertificate cert = decompose(g, e);
      idempotence.check(cert.member && cert.decomposition.terms.size() == 1 &&
                            cert.decomposition.terms[0].coeff == Rational(1) &&
                            cert.decomposition.terms[0].point == p,
                        repro);
      extremality.check(is_extremal_oracle(g, e.degree(), p), [&] {
        return "hcone ex -n " + std::to_string(n) + " -d " +
               std::to_string(e.degree()) + "  # " + p.name();
      });
    }
  }

  std::mt19937_64 rng(bounds.seed);
  Recorder fuzz("random_rational_verdicts");
  for (std::int64_t c = 0; c < bounds.random_cases; ++c) {
    const std::int64_t n =
        std::uniform_int_distribution<std::int64_t>(1, bounds.n_max)(rng);
    const std::int64_t d =
        std::uniform_int_distribution<std::int64_t>(0, bounds.d_max)(rng);
    std::vector<Rational> v;
    for (std::int64_t i = 0; i <= d; ++i) {
      v.push_back(random_rational(rng, 6 * std::max<std::int64_t>(bounds.entry_max, 1), 6));
    }
    const HVector h(std::move(v));
    const Grading g(n);
    fuzz.check(decompose(g, h).member == membership_oracle(g, h).member,
               [&] { return decompose_repro(n, h); });
  }

  Recorder backends("lp_backends_agree");
  for (std::int64_t c = 0; c < bounds.random_cases; ++c) {
    const LinearSystem sys = random_system(rng, 12);
    const bool fm = lp_feasible(sys, LpBackend::kFourierMotzkin).feasible;
    const bool sx = lp_feasible(sys, LpBackend::kSimplex).feasible;
    backends.check(fm == sx, [&] {
      return "random LP system #" + std::to_string(c) + " (seed " +
             std::to_string(bounds.seed) + ")";
    });
  }

  Recorder levels("diagram_levels");
  for (std::int64_t c = 0; c < bounds.random_cases; ++c) {
    const HDiagram diag =
        random_hdiagram(rng, std::max<std::int64_t>(bounds.n_max, 1),
                        std::max<std::int64_t>(bounds.d_max, 0), 6);
    const HVector total = diag.summed();
    const auto slices = extract_levels(diag);
    std::vector<std::pair<Rational, HVector>> parts;
    bool nested = true;
    for (std::size_t l = 0; l < slices.size(); ++l) {
      parts.emplace_back(slices[l].height,
                         staircase_hvector(diag.grading, slices[l].staircase));
      if (l == 0) continue;
      const auto& inner = slices[l].staircase.rows();
      const auto& outer = slices[l - 1].staircase.rows();
      nested = nested && inner.size() <= outer.size();
      for (std::size_t b = 0; nested && b < inner.size(); ++b) {
        nested = inner[b] <= outer[b];
      }
    }
    levels.check(nested && linear_combine(parts) == total, [&] {
      return "random diagram #" + std::to_string(c) + " (seed " +
             std::to_string(bounds.seed) + "), sums " + format_hvector(total);
    });
  }

  SelftestReport report{bounds, {}};
  for (Recorder* r : {&verdicts, &reconstruction, &chain, &reduced, &bound,
                      &stripping, &characterizations, &idempotence,
                      &extremality, &fuzz, &backends, &levels}) {
    report.properties.push_back(r->take());
  }
  return report;
}

bool SelftestReport::passed() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyResult& p) { return p.failure_count == 0; });
}

std::string SelftestReport::text(bool color) const {
  const char* green = color ? "\033[32m" : "";
  const char* red = color ? "\033[31m" : "";
  const char* reset = color ? "\033[0m" : "";
  std::ostringstream os;
  os << "selftest n_max=" << bounds.n_max << " d_max=" << bounds.d_max
     << " entry_max=" << bounds.entry_max << " seed=" << bounds.seed
     << " random_cases=" << bounds.random_cases << '\n';
  std::size_t failed = 0;
  for (const auto& p : properties) {
    const bool ok = p.failure_count == 0;
    failed += ok ? 0 : 1;
    os << (ok ? green : red) << (ok ? "PASS" : "FAIL") << reset << "  "
       << std::left << std::setw(32) << p.name << std::right << std::setw(7)
       << p.cases << " cases";
    if (!ok) os << ", " << p.failure_count << " failures";
    os << '\n';
    for (const auto& f : p.failures) os << "      repro: " << f << '\n';
  }
  os << "result: " << (failed == 0 ? green : red)
     << (failed == 0 ? "PASS" : "FAIL") << reset << " (" << properties.size()
     << " properties, " << failed << " failed)\n";
  return os.str();
}

std::string SelftestReport::json() const {
  nlohmann::json props = nlohmann::json::array();
  for (const auto& p : properties) {
    props.push_back({{"name", p.name},
                     {"cases", p.cases},
                     {"failure_count", p.failure_count},
                     {"failures", p.failures}});
  }
  const nlohmann::json out{
      {"bounds",
       {{"n_max", bounds.n_max},
        {"d_max", bounds.d_max},
        {"entry_max", bounds.entry_max},
        {"seed", bounds.seed},
        {"random_cases", bounds.random_cases}}},
      {"properties", props},
      {"passed", passed()}};
  return out.dump(2) + "\n";
}

}  // namespace hcone::cli
