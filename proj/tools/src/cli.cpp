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

#include "hcone_cli/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hcone/decompose.hpp"
#include "hcone/diagram.hpp"
#include "hcone/errors.hpp"
#include "hcone/generators.hpp"
#include "hcone/json.hpp"
#include "hcone/oracle.hpp"
#include "hcone_cli/selftest.hpp"

namespace hcone::cli {
namespace {

constexpr std::int64_t kMaxSweepCases = 1'000'000;

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string list_ex(Grading g, std::int64_t d, bool as_json) {
  const auto points = enumerate_ex(g, d);
  if (as_json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : points) {
      arr.push_back({{"name", p.name()},
                     {"point", to_json(p)},
                     {"expansion", to_json(expand(g, p))}});
    }
    return nlohmann::json{{"n", g.n()}, {"d", d}, {"points", arr}}.dump(2) + "\n";
  }
  std::size_t width = 0;
  for (const auto& p : points) width = std::max(width, p.name().size());
  std::ostringstream os;
  os << "Ex(" << d << ") for n=" << g.n() << ": " << points.size()
     << " points\n";
  for (const auto& p : points) {
    os << pad(p.name(), width + 2) << format_hvector(expand(g, p)) << '\n';
  }
  return os.str();
}

std::string certificate_text(Grading g, const HVector& h,
                             const MembershipCertificate& cert) {
  std::ostringstream os;
  os << "n = " << g.n() << ", h = " << format_hvector(h) << '\n';
  if (!cert.member) {
    os << "not a member: rejected at " << cert.witness.step << " (degree "
       << cert.witness.degree << ", depth " << cert.witness.depth << ")\n";
    return os.str();
  }
  os << "member: " << format_decomposition(cert.decomposition) << '\n';
  std::size_t cw = 0;
  std::size_t nw = 0;
  for (const auto& t : cert.decomposition.terms) {
    cw = std::max(cw, t.coeff.str().size());
    nw = std::max(nw, t.point.name().size());
  }
  for (const auto& t : cert.decomposition.terms) {
    os << "  " << std::string(cw - t.coeff.str().size(), ' ') << t.coeff.str()
       << "  " << pad(t.point.name(), nw + 2)
       << format_hvector(expand(g, t.point)) << '\n';
  }
  return os.str();
}

Staircase parse_staircase(const std::string& text) {
  std::vector<std::int64_t> rows;
  const HVector lengths = parse_hvector(text);
  for (const auto& x : lengths.entries()) {
    if (!x.is_integer()) {
      throw ParseError("staircase row '" + x.str() + "' is not an integer");
    }
    rows.push_back(x.to_int64());
  }
  return Staircase(std::move(rows));
}

}  // namespace

RunResult run(const std::vector<std::string>& args, const RunOptions& opts) {
  CLI::App app{"Decompose h-vectors of the cone H(d) under the grading "
               "deg(x)=1, deg(y)=n.",
               "hcone"};
  app.set_help_flag("--help", "Print help and exit");
  app.require_subcommand(1, 1);

  std::int64_t n = 0;
  std::int64_t d = 0;
  std::string h_text;
  std::string staircase_text;
  std::string format = "text";
  bool check_oracle = false;
  SelftestBounds bounds;
  bool force = false;

  const auto positive = CLI::Range(std::int64_t{1}, std::numeric_limits<std::int64_t>::max());
  const auto text_or_json = CLI::IsMember({"text", "json"});

  auto* ex = app.add_subcommand("ex", "List the extremal points Ex(d) with expansions");
  ex->add_option("-n", n, "Degree of y")->required()->check(positive);
  ex->add_option("-d", d, "Degree bound")->required()->check(CLI::NonNegativeNumber);
  ex->add_option("--format", format, "text | json")->check(text_or_json);

  auto* dec = app.add_subcommand("decompose", "Decompose h into extremal points");
  dec->add_option("-n", n, "Degree of y")->required()->check(positive);
  dec->add_option("--h", h_text, "h-vector, e.g. 3,3,2 or 1/2,1")->required();
  dec->add_flag("--check-oracle", check_oracle,
                "Cross-check the verdict against the LP membership oracle");
  dec->add_option("--format", format, "text | json")->check(text_or_json);

  auto* member = app.add_subcommand("member", "Decide membership (exit 0 member, 1 not)");
  member->add_option("-n", n, "Degree of y")->required()->check(positive);
  member->add_option("--h", h_text, "h-vector")->required();
  member->add_option("--format", format, "text | json")->check(text_or_json);

  auto* lexseg = app.add_subcommand("lexseg", "Staircase and generators of the lex-segment ideal");
  lexseg->add_option("-n", n, "Degree of y")->required()->check(positive);
  lexseg->add_option("--h", h_text, "Integer h-vector")->required();
  lexseg->add_option("--format", format, "text | json")->check(text_or_json);

  auto* render = app.add_subcommand("render", "Draw a staircase or the level stack of a decomposition");
  render->add_option("-n", n, "Degree of y")->required()->check(positive);
  auto* st_opt = render->add_option("--staircase", staircase_text, "Row lengths, bottom row first");
  auto* h_opt = render->add_option("--h", h_text, "h-vector to decompose and draw");
  st_opt->excludes(h_opt);
  render->add_option("--format", format, "ascii | text | svg")
      ->check(CLI::IsMember({"ascii", "text", "svg"}));

  auto* selftest = app.add_subcommand("selftest", "Run the exhaustive and randomized property suites");
  selftest->add_option("--n-max", bounds.n_max, "Largest n")->check(positive);
  selftest->add_option("--d-max", bounds.d_max, "Largest degree")->check(CLI::NonNegativeNumber);
  selftest->add_option("--entry-max", bounds.entry_max, "Largest integer entry")->check(positive);
  selftest->add_option("--seed", bounds.seed, "RNG seed");
  selftest->add_option("--random-cases", bounds.random_cases, "Cases per randomized suite")
      ->check(CLI::NonNegativeNumber);
  selftest->add_flag("--force", force, "Allow sweeps above one million cases");
  selftest->add_option("--format", format, "text | json")->check(text_or_json);

  RunResult result;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = app.exit(e, out, err);
    result.out = out.str();
    result.err = err.str();
    result.exit_code = code == 0 ? kSuccess : kUsage;
    return result;
  }

  const bool as_json = format == "json";
  try {
    const Grading g(std::max<std::int64_t>(n, 1));
    if (ex->parsed()) {
      result.out = list_ex(g, d, as_json);
    } else if (dec->parsed()) {
      const HVector h = parse_hvector(h_text);
      const MembershipCertificate cert = decompose(g, h);
      std::optional<bool> oracle;
      if (check_oracle) oracle = membership_oracle(g, h).member;
      if (as_json) {
        nlohmann::json j = to_json(g, cert);
        j["n"] = n;
        j["h"] = to_json(h);
        if (oracle) j["oracle"] = *oracle;
        result.out = j.dump(2) + "\n";
      } else {
        result.out = certificate_text(g, h, cert);
        if (oracle) {
          result.out += std::string("oracle: ") +
                        (*oracle == cert.member ? "agrees" : "DISAGREES") + '\n';
        }
      }
      if (oracle && *oracle != cert.member) {
        result.err = "error: decomposition verdict disagrees with the LP oracle\n";
        result.exit_code = kInternal;
      } else {
        result.exit_code = cert.member ? kSuccess : kNotMember;
      }
    } else if (member->parsed()) {
      const bool is_member = decompose(g, parse_hvector(h_text)).member;
      result.out = as_json ? nlohmann::json{{"member", is_member}}.dump() + "\n"
                           : std::string(is_member ? "member\n" : "not a member\n");
      result.exit_code = is_member ? kSuccess : kNotMember;
    } else if (lexseg->parsed()) {
      const LexSegment seg = lex_segment(g, parse_hvector(h_text));
      if (as_json) {
        result.out = to_json(seg).dump(2) + "\n";
      } else {
        std::ostringstream os;
        os << "staircase: (";
        for (std::size_t b = 0; b < seg.staircase.rows().size(); ++b) {
          os << (b ? "," : "") << seg.staircase.rows()[b];
        }
        os << ")\ngenerators: ";
        for (std::size_t k = 0; k < seg.generators.size(); ++k) {
          os << (k ? ", " : "") << seg.generators[k];
        }
        os << '\n';
        result.out = os.str();
      }
    } else if (render->parsed()) {
      const RenderFormat fmt = parse_render_format(format);
      if (st_opt->count() > 0) {
        result.out = render_staircase(g, parse_staircase(staircase_text), fmt);
      } else if (h_opt->count() > 0) {
        const HVector h = parse_hvector(h_text);
        const MembershipCertificate cert = decompose(g, h);
        if (!cert.member) {
          result.out = certificate_text(g, h, cert);
          result.exit_code = kNotMember;
        } else {
          result.out = render_hdiagram(
              diagram_from_decomposition(g, cert.decomposition), fmt);
        }
      } else {
        result.err = "error: render needs --staircase or --h\n";
        result.exit_code = kUsage;
      }
    } else if (selftest->parsed()) {
      const std::int64_t cases = exhaustive_case_count(bounds);
      if (cases > kMaxSweepCases && !force) {
        result.err = "error: --n-max/--d-max/--entry-max give " +
                     std::to_string(cases) +
                     " sweep cases (limit 1000000); pass --force to run anyway\n";
        result.exit_code = kUsage;
        return result;
      }
      const SelftestReport report = run_selftest(bounds);
      result.out = as_json ? report.json() : report.text(opts.color);
      result.exit_code = report.passed() ? kSuccess : kInternal;
    }
  } catch (const ParseError& e) {
    result.err = std::string("error: ") + e.what() + "\n";
    result.exit_code = kUsage;
  } catch (const DomainError& e) {
    result.err = std::string("error: ") + e.what() + "\n";
    result.exit_code = kUsage;
  } catch (const std::exception& e) {
    result.err = std::string("internal error: ") + e.what() + "\n";
    result.exit_code = kInternal;
  }
  return result;
}

}  // namespace hcone::cli
