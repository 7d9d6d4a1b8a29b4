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

#include "hcone/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "hcone/errors.hpp"

namespace hcone {
namespace {

const Rational& cell(const HDiagram& diag, std::size_t row, std::size_t col) {
  static const Rational kZero;
  if (row >= diag.rows.size() || col >= diag.rows[row].size()) return kZero;
  return diag.rows[row][col];
}

// Highest degree carrying a nonzero entry, or -1.
std::int64_t max_degree(const HDiagram& diag) {
  const std::int64_t n = diag.grading.n();
  std::int64_t top = -1;
  for (std::size_t k = 0; k < diag.rows.size(); ++k) {
    const auto& row = diag.rows[k];
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (!row[c].is_zero()) {
        top = std::max(top, n * static_cast<std::int64_t>(k) +
                                static_cast<std::int64_t>(c));
      }
    }
  }
  return top;
}

std::size_t label_width(Grading g, const Staircase& s) {
  std::int64_t top = 0;
  for (std::size_t b = 0; b < s.rows().size(); ++b) {
    top = std::max(top, s.rows()[b] - 1 + g.n() * static_cast<std::int64_t>(b));
  }
  return std::to_string(top).size();
}

}  // namespace

Staircase::Staircase(std::vector<std::int64_t> rows) : rows_(std::move(rows)) {
  for (std::size_t b = 0; b < rows_.size(); ++b) {
    if (rows_[b] < 1) {
      throw DomainError("staircase row lengths must be positive");
    }
    if (b > 0 && rows_[b] > rows_[b - 1]) {
      throw DomainError("staircase row lengths must be weakly decreasing");
    }
  }
}

std::int64_t Staircase::box_count() const {
  std::int64_t total = 0;
  for (auto len : rows_) total += len;
  return total;
}

bool Staircase::contains(std::int64_t a, std::int64_t b) const {
  return a >= 0 && b >= 0 && b < static_cast<std::int64_t>(rows_.size()) &&
         a < rows_[static_cast<std::size_t>(b)];
}

Rational HDiagram::at(std::int64_t degree, std::int64_t j) const {
  const std::int64_t col = degree - grading.n() * (j - 1);
  if (j < 1 || col < 0) return Rational{};
  return cell(*this, static_cast<std::size_t>(j - 1),
              static_cast<std::size_t>(col));
}

HVector HDiagram::summed() const {
  std::vector<Rational> sums;
  const std::int64_t n = grading.n();
  for (std::size_t k = 0; k < rows.size(); ++k) {
    for (std::size_t c = 0; c < rows[k].size(); ++c) {
      const auto deg = static_cast<std::size_t>(n * static_cast<std::int64_t>(k)) + c;
      if (sums.size() <= deg) sums.resize(deg + 1);
      sums[deg] += rows[k][c];
    }
  }
  return HVector(std::move(sums));
}

std::string DiagramCheck::message() const {
  std::ostringstream os;
  switch (violation) {
    case DiagramViolation::kNone:
      return "valid";
    case DiagramViolation::kNegativeEntry:
      os << "negative entry";
      break;
    case DiagramViolation::kRowBound:
      os << "row beyond the bound s_d";
      break;
    case DiagramViolation::kRowIncrease:
      os << "condition (1) violated: row increases";
      break;
    case DiagramViolation::kColumnIncrease:
      os << "condition (2) violated: column increases upward";
      break;
    case DiagramViolation::kSumMismatch:
      os << "degree sum differs from target";
      break;
  }
  os << " at (i=" << degree << ", j=" << row << ")";
  return os.str();
}

DiagramCheck check_hdiagram(const HDiagram& diag, const HVector& target) {
  const std::int64_t n = diag.grading.n();
  const auto rows = diag.rows.size();
  for (std::size_t k = 0; k < rows; ++k) {
    for (std::size_t c = 0; c < diag.rows[k].size(); ++c) {
      if (diag.rows[k][c].sign() < 0) {
        return {DiagramViolation::kNegativeEntry,
                n * static_cast<std::int64_t>(k) + static_cast<std::int64_t>(c),
                static_cast<std::int64_t>(k) + 1};
      }
    }
  }
  const std::int64_t top = max_degree(diag);
  const std::int64_t bound = top < 0 ? 0 : s_coeff(diag.grading, top);
  if (static_cast<std::int64_t>(rows) > bound) {
    return {DiagramViolation::kRowBound, n * bound, bound + 1};
  }
  for (std::size_t k = 0; k < rows; ++k) {
    const auto& row = diag.rows[k];
    for (std::size_t c = 0; c + 1 < row.size(); ++c) {
      if (row[c] < row[c + 1]) {
        return {DiagramViolation::kRowIncrease,
                n * static_cast<std::int64_t>(k) + static_cast<std::int64_t>(c),
                static_cast<std::int64_t>(k) + 1};
      }
    }
  }
  for (std::size_t k = 1; k < rows; ++k) {
    for (std::size_t c = 0; c < diag.rows[k].size(); ++c) {
      if (cell(diag, k - 1, c) < diag.rows[k][c]) {
        return {DiagramViolation::kColumnIncrease,
                n * static_cast<std::int64_t>(k - 1) + static_cast<std::int64_t>(c),
                static_cast<std::int64_t>(k)};
      }
    }
  }
  const HVector sums = diag.summed();
  const std::int64_t last = std::max(sums.degree(), target.degree());
  for (std::int64_t i = 0; i <= last; ++i) {
    if (sums[i] != target[i]) return {DiagramViolation::kSumMismatch, i, -1};
  }
  return {};
}

std::vector<Level> extract_levels(const HDiagram& diag) {
  if (const auto check = check_hdiagram(diag, diag.summed()); !check.ok()) {
    throw DomainError("invalid h-diagram: " + check.message());
  }
  std::set<Rational> thresholds;
  for (const auto& row : diag.rows) {
    for (const auto& v : row) {
      if (v.sign() > 0) thresholds.insert(v);
    }
  }
  std::vector<Level> levels;
  Rational below;
  for (const auto& t : thresholds) {
    std::vector<std::int64_t> lengths;
    for (const auto& row : diag.rows) {
      std::int64_t len = 0;
      while (len < static_cast<std::int64_t>(row.size()) &&
             row[static_cast<std::size_t>(len)] >= t) {
        ++len;
      }
      lengths.push_back(len);
    }
    while (!lengths.empty() && lengths.back() == 0) lengths.pop_back();
    levels.push_back({t - below, Staircase(std::move(lengths))});
    below = t;
  }
  return levels;
}

HVector staircase_hvector(Grading g, const Staircase& s) {
  std::vector<Rational> h;
  for (std::size_t b = 0; b < s.rows().size(); ++b) {
    for (std::int64_t a = 0; a < s.rows()[b]; ++a) {
      const auto deg =
          static_cast<std::size_t>(a + g.n() * static_cast<std::int64_t>(b));
      if (h.size() <= deg) h.resize(deg + 1);
      h[deg] += 1;
    }
  }
  return HVector(std::move(h));
}

std::string format_monomial(std::int64_t a, std::int64_t b) {
  std::string s;
  if (a > 0) s += a == 1 ? "x" : "x^" + std::to_string(a);
  if (b > 0) {
    if (!s.empty()) s += "*";
    s += b == 1 ? "y" : "y^" + std::to_string(b);
  }
  return s.empty() ? "1" : s;
}

LexSegment lex_segment(Grading g, const HVector& h) {
  const std::int64_t n = g.n();
  std::set<std::pair<std::int64_t, std::int64_t>> boxes;  // (b, a)
  for (std::int64_t i = 0; i <= h.degree(); ++i) {
    if (!h[i].is_integer()) {
      throw DomainError("lex_segment needs integer entries; h_" +
                        std::to_string(i) + " = " + h[i].str());
    }
    const std::int64_t count = h[i].to_int64();
    if (count > s_coeff(g, i)) {
      throw DomainError("h_" + std::to_string(i) + " = " + h[i].str() +
                        " exceeds the bound s_" + std::to_string(i) + " = " +
                        std::to_string(s_coeff(g, i)));
    }
    const std::int64_t top_b = i / n;
    for (std::int64_t b = top_b; b > top_b - count; --b) {
      boxes.insert({b, i - n * b});
    }
  }
  // Scan by degree so the reported witness has the smallest degree.
  std::vector<std::pair<std::int64_t, std::int64_t>> by_degree(boxes.begin(),
                                                               boxes.end());
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [n](const auto& p, const auto& q) {
                     return p.second + n * p.first < q.second + n * q.first;
                   });
  for (const auto& [b, a] : by_degree) {
    std::pair<std::int64_t, std::int64_t> missing{-1, -1};
    if (a > 0 && !boxes.count({b, a - 1})) missing = {b, a - 1};
    if (b > 0 && !boxes.count({b - 1, a})) missing = {b - 1, a};
    if (missing.first >= 0) {
      throw DomainError("not a cyclic O-sequence: " + format_monomial(a, b) +
                        " is selected but its divisor " +
                        format_monomial(missing.second, missing.first) +
                        " is not");
    }
  }
  std::vector<std::int64_t> lengths;
  for (const auto& [b, a] : boxes) {
    if (static_cast<std::int64_t>(lengths.size()) <= b) {
      lengths.resize(static_cast<std::size_t>(b + 1));
    }
    ++lengths[static_cast<std::size_t>(b)];
  }
  LexSegment out{Staircase(lengths), {}};
  if (lengths.empty()) {
    out.generators.push_back("1");
    return out;
  }
  for (std::size_t b = 0; b < lengths.size(); ++b) {
    if (b == 0 || lengths[b] < lengths[b - 1]) {
      out.generators.push_back(
          format_monomial(lengths[b], static_cast<std::int64_t>(b)));
    }
  }
  out.generators.push_back(
      format_monomial(0, static_cast<std::int64_t>(lengths.size())));
  return out;
}

RenderFormat parse_render_format(const std::string& name) {
  if (name == "ascii" || name == "text") return RenderFormat::kAscii;
  if (name == "svg") return RenderFormat::kSvg;
  throw ParseError("unknown render format '" + name + "'");
}

std::string render_staircase(Grading g, const Staircase& s, RenderFormat fmt) {
  const auto& rows = s.rows();
  std::ostringstream os;
  if (fmt == RenderFormat::kAscii) {
    const std::size_t w = label_width(g, s);
    for (std::size_t b = rows.size(); b-- > 0;) {
      for (std::int64_t a = 0; a < rows[b]; ++a) {
        const std::string label =
            std::to_string(a + g.n() * static_cast<std::int64_t>(b));
        if (a > 0) os << ' ';
        os << std::string(w - label.size(), ' ') << label;
      }
      os << '\n';
    }
    return os.str();
  }
  constexpr int kCell = 40;
  const std::int64_t width = rows.empty() ? 0 : rows.front() * kCell;
  const std::int64_t height = static_cast<std::int64_t>(rows.size()) * kCell;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
     << height << "\">\n";
  for (std::size_t b = 0; b < rows.size(); ++b) {
    const std::int64_t y =
        (static_cast<std::int64_t>(rows.size() - 1 - b)) * kCell;
    for (std::int64_t a = 0; a < rows[b]; ++a) {
      const std::int64_t x = a * kCell;
      os << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << kCell
         << "\" height=\"" << kCell
         << "\" fill=\"white\" stroke=\"black\"/>\n";
      os << "  <text x=\"" << x + kCell / 2 << "\" y=\"" << y + kCell / 2 + 5
         << "\" text-anchor=\"middle\" font-size=\"14\">"
         << a + g.n() * static_cast<std::int64_t>(b) << "</text>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_hdiagram(const HDiagram& diag, RenderFormat fmt) {
  const auto levels = extract_levels(diag);
  std::ostringstream os;
  if (fmt == RenderFormat::kSvg) {
    // Levels stacked like the printed figures: the first (largest) level at
    // the bottom, each drawn as its own staircase with a height label.
    constexpr int kCell = 40;
    constexpr int kGap = 30;
    std::int64_t width = 0;
    std::int64_t height = 0;
    for (const auto& level : levels) {
      const auto& rows = level.staircase.rows();
      width = std::max(width, rows.empty() ? 0 : rows.front() * kCell);
      height += static_cast<std::int64_t>(rows.size()) * kCell + kGap;
    }
    width += 4 * kCell;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
       << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
       << height << "\">\n";
    std::int64_t top = 0;
    for (std::size_t l = levels.size(); l-- > 0;) {
      const auto& rows = levels[l].staircase.rows();
      const auto nrows = static_cast<std::int64_t>(rows.size());
      os << "  <text x=\"0\" y=\"" << top + kGap - 10
         << "\" font-size=\"14\">level " << l + 1 << " (h="
         << levels[l].height << ")</text>\n";
      for (std::int64_t b = 0; b < nrows; ++b) {
        const std::int64_t y = top + kGap + (nrows - 1 - b) * kCell;
        for (std::int64_t a = 0; a < rows[static_cast<std::size_t>(b)]; ++a) {
          const std::int64_t x = a * kCell;
          os << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << kCell
             << "\" height=\"" << kCell
             << "\" fill=\"white\" stroke=\"black\"/>\n";
          os << "  <text x=\"" << x + kCell / 2 << "\" y=\"" << y + kCell / 2 + 5
             << "\" text-anchor=\"middle\" font-size=\"14\">"
             << a + diag.grading.n() * b << "</text>\n";
        }
      }
      top += nrows * kCell + kGap;
    }
    os << "</svg>\n";
    return os.str();
  }
  for (std::size_t l = 0; l < levels.size(); ++l) {
    os << "level " << l + 1 << " (h=" << levels[l].height << "):";
    const auto& rows = levels[l].staircase.rows();
    for (std::size_t b = 0; b < rows.size(); ++b) {
      os << (b == 0 ? " " : " / ");
      for (std::int64_t a = 0; a < rows[b]; ++a) {
        os << '[' << a + diag.grading.n() * static_cast<std::int64_t>(b) << ']';
      }
    }
    os << '\n';
  }
  return os.str();
}

HDiagram diagram_from_decomposition(Grading g, const Decomposition& dec) {
  HDiagram diag{g, {}};
  for (const auto& term : dec.terms) {
    if (term.coeff.sign() < 0) {
      throw DomainError("negative coefficient in decomposition");
    }
    const auto lex = lex_segment(g, expand(g, term.point));
    const auto& rows = lex.staircase.rows();
    if (diag.rows.size() < rows.size()) diag.rows.resize(rows.size());
    for (std::size_t b = 0; b < rows.size(); ++b) {
      auto& row = diag.rows[b];
      if (static_cast<std::int64_t>(row.size()) < rows[b]) {
        row.resize(static_cast<std::size_t>(rows[b]));
      }
      for (std::int64_t a = 0; a < rows[b]; ++a) {
        row[static_cast<std::size_t>(a)] += term.coeff;
      }
    }
  }
  return diag;
}

}  // namespace hcone
