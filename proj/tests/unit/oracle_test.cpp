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

#include <gtest/gtest.h>

#include "hcone/decompose.hpp"
#include "hcone/errors.hpp"
#include "support.hpp"

namespace hcone {
namespace {

using testing::H;

TEST(MembershipOracle, Examples) {
  EXPECT_FALSE(membership_oracle(Grading(2), H("1,0,0,0,1")).member);
  const OracleVerdict worked = membership_oracle(Grading(3), H("3,3,2,4,2,1,2,1"));
  ASSERT_TRUE(worked.member);
  ASSERT_TRUE(worked.witness.has_value());
  EXPECT_TRUE(check_hdiagram(*worked.witness, H("3,3,2,4,2,1,2,1")).ok());
  EXPECT_TRUE(membership_oracle(Grading(5), H("1")).member);
  EXPECT_TRUE(membership_oracle(Grading(2), HVector()).member);
}

TEST(MembershipOracle, BackendsAgreeOnTheWorkedExample) {
  for (const LpBackend b : {LpBackend::kFourierMotzkin, LpBackend::kSimplex}) {
    const OracleVerdict v = membership_oracle(Grading(3), H("3,3,2,4,2,1,2,1"), b);
    ASSERT_TRUE(v.member);
    EXPECT_TRUE(check_hdiagram(*v.witness, H("3,3,2,4,2,1,2,1")).ok());
  }
}

TEST(DiagramSystem, HasOneVariablePerCellUpToTheRowBound) {
  // n = 2, d = 4: s = (1,1,2,2,3), so 9 cells.
  const LinearSystem sys = diagram_system(Grading(2), H("2,1,2,0,1"));
  EXPECT_EQ(sys.num_vars, 9u);
  for (const bool nn : sys.nonnegative) EXPECT_TRUE(nn);
}

TEST(ConeMembershipViaEx, Examples) {
  const Grading g(2);
  const ConeVerdict ones = cone_membership_via_ex(g, H("1,1,1,1"));
  ASSERT_TRUE(ones.member);
  EXPECT_TRUE(validate_decomposition(g, H("1,1,1,1"), ones.witness));
  EXPECT_FALSE(cone_membership_via_ex(g, H("0,1")).member);
  const ConeVerdict tower = cone_membership_via_ex(g, H("1,0,1"));
  ASSERT_TRUE(tower.member);
  EXPECT_TRUE(validate_decomposition(g, H("1,0,1"), tower.witness));
}

TEST(IsExtremalOracle, Examples) {
  EXPECT_TRUE(is_extremal_oracle(Grading(2), 6, ExtremalPoint::tower(Grading(2), 6)));
  EXPECT_TRUE(is_extremal_oracle(Grading(1), 4, ExtremalPoint::max(4)));
  EXPECT_FALSE(is_extremal_candidate(Grading(2), 3, H("1,1,1,1")));
  EXPECT_TRUE(is_extremal_candidate(Grading(2), 3, H("1,1,2,2")));
  EXPECT_THROW(is_extremal_oracle(Grading(2), 2, ExtremalPoint::max(3)), DomainError);
}

TEST(OracleProperty, CharacterizationsAgreeOnASweep) {
  for (std::int64_t n = 1; n <= 3; ++n) {
    const Grading g(n);
    for (std::int64_t d = 0; d <= 4; ++d) {
      testing::for_each_vector(d, 2, [&](const HVector& h) {
        const OracleVerdict diagram = membership_oracle(g, h);
        const ConeVerdict cone = cone_membership_via_ex(g, h);
        ASSERT_EQ(diagram.member, cone.member) << "n=" << n << " h=" << format_hvector(h);
        if (cone.member) EXPECT_TRUE(validate_decomposition(g, h, cone.witness));
        if (diagram.member) EXPECT_TRUE(check_hdiagram(*diagram.witness, h).ok());
      });
    }
  }
}

TEST(OracleProperty, CatalogueIsExtremal) {
  for (std::int64_t n = 1; n <= 3; ++n) {
    const Grading g(n);
    for (const auto& p : enumerate_ex(g, 8)) {
      EXPECT_TRUE(is_extremal_oracle(g, 8, p)) << "n=" << n << " " << p.name();
    }
  }
}

}  // namespace
}  // namespace hcone
