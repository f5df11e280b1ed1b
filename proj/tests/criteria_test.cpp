// Copyright 2026 The sdcap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sdcap/criteria.hpp"

#include "gtest/gtest.h"

#include "sdcap/measures.hpp"

using namespace sdcap;

TEST(criteria, ppt_examples) {
    EXPECT_FALSE(is_ppt(singlet()));
    EXPECT_TRUE(is_ppt(maximally_mixed(2, 3)));
    EXPECT_TRUE(is_ppt(tiles_bound_entangled()));
    EXPECT_TRUE(is_ppt_side(tiles_bound_entangled(), Side::A));
    EXPECT_TRUE(is_ppt(werner_like(1.0 / 3.0 - 1e-6)));
    EXPECT_FALSE(is_ppt(werner_like(1.0 / 3.0 + 1e-3)));
}

TEST(criteria, reduction_examples) {
    ReductionResult bell = reduction_criterion(singlet());
    EXPECT_FALSE(bell.holdsA);
    EXPECT_FALSE(bell.holdsB);
    EXPECT_NEAR(bell.minB, -0.5, 1e-12);

    ReductionResult tiles = reduction_criterion(tiles_bound_entangled());
    EXPECT_TRUE(tiles.holdsA);
    EXPECT_TRUE(tiles.holdsB);
    EXPECT_NEAR(coherent_info(tiles_bound_entangled()), 0.0, 1e-12);
}

TEST(criteria, werner_reduction_threshold) {
    for (double p : {0.0, 0.1, 0.3, 0.34, 0.6, 1.0}) {
        ReductionResult r = reduction_criterion(werner_like(p));
        // Smallest eigenvalue of I (x) I/2 - rho is (1 - 3p) / 4.
        EXPECT_NEAR(r.minB, (1.0 - 3.0 * p) / 4.0, 1e-12) << p;
        EXPECT_EQ(r.holdsB, p <= 1.0 / 3.0) << p;
    }
}

TEST(criteria, ppt_implies_reduction) {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        BipartiteState s = random_state_of_rank(3, 3, 1 + static_cast<int>(seed % 9), seed);
        if (is_ppt(s)) {
            ReductionResult r = reduction_criterion(s);
            EXPECT_TRUE(r.holdsA && r.holdsB) << seed;
        }
    }
}

TEST(criteria, reduction_bounds_coherent_information) {
    for (int d : {2, 3}) {
        ReductionSurvey survey = reduction_survey(d, d, 400, 77, Execution::serial);
        EXPECT_EQ(survey.states, 400);
        EXPECT_GT(survey.holdsB, 0);
        EXPECT_LE(survey.max_coherent_info_when_holdsB, 1e-9);
    }
}
