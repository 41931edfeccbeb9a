#include <gtest/gtest.h>

#include "properties.hpp"

namespace {

// Smaller than the acceptance run; the exhaustive pass stops at n = 5.
props::Plan quick() {
  props::Plan plan;
  plan.seed = 77;
  plan.random_cases = 1000;
  plan.exhaustive_n = 5;
  return plan;
}

void expect_clean(const props::Result& r) {
  EXPECT_GT(r.cases, 0u) << r.name;
  EXPECT_EQ(r.failures, 0u) << r.name << ": " << r.first_failure;
}

}  // namespace

TEST(Properties, LcInvolution) { expect_clean(props::lc_involution(quick())); }
TEST(Properties, ElcSymmetricComposition) { expect_clean(props::elc_symmetric_composition(quick())); }
TEST(Properties, ElcInvolution) { expect_clean(props::elc_involution(quick())); }
TEST(Properties, ElcDefinitionsAgree) { expect_clean(props::elc_definitions_agree(quick())); }
TEST(Properties, ConnectivityPreserved) { expect_clean(props::connectivity_preserved(quick())); }
TEST(Properties, BipartitenessPreserved) { expect_clean(props::bipartiteness_preserved(quick())); }
TEST(Properties, CanonicalRelabelingInvariance) {
  expect_clean(props::canonical_relabeling_invariance(quick()));
}
TEST(Properties, EquivalenceUnderColumnAndRowOperations) {
  expect_clean(props::equivalence_under_column_and_row_operations(quick()));
}
