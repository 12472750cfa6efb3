#include <gtest/gtest.h>

#include "property_checks.hpp"

namespace {

void expect_ok(const props::Summary& s) {
  EXPECT_GT(s.cases, 0);
  EXPECT_EQ(s.failures, 0) << s.first_failure;
}

}  // namespace

TEST(Properties, SmithFormOnRandomMatrices) {
  for (unsigned seed : {1u, 20240601u}) expect_ok(props::smith_form_suite(200, seed));
}

TEST(Properties, HilbertBasisOnRandomCones) {
  for (unsigned seed : {7u, 31u}) expect_ok(props::hilbert_basis_suite(50, seed));
}

TEST(Properties, SymbolicPowersMatchValuations) { expect_ok(props::symbolic_power_suite()); }

TEST(Properties, FedderInvariantUnderVariablePermutation) {
  for (unsigned seed : {11u, 12u}) expect_ok(props::fedder_permutation_suite(seed));
}
