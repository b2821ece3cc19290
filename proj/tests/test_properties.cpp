// Copyright 2026 The qpf Authors
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

#include <gtest/gtest.h>

#include "properties.hpp"

namespace {

void expect_ok(const props::Result& r) {
  EXPECT_GT(r.cases, 0);
  EXPECT_EQ(r.failures, 0) << r.name << ": first failure: " << r.first_failure;
}

TEST(Property, Su2Commutators) { expect_ok(props::su2_commutators()); }
TEST(Property, JCubed) { expect_ok(props::j_cubed()); }
TEST(Property, Unitarity) { expect_ok(props::unitarity()); }
TEST(Property, RotationAdditivity) { expect_ok(props::rotation_additivity()); }
TEST(Property, EdgeOrderIndependence) { expect_ok(props::edge_order_independence()); }
TEST(Property, Composition) { expect_ok(props::composition()); }
TEST(Property, Locality) { expect_ok(props::locality()); }
TEST(Property, DualBackend) { expect_ok(props::dual_backend()); }
TEST(Property, ReorderSpectra) { expect_ok(props::reorder_spectra()); }
TEST(Property, CliContracts) { expect_ok(props::cli_contracts(QPF_SCRATCH_DIR)); }

TEST(Property, FixedSeedIsReproducible) {
  props::Gen a(3);
  props::Gen b(3);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(a.angle(), b.angle());
}

}  // namespace
