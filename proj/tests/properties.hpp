#pragma once

#include <string>

namespace plde::testing {

// Property suites shared by the unit tests and the acceptance binary. Each
// runs a fixed number of seeded cases and reports the first counterexample.
struct PropertyResult {
  bool ok = true;
  int cases = 0;
  std::string detail;  // first failure
};

PropertyResult prop_idempotents(int lam);
PropertyResult prop_projection_homomorphism(unsigned seed, int pairs);
PropertyResult prop_eval_sigma_commute(unsigned seed, int elements, long n_max);
PropertyResult prop_decompose_roundtrip(unsigned seed, int elements);
PropertyResult prop_cyclic_shift(unsigned seed, int elements);
PropertyResult prop_component_soundness(unsigned seed, int instances);
PropertyResult prop_dimension_bound(unsigned seed, int instances);

}  // namespace plde::testing
