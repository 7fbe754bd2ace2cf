#include <string>

#include "doctest.h"
#include "property_suite.hpp"

using namespace projcx;
using namespace projcx::testing;

TEST_CASE("the randomized law suite passes from seed zero") {
  const PropertyStats st = run_property_suite(120);
  CHECK(st.trials >= 100);
  CHECK(st.checks >= 2000);
  INFO("first failure: ", st.first_failure);
  CHECK(st.failures == 0);
}

TEST_CASE("the suite is deterministic") {
  const PropertyStats a = run_property_suite(30);
  const PropertyStats b = run_property_suite(30);
  CHECK(a.checks == b.checks);
  CHECK(a.failures == b.failures);
  CHECK(a.first_failure == b.first_failure);
}
