#include <doctest.h>

#include "polaritylab/claims.hpp"

using namespace polaritylab;

TEST_CASE("every claim holds at its default scale") {
  for (std::string_view id : claim_ids()) {
    const ClaimReport report = verify_claim(id);
    INFO(report.id << ": " << report.summary);
    CHECK(report.passed);
    CHECK(report.counterexamples.empty());
    CHECK(report.n_max == default_claim_scale(id));
    CHECK(report.checked > 0);
  }
}

TEST_CASE("claims hold at reduced scales") {
  for (std::string_view id : claim_ids())
    for (int n = 4; n < default_claim_scale(id); ++n) {
      const ClaimReport serial = verify_claim(id, n, Execution::serial);
      INFO(serial.id << " n=" << n << ": " << serial.summary);
      CHECK(serial.passed);
      CHECK(serial.summary == verify_claim(id, n, Execution::parallel).summary);
    }
}

TEST_CASE("claim lookups") {
  CHECK(claim_ids().size() == 11);
  CHECK(default_claim_scale("POLAR_LISTS") == 9);
  CHECK_THROWS_AS(verify_claim("NO_SUCH_CLAIM"), Error);
  CHECK_THROWS_AS(verify_claim("BOUND", 11), Error);
  CHECK_THROWS_AS(verify_claim("BOUND", 0), Error);
  try {
    verify_claim("NO_SUCH_CLAIM");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::unknown_claim);
  }
}
