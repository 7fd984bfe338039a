#include <doctest.h>

#include "qe/json_io.hpp"
#include "qe/parse.hpp"
#include "support.hpp"

using namespace qe;

TEST_CASE("tau spec JSON round trip") {
  const char* specs[] = {
      R"({"kind":"constant","value":7})",
      R"({"kind":"constant","value":"-123456789012345678901234567890"})",
      R"({"kind":"zero"})",
      R"({"kind":"stream","seed":42})",
      R"({"kind":"log_generic","seed":7})",
      R"({"kind":"hensel","poly":[-2,0,1],"fallback":{"kind":"constant","value":1}})",
      R"({"kind":"piecewise","overrides":{"2":{"kind":"zero"},"5":{"kind":"stream","seed":9}},"default":{"kind":"log_generic","seed":11}})",
  };
  for (const char* text : specs) {
    CAPTURE(text);
    const json j = json::parse(text);
    const TauSpec tau = tau_from_json(j);
    CHECK(to_json(tau) == j);
    const TauSpec again = tau_from_json(to_json(tau));
    for (std::uint64_t p : primes_up_to(30)) CHECK(again.query(p, 4) == tau.query(p, 4));
  }
}

TEST_CASE("tau spec JSON errors") {
  const char* bad[] = {
      R"([1,2])",
      R"({"kind":"nope"})",
      R"({"kind":"constant"})",
      R"({"kind":"stream","seed":-1})",
      R"({"kind":"hensel","poly":[3],"fallback":{"kind":"zero"}})",
      R"({"kind":"piecewise","overrides":{"4":{"kind":"zero"}},"default":{"kind":"zero"}})",
      R"({"kind":"piecewise","overrides":{"two":{"kind":"zero"}},"default":{"kind":"zero"}})",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(tau_from_json(json::parse(text)), ParseError);
  }
  CHECK_THROWS_AS(to_json(TauSpec::zero_on([](const mpz_class&) { return true; }, TauSpec::zero())),
                  PreconditionError);
}

TEST_CASE("element JSON round trip") {
  std::mt19937_64 rng(31);
  const RingContext ctx(TauSpec::stream(42));
  for (int i = 0; i < 100; ++i) {
    const RingElement e = qe::testing::random_member(ctx, rng, 4, 1000, 60) * RingElement(mpz_class("98765432109876543210"));
    CHECK(element_from_json(to_json(e)) == e);
  }
  CHECK(to_json(parse_element("x/2")) == json::parse(R"({"num":[0,1],"den":2})"));
  CHECK(element_from_json(json::parse("\"3/2*x^2 - x + 5\"")) == parse_element("(3*x^2 - 2*x + 10)/2"));
  CHECK(to_json(mpz_class("18446744073709551616")) == json("18446744073709551616"));
  CHECK(to_json(mpz_class(-5)) == json(-5));
}
