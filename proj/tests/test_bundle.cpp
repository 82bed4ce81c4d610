#include <random>

#include "doctest.h"
#include "instanton/bundle.hpp"
#include "instanton/census.hpp"
#include "instanton/errors.hpp"
#include "instanton/parse.hpp"

using namespace instanton;

namespace {

LaurentZU P(const char* text) { return parse_extension(text); }
PlanePoly C(const char* text) { return parse_curve(text); }

CanonicalBundle canon(int j, const char* text) { return canonicalize(RawExtensionData{j, P(text)}); }

LaurentZU random_raw(std::mt19937_64& rng, int j) {
  std::uniform_int_distribution<int> u(1, 2 * j + 1), z(-j - 2, j + 2), c(-3, 3), n(0, 10);
  LaurentZU p;
  for (int k = n(rng); k > 0; --k) p.add_term(Rat(c(rng)), z(rng), u(rng));
  return p;
}

}  // namespace

TEST_CASE("window shape") {
  CHECK(window_size(1) == 0);
  CHECK(window_size(2) == 3);
  CHECK(window_size(4) == 21);
  CHECK(canonical_window(2) == std::vector<ZUExponent>{{1, 0}, {1, 1}, {2, 1}});
  for (int j = 1; j <= 6; ++j) CHECK(canonical_window(j).size() == window_size(j));
}

TEST_CASE("canonicalize examples") {
  CHECK(canon(4, "z*u^6 - z^4*u^4").p().is_zero());
  CHECK(canon(4, "u^8 - z^2*u^7 - z^2*u^5 + z^4*u^4").p() == P("-z^2*u^5"));
  CHECK(canon(3, "0").p().is_zero());
  CHECK(canon(2, "z*u^2 + z^2*u^2").p() == P("z*u^2"));
  CHECK_THROWS_WITH_AS(canon(3, "u + 2"), "extension class has u-degree-0 term", ValidationError);
  CHECK_THROWS_AS(CanonicalBundle(2, P("u^3")), ValidationError);
  CHECK_THROWS_AS(CanonicalBundle(0, LaurentZU()), ValidationError);
}

TEST_CASE("canonicalize is idempotent and lands in the window") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const int j = 1 + t % 5;
    const CanonicalBundle once = canonicalize(RawExtensionData{j, random_raw(rng, j)});
    const CanonicalBundle twice = canonicalize(RawExtensionData{j, once.p()});
    CHECK(once == twice);
    for (const auto& [e, c] : once.p().terms()) CHECK(in_canonical_window(j, e.z, e.u));
  }
}

TEST_CASE("curve to bundle") {
  CHECK(from_curve(C("x^2 - y^7"), 4).p() == P("u^2"));
  CHECK(from_curve(C("x^3 - y^4"), 4).p() == P("u^3"));
  CHECK(from_curve(C("x^5*y - y^4"), 4).is_split());
  CHECK(from_curve(C("x^8 - x^5*y^2 - x^3*y^2 + y^4"), 4).p() == P("-z^2*u^5"));
  CHECK(blow_up_substitution(C("x^2*y^3")) == P("z^3*u^5"));
  CHECK_THROWS_WITH_AS(from_curve(C("x + 1"), 2), "curve does not pass through origin", ValidationError);
}

TEST_CASE("embedding examples") {
  CHECK(embed_next(CanonicalBundle(2, P("z*u^2"))) == CanonicalBundle(3, P("z^2*u^4")));
  CHECK(embed_next(CanonicalBundle(5, LaurentZU())) == CanonicalBundle(6, LaurentZU()));
  CHECK(embed_next(CanonicalBundle(3, P("u^2 + z^2*u^4"))) == CanonicalBundle(4, P("z*u^4 + z^3*u^6")));
}

TEST_CASE("embedding closes the window and splits on the second neighborhood") {
  for (int j = 1; j <= 4; ++j) {
    for (const auto& b : sample_polynomials(j, 100 / 4 + 1, 17, 3)) {
      const CanonicalBundle image = embed_next(b);
      CHECK(canonicalize(RawExtensionData{image.j(), image.p()}) == image);
      CHECK(splits_on_neighborhood(image, 2));
    }
  }
}

TEST_CASE("formal neighborhoods") {
  CHECK(splits_on_neighborhood(CanonicalBundle(4, P("u^2")), 1));
  CHECK_FALSE(splits_on_neighborhood(CanonicalBundle(4, P("u^2")), 2));
  CHECK(splits_on_neighborhood(CanonicalBundle(3, LaurentZU()), 7));
  CHECK(splits_on_neighborhood(CanonicalBundle(2, P("z*u^2")), 1));
  CHECK_FALSE(splits_on_neighborhood(CanonicalBundle(2, P("z*u^2")), 2));
}
