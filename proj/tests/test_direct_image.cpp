#include <random>

#include "doctest.h"
#include "instanton/bundle.hpp"
#include "instanton/census.hpp"
#include "instanton/direct_image.hpp"
#include "instanton/errors.hpp"
#include "instanton/parse.hpp"
#include "oracles.hpp"

using namespace instanton;

namespace {

LaurentZU P(const char* text) { return parse_extension(text); }

InstantonNumbers numbers(int j, const LaurentZU& p) {
  return InstantonNumbers{width(j, p, DirectImageBounds::defaults(j)), height(j, p)};
}

// f(x, y) * s with x = u, y = z u
Section act(const PlanePoly& f, const Section& s) {
  Section out;
  for (const auto& [e, c] : f.terms()) {
    const LaurentZU m = LaurentZU::monomial(c, e.y, e.x + e.y);
    out.a += m * s.a;
    out.b += m * s.b;
  }
  return out;
}

bool is_section(int j, const LaurentZU& p, const Section& s) {
  for (const auto& [e, c] : s.a.terms())
    if (e.z < 0) return false;
  for (const auto& [e, c] : s.b.terms())
    if (e.z < 0 || e.z > e.u + j) return false;
  const LaurentZU top = LaurentZU::monomial(Rat(1), j, 0) * s.a + p * s.b;
  for (const auto& [e, c] : top.terms())
    if (e.z > e.u) return false;
  return true;
}

}  // namespace

TEST_CASE("height examples") {
  CHECK(height(4, P("u^2")) == 5);
  CHECK(height(4, P("z^2*u^5")) == 6);
  CHECK(height(4, LaurentZU()) == 6);
  CHECK(height(1, LaurentZU()) == 0);
  CHECK_THROWS_AS(height(3, P("u + 1")), ValidationError);
}

TEST_CASE("height problem shape") {
  for (int j = 1; j <= 6; ++j) {
    const HeightProblem hp = height_problem(j, LaurentZU());
    CHECK(hp.window.size() == static_cast<std::size_t>(j * (j - 1) / 2));
    for (const auto& w : hp.window) CHECK(w.u <= j - 2);
  }
  // W_0 receives no column
  const HeightProblem hp = height_problem(4, P("u + z*u + u^2 + z^3*u^6"));
  for (std::size_t r = 0; r < hp.window.size(); ++r) {
    if (hp.window[r].u != 0) continue;
    for (std::size_t c = 0; c < hp.sources.size(); ++c) CHECK(is_zero(hp.psi.at(r, c)));
  }
}

TEST_CASE("height is 1 on the whole j = 2 box") {
  for (const auto& b : exhaustive_polynomials(2, 2)) CHECK(height(2, b.p()) == 1);
}

TEST_CASE("height floor j - 1") {
  for (int j = 2; j <= 5; ++j)
    for (const auto& b : sample_polynomials(j, 20, 9, 3)) CHECK(height(j, b.p()) >= j - 1);
}

TEST_CASE("section space dimensions") {
  CHECK(section_space_dim(2, LaurentZU(), 0) == std::vector<std::size_t>{3});
  CHECK(section_space_dim(2, LaurentZU(), 1) == std::vector<std::size_t>{3, 4});
  CHECK(section_space_dim(1, LaurentZU(), 1) == std::vector<std::size_t>{2, 4});
  // free rank-2 growth once past the exceptional degrees
  for (int j = 1; j <= 4; ++j) {
    const auto dims = section_space_dim(j, P(j > 1 ? "u" : "0"), 4 * j);
    for (int m = 2 * j; m <= 4 * j; ++m) CHECK(dims[static_cast<std::size_t>(m)] == static_cast<std::size_t>(2 * (m + 1)));
  }
}

TEST_CASE("split presentation at j = 2") {
  const Presentation pres = module_presentation(2, LaurentZU(), DirectImageBounds::defaults(2));
  CHECK(pres.generator_degrees == std::vector<int>{0, 0, 0, 2});
  CHECK(pres.relation_degrees == std::vector<int>{1, 1});
  CHECK(pres.phi[3][0].is_zero());
  CHECK(pres.phi[3][1].is_zero());
  CHECK(width_of_presentation(pres, DirectImageBounds::defaults(2)) == 3);
}

TEST_CASE("presentations are exact") {
  for (const auto& [j, text] : std::vector<std::pair<int, const char*>>{
           {1, "0"}, {3, "0"}, {4, "u^2"}, {4, "u^3"}, {4, "z^2*u^5"}, {3, "z*u + u^2 - z^(-1)*u"}}) {
    const LaurentZU p = P(text);
    const Presentation pres = module_presentation(j, p, DirectImageBounds::defaults(j));
    CHECK(pres.relation_degrees.size() + 2 == pres.generators.size());
    for (const auto& g : pres.generators) CHECK(is_section(j, p, g));
    for (std::size_t r = 0; r < pres.relation_degrees.size(); ++r) {
      Section sum;
      for (std::size_t g = 0; g < pres.generators.size(); ++g) {
        const Section t = act(pres.phi[g][r], pres.generators[g]);
        sum.a += t.a;
        sum.b += t.b;
      }
      CHECK(sum.a.is_zero());
      CHECK(sum.b.is_zero());
    }
  }
  const Presentation split = module_presentation(5, LaurentZU(), DirectImageBounds::defaults(5));
  CHECK(std::count(split.generator_degrees.begin(), split.generator_degrees.end(), 0) == 6);
  CHECK(split.generator_degrees.back() == 5);
  CHECK(split.relation_degrees.size() == 5);
}

TEST_CASE("width examples") {
  CHECK(width(4, P("u^2"), DirectImageBounds::defaults(4)) == 3);
  CHECK(width(4, P("u^3"), DirectImageBounds::defaults(4)) == 6);
  CHECK(width(4, LaurentZU(), DirectImageBounds::defaults(4)) == 10);
  CHECK(width(4, P("z^2*u^5"), DirectImageBounds::defaults(4)) == 8);
}

TEST_CASE("split closed forms") {
  for (int j = 1; j <= 5; ++j) {
    const InstantonNumbers n = charge_report(j, LaurentZU());
    CHECK(n.width == j * (j + 1) / 2);
    CHECK(n.height == j * (j - 1) / 2);
    CHECK(n.charge() == j * j);
  }
}

TEST_CASE("charge reports") {
  CHECK(charge_report(4, P("u^2")) == InstantonNumbers{3, 5});
  CHECK(charge_report(4, LaurentZU()).charge() == 16);
  CHECK(charge_report(1, LaurentZU()) == InstantonNumbers{1, 0});
}

TEST_CASE("small bounds fail certification instead of answering") {
  const DirectImageBounds tiny = DirectImageBounds::from_max_degree(4, 1);
  CHECK_THROWS_AS(width(4, LaurentZU(), tiny), CertificationError);
  CHECK_THROWS_WITH_AS(module_presentation(4, P("u^2"), tiny),
                       doctest::Contains("presentation bounds too small; rerun with --max-degree"),
                       CertificationError);
}

TEST_CASE("larger bounds give the same answer") {
  for (const auto& b : sample_polynomials(3, 5, 4, 3)) {
    const int w = width(3, b.p(), DirectImageBounds::defaults(3));
    CHECK(width(3, b.p(), DirectImageBounds::from_max_degree(3, 14)) == w);
  }
}

TEST_CASE("width agrees with the reflexive hull oracle") {
  CHECK(oracle::hull_width(5, P("z^3*u^3 - u^4"), 20) == width(5, P("z^3*u^3 - u^4"), DirectImageBounds::defaults(5)));
  for (int j = 1; j <= 4; ++j) {
    for (const auto& b : sample_polynomials(j, 6, 100 + static_cast<unsigned>(j), 2)) {
      CHECK(width(j, b.p(), DirectImageBounds::defaults(j)) == oracle::hull_width(j, b.p(), 3 * j + 2));
    }
  }
  for (const char* text : {"u^2", "u^3", "z^2*u^5", "z^3*u^3", "u^2 + z^3*u^6", "0"}) {
    CHECK(width(4, P(text), DirectImageBounds::defaults(4)) == oracle::hull_width(4, P(text), 14));
  }
}

TEST_CASE("height agrees with the full Cech oracle") {
  for (int j = 1; j <= 4; ++j) {
    CHECK(height(j, LaurentZU()) == oracle::cech_height(j, LaurentZU()));
    for (const auto& b : sample_polynomials(j, 6, 200 + static_cast<unsigned>(j), 2)) {
      CHECK(height(j, b.p()) == oracle::cech_height(j, b.p()));
    }
  }
  for (const char* text : {"u^2", "u^3", "z^2*u^5", "z*u^6 - z^4*u^4"}) {
    CHECK(height(4, P(text)) == oracle::cech_height(4, P(text)));
  }
}

TEST_CASE("raw and canonical classes agree") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> c(-2, 2);
  for (int j = 2; j <= 4; ++j) {
    for (int t = 0; t < 8; ++t) {
      LaurentZU raw = sample_polynomials(j, 1, static_cast<std::uint64_t>(t) + 40, 2).front().p();
      raw.add_term(Rat(c(rng)), j, 1 + t % (2 * j));
      raw.add_term(Rat(c(rng)), -j, 1 + t % 3);
      raw.add_term(Rat(c(rng)), 0, 2 * j - 1);
      const CanonicalBundle b = canonicalize(RawExtensionData{j, raw});
      CHECK(numbers(j, raw) == numbers(j, b.p()));
    }
  }
}
