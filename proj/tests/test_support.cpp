#include <doctest.h>

#include "helpers.hpp"
#include "toric/error.hpp"
#include "toric/support_analysis.hpp"

using namespace toric;
using namespace testing_util;

namespace {

Support S(std::size_t n, std::vector<std::vector<std::uint32_t>> pts) {
  std::vector<ExpVec> v;
  for (auto& p : pts) v.emplace_back(std::move(p));
  return Support(n, std::move(v));
}

SupportFamily five_var_family() {
  return SupportFamily(5, {S(5, {{0, 0, 0, 0, 0}, {1, 1, 1, 0, 0}, {2, 0, 0, 4, 2}, {0, 0, 0, 8, 4}}),
                           S(5, {{1, 0, 1, 1, 2}, {0, 1, 2, 5, 4}, {1, 3, 0, 5, 4}})});
}

std::vector<std::size_t> Is(const GammaComponent& c) { return c.I; }

}  // namespace

TEST_SUITE("support-analysis") {

TEST_CASE("transcendence basis of the five-variable family") {
  const auto tb = trans_basis(five_var_family());
  CHECK(tb.indices == std::vector<std::size_t>{0, 1, 3});
  // X3 is examined and rejected before X4 is accepted.
  REQUIRE(tb.trace.size() >= 4);
  CHECK(tb.trace[2].k == 2);
  CHECK_FALSE(tb.trace[2].accepted);
  CHECK(tb.trace[3].k == 3);
  CHECK(tb.trace[3].accepted);
}

TEST_CASE("segment families") {
  const SupportFamily a = five_var_family();
  auto with_segments = [&](std::vector<std::size_t> segs) {
    std::vector<Support> m = a.members();
    for (auto i : segs) m.push_back(Support::segment(5, i));
    return SupportFamily(5, m);
  };
  CHECK(mv_positive(with_segments({0, 1, 3})));
  CHECK_FALSE(mv_positive(with_segments({0, 1, 2})));
  // Eliminating the segments preserves the mixed volume.
  CHECK(mixed_volume(with_segments({0, 1, 3})) == mixed_volume(segment_projected_family(a, {0, 1, 3}, 0)));
}

TEST_CASE("square family has an empty basis") {
  const SupportFamily a(2, {S(2, {{0, 0}, {1, 0}, {1, 1}}), S(2, {{0, 0}, {1, 1}, {2, 0}})});
  CHECK(trans_basis(a).indices.empty());
}

TEST_CASE("single diagonal equation") {
  const SupportFamily a(2, {S(2, {{0, 0}, {1, 1}})});
  CHECK(trans_basis(a).indices == std::vector<std::size_t>{0});
}

TEST_CASE("degenerate family is rejected") {
  // Two equations supported on the same line cannot cut a curve twice.
  const SupportFamily a(3, {S(3, {{0, 0, 0}, {1, 0, 0}}), S(3, {{0, 0, 0}, {2, 0, 0}})});
  CHECK_FALSE(standing_hypothesis(a));
  CHECK_THROWS_AS(trans_basis(a), MathError);
}

TEST_CASE("gamma decomposition") {
  {
    const auto g = gamma_decomposition(SupportFamily(1, {S(1, {{1}, {2}})}));
    REQUIRE(g.size() == 2);
    CHECK(Is(g[0]).empty());
    CHECK(Is(g[1]) == std::vector<std::size_t>{0});
    CHECK(g[1].J.empty());
  }
  {
    const auto g = gamma_decomposition(SupportFamily(2, {S(2, {{1, 0}, {0, 1}})}));
    REQUIRE(g.size() == 1);
    CHECK(Is(g[0]).empty());
  }
  {
    const auto g = gamma_decomposition(five_var_family());
    REQUIRE_FALSE(g.empty());
    CHECK(Is(g[0]).empty());
    CHECK(g[0].J == std::vector<std::size_t>{0, 1});
  }
}

TEST_CASE("project supports") {
  const SupportFamily a = five_var_family();
  const SupportFamily p = project_supports(a, {0, 1, 2, 4});
  CHECK(p[0] == S(4, {{0, 0, 0, 0}, {1, 1, 1, 0}, {2, 0, 0, 2}, {0, 0, 0, 4}}));
  CHECK(project_supports(a, {0, 1, 2, 3, 4})[1] == a[1]);
  CHECK(Support::simplex(3).project({0}) == S(1, {{0}, {1}}));
}

}  // TEST_SUITE
