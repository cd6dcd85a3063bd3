#include <doctest.h>

#include "cellrim/cells.hpp"
#include "cellrim/parabolic.hpp"
#include "cellrim/paths.hpp"
#include "cellrim/transport.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cellrim;

namespace {

std::vector<Permutation> sorted(std::vector<Permutation> xs) {
  std::sort(xs.begin(), xs.end());
  return xs;
}

}  // namespace

TEST_CASE("rim against the whole symmetric group") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& lambda : compositions_of(n))
      CHECK_MESSAGE(sorted(rim(lambda)) == oracle::rim(lambda), lambda.to_string());
}

TEST_CASE("two routes to the ideal agree") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& lambda : compositions_of(n)) {
      const auto Z = z_ideal(lambda);
      CHECK(Z == z_ideal_by_admissibility(lambda));
      CHECK(prefix_closure(Z) == Z);
      CHECK(prefix_closure(rim(lambda)) == Z);
    }
}

TEST_CASE("small rims") {
  CHECK(rim(Composition{5}).size() == 1);
  CHECK(rim(Composition{5})[0].is_identity());
  CHECK(rim(Composition{1, 1, 1}).size() == 1);
  CHECK(rim(Composition{1, 1, 1})[0].is_identity());
  CHECK(rim_diagrams(Composition{3, 2, 1, 1}).all.size() == 1);
  CHECK(rim_diagrams(Composition{1, 3, 2, 1}).all.size() == 5);
  CHECK_THROWS_AS(z_ideal(Composition{5, 5}), GuardExceeded);
  CHECK_THROWS_AS(rim_diagrams(Composition{2, 2, 2, 2, 2}), GuardExceeded);
  CHECK(rim_diagrams(Composition{1, 3, 2, 1, 1, 1, 1}, 7).all.size() == 5);
}

TEST_CASE("closed form equals enumeration") {
  for (int n = 4; n <= 8; ++n)
    for (const auto& lambda : compositions_of(n)) {
      const auto closed = rim_diagrams_closed_form(lambda);
      if (!closed) continue;
      CHECK_MESSAGE(*closed == rim_diagrams_brute_force(lambda), lambda.to_string());
    }
  CHECK_FALSE(rim_diagrams_closed_form(Composition{2, 2, 2}));
}

TEST_CASE("family verification reports") {
  for (auto o : {StuOrder::STU, StuOrder::SUT, StuOrder::TSU, StuOrder::TUS, StuOrder::UST, StuOrder::UTS}) {
    const auto report = verify_rim_family(StuShape(3, 2, 1, o).lambda());
    CHECK(report.checks.size() == 5);
    CHECK(report.passed());
  }
  CHECK_THROWS(verify_rim_family(Composition{2, 2}));
}

TEST_CASE("rotation transport") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& lambda : compositions_of(n)) {
      const auto E = rim_diagrams_brute_force(lambda);
      CHECK(rim_diagrams_brute_force(lambda.reversed()) == rotated(E));
      for (const auto& D : E.all) CHECK(rotate_180(rotate_180(D)) == D);
    }
}

TEST_CASE("psi transport") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& lambda : compositions_of(n)) {
      if (lambda[lambda.num_parts() - 1] != 1) continue;
      const auto E = rim_diagrams_brute_force(lambda);
      CHECK_MESSAGE(rim_diagrams_brute_force(lambda.with_trailing_one()) == psi_image(E), lambda.to_string());
    }
  const auto E = psi_image(rim_diagrams_brute_force(Composition{2, 1, 1}));
  CHECK(E == rim_diagrams_brute_force(Composition{2, 1, 1, 1}));
}

TEST_CASE("psi appends one node at the lowest admissible column") {
  const auto D = fixtures::rows({{1, 2}, {1}});
  const auto P = psi_append(D);
  CHECK(P.size() == 4);
  CHECK(P.num_rows() == 3);
  CHECK(is_admissible(P));
  CHECK(P.row(3) == std::vector<int>{1});
}

TEST_CASE("hat diagrams") {
  const auto D = fixtures::rows({{1, 2}, {1}});
  CHECK(hat_diagram(D) == fixtures::rows({{2, 3}, {2}, {1}}));
  for (int n = 1; n <= 5; ++n)
    for (const auto& lambda : compositions_of(n)) {
      std::vector<int> inner;
      for (int i = 1; i < n; ++i) inner.push_back(i);
      const auto d_hat = parabolic(GeneratorSet(n + 1, inner)).d_J;
      std::vector<int> down;
      for (int i = n; i >= 1; --i) down.push_back(i);
      CHECK(d_hat == Permutation::from_word(n + 1, down));
      for (const auto& D2 : rim_diagrams_brute_force(lambda).all) {
        CHECK(w_of_diagram(hat_diagram(D2)) == w_of_diagram(D2).extended_to(n + 1) * d_hat);
      }
    }
}

TEST_CASE("induced rims") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& lambda : compositions_of(n)) {
      const auto words = induced_rim_words(lambda);
      const auto ideal = induced_ideal(lambda);
      CHECK(prefix_closure(words) == ideal);
      CHECK(pairwise_prefix_incomparable(words));
    }
}

TEST_CASE("special rim members") {
  const auto E = rim_diagrams_brute_force(Composition{1, 3, 2, 1});
  CHECK(E.special.size() == 3);
  for (const auto& D : E.special) CHECK(is_special(D));
}
