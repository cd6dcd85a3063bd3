#include <doctest.h>

#include <set>

#include "cellrim/cells.hpp"
#include "cellrim/robinson_schensted.hpp"
#include "oracles.hpp"

using namespace cellrim;

TEST_CASE("row insertion example") {
  const auto pq = rs_pair(Permutation{3, 1, 2});
  CHECK(pq.P == Tableau({{1, 2}, {3}}));
  CHECK(pq.Q == Tableau({{1, 3}, {2}}));
  CHECK(pq.P.shape() == Composition{2, 1});
}

TEST_CASE("RS is a bijection onto pairs of equal shape") {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::pair<Tableau, Tableau>> seen;
    for (const auto& x : all_permutations(n)) {
      const auto pq = rs_pair(x);
      CHECK(pq.P.is_standard());
      CHECK(pq.Q.is_standard());
      CHECK(pq.P.shape() == pq.Q.shape());
      CHECK(pq.Q.rows() == oracle::recording_tableau(x));
      CHECK(rs_pair(x.inverse()).P == pq.Q);
      CHECK(rs_inverse(pq.P, pq.Q) == x);
      seen.insert({pq.P, pq.Q});
    }
    CHECK(seen.size() == all_permutations(n).size());
  }
}

TEST_CASE("standard Young tableaux counts") {
  for (int n = 1; n <= 6; ++n) {
    long squares = 0;
    for (const auto& c : compositions_of(n)) {
      if (!c.is_partition()) continue;
      const auto f = static_cast<long>(standard_young_tableaux(c).size());
      CHECK(f == oracle::count_standard(young_diagram(c)));
      squares += f * f;
    }
    long fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    CHECK(squares == fact);
  }
  CHECK_THROWS(standard_young_tableaux(Composition{1, 2}));
}

TEST_CASE("right cells") {
  const Permutation w{2, 1, 4, 3};
  const auto cell = right_cell_of(w);
  std::vector<Permutation> want;
  for (const auto& y : all_permutations(4))
    if (oracle::recording_tableau(y) == oracle::recording_tableau(w)) want.push_back(y);
  CHECK(cell.size() == want.size());
  for (const auto& y : cell) {
    CHECK(right_equivalent(y, w));
    CHECK(std::find(want.begin(), want.end(), y) != want.end());
  }
  CHECK(same_component(w, w, TableauComponent::P));
}

TEST_CASE("right cell convention is calibrated against admissibility") {
  const auto c = calibrate_right_cell_convention({4, 5});
  CHECK(c.cases > 0);
  CHECK(c.q_passes());
  CHECK_FALSE(c.p_passes());
  CHECK(right_cell_component() == TableauComponent::Q);
}
