#include <doctest.h>

#include <set>

#include "cellrim/families.hpp"
#include "cellrim/paths.hpp"
#include "fixtures.hpp"

using namespace cellrim;

namespace {

const std::vector<StuOrder> kOrders{StuOrder::STU, StuOrder::SUT, StuOrder::TSU,
                                    StuOrder::TUS, StuOrder::UST, StuOrder::UTS};

// Shapes whose order is the one recognised from their composition.
std::vector<StuShape> canonical_shapes(int max_s) {
  std::vector<StuShape> out;
  for (int s = 1; s <= max_s; ++s)
    for (int t = 1; t <= s; ++t)
      for (int u = 1; u <= t; ++u)
        for (auto o : kOrders) {
          const StuShape shape(s, t, u, o);
          if (StuShape::from_composition(shape.lambda())->order == o) out.push_back(shape);
        }
  return out;
}

std::set<Diagram> diagram_set(const StuShape& shape, const std::vector<FamilyParams>& ps) {
  std::set<Diagram> out;
  for (const auto& p : ps) out.insert(family_diagram(p, shape));
  return out;
}

FamilyParams m_params(int e, int h, int th, int z, int ps, std::vector<int> C) {
  FamilyParams p;
  p.variant = Family::M;
  p.epsilon = e;
  p.eta = h;
  p.theta = th;
  p.zeta = z;
  p.psi = ps;
  p.C = std::move(C);
  return p;
}

FamilyParams n_params(int h, int e, int th, int f, int z) {
  FamilyParams p;
  p.variant = Family::N;
  p.eta = h;
  p.epsilon = e;
  p.theta = th;
  p.phi = f;
  p.zeta = z;
  return p;
}

}  // namespace

TEST_CASE("shapes and orders") {
  const StuShape shape(8, 5, 3, StuOrder::UST);
  CHECK(shape.lambda() == Composition{3, 8, 5, 1});
  CHECK(shape.n() == 17);
  CHECK(family_of(shape) == Family::M);
  CHECK(parse_stu_order("u,s,t") == StuOrder::UST);
  CHECK(parse_stu_order("uts") == StuOrder::UTS);
  CHECK(to_string(StuOrder::TUS) == "(t,u,s)");
  CHECK_THROWS(parse_stu_order("s,s,t"));
  CHECK_THROWS(StuShape(2, 3, 1, StuOrder::STU));

  const auto rec = StuShape::from_composition(Composition{1, 3, 2, 1, 1});
  REQUIRE(rec);
  CHECK(rec->s == 3);
  CHECK(rec->t == 2);
  CHECK(rec->u == 1);
  CHECK(rec->order == StuOrder::UST);
  CHECK(rec->trailing_ones == 2);
  CHECK_FALSE(StuShape::from_composition(Composition{3, 2, 1}));
  CHECK_FALSE(StuShape::from_composition(Composition{2, 2, 2, 2}));

  const std::vector<Family> want{Family::Young, Family::F, Family::G, Family::H, Family::M, Family::N};
  for (std::size_t i = 0; i < kOrders.size(); ++i) CHECK(family_of(StuShape(5, 3, 2, kOrders[i])) == want[i]);
}

TEST_CASE("F, G and H members") {
  FamilyParams f;
  f.variant = Family::F;
  f.C = {2, 3, 4};
  CHECK(family_diagram(f, StuShape(8, 5, 3, StuOrder::SUT)) == fixtures::f_example());

  FamilyParams g;
  g.variant = Family::G;
  g.C = {2, 4, 5};
  CHECK(family_diagram(g, StuShape(8, 5, 3, StuOrder::TSU)) == fixtures::g_example());

  FamilyParams h;
  h.variant = Family::H;
  h.v = 3;
  h.C = {6, 8};
  CHECK(family_diagram(h, StuShape(8, 5, 3, StuOrder::TUS)) == fixtures::h_example());

  f.C = {2, 3};
  CHECK_THROWS(family_diagram(f, StuShape(8, 5, 3, StuOrder::SUT)));
  CHECK_THROWS(family_diagram(g, StuShape(8, 5, 3, StuOrder::SUT)));
  h.v = 6;
  CHECK_THROWS(family_diagram(h, StuShape(8, 5, 3, StuOrder::TUS)));
}

TEST_CASE("M and N members") {
  const auto M = family_diagram(m_params(1, 3, 1, 0, 3, {7, 8}), StuShape(8, 5, 3, StuOrder::UST));
  CHECK(M == fixtures::m_example());
  const auto N = family_diagram(n_params(3, 0, 1, 1, 1), StuShape(8, 5, 3, StuOrder::UTS));
  CHECK(N == fixtures::n_example());
  CHECK_THROWS(family_diagram(m_params(1, 3, 1, 0, 3, {6, 8}), StuShape(8, 5, 3, StuOrder::UST)));
  CHECK_THROWS(family_diagram(m_params(1, 0, 1, 0, 6, {7, 8}), StuShape(8, 5, 3, StuOrder::UST)));
  CHECK_THROWS(family_diagram(n_params(3, 0, 2, 1, 0), StuShape(8, 5, 3, StuOrder::UTS)));
}

TEST_CASE("determining tuples") {
  const StuShape ms(8, 5, 3, StuOrder::UST);
  const StuShape ns(8, 5, 3, StuOrder::UTS);
  const auto tm = determining_tuple(fixtures::m_example(), ms);
  CHECK(tm == DeterminingTuple::parse("2,1,1,1,4,1b,3,3,1"));
  CHECK(tm.to_string() == "(2,1,1,1,4,1̄,3,3,1)");
  const auto tn = determining_tuple(fixtures::n_example(), ns);
  CHECK(tn == DeterminingTuple::parse("1bar,1bar,1̄,1,4,b,2,3,3"));
  CHECK(tuple_to_diagram(tm) == fixtures::m_example());
  CHECK(tuple_to_diagram(tn) == fixtures::n_example());
  CHECK_FALSE(satisfies_hypothesis_dagger(fixtures::f_example(), ms));
  CHECK_THROWS(determining_tuple(fixtures::f_example(), ms));
  CHECK_THROWS(DeterminingTuple::parse("2,5"));

  for (auto o : {StuOrder::UST, StuOrder::UTS}) {
    const StuShape shape(7, 5, 2, o);
    for (const auto& p : family_parameters(shape)) {
      const auto D = family_diagram(p, shape);
      REQUIRE(satisfies_hypothesis_dagger(D, shape));
      CHECK(tuple_to_diagram(determining_tuple(D, shape)) == D);
    }
  }
}

TEST_CASE("column operations") {
  const StuShape shape(4, 4, 2, StuOrder::UST);
  const auto E = tuple_to_diagram(DeterminingTuple::parse("1,2,4,3,1b"));
  REQUIRE(row_composition(E) == shape.lambda());
  CHECK(determining_tuple(apply_column_op(E, ColumnOp::C1, 1, shape), shape) ==
        DeterminingTuple::parse("2,1,4,3,1b"));
  CHECK(determining_tuple(apply_column_op(E, ColumnOp::C4, 4, shape), shape) ==
        DeterminingTuple::parse("1,2,4,1b,3"));
  CHECK(determining_tuple(apply_column_op(E, ColumnOp::C5, 2, shape), shape) ==
        DeterminingTuple::parse("1,1b,1,4,3,1b"));
  CHECK_THROWS(apply_column_op(E, ColumnOp::C2, 1, shape));
  CHECK_THROWS(apply_column_op(E, ColumnOp::C5, 1, shape));
  CHECK(parse_column_op("C3") == ColumnOp::C3);
  CHECK_THROWS(parse_column_op("C6"));
}

TEST_CASE("parameter enumeration matches the count formulas") {
  for (const auto& shape : canonical_shapes(7)) {
    const auto ps = family_parameters(shape);
    const auto counts = table_counts(shape);
    long long special = 0;
    for (const auto& p : ps) special += params_special(p);
    CHECK_MESSAGE(static_cast<long long>(ps.size()) == counts.total(), shape.to_string());
    CHECK_MESSAGE(special == counts.special, shape.to_string());
    const auto ds = diagram_set(shape, ps);
    CHECK_MESSAGE(ds.size() == ps.size(), shape.to_string());
    if (counts.nonspecial == 0)
      for (const auto& D : ds) CHECK(is_special(D));
  }
}

TEST_CASE("special members are exactly theta = 0") {
  for (const auto& shape : canonical_shapes(6)) {
    for (const auto& p : family_parameters(shape)) {
      CHECK_MESSAGE(is_special(family_diagram(p, shape)) == params_special(p), shape.to_string(), p.to_string());
    }
  }
}

TEST_CASE("M parameters by unrestricted search") {
  const StuShape shape(7, 4, 2, StuOrder::UST);
  const int s = 7, t = 4, u = 2;
  std::size_t count = 0;
  for (int e = 0; e <= s; ++e)
    for (int h = 0; h <= s; ++h)
      for (int th = 0; th <= h; ++th)
        for (int z = 0; z <= s; ++z) {
          const int ps = s - e - h - 1 - z;
          if (ps < u - 1 || t != e + th + z + u) continue;
          if (h > th && z != 0) continue;
          count += static_cast<std::size_t>(binomial(ps, u - 1));
        }
  CHECK(family_parameters(shape).size() == count);
}

TEST_CASE("M and N coincide when s = t") {
  for (int s = 2; s <= 7; ++s)
    for (int u = 1; u < s; ++u) {
      const StuShape ms(s, s, u, StuOrder::UST);
      const StuShape ns(s, s, u, StuOrder::UTS);
      CHECK(ms.lambda() == ns.lambda());
      std::vector<FamilyParams> nps;
      for (int th = 0; th <= s - u; ++th)
        for (int f = th; f <= s; ++f)
          for (int e = 0; e <= s - u - th; ++e) {
            if (f > th && e != 0) continue;
            const int z = s - u - e - th;
            const int h = s - e - f - z - u;
            if (h >= 0) nps.push_back(n_params(h, e, th, f, z));
          }
      CHECK(diagram_set(ms, family_parameters(ms)) == diagram_set(ns, nps));
    }
}

TEST_CASE("large shape counts") {
  const StuShape shape(8, 5, 3, StuOrder::UST);
  CHECK(table_counts(shape) == TableCounts{40, 50});
  const auto ps = family_parameters(shape);
  CHECK(ps.size() == 90);
  CHECK(diagram_set(shape, ps).size() == 90);
  CHECK(table_counts(StuShape(3, 2, 1, StuOrder::UTS)) == TableCounts{3, 2});
  CHECK(table_counts(StuShape(3, 2, 1, StuOrder::TUS)) == TableCounts{3, 0});
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(2, 3) == 0);
}
