#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cellrim/composition.hpp"
#include "cellrim/diagram.hpp"

namespace cellrim {

// Which permutation of (s, t, u) the first three parts of lambda follow.
enum class StuOrder { STU, SUT, TSU, TUS, UST, UTS };

std::string to_string(StuOrder order);
// Accepts "s,t,u", "u,s,t", ... (also without commas).
StuOrder parse_stu_order(const std::string& text);

// lambda = (l1, l2, l3, 1^trailing_ones) with (l1, l2, l3) a permutation of
// (s, t, u), s >= t >= u >= 1.
struct StuShape {
  StuShape(int s, int t, int u, StuOrder order, int trailing_ones = 1);

  int s;
  int t;
  int u;
  StuOrder order;
  int trailing_ones;

  std::array<int, 3> lambda_tilde() const;
  Composition lambda() const;
  int n() const { return s + t + u + trailing_ones; }
  std::string to_string() const;

  // Recognises (l1, l2, l3, 1, ..., 1) with at least one trailing 1. Ties
  // between orders resolve to the first matching enumerator.
  static std::optional<StuShape> from_composition(const Composition& lambda);
};

enum class Family { Young, F, G, H, M, N };
std::string to_string(Family f);
// Young for (s,t,u), F for (s,u,t), G for (t,s,u), H for (t,u,s), M for
// (u,s,t) and N for (u,t,s).
Family family_of(const StuShape& shape);

// Parameters of one member of a family. Unused fields stay zero.
//   F, G: C.   H: v and C (holding C-tilde).
//   M: epsilon, eta, theta, zeta, psi and C.   N: eta, epsilon, theta, phi, zeta.
struct FamilyParams {
  Family variant = Family::Young;
  std::vector<int> C;
  int v = 0;
  int epsilon = 0;
  int eta = 0;
  int theta = 0;
  int zeta = 0;
  int psi = 0;
  int phi = 0;

  std::string to_string() const;
  bool operator==(const FamilyParams&) const = default;
};

// Four-row family member for trailing_ones == 1. Throws when the parameters
// violate the side conditions of the family.
Diagram family_diagram(const FamilyParams& p, const StuShape& shape);

// Every parameter tuple of the family matching the shape, restricted to the
// canonical forms (zeta = 0 if eta > theta for M, epsilon = 0 if phi > theta for N).
std::vector<FamilyParams> family_parameters(const StuShape& shape);
bool params_special(const FamilyParams& p);

struct TableCounts {
  long long special = 0;
  long long nonspecial = 0;
  long long total() const { return special + nonspecial; }
  bool operator==(const TableCounts&) const = default;
};
TableCounts table_counts(const StuShape& shape);
long long binomial(long long n, long long k);

enum class TupleSymbol { One, OneBar, Two, Three, Four };

struct DeterminingTuple {
  std::vector<TupleSymbol> entries;

  std::string to_string() const;
  static DeterminingTuple parse(const std::string& text);
  bool operator==(const DeterminingTuple&) const = default;
};

// Every column reads {1,2,3,4}, {1,2,3}, {2,3}, {2} or {3}, with one column of
// length 4 placed before the u-1 columns of length 3.
bool satisfies_hypothesis_dagger(const Diagram& D, const StuShape& shape);
// Throws unless satisfies_hypothesis_dagger holds.
DeterminingTuple determining_tuple(const Diagram& D, const StuShape& shape);
Diagram tuple_to_diagram(const DeterminingTuple& tuple);

enum class ColumnOp { C1, C2, C3, C4, C5 };
std::string to_string(ColumnOp op);
ColumnOp parse_column_op(const std::string& text);
// j is the 1-based column. C1..C4 swap columns j, j+1 when the tuple reads
// (1,2), (3,2), (2,1bar), (3,1bar) there; C5 splits a 2 at j into (1bar, 1).
Diagram apply_column_op(const Diagram& E, ColumnOp op, int j, const StuShape& shape);

}  // namespace cellrim
