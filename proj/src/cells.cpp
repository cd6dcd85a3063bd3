#include "cellrim/cells.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "cellrim/parabolic.hpp"
#include "cellrim/paths.hpp"
#include "cellrim/transport.hpp"

namespace cellrim {

namespace {

void guard(const Composition& lambda, int max_n) {
  if (lambda.size() > max_n) {
    throw GuardExceeded("n = " + std::to_string(lambda.size()) + " exceeds the enumeration limit " +
                        std::to_string(max_n));
  }
}

void normalize(std::vector<Diagram>& ds) {
  std::sort(ds.begin(), ds.end());
  ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
}

RimDiagrams with_special(std::vector<Diagram> all) {
  normalize(all);
  RimDiagrams out;
  for (const auto& D : all) {
    if (is_special(D)) out.special.push_back(D);
  }
  out.all = std::move(all);
  return out;
}

std::string count_detail(std::size_t got, long long want) {
  return "got " + std::to_string(got) + ", expected " + std::to_string(want);
}

}  // namespace

std::vector<Permutation> z_ideal(const Composition& lambda, int max_n) {
  guard(lambda, max_n);
  const auto J = j_of_composition(lambda);
  const auto w_J = longest_in(J);
  std::vector<Permutation> out;
  for (const auto& y : right_cell_of(w_J)) {
    auto e = w_J * y;
    if (!is_coset_representative(e, J)) {
      throw std::logic_error("right cell of w_J leaves w_J X_J at " + y.to_string());
    }
    out.push_back(std::move(e));
  }
  sort_canonical(out);
  return out;
}

std::vector<Permutation> z_ideal_by_admissibility(const Composition& lambda, int max_n) {
  guard(lambda, max_n);
  std::vector<Permutation> out;
  for (const auto& e : parabolic(j_of_composition(lambda)).X_J) {
    if (is_admissible(min_column_diagram(e, lambda))) out.push_back(e);
  }
  sort_canonical(out);
  return out;
}

std::vector<Permutation> rim(const Composition& lambda, int max_n) {
  const auto Z = z_ideal(lambda, max_n);
  return prefix_maximal(Z);
}

RimDiagrams rim_diagrams_brute_force(const Composition& lambda, int max_n) {
  std::vector<Diagram> all;
  for (const auto& y : rim(lambda, max_n)) all.push_back(min_column_diagram(y, lambda));
  return with_special(std::move(all));
}

RimDiagrams psi_image(const RimDiagrams& E) {
  std::vector<Diagram> all;
  for (const auto& D : E.all) all.push_back(psi_append(D));
  return with_special(std::move(all));
}

RimDiagrams rotated(const RimDiagrams& E) {
  std::vector<Diagram> all;
  for (const auto& D : E.all) all.push_back(rotate_180(D));
  return with_special(std::move(all));
}

std::optional<RimDiagrams> rim_diagrams_closed_form(const Composition& lambda) {
  if (auto shape = StuShape::from_composition(lambda)) {
    const StuShape base(shape->s, shape->t, shape->u, shape->order, 1);
    std::vector<Diagram> all;
    for (const auto& p : family_parameters(base)) all.push_back(family_diagram(p, base));
    auto E = with_special(std::move(all));
    for (int k = 1; k < shape->trailing_ones; ++k) E = psi_image(E);
    return E;
  }
  if (StuShape::from_composition(lambda.reversed())) {
    if (auto E = rim_diagrams_closed_form(lambda.reversed())) return rotated(*E);
  }
  return std::nullopt;
}

RimDiagrams rim_diagrams(const Composition& lambda, int max_n) {
  if (lambda.size() <= max_n) return rim_diagrams_brute_force(lambda, max_n);
  if (auto E = rim_diagrams_closed_form(lambda)) return *E;
  throw GuardExceeded("n = " + std::to_string(lambda.size()) + " exceeds the enumeration limit " +
                      std::to_string(max_n) + " and " + lambda.to_string() + " has no closed form");
}

void Report::add(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok, std::move(detail)});
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

Report verify_rim_family(const Composition& lambda, int max_n) {
  Report report;
  auto closed = rim_diagrams_closed_form(lambda);
  if (!closed) throw std::invalid_argument(lambda.to_string() + " has no closed-form rim");

  std::vector<Permutation> words;
  for (const auto& D : closed->all) words.push_back(w_of_diagram(D));
  report.add("antichain", pairwise_prefix_incomparable(words),
             std::to_string(words.size()) + " rim words");

  auto shape = StuShape::from_composition(lambda);
  if (!shape) shape = StuShape::from_composition(lambda.reversed());
  const auto counts = table_counts(*shape);
  const auto special = closed->special.size();
  const auto nonspecial = closed->all.size() - special;
  report.add("special count", static_cast<long long>(special) == counts.special,
             count_detail(special, counts.special));
  report.add("nonspecial count", static_cast<long long>(nonspecial) == counts.nonspecial,
             count_detail(nonspecial, counts.nonspecial));

  if (lambda.size() <= max_n) {
    const auto Z = z_ideal(lambda, max_n);
    std::vector<InversionSet> tops;
    for (const auto& w : words) tops.push_back(inversion_set(w));
    std::size_t uncovered = 0;
    for (const auto& e : Z) {
      const auto ne = inversion_set(e);
      if (std::none_of(tops.begin(), tops.end(), [&](const InversionSet& t) { return ne.subset_of(t); })) {
        ++uncovered;
      }
    }
    report.add("completeness", uncovered == 0,
               std::to_string(Z.size()) + " ideal elements, " + std::to_string(uncovered) + " uncovered");
    const auto brute = rim_diagrams_brute_force(lambda, max_n);
    report.add("matches enumeration", brute == *closed,
               "enumeration " + std::to_string(brute.all.size()) + ", closed form " +
                   std::to_string(closed->all.size()));
  }
  return report;
}

CalibrationResult calibrate_right_cell_convention(const std::vector<int>& degrees) {
  CalibrationResult result;
  for (int n : degrees) {
    for (const auto& lambda : compositions_of(n)) {
      const auto data = parabolic(j_of_composition(lambda));
      const auto pair_w = rs_pair(data.w_J);
      for (const auto& e : data.X_J) {
        const bool admissible = is_admissible(min_column_diagram(e, lambda));
        const auto pair_x = rs_pair(data.w_J * e);
        ++result.cases;
        if ((pair_x.P == pair_w.P) != admissible) ++result.p_mismatches;
        if ((pair_x.Q == pair_w.Q) != admissible) ++result.q_mismatches;
      }
    }
  }
  return result;
}

std::vector<Permutation> induced_ideal(const Composition& lambda, int max_n) {
  const int n = lambda.size();
  const auto Z = z_ideal(lambda, max_n);
  std::vector<int> inner;
  for (int i = 1; i < n; ++i) inner.push_back(i);
  const auto X_hat = parabolic(GeneratorSet(n + 1, inner)).X_J;
  std::unordered_set<Permutation, PermutationHash> seen;
  for (const auto& z : Z) {
    const auto lifted = z.extended_to(n + 1);
    for (const auto& x : X_hat) seen.insert(lifted * x);
  }
  std::vector<Permutation> out(seen.begin(), seen.end());
  sort_canonical(out);
  return out;
}

std::vector<Permutation> induced_rim_words(const Composition& lambda, int max_n) {
  std::vector<Permutation> out;
  for (const auto& D : rim_diagrams_brute_force(lambda, max_n).all) out.push_back(w_of_diagram(hat_diagram(D)));
  sort_canonical(out);
  return out;
}

}  // namespace cellrim
