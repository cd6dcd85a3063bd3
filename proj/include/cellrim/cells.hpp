#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cellrim/composition.hpp"
#include "cellrim/diagram.hpp"
#include "cellrim/families.hpp"
#include "cellrim/permutation.hpp"
#include "cellrim/robinson_schensted.hpp"

namespace cellrim {

inline constexpr int kDefaultMaxN = 9;

class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Z(lambda) = {e in X_J : w_J e ~R w_J}, J = J(lambda), read off the right
// cell of w_J. Throws GuardExceeded when n > max_n.
std::vector<Permutation> z_ideal(const Composition& lambda, int max_n = kDefaultMaxN);
// The same set from admissibility of D(e, lambda) over all of X_J.
std::vector<Permutation> z_ideal_by_admissibility(const Composition& lambda, int max_n = kDefaultMaxN);

// Y(lambda): prefix-maximal elements of Z(lambda).
std::vector<Permutation> rim(const Composition& lambda, int max_n = kDefaultMaxN);

struct RimDiagrams {
  std::vector<Diagram> all;
  std::vector<Diagram> special;
  bool operator==(const RimDiagrams&) const = default;
};

// {D(y, lambda) : y in Y(lambda)} by enumeration.
RimDiagrams rim_diagrams_brute_force(const Composition& lambda, int max_n = kDefaultMaxN);
// Closed form for (l1,l2,l3,1^m) and, by rotation, (1^m,l1,l2,l3); m >= 1.
std::optional<RimDiagrams> rim_diagrams_closed_form(const Composition& lambda);
// Enumeration within the guard, otherwise the closed form. Throws
// GuardExceeded when neither applies.
RimDiagrams rim_diagrams(const Composition& lambda, int max_n = kDefaultMaxN);

RimDiagrams psi_image(const RimDiagrams& E);
RimDiagrams rotated(const RimDiagrams& E);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Report {
  std::vector<Check> checks;
  void add(std::string name, bool passed, std::string detail = {});
  bool passed() const;
};

// Pairwise non-comparability of the closed-form rim, completeness against
// Z(lambda), table counts and agreement with the brute-force rim.
Report verify_rim_family(const Composition& lambda, int max_n = kDefaultMaxN);

struct CalibrationResult {
  long long cases = 0;
  long long p_mismatches = 0;
  long long q_mismatches = 0;
  bool p_passes() const { return p_mismatches == 0; }
  bool q_passes() const { return q_mismatches == 0; }
};

// Compares RS membership in Z(lambda) with admissibility of D(e, lambda)
// for every composition of each n and every e in X_J, under both components.
CalibrationResult calibrate_right_cell_convention(const std::vector<int>& degrees);

// Z(lambda).X^ inside S_{n+1}, X^ the minimal right coset representatives of S_n.
std::vector<Permutation> induced_ideal(const Composition& lambda, int max_n = kDefaultMaxN);
// {w_{D^} : D in E(lambda)}.
std::vector<Permutation> induced_rim_words(const Composition& lambda, int max_n = kDefaultMaxN);

}  // namespace cellrim
