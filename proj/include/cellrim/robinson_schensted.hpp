#pragma once

#include <compare>
#include <string>
#include <vector>

#include "cellrim/composition.hpp"
#include "cellrim/permutation.hpp"

namespace cellrim {

// Standard Young tableau stored as rows; rows()[0] is the top row.
class Tableau {
 public:
  Tableau() = default;
  explicit Tableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Composition shape() const;
  int size() const;
  bool is_standard() const;
  std::string to_string() const;

  auto operator<=>(const Tableau&) const = default;

 private:
  std::vector<std::vector<int>> rows_;
};

struct RsPair {
  Tableau P;  // insertion tableau
  Tableau Q;  // recording tableau
};

// Row insertion of the one-line word images()[0], images()[1], ...
RsPair rs_pair(const Permutation& x);
// Inverse of rs_pair on same-shape standard pairs.
Permutation rs_inverse(const Tableau& P, const Tableau& Q);

// All standard Young tableaux of a partition shape, in lexicographic order of rows.
std::vector<Tableau> standard_young_tableaux(const Composition& shape);

enum class TableauComponent { P, Q };

bool same_component(const Permutation& x, const Permutation& y, TableauComponent c);

// The component that characterises right cells for the right action on
// one-line notation. Fixed by the calibration battery in cells.hpp.
TableauComponent right_cell_component();

bool right_equivalent(const Permutation& x, const Permutation& y);
std::vector<Permutation> right_cell_of(const Permutation& w);

}  // namespace cellrim
