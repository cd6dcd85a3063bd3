#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cellrim/composition.hpp"
#include "cellrim/permutation.hpp"

namespace cellrim {

struct Node {
  int row;
  int col;
  auto operator<=>(const Node&) const = default;
};

// Finite node set with no empty rows or columns. Construction re-indexes
// rows and columns to 1..r and 1..c and stores nodes in row-major order.
class Diagram {
 public:
  explicit Diagram(std::vector<Node> nodes);

  const std::vector<Node>& nodes() const { return nodes_; }
  int size() const { return static_cast<int>(nodes_.size()); }
  int num_rows() const { return rows_; }
  int num_cols() const { return cols_; }
  bool contains(Node x) const;
  // Position of x in row-major order, or -1.
  int index_of(Node x) const;
  // Columns used in row a, increasing.
  std::vector<int> row(int a) const;
  // Rows used in column b, increasing.
  std::vector<int> column(int b) const;

  std::string to_string() const;

  auto operator<=>(const Diagram& other) const { return nodes_ <=> other.nodes_; }
  bool operator==(const Diagram& other) const { return nodes_ == other.nodes_; }

 private:
  std::vector<Node> nodes_;
  int rows_ = 0;
  int cols_ = 0;
};

// Left-justified rows of the given lengths.
Diagram young_diagram(const Composition& nu);

Composition row_composition(const Diagram& D);     // lambda_D
Composition column_composition(const Diagram& D);  // mu_D
std::vector<int> column_lengths(const Diagram& D); // alpha_D

// A bijection from the nodes of D (row-major order) to {1, ..., n}.
struct DiagramTableau {
  DiagramTableau(Diagram d, std::vector<int> e);

  Diagram diagram;
  std::vector<int> entries;

  bool operator==(const DiagramTableau&) const = default;
};

DiagramTableau row_filling(const Diagram& D);     // t^D
DiagramTableau column_filling(const Diagram& D);  // t_D
// t^D . w_D = t_D.
Permutation w_of_diagram(const Diagram& D);
// (t.u)(x) = (x t).u
DiagramTableau apply(const DiagramTableau& t, const Permutation& u);
bool is_standard(const DiagramTableau& t);

std::vector<DiagramTableau> standard_tableaux(const Diagram& D);
std::uint64_t count_standard_tableaux(const Diagram& D);

struct PrefixTableauReport {
  std::vector<Permutation> prefixes;
  std::vector<DiagramTableau> tableaux;
  bool bijective = false;
};
PrefixTableauReport prefixes_as_tableaux(const Diagram& D);

// D is a row and column permutation of a Young diagram.
bool is_special(const Diagram& D);

// D(d, lambda): the diagram with row composition lambda and w_D = d having
// the fewest columns. Throws unless d is in X_{J(lambda)}.
Diagram min_column_diagram(const Permutation& d, const Composition& lambda);
// Every diagram with row composition lambda and w_D = d.
std::vector<Diagram> diagrams_with_word(const Permutation& d, const Composition& lambda);
// Every diagram with row composition lambda.
std::vector<Diagram> enumerate_diagrams(const Composition& lambda);

}  // namespace cellrim
