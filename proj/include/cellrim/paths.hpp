#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cellrim/composition.hpp"
#include "cellrim/diagram.hpp"

namespace cellrim {

// Nodes with strictly increasing rows and weakly increasing columns.
using Path = std::vector<Node>;

// A sequence of mutually disjoint paths. Constituent order matters.
class KPath {
 public:
  explicit KPath(std::vector<Path> paths);

  const std::vector<Path>& paths() const { return paths_; }
  int k() const { return static_cast<int>(paths_.size()); }
  int length() const;
  // Constituent lengths sorted non-increasing.
  Composition type() const;
  // All nodes, row-major.
  std::vector<Node> support() const;
  // Number of constituents of length m.
  int z(int m) const;
  std::string to_string() const;

  bool operator==(const KPath&) const = default;

 private:
  std::vector<Path> paths_;
};

bool is_ordered(const KPath& pi);

// L_k, the largest number of nodes covered by k disjoint paths, for
// k = 1, 2, ... until every node is covered.
std::vector<int> max_k_path_lengths(const Diagram& D);
Composition subsequence_type(const Diagram& D);
bool is_admissible(const Diagram& D);

struct PathSearch {
  int k = 1;
  // Every node must be used.
  bool full_support = true;
  // counts[m] = required number of constituents of length m (index 0 unused).
  std::optional<std::vector<int>> length_counts;
};

// First ordered k-path over the given nodes found by a row-by-row search.
// Constituents are never empty.
std::optional<KPath> find_ordered_kpath(std::span<const Node> nodes, const PathSearch& spec);

// Whether the nodes split into paths (any order) with exactly these lengths.
bool has_kpath_of_type(std::span<const Node> nodes, const Composition& type);

// An ordered k-path with the same support and the same k.
KPath order_equivalent(const KPath& pi);

// Adds each extra node as a singleton constituent, keeping the result ordered.
KPath insert_singletons(const KPath& pi, std::span<const Node> extra);

enum class FormClass { FormA, FormB, Neither };
std::string to_string(FormClass f);

// (z_1, z_2, z_3, z_4)
std::array<int, 4> z_profile(const KPath& pi);
FormClass classify_form(const KPath& pi, int s, int t, int u);

struct FormPath {
  KPath path;
  FormClass form;
};
// Form-A is preferred; form-B is tried only when no form-A path exists.
FormPath find_form_path(const Diagram& D);

// Node of the j-th constituent on row a goes to (a, j).
Diagram straighten(const KPath& pi);
Diagram straighten(const KPath& pi, const Diagram& host);

}  // namespace cellrim
