#include "cellrim/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "cellrim/parabolic.hpp"

namespace cellrim {

Diagram::Diagram(std::vector<Node> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.empty()) throw std::invalid_argument("diagram must be nonempty");
  std::set<int> rows;
  std::set<int> cols;
  for (auto x : nodes_) {
    rows.insert(x.row);
    cols.insert(x.col);
  }
  std::map<int, int> row_index;
  std::map<int, int> col_index;
  for (int r : rows) row_index.emplace(r, static_cast<int>(row_index.size()) + 1);
  for (int c : cols) col_index.emplace(c, static_cast<int>(col_index.size()) + 1);
  for (auto& x : nodes_) x = {row_index[x.row], col_index[x.col]};
  std::sort(nodes_.begin(), nodes_.end());
  if (std::adjacent_find(nodes_.begin(), nodes_.end()) != nodes_.end()) {
    throw std::invalid_argument("diagram has a repeated node");
  }
  rows_ = static_cast<int>(rows.size());
  cols_ = static_cast<int>(cols.size());
}

bool Diagram::contains(Node x) const { return std::binary_search(nodes_.begin(), nodes_.end(), x); }

int Diagram::index_of(Node x) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), x);
  if (it == nodes_.end() || *it != x) return -1;
  return static_cast<int>(it - nodes_.begin());
}

std::vector<int> Diagram::row(int a) const {
  std::vector<int> out;
  for (auto x : nodes_) {
    if (x.row == a) out.push_back(x.col);
  }
  return out;
}

std::vector<int> Diagram::column(int b) const {
  std::vector<int> out;
  for (auto x : nodes_) {
    if (x.col == b) out.push_back(x.row);
  }
  return out;
}

std::string Diagram::to_string() const {
  std::string s = "{";
  for (std::size_t k = 0; k < nodes_.size(); ++k) {
    if (k) s += ',';
    s += "(" + std::to_string(nodes_[k].row) + "," + std::to_string(nodes_[k].col) + ")";
  }
  return s + "}";
}

Diagram young_diagram(const Composition& nu) {
  std::vector<Node> nodes;
  for (std::size_t i = 0; i < nu.num_parts(); ++i) {
    for (int j = 1; j <= nu[i]; ++j) nodes.push_back({static_cast<int>(i) + 1, j});
  }
  return Diagram(std::move(nodes));
}

Composition row_composition(const Diagram& D) {
  std::vector<int> parts(static_cast<std::size_t>(D.num_rows()), 0);
  for (auto x : D.nodes()) ++parts[static_cast<std::size_t>(x.row - 1)];
  return Composition(std::move(parts));
}

std::vector<int> column_lengths(const Diagram& D) {
  std::vector<int> parts(static_cast<std::size_t>(D.num_cols()), 0);
  for (auto x : D.nodes()) ++parts[static_cast<std::size_t>(x.col - 1)];
  return parts;
}

Composition column_composition(const Diagram& D) { return Composition(column_lengths(D)); }

DiagramTableau::DiagramTableau(Diagram d, std::vector<int> e)
    : diagram(std::move(d)), entries(std::move(e)) {
  const auto n = static_cast<std::size_t>(diagram.size());
  if (entries.size() != n) throw std::invalid_argument("tableau size does not match diagram");
  std::vector<bool> seen(n + 1, false);
  for (int v : entries) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("tableau entries must be a bijection onto 1..n");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

DiagramTableau row_filling(const Diagram& D) {
  std::vector<int> e(static_cast<std::size_t>(D.size()));
  std::iota(e.begin(), e.end(), 1);
  return DiagramTableau(D, std::move(e));
}

DiagramTableau column_filling(const Diagram& D) {
  const auto& nodes = D.nodes();
  std::vector<std::size_t> order(nodes.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (nodes[a].col != nodes[b].col) return nodes[a].col < nodes[b].col;
    return nodes[a].row < nodes[b].row;
  });
  std::vector<int> e(nodes.size());
  for (std::size_t k = 0; k < order.size(); ++k) e[order[k]] = static_cast<int>(k) + 1;
  return DiagramTableau(D, std::move(e));
}

Permutation w_of_diagram(const Diagram& D) { return Permutation(column_filling(D).entries); }

DiagramTableau apply(const DiagramTableau& t, const Permutation& u) {
  if (u.degree() != t.diagram.size()) throw std::invalid_argument("degree mismatch");
  auto e = t.entries;
  for (int& v : e) v = u(v);
  return DiagramTableau(t.diagram, std::move(e));
}

bool is_standard(const DiagramTableau& t) {
  const auto& nodes = t.diagram.nodes();
  for (std::size_t p = 0; p < nodes.size(); ++p) {
    for (std::size_t q = 0; q < nodes.size(); ++q) {
      if (p != q && nodes[p].row <= nodes[q].row && nodes[p].col <= nodes[q].col &&
          t.entries[p] > t.entries[q]) {
        return false;
      }
    }
  }
  return true;
}

namespace {

// below[q] = bitmask of nodes p != q with p <= q componentwise.
std::vector<std::uint64_t> predecessor_masks(const Diagram& D) {
  const auto& nodes = D.nodes();
  if (nodes.size() > 63) throw std::invalid_argument("diagram too large for tableau enumeration");
  std::vector<std::uint64_t> below(nodes.size(), 0);
  for (std::size_t p = 0; p < nodes.size(); ++p) {
    for (std::size_t q = 0; q < nodes.size(); ++q) {
      if (p != q && nodes[p].row <= nodes[q].row && nodes[p].col <= nodes[q].col) {
        below[q] |= std::uint64_t{1} << p;
      }
    }
  }
  return below;
}

void extend_linear(const std::vector<std::uint64_t>& below, std::uint64_t filled,
                   std::vector<int>& entries, int next, const Diagram& D,
                   std::vector<DiagramTableau>& out) {
  const std::size_t n = below.size();
  if (static_cast<std::size_t>(next) > n) {
    out.emplace_back(D, entries);
    return;
  }
  for (std::size_t q = 0; q < n; ++q) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    if ((filled & bit) || (below[q] & ~filled)) continue;
    entries[q] = next;
    extend_linear(below, filled | bit, entries, next + 1, D, out);
  }
}

}  // namespace

std::vector<DiagramTableau> standard_tableaux(const Diagram& D) {
  const auto below = predecessor_masks(D);
  std::vector<int> entries(below.size(), 0);
  std::vector<DiagramTableau> out;
  extend_linear(below, 0, entries, 1, D, out);
  std::sort(out.begin(), out.end(),
            [](const DiagramTableau& a, const DiagramTableau& b) { return a.entries < b.entries; });
  return out;
}

std::uint64_t count_standard_tableaux(const Diagram& D) {
  const auto below = predecessor_masks(D);
  const std::size_t n = below.size();
  if (n > 26) throw std::invalid_argument("diagram too large for tableau counting");
  std::vector<std::uint64_t> ways(std::size_t{1} << n, 0);
  ways[0] = 1;
  for (std::uint64_t mask = 0; mask < ways.size(); ++mask) {
    if (!ways[mask]) continue;
    for (std::size_t q = 0; q < n; ++q) {
      const std::uint64_t bit = std::uint64_t{1} << q;
      if (!(mask & bit) && !(below[q] & ~mask)) ways[mask | bit] += ways[mask];
    }
  }
  return ways.back();
}

PrefixTableauReport prefixes_as_tableaux(const Diagram& D) {
  PrefixTableauReport report;
  report.prefixes = prefixes_of(w_of_diagram(D));
  report.tableaux = standard_tableaux(D);
  const auto t = row_filling(D);
  std::set<std::vector<int>> images;
  bool all_standard = true;
  for (const auto& u : report.prefixes) {
    auto image = apply(t, u);
    all_standard = all_standard && is_standard(image);
    images.insert(image.entries);
  }
  std::set<std::vector<int>> targets;
  for (const auto& s : report.tableaux) targets.insert(s.entries);
  report.bijective = all_standard && images.size() == report.prefixes.size() && images == targets;
  return report;
}

bool is_special(const Diagram& D) {
  const auto lambda = row_composition(D);
  const auto alpha = column_lengths(D);
  std::vector<int> row_order(static_cast<std::size_t>(D.num_rows()));
  std::iota(row_order.begin(), row_order.end(), 1);
  std::stable_sort(row_order.begin(), row_order.end(),
                   [&](int a, int b) { return lambda[static_cast<std::size_t>(a - 1)] >
                                              lambda[static_cast<std::size_t>(b - 1)]; });
  std::vector<int> col_order(static_cast<std::size_t>(D.num_cols()));
  std::iota(col_order.begin(), col_order.end(), 1);
  std::stable_sort(col_order.begin(), col_order.end(),
                   [&](int a, int b) { return alpha[static_cast<std::size_t>(a - 1)] >
                                              alpha[static_cast<std::size_t>(b - 1)]; });
  std::vector<int> row_rank(row_order.size() + 1);
  std::vector<int> col_rank(col_order.size() + 1);
  for (std::size_t k = 0; k < row_order.size(); ++k) row_rank[static_cast<std::size_t>(row_order[k])] = static_cast<int>(k) + 1;
  for (std::size_t k = 0; k < col_order.size(); ++k) col_rank[static_cast<std::size_t>(col_order[k])] = static_cast<int>(k) + 1;
  std::vector<Node> moved;
  for (auto x : D.nodes()) {
    moved.push_back({row_rank[static_cast<std::size_t>(x.row)], col_rank[static_cast<std::size_t>(x.col)]});
  }
  return Diagram(std::move(moved)) == young_diagram(lambda.sorted_descending());
}

namespace {

// Row of the node with column-reading index m, for m = 1..n.
std::vector<int> column_reading_rows(const Permutation& d, const Composition& lambda) {
  if (d.degree() != lambda.size()) throw std::invalid_argument("degree mismatch");
  if (!is_coset_representative(d, j_of_composition(lambda))) {
    throw std::invalid_argument(d.to_string() + " is not in X_J for " + lambda.to_string());
  }
  std::vector<int> row_of_position;
  for (std::size_t i = 0; i < lambda.num_parts(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) row_of_position.push_back(static_cast<int>(i) + 1);
  }
  const auto inv = d.inverse();
  std::vector<int> rows;
  for (int m = 1; m <= d.degree(); ++m) rows.push_back(row_of_position[static_cast<std::size_t>(inv(m) - 1)]);
  return rows;
}

Diagram from_cuts(const std::vector<int>& rows, const std::vector<bool>& cut_after) {
  std::vector<Node> nodes;
  int col = 1;
  for (std::size_t m = 0; m < rows.size(); ++m) {
    nodes.push_back({rows[m], col});
    if (m + 1 < rows.size() && cut_after[m]) ++col;
  }
  return Diagram(std::move(nodes));
}

}  // namespace

Diagram min_column_diagram(const Permutation& d, const Composition& lambda) {
  const auto rows = column_reading_rows(d, lambda);
  std::vector<bool> cut(rows.size(), false);
  for (std::size_t m = 0; m + 1 < rows.size(); ++m) cut[m] = rows[m + 1] <= rows[m];
  return from_cuts(rows, cut);
}

std::vector<Diagram> diagrams_with_word(const Permutation& d, const Composition& lambda) {
  const auto rows = column_reading_rows(d, lambda);
  std::vector<bool> cut(rows.size(), false);
  std::vector<std::size_t> optional;
  for (std::size_t m = 0; m + 1 < rows.size(); ++m) {
    cut[m] = rows[m + 1] <= rows[m];
    if (!cut[m]) optional.push_back(m);
  }
  if (optional.size() > 30) throw std::invalid_argument("too many diagrams to enumerate");
  std::vector<Diagram> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << optional.size()); ++mask) {
    for (std::size_t k = 0; k < optional.size(); ++k) cut[optional[k]] = (mask >> k) & 1u;
    out.push_back(from_cuts(rows, cut));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Diagram> enumerate_diagrams(const Composition& lambda) {
  std::vector<Diagram> out;
  for (const auto& d : parabolic(j_of_composition(lambda)).X_J) {
    for (auto& D : diagrams_with_word(d, lambda)) out.push_back(std::move(D));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cellrim
