#pragma once

// Slow reference implementations used only by the tests. None of them call
// into the library code they are compared against.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "cellrim/cells.hpp"
#include "cellrim/diagram.hpp"
#include "cellrim/parabolic.hpp"
#include "cellrim/permutation.hpp"

namespace oracle {

using cellrim::Composition;
using cellrim::Diagram;
using cellrim::Node;
using cellrim::Permutation;

inline int inversions(const std::vector<int>& v) {
  int c = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) c += v[i] > v[j];
  return c;
}

inline int length(const Permutation& x) { return inversions(x.images()); }

// i.(xy) = (i.x).y
inline Permutation compose(const Permutation& x, const Permutation& y) {
  std::vector<int> out;
  for (int v : x.images()) out.push_back(y.images()[static_cast<std::size_t>(v - 1)]);
  return Permutation(out);
}

inline Permutation inverse(const Permutation& x) {
  std::vector<int> out(x.images().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[static_cast<std::size_t>(x.images()[i] - 1)] = static_cast<int>(i + 1);
  return Permutation(out);
}

inline std::vector<Permutation> symmetric_group(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// x' is a prefix of x iff l(x') + l(x'^-1 x) = l(x).
inline bool is_prefix(const Permutation& xp, const Permutation& x) {
  return oracle::length(xp) + oracle::length(compose(inverse(xp), x)) == oracle::length(x);
}

// Minimal in its coset W_J d: l(s_j d) > l(d) for each j in J.
inline bool minimal_in_coset(const Permutation& d, const std::vector<int>& J) {
  for (int j : J) {
    auto v = d.images();
    std::swap(v[static_cast<std::size_t>(j - 1)], v[static_cast<std::size_t>(j)]);
    if (inversions(v) < oracle::length(d)) return false;
  }
  return true;
}

inline std::vector<int> subsets_j(const Composition& lambda) {
  std::vector<int> J;
  int pos = 0;
  for (int p : lambda.parts()) {
    for (int k = 1; k < p; ++k) J.push_back(pos + k);
    pos += p;
  }
  return J;
}

// w_D from scratch: the k-th node in row-major order carries the column-major
// index of that node.
inline Permutation w_of(const std::vector<Node>& nodes) {
  auto by_col = nodes;
  std::sort(by_col.begin(), by_col.end(), [](Node a, Node b) { return std::pair(a.col, a.row) < std::pair(b.col, b.row); });
  auto by_row = nodes;
  std::sort(by_row.begin(), by_row.end());
  std::vector<int> images;
  for (auto x : by_row) {
    images.push_back(static_cast<int>(std::find(by_col.begin(), by_col.end(), x) - by_col.begin()) + 1);
  }
  return Permutation(images);
}

// D(d, lambda) by trying every way to cut 1..n into column segments.
inline std::optional<std::vector<Node>> min_column_diagram(const Permutation& d, const Composition& lambda) {
  const int n = lambda.size();
  std::vector<int> row_of(static_cast<std::size_t>(n + 1));
  for (int i = 0, p = 0; i < static_cast<int>(lambda.num_parts()); ++i)
    for (int k = 0; k < lambda[static_cast<std::size_t>(i)]; ++k) row_of[static_cast<std::size_t>(++p)] = i + 1;
  const auto dinv = inverse(d);
  std::optional<std::vector<Node>> best;
  int best_cols = n + 1;
  for (unsigned cuts = 0; cuts < (1u << (n - 1)); ++cuts) {
    std::vector<Node> nodes;
    int col = 1;
    for (int m = 1; m <= n; ++m) {
      if (m > 1 && (cuts >> (m - 2) & 1u)) ++col;
      nodes.push_back({row_of[static_cast<std::size_t>(dinv(m))], col});
    }
    std::set<Node> uniq(nodes.begin(), nodes.end());
    if (static_cast<int>(uniq.size()) != n) continue;
    if (w_of(nodes) != d) continue;
    if (col < best_cols) {
      best_cols = col;
      best = nodes;
    }
  }
  return best;
}

// a path visits strictly increasing rows with weakly increasing columns
inline bool is_chain(const std::vector<Node>& xs) {
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (!(xs[i - 1].row < xs[i].row && xs[i - 1].col <= xs[i].col)) return false;
  return true;
}

// L_1, L_2, ... by a minimum chain cover over all subsets.
inline std::vector<int> max_k_path_lengths(const std::vector<Node>& nodes) {
  const int n = static_cast<int>(nodes.size());
  const unsigned full = (1u << n) - 1;
  std::vector<char> chain(full + 1, 0);
  for (unsigned m = 1; m <= full; ++m) {
    std::vector<Node> xs;
    for (int i = 0; i < n; ++i)
      if (m >> i & 1u) xs.push_back(nodes[static_cast<std::size_t>(i)]);
    std::sort(xs.begin(), xs.end());
    chain[m] = is_chain(xs);
  }
  std::vector<int> cover(full + 1, n + 1);
  cover[0] = 0;
  for (unsigned m = 1; m <= full; ++m) {
    const unsigned low = m & (~m + 1);
    for (unsigned sub = m; sub; sub = (sub - 1) & m) {
      if ((sub & low) && chain[sub]) cover[m] = std::min(cover[m], cover[m ^ sub] + 1);
    }
  }
  std::vector<int> L;
  for (int k = 1; k <= cover[full]; ++k) {
    int best = 0;
    for (unsigned m = 0; m <= full; ++m)
      if (cover[m] <= k) best = std::max(best, __builtin_popcount(m));
    L.push_back(best);
  }
  return L;
}

inline std::vector<int> subsequence_type(const std::vector<Node>& nodes) {
  const auto L = max_k_path_lengths(nodes);
  std::vector<int> nu;
  for (std::size_t k = 0; k < L.size(); ++k) nu.push_back(L[k] - (k ? L[k - 1] : 0));
  return nu;
}

// Fillings of D by 1..n that increase along the componentwise order of nodes.
inline long count_standard(const Diagram& D) {
  const auto& nodes = D.nodes();
  std::vector<int> e(nodes.size());
  std::iota(e.begin(), e.end(), 1);
  long count = 0;
  do {
    bool ok = true;
    for (std::size_t i = 0; ok && i < nodes.size(); ++i)
      for (std::size_t j = 0; ok && j < nodes.size(); ++j) {
        const bool below = i != j && nodes[i].row <= nodes[j].row && nodes[i].col <= nodes[j].col;
        if (below && e[i] > e[j]) ok = false;
      }
    count += ok;
  } while (std::next_permutation(e.begin(), e.end()));
  return count;
}

// Recording tableau of row insertion.
inline std::vector<std::vector<int>> recording_tableau(const Permutation& x) {
  std::vector<std::vector<int>> P, Q;
  for (int i = 1; i <= x.degree(); ++i) {
    int v = x(i);
    std::size_t r = 0;
    for (;; ++r) {
      if (r == P.size()) {
        P.push_back({v});
        Q.push_back({i});
        break;
      }
      auto it = std::upper_bound(P[r].begin(), P[r].end(), v);
      if (it == P[r].end()) {
        P[r].push_back(v);
        Q[r].push_back(i);
        break;
      }
      std::swap(*it, v);
    }
  }
  return Q;
}

// Y(lambda) from the whole of S_n: the right cell of w_J by recording
// tableaux, translated by w_J, then its prefix-maximal elements.
inline std::vector<Permutation> rim(const Composition& lambda) {
  const int n = lambda.size();
  std::vector<int> w;
  for (int i = 0, pos = 0; i < static_cast<int>(lambda.num_parts()); ++i) {
    const int p = lambda[static_cast<std::size_t>(i)];
    for (int k = p; k >= 1; --k) w.push_back(pos + k);
    pos += p;
  }
  const Permutation w_J(w);
  const auto target = recording_tableau(w_J);
  std::vector<Permutation> Z;
  for (const auto& y : symmetric_group(n))
    if (recording_tableau(y) == target) Z.push_back(compose(w_J, y));
  std::vector<Permutation> Y;
  for (const auto& a : Z) {
    bool maximal = true;
    for (const auto& b : Z)
      if (a != b && oracle::is_prefix(a, b)) maximal = false;
    if (maximal) Y.push_back(a);
  }
  std::sort(Y.begin(), Y.end());
  return Y;
}

}  // namespace oracle
