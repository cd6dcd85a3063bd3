#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "cellrim/diagram.hpp"
#include "cellrim/paths.hpp"

namespace fixtures {

using cellrim::Diagram;
using cellrim::KPath;
using cellrim::Node;
using cellrim::Path;

// One entry per row: the columns it occupies.
inline Diagram rows(std::initializer_list<std::vector<int>> cols) {
  std::vector<Node> nodes;
  int a = 0;
  for (const auto& r : cols) {
    ++a;
    for (int b : r) nodes.push_back({a, b});
  }
  return Diagram(nodes);
}

inline KPath kpath(std::initializer_list<std::initializer_list<std::pair<int, int>>> ps) {
  std::vector<Path> out;
  for (const auto& p : ps) {
    Path path;
    for (auto [a, b] : p) path.push_back({a, b});
    out.push_back(path);
  }
  return KPath(out);
}

// lambda = (4,6,3,1), s = 6, t = 4, u = 3
inline Diagram form_diagram() { return rows({{2, 3, 6, 7}, {1, 3, 4, 6, 7, 8}, {5, 6, 8}, {6}}); }

inline KPath form_a_path() {
  return kpath({{{2, 1}},
                {{1, 2}, {2, 3}, {3, 5}, {4, 6}},
                {{1, 3}, {2, 4}, {3, 6}},
                {{2, 6}},
                {{1, 6}, {2, 7}, {3, 8}},
                {{1, 7}, {2, 8}}});
}

inline KPath form_b_path() {
  return kpath({{{2, 1}},
                {{1, 2}, {2, 3}, {4, 6}},
                {{1, 3}, {2, 4}, {3, 5}},
                {{1, 6}, {2, 6}, {3, 6}},
                {{1, 7}, {2, 7}, {3, 8}},
                {{2, 8}}});
}

inline Diagram form_a_straightened() {
  return rows({{2, 3, 5, 6}, {1, 2, 3, 4, 5, 6}, {2, 3, 5}, {2}});
}

// (s,t,u) = (8,5,3)
inline Diagram f_example() { return rows({{1, 2, 3, 4, 5, 6, 7, 8}, {2, 3, 4}, {1, 2, 3, 4, 5}, {2}}); }
inline Diagram g_example() { return rows({{2, 4, 5, 7, 8}, {1, 2, 3, 4, 5, 6, 7, 8}, {2, 4, 5}, {2}}); }
inline Diagram h_example() { return rows({{3, 5, 6, 7, 8}, {3, 6, 8}, {1, 2, 3, 4, 5, 6, 7, 8}, {3}}); }
inline Diagram m_example() { return rows({{5, 7, 8}, {1, 2, 3, 4, 5, 7, 8, 9}, {1, 5, 6, 7, 8}, {5}}); }
inline Diagram n_example() { return rows({{5, 8, 9}, {4, 5, 7, 8, 9}, {1, 2, 3, 5, 6, 7, 8, 9}, {5}}); }

// Type 4 3 3 2 2 1 1 1 on the M diagram; not ordered.
inline KPath m_path() {
  return kpath({{{2, 1}, {3, 1}},
                {{2, 2}, {3, 6}},
                {{2, 3}},
                {{2, 4}},
                {{1, 5}, {2, 5}, {3, 5}, {4, 5}},
                {{1, 7}, {2, 7}, {3, 7}},
                {{1, 8}, {2, 8}, {3, 8}},
                {{2, 9}}});
}

// Type 3 3 3 3 2 1 1 1, ordered.
inline KPath m_path_prime() {
  return kpath({{{2, 1}, {3, 1}},
                {{2, 2}, {3, 5}, {4, 5}},
                {{2, 3}},
                {{2, 4}},
                {{1, 5}, {2, 5}, {3, 6}},
                {{1, 7}, {2, 7}, {3, 7}},
                {{1, 8}, {2, 8}, {3, 8}},
                {{2, 9}}});
}

inline KPath n_path() {
  return kpath({{{3, 1}},
                {{3, 2}},
                {{3, 3}},
                {{2, 4}, {3, 6}},
                {{1, 5}, {2, 5}, {3, 5}, {4, 5}},
                {{2, 7}, {3, 7}},
                {{1, 8}, {2, 8}, {3, 8}},
                {{1, 9}, {2, 9}, {3, 9}}});
}

inline KPath n_path_prime() {
  return kpath({{{3, 1}},
                {{3, 2}},
                {{3, 3}},
                {{2, 4}, {3, 5}, {4, 5}},
                {{1, 5}, {2, 5}, {3, 6}},
                {{2, 7}, {3, 7}},
                {{1, 8}, {2, 8}, {3, 8}},
                {{1, 9}, {2, 9}, {3, 9}}});
}

// Admissible with lambda = (2,1,1,2) but no path of the conjugate type.
inline Diagram no_conjugate_path() { return rows({{1, 2}, {1}, {2}, {1, 2}}); }

}  // namespace fixtures
