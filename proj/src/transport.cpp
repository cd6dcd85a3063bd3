#include "cellrim/transport.hpp"

#include <stdexcept>

#include "cellrim/paths.hpp"

namespace cellrim {

Diagram rotate_180(const Diagram& D) {
  std::vector<Node> nodes;
  for (auto x : D.nodes()) nodes.push_back({D.num_rows() + 1 - x.row, D.num_cols() + 1 - x.col});
  return Diagram(std::move(nodes));
}

Diagram psi_append(const Diagram& D) {
  const int r = D.num_rows();
  for (int c = 1; c <= D.num_cols() + 1; ++c) {
    auto nodes = D.nodes();
    nodes.push_back({r + 1, c});
    Diagram candidate(std::move(nodes));
    if (is_admissible(candidate)) return candidate;
  }
  throw std::invalid_argument("no admissible one-node extension of " + D.to_string());
}

Diagram hat_diagram(const Diagram& D) {
  std::vector<Node> nodes{{D.num_rows() + 1, 1}};
  for (auto x : D.nodes()) nodes.push_back({x.row, x.col + 1});
  return Diagram(std::move(nodes));
}

}  // namespace cellrim
