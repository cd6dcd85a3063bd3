#include "cellrim/parabolic.hpp"

#include <algorithm>
#include <stdexcept>

namespace cellrim {

GeneratorSet::GeneratorSet(int n, std::vector<int> indices) : n_(n), indices_(std::move(indices)) {
  if (n < 1) throw std::invalid_argument("degree must be positive");
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
  for (int i : indices_) {
    if (i < 1 || i >= n) throw std::invalid_argument("generator index out of range");
  }
}

GeneratorSet GeneratorSet::all(int n) {
  std::vector<int> v;
  for (int i = 1; i < n; ++i) v.push_back(i);
  return GeneratorSet(n, std::move(v));
}

GeneratorSet GeneratorSet::none(int n) { return GeneratorSet(n, {}); }

bool GeneratorSet::contains(int i) const {
  return std::binary_search(indices_.begin(), indices_.end(), i);
}

std::string GeneratorSet::to_string() const {
  std::string s = "{";
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(indices_[k]);
  }
  return s + "}";
}

std::vector<std::pair<int, int>> GeneratorSet::blocks() const {
  std::vector<std::pair<int, int>> out;
  int start = 1;
  for (int i = 1; i < n_; ++i) {
    if (!contains(i)) {
      out.emplace_back(start, i);
      start = i + 1;
    }
  }
  out.emplace_back(start, n_);
  return out;
}

InversionSet positive_roots_of(const GeneratorSet& J) {
  InversionSet s(J.degree());
  for (auto [a, b] : J.blocks()) {
    for (int i = a; i <= b; ++i) {
      for (int j = i + 1; j <= b; ++j) s.insert({i, j});
    }
  }
  return s;
}

bool in_subgroup(const Permutation& x, const GeneratorSet& J) {
  if (x.degree() != J.degree()) throw std::invalid_argument("degree mismatch");
  for (auto [a, b] : J.blocks()) {
    for (int i = a; i <= b; ++i) {
      if (x(i) < a || x(i) > b) return false;
    }
  }
  return true;
}

bool is_coset_representative(const Permutation& d, const GeneratorSet& J) {
  if (d.degree() != J.degree()) throw std::invalid_argument("degree mismatch");
  for (auto [a, b] : J.blocks()) {
    for (int i = a; i < b; ++i) {
      if (d(i) > d(i + 1)) return false;
    }
  }
  return true;
}

Permutation longest_in(const GeneratorSet& J) {
  std::vector<int> v(static_cast<std::size_t>(J.degree()));
  for (auto [a, b] : J.blocks()) {
    for (int i = a; i <= b; ++i) v[static_cast<std::size_t>(i - 1)] = a + b - i;
  }
  return Permutation(std::move(v));
}

ParabolicData parabolic(const GeneratorSet& J) {
  const int n = J.degree();
  auto w_J = longest_in(J);
  auto d_J = w_J * Permutation::longest(n);
  auto X_J = prefixes_of(d_J);
  return {J, std::move(w_J), std::move(d_J), std::move(X_J)};
}

std::pair<Permutation, Permutation> coset_decompose(const Permutation& x, const GeneratorSet& J) {
  if (x.degree() != J.degree()) throw std::invalid_argument("degree mismatch");
  auto v = x.images();
  for (auto [a, b] : J.blocks()) {
    std::sort(v.begin() + (a - 1), v.begin() + b);
  }
  Permutation d(std::move(v));
  Permutation u = x * d.inverse();
  return {std::move(u), std::move(d)};
}

GeneratorSet j_of_composition(const Composition& lambda) {
  const int n = lambda.size();
  std::vector<int> keep;
  std::vector<bool> removed(static_cast<std::size_t>(n), false);
  int partial = 0;
  for (std::size_t k = 0; k + 1 < lambda.num_parts(); ++k) {
    partial += lambda[k];
    removed[static_cast<std::size_t>(partial)] = true;
  }
  for (int i = 1; i < n; ++i) {
    if (!removed[static_cast<std::size_t>(i)]) keep.push_back(i);
  }
  return GeneratorSet(n, std::move(keep));
}

std::vector<Permutation> induced_rim(std::span<const Permutation> Y, const GeneratorSet& J) {
  const auto d_J = longest_in(J) * Permutation::longest(J.degree());
  std::vector<Permutation> out;
  for (const auto& x : Y) {
    if (!in_subgroup(x, J)) {
      throw std::invalid_argument("element " + x.to_string() + " is not in W_J");
    }
    out.push_back(x * d_J);
  }
  sort_canonical(out);
  return out;
}

}  // namespace cellrim
