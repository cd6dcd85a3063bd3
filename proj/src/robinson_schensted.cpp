#include "cellrim/robinson_schensted.hpp"

#include <algorithm>
#include <stdexcept>

namespace cellrim {

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  for (const auto& r : rows_) {
    if (r.empty()) throw std::invalid_argument("tableau rows must be nonempty");
  }
}

Composition Tableau::shape() const {
  std::vector<int> parts;
  for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
  return Composition(std::move(parts));
}

int Tableau::size() const {
  int n = 0;
  for (const auto& r : rows_) n += static_cast<int>(r.size());
  return n;
}

bool Tableau::is_standard() const {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i > 0 && rows_[i].size() > rows_[i - 1].size()) return false;
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      const int v = rows_[i][j];
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) return false;
      seen[static_cast<std::size_t>(v)] = true;
      if (j > 0 && rows_[i][j - 1] >= v) return false;
      if (i > 0 && rows_[i - 1][j] >= v) return false;
    }
  }
  return true;
}

std::string Tableau::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) s += ',';
    s += '[';
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (j) s += ',';
      s += std::to_string(rows_[i][j]);
    }
    s += ']';
  }
  return s + "]";
}

RsPair rs_pair(const Permutation& x) {
  std::vector<std::vector<int>> p;
  std::vector<std::vector<int>> q;
  for (int k = 1; k <= x.degree(); ++k) {
    int v = x(k);
    std::size_t row = 0;
    while (true) {
      if (row == p.size()) {
        p.push_back({v});
        q.push_back({k});
        break;
      }
      auto& r = p[row];
      auto it = std::upper_bound(r.begin(), r.end(), v);
      if (it == r.end()) {
        r.push_back(v);
        q[row].push_back(k);
        break;
      }
      std::swap(v, *it);
      ++row;
    }
  }
  return {Tableau(std::move(p)), Tableau(std::move(q))};
}

Permutation rs_inverse(const Tableau& P, const Tableau& Q) {
  if (P.shape() != Q.shape()) throw std::invalid_argument("tableaux shapes differ");
  if (!P.is_standard() || !Q.is_standard()) throw std::invalid_argument("tableaux must be standard");
  auto p = P.rows();
  auto q = Q.rows();
  const int n = P.size();
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int k = n; k >= 1; --k) {
    // k sits at the end of some row of Q.
    std::size_t row = 0;
    while (q[row].back() != k) ++row;
    q[row].pop_back();
    int v = p[row].back();
    p[row].pop_back();
    while (row > 0) {
      --row;
      auto& r = p[row];
      auto it = std::lower_bound(r.begin(), r.end(), v);
      --it;
      std::swap(v, *it);
    }
    images[static_cast<std::size_t>(k - 1)] = v;
    while (!p.empty() && p.back().empty()) {
      p.pop_back();
      q.pop_back();
    }
  }
  return Permutation(std::move(images));
}

namespace {

void fill_tableaux(const std::vector<int>& shape, std::vector<std::vector<int>>& rows, int next,
                   int n, std::vector<Tableau>& out) {
  if (next > n) {
    out.emplace_back(rows);
    return;
  }
  for (std::size_t i = 0; i < shape.size(); ++i) {
    const std::size_t len = rows[i].size();
    if (len == static_cast<std::size_t>(shape[i])) continue;
    if (i > 0 && rows[i - 1].size() <= len) continue;
    rows[i].push_back(next);
    fill_tableaux(shape, rows, next + 1, n, out);
    rows[i].pop_back();
  }
}

}  // namespace

std::vector<Tableau> standard_young_tableaux(const Composition& shape) {
  if (!shape.is_partition()) throw std::invalid_argument("shape must be a partition");
  std::vector<std::vector<int>> rows(shape.num_parts());
  std::vector<Tableau> out;
  fill_tableaux(shape.parts(), rows, 1, shape.size(), out);
  std::sort(out.begin(), out.end());
  return out;
}

bool same_component(const Permutation& x, const Permutation& y, TableauComponent c) {
  if (x.degree() != y.degree()) throw std::invalid_argument("degree mismatch");
  const auto a = rs_pair(x);
  const auto b = rs_pair(y);
  return c == TableauComponent::P ? a.P == b.P : a.Q == b.Q;
}

TableauComponent right_cell_component() { return TableauComponent::Q; }

bool right_equivalent(const Permutation& x, const Permutation& y) {
  return same_component(x, y, right_cell_component());
}

std::vector<Permutation> right_cell_of(const Permutation& w) {
  const auto pair = rs_pair(w);
  const bool by_q = right_cell_component() == TableauComponent::Q;
  const Tableau& fixed = by_q ? pair.Q : pair.P;
  std::vector<Permutation> out;
  for (const auto& t : standard_young_tableaux(fixed.shape())) {
    out.push_back(by_q ? rs_inverse(t, fixed) : rs_inverse(fixed, t));
  }
  sort_canonical(out);
  return out;
}

}  // namespace cellrim
