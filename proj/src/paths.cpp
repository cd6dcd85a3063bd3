#include "cellrim/paths.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "min_cost_flow.hpp"

namespace cellrim {

KPath::KPath(std::vector<Path> paths) : paths_(std::move(paths)) {
  std::set<Node> seen;
  for (const auto& p : paths_) {
    if (p.empty()) throw std::invalid_argument("constituent paths must be nonempty");
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i > 0 && (p[i].row <= p[i - 1].row || p[i].col < p[i - 1].col)) {
        throw std::invalid_argument("constituent is not a path");
      }
      if (!seen.insert(p[i]).second) throw std::invalid_argument("constituent paths must be disjoint");
    }
  }
}

int KPath::length() const {
  int n = 0;
  for (const auto& p : paths_) n += static_cast<int>(p.size());
  return n;
}

Composition KPath::type() const {
  std::vector<int> lengths;
  for (const auto& p : paths_) lengths.push_back(static_cast<int>(p.size()));
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return Composition(std::move(lengths));
}

std::vector<Node> KPath::support() const {
  std::vector<Node> out;
  for (const auto& p : paths_) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  return out;
}

int KPath::z(int m) const {
  return static_cast<int>(std::count_if(paths_.begin(), paths_.end(),
                                        [m](const Path& p) { return static_cast<int>(p.size()) == m; }));
}

std::string KPath::to_string() const {
  std::string s = "(";
  for (std::size_t j = 0; j < paths_.size(); ++j) {
    if (j) s += ',';
    s += '{';
    for (std::size_t i = 0; i < paths_[j].size(); ++i) {
      if (i) s += ',';
      s += "(" + std::to_string(paths_[j][i].row) + "," + std::to_string(paths_[j][i].col) + ")";
    }
    s += '}';
  }
  return s + ")";
}

bool is_ordered(const KPath& pi) {
  const auto& ps = pi.paths();
  for (std::size_t j = 0; j < ps.size(); ++j) {
    for (std::size_t jj = j + 1; jj < ps.size(); ++jj) {
      for (auto x : ps[j]) {
        for (auto y : ps[jj]) {
          if (x.row <= y.row && x.col >= y.col) return false;
        }
      }
    }
  }
  return true;
}

std::vector<int> max_k_path_lengths(const Diagram& D) {
  const auto& nodes = D.nodes();
  const int n = D.size();
  const int source = 0;
  const int sink = 1;
  detail::MinCostFlow flow(2 + 2 * n);
  for (int v = 0; v < n; ++v) {
    const int in = 2 + 2 * v;
    const int out = in + 1;
    flow.add_edge(source, in, 1, 0);
    flow.add_edge(in, out, 1, -1);
    flow.add_edge(out, sink, 1, 0);
    for (int w = 0; w < n; ++w) {
      const auto a = nodes[static_cast<std::size_t>(v)];
      const auto b = nodes[static_cast<std::size_t>(w)];
      if (a.row < b.row && a.col <= b.col) flow.add_edge(out, 2 + 2 * w, 1, 0);
    }
  }
  std::vector<int> lengths;
  long long cost = 0;
  while (lengths.empty() || lengths.back() < n) {
    if (!flow.augment(source, sink, cost)) break;
    lengths.push_back(static_cast<int>(-cost));
  }
  return lengths;
}

Composition subsequence_type(const Diagram& D) {
  const auto lengths = max_k_path_lengths(D);
  std::vector<int> parts;
  int previous = 0;
  for (int l : lengths) {
    if (l > previous) parts.push_back(l - previous);
    previous = l;
  }
  return Composition(std::move(parts));
}

bool is_admissible(const Diagram& D) {
  return subsequence_type(D) == row_composition(D).conjugate();
}

namespace {

class OrderedSearcher {
 public:
  OrderedSearcher(std::span<const Node> nodes, const PathSearch& spec) : spec_(spec) {
    if (spec.k < 1) throw std::invalid_argument("k must be positive");
    std::vector<Node> sorted(nodes.begin(), nodes.end());
    std::sort(sorted.begin(), sorted.end());
    for (auto x : sorted) {
      if (rows_.empty() || rows_.back().front().row != x.row) rows_.emplace_back();
      rows_.back().push_back(x);
    }
    remaining_ = static_cast<int>(sorted.size());
    paths_.assign(static_cast<std::size_t>(spec.k), {});
    max_col_.assign(static_cast<std::size_t>(spec.k), 0);
    if (spec.length_counts) {
      const auto& c = *spec.length_counts;
      at_least_limit_.assign(c.size() + 1, 0);
      for (std::size_t m = c.size(); m-- > 1;) at_least_limit_[m] = at_least_limit_[m + 1] + c[m];
      at_least_.assign(at_least_limit_.size(), 0);
    }
    empties_ = spec.k;
  }

  std::optional<KPath> run() {
    if (dfs(0, 0, 0)) return KPath(paths_);
    return std::nullopt;
  }

 private:
  bool finished() const {
    if (empties_ > 0) return false;
    if (!spec_.length_counts) return true;
    const auto& c = *spec_.length_counts;
    std::vector<int> got(c.size(), 0);
    for (const auto& p : paths_) {
      if (p.size() >= c.size()) return false;
      ++got[p.size()];
    }
    for (std::size_t m = 1; m < c.size(); ++m) {
      if (got[m] != c[m]) return false;
    }
    return true;
  }

  bool dfs(std::size_t r, std::size_t pos, int min_j) {
    if (r == rows_.size()) return finished();
    if (pos == rows_[r].size()) return dfs(r + 1, 0, 0);
    if (remaining_ < empties_) return false;
    const Node y = rows_[r][pos];
    --remaining_;
    int prefix_max = 0;
    for (int j = 0; j < min_j; ++j) prefix_max = std::max(prefix_max, max_col_[static_cast<std::size_t>(j)]);
    for (int j = min_j; j < spec_.k; ++j) {
      if (j > min_j) prefix_max = std::max(prefix_max, max_col_[static_cast<std::size_t>(j - 1)]);
      if (prefix_max >= y.col) break;
      auto& path = paths_[static_cast<std::size_t>(j)];
      if (!path.empty() && path.back().col > y.col) continue;
      const std::size_t new_len = path.size() + 1;
      if (spec_.length_counts) {
        if (new_len >= at_least_.size() || at_least_[new_len] + 1 > at_least_limit_[new_len]) continue;
        ++at_least_[new_len];
      }
      const int saved_max = max_col_[static_cast<std::size_t>(j)];
      if (path.empty()) --empties_;
      path.push_back(y);
      max_col_[static_cast<std::size_t>(j)] = std::max(saved_max, y.col);
      if (dfs(r, pos + 1, j + 1)) return true;
      path.pop_back();
      if (path.empty()) ++empties_;
      max_col_[static_cast<std::size_t>(j)] = saved_max;
      if (spec_.length_counts) --at_least_[new_len];
    }
    if (!spec_.full_support && dfs(r, pos + 1, min_j)) return true;
    ++remaining_;
    return false;
  }

  const PathSearch& spec_;
  std::vector<std::vector<Node>> rows_;
  std::vector<Path> paths_;
  std::vector<int> max_col_;
  std::vector<int> at_least_limit_;
  std::vector<int> at_least_;
  int remaining_ = 0;
  int empties_ = 0;
};

}  // namespace

std::optional<KPath> find_ordered_kpath(std::span<const Node> nodes, const PathSearch& spec) {
  OrderedSearcher searcher(nodes, spec);
  return searcher.run();
}

bool has_kpath_of_type(std::span<const Node> nodes, const Composition& type) {
  std::vector<Node> sorted(nodes.begin(), nodes.end());
  std::sort(sorted.begin(), sorted.end());
  if (type.size() != static_cast<int>(sorted.size())) return false;
  const auto target = type.sorted_descending().parts();
  const std::size_t k = target.size();
  const auto max_len = static_cast<std::size_t>(target.front());
  std::vector<Path> chains;
  std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
    if (i == sorted.size()) {
      if (chains.size() != k) return false;
      std::vector<int> lengths;
      for (const auto& c : chains) lengths.push_back(static_cast<int>(c.size()));
      std::sort(lengths.begin(), lengths.end(), std::greater<>());
      return lengths == target;
    }
    const Node x = sorted[i];
    for (auto& c : chains) {
      if (c.size() < max_len && c.back().row < x.row && c.back().col <= x.col) {
        c.push_back(x);
        if (place(i + 1)) return true;
        c.pop_back();
      }
    }
    if (chains.size() < k) {
      chains.push_back({x});
      if (place(i + 1)) return true;
      chains.pop_back();
    }
    return false;
  };
  return place(0);
}

KPath order_equivalent(const KPath& pi) {
  if (is_ordered(pi)) return pi;
  const auto support = pi.support();
  auto found = find_ordered_kpath(support, {pi.k(), true, std::nullopt});
  if (!found) throw std::logic_error("no ordered k-path with support of " + pi.to_string());
  return *found;
}

KPath insert_singletons(const KPath& pi, std::span<const Node> extra) {
  if (!is_ordered(pi)) throw std::invalid_argument("insert_singletons needs an ordered k-path");
  std::set<Node> used;
  for (auto x : pi.support()) used.insert(x);
  for (auto x : extra) {
    if (!used.insert(x).second) {
      throw std::invalid_argument("node (" + std::to_string(x.row) + "," + std::to_string(x.col) +
                                  ") is already in the k-path");
    }
    for (const auto& p : pi.paths()) {
      bool above = false;
      bool below = false;
      for (auto y : p) {
        if (y.col != x.col) continue;
        above = above || y.row < x.row;
        below = below || y.row > x.row;
      }
      if (above && below) {
        throw std::invalid_argument("a constituent straddles the inserted node in column " +
                                    std::to_string(x.col));
      }
    }
  }
  std::vector<Path> paths = pi.paths();
  std::function<bool(std::size_t)> insert = [&](std::size_t i) -> bool {
    if (i == extra.size()) return true;
    for (std::size_t pos = 0; pos <= paths.size(); ++pos) {
      paths.insert(paths.begin() + static_cast<std::ptrdiff_t>(pos), Path{extra[i]});
      if (is_ordered(KPath(paths)) && insert(i + 1)) return true;
      paths.erase(paths.begin() + static_cast<std::ptrdiff_t>(pos));
    }
    return false;
  };
  if (!insert(0)) throw std::logic_error("singleton insertion failed");
  return KPath(std::move(paths));
}

std::string to_string(FormClass f) {
  switch (f) {
    case FormClass::FormA:
      return "FormA";
    case FormClass::FormB:
      return "FormB";
    case FormClass::Neither:
      break;
  }
  return "Neither";
}

std::array<int, 4> z_profile(const KPath& pi) { return {pi.z(1), pi.z(2), pi.z(3), pi.z(4)}; }

namespace {

// Some t constituents have total length exactly target.
bool has_subpath_of_length(const KPath& pi, int t, int target) {
  // reach[c][l]: c constituents chosen with total length l.
  std::vector<std::vector<bool>> reach(static_cast<std::size_t>(t) + 1,
                                       std::vector<bool>(static_cast<std::size_t>(target) + 1, false));
  reach[0][0] = true;
  for (const auto& p : pi.paths()) {
    const int len = static_cast<int>(p.size());
    for (int c = t; c >= 1; --c) {
      for (int l = target; l >= len; --l) {
        if (reach[static_cast<std::size_t>(c - 1)][static_cast<std::size_t>(l - len)]) {
          reach[static_cast<std::size_t>(c)][static_cast<std::size_t>(l)] = true;
        }
      }
    }
  }
  return reach[static_cast<std::size_t>(t)][static_cast<std::size_t>(target)];
}

std::vector<int> form_counts(FormClass f, int s, int t, int u) {
  if (f == FormClass::FormA) return {0, s - t, t - u, u - 1, 1};
  return {0, s - t, t - u - 1, u + 1, 0};
}

}  // namespace

FormClass classify_form(const KPath& pi, int s, int t, int u) {
  if (!(s >= t && t >= u && u >= 1)) throw std::invalid_argument("need s >= t >= u >= 1");
  if (!is_ordered(pi)) throw std::invalid_argument("form classification needs an ordered path");
  if (pi.k() != s || pi.length() != s + t + u + 1) {
    throw std::invalid_argument("expected an s-path of length s+t+u+1");
  }
  if (!has_subpath_of_length(pi, t, 2 * t + u + 1)) return FormClass::Neither;
  const auto z = z_profile(pi);
  for (auto f : {FormClass::FormA, FormClass::FormB}) {
    const auto c = form_counts(f, s, t, u);
    if (z[0] == c[1] && z[1] == c[2] && z[2] == c[3] && z[3] == c[4]) return f;
  }
  return FormClass::Neither;
}

FormPath find_form_path(const Diagram& D) {
  const auto lambda = row_composition(D);
  if (lambda.num_parts() != 4 || lambda[3] != 1) {
    throw std::invalid_argument("row composition must have the form (a,b,c,1)");
  }
  std::vector<int> stu = {lambda[0], lambda[1], lambda[2]};
  std::sort(stu.begin(), stu.end(), std::greater<>());
  const int s = stu[0];
  const int t = stu[1];
  const int u = stu[2];
  if (!is_admissible(D)) throw std::invalid_argument("diagram is not admissible");
  for (auto f : {FormClass::FormA, FormClass::FormB}) {
    if (f == FormClass::FormB && t == u) continue;
    auto found = find_ordered_kpath(D.nodes(), {s, true, form_counts(f, s, t, u)});
    if (found) return {*found, classify_form(*found, s, t, u)};
  }
  throw std::logic_error("admissible diagram without a form path: " + D.to_string());
}

Diagram straighten(const KPath& pi) {
  std::vector<Node> nodes;
  for (std::size_t j = 0; j < pi.paths().size(); ++j) {
    for (auto x : pi.paths()[j]) nodes.push_back({x.row, static_cast<int>(j) + 1});
  }
  return Diagram(std::move(nodes));
}

Diagram straighten(const KPath& pi, const Diagram& host) {
  if (pi.support() != host.nodes()) throw std::invalid_argument("support differs from the host diagram");
  return straighten(pi);
}

}  // namespace cellrim
