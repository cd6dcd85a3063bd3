#include "cellrim/permutation.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace cellrim {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  if (n < 1) throw std::invalid_argument("permutation degree must be positive");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation of 1..n: " + to_string());
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::generator(int n, int i) {
  if (i < 1 || i >= n) throw std::invalid_argument("generator index out of range");
  return identity(n).generator_times(i);
}

Permutation Permutation::longest(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.rbegin(), v.rend(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::from_word(int n, std::span<const int> word) {
  auto x = identity(n);
  for (int s : word) {
    if (s < 1 || s >= n) throw std::invalid_argument("generator index out of range");
    x = x.times_generator(s);
  }
  return x;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) throw std::invalid_argument("degree mismatch in product");
  std::vector<int> v(images_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = rhs(images_[i]);
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> v(images_.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
  }
  return Permutation(std::move(v));
}

Permutation Permutation::times_generator(int i) const {
  if (i < 1 || i >= degree()) throw std::invalid_argument("generator index out of range");
  auto v = images_;
  for (int& x : v) {
    if (x == i) {
      x = i + 1;
    } else if (x == i + 1) {
      x = i;
    }
  }
  return Permutation(std::move(v));
}

Permutation Permutation::generator_times(int i) const {
  if (i < 1 || i >= degree()) throw std::invalid_argument("generator index out of range");
  auto v = images_;
  std::swap(v[static_cast<std::size_t>(i - 1)], v[static_cast<std::size_t>(i)]);
  return Permutation(std::move(v));
}

Permutation Permutation::extended_to(int m) const {
  if (m < degree()) throw std::invalid_argument("cannot shrink a permutation");
  auto v = images_;
  for (int k = degree() + 1; k <= m; ++k) v.push_back(k);
  return Permutation(std::move(v));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

std::string Permutation::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(images_[i]);
  }
  return s + "]";
}

std::size_t PermutationHash::operator()(const Permutation& x) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int v : x.images()) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

int length(const Permutation& x) {
  const auto& v = x.images();
  int inv = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[i] > v[j]) ++inv;
    }
  }
  return inv;
}

bool canonical_less(const Permutation& a, const Permutation& b) {
  const int la = length(a);
  const int lb = length(b);
  if (la != lb) return la < lb;
  return a.images() < b.images();
}

void sort_canonical(std::vector<Permutation>& xs) {
  std::vector<std::pair<int, Permutation>> keyed;
  keyed.reserve(xs.size());
  for (auto& x : xs) keyed.emplace_back(length(x), std::move(x));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second.images() < b.second.images();
  });
  xs.clear();
  for (auto& [l, x] : keyed) xs.push_back(std::move(x));
}

// ---------------------------------------------------------------------------

InversionSet::InversionSet(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("inversion set degree must be positive");
  const std::size_t roots = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  bits_.assign((roots + 63) / 64, 0);
}

InversionSet InversionSet::all_positive(int n) {
  InversionSet s(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) s.insert({i, j});
  }
  return s;
}

InversionSet InversionSet::from_roots(int n, std::span<const Root> roots) {
  InversionSet s(n);
  for (Root r : roots) s.insert(r);
  return s;
}

std::size_t InversionSet::index(Root alpha) const {
  if (!alpha.positive() || alpha.i < 1 || alpha.j > n_) {
    throw std::invalid_argument("not a positive root of this degree");
  }
  const auto i = static_cast<std::size_t>(alpha.i);
  const auto j = static_cast<std::size_t>(alpha.j);
  const auto n = static_cast<std::size_t>(n_);
  return (i - 1) * (2 * n - i) / 2 + (j - i - 1);
}

bool InversionSet::contains(Root alpha) const {
  if (!alpha.positive()) return false;
  const std::size_t k = index(alpha);
  return (bits_[k / 64] >> (k % 64)) & 1u;
}

void InversionSet::insert(Root alpha) {
  const std::size_t k = index(alpha);
  bits_[k / 64] |= std::uint64_t{1} << (k % 64);
}

std::size_t InversionSet::size() const {
  std::size_t c = 0;
  for (auto w : bits_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool InversionSet::subset_of(const InversionSet& other) const {
  if (other.n_ != n_) throw std::invalid_argument("degree mismatch");
  for (std::size_t k = 0; k < bits_.size(); ++k) {
    if (bits_[k] & ~other.bits_[k]) return false;
  }
  return true;
}

bool InversionSet::disjoint_from(const InversionSet& other) const {
  if (other.n_ != n_) throw std::invalid_argument("degree mismatch");
  for (std::size_t k = 0; k < bits_.size(); ++k) {
    if (bits_[k] & other.bits_[k]) return false;
  }
  return true;
}

InversionSet InversionSet::united_with(const InversionSet& other) const {
  if (other.n_ != n_) throw std::invalid_argument("degree mismatch");
  InversionSet out = *this;
  for (std::size_t k = 0; k < bits_.size(); ++k) out.bits_[k] |= other.bits_[k];
  return out;
}

InversionSet InversionSet::minus(const InversionSet& other) const {
  if (other.n_ != n_) throw std::invalid_argument("degree mismatch");
  InversionSet out = *this;
  for (std::size_t k = 0; k < bits_.size(); ++k) out.bits_[k] &= ~other.bits_[k];
  return out;
}

std::vector<Root> InversionSet::roots() const {
  std::vector<Root> out;
  for (int i = 1; i <= n_; ++i) {
    for (int j = i + 1; j <= n_; ++j) {
      if (contains({i, j})) out.push_back({i, j});
    }
  }
  return out;
}

InversionSet inversion_set(const Permutation& x) {
  InversionSet s(x.degree());
  for (int i = 1; i <= x.degree(); ++i) {
    for (int j = i + 1; j <= x.degree(); ++j) {
      if (x(i) > x(j)) s.insert({i, j});
    }
  }
  return s;
}

InversionSet inversion_set_from_word(int n, std::span<const int> reduced_word) {
  InversionSet s(n);
  // prefix_inverse = u_{k-1} ... u_1, so beta_k = alpha_{u_k}.prefix_inverse.
  auto prefix_inverse = Permutation::identity(n);
  for (int u : reduced_word) {
    const Root beta = act(simple_root(u), prefix_inverse);
    if (!beta.positive() || s.contains(beta)) {
      throw std::invalid_argument("word is not reduced");
    }
    s.insert(beta);
    prefix_inverse = Permutation::generator(n, u) * prefix_inverse;
  }
  return s;
}

std::optional<InversionSet> act_on_roots(const InversionSet& roots, const Permutation& w) {
  if (w.degree() != roots.degree()) throw std::invalid_argument("degree mismatch");
  InversionSet out(w.degree());
  for (Root r : roots.roots()) {
    const Root image = act(r, w);
    if (!image.positive()) return std::nullopt;
    out.insert(image);
  }
  return out;
}

bool is_prefix(const Permutation& x_prime, const Permutation& x) {
  if (x_prime.degree() != x.degree()) throw std::invalid_argument("degree mismatch");
  return inversion_set(x_prime).subset_of(inversion_set(x));
}

Word reduced_word(const Permutation& x) {
  // The smallest left descent is the smallest admissible first letter.
  Word word;
  auto v = x.images();
  bool found = true;
  while (found) {
    found = false;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      if (v[i] > v[i + 1]) {
        word.push_back(static_cast<int>(i) + 1);
        std::swap(v[i], v[i + 1]);
        found = true;
        break;
      }
    }
  }
  return word;
}

bool is_reduced(int n, std::span<const int> word) {
  return length(Permutation::from_word(n, word)) == static_cast<int>(word.size());
}

std::vector<Permutation> prefixes_of(const Permutation& w) {
  const int n = w.degree();
  const InversionSet target = inversion_set(w);
  std::unordered_set<Permutation, PermutationHash> seen;
  std::deque<Permutation> queue;
  auto e = Permutation::identity(n);
  seen.insert(e);
  queue.push_back(e);
  while (!queue.empty()) {
    Permutation x = std::move(queue.front());
    queue.pop_front();
    for (int i = 1; i < n; ++i) {
      // x.s_i is longer iff the values i, i+1 appear in order in x.
      const auto& v = x.images();
      const auto pi = std::find(v.begin(), v.end(), i) - v.begin();
      const auto pj = std::find(v.begin(), v.end(), i + 1) - v.begin();
      if (pi > pj) continue;
      // N(x.s_i) = N(x) + {(pi+1, pj+1)}.
      if (!target.contains({static_cast<int>(pi) + 1, static_cast<int>(pj) + 1})) continue;
      auto y = x.times_generator(i);
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  std::vector<Permutation> out(seen.begin(), seen.end());
  sort_canonical(out);
  return out;
}

std::vector<Permutation> prefix_closure(std::span<const Permutation> xs) {
  std::unordered_set<Permutation, PermutationHash> seen;
  for (const auto& x : xs) {
    if (seen.contains(x)) continue;
    for (auto& p : prefixes_of(x)) seen.insert(std::move(p));
  }
  std::vector<Permutation> out(seen.begin(), seen.end());
  sort_canonical(out);
  return out;
}

std::vector<Permutation> prefix_maximal(std::span<const Permutation> ideal) {
  // In a prefix-closed set, x is non-maximal iff some x.s_i of length
  // l(x)+1 lies in the set.
  std::unordered_set<Permutation, PermutationHash> members(ideal.begin(), ideal.end());
  std::vector<Permutation> out;
  for (const auto& x : ideal) {
    bool maximal = true;
    const auto& v = x.images();
    for (int i = 1; i < x.degree() && maximal; ++i) {
      const auto pi = std::find(v.begin(), v.end(), i) - v.begin();
      const auto pj = std::find(v.begin(), v.end(), i + 1) - v.begin();
      if (pi < pj && members.contains(x.times_generator(i))) maximal = false;
    }
    if (maximal) out.push_back(x);
  }
  sort_canonical(out);
  return out;
}

bool pairwise_prefix_incomparable(std::span<const Permutation> xs) {
  std::vector<InversionSet> sets;
  sets.reserve(xs.size());
  for (const auto& x : xs) sets.push_back(inversion_set(x));
  for (std::size_t a = 0; a < sets.size(); ++a) {
    for (std::size_t b = 0; b < sets.size(); ++b) {
      if (a != b && sets[a].subset_of(sets[b])) return false;
    }
  }
  return true;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  auto v = Permutation::identity(n).images();
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  sort_canonical(out);
  return out;
}

}  // namespace cellrim
