#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cellrim {

// Generator indices are 1-based: s_i is the transposition (i, i+1).
using Word = std::vector<int>;

// Element of S_n in one-line notation under the right action: images()[i-1]
// is i.x. Products compose left to right, i.(xy) = (i.x).y.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  Permutation(std::initializer_list<int> images)
      : Permutation(std::vector<int>(images)) {}

  static Permutation identity(int n);
  static Permutation generator(int n, int i);
  static Permutation longest(int n);
  // u_1 u_2 ... u_k; any word, reduced or not.
  static Permutation from_word(int n, std::span<const int> word);

  int degree() const { return static_cast<int>(images_.size()); }
  const std::vector<int>& images() const { return images_; }
  // i.x for 1 <= i <= n.
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  // x.s_i swaps the values i and i+1.
  Permutation times_generator(int i) const;
  // s_i.x swaps the entries in positions i and i+1.
  Permutation generator_times(int i) const;
  // Embeds into S_m (m >= n), fixing n+1..m.
  Permutation extended_to(int m) const;

  bool is_identity() const;
  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& x) const noexcept;
};

// Canonical enumeration order: by length, then lexicographic one-line.
bool canonical_less(const Permutation& a, const Permutation& b);
void sort_canonical(std::vector<Permutation>& xs);

int length(const Permutation& x);

// Type-A root e_i - e_j (i != j); positive iff i < j.
struct Root {
  int i;
  int j;
  bool positive() const { return i < j; }
  Root negated() const { return {j, i}; }
  auto operator<=>(const Root&) const = default;
};

// alpha.w for the right action e_k.w = e_{k.w}.
inline Root act(Root alpha, const Permutation& w) { return {w(alpha.i), w(alpha.j)}; }
inline Root simple_root(int s) { return {s, s + 1}; }

// Set of positive roots of S_n, stored densely over the n(n-1)/2 roots in
// the order (1,2),(1,3),...,(1,n),(2,3),...
class InversionSet {
 public:
  explicit InversionSet(int n);

  static InversionSet all_positive(int n);
  // Throws if any root is negative.
  static InversionSet from_roots(int n, std::span<const Root> roots);

  int degree() const { return n_; }
  bool contains(Root alpha) const;
  void insert(Root alpha);
  std::size_t size() const;
  bool subset_of(const InversionSet& other) const;
  bool disjoint_from(const InversionSet& other) const;
  InversionSet united_with(const InversionSet& other) const;
  InversionSet minus(const InversionSet& other) const;
  std::vector<Root> roots() const;

  bool operator==(const InversionSet&) const = default;

 private:
  std::size_t index(Root alpha) const;

  int n_;
  std::vector<std::uint64_t> bits_;
};

// N(x) = {(i,j) : i < j, i.x > j.x}.
InversionSet inversion_set(const Permutation& x);
// N(x) = {beta_k}, beta_k = alpha_{u_k} u_{k-1} ... u_1, from a reduced word.
InversionSet inversion_set_from_word(int n, std::span<const int> reduced_word);
// The image set S.w when every image stays positive; nullopt otherwise.
std::optional<InversionSet> act_on_roots(const InversionSet& roots, const Permutation& w);

// x' is a prefix of x iff N(x') is contained in N(x).
bool is_prefix(const Permutation& x_prime, const Permutation& x);

// Lexicographically smallest reduced word.
Word reduced_word(const Permutation& x);
bool is_reduced(int n, std::span<const int> word);

// All prefixes of w, canonically sorted.
std::vector<Permutation> prefixes_of(const Permutation& w);
// Prefix closure of a set of elements, canonically sorted.
std::vector<Permutation> prefix_closure(std::span<const Permutation> xs);
// Elements not a prefix of any other element of the (prefix-closed) set.
std::vector<Permutation> prefix_maximal(std::span<const Permutation> ideal);
bool pairwise_prefix_incomparable(std::span<const Permutation> xs);

// All of S_n, canonically sorted.
std::vector<Permutation> all_permutations(int n);

}  // namespace cellrim
