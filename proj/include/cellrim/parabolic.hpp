#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cellrim/composition.hpp"
#include "cellrim/permutation.hpp"

namespace cellrim {

// A subset J of the simple reflections {s_1, ..., s_{n-1}} of S_n.
class GeneratorSet {
 public:
  GeneratorSet(int n, std::vector<int> indices);

  static GeneratorSet all(int n);
  static GeneratorSet none(int n);

  int degree() const { return n_; }
  bool contains(int i) const;
  const std::vector<int>& indices() const { return indices_; }
  std::string to_string() const;

  // Maximal runs of positions joined by generators in J, as [first, last].
  std::vector<std::pair<int, int>> blocks() const;

  bool operator==(const GeneratorSet&) const = default;

 private:
  int n_;
  std::vector<int> indices_;
};

// Phi_J^+ = {(i,j) : i < j in the same block}.
InversionSet positive_roots_of(const GeneratorSet& J);

bool in_subgroup(const Permutation& x, const GeneratorSet& J);
// d is a minimal length right coset representative: images increase on blocks.
bool is_coset_representative(const Permutation& d, const GeneratorSet& J);
Permutation longest_in(const GeneratorSet& J);

struct ParabolicData {
  GeneratorSet J;
  Permutation w_J;
  Permutation d_J;
  std::vector<Permutation> X_J;
};

ParabolicData parabolic(const GeneratorSet& J);

// x = u.d with u in W_J and d in X_J.
std::pair<Permutation, Permutation> coset_decompose(const Permutation& x, const GeneratorSet& J);

GeneratorSet j_of_composition(const Composition& lambda);

// {x.d_J : x in Y}; throws if some x is outside W_J.
std::vector<Permutation> induced_rim(std::span<const Permutation> Y, const GeneratorSet& J);

}  // namespace cellrim
