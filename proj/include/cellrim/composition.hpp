#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace cellrim {

// A proper composition: a nonempty sequence of positive parts.
class Composition {
 public:
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts)
      : Composition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  std::size_t num_parts() const { return parts_.size(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  int size() const { return total_; }

  bool is_partition() const;

  // lambda'_i = |{j : lambda_j >= i}|. Always a partition.
  Composition conjugate() const;
  Composition reversed() const;
  Composition sorted_descending() const;
  // (lambda_1, ..., lambda_r, 1)
  Composition with_trailing_one() const;

  std::string to_string() const;

  auto operator<=>(const Composition&) const = default;

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

// nu <| mu in the dominance order: nu has at least as many parts as mu and
// every partial sum of nu is bounded by the matching partial sum of mu.
bool dominated_by(const Composition& nu, const Composition& mu);

// Every composition of n, in lexicographic order of parts.
std::vector<Composition> compositions_of(int n);

}  // namespace cellrim
