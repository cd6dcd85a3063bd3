#include "cellrim/composition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace cellrim {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) {
    throw std::invalid_argument("composition must have at least one part");
  }
  for (int p : parts_) {
    if (p < 1) {
      throw std::invalid_argument("composition parts must be positive");
    }
  }
  total_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Composition::is_partition() const {
  return std::is_sorted(parts_.begin(), parts_.end(), std::greater<>());
}

Composition Composition::conjugate() const {
  const int longest = *std::max_element(parts_.begin(), parts_.end());
  std::vector<int> out(static_cast<std::size_t>(longest), 0);
  for (int p : parts_) {
    for (int i = 0; i < p; ++i) ++out[static_cast<std::size_t>(i)];
  }
  return Composition(std::move(out));
}

Composition Composition::reversed() const {
  return Composition(std::vector<int>(parts_.rbegin(), parts_.rend()));
}

Composition Composition::sorted_descending() const {
  auto out = parts_;
  std::sort(out.begin(), out.end(), std::greater<>());
  return Composition(std::move(out));
}

Composition Composition::with_trailing_one() const {
  auto out = parts_;
  out.push_back(1);
  return Composition(std::move(out));
}

std::string Composition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

bool dominated_by(const Composition& nu, const Composition& mu) {
  if (nu.size() != mu.size() || nu.num_parts() < mu.num_parts()) return false;
  int a = 0;
  int b = 0;
  for (std::size_t k = 0; k < mu.num_parts(); ++k) {
    a += nu[k];
    b += mu[k];
    if (a > b) return false;
  }
  return true;
}

std::vector<Composition> compositions_of(int n) {
  if (n < 1) throw std::invalid_argument("compositions_of: n must be positive");
  std::vector<Composition> out;
  // Each subset of the n-1 gaps is a set of cut points.
  const unsigned gaps = static_cast<unsigned>(n - 1);
  for (unsigned mask = 0; mask < (1u << gaps); ++mask) {
    std::vector<int> parts;
    int run = 1;
    for (unsigned g = 0; g < gaps; ++g) {
      if (mask & (1u << g)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    out.emplace_back(std::move(parts));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cellrim
