#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace octaboson {

/// Weakly decreasing vector of nonnegative integers of fixed length n.
/// Length zero is the empty partition.  Immutable once built.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  static Partition zero(std::size_t n) { return Partition(std::vector<int>(n, 0)); }

  std::size_t size() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  int operator[](std::size_t j) const { return parts_[j]; }
  std::span<const int> parts() const noexcept { return parts_; }
  const std::vector<int>& vector() const noexcept { return parts_; }
  int degree() const noexcept;
  /// Largest part, 0 for the empty partition.
  int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// Element w = (sigma, epsilon) of the hyperoctahedral group, 0-based sigma.
class SignedPermutation {
 public:
  SignedPermutation(std::vector<int> perm, std::vector<int> signs);
  static SignedPermutation identity(std::size_t n);

  std::size_t size() const noexcept { return perm_.size(); }
  std::span<const int> perm() const noexcept { return perm_; }
  std::span<const int> signs() const noexcept { return signs_; }

  /// (w xi)_j = epsilon_j xi_{sigma_j}
  template <class T>
  std::vector<T> act_on_point(std::span<const T> xi) const {
    std::vector<T> out(xi.size());
    for (std::size_t j = 0; j < perm_.size(); ++j) out[j] = signs_[j] * xi[perm_[j]];
    return out;
  }

  /// Exponent action dual to act_on_point: x^alpha -> prod_j x_{sigma_j}^{epsilon_j alpha_j}.
  void act_on_exponent(std::span<const int> alpha, std::span<int> out) const {
    for (std::size_t j = 0; j < perm_.size(); ++j) out[perm_[j]] = signs_[j] * alpha[j];
  }

 private:
  std::vector<int> perm_;
  std::vector<int> signs_;
};

/// All 2^n n! elements, deterministic order (permutations lexicographic, then sign masks).
const std::vector<SignedPermutation>& hyperoctahedral_group(std::size_t n);
std::size_t group_order(std::size_t n);

int multiplicity(const Partition& lambda, int l);
bool dominance_leq(const Partition& mu, const Partition& lambda);
/// {mu : mu <= lambda}, in enumeration order.
std::vector<Partition> lower_set(const Partition& lambda);
/// W lambda as integer vectors, sorted lexicographically, duplicates removed.
std::vector<std::vector<int>> orbit(const Partition& lambda);
Partition add_part(const Partition& lambda, int l);
Partition remove_part(const Partition& lambda, int l);
/// Lambda_n with parts <= max_part, graded lexicographic (degree, then lexicographic).
std::vector<Partition> enumerate_partitions(std::size_t n, int max_part);

/// lambda + e_j stays a partition (j is 0-based).
bool can_raise(const Partition& lambda, std::size_t j);
/// lambda - e_j stays a partition.
bool can_lower(const Partition& lambda, std::size_t j);
Partition raised(const Partition& lambda, std::size_t j);
Partition lowered(const Partition& lambda, std::size_t j);

}  // namespace octaboson
