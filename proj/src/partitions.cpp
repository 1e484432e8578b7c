#include "octaboson/partitions.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <string>

#include "octaboson/errors.hpp"

namespace octaboson {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    if (parts_[j] < 0) throw DomainError("partition parts must be nonnegative");
    if (j + 1 < parts_.size() && parts_[j] < parts_[j + 1]) {
      throw DomainError("partition parts must be weakly decreasing");
    }
  }
}

int Partition::degree() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

SignedPermutation::SignedPermutation(std::vector<int> perm, std::vector<int> signs)
    : perm_(std::move(perm)), signs_(std::move(signs)) {
  if (perm_.size() != signs_.size()) throw DomainError("signed permutation: size mismatch");
  std::vector<bool> seen(perm_.size(), false);
  for (std::size_t j = 0; j < perm_.size(); ++j) {
    const int p = perm_[j];
    if (p < 0 || static_cast<std::size_t>(p) >= perm_.size() || seen[p]) {
      throw DomainError("signed permutation: not a bijection");
    }
    seen[p] = true;
    if (signs_[j] != 1 && signs_[j] != -1) throw DomainError("signed permutation: signs must be +-1");
  }
}

SignedPermutation SignedPermutation::identity(std::size_t n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  return {std::move(perm), std::vector<int>(n, 1)};
}

std::size_t group_order(std::size_t n) {
  std::size_t order = 1;
  for (std::size_t k = 1; k <= n; ++k) order *= 2 * k;
  return order;
}

const std::vector<SignedPermutation>& hyperoctahedral_group(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, std::vector<SignedPermutation>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  std::vector<SignedPermutation> group;
  group.reserve(group_order(n));
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<int> signs(n);
      for (std::size_t j = 0; j < n; ++j) signs[j] = (mask >> j) & 1U ? -1 : 1;
      group.emplace_back(perm, std::move(signs));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return cache.emplace(n, std::move(group)).first->second;
}

int multiplicity(const Partition& lambda, int l) {
  return static_cast<int>(std::count(lambda.parts().begin(), lambda.parts().end(), l));
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
  if (mu.size() != lambda.size()) throw DomainError("dominance order: length mismatch");
  long partial_mu = 0;
  long partial_lambda = 0;
  for (std::size_t k = 0; k < mu.size(); ++k) {
    partial_mu += mu[k];
    partial_lambda += lambda[k];
    if (partial_mu > partial_lambda) return false;
  }
  return true;
}

std::vector<Partition> lower_set(const Partition& lambda) {
  std::vector<Partition> out;
  for (auto& mu : enumerate_partitions(lambda.size(), lambda.largest())) {
    if (dominance_leq(mu, lambda)) out.push_back(std::move(mu));
  }
  return out;
}

std::vector<std::vector<int>> orbit(const Partition& lambda) {
  std::vector<std::vector<int>> out;
  std::vector<int> image(lambda.size());
  for (const auto& w : hyperoctahedral_group(lambda.size())) {
    w.act_on_exponent(lambda.parts(), image);
    out.push_back(image);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Partition add_part(const Partition& lambda, int l) {
  if (l < 0) throw DomainError("add_part: negative part");
  std::vector<int> parts = lambda.vector();
  parts.insert(std::upper_bound(parts.begin(), parts.end(), l, std::greater<>{}), l);
  return Partition(std::move(parts));
}

Partition remove_part(const Partition& lambda, int l) {
  std::vector<int> parts = lambda.vector();
  auto it = std::find(parts.begin(), parts.end(), l);
  if (it == parts.end()) {
    throw PreconditionError("remove_part: no part of size " + std::to_string(l));
  }
  parts.erase(it);
  return Partition(std::move(parts));
}

namespace {

void enumerate_rec(std::size_t n, int bound, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (prefix.size() == n) {
    out.emplace_back(prefix);
    return;
  }
  for (int v = 0; v <= bound; ++v) {
    prefix.push_back(v);
    enumerate_rec(n, v, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(std::size_t n, int max_part) {
  if (max_part < 0) throw DomainError("enumerate: negative part bound");
  std::vector<Partition> out;
  std::vector<int> prefix;
  enumerate_rec(n, max_part, prefix, out);
  std::stable_sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a < b;
  });
  return out;
}

bool can_raise(const Partition& lambda, std::size_t j) {
  return j < lambda.size() && (j == 0 || lambda[j - 1] > lambda[j]);
}

bool can_lower(const Partition& lambda, std::size_t j) {
  return j < lambda.size() && lambda[j] > 0 && (j + 1 == lambda.size() || lambda[j + 1] < lambda[j]);
}

Partition raised(const Partition& lambda, std::size_t j) {
  if (!can_raise(lambda, j)) throw PreconditionError("lambda + e_j is not a partition");
  std::vector<int> parts = lambda.vector();
  ++parts[j];
  return Partition(std::move(parts));
}

Partition lowered(const Partition& lambda, std::size_t j) {
  if (!can_lower(lambda, j)) throw PreconditionError("lambda - e_j is not a partition");
  std::vector<int> parts = lambda.vector();
  --parts[j];
  return Partition(std::move(parts));
}

}  // namespace octaboson
