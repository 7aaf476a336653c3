#pragma once

// The relabeling group T = <kappa, delta, eta, mu> on 4n symbols and
// conjugacy testing inside it.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include <boost/container_hash/hash.hpp>

#include "fillperm/errors.hpp"
#include "fillperm/filling.hpp"
#include "fillperm/permutation.hpp"

namespace fillperm {

struct Generators {
  Permutation kappa;
  Permutation delta;
  Permutation eta;
  Permutation mu;
};

namespace detail {

inline void set_cycle(std::vector<int>& img, const std::vector<int>& c) {
  for (std::size_t k = 0; k < c.size(); ++k) img[c[k] - 1] = c[(k + 1) % c.size()];
}

inline std::vector<int> identity_images(int m) {
  std::vector<int> img(static_cast<std::size_t>(m));
  for (int e = 1; e <= m; ++e) img[e - 1] = e;
  return img;
}

}  // namespace detail

// kappa = (1,3,...,2n-1)(2n+1,2n+3,...,4n-1)
inline Permutation kappa(int n) {
  if (n < 1) throw OutOfRange("intersection count must be positive");
  auto img = detail::identity_images(4 * n);
  std::vector<int> pos, neg;
  for (int e = 1; e <= 2 * n; e += 2) pos.push_back(e);
  for (int e = 2 * n + 1; e <= 4 * n; e += 2) neg.push_back(e);
  detail::set_cycle(img, pos);
  detail::set_cycle(img, neg);
  return Permutation::from_images(std::move(img));
}

// delta = (2,4,...,2n)(2n+2,2n+4,...,4n)
inline Permutation delta(int n) {
  if (n < 1) throw OutOfRange("intersection count must be positive");
  auto img = detail::identity_images(4 * n);
  std::vector<int> pos, neg;
  for (int e = 2; e <= 2 * n; e += 2) pos.push_back(e);
  for (int e = 2 * n + 2; e <= 4 * n; e += 2) neg.push_back(e);
  detail::set_cycle(img, pos);
  detail::set_cycle(img, neg);
  return Permutation::from_images(std::move(img));
}

// (1,2n+1)(3,2n+3)...(2n-1,4n-1). Conjugating a filling permutation by this
// generally leaves the solution set; kept for comparison only.
inline Permutation printed_eta(int n) {
  if (n < 1) throw OutOfRange("intersection count must be positive");
  auto img = detail::identity_images(4 * n);
  for (int e = 1; e <= 2 * n; e += 2) detail::set_cycle(img, {e, e + 2 * n});
  return Permutation::from_images(std::move(img));
}

// Reverses alpha: 2i-1 -> 2(n+1-i)-1+2n and 2i-1+2n -> 2(n+1-i)-1.
inline Permutation eta(int n) {
  if (n < 1) throw OutOfRange("intersection count must be positive");
  auto img = detail::identity_images(4 * n);
  for (int i = 1; i <= n; ++i) {
    const int o = 2 * i - 1;
    const int r = 2 * (n + 1 - i) - 1;
    img[o - 1] = r + 2 * n;
    img[o + 2 * n - 1] = r;
  }
  return Permutation::from_images(std::move(img));
}

// mu = (1,2)(3,4)...(4n-1,4n)
inline Permutation mu(int n) {
  if (n < 1) throw OutOfRange("intersection count must be positive");
  auto img = detail::identity_images(4 * n);
  for (int e = 1; e <= 4 * n; e += 2) detail::set_cycle(img, {e, e + 1});
  return Permutation::from_images(std::move(img));
}

inline Generators generators(int n) { return {kappa(n), delta(n), eta(n), mu(n)}; }

// t o sigma o t^{-1}, computed as e' = t(e) -> t(sigma(e)).
inline Permutation conjugate(const Permutation& t, const Permutation& sigma) {
  if (t.size() != sigma.size())
    throw SizeMismatch("cannot conjugate size " + std::to_string(sigma.size()) + " by size " +
                       std::to_string(t.size()));
  std::vector<int> img(static_cast<std::size_t>(sigma.size()));
  for (int e = 1; e <= sigma.size(); ++e) img[t.at(e) - 1] = t.at(sigma.at(e));
  return Permutation::from_images(std::move(img));
}

struct TwistLimits {
  int max_n = 16;
  std::size_t max_elements = 1'000'000;
};

class TwistGroup {
 public:
  // Breadth-first closure of the generators.
  explicit TwistGroup(int n, TwistLimits limits = {}) : n_(n) {
    if (n < 1) throw OutOfRange("intersection count must be positive");
    if (n > limits.max_n)
      throw GroupTooLarge("n = " + std::to_string(n) + " exceeds twist group bound " + std::to_string(limits.max_n));
    const Generators g = generators(n);
    const Permutation gens[] = {g.kappa, g.delta, g.eta, g.mu};
    using Key = std::vector<int>;
    struct KeyHash {
      std::size_t operator()(const Key& k) const { return boost::hash_range(k.begin(), k.end()); }
    };
    std::unordered_set<Key, KeyHash> seen;
    const Permutation id = Permutation::identity(4 * n);
    std::vector<Permutation> frontier{id};
    seen.insert(Key(id.images().begin(), id.images().end()));
    elements_.push_back(id);
    while (!frontier.empty()) {
      std::vector<Permutation> next;
      for (const auto& x : frontier) {
        for (const auto& h : gens) {
          Permutation y = compose(h, x);
          Key key(y.images().begin(), y.images().end());
          if (!seen.insert(std::move(key)).second) continue;
          if (seen.size() > limits.max_elements)
            throw GroupTooLarge("twist group closure exceeds " + std::to_string(limits.max_elements) + " elements");
          elements_.push_back(y);
          next.push_back(std::move(y));
        }
      }
      frontier = std::move(next);
    }
    std::sort(elements_.begin(), elements_.end());
  }

  int n() const noexcept { return n_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  bool contains(const Permutation& p) const { return std::binary_search(elements_.begin(), elements_.end(), p); }

 private:
  int n_;
  std::vector<Permutation> elements_;
};

struct Equivalence {
  std::optional<Permutation> witness;  // t with t o sigma1 o t^{-1} = sigma2
  // True when both inputs are minimal, where a missing witness also rules
  // out equivalence. Otherwise only a found witness is conclusive.
  bool decisive = false;
};

inline Equivalence are_equivalent(const FillingPermutation& a, const FillingPermutation& b, const TwistGroup& group) {
  if (a.n() != b.n() || group.n() != a.n())
    throw SizeMismatch("equivalence needs equal n (got " + std::to_string(a.n()) + " and " + std::to_string(b.n()) +
                       ")");
  Equivalence out;
  out.decisive = is_minimal(a) && is_minimal(b);
  if (cycle_count(a.sigma()) != cycle_count(b.sigma())) return out;
  for (const auto& t : group.elements()) {
    if (conjugate(t, a.sigma()) == b.sigma()) {
      out.witness = t;
      break;
    }
  }
  return out;
}

inline Equivalence are_equivalent(const FillingPermutation& a, const FillingPermutation& b) {
  if (a.n() != b.n())
    throw SizeMismatch("equivalence needs equal n (got " + std::to_string(a.n()) + " and " + std::to_string(b.n()) +
                       ")");
  return are_equivalent(a, b, TwistGroup(a.n()));
}

// Least one-line form over the T-orbit.
inline Permutation canonical_form(const FillingPermutation& fp, const TwistGroup& group) {
  if (group.n() != fp.n()) throw SizeMismatch("twist group built for a different n");
  std::optional<Permutation> best;
  for (const auto& t : group.elements()) {
    Permutation c = conjugate(t, fp.sigma());
    if (!best || c < *best) best = std::move(c);
  }
  return *best;
}

inline Permutation canonical_form(const FillingPermutation& fp) { return canonical_form(fp, TwistGroup(fp.n())); }

}  // namespace fillperm
