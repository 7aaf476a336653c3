#pragma once

// Exact permutation algebra on {1..M}.
//
// Symbols are 1-based. Composition applies right to left:
// compose(p, q)(e) == p(q(e)), so the written product "s Q s" means
// e -> s(Q(s(e))).

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fillperm/errors.hpp"

namespace fillperm {

using Cycle = std::vector<int>;

class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int size) {
    if (size < 0) throw OutOfRange("permutation size must be nonnegative");
    Permutation p;
    p.images_.resize(static_cast<std::size_t>(size));
    std::iota(p.images_.begin(), p.images_.end(), 1);
    return p;
  }

  // images[e-1] is the image of e. Throws unless the images form a bijection
  // of {1..images.size()}.
  static Permutation from_images(std::vector<int> images) {
    const int m = static_cast<int>(images.size());
    std::vector<char> hit(images.size(), 0);
    for (int v : images) {
      if (v < 1 || v > m) throw OutOfRange("image " + std::to_string(v) + " outside 1.." + std::to_string(m));
      if (hit[v - 1]) throw Error("image " + std::to_string(v) + " repeated; not a bijection");
      hit[v - 1] = 1;
    }
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  // Product of the given cycles, leftmost cycle applied last. Each cycle must
  // have distinct entries in 1..size.
  static Permutation from_cycles(int size, const std::vector<Cycle>& cycles) {
    Permutation result = identity(size);
    for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
      const Cycle& c = *it;
      Permutation step = identity(size);
      std::vector<char> seen(static_cast<std::size_t>(size) + 1, 0);
      for (std::size_t k = 0; k < c.size(); ++k) {
        const int a = c[k];
        if (a < 1 || a > size) throw OutOfRange("symbol " + std::to_string(a) + " outside 1.." + std::to_string(size));
        if (seen[a]) throw Error("symbol " + std::to_string(a) + " repeated within a cycle");
        seen[a] = 1;
        step.images_[a - 1] = c[(k + 1) % c.size()];
      }
      result = step.after(result);
    }
    return result;
  }

  int size() const noexcept { return static_cast<int>(images_.size()); }

  int operator()(int e) const {
    if (e < 1 || e > size()) throw OutOfRange("symbol " + std::to_string(e) + " outside 1.." + std::to_string(size()));
    return images_[static_cast<std::size_t>(e - 1)];
  }

  // Unchecked access for hot loops.
  int at(int e) const noexcept { return images_[static_cast<std::size_t>(e - 1)]; }

  std::span<const int> images() const noexcept { return images_; }

  bool is_identity() const noexcept {
    for (int e = 1; e <= size(); ++e)
      if (at(e) != e) return false;
    return true;
  }

  // (*this) applied after `first`: e -> this(first(e)).
  Permutation after(const Permutation& first) const {
    if (first.size() != size())
      throw SizeMismatch("cannot compose permutations of sizes " + std::to_string(size()) + " and " +
                         std::to_string(first.size()));
    Permutation r;
    r.images_.resize(images_.size());
    for (int e = 1; e <= size(); ++e) r.images_[e - 1] = at(first.at(e));
    return r;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  // Lexicographic on the one-line form (sizes compared first).
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.images_.begin(), a.images_.end(), b.images_.begin(),
                                                  b.images_.end());
  }

 private:
  std::vector<int> images_;
};

// r(e) = p(q(e)).
inline Permutation compose(const Permutation& p, const Permutation& q) { return p.after(q); }

inline Permutation inverse(const Permutation& p) {
  std::vector<int> inv(static_cast<std::size_t>(p.size()));
  for (int e = 1; e <= p.size(); ++e) inv[p.at(e) - 1] = e;
  return Permutation::from_images(std::move(inv));
}

inline Permutation power(const Permutation& p, long long k) {
  Permutation base = k < 0 ? inverse(p) : p;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1 : static_cast<unsigned long long>(k);
  Permutation result = Permutation::identity(p.size());
  while (e) {
    if (e & 1) result = compose(result, base);
    base = compose(base, base);
    e >>= 1;
  }
  return result;
}

// p^m(e) without materializing p^m.
inline int apply_power(const Permutation& p, int e, int m) {
  for (int k = 0; k < m; ++k) e = p.at(e);
  return e;
}

// Disjoint cycles covering {1..M}, each rotated to start at its minimum,
// sorted by that minimum. Fixed points appear as 1-cycles.
inline std::vector<Cycle> cycles_of(const Permutation& p) {
  std::vector<Cycle> out;
  std::vector<char> seen(static_cast<std::size_t>(p.size()) + 1, 0);
  for (int s = 1; s <= p.size(); ++s) {
    if (seen[s]) continue;
    Cycle c;
    for (int e = s; !seen[e]; e = p.at(e)) {
      seen[e] = 1;
      c.push_back(e);
    }
    out.push_back(std::move(c));
  }
  return out;
}

inline std::size_t cycle_count(const Permutation& p) { return cycles_of(p).size(); }

inline long long order(const Permutation& p) {
  long long r = 1;
  for (const auto& c : cycles_of(p)) r = std::lcm(r, static_cast<long long>(c.size()));
  return r;
}

inline std::string format_cycle(const Cycle& c) {
  std::string s = "(";
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(c[k]);
  }
  return s + ")";
}

// Canonical text: cycles_of order, fixed points omitted, identity "()".
inline std::string format_cycles(const Permutation& p) {
  std::string s;
  for (const auto& c : cycles_of(p))
    if (c.size() > 1) s += format_cycle(c);
  return s.empty() ? "()" : s;
}

// Reads "(a,b,c)(d,e)..." with arbitrary whitespace. Non-disjoint cycles are
// multiplied as written (rightmost applied first). "()" and "" are the identity.
inline Permutation parse_cycles(std::string_view text, int size) {
  if (size < 1) throw OutOfRange("permutation size must be positive");
  std::vector<Cycle> cycles;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '('", static_cast<long>(pos));
    ++pos;
    Cycle c;
    std::vector<char> seen(static_cast<std::size_t>(size) + 1, 0);
    skip_ws();
    if (pos < text.size() && text[pos] == ')') {
      ++pos;
      skip_ws();
      continue;
    }
    while (true) {
      skip_ws();
      const std::size_t start = pos;
      long long v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        if (v > 1'000'000'000LL) throw ParseError("symbol too large", static_cast<long>(start));
        ++pos;
      }
      if (pos == start) throw ParseError("expected a positive integer", static_cast<long>(pos));
      if (v < 1 || v > size)
        throw ParseError("symbol " + std::to_string(v) + " out of range 1.." + std::to_string(size),
                         static_cast<long>(start));
      if (seen[v]) throw ParseError("repeated symbol " + std::to_string(v), static_cast<long>(start));
      seen[v] = 1;
      c.push_back(static_cast<int>(v));
      skip_ws();
      if (pos >= text.size()) throw ParseError("unterminated cycle", static_cast<long>(pos));
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      throw ParseError("expected ',' or ')'", static_cast<long>(pos));
    }
    cycles.push_back(std::move(c));
    skip_ws();
  }
  return Permutation::from_cycles(size, cycles);
}

}  // namespace fillperm
