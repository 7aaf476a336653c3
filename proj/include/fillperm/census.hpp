#pragma once

// Exhaustive enumeration of filling permutations for small n and counting
// of T-orbits.

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "fillperm/errors.hpp"
#include "fillperm/filling.hpp"
#include "fillperm/permutation.hpp"
#include "fillperm/surgery.hpp"
#include "fillperm/twist.hpp"

namespace fillperm {

struct EnumerateOptions {
  bool single_cycle = false;
  std::optional<int> max_n;  // default: FILLPERM_MAX_N, else 7
  unsigned threads = 1;
};

inline int census_bound(const EnumerateOptions& opt) {
  if (opt.max_n) return *opt.max_n;
  if (const char* env = std::getenv("FILLPERM_MAX_N")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw PreconditionError(std::string("FILLPERM_MAX_N is not an integer: ") + env);
    }
  }
  return 7;
}

namespace detail {

class Search {
 public:
  Search(int n, bool single_cycle) : n_(n), m_(4 * n), single_(single_cycle), t_(tau(n)) {
    img_.assign(static_cast<std::size_t>(m_) + 1, 0);
    pre_.assign(static_cast<std::size_t>(m_) + 1, 0);
  }

  // Binds sigma(e) = f and everything the equation forces from it.
  // Returns false, with the partial bindings still on the trail, on conflict.
  bool bind(int e, int f) {
    std::vector<std::pair<int, int>> todo{{e, f}};
    while (!todo.empty()) {
      auto [u, v] = todo.back();
      todo.pop_back();
      if (img_[u]) {
        if (img_[u] != v) return false;
        continue;
      }
      if ((u - v) % 2 == 0 || pre_[v]) return false;
      img_[u] = v;
      pre_[v] = u;
      trail_.push_back(u);
      if (single_ && closes_early(u)) return false;
      todo.push_back({opposite(v, n_), t_.at(u)});
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const int u = trail_.back();
      trail_.pop_back();
      pre_[img_[u]] = 0;
      img_[u] = 0;
    }
  }

  std::size_t mark() const { return trail_.size(); }

  int first_free() const {
    for (int e = 1; e <= m_; ++e)
      if (!img_[e]) return e;
    return 0;
  }

  // Unused targets of opposite parity to e.
  std::vector<int> choices(int e) const {
    std::vector<int> out;
    for (int f = e % 2 ? 2 : 1; f <= m_; f += 2)
      if (!pre_[f]) out.push_back(f);
    return out;
  }

  void run(std::vector<Permutation>& out) {
    const int e = first_free();
    if (!e) {
      out.push_back(Permutation::from_images(std::vector<int>(img_.begin() + 1, img_.end())));
      return;
    }
    for (int f : choices(e)) {
      const std::size_t mk = mark();
      if (bind(e, f)) run(out);
      undo(mk);
    }
  }

 private:
  bool closes_early(int u) const {
    int len = 1;
    for (int e = img_[u]; e; e = img_[e], ++len) {
      if (e == u) return len < m_;
    }
    return false;
  }

  int n_, m_;
  bool single_;
  Permutation t_;
  std::vector<int> img_, pre_, trail_;
};

}  // namespace detail

// Every sigma on 4n symbols solving the filling equation, sorted.
inline std::vector<Permutation> enumerate_filling(int n, const EnumerateOptions& opt = {}) {
  if (n < 1) throw OutOfRange("intersection count must be positive");
  const int bound = census_bound(opt);
  if (n > bound)
    throw BoundExceeded("n = " + std::to_string(n) + " exceeds census bound " + std::to_string(bound));
  std::vector<Permutation> out;
  detail::Search root(n, opt.single_cycle);
  const std::vector<int> first = root.choices(1);
  const unsigned workers = std::max(1u, std::min<unsigned>(opt.threads, static_cast<unsigned>(first.size())));
  if (workers == 1) {
    root.run(out);
  } else {
    std::vector<std::vector<Permutation>> parts(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        detail::Search s(n, opt.single_cycle);
        for (std::size_t c = w; c < first.size(); c += workers) {
          const std::size_t mk = s.mark();
          if (s.bind(1, first[c])) s.run(parts[w]);
          s.undo(mk);
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct CensusRecord {
  int n = 0;
  int c = 0;
  int genus = 0;
  Permutation canonical_form;
  std::size_t orbit_size_raw = 0;
  bool decomposable = false;
};

// Groups solutions into T-orbits, one record per orbit, sorted by canonical
// form.
inline std::vector<CensusRecord> census_records(const std::vector<Permutation>& solutions, int n) {
  std::map<Permutation, std::size_t> orbits;
  if (solutions.empty()) return {};
  const TwistGroup group(n);
  for (const auto& s : solutions) ++orbits[canonical_form(validate(s, n), group)];
  std::vector<CensusRecord> out;
  for (const auto& [canon, count] : orbits) {
    const FillingPermutation fp = validate(canon, n);
    CensusRecord r;
    r.n = n;
    r.c = region_count(fp);
    r.genus = genus(fp);
    r.canonical_form = canon;
    r.orbit_size_raw = count;
    r.decomposable = is_minimal(fp) && r.genus > 1 && !find_decompositions(fp).empty();
    out.push_back(std::move(r));
  }
  return out;
}

struct OrbitCount {
  std::size_t orbits = 0;  // N(g) for g = (n+1)/2
  std::size_t raw = 0;
  std::vector<CensusRecord> records;
};

inline OrbitCount count_orbits(int n, unsigned threads = 1) {
  if (n < 1 || n % 2 == 0) throw PreconditionError("orbit counting needs odd n");
  EnumerateOptions opt;
  opt.single_cycle = true;
  opt.threads = threads;
  const auto solutions = enumerate_filling(n, opt);
  OrbitCount out;
  out.raw = solutions.size();
  out.records = census_records(solutions, n);
  out.orbits = out.records.size();
  return out;
}

// True when conjugating any solution by any generator of T gives another.
inline bool closed_under_twists(const std::vector<Permutation>& solutions, int n) {
  const std::set<Permutation> all(solutions.begin(), solutions.end());
  const Generators g = generators(n);
  for (const auto& s : solutions)
    for (const auto* t : {&g.kappa, &g.delta, &g.eta, &g.mu})
      if (!all.count(conjugate(*t, s))) return false;
  return true;
}

// 2^{2g-2} (4g-5) (2g-3)!
inline boost::multiprecision::cpp_int upper_bound(int g) {
  if (g <= 2) throw PreconditionError("upper bound is defined for g > 2");
  boost::multiprecision::cpp_int r = 1;
  r <<= 2 * g - 2;
  r *= 4 * g - 5;
  for (int f = 2; f <= 2 * g - 3; ++f) r *= f;
  return r;
}

inline nlohmann::json to_json(const CensusRecord& r) {
  return {{"n", r.n},
          {"c", r.c},
          {"genus", r.genus},
          {"canonical_form", format_cycles(r.canonical_form)},
          {"orbit_size_raw", r.orbit_size_raw},
          {"decomposable", r.decomposable}};
}

inline void write_jsonl(std::ostream& os, const std::vector<CensusRecord>& records) {
  for (const auto& r : records) os << to_json(r).dump() << '\n';
}

}  // namespace fillperm
