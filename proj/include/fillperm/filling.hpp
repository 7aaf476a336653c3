#pragma once

// Filling permutations: the fixed permutations Q and tau, the defining
// equation sigma(Q^N(sigma(e))) = tau(e) with N = 2n, edge labels, genus,
// vertices (left-edge orbits), green vertices and Z_k pieces.
//
// Edge labels for i in 1..n:
//   alpha_i -> 2i-1, beta_i -> 2i, bar alpha_i -> 2i-1+2n, bar beta_i -> 2i+2n.

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fillperm/errors.hpp"
#include "fillperm/permutation.hpp"

namespace fillperm {

// Q = (1,2,...,4n).
inline Permutation big_q(int n) {
  if (n < 1) throw OutOfRange("intersection count must be positive");
  std::vector<int> img(static_cast<std::size_t>(4 * n));
  for (int e = 1; e <= 4 * n; ++e) img[e - 1] = e % (4 * n) + 1;
  return Permutation::from_images(std::move(img));
}

// (1,3,...,2n-1)(2,4,...,2n)(4n-1,4n-3,...,2n+1)(4n,4n-2,...,2n+2)
inline Permutation tau(int n) {
  if (n < 1) throw OutOfRange("intersection count must be positive");
  const int m = 4 * n;
  const int half = 2 * n;
  std::vector<int> img(static_cast<std::size_t>(m));
  for (int e = 1; e <= m; ++e) {
    if (e <= half)
      img[e - 1] = e + 2 <= half ? e + 2 : e + 2 - half;  // forward within positives
    else
      img[e - 1] = e - 2 > half ? e - 2 : e - 2 + half;  // backward within negatives
  }
  return Permutation::from_images(std::move(img));
}

// The other copy of the same arc: Q^N(e) with N = 2n.
inline int opposite(int e, int n) {
  if (n < 1 || e < 1 || e > 4 * n)
    throw OutOfRange("symbol " + std::to_string(e) + " outside 1.." + std::to_string(4 * n));
  return (e + 2 * n - 1) % (4 * n) + 1;
}

// Q^N as a permutation.
inline Permutation opposite_map(int n) { return power(big_q(n), 2LL * n); }

enum class Curve { alpha, beta };
enum class Orientation { positive, negative };

struct EdgeInfo {
  Curve curve;
  int index;  // arc number in 1..n
  Orientation orientation;
  friend bool operator==(const EdgeInfo&, const EdgeInfo&) = default;
};

inline EdgeInfo edge_info(int e, int n) {
  if (n < 1 || e < 1 || e > 4 * n)
    throw OutOfRange("symbol " + std::to_string(e) + " outside 1.." + std::to_string(4 * n));
  const Orientation o = e <= 2 * n ? Orientation::positive : Orientation::negative;
  const int base = e <= 2 * n ? e : e - 2 * n;
  return base % 2 ? EdgeInfo{Curve::alpha, (base + 1) / 2, o} : EdgeInfo{Curve::beta, base / 2, o};
}

inline int edge_number(const EdgeInfo& info, int n) {
  if (n < 1 || info.index < 1 || info.index > n)
    throw OutOfRange("arc index " + std::to_string(info.index) + " outside 1.." + std::to_string(n));
  const int base = info.curve == Curve::alpha ? 2 * info.index - 1 : 2 * info.index;
  return info.orientation == Orientation::positive ? base : base + 2 * n;
}

inline std::string to_string(const EdgeInfo& info) {
  std::string s = info.curve == Curve::alpha ? "alpha" : "beta";
  if (info.orientation == Orientation::negative) s = "bar " + s;
  return s + "_" + std::to_string(info.index);
}

inline bool is_positive(int e, int n) { return e <= 2 * n; }

// A permutation on 4n symbols known to satisfy the filling equations. Only
// validate() constructs one.
class FillingPermutation {
 public:
  int n() const noexcept { return n_; }
  int size() const noexcept { return 4 * n_; }
  const Permutation& sigma() const noexcept { return sigma_; }

  friend bool operator==(const FillingPermutation&, const FillingPermutation&) = default;

 private:
  FillingPermutation(int n, Permutation sigma) : n_(n), sigma_(std::move(sigma)) {}
  friend FillingPermutation validate(const Permutation& sigma, std::optional<int> n);

  int n_ = 0;
  Permutation sigma_;
};

// Accepts sigma iff every cycle alternates parity and
// sigma(Q^N(sigma(e))) = tau(e) for every e. n defaults to size/4.
inline FillingPermutation validate(const Permutation& sigma, std::optional<int> n = std::nullopt) {
  const int m = sigma.size();
  if (m == 0 || m % 4 != 0)
    throw ValidationError(ValidationError::Kind::size_not_multiple_of_4, 0,
                          "permutation size " + std::to_string(m) + " is not a positive multiple of 4");
  const int nn = n.value_or(m / 4);
  if (4 * nn != m)
    throw ValidationError(ValidationError::Kind::size_not_multiple_of_4, 0,
                          "permutation size " + std::to_string(m) + " does not equal 4n = " + std::to_string(4 * nn));
  for (int e = 1; e <= m; ++e) {
    if ((sigma.at(e) - e) % 2 == 0)
      throw ValidationError(ValidationError::Kind::alternation_violation, e,
                            "alternation violated: " + std::to_string(e) + " -> " + std::to_string(sigma.at(e)) +
                                " keeps parity");
  }
  const Permutation t = tau(nn);
  for (int e = 1; e <= m; ++e) {
    if (sigma.at(opposite(sigma.at(e), nn)) != t.at(e))
      throw ValidationError(ValidationError::Kind::equation_violation, e,
                            "filling equation fails at " + std::to_string(e));
  }
  return FillingPermutation(nn, sigma);
}

inline int region_count(const FillingPermutation& fp) { return static_cast<int>(cycle_count(fp.sigma())); }

// g = 1 + (n - c)/2.
inline int genus(const FillingPermutation& fp) { return 1 + (fp.n() - region_count(fp)) / 2; }

inline bool is_minimal(const FillingPermutation& fp) { return region_count(fp) == 1; }

// One step of e -> Q^N(sigma(e)): the next left edge at the same vertex.
inline int left_edge_step(const FillingPermutation& fp, int e) { return opposite(fp.sigma().at(e), fp.n()); }

// Left edges of the vertex containing e, in Q^N o sigma order starting at e.
inline std::vector<int> vertex_orbit(const FillingPermutation& fp, int e) {
  std::vector<int> orbit{e};
  for (int f = left_edge_step(fp, e); f != e; f = left_edge_step(fp, f)) orbit.push_back(f);
  return orbit;
}

// All vertices, each orbit starting at its minimum, sorted by minimum.
inline std::vector<std::vector<int>> vertices(const FillingPermutation& fp) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(static_cast<std::size_t>(fp.size()) + 1, 0);
  for (int e = 1; e <= fp.size(); ++e) {
    if (seen[e]) continue;
    auto orbit = vertex_orbit(fp, e);
    for (int f : orbit) seen[f] = 1;
    out.push_back(std::move(orbit));
  }
  return out;
}

namespace detail {

// region_of[e] = index of the sigma cycle containing e.
inline std::vector<int> region_index(const std::vector<Cycle>& regions, int size) {
  std::vector<int> idx(static_cast<std::size_t>(size) + 1, -1);
  for (std::size_t r = 0; r < regions.size(); ++r)
    for (int e : regions[r]) idx[e] = static_cast<int>(r);
  return idx;
}

inline bool meets_all(const std::vector<int>& orbit, const std::vector<int>& region_of, std::size_t regions) {
  std::vector<char> hit(regions, 0);
  for (int e : orbit) hit[region_of[e]] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
}

}  // namespace detail

struct SurfaceInfo {
  int n = 0;
  int genus = 0;
  int region_count = 0;
  std::vector<Cycle> regions;
  std::vector<std::vector<int>> vertices;
  std::vector<std::vector<int>> green_vertices;
};

// The corner at a vertex with left edge e lies in the region whose cycle
// contains e; a vertex is green when its corners meet every region.
inline SurfaceInfo surface_info(const FillingPermutation& fp) {
  SurfaceInfo info;
  info.n = fp.n();
  info.regions = cycles_of(fp.sigma());
  info.region_count = static_cast<int>(info.regions.size());
  info.genus = 1 + (info.n - info.region_count) / 2;
  info.vertices = vertices(fp);
  const auto region_of = detail::region_index(info.regions, fp.size());
  for (const auto& v : info.vertices)
    if (detail::meets_all(v, region_of, info.regions.size())) info.green_vertices.push_back(v);
  return info;
}

// Both curves begin and end at the green vertex: the left-edge orbit of 2n-1
// is {2n-1, 2n, 2n+1, 2n+2} and that vertex is green.
inline bool green_normalized(const FillingPermutation& fp) {
  const int n = fp.n();
  auto orbit = vertex_orbit(fp, 2 * n - 1);
  std::sort(orbit.begin(), orbit.end());
  if (orbit != std::vector<int>{2 * n - 1, 2 * n, 2 * n + 1, 2 * n + 2}) return false;
  const auto regions = cycles_of(fp.sigma());
  return detail::meets_all(orbit, detail::region_index(regions, fp.size()), regions.size());
}

// Region sizes around the green vertex, modulo cyclic rotation only.
class ZType {
 public:
  ZType() = default;
  explicit ZType(std::array<int, 4> sizes) : quad_(canonical_rotation(sizes)) {}

  const std::array<int, 4>& quad() const noexcept { return quad_; }
  int sum() const noexcept { return quad_[0] + quad_[1] + quad_[2] + quad_[3]; }
  // k with sum = 8k + 8.
  int piece_genus() const noexcept { return (sum() - 8) / 8; }
  bool well_formed() const noexcept {
    return std::all_of(quad_.begin(), quad_.end(), [](int v) { return v > 2 && v % 2 == 0; }) && sum() % 8 == 0;
  }

  static std::array<int, 4> canonical_rotation(const std::array<int, 4>& q) {
    std::array<int, 4> best = q;
    for (int r = 1; r < 4; ++r) {
      std::array<int, 4> rot{q[r % 4], q[(r + 1) % 4], q[(r + 2) % 4], q[(r + 3) % 4]};
      if (rot < best) best = rot;
    }
    return best;
  }

  friend bool operator==(const ZType&, const ZType&) = default;
  friend auto operator<=>(const ZType&, const ZType&) = default;

 private:
  std::array<int, 4> quad_{};
};

inline std::string to_string(const ZType& t) {
  const auto& q = t.quad();
  return "(" + std::to_string(q[0]) + "," + std::to_string(q[1]) + "," + std::to_string(q[2]) + "," +
         std::to_string(q[3]) + ")";
}

// Type of a four-region surface, read at the normalized green vertex when
// there is one, else at the green vertex with the smallest left edge.
inline std::optional<ZType> z_type(const FillingPermutation& fp) {
  const auto regions = cycles_of(fp.sigma());
  if (regions.size() != 4) return std::nullopt;
  const auto region_of = detail::region_index(regions, fp.size());
  std::vector<int> orbit;
  if (green_normalized(fp)) {
    orbit = vertex_orbit(fp, 2 * fp.n() - 1);
  } else {
    for (const auto& v : vertices(fp)) {
      if (detail::meets_all(v, region_of, regions.size())) {
        orbit = v;
        break;
      }
    }
  }
  if (orbit.size() != 4) return std::nullopt;
  std::array<int, 4> sizes{};
  for (int k = 0; k < 4; ++k) sizes[k] = static_cast<int>(regions[region_of[orbit[k]]].size());
  return ZType(sizes);
}

// Genus k, 2k+2 intersections, four regions, at least one green vertex.
inline bool is_z_piece(const FillingPermutation& fp, int k) {
  if (k < 1 || fp.n() != 2 * k + 2) return false;
  const auto info = surface_info(fp);
  return info.genus == k && info.region_count == 4 && !info.green_vertices.empty();
}

}  // namespace fillperm
