#pragma once

// Connected sums F_l # Z_k of filling permutations and their inverse:
// attachment sites, the assembly map, the splice, decomposition search,
// extraction of the piece and remainder, and the round trip between them.

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "fillperm/errors.hpp"
#include "fillperm/filling.hpp"
#include "fillperm/permutation.hpp"
#include "fillperm/twist.hpp"

namespace fillperm {

// ---------------------------------------------------------------- assembly

struct AttachmentSite {
  int i = 0;  // positive odd left edge of the deleted vertex
  int j = 0;  // positive even left edge of the same vertex
  friend bool operator==(const AttachmentSite&, const AttachmentSite&) = default;
};

inline AttachmentSite attachment_site(const FillingPermutation& host, int i) {
  const int n = host.n();
  if (i < 1 || i > 2 * n || i % 2 == 0)
    throw NotAVertexAnchor("site " + std::to_string(i) + " is not a positive odd symbol");
  const auto orbit = vertex_orbit(host, i);
  int j = 0;
  for (int e : orbit) {
    if (e % 2 == 0 && e <= 2 * n) {
      if (j) throw NotAVertexAnchor("vertex of " + std::to_string(i) + " has two positive even left edges");
      j = e;
    }
  }
  if (!j) throw NotAVertexAnchor("vertex of " + std::to_string(i) + " has no positive even left edge");
  const int i2 = i + 2 > 2 * n - 1 ? 1 : i + 2;
  const int j2 = j + 2 > 2 * n ? 2 : j + 2;
  std::vector<int> want{i, j, opposite(i2, n), opposite(j2, n)};
  std::vector<int> got = orbit;
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  if (want != got) throw NotAVertexAnchor("vertex of " + std::to_string(i) + " is not bounded by i, i+2, j, j+2");
  return {i, j};
}

// Whether the left-edge step at i lands on j directly (forward) or only
// after going round the vertex (backward).
enum class Handedness { forward, backward };

inline Handedness handedness(const FillingPermutation& fp, int i) {
  const AttachmentSite s = attachment_site(fp, i);
  return left_edge_step(fp, i) == s.j ? Handedness::forward : Handedness::backward;
}

// 2p -> 2(n+1-p)+2n, 2p+2n -> 2(n+1-p).
inline Permutation beta_reversal(int n) {
  std::vector<int> img(static_cast<std::size_t>(4 * n));
  std::iota(img.begin(), img.end(), 1);
  for (int p = 1; p <= n; ++p) {
    const int r = 2 * (n + 1 - p);
    img[2 * p - 1] = r + 2 * n;
    img[2 * p + 2 * n - 1] = r;
  }
  return Permutation::from_images(std::move(img));
}

// Relabels the host F_l and the piece Z_k into the labels of F_{k+l}.
class AssemblyMap {
 public:
  AssemblyMap(int k, int l, int i, int j) : k_(k), l_(l), i_(i), j_(j) {
    if (k < 1 || l < 1) throw PreconditionError("assembly needs k >= 1 and l >= 1");
    if (i < 1 || i > 4 * l - 3 || i % 2 == 0 || j < 2 || j > 4 * l - 2 || j % 2)
      throw PreconditionError("assembly site (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
  }

  int k() const noexcept { return k_; }
  int l() const noexcept { return l_; }
  // 2n of the result.
  int half() const noexcept { return 4 * (k_ + l_) - 2; }
  int size() const noexcept { return 2 * half(); }

  int host(int v) const {
    if (v < 1 || v > 8 * l_ - 4) throw CaseGap("host label " + std::to_string(v) + " outside the host");
    if (v > 4 * l_ - 2) return host(v - 4 * l_ + 2) + half();
    if ((v % 2 && v <= i_) || (v % 2 == 0 && v <= j_)) return v;
    return v + 4 * k_;
  }

  int piece(int w) const {
    if (w < 1 || w > 8 * k_ + 8) throw CaseGap("piece label " + std::to_string(w) + " outside the piece");
    const int np = half();
    int r = 0;
    int hi = 0;
    if (w % 2 && w <= 4 * k_ + 3) {
      r = w + i_ + 4 * (k_ + l_) - 3;
      hi = 2 * np;
    } else if (w % 2 == 0 && w <= 4 * k_ + 4) {
      r = w + j_ + 4 * (k_ + l_) - 4;
      hi = 2 * np;
    } else if (w % 2) {
      r = w + i_ - 4 * k_ - 5;
      hi = np;
    } else {
      r = w + j_ - 4 * k_ - 6;
      hi = np;
    }
    if (r > hi) r -= np;  // wrap within the same sign class
    if (r < 1 || r > 2 * np) throw CaseGap("piece label " + std::to_string(w) + " maps outside the result");
    return r;
  }

 private:
  int k_, l_, i_, j_;
};

// Cycles of sigma_z^{-1}. Before reversal the first cycle starts at 1 and
// each later cycle starts at the opposite of the previous last entry.
inline std::vector<Cycle> arrange_piece_cycles(const FillingPermutation& z) {
  const int n = z.n();
  if (!green_normalized(z)) throw ArrangementImpossible("piece is not green-normalized");
  const auto cycles = cycles_of(z.sigma());
  if (cycles.size() != 4) throw ArrangementImpossible("piece does not have four regions");
  std::vector<int> owner(static_cast<std::size_t>(z.size()) + 1, -1);
  for (std::size_t c = 0; c < cycles.size(); ++c)
    for (int e : cycles[c]) owner[e] = static_cast<int>(c);
  std::vector<Cycle> out;
  std::vector<char> used(cycles.size(), 0);
  int start = 1;
  for (int step = 0; step < 4; ++step) {
    const int c = owner[start];
    if (used[c]) throw ArrangementImpossible("chain of opposites revisits a region");
    used[c] = 1;
    Cycle rot = cycles[c];
    std::rotate(rot.begin(), std::find(rot.begin(), rot.end(), start), rot.end());
    start = opposite(rot.back(), n);
    out.push_back(std::move(rot));
  }
  if (start != 1) throw ArrangementImpossible("chain of opposites does not close at 1");
  for (auto& c : out) std::reverse(c.begin(), c.end());
  return out;
}

// Connected sum of a minimal host F_l and a green-normalized piece Z_k at
// the vertex of host symbol i.
inline FillingPermutation assemble(const FillingPermutation& host, const FillingPermutation& piece, int i) {
  if (!is_minimal(host)) throw PreconditionError("host is not minimal");
  if (host.n() % 2 == 0) throw PreconditionError("host has an even intersection count");
  if (piece.n() % 2 || piece.n() < 4) throw PreconditionError("piece does not have 2k+2 intersections");
  const int l = (host.n() + 1) / 2;
  const int k = piece.n() / 2 - 1;
  if (!is_z_piece(piece, k)) throw PreconditionError("piece is not a Z_" + std::to_string(k));
  const AttachmentSite site = attachment_site(host, i);

  FillingPermutation z = piece;
  if (host.n() > 1 && handedness(host, i) != handedness(piece, 2 * piece.n() - 1))
    z = validate(conjugate(beta_reversal(piece.n()), piece.sigma()));

  const AssemblyMap a(k, l, site.i, site.j);
  std::vector<int> img(static_cast<std::size_t>(a.size()), 0);
  for (int v = 1; v <= host.size(); ++v) img[a.host(v) - 1] = a.host(host.sigma().at(v));
  for (const auto& c : arrange_piece_cycles(z)) {
    for (std::size_t t = 0; t + 1 < c.size(); ++t) img[a.piece(c[t]) - 1] = a.piece(c[t + 1]);
  }
  Permutation sigma;
  try {
    sigma = Permutation::from_images(std::move(img));
  } catch (const Error& e) {
    throw InternalError(std::string("splice is not a bijection: ") + e.what());
  }
  try {
    FillingPermutation out = validate(sigma);
    if (!is_minimal(out)) throw InternalError("assembled permutation has more than one region");
    return out;
  } catch (const ValidationError& e) {
    throw InternalError(std::string("assembled permutation is not filling: ") + e.what());
  }
}

// ---------------------------------------------------------- decomposition

struct Decomposition {
  int k = 0;  // genus of the piece
  int l = 0;  // genus of the remainder
  std::array<int, 4> anchors{};  // x, a, y, b
  std::array<int, 4> type{};     // r, s, t, u in anchor order

  int x() const noexcept { return anchors[0]; }
  int a() const noexcept { return anchors[1]; }
  int y() const noexcept { return anchors[2]; }
  int b() const noexcept { return anchors[3]; }
  // Z_1 pieces have no reference fixture to check against.
  bool unattested() const noexcept { return k == 1; }

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
  friend auto operator<(const Decomposition& p, const Decomposition& q) {
    return std::tie(p.k, p.type, p.anchors) < std::tie(q.k, q.type, q.anchors);
  }
};

inline std::string to_string(const Decomposition& d) {
  return "k=" + std::to_string(d.k) + " l=" + std::to_string(d.l) + " x=" + std::to_string(d.x()) +
         " a=" + std::to_string(d.a()) + " y=" + std::to_string(d.y()) + " b=" + std::to_string(d.b()) + " type=(" +
         std::to_string(d.type[0]) + "," + std::to_string(d.type[1]) + "," + std::to_string(d.type[2]) + "," +
         std::to_string(d.type[3]) + ")" + (d.unattested() ? " unattested" : "");
}

// Rotates anchors and type together so the positive odd anchor comes first.
inline Decomposition canonical_rotation(Decomposition d, int n) {
  for (int r = 0; r < 4; ++r) {
    if (d.anchors[0] % 2 && d.anchors[0] <= 2 * n) return d;
    std::rotate(d.anchors.begin(), d.anchors.begin() + 1, d.anchors.end());
    std::rotate(d.type.begin(), d.type.begin() + 1, d.type.end());
  }
  throw PreconditionError("decomposition has no positive odd anchor");
}

namespace detail {

inline int genus_of_minimal(const FillingPermutation& fp) { return (fp.n() + 1) / 2; }

inline void require_decomposable_shape(const FillingPermutation& fp) {
  if (!is_minimal(fp)) throw PreconditionError("permutation is not minimal");
  if (genus_of_minimal(fp) < 2) throw PreconditionError("genus must exceed 1");
}

inline void require_type(int k, const std::array<int, 4>& type) {
  int sum = 0;
  for (int v : type) {
    if (v <= 2 || v % 2) throw PreconditionError("type entries must be even and greater than 2");
    sum += v;
  }
  if (sum != 8 * k + 8)
    throw PreconditionError("type sums to " + std::to_string(sum) + ", expected " + std::to_string(8 * k + 8));
}

// Position of every symbol along the single cycle of sigma.
inline std::vector<int> cycle_positions(const FillingPermutation& fp) {
  std::vector<int> pos(static_cast<std::size_t>(fp.size()) + 1, 0);
  int e = 1;
  for (int t = 0; t < fp.size(); ++t, e = fp.sigma().at(e)) pos[e] = t;
  return pos;
}

inline bool condition_one(const FillingPermutation& fp, const std::array<int, 4>& an, int k,
                          const std::array<int, 4>& type, const Permutation& tk) {
  const int n = fp.n();
  const auto& s = fp.sigma();
  for (int q = 0; q < 4; ++q)
    if (opposite(apply_power(s, an[q], type[q] - 1), n) != an[(q + 1) % 4]) return false;
  (void)k;
  return opposite(tk.at(an[0]), n) == an[2] && opposite(tk.at(an[1]), n) == an[3];
}

// No arc of gamma may start strictly inside another arc's run and leave it
// before that run ends.
inline bool condition_two(const std::vector<int>& pos, int length, const std::array<int, 4>& an,
                          const std::array<int, 4>& type) {
  for (int u = 0; u < 4; ++u) {
    for (int v = 0; v < 4; ++v) {
      if (u == v) continue;
      const int p = type[u];
      const int q = type[v];
      const int d = ((pos[an[v]] - pos[an[u]]) % length + length) % length;
      if (d >= 1 && d < p - 1 && !(p - 1 - d > q - 1)) return false;
    }
  }
  return true;
}

}  // namespace detail

inline bool check_decomposition(const FillingPermutation& fp, const std::array<int, 4>& anchors, int k,
                                const std::array<int, 4>& type) {
  detail::require_decomposable_shape(fp);
  const int g = detail::genus_of_minimal(fp);
  if (k < 1 || k > g - 1) throw PreconditionError("k must lie in 1.." + std::to_string(g - 1));
  detail::require_type(k, type);
  for (int e : anchors)
    if (e < 1 || e > fp.size()) throw OutOfRange("anchor " + std::to_string(e) + " outside the polygon");
  const Permutation tk = power(tau(fp.n()), 2LL * k + 1);
  if (!detail::condition_one(fp, anchors, k, type, tk)) return false;
  if (k == g - 1) return true;
  return detail::condition_two(detail::cycle_positions(fp), fp.size(), anchors, type);
}

// Every even composition of total into four parts >= 4.
inline std::vector<std::array<int, 4>> even_compositions(int total) {
  std::vector<std::array<int, 4>> out;
  for (int r = 4; r < total; r += 2)
    for (int s = 4; s < total - r; s += 2)
      for (int t = 4; t < total - r - s; t += 2)
        if (int u = total - r - s - t; u >= 4) out.push_back({r, s, t, u});
  return out;
}

// All decompositions F_g = F_l # Z_k, one per separating curve, sorted by
// (k, type, anchors). Empty when fp has genus 1.
inline std::vector<Decomposition> find_decompositions(const FillingPermutation& fp, std::optional<int> only_k = {}) {
  if (!is_minimal(fp)) throw PreconditionError("permutation is not minimal");
  const int g = detail::genus_of_minimal(fp);
  const int n = fp.n();
  const auto& s = fp.sigma();
  std::set<Decomposition> found;
  if (g < 2) return {};
  const auto pos = detail::cycle_positions(fp);
  for (int k = 1; k <= g - 1; ++k) {
    if (only_k && *only_k != k) continue;
    const Permutation tk = power(tau(n), 2LL * k + 1);
    for (const auto& type : even_compositions(8 * k + 8)) {
      for (int x = 1; x <= fp.size(); ++x) {
        const int a = opposite(apply_power(s, x, type[0] - 1), n);
        const int y = opposite(apply_power(s, a, type[1] - 1), n);
        const int b = opposite(apply_power(s, y, type[2] - 1), n);
        const std::array<int, 4> an{x, a, y, b};
        if (!detail::condition_one(fp, an, k, type, tk)) continue;
        if (k < g - 1 && !detail::condition_two(pos, fp.size(), an, type)) continue;
        found.insert(canonical_rotation(Decomposition{k, g - k, an, type}, n));
      }
    }
  }
  return {found.begin(), found.end()};
}

// Cuts the polygon along the four arcs of gamma, glues the pieces back along
// opposite edges and checks that gamma separates off exactly the four
// regions it cordons.
inline bool verify_separating(const FillingPermutation& fp, const Decomposition& d) {
  detail::require_decomposable_shape(fp);
  const int n = fp.n();
  const auto& s = fp.sigma();
  Cycle boundary;
  for (int e = 1, t = 0; t < fp.size(); ++t, e = s.at(e)) boundary.push_back(e);

  // Arc q runs from edge anchors[q] to edge sigma^{p-1}(anchors[q]).
  struct Cut {
    int order;  // terminal cuts precede initial cuts on the same edge
    int arc;
    bool initial;
    auto operator<=>(const Cut&) const = default;
  };
  std::array<std::pair<int, int>, 4> arcs{};
  std::map<int, std::vector<Cut>> cuts;
  for (int q = 0; q < 4; ++q) {
    const int u = d.anchors[q];
    const int t = apply_power(s, u, d.type[q] - 1);
    arcs[q] = {u, t};
    cuts[u].push_back({2, q, true});
    cuts[t].push_back({1, q, false});
  }
  for (auto& [e, cs] : cuts) std::sort(cs.begin(), cs.end());

  struct Item {
    bool point;
    int edge;     // segments
    int segment;  // segments
    int arc;      // points
    bool initial; // points
  };
  std::vector<Item> seq;
  std::map<std::pair<int, bool>, int> point_at;
  auto nseg = [&](int e) {
    auto it = cuts.find(e);
    return it == cuts.end() ? 1 : static_cast<int>(it->second.size()) + 1;
  };
  for (int e : boundary) {
    seq.push_back({false, e, 0, -1, false});
    auto it = cuts.find(e);
    if (it == cuts.end()) continue;
    for (std::size_t m = 0; m < it->second.size(); ++m) {
      const Cut& c = it->second[m];
      point_at[{c.arc, c.initial}] = static_cast<int>(seq.size());
      seq.push_back({true, 0, 0, c.arc, c.initial});
      seq.push_back({false, e, static_cast<int>(m) + 1, -1, false});
    }
  }
  const int len = static_cast<int>(seq.size());

  std::array<std::pair<int, int>, 4> chords{};
  for (int q = 0; q < 4; ++q) chords[q] = {point_at[{q, true}], point_at[{q, false}]};
  auto inside = [](int p, int lo, int hi) { return lo < hi ? (lo < p && p < hi) : (p > lo || p < hi); };
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v)
      if (inside(chords[v].first, chords[u].first, chords[u].second) !=
          inside(chords[v].second, chords[u].first, chords[u].second))
        throw ChordsCross("arcs of the separating curve cross");

  std::vector<int> partner(static_cast<std::size_t>(len), -1);
  for (const auto& [p1, p2] : chords) {
    partner[p1] = p2;
    partner[p2] = p1;
  }
  std::vector<int> region(static_cast<std::size_t>(len), -1);
  int regions = 0;
  for (int start = 0; start < len; ++start) {
    if (seq[start].point || region[start] >= 0) continue;
    int idx = start;
    while (true) {
      if (!seq[idx].point) {
        if (region[idx] >= 0) break;
        region[idx] = regions;
        idx = (idx + 1) % len;
      } else {
        idx = (partner[idx] + 1) % len;
      }
    }
    ++regions;
  }
  std::map<std::pair<int, int>, int> segment_region;
  for (int idx = 0; idx < len; ++idx)
    if (!seq[idx].point) segment_region[{seq[idx].edge, seq[idx].segment}] = region[idx];

  std::set<int> cordoned;
  for (int q = 0; q < 4; ++q) {
    const int u = arcs[q].first;
    const auto& cs = cuts[u];
    const int before = static_cast<int>(std::count_if(cs.begin(), cs.end(), [](const Cut& c) { return c.order < 2; }));
    cordoned.insert(segment_region[{u, before + 1}]);
  }

  std::vector<int> parent(static_cast<std::size_t>(regions));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int z) {
    while (parent[z] != z) z = parent[z] = parent[parent[z]];
    return z;
  };
  for (int e : boundary) {
    const int o = opposite(e, n);
    const int m_count = nseg(e);
    if (m_count != nseg(o)) return false;
    for (int m = 0; m < m_count; ++m)
      parent[find(segment_region[{e, m}])] = find(segment_region[{o, m_count - 1 - m}]);
  }
  std::map<int, std::set<int>> components;
  for (int r = 0; r < regions; ++r) components[find(r)].insert(r);
  if (cordoned.size() != 4 || components.size() != 2) return false;
  for (const auto& [root, members] : components)
    if (members == cordoned) return true;
  return false;
}

// ------------------------------------------------------------- extraction

struct DecoratedSymbol {
  int symbol = 0;
  bool decorated = false;
  friend bool operator==(const DecoratedSymbol&, const DecoratedSymbol&) = default;
};
using DecoratedCycle = std::vector<DecoratedSymbol>;

inline std::string to_string(const DecoratedSymbol& d) { return std::to_string(d.symbol) + (d.decorated ? "'" : ""); }

inline std::string format_decorated(const std::vector<DecoratedCycle>& cycles) {
  std::string s;
  for (const auto& c : cycles) {
    s += '(';
    for (std::size_t t = 0; t < c.size(); ++t) {
      if (t) s += ',';
      s += to_string(c[t]);
    }
    s += ')';
  }
  return s;
}

struct Extraction {
  // The four runs cut off by gamma, lengths (r,s,t,u). The first run ends
  // with the odd edge that is not i; each next run begins opposite the
  // previous one's last edge.
  std::vector<DecoratedCycle> check;
  // sigma with the interior of every run deleted; empty when k = g-1.
  Cycle hat;
  int i = 0;  // positive odd anchor
  int j = 0;  // positive even anchor
};

inline Extraction extract(const FillingPermutation& fp, const Decomposition& d) {
  const int n = fp.n();
  const int g = detail::genus_of_minimal(fp);
  if (!check_decomposition(fp, d.anchors, d.k, d.type)) throw PreconditionError("not a decomposition of this permutation");
  Extraction out;
  for (int e : d.anchors) {
    if (e <= 2 * n && e % 2) out.i = e;
    if (e <= 2 * n && e % 2 == 0) out.j = e;
  }
  if (!out.i || !out.j) throw PreconditionError("decomposition lacks a positive odd or positive even anchor");

  std::vector<Cycle> runs;
  for (int q = 0; q < 4; ++q) {
    Cycle c{d.anchors[q]};
    for (int t = 1; t < d.type[q]; ++t) c.push_back(fp.sigma().at(c.back()));
    runs.push_back(std::move(c));
  }
  const bool decorate = d.k == g - 1;
  for (const auto& c : runs) {
    DecoratedCycle dc;
    for (std::size_t t = 0; t < c.size(); ++t) {
      bool mark = false;
      if (decorate && t == 0) mark = !is_positive(c[t], n);
      if (decorate && t + 1 == c.size()) mark = is_positive(c[t], n);
      dc.push_back({c[t], mark});
    }
    out.check.push_back(std::move(dc));
  }
  for (int r = 0; r < 4; ++r) {
    const int last = out.check.front().back().symbol;
    if (last % 2 && last != out.i) break;
    std::rotate(out.check.begin(), out.check.begin() + 1, out.check.end());
  }

  if (!decorate) {
    std::vector<char> interior(static_cast<std::size_t>(fp.size()) + 1, 0);
    for (const auto& c : runs)
      for (std::size_t t = 1; t + 1 < c.size(); ++t) interior[c[t]] = 1;
    for (int e = 1, t = 0; t < fp.size(); ++t, e = fp.sigma().at(e))
      if (!interior[e]) out.hat.push_back(e);
  }
  return out;
}

// Relabels the two sides of gamma when k < g-1.
class DisassemblyMap {
 public:
  DisassemblyMap(int g, int k, int i, int j) : g_(g), k_(k), i_(i), j_(j) {
    if (k < 1 || k >= g) throw PreconditionError("disassembly needs 1 <= k < g");
  }

  int host(int v) const {
    if (v < 1 || v > 8 * g_ - 4) throw CaseGap("label " + std::to_string(v) + " outside the polygon");
    if (v > 4 * g_ - 2) return host(v - 4 * g_ + 2) + 4 * (g_ - k_) - 2;
    if (v % 2) {
      if (std::max(1, i_ - 4 * (g_ - k_) + 4) <= v && v <= i_) return v - std::max(0, i_ - 4 * (g_ - k_) + 3);
      if (i_ + 4 * k_ + 2 <= v && v <= 4 * g_ - 3) return v - 4 * k_;
    } else {
      if (std::max(2, j_ - 4 * (g_ - k_) + 4) <= v && v <= j_) return v - std::max(0, j_ - 4 * (g_ - k_) + 2);
      if (j_ + 4 * k_ + 2 <= v && v <= 4 * g_ - 2) return v - 4 * k_;
    }
    throw CaseGap("no host case for label " + std::to_string(v));
  }

  int piece(int w) const {
    if (w < 1 || w > 8 * g_ - 4) throw CaseGap("label " + std::to_string(w) + " outside the polygon");
    if (w > 4 * g_ - 2) return piece(w - 4 * g_ + 2) - 4 * k_ - 4;
    if (w % 2) {
      if (i_ <= w && w <= std::min(i_ + 4 * k_ + 2, 4 * g_ - 3)) return w - i_ + 4 * k_ + 5;
      if (1 <= w && w <= i_ - 4 * (g_ - k_) + 4) return w - i_ + 4 * (k_ + g_) + 3;
    } else {
      if (j_ <= w && w <= std::min(j_ + 4 * k_ + 2, 4 * g_ - 2)) return w - j_ + 4 * k_ + 6;
      if (2 <= w && w <= j_ - 4 * (g_ - k_) + 4) return w - j_ + 4 * (k_ + g_) + 4;
    }
    throw CaseGap("no piece case for label " + std::to_string(w));
  }

 private:
  int g_, k_, i_, j_;
};

// Relabels the piece side when k = g-1, where anchors appear twice.
class DecoratedDisassemblyMap {
 public:
  DecoratedDisassemblyMap(int k, int i, int j) : k_(k), i_(i), j_(j) {
    if (k < 1) throw PreconditionError("disassembly needs k >= 1");
  }

  int operator()(const DecoratedSymbol& s) const {
    const int w = s.symbol;
    const int k = k_;
    if (s.decorated) {
      if (w == i_) return 8 * k + 7;
      if (w == j_) return 8 * k + 8;
      if (w == i_ + 4 * k + 2) return 4 * k + 3;
      if (w == j_ + 4 * k + 2) return 4 * k + 4;
      throw CaseGap("decorated label " + to_string(s) + " is not an anchor");
    }
    if (w % 2) {
      if (i_ <= w && w <= 4 * k + 1) return w - i_ + 4 * k + 5;
      if (1 <= w && w <= i_ - 2) return w - i_ + 8 * k + 7;
      if (i_ + 4 * k + 2 <= w && w <= 8 * k + 3) return w - i_ - 4 * k - 1;
      if (4 * k + 3 <= w && w <= i_ + 4 * k) return w - i_ + 1;
    } else {
      if (j_ <= w && w <= 4 * k + 2) return w - j_ + 4 * k + 6;
      if (2 <= w && w <= j_ - 2) return w - j_ + 8 * k + 8;
      if (j_ + 4 * k + 2 <= w && w <= 8 * k + 4) return w - j_ - 4 * k;
      if (4 * k + 4 <= w && w <= j_ + 4 * k) return w - j_ + 2;
    }
    throw CaseGap("no case for label " + to_string(s));
  }

 private:
  int k_, i_, j_;
};

struct Disassembly {
  FillingPermutation piece;
  FillingPermutation remainder;
  int i = 0;
  int j = 0;
};

inline FillingPermutation trivial_filling() { return validate(parse_cycles("(1,2,3,4)", 4)); }

inline Disassembly disassemble(const FillingPermutation& fp, const Decomposition& d) {
  const int g = detail::genus_of_minimal(fp);
  const Extraction ex = extract(fp, d);
  const int m = 8 * d.k + 8;
  std::vector<Cycle> piece_cycles;
  std::optional<FillingPermutation> remainder;
  if (d.k == g - 1) {
    const DecoratedDisassemblyMap dt(d.k, ex.i, ex.j);
    for (const auto& c : ex.check) {
      Cycle out;
      for (const auto& s : c) out.push_back(dt(s));
      piece_cycles.push_back(std::move(out));
    }
    remainder = trivial_filling();
  } else {
    const DisassemblyMap dm(g, d.k, ex.i, ex.j);
    for (const auto& c : ex.check) {
      Cycle out;
      for (const auto& s : c) out.push_back(dm.piece(s.symbol));
      piece_cycles.push_back(std::move(out));
    }
    Cycle hat;
    for (int e : ex.hat) hat.push_back(dm.host(e));
    remainder = validate(Permutation::from_cycles(8 * (g - d.k) - 4, {hat}));
  }
  FillingPermutation piece = validate(inverse(Permutation::from_cycles(m, piece_cycles)));
  return {piece, *remainder, ex.i, ex.j};
}

struct RoundTrip {
  FillingPermutation piece;
  FillingPermutation remainder;
  AttachmentSite site;
  FillingPermutation reassembled;
  // kappa^p delta^q = t with t^{-1} o reassembled o t = original.
  int p = 0;
  int q = 0;
};

inline RoundTrip round_trip_check(const FillingPermutation& fp, const Decomposition& d) {
  const int g = detail::genus_of_minimal(fp);
  const Disassembly parts = disassemble(fp, d);
  const int i = d.k == g - 1 ? 1 : DisassemblyMap(g, d.k, parts.i, parts.j).host(parts.i);
  const AttachmentSite site = attachment_site(parts.remainder, i);
  FillingPermutation back = assemble(parts.remainder, parts.piece, site.i);
  const int n = fp.n();
  const Permutation kp = kappa(n);
  const Permutation dl = delta(n);
  Permutation kpow = Permutation::identity(fp.size());
  for (int p = 0; p < n; ++p, kpow = compose(kp, kpow)) {
    Permutation t = kpow;
    for (int q = 0; q < n; ++q, t = compose(t, dl)) {
      if (conjugate(inverse(t), back.sigma()) == fp.sigma()) return {parts.piece, parts.remainder, site, back, p, q};
    }
  }
  throw NoConjugacyFound("reassembled permutation is not conjugate to the original by kappa^p delta^q");
}

}  // namespace fillperm
