// Acceptance checks. Prints one line per criterion and exits nonzero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"

using namespace fillperm;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

void require(Outcome& o, bool cond, const std::string& what) {
  if (!cond) {
    o.pass = false;
    o.detail += (o.detail.empty() ? "" : "; ") + what;
  }
}

Outcome fixtures_validate() {
  Outcome o;
  struct Case {
    const char* name;
    const char* text;
    int size;
    int listed_n, c, g;
  };
  // listed_n is the first entry of the expected triple as stated; for some
  // fixtures it is n, for others 2n.
  const Case cases[] = {{"zeta", fixtures::zeta, 24, 6, 4, 2},        {"sigma_Z", fixtures::sigma_z, 32, 8, 4, 3},
                        {"sigma_F", fixtures::sigma_f, 20, 10, 1, 3}, {"sigma_F6", fixtures::sigma_f6, 44, 22, 1, 6},
                        {"F4", fixtures::f4, 28, 14, 1, 4},           {"zeta'", fixtures::zeta_prime, 24, 12, 4, 2},
                        {"Z5", fixtures::z5, 48, 24, 4, 5}};
  std::string doubled;
  for (const auto& c : cases) {
    try {
      const auto fp = fixtures::filling(c.text, c.size);
      require(o, region_count(fp) == c.c, std::string(c.name) + " c");
      require(o, genus(fp) == c.g, std::string(c.name) + " genus");
      require(o, fp.n() == c.listed_n || 2 * fp.n() == c.listed_n, std::string(c.name) + " n");
      if (fp.n() != c.listed_n) doubled += std::string(doubled.empty() ? "" : ",") + c.name;
    } catch (const Error& e) {
      require(o, false, std::string(c.name) + ": " + e.what());
    }
  }
  if (o.pass && !doubled.empty()) o.detail = "listed first entry is 2n for " + doubled;
  return o;
}

Outcome assembly_exact() {
  Outcome o;
  const auto out = assemble(fixtures::SigmaF(), fixtures::SigmaZ(), attachment_site(fixtures::SigmaF(), 3).i);
  require(o, attachment_site(fixtures::SigmaF(), 3).j == 2, "site j");
  require(o, out.sigma() == fixtures::SigmaF6().sigma(), "assembled permutation differs");
  return o;
}

Outcome decomposition_detection() {
  Outcome o;
  const auto f6 = find_decompositions(fixtures::SigmaF6());
  const auto f3 = find_decompositions(fixtures::SigmaF());
  auto has = [](const std::vector<Decomposition>& v, Decomposition d, int n) {
    d = canonical_rotation(d, n);
    return std::find(v.begin(), v.end(), d) != v.end();
  };
  require(o, has(f6, {3, 3, {3, 38, 39, 2}, {12, 4, 12, 4}}, 11), "k=3 witness");
  require(o, has(f6, {5, 1, {23, 38, 1, 16}, {28, 6, 10, 4}}, 11), "k=5 witness");
  require(o, has(f3, {2, 1, {1, 4, 11, 14}, {8, 4, 8, 4}}, 5), "F3 witness");
  if (o.pass) o.detail = std::to_string(f6.size()) + " and " + std::to_string(f3.size()) + " decompositions";
  return o;
}

Outcome extraction_exact() {
  Outcome o;
  const auto f6 = disassemble(fixtures::SigmaF6(), canonical_rotation({5, 1, {23, 38, 1, 16}, {28, 6, 10, 4}}, 11));
  require(o, f6.piece.sigma() == fixtures::Z5().sigma(), "Z5 piece");
  require(o, f6.remainder.sigma() == fixtures::F1().sigma(), "F6 remainder");
  const auto f3 = disassemble(fixtures::SigmaF(), {2, 1, {1, 4, 11, 14}, {8, 4, 8, 4}});
  require(o, f3.piece.sigma() == fixtures::ZetaPrime().sigma(), "zeta' piece");
  require(o, f3.remainder.sigma() == fixtures::F1().sigma(), "F3 remainder");
  return o;
}

Outcome non_homeomorphism() {
  Outcome o;
  require(o, !are_equivalent(fixtures::Zeta(), fixtures::ZetaPrime()).witness, "witness found");
  return o;
}

Outcome round_trips() {
  Outcome o;
  const auto f6 = fixtures::SigmaF6();
  const auto rt = round_trip_check(f6, canonical_rotation({5, 1, {23, 38, 1, 16}, {28, 6, 10, 4}}, 11));
  require(o, rt.reassembled.sigma() == fixtures::SigmaPrime().sigma(), "reassembled differs from printed");
  const auto d = delta(11);
  const bool literal = compose(inverse(d), compose(rt.reassembled.sigma(), d)) == f6.sigma();
  const bool reversed = compose(d, compose(rt.reassembled.sigma(), inverse(d))) == f6.sigma();
  require(o, literal || reversed,
          "delta^-1 s' delta != s and delta s' delta^-1 != s; witness is kappa^" + std::to_string(rt.p) + " delta^" +
              std::to_string(rt.q));
  int count = 0;
  for (const auto& fp : {fixtures::SigmaF6(), fixtures::SigmaF()}) {
    for (const auto& dd : find_decompositions(fp)) {
      try {
        round_trip_check(fp, dd);
        ++count;
      } catch (const Error& e) {
        require(o, false, to_string(dd) + ": " + e.what());
      }
    }
  }
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(count) + " general round trips succeeded";
  return o;
}

Outcome census() {
  Outcome o;
  EnumerateOptions opt;
  opt.single_cycle = true;
  const auto one = enumerate_filling(1, opt);
  require(o, one.size() == 2, "n=1 raw count");
  require(o, census_records(one, 1).size() == 1, "n=1 orbit count");
  require(o, enumerate_filling(3, opt).empty(), "n=3 not empty");
  opt.threads = std::max(1u, std::thread::hardware_concurrency());
  const auto five = enumerate_filling(5, opt);
  const auto records = census_records(five, 5);
  const auto bound = upper_bound(3);
  require(o, bound == 672, "upper bound");
  require(o, !records.empty() && records.size() <= 672, "orbit count out of range");
  require(o, closed_under_twists(five, 5), "not closed under T");
  o.detail = "N(3)=" + std::to_string(records.size()) + " from " + std::to_string(five.size()) + " raw";
  return o;
}

Outcome properties() {
  Outcome o;
  std::size_t cases = 0;
  std::vector<FillingPermutation> pool;
  EnumerateOptions all;
  for (int n = 1; n <= 4; ++n)
    for (const auto& p : enumerate_filling(n, all)) pool.push_back(validate(p));
  std::mt19937 rng(11);
  for (const auto& base : {fixtures::Zeta(), fixtures::ZetaPrime(), fixtures::SigmaF()}) {
    const TwistGroup t(base.n());
    for (int trial = 0; trial < 100; ++trial) {
      const auto& g = t.elements()[rng() % t.order()];
      const auto c = conjugate(g, base.sigma());
      bool ok = true;
      try {
        pool.push_back(validate(c));
      } catch (const ValidationError&) {
        ok = false;
      }
      require(o, ok, "T-conjugate of a fixture invalid");
      ++cases;
    }
  }
  for (const auto& fp : pool) {
    require(o, power(compose(opposite_map(fp.n()), fp.sigma()), 4).is_identity(), "(Q^N s)^4 != 1");
    ++cases;
  }
  for (int n = 1; n <= 12; ++n) {
    require(o, compose(tau(n), opposite_map(n)) == compose(opposite_map(n), inverse(tau(n))), "anticommute");
    ++cases;
  }
  for (int n = 1; n <= 6; ++n) {
    const TwistGroup t(n);
    for (const auto& fp : pool) {
      if (fp.n() != n) continue;
      for (const auto& g : t.elements()) {
        bool ok = true;
        try {
          validate(conjugate(g, fp.sigma()));
        } catch (const ValidationError&) {
          ok = false;
        }
        require(o, ok, "T-conjugation broke validity");
        ++cases;
      }
    }
  }
  for (const auto& fp : {fixtures::SigmaF(), fixtures::F4(), fixtures::SigmaF6(), fixtures::SigmaPrime()}) {
    for (const auto& d : find_decompositions(fp)) {
      bool sep = false;
      try {
        sep = verify_separating(fp, d);
      } catch (const ChordsCross&) {
      }
      require(o, sep, "not separating: " + to_string(d));
      require(o, d.l != 2, "l=2 reported");
      ++cases;
    }
  }
  require(o, cases >= 1000, "fewer than 1000 cases");
  o.detail = std::to_string(cases) + " cases" + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"fixture validation", fixtures_validate},
      {"assembly bit-exactness", assembly_exact},
      {"decomposition detection", decomposition_detection},
      {"extraction bit-exactness", extraction_exact},
      {"non-homeomorphism", non_homeomorphism},
      {"round-trip conjugacy", round_trips},
      {"census", census},
      {"property suites", properties},
  };
  int failures = 0;
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[c].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !o.pass;
    std::printf("criterion %zu %s: %s (%.2fs)%s%s\n", c + 1, criteria[c].first.c_str(), o.pass ? "PASS" : "FAIL",
                secs, o.detail.empty() ? "" : " - ", o.detail.c_str());
  }
  return failures ? 1 : 0;
}
