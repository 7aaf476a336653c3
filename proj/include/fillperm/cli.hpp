#pragma once

// Command-line front end. dispatch() is a pure function of its arguments and
// the files they name.
//
// Exit codes: 0 success, 1 a valid negative answer (invalid permutation, not
// equivalent, no decomposition), 2 usage or input error.

#include <algorithm>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fillperm/census.hpp"
#include "fillperm/errors.hpp"
#include "fillperm/filling.hpp"
#include "fillperm/io.hpp"
#include "fillperm/permutation.hpp"
#include "fillperm/surgery.hpp"
#include "fillperm/twist.hpp"

namespace fillperm::cli {

enum ExitCode { ok = 0, negative = 1, input_error = 2 };

struct CommandResult {
  int exit_code = ok;
  std::string out;
  std::string err;
  std::optional<nlohmann::json> payload;
};

namespace detail {

inline std::string join_sets(const std::vector<std::vector<int>>& sets) {
  std::string s;
  for (const auto& v : sets) {
    if (!s.empty()) s += ' ';
    s += '{';
    for (std::size_t t = 0; t < v.size(); ++t) s += (t ? "," : "") + std::to_string(v[t]);
    s += '}';
  }
  return s.empty() ? "-" : s;
}

inline std::string summary(const FillingPermutation& fp) {
  return "n=" + std::to_string(fp.n()) + ", c=" + std::to_string(region_count(fp)) +
         ", genus=" + std::to_string(genus(fp));
}

inline CommandResult finish(bool record, std::string text, nlohmann::json payload, int code = ok) {
  CommandResult r;
  r.exit_code = code;
  r.out = record ? payload.dump() + "\n" : std::move(text);
  r.payload = std::move(payload);
  return r;
}

// Lengths (r,s,t,u) implied by anchors along the single cycle of sigma.
inline std::array<int, 4> implied_type(const FillingPermutation& fp, const std::array<int, 4>& an) {
  std::vector<int> pos(static_cast<std::size_t>(fp.size()) + 1);
  for (int e = 1, t = 0; t < fp.size(); ++t, e = fp.sigma().at(e)) pos[e] = t;
  std::array<int, 4> type{};
  for (int q = 0; q < 4; ++q) {
    const int end = opposite(an[(q + 1) % 4], fp.n());
    type[q] = ((pos[end] - pos[an[q]]) % fp.size() + fp.size()) % fp.size() + 1;
  }
  return type;
}

}  // namespace detail

inline CommandResult cmd_validate(const std::string& path, bool record) {
  const PermutationFile f = read_permutation_file(path);
  try {
    const FillingPermutation fp = validate(f.sigma, f.n);
    nlohmann::json p = {{"valid", true}, {"n", fp.n()}, {"c", region_count(fp)}, {"genus", genus(fp)}};
    return detail::finish(record, "valid, " + detail::summary(fp) + "\n", p);
  } catch (const ValidationError& e) {
    nlohmann::json p = {{"valid", false}, {"reason", e.what()}, {"symbol", e.symbol()}};
    return detail::finish(record, std::string("invalid: ") + e.what() + "\n", p, negative);
  }
}

inline CommandResult cmd_info(const std::string& path, bool record) {
  const FillingPermutation fp = read_filling_file(path);
  const SurfaceInfo info = surface_info(fp);
  const auto zt = z_type(fp);
  const bool normalized = green_normalized(fp);
  std::ostringstream os;
  os << "n=" << info.n << " c=" << info.region_count << " genus=" << info.genus << "\n";
  os << "regions: " << format_cycles(fp.sigma()) << "\n";
  os << "region sizes:";
  for (const auto& c : info.regions) os << ' ' << c.size();
  os << "\n";
  os << "vertices: " << detail::join_sets(info.vertices) << "\n";
  os << "green vertices: " << detail::join_sets(info.green_vertices) << "\n";
  os << "green-normalized: " << (normalized ? "yes" : "no") << "\n";
  if (zt) os << "type: " << to_string(*zt) << "\n";
  nlohmann::json p = {{"n", info.n},
                      {"c", info.region_count},
                      {"genus", info.genus},
                      {"regions", info.regions},
                      {"vertices", info.vertices},
                      {"green_vertices", info.green_vertices},
                      {"green_normalized", normalized}};
  if (zt) p["type"] = zt->quad();
  return detail::finish(record, os.str(), p);
}

inline CommandResult cmd_assemble(const std::string& host_path, const std::string& piece_path, int i,
                                  std::optional<int> j, bool record) {
  const FillingPermutation host = read_filling_file(host_path);
  const FillingPermutation piece = read_filling_file(piece_path);
  const AttachmentSite site = attachment_site(host, i);
  if (j && *j != site.j)
    throw NotAVertexAnchor("j=" + std::to_string(*j) + " does not share a vertex with i=" + std::to_string(i) +
                           " (expected " + std::to_string(site.j) + ")");
  const FillingPermutation out = assemble(host, piece, site.i);
  nlohmann::json p = to_record(out.sigma(), out.n());
  p["i"] = site.i;
  p["j"] = site.j;
  p["genus"] = genus(out);
  return detail::finish(record,
                        "n=" + std::to_string(out.n()) + "\n" + format_cycles(out.sigma()) + "\n# i=" +
                            std::to_string(site.i) + " j=" + std::to_string(site.j) + " genus=" +
                            std::to_string(genus(out)) + "\n",
                        p);
}

inline CommandResult cmd_decompose(const std::string& path, std::optional<int> k, bool record) {
  const FillingPermutation fp = read_filling_file(path);
  const auto found = find_decompositions(fp, k);
  std::string text;
  nlohmann::json list = nlohmann::json::array();
  for (const auto& d : found) {
    text += to_string(d) + "\n";
    list.push_back(to_record(d));
  }
  if (found.empty()) text = "no decomposition\n";
  return detail::finish(record, text, {{"decompositions", list}}, found.empty() ? negative : ok);
}

inline CommandResult cmd_extract(const std::string& path, const std::array<int, 4>& anchors, int k, bool record) {
  const FillingPermutation fp = read_filling_file(path);
  const auto type = detail::implied_type(fp, anchors);
  const bool shaped = std::accumulate(type.begin(), type.end(), 0) == 8 * k + 8 &&
                      std::all_of(type.begin(), type.end(), [](int v) { return v > 2 && v % 2 == 0; });
  if (!shaped || !check_decomposition(fp, anchors, k, type)) {
    return detail::finish(record, "not a decomposition\n", {{"decomposition", false}}, negative);
  }
  const Decomposition d{k, (fp.n() + 1) / 2 - k, anchors, type};
  const Extraction ex = extract(fp, d);
  const Disassembly parts = disassemble(fp, d);
  std::ostringstream os;
  os << to_string(d) << "\n";
  os << "check: " << format_decorated(ex.check) << "\n";
  if (!ex.hat.empty()) os << "hat: " << format_cycle(ex.hat) << "\n";
  os << "piece: " << format_cycles(parts.piece.sigma()) << "\n";
  os << "remainder: " << format_cycles(parts.remainder.sigma()) << "\n";
  nlohmann::json p = {{"decomposition", to_record(d)},
                      {"check", to_record(ex.check, fp.size())},
                      {"piece", to_record(parts.piece.sigma(), parts.piece.n())},
                      {"remainder", to_record(parts.remainder.sigma(), parts.remainder.n())}};
  if (!ex.hat.empty()) p["hat"] = ex.hat;
  return detail::finish(record, os.str(), p);
}

inline CommandResult cmd_roundtrip(const std::string& path, std::optional<int> k, bool record) {
  const FillingPermutation fp = read_filling_file(path);
  const auto found = find_decompositions(fp, k);
  std::string text;
  nlohmann::json list = nlohmann::json::array();
  for (const auto& d : found) {
    const RoundTrip rt = round_trip_check(fp, d);
    text += to_string(d) + " p=" + std::to_string(rt.p) + " q=" + std::to_string(rt.q) + "\n";
    list.push_back({{"decomposition", to_record(d)}, {"p", rt.p}, {"q", rt.q},
                    {"reassembled", format_cycles(rt.reassembled.sigma())}});
  }
  if (found.empty()) text = "no decomposition\n";
  return detail::finish(record, text, {{"round_trips", list}}, found.empty() ? negative : ok);
}

inline CommandResult cmd_equivalent(const std::string& a_path, const std::string& b_path, bool record) {
  const FillingPermutation a = read_filling_file(a_path);
  const FillingPermutation b = read_filling_file(b_path);
  const Equivalence eq = are_equivalent(a, b);
  nlohmann::json p = {{"equivalent", eq.witness.has_value()}, {"decisive", eq.decisive}};
  std::string text;
  if (eq.witness) {
    p["witness"] = format_cycles(*eq.witness);
    text = "EQUIVALENT " + format_cycles(*eq.witness) + "\n";
  } else {
    text = "NOT-EQUIVALENT\n";
  }
  if (!eq.decisive) text += "# not minimal: a witness is sufficient, not necessary\n";
  return detail::finish(record, text, p, eq.witness ? ok : negative);
}

inline CommandResult cmd_census(int n, bool single_cycle, const std::string& out_path, unsigned threads,
                                bool record) {
  EnumerateOptions opt;
  opt.single_cycle = single_cycle;
  opt.threads = threads;
  const auto solutions = enumerate_filling(n, opt);
  const auto records = census_records(solutions, n);
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) throw Error("cannot write " + out_path);
    write_jsonl(f, records);
  }
  std::ostringstream os;
  os << "n=" << n << (single_cycle ? " single-cycle" : "") << " raw=" << solutions.size()
     << " orbits=" << records.size() << "\n";
  nlohmann::json list = nlohmann::json::array();
  for (const auto& r : records) {
    os << "c=" << r.c << " genus=" << r.genus << " size=" << r.orbit_size_raw
       << (r.decomposable ? " decomposable " : " ") << format_cycles(r.canonical_form) << "\n";
    list.push_back(to_json(r));
  }
  if (single_cycle && n % 2 && n >= 5) os << "upper bound " << upper_bound((n + 1) / 2) << "\n";
  return detail::finish(record, os.str(),
                        {{"n", n}, {"single_cycle", single_cycle}, {"raw", solutions.size()}, {"records", list}});
}

inline CommandResult dispatch(const std::vector<std::string>& args) {
  CLI::App app{"Filling permutations of minimally intersecting curve pairs", "fillperm"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "text or record")->check(CLI::IsMember({"text", "record"}));

  std::string file, file2, host, piece, out_path;
  int i = 0, n = 0, k_value = 0;
  std::optional<int> j, k;
  std::array<int, 4> anchors{};
  bool single_cycle = false;
  unsigned threads = 1;

  auto* validate_cmd = app.add_subcommand("validate", "check the filling equation");
  validate_cmd->add_option("file", file)->required();
  auto* info_cmd = app.add_subcommand("info", "genus, regions, vertices and type");
  info_cmd->add_option("file", file)->required();
  auto* assemble_cmd = app.add_subcommand("assemble", "connected sum of a host and a piece");
  assemble_cmd->add_option("--host", host)->required();
  assemble_cmd->add_option("--piece", piece)->required();
  assemble_cmd->add_option("--i", i)->required();
  assemble_cmd->add_option("--j", j);
  auto* decompose_cmd = app.add_subcommand("decompose", "list separating curves");
  decompose_cmd->add_option("file", file)->required();
  decompose_cmd->add_option("--k", k);
  auto* extract_cmd = app.add_subcommand("extract", "split along given anchors");
  extract_cmd->add_option("file", file)->required();
  extract_cmd->add_option("--x", anchors[0])->required();
  extract_cmd->add_option("--a", anchors[1])->required();
  extract_cmd->add_option("--y", anchors[2])->required();
  extract_cmd->add_option("--b", anchors[3])->required();
  extract_cmd->add_option("--k", k_value)->required();
  auto* roundtrip_cmd = app.add_subcommand("roundtrip", "split and rejoin every decomposition");
  roundtrip_cmd->add_option("file", file)->required();
  roundtrip_cmd->add_option("--k", k);
  auto* equivalent_cmd = app.add_subcommand("equivalent", "search the twist group for a conjugator");
  equivalent_cmd->add_option("first", file)->required();
  equivalent_cmd->add_option("second", file2)->required();
  auto* census_cmd = app.add_subcommand("census", "enumerate all solutions for n");
  census_cmd->add_option("--n", n)->required();
  census_cmd->add_flag("--single-cycle", single_cycle);
  census_cmd->add_option("--out", out_path);
  census_cmd->add_option("--threads", threads)->check(CLI::Range(1u, 256u));

  std::vector<const char*> argv{"fillperm"};
  for (const auto& a : args) argv.push_back(a.c_str());
  CommandResult result;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    result.exit_code = app.exit(e, out, err) == 0 ? ok : input_error;
    result.out = out.str();
    result.err = err.str();
    if (result.exit_code != ok) {
      for (const auto* sub : app.get_subcommands()) result.err += sub->help();
    }
    return result;
  }

  const bool record = format == "record";
  try {
    if (validate_cmd->parsed()) return cmd_validate(file, record);
    if (info_cmd->parsed()) return cmd_info(file, record);
    if (assemble_cmd->parsed()) return cmd_assemble(host, piece, i, j, record);
    if (decompose_cmd->parsed()) return cmd_decompose(file, k, record);
    if (extract_cmd->parsed()) return cmd_extract(file, anchors, k_value, record);
    if (roundtrip_cmd->parsed()) return cmd_roundtrip(file, k, record);
    if (equivalent_cmd->parsed()) return cmd_equivalent(file, file2, record);
    if (census_cmd->parsed()) return cmd_census(n, single_cycle, out_path, threads, record);
  } catch (const Error& e) {
    result.exit_code = input_error;
    result.err = std::string("error: ") + e.what() + "\n";
    return result;
  }
  result.exit_code = input_error;
  result.err = app.help();
  return result;
}

}  // namespace fillperm::cli
