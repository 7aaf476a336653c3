#pragma once

// Permutation files and structured records.
//
// Text files: an optional first line "n=<int>", then cycle notation over
// {1..4n}. Lines starting with '#' are comments. Without "n=" the size is the
// largest symbol present. A file whose content starts with '{' is read as a
// record instead.
//
// Records: {"size": M, "cycles": [[...], ...]} with an optional "n". Decorated
// cycles carry "decorated": true and entries {"symbol": s, "decorated": b}.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fillperm/errors.hpp"
#include "fillperm/filling.hpp"
#include "fillperm/permutation.hpp"
#include "fillperm/surgery.hpp"

namespace fillperm {

struct PermutationFile {
  Permutation sigma;
  std::optional<int> n;
};

inline nlohmann::json to_record(const Permutation& p, std::optional<int> n = std::nullopt) {
  nlohmann::json cycles = nlohmann::json::array();
  for (const auto& c : cycles_of(p))
    if (c.size() > 1) cycles.push_back(c);
  nlohmann::json r = {{"size", p.size()}, {"cycles", cycles}};
  if (n) r["n"] = *n;
  return r;
}

inline nlohmann::json to_record(const std::vector<DecoratedCycle>& cycles, int size) {
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : cycles) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& s : c) row.push_back({{"symbol", s.symbol}, {"decorated", s.decorated}});
    cs.push_back(row);
  }
  return {{"size", size}, {"decorated", true}, {"cycles", cs}};
}

inline PermutationFile from_record(const nlohmann::json& r) {
  try {
    const int size = r.at("size").get<int>();
    if (size < 1) throw ParseError("record size must be positive", -1);
    std::vector<Cycle> cycles;
    for (const auto& c : r.at("cycles")) cycles.push_back(c.get<Cycle>());
    PermutationFile out{Permutation::from_cycles(size, cycles), std::nullopt};
    if (r.contains("n")) out.n = r.at("n").get<int>();
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad record: ") + e.what(), -1);
  } catch (const OutOfRange& e) {
    throw ParseError(std::string("bad record: ") + e.what(), -1);
  }
}

inline PermutationFile parse_permutation_text(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return from_record(nlohmann::json::parse(text));
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("bad record: ") + e.what(), static_cast<long>(e.byte));
    }
  }
  std::optional<int> n;
  std::string body;
  std::istringstream in(text);
  std::string line;
  bool seen_content = false;
  long offset = 0;
  while (std::getline(in, line)) {
    const long line_start = offset;
    offset += static_cast<long>(line.size()) + 1;
    const auto p = line.find_first_not_of(" \t\r");
    if (p == std::string::npos || line[p] == '#') continue;
    if (!seen_content && line.compare(p, 2, "n=") == 0) {
      seen_content = true;
      try {
        n = std::stoi(line.substr(p + 2));
      } catch (const std::exception&) {
        throw ParseError("bad n= line", line_start + static_cast<long>(p));
      }
      if (*n < 1) throw ParseError("n must be positive", line_start + static_cast<long>(p));
      continue;
    }
    seen_content = true;
    body += line + "\n";
  }
  int size = 0;
  if (n) {
    size = 4 * *n;
  } else {
    long v = 0;
    for (char ch : body) {
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        v = v * 10 + (ch - '0');
        if (v > 1'000'000'000L) throw ParseError("symbol too large", -1);
      } else {
        size = std::max<long>(size, v);
        v = 0;
      }
    }
    size = std::max<long>(size, v);
    if (size == 0) throw ParseError("empty permutation without n= line", -1);
  }
  return {parse_cycles(body, size), n};
}

inline PermutationFile read_permutation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_permutation_text(ss.str());
}

inline FillingPermutation read_filling_file(const std::string& path) {
  const PermutationFile f = read_permutation_file(path);
  return validate(f.sigma, f.n);
}

inline nlohmann::json to_record(const Decomposition& d) {
  return {{"k", d.k}, {"l", d.l}, {"x", d.x()}, {"a", d.a()}, {"y", d.y()}, {"b", d.b()},
          {"type", d.type}, {"unattested", d.unattested()}};
}

}  // namespace fillperm
