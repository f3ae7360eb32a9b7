#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gtcat/builtin_groups.hpp"
#include "gtcat/cochain.hpp"
#include "gtcat/group.hpp"

namespace gtcat {

// Malformed input file or option value; the CLI maps this to exit code 3.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

using json = nlohmann::json;

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  return j;
}

// Group file: {"name": str, "order": n, "table": [[int]]}
//          or {"name": str, "degree": d, "generators": [[int]]}.
inline FiniteGroup group_from_json(const json& j, const std::string& where = "group file") {
  if (!j.is_object()) throw ParseError(where + ": expected a JSON object");
  std::string name = j.value("name", std::string());
  try {
    if (j.contains("table")) {
      if (!j.at("table").is_array()) throw ParseError(where + ": field 'table' must be an array");
      std::vector<std::vector<int>> table = j.at("table").get<std::vector<std::vector<int>>>();
      if (j.contains("order") && j.at("order").get<int>() != static_cast<int>(table.size()))
        throw ParseError(where + ": field 'order' disagrees with the table size");
      std::vector<std::string> names;
      if (j.contains("element_names"))
        names = j.at("element_names").get<std::vector<std::string>>();
      return FiniteGroup::from_table(table, name, std::move(names));
    }
    if (j.contains("generators")) {
      int degree = j.at("degree").get<int>();
      auto gens = j.at("generators").get<std::vector<std::vector<int>>>();
      return FiniteGroup::from_permutations(degree, gens, name);
    }
  } catch (const json::exception& e) {
    throw ParseError(where + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(where + ": " + e.what());
  }
  throw ParseError(where + ": need either 'table' or 'degree'+'generators'");
}

inline json group_to_json(const FiniteGroup& G) {
  json j;
  j["name"] = G.name();
  j["order"] = G.order();
  std::vector<std::vector<int>> table(G.order(), std::vector<int>(G.order()));
  for (int a = 0; a < G.order(); ++a)
    for (int b = 0; b < G.order(); ++b) table[a][b] = G.mul(a, b);
  j["table"] = table;
  if (!G.element_names().empty()) j["element_names"] = G.element_names();
  return j;
}

// Element lookup by index, exact name, or name with spaces removed (so that
// "(12)" finds the permutation printed as "(1 2)").
inline int resolve_element(const FiniteGroup& G, const std::string& token) {
  if (auto e = G.element_by_name(token)) return *e;
  auto strip = [](const std::string& s) {
    std::string r;
    for (char c : s)
      if (c != ' ') r += c;
    return r;
  };
  std::string want = strip(token);
  for (int i = 0; i < G.order(); ++i)
    if (strip(G.element_name(i)) == want) return i;
  try {
    size_t used = 0;
    int idx = std::stoi(token, &used);
    if (used == token.size() && idx >= 0 && idx < G.order()) return idx;
  } catch (...) {
  }
  throw ParseError("unknown group element '" + token + "'");
}

// Subgroup spec: "center" | "full" | "trivial" | comma/space-separated
// generator tokens (element names or indices).
inline Subgroup resolve_subgroup(const FiniteGroup& G, const std::string& spec) {
  if (spec.empty() || spec == "trivial") return trivial_subgroup(G);
  if (spec == "full" || spec == "G") return full_subgroup(G);
  if (spec == "center") return center(G);
  std::vector<int> gens;
  std::string token;
  int depth = 0;
  auto flush = [&]() {
    size_t b = token.find_first_not_of(' ');
    size_t e = token.find_last_not_of(' ');
    if (b != std::string::npos) gens.push_back(resolve_element(G, token.substr(b, e - b + 1)));
    token.clear();
  };
  for (char c : spec) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if ((c == ',' || c == ';') && depth == 0) {
      flush();
      continue;
    }
    token += c;
  }
  flush();
  if (gens.empty()) throw ParseError("subgroup spec '" + spec + "' names no generators");
  return subgroup_generated(G, gens);
}

// Cochain file: {"degree": n, "domain": "G"|"H",
//                "entries": [{"args": [...], "phase": "p/q"}], "default": "0"}
// or a builtin reference: {"builtin": "zn_omega", "k": 1}.
// Builtins: zn_omega (degree 3 on cyclic G, parameter k), z2cube_cup (degree 3
// on Z2xZ2xZ2), symplectic (degree 2 on a Klein four H, optional "a"/"b").
inline Cochain cochain_from_json(const json& j, const FiniteGroup& G, const Subgroup& H,
                                 int degree, const std::string& where = "cochain file") {
  if (!j.is_object()) throw ParseError(where + ": expected a JSON object");
  try {
    if (j.contains("builtin")) {
      std::string b = j.at("builtin").get<std::string>();
      if (b == "zn_omega") {
        if (degree != 3) throw ParseError(where + ": zn_omega is a 3-cochain");
        return zn_omega(G, j.value("k", 1));
      }
      if (b == "z2cube_cup") {
        if (degree != 3) throw ParseError(where + ": z2cube_cup is a 3-cochain");
        return z2cube_cup(G);
      }
      if (b == "symplectic" || b == "z2z2_symplectic") {
        if (degree != 2) throw ParseError(where + ": symplectic is a 2-cochain");
        int a = j.contains("a") ? resolve_element(G, j.at("a").get<std::string>())
                                : (H.size() >= 2 ? H.members()[1] : -1);
        int bb = j.contains("b") ? resolve_element(G, j.at("b").get<std::string>())
                                 : (H.size() >= 3 ? H.members()[2] : -1);
        return symplectic_cochain(H, a, bb);
      }
      throw ParseError(where + ": unknown builtin cochain '" + b + "'");
    }
    int deg = j.at("degree").get<int>();
    if (deg != degree)
      throw ParseError(where + ": expected degree " + std::to_string(degree) + ", file has " +
                       std::to_string(deg));
    std::string dom = j.value("domain", degree == 3 ? "G" : "H");
    std::vector<int> domain;
    if (dom == "G") {
      domain.resize(G.order());
      for (int i = 0; i < G.order(); ++i) domain[i] = i;
    } else if (dom == "H") {
      domain = H.members();
    } else {
      throw ParseError(where + ": field 'domain' must be \"G\" or \"H\"");
    }
    Phase dflt = Phase::parse(j.value("default", std::string("0")));
    if (!dflt.is_zero())
      throw ParseError(where + ": only a zero default is supported for normalized cochains");
    Cochain c(G, domain, degree);
    if (j.contains("entries")) {
      int line = 0;
      for (const auto& e : j.at("entries")) {
        ++line;
        auto args = e.at("args").get<std::vector<int>>();
        if (static_cast<int>(args.size()) != degree)
          throw ParseError(where + ": entry " + std::to_string(line) + " has " +
                           std::to_string(args.size()) + " args, expected " +
                           std::to_string(degree));
        Phase v = Phase::parse(e.at("phase").get<std::string>());
        try {
          if (degree == 1)
            c.set(args[0], v);
          else if (degree == 2)
            c.set(args[0], args[1], v);
          else
            c.set(args[0], args[1], args[2], v);
        } catch (const std::exception& ex) {
          throw ParseError(where + ": entry " + std::to_string(line) + ": " + ex.what());
        }
      }
    }
    return c;
  } catch (const json::exception& e) {
    throw ParseError(where + ": " + e.what());
  }
}

inline json cochain_to_json(const Cochain& c, const std::string& domain_label) {
  json j;
  j["degree"] = c.degree();
  j["domain"] = domain_label;
  j["default"] = "0";
  json entries = json::array();
  c.for_each_tuple([&](const std::vector<int>& args) {
    Phase v = c.degree() == 1   ? c(args[0])
              : c.degree() == 2 ? c(args[0], args[1])
                                : c(args[0], args[1], args[2]);
    if (!v.is_zero()) entries.push_back({{"args", args}, {"phase", v.str()}});
  });
  j["entries"] = std::move(entries);
  return j;
}

// Group source: "builtin:NAME" or a file path.
inline FiniteGroup resolve_group(const std::string& source, int cap = kDefaultGroupCap) {
  if (source.rfind("builtin:", 0) == 0) {
    std::string name = source.substr(8);
    auto g = builtin_group(name);
    if (!g) throw ParseError("unknown builtin group '" + name + "'");
    if (g->order() > cap)
      throw ParseError("group order " + std::to_string(g->order()) + " exceeds cap " +
                       std::to_string(cap));
    return std::move(*g);
  }
  FiniteGroup g = group_from_json(load_json_file(source), source);
  if (g.order() > cap)
    throw ParseError("group order " + std::to_string(g.order()) + " exceeds cap " +
                     std::to_string(cap));
  return g;
}

// Cochain source: "zero", "builtin:NAME[:k]", or a file path.
inline Cochain resolve_cochain(const std::string& source, const FiniteGroup& G, const Subgroup& H,
                               int degree) {
  std::vector<int> gdom(G.order());
  for (int i = 0; i < G.order(); ++i) gdom[i] = i;
  if (source.empty() || source == "zero")
    return Cochain(G, degree == 3 ? gdom : H.members(), degree);
  if (source.rfind("builtin:", 0) == 0) {
    std::string rest = source.substr(8);
    json j;
    auto colon = rest.find(':');
    if (colon == std::string::npos) {
      j["builtin"] = rest;
    } else {
      j["builtin"] = rest.substr(0, colon);
      try {
        j["k"] = std::stoi(rest.substr(colon + 1));
      } catch (...) {
        throw ParseError("bad builtin cochain parameter in '" + source + "'");
      }
    }
    return cochain_from_json(j, G, H, degree, source);
  }
  return cochain_from_json(load_json_file(source), G, H, degree, source);
}

}  // namespace gtcat
