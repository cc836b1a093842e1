#include "interpcat/json_io.hpp"

#include <fstream>
#include <sstream>

namespace interpcat {

namespace {

const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(path, "missing field \"" + key + "\"");
  return *it;
}

int as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
  return j.get<int>();
}

std::string as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path, "expected a string");
  return j.get<std::string>();
}

Flavor flavor_at(const Json& j, const std::string& path) {
  try {
    return parse_flavor(as_string(j, path));
  } catch (const DomainError& e) {
    throw SchemaError(path, e.what());
  }
}

// Exact rationals travel as strings; plain integers are accepted on input.
Rational rational_at(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  try {
    return parse_rational(as_string(j, path));
  } catch (const DomainError& e) {
    throw SchemaError(path, e.what());
  }
}

RatFunc ratfunc_at(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return RatFunc(j.get<long>());
  try {
    return RatFunc::parse(as_string(j, path));
  } catch (const DomainError& e) {
    throw SchemaError(path, e.what());
  }
}

}  // namespace

Json load_payload(const std::string& arg, const std::string& what) {
  std::string text = arg;
  const auto first = arg.find_first_not_of(" \t\n");
  const bool inline_json = first != std::string::npos && std::string("{[\"-0123456789").find(arg[first]) != std::string::npos;
  if (!inline_json) {
    std::ifstream in(arg);
    if (!in) throw SchemaError(what, "cannot read file " + arg);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(what, std::string("invalid JSON: ") + e.what());
  }
}

// ---------------------------------------------------------------- writers

Json to_json(const ObjectSignature& s) {
  Json j;
  j["flavor"] = flavor_name(s.flavor);
  if (s.flavor == Flavor::GL)
    j["colors"] = s.colors;
  else
    j["size"] = s.size;
  return j;
}

Json to_json(const Diagram& d) {
  Json j;
  j["flavor"] = flavor_name(d.flavor);
  j["top"] = d.top;
  j["bottom"] = d.bottom;
  j["blocks"] = d.signed_blocks();
  if (d.flavor == Flavor::GL) {
    j["top_colors"] = d.top_colors;
    j["bottom_colors"] = d.bottom_colors;
  }
  return j;
}

Json to_json(const Morphism& f) {
  Json j;
  j["source"] = to_json(f.source);
  j["target"] = to_json(f.target);
  j["basis"] = f.basis == Basis::E ? "e" : "delta";
  Json terms = Json::array();
  for (const auto& [d, c] : f.terms) terms.push_back({{"diagram", to_json(d)}, {"coeff", c.to_string()}});
  j["terms"] = terms;
  return j;
}

Json to_json(const Partition& p) { return p.parts; }

Json to_json(const BiPartition& p) { return {{"black", p.black.parts}, {"white", p.white.parts}}; }

Json to_json(Flavor f, const SimpleLabel& l) { return f == Flavor::GL ? to_json(l) : to_json(l.black); }

Json to_json(const TriplePartition& t) {
  return {{"alpha", t.alpha.parts}, {"beta", t.beta.parts}, {"gamma", t.gamma.parts}, {"k", t.k}, {"l", t.l}};
}

Json to_json(const MomentSequence& m) {
  Json values = Json::object();
  for (const auto& [k, v] : m.values) values[std::to_string(k)] = to_string(v);
  return {{"flavor", lie_flavor_name(m.flavor)}, {"values", values}};
}

Json to_json(const ShiftData& s) {
  return {{"a", s.a}, {"b", s.b}, {"gamma", s.gamma.parts}, {"delta", s.delta.parts}};
}

Json to_json(const GramReport& g) {
  Json j;
  j["source"] = to_json(g.source);
  j["target"] = to_json(g.target);
  j["t0"] = to_string(g.t0);
  j["basis"] = "e";
  j["rank"] = g.rank;
  j["nullity"] = g.nullity;
  Json rows = Json::array();
  for (int i = 0; i < g.gram.rows; ++i) {
    Json row = Json::array();
    for (int k = 0; k < g.gram.cols; ++k) row.push_back(to_string(g.gram.at(i, k)));
    rows.push_back(row);
  }
  j["gram"] = rows;
  return j;
}

Json to_json(const StructureReport& r) {
  Json results = Json::array();
  for (const auto& [name, ok] : r.results) results.push_back({{"pair", name}, {"pass", ok}});
  return {{"pairs", r.pairs},
          {"passed", r.passed},
          {"failed", r.pairs - r.passed},
          {"violations", r.violations},
          {"results", results}};
}

// ---------------------------------------------------------------- readers

ObjectSignature object_from_json(const Json& j, const std::string& path) {
  Flavor f = flavor_at(field(j, "flavor", path), path + ".flavor");
  if (f == Flavor::GL) {
    std::string w = as_string(field(j, "colors", path), path + ".colors");
    if (w.find_first_not_of("01") != std::string::npos) throw SchemaError(path + ".colors", "expected a 0/1 word");
    return ObjectSignature::gl_word(w);
  }
  const int m = as_int(field(j, "size", path), path + ".size");
  if (m < 0) throw SchemaError(path + ".size", "expected a nonnegative size");
  return ObjectSignature::make(f, m);
}

Diagram diagram_from_json(const Json& j, const std::string& path) {
  Flavor f = flavor_at(field(j, "flavor", path), path + ".flavor");
  const int l = as_int(field(j, "top", path), path + ".top");
  const int m = as_int(field(j, "bottom", path), path + ".bottom");
  const Json& bj = field(j, "blocks", path);
  if (!bj.is_array()) throw SchemaError(path + ".blocks", "expected an array of blocks");
  std::vector<std::vector<int>> blocks;
  for (size_t i = 0; i < bj.size(); ++i) {
    const std::string bp = path + ".blocks[" + std::to_string(i) + "]";
    if (!bj[i].is_array()) throw SchemaError(bp, "expected an array of endpoints");
    blocks.emplace_back();
    for (size_t k = 0; k < bj[i].size(); ++k) blocks.back().push_back(as_int(bj[i][k], bp + "[" + std::to_string(k) + "]"));
  }
  std::string tc, bc;
  if (f == Flavor::GL) {
    tc = as_string(field(j, "top_colors", path), path + ".top_colors");
    bc = as_string(field(j, "bottom_colors", path), path + ".bottom_colors");
  }
  return make_diagram(f, l, m, blocks, tc, bc);
}

Morphism morphism_from_json(const Json& j, const std::string& path) {
  Morphism f(object_from_json(field(j, "source", path), path + ".source"),
             object_from_json(field(j, "target", path), path + ".target"));
  if (f.source.flavor != f.target.flavor) throw SchemaError(path, "source and target flavors differ");
  if (j.contains("basis")) {
    std::string b = as_string(j["basis"], path + ".basis");
    if (b == "delta")
      f.basis = Basis::Delta;
    else if (b != "e")
      throw SchemaError(path + ".basis", "expected \"e\" or \"delta\"");
  }
  const Json& tj = field(j, "terms", path);
  if (!tj.is_array()) throw SchemaError(path + ".terms", "expected an array");
  for (size_t i = 0; i < tj.size(); ++i) {
    const std::string tp = path + ".terms[" + std::to_string(i) + "]";
    Diagram d = diagram_from_json(field(tj[i], "diagram", tp), tp + ".diagram");
    f.add_term(d, ratfunc_at(field(tj[i], "coeff", tp), tp + ".coeff"));
  }
  return f;
}

Morphism morphism_or_diagram(const Json& j, const std::string& path) {
  if (j.is_object() && j.contains("terms")) return morphism_from_json(j, path);
  return Morphism::from_diagram(diagram_from_json(j, path));
}

std::vector<int> ints_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array of integers");
  std::vector<int> out;
  for (size_t i = 0; i < j.size(); ++i) out.push_back(as_int(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<Rational> rationals_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array of rationals");
  std::vector<Rational> out;
  for (size_t i = 0; i < j.size(); ++i) out.push_back(rational_at(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

Partition partition_from_json(const Json& j, const std::string& path) {
  std::vector<int> parts = ints_from_json(j, path);
  try {
    return Partition(parts);
  } catch (const DomainError& e) {
    throw SchemaError(path, e.what());
  }
}

BiPartition bipartition_from_json(const Json& j, const std::string& path) {
  return {partition_from_json(field(j, "black", path), path + ".black"),
          partition_from_json(field(j, "white", path), path + ".white")};
}

SimpleLabel label_from_json(Flavor f, const Json& j, const std::string& path) {
  if (f == Flavor::GL) return bipartition_from_json(j, path);
  return label_of(partition_from_json(j, path));
}

TriplePartition triple_from_json(const Json& j, const std::string& path) {
  return {partition_from_json(field(j, "alpha", path), path + ".alpha"),
          partition_from_json(field(j, "beta", path), path + ".beta"),
          partition_from_json(field(j, "gamma", path), path + ".gamma"), as_int(field(j, "k", path), path + ".k"),
          as_int(field(j, "l", path), path + ".l")};
}

MomentSequence moments_from_json(const Json& j, const std::string& path) {
  MomentSequence m;
  try {
    m.flavor = parse_lie_flavor(as_string(field(j, "flavor", path), path + ".flavor"));
  } catch (const DomainError& e) {
    throw SchemaError(path + ".flavor", e.what());
  }
  const Json& vj = field(j, "values", path);
  if (!vj.is_object()) throw SchemaError(path + ".values", "expected an object keyed by k");
  for (const auto& [key, v] : vj.items()) {
    const std::string vp = path + ".values." + key;
    int k = 0;
    try {
      size_t used = 0;
      k = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw SchemaError(vp, "keys must be positive integers");
    }
    if (k < 1) throw SchemaError(vp, "keys must be positive integers");
    m.values[k] = rational_at(v, vp);
  }
  if (m.flavor == LieFlavor::osp)
    for (const auto& [k, v] : m.values)
      if (k % 2 && v != 0) throw SchemaError(path + ".values." + std::to_string(k), "odd osp moments must vanish");
  return m;
}

ShiftData shift_from_json(const Json& j, const std::string& path) {
  return {ints_from_json(field(j, "a", path), path + ".a"), ints_from_json(field(j, "b", path), path + ".b"),
          partition_from_json(field(j, "gamma", path), path + ".gamma"),
          partition_from_json(field(j, "delta", path), path + ".delta")};
}

}  // namespace interpcat
