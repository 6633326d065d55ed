#include "bsgkit/json_io.hpp"

#include "bsgkit/error.hpp"
#include "bsgkit/random.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace bsg {

namespace {

const BigInt kExactLimit = BigInt(1) << 53;

[[noreturn]] void malformed(const std::string& what) { throw Error(Errc::ConfigInvalid, what); }

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? BigInt(j.get<std::uint64_t>()) : BigInt(j.get<std::int64_t>());
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  malformed("expected an integer, got " + j.dump());
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(bigint_from_json(j));
  malformed("expected a rational string, got " + j.dump());
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
  return j.at(key);
}

Json index_list(const IndexSet& s) { return Json(std::vector<std::uint64_t>(s.begin(), s.end())); }

std::optional<Json> optional_rational(const std::optional<Rational>& q) {
  if (!q) return std::nullopt;
  return Json(to_string(*q));
}

}  // namespace

Json elem_to_json(const GroupElem& e) {
  Json out = Json::array();
  for (const auto& c : e.coords) {
    if (boost::multiprecision::abs(c) < kExactLimit)
      out.push_back(c.convert_to<std::int64_t>());
    else
      out.push_back(to_string(c));
  }
  return out;
}

GroupElem elem_from_json(const GroupSpec& spec, const Json& j) {
  std::vector<BigInt> coords;
  if (j.is_array()) {
    for (const auto& c : j) coords.push_back(bigint_from_json(c));
  } else {
    coords.push_back(bigint_from_json(j));
  }
  return make_elem(spec, std::move(coords));
}

Json group_to_json(const GroupSpec& spec) { return Json{{"moduli", spec.moduli()}}; }

GroupSpec group_from_json(const Json& j) {
  const Json& m = field(j, "moduli");
  if (!m.is_array()) malformed("moduli must be an array");
  std::vector<std::uint64_t> moduli;
  for (const auto& x : m) {
    if (!x.is_number_unsigned()) malformed("moduli must be non-negative integers");
    moduli.push_back(x.get<std::uint64_t>());
  }
  return make_group(std::move(moduli));
}

Json gen_config_to_json(const GenConfig& cfg) {
  Json j{{"family", family_name(cfg.family)},
         {"seed", cfg.seed},
         {"prng", std::string(kPrngName)},
         {"sizes", cfg.sizes}};
  if (auto* f = std::get_if<family::RandomDensity>(&cfg.family)) j["K"] = to_string(f->K);
  if (auto* f = std::get_if<family::Planted>(&cfg.family)) {
    j["ap_fraction"] = to_string(f->ap_fraction);
    j["target_C"] = to_string(f->target_C);
    j["K"] = to_string(f->K);
  }
  if (auto* f = std::get_if<family::Dense>(&cfg.family)) j["delta"] = to_string(f->delta);
  return j;
}

Json instance_to_json(const Instance& inst, const std::optional<GenConfig>& origin) {
  Json parts = Json::array();
  for (const auto& p : inst.parts) {
    Json elems = Json::array();
    for (const auto& e : p.elems()) elems.push_back(elem_to_json(e));
    parts.push_back(std::move(elems));
  }
  Json j{{"group", group_to_json(inst.spec)}, {"parts", std::move(parts)}};
  if (BigInt(inst.graph.edge_count()) == inst.tuple_space()) {
    j["edges"] = "complete";
  } else {
    Json edges = Json::array();
    for (std::size_t k = 0; k < inst.graph.edge_count(); ++k) {
      auto e = inst.graph.edge(k);
      edges.push_back(std::vector<std::uint64_t>(e.begin(), e.end()));
    }
    j["edges"] = std::move(edges);
  }
  if (origin) j["generator"] = gen_config_to_json(*origin);
  return j;
}

Instance instance_from_json(const Json& j) {
  const GroupSpec spec = group_from_json(field(j, "group"));
  const Json& raw_parts = field(j, "parts");
  if (!raw_parts.is_array()) malformed("parts must be an array");

  std::vector<ElemSet> parts;
  std::vector<std::vector<Index>> remap;  // file position -> canonical index
  std::vector<std::uint32_t> sizes;
  for (const auto& raw : raw_parts) {
    if (!raw.is_array()) malformed("each part must be an array");
    std::vector<GroupElem> elems;
    for (const auto& e : raw) elems.push_back(elem_from_json(spec, e));
    ElemSet set(spec, elems);
    if (set.size() != elems.size()) malformed("duplicate element in a part");
    std::vector<Index> where(elems.size());
    for (std::size_t k = 0; k < elems.size(); ++k) where[k] = static_cast<Index>(set.index_of(elems[k]));
    sizes.push_back(static_cast<std::uint32_t>(set.size()));
    parts.push_back(std::move(set));
    remap.push_back(std::move(where));
  }
  const std::size_t r = parts.size();

  const Json& raw_edges = field(j, "edges");
  PartiteHypergraph graph;
  if (raw_edges.is_string()) {
    if (raw_edges.get<std::string>() != "complete") malformed("edges must be a list or \"complete\"");
    graph = PartiteHypergraph::complete(sizes);
  } else if (raw_edges.is_array()) {
    std::vector<Tuple> edges;
    for (const auto& e : raw_edges) {
      if (!e.is_array()) malformed("each edge must be an index array");
      if (e.size() != r) throw Error(Errc::ArityMismatch, "edge " + e.dump() + " has the wrong arity");
      Tuple t(r);
      for (std::size_t p = 0; p < r; ++p) {
        if (!e[p].is_number_unsigned()) malformed("edge indices must be non-negative integers");
        const auto k = e[p].get<std::uint64_t>();
        if (k >= remap[p].size()) throw Error(Errc::IndexOutOfRange, "edge " + e.dump() + " is out of range");
        t[p] = remap[p][k];
      }
      edges.push_back(std::move(t));
    }
    graph = build_hypergraph(r, sizes, edges);
  } else {
    malformed("edges must be a list or \"complete\"");
  }
  return make_instance(spec, std::move(parts), std::move(graph));
}

Json report_to_json(const BoundReport& report) {
  Json items = Json::array();
  for (const auto& q : report.items()) {
    items.push_back(Json{{"name", q.name},
                         {"lhs", q.lhs},
                         {"rhs", q.rhs},
                         {"relation", std::string(relation_symbol(q.relation))},
                         {"pass", q.pass},
                         {"anchor", q.anchor},
                         {"detail", q.detail}});
  }
  return Json{{"inequalities", std::move(items)}, {"overall", report.overall()}};
}

Json result_to_json(const ExtractionResult& result) {
  Json subsets = Json::array();
  for (const auto& s : result.subsets) subsets.push_back(index_list(s));
  Json trace = Json::array();
  for (const auto& t : result.trace) {
    Json stage{{"stage", t.stage},
               {"part", t.part},
               {"threshold", to_string(t.threshold)},
               {"before", t.before},
               {"after", t.after}};
    if (t.density) stage["density"] = to_string(*t.density);
    if (t.pivot) stage["pivot"] = *t.pivot;
    if (!t.note.empty()) stage["note"] = t.note;
    trace.push_back(std::move(stage));
  }
  Json j{{"mode", std::string(mode_name(result.mode))},
         {"subsets", std::move(subsets)},
         {"epsilon", to_string(result.epsilon)},
         {"trace", std::move(trace)}};
  if (auto k = optional_rational(result.K)) j["K"] = *k;
  if (auto d = optional_rational(result.delta)) j["delta"] = *d;
  if (auto c = optional_rational(result.c_pow_r)) j["C_pow_r"] = *c;
  if (result.octopus_check) {
    const auto& c = *result.octopus_check;
    j["octopus_check"] = Json{{"threshold", to_string(c.threshold)},
                              {"supports", c.supports},
                              {"exhaustive", c.exhaustive},
                              {"failures", c.failures},
                              {"min_count", to_string(c.min_count)},
                              {"argmin", index_list(c.argmin)}};
  }
  return j;
}

ExtractionResult result_from_json(const Json& j) {
  ExtractionResult result;
  const Json& mode = field(j, "mode");
  if (!mode.is_string()) malformed("mode must be a string");
  result.mode = parse_mode(mode.get<std::string>());
  for (const auto& s : field(j, "subsets")) {
    IndexSet set;
    for (const auto& k : s) {
      if (!k.is_number_unsigned()) malformed("subset indices must be non-negative integers");
      set.push_back(static_cast<Index>(k.get<std::uint64_t>()));
    }
    result.subsets.push_back(std::move(set));
  }
  result.epsilon = rational_from_json(field(j, "epsilon"));
  if (j.contains("K")) result.K = rational_from_json(j.at("K"));
  if (j.contains("delta")) result.delta = rational_from_json(j.at("delta"));
  if (j.contains("C_pow_r")) result.c_pow_r = rational_from_json(j.at("C_pow_r"));
  return result;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ConfigInvalid, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(Errc::ParseError, path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::ConfigInvalid, "cannot write " + path);
  out << text;
  if (!out) throw Error(Errc::ConfigInvalid, "write failed for " + path);
}

}  // namespace bsg
