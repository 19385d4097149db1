#include "hypertrans/family_file.hpp"

#include <algorithm>

#include <json.hpp>

namespace hypertrans {

using nlohmann::json;

namespace {

Hypergraph hypergraph_from(const json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  VertexSet vertices;
  for (const auto& v : j.value("vertices", json::array())) {
    if (!v.is_string()) throw ParseError(where + ": vertex labels must be strings");
    vertices.insert(v.get<std::string>());
  }
  EdgeMap edges;
  if (j.contains("edges")) {
    if (!j.at("edges").is_object()) throw ParseError(where + ": edges must be an object");
    for (const auto& [label, vs] : j.at("edges").items()) {
      VertexSet evs;
      for (const auto& v : vs) {
        if (!v.is_string()) throw ParseError(where + ": edge vertices must be strings");
        evs.insert(v.get<std::string>());
      }
      edges.emplace(label, std::move(evs));
    }
  }
  try {
    return Hypergraph(std::move(vertices), std::move(edges));
  } catch (const DomainError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

json hypergraph_to(const Hypergraph& h) {
  json j;
  j["vertices"] = h.vertices();
  json edges = json::object();
  for (const auto& [label, vs] : h.edges()) edges[label] = vs;
  j["edges"] = std::move(edges);
  return j;
}

}  // namespace

const Hypergraph& FamilyFile::hypergraph(const std::string& name) const {
  if (auto it = hypergraphs.find(name); it != hypergraphs.end()) return it->second;
  if (auto it = summands.find(name); it != summands.end()) return it->second;
  throw ParseError("unknown hypergraph '" + name + "'");
}

VertexPartition FamilyFile::partition(const std::string& name) const {
  auto it = partitions.find(name);
  if (it == partitions.end()) throw ParseError("unknown partition '" + name + "'");
  return VertexPartition::from_blocks(family.universe_vertices(), it->second);
}

const EdgeSet& FamilyFile::edge_set(const std::string& name) const {
  auto it = edge_sets.find(name);
  if (it == edge_sets.end()) throw ParseError("unknown edge set '" + name + "'");
  return it->second;
}

TransformSpec FamilyFile::spec(const std::string& name) const {
  auto it = specs.find(name);
  if (it == specs.end()) throw ParseError("unknown spec '" + name + "'");
  TransformSpec out;
  out.family = family;
  for (const auto& dname : it->second.distinguished) {
    const Hypergraph& s = hypergraph(dname);
    auto img = it->second.images.find(dname);
    if (img == it->second.images.end()) {
      throw ParseError("spec '" + name + "' has no image for '" + dname + "'");
    }
    out.distinguished.insert(s);
    out.images.emplace(s, hypergraph(img->second));
  }
  return out;
}

std::optional<std::string> FamilyFile::name_of(const Hypergraph& x) const {
  for (const auto& [name, h] : hypergraphs) {
    if (h == x) return name;
  }
  for (const auto& [name, h] : summands) {
    if (h == x) return name;
  }
  return std::nullopt;
}

FamilyFile parse_family_file(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("family file must be a JSON object");

  FamilyFile file;
  std::string policy = j.value("loop_policy", "disallow");
  if (policy == "allow") {
    file.family.policy = LoopPolicy::Allow;
  } else if (policy == "disallow") {
    file.family.policy = LoopPolicy::Disallow;
  } else {
    throw ParseError("loop_policy must be \"allow\" or \"disallow\"");
  }

  for (const auto& v : j.value("extra_vertices", json::array())) {
    if (!v.is_string()) throw ParseError("extra_vertices must be strings");
    file.family.extra_vertices.insert(v.get<std::string>());
  }

  if (j.contains("hypergraphs")) {
    for (const auto& [name, hj] : j.at("hypergraphs").items()) {
      Hypergraph h = hypergraph_from(hj, "hypergraph '" + name + "'");
      file.family.members.insert(h);
      file.hypergraphs.emplace(name, std::move(h));
    }
  }
  if (j.contains("summands")) {
    for (const auto& [name, hj] : j.at("summands").items()) {
      if (file.hypergraphs.count(name)) {
        throw ParseError("summand '" + name + "' reuses a hypergraph name");
      }
      file.summands.emplace(name, hypergraph_from(hj, "summand '" + name + "'"));
    }
  }

  VertexSet universe = file.family.universe_vertices();
  auto require_known = [&](const Label& v, const std::string& where) {
    if (!universe.count(v)) {
      throw ParseError(where + ": vertex '" + v +
                       "' is not in the family universe (declare it in "
                       "extra_vertices)");
    }
  };
  for (const auto& [name, h] : file.summands) {
    for (const auto& v : h.vertices()) require_known(v, "summand '" + name + "'");
  }

  if (j.contains("partitions")) {
    for (const auto& [name, pj] : j.at("partitions").items()) {
      std::vector<VertexSet> blocks;
      if (!pj.is_array()) throw ParseError("partition '" + name + "' must be an array");
      for (const auto& bj : pj) {
        VertexSet block;
        for (const auto& v : bj) {
          if (!v.is_string()) throw ParseError("partition blocks must hold strings");
          require_known(v.get<std::string>(), "partition '" + name + "'");
          block.insert(v.get<std::string>());
        }
        blocks.push_back(std::move(block));
      }
      // Materialize once to surface overlaps and empties at parse time.
      VertexPartition::from_blocks(universe, blocks);
      file.partitions.emplace(name, std::move(blocks));
    }
  }

  if (j.contains("edge_sets")) {
    for (const auto& [name, ej] : j.at("edge_sets").items()) {
      if (!ej.is_object()) throw ParseError("edge set '" + name + "' must be an object");
      EdgeSet edges;
      for (const auto& [label, vsj] : ej.items()) {
        VertexSet vs;
        for (const auto& v : vsj) {
          if (!v.is_string()) throw ParseError("edge vertices must be strings");
          require_known(v.get<std::string>(), "edge set '" + name + "'");
          vs.insert(v.get<std::string>());
        }
        if (vs.empty()) throw ParseError("edge set '" + name + "' has an empty edge");
        edges.insert(Hyperedge{label, std::move(vs)});
      }
      file.edge_sets.emplace(name, std::move(edges));
    }
  }

  if (j.contains("specs")) {
    for (const auto& [name, sj] : j.at("specs").items()) {
      FamilyFile::SpecEntry entry;
      for (const auto& d : sj.value("distinguished", json::array())) {
        if (!d.is_string()) throw ParseError("distinguished names must be strings");
        entry.distinguished.push_back(d.get<std::string>());
      }
      if (sj.contains("images")) {
        for (const auto& [from, to] : sj.at("images").items()) {
          if (!to.is_string()) throw ParseError("image names must be strings");
          entry.images.emplace(from, to.get<std::string>());
        }
      }
      file.specs.emplace(name, std::move(entry));
    }
  }

  // Resolve every referenced name now so later lookups cannot fail.
  for (const auto& [name, entry] : file.specs) {
    for (const auto& d : entry.distinguished) file.hypergraph(d);
    for (const auto& [from, to] : entry.images) {
      file.hypergraph(from);
      file.hypergraph(to);
    }
  }
  return file;
}

std::string serialize_family_file(const FamilyFile& file) {
  json j;
  j["loop_policy"] = file.family.policy == LoopPolicy::Allow ? "allow" : "disallow";
  if (!file.family.extra_vertices.empty()) {
    j["extra_vertices"] = file.family.extra_vertices;
  }
  json hgs = json::object();
  for (const auto& [name, h] : file.hypergraphs) hgs[name] = hypergraph_to(h);
  j["hypergraphs"] = std::move(hgs);
  if (!file.summands.empty()) {
    json sums = json::object();
    for (const auto& [name, h] : file.summands) sums[name] = hypergraph_to(h);
    j["summands"] = std::move(sums);
  }
  if (!file.partitions.empty()) {
    json parts = json::object();
    for (const auto& [name, blocks] : file.partitions) {
      // Canonical form: the fully materialized partition, blocks sorted.
      auto p = VertexPartition::from_blocks(file.family.universe_vertices(), blocks);
      parts[name] = p.blocks();
    }
    j["partitions"] = std::move(parts);
  }
  if (!file.edge_sets.empty()) {
    json sets = json::object();
    for (const auto& [name, edges] : file.edge_sets) {
      json es = json::object();
      for (const auto& e : edges) es[e.label] = e.vertices;
      sets[name] = std::move(es);
    }
    j["edge_sets"] = std::move(sets);
  }
  if (!file.specs.empty()) {
    json specs = json::object();
    for (const auto& [name, entry] : file.specs) {
      json sj;
      auto sorted = entry.distinguished;
      std::sort(sorted.begin(), sorted.end());
      sj["distinguished"] = sorted;
      json images = json::object();
      for (const auto& [from, to] : entry.images) images[from] = to;
      sj["images"] = std::move(images);
      specs[name] = std::move(sj);
    }
    j["specs"] = std::move(specs);
  }
  return j.dump(2) + "\n";
}

std::string hypergraph_to_json(const Hypergraph& h) {
  return hypergraph_to(h).dump(2);
}

Hypergraph hypergraph_from_json(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return hypergraph_from(j, "hypergraph");
}

}  // namespace hypertrans
