#pragma once

#include <string>

#include "hypertrans/families.hpp"
#include "hypertrans/partition.hpp"
#include "hypertrans/transform.hpp"

namespace hypertrans {

/// Parse error for family files; distinct from DomainError so the CLI can
/// report usage-level failures separately from domain failures.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One self-contained scenario file: the family members (named), auxiliary
/// named hypergraphs (summands), partitions, edge sets, and transformation
/// specs. All labels must resolve within the file's universe.
struct FamilyFile {
  Family family;
  std::map<std::string, Hypergraph> hypergraphs;  // the named members
  std::map<std::string, Hypergraph> summands;
  std::map<std::string, std::vector<VertexSet>> partitions;  // declared blocks
  std::map<std::string, EdgeSet> edge_sets;

  struct SpecEntry {
    std::vector<std::string> distinguished;
    std::map<std::string, std::string> images;
  };
  std::map<std::string, SpecEntry> specs;

  /// Member or summand by name.
  const Hypergraph& hypergraph(const std::string& name) const;
  /// Partition by name, materialized over the family universe.
  VertexPartition partition(const std::string& name) const;
  const EdgeSet& edge_set(const std::string& name) const;
  TransformSpec spec(const std::string& name) const;

  /// Smallest name of a member or summand structurally equal to x, if any.
  std::optional<std::string> name_of(const Hypergraph& x) const;
};

FamilyFile parse_family_file(const std::string& json_text);
std::string serialize_family_file(const FamilyFile& file);

std::string hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const std::string& json_text);

}  // namespace hypertrans
