#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fedql/constraints.hpp"

namespace fedql {

class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class KeyRole { Primary, Foreign, None };

struct GlobalAttribute {
  std::string name;
  std::string type_token;  // as declared, e.g. "string" or "decimal"
  KeyRole key_role = KeyRole::None;
  ConstraintTuple constraints;

  friend bool operator==(const GlobalAttribute&, const GlobalAttribute&) = default;
};

struct GlobalRelation {
  std::string name;
  std::vector<GlobalAttribute> attributes;

  const GlobalAttribute* find_attribute(std::string_view attr_name) const;

  friend bool operator==(const GlobalRelation&, const GlobalRelation&) = default;
};

struct GlobalSchema {
  std::vector<GlobalRelation> relations;

  const GlobalRelation* find_relation(std::string_view relation_name) const;

  friend bool operator==(const GlobalSchema&, const GlobalSchema&) = default;
};

struct AttributeMapping {
  std::string local_name;   // CDM_name
  std::string global_name;  // ontology_name
  std::string local_type;   // raw CDM_type token
  std::string global_type;  // raw ontology_type token
  ConstraintTuple constraints;

  friend bool operator==(const AttributeMapping&, const AttributeMapping&) = default;
};

struct ConceptMapping {
  std::string local_name;
  std::string global_name;
  std::vector<AttributeMapping> attributes;

  const AttributeMapping* find_by_global(std::string_view global_name) const;
  const AttributeMapping* find_by_local(std::string_view local_name) const;

  friend bool operator==(const ConceptMapping&, const ConceptMapping&) = default;
};

enum class Dialect { Xpath, Sql, Oql };

std::string_view dialect_name(Dialect dialect);

struct SourceDef {
  std::string id;
  Dialect dialect = Dialect::Xpath;
  std::string data_location;  // bound by configuration, not by the document
  std::optional<std::string> replica_group;
  std::vector<ConceptMapping> concepts;

  const ConceptMapping* find_concept(std::string_view global_name) const;

  friend bool operator==(const SourceDef&, const SourceDef&) = default;
};

struct SourceCatalog {
  std::vector<SourceDef> sources;

  const SourceDef* find_source(std::string_view id) const;

  friend bool operator==(const SourceCatalog&, const SourceCatalog&) = default;
};

// Document root Globalmapping, one relation element per relation,
// PKAttribute/attribute/FKAttribute children carrying name/type/length/
// format/rule. "null" and "" parse to absent/unconstrained fields.
GlobalSchema parse_global_schema(std::string_view xml_text);

// Document root OntologyExtractorChanges with any subset of XML/SQL/OQL
// sections; source ids default to the section tag lowercased.
SourceCatalog parse_mapping_document(std::string_view xml_text);

std::string serialize_global_schema(const GlobalSchema& schema);
std::string serialize_mapping_document(const SourceCatalog& catalog);

// Conflict resolution when one global attribute is backed by several local
// ones: maximum length, union of rules, the more general type, and the
// common format only when every present format is identical.
ConstraintTuple merge_attribute_constraints(const std::vector<ConstraintTuple>& inputs);

enum class FindingSeverity { Warn, Error };

struct CatalogFinding {
  FindingSeverity severity = FindingSeverity::Warn;
  std::string message;
};

// Cross-checks the two documents: unresolved global names, format/length
// inconsistencies, and per-attribute disagreement between the declared
// global tuple and the merge of the mapped local tuples. Errors mark
// catalogs the mediator cannot trust; warnings mark quirks the merge rules
// explain (e.g. a declared format the local formats do not agree on).
std::vector<CatalogFinding> cross_check(const GlobalSchema& schema,
                                        const SourceCatalog& catalog);

}  // namespace fedql
