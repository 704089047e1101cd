#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fedql {

class ConstraintParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TypeMismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class CanonicalType { String, Number };

std::string_view canonical_type_name(CanonicalType type);

// A query or data value. Integers are unquoted in source text, strings quoted.
struct Literal {
  enum class Kind { Text, Int };

  Kind kind = Kind::Text;
  std::string text;
  long long number = 0;

  static Literal of_text(std::string value);
  static Literal of_int(long long value);

  bool is_int() const { return kind == Kind::Int; }
  bool is_text() const { return kind == Kind::Text; }

  // Display rendering: decimal (signed) for Int, verbatim for Text.
  std::string render() const;
  // Rendering used by length and format checks: decimal without sign for Int.
  std::string render_for_matching() const;

  friend bool operator==(const Literal& a, const Literal& b) {
    if (a.kind != b.kind) return false;
    return a.kind == Kind::Int ? a.number == b.number : a.text == b.text;
  }
};

// Ordering used by the integrator's deterministic sort: Int sorts before
// Text; Ints compare numerically, Texts bytewise.
bool literal_less(const Literal& a, const Literal& b);

// Positional character-class template: 'a' = letter, '9' = digit.
struct FormatPattern {
  enum class Cell { Alpha, Digit };

  std::vector<Cell> cells;

  std::string token() const;

  friend bool operator==(const FormatPattern&, const FormatPattern&) = default;
};

enum class RuleOp { Lt, Le, Gt, Ge, Eq };

std::string_view rule_op_token(RuleOp op);

struct RuleAtom {
  RuleOp op = RuleOp::Lt;
  long long bound = 0;

  friend bool operator==(const RuleAtom&, const RuleAtom&) = default;
};

// A value is admitted when the atom list is empty (unconstrained) or at
// least one atom admits it: union semantics.
struct RuleSet {
  std::vector<RuleAtom> atoms;

  bool unconstrained() const { return atoms.empty(); }
  std::string token() const;  // "null" when unconstrained, else "lt12|eq20"

  friend bool operator==(const RuleSet&, const RuleSet&) = default;
};

// Union of two rule sets. Unconstrained absorbs: if either side admits
// everything, so does the union.
RuleSet union_rules(const RuleSet& a, const RuleSet& b);

// Per-attribute constraint metadata carried by catalogs.
struct ConstraintTuple {
  CanonicalType type = CanonicalType::String;
  std::optional<int> length;
  std::optional<FormatPattern> format;
  RuleSet rule;

  friend bool operator==(const ConstraintTuple&, const ConstraintTuple&) = default;
};

// "null" and "" both denote an absent pattern.
std::optional<FormatPattern> parse_format(std::string_view token);

bool matches_format(const FormatPattern& pattern, const Literal& value);

// "null" and "" denote the unconstrained rule; otherwise a "|"-separated
// list of <op><integer> atoms with op in {lt, le, gt, ge, eq}.
RuleSet parse_rule(std::string_view token);

bool rule_admits(const RuleSet& rules, long long value);

enum class CompareOp { Eq, Ne, Lt, Le, Gt, Ge };

std::string_view compare_op_symbol(CompareOp op);
std::optional<CompareOp> compare_op_from_symbol(std::string_view symbol);

// Decides whether a source respecting `constraints` can hold any value
// satisfying `<attr> <op> <value>`. Rules apply to integer comparisons only;
// text literals are checked against length, and against format only in
// strict mode. Throws TypeMismatchError when the literal kind contradicts
// the declared canonical type.
bool atom_satisfiable(CompareOp op, const Literal& value,
                      const ConstraintTuple& constraints,
                      bool strict_format = false);

// Same decision, but reports which constraint rejects the atom.
// Returns nullopt when the atom is satisfiable.
std::optional<std::string> atom_unsat_reason(CompareOp op, const Literal& value,
                                             const ConstraintTuple& constraints,
                                             bool strict_format = false);

}  // namespace fedql
