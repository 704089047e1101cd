#include "fedql/constraints.hpp"

#include <cctype>
#include <charconv>
#include <limits>

#include "fedql/text.hpp"

namespace fedql {

namespace {

constexpr long long kNoBound = std::numeric_limits<long long>::min();

// Closed integer interval with optional open ends; `empty` marks the
// degenerate cases produced at the representable-range edges.
struct IntInterval {
  bool empty = false;
  bool has_lo = false;
  bool has_hi = false;
  long long lo = kNoBound;
  long long hi = kNoBound;

  static IntInterval all() { return {}; }
  static IntInterval none() { return {.empty = true}; }
  static IntInterval at_most(long long v) { return {false, false, true, 0, v}; }
  static IntInterval at_least(long long v) { return {false, true, false, v, 0}; }
  static IntInterval point(long long v) { return {false, true, true, v, v}; }
};

bool intervals_intersect(const IntInterval& a, const IntInterval& b) {
  if (a.empty || b.empty) return false;
  bool has_lo = a.has_lo || b.has_lo;
  bool has_hi = a.has_hi || b.has_hi;
  long long lo = a.has_lo ? (b.has_lo ? std::max(a.lo, b.lo) : a.lo) : b.lo;
  long long hi = a.has_hi ? (b.has_hi ? std::min(a.hi, b.hi) : a.hi) : b.hi;
  if (has_lo && has_hi) return lo <= hi;
  return true;
}

IntInterval rule_atom_interval(const RuleAtom& atom) {
  switch (atom.op) {
    case RuleOp::Lt:
      if (atom.bound == std::numeric_limits<long long>::min()) return IntInterval::none();
      return IntInterval::at_most(atom.bound - 1);
    case RuleOp::Le:
      return IntInterval::at_most(atom.bound);
    case RuleOp::Gt:
      if (atom.bound == std::numeric_limits<long long>::max()) return IntInterval::none();
      return IntInterval::at_least(atom.bound + 1);
    case RuleOp::Ge:
      return IntInterval::at_least(atom.bound);
    case RuleOp::Eq:
      return IntInterval::point(atom.bound);
  }
  return IntInterval::none();
}

// The half-line of integers v with "v <op> literal".
IntInterval compare_interval(CompareOp op, long long literal) {
  switch (op) {
    case CompareOp::Eq:
      return IntInterval::point(literal);
    case CompareOp::Lt:
      if (literal == std::numeric_limits<long long>::min()) return IntInterval::none();
      return IntInterval::at_most(literal - 1);
    case CompareOp::Le:
      return IntInterval::at_most(literal);
    case CompareOp::Gt:
      if (literal == std::numeric_limits<long long>::max()) return IntInterval::none();
      return IntInterval::at_least(literal + 1);
    case CompareOp::Ge:
      return IntInterval::at_least(literal);
    case CompareOp::Ne:
      return IntInterval::all();  // handled separately
  }
  return IntInterval::none();
}

long long parse_bound(std::string_view digits, std::string_view token) {
  long long value = 0;
  const char* begin = digits.data();
  const char* end = digits.data() + digits.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || digits.empty()) {
    throw ConstraintParseError("bad validation rule '" + std::string(token) +
                               "': expected an integer bound");
  }
  return value;
}

}  // namespace

std::string_view canonical_type_name(CanonicalType type) {
  return type == CanonicalType::String ? "string" : "number";
}

Literal Literal::of_text(std::string value) {
  Literal lit;
  lit.kind = Kind::Text;
  lit.text = std::move(value);
  return lit;
}

Literal Literal::of_int(long long value) {
  Literal lit;
  lit.kind = Kind::Int;
  lit.number = value;
  return lit;
}

std::string Literal::render() const {
  return kind == Kind::Int ? std::to_string(number) : text;
}

std::string Literal::render_for_matching() const {
  if (kind == Kind::Text) return text;
  return std::to_string(number < 0 ? -number : number);
}

bool literal_less(const Literal& a, const Literal& b) {
  if (a.kind != b.kind) return a.kind == Literal::Kind::Int;
  if (a.kind == Literal::Kind::Int) return a.number < b.number;
  return a.text < b.text;
}

std::string FormatPattern::token() const {
  std::string out;
  out.reserve(cells.size());
  for (Cell c : cells) out.push_back(c == Cell::Alpha ? 'a' : '9');
  return out;
}

std::string_view rule_op_token(RuleOp op) {
  switch (op) {
    case RuleOp::Lt: return "lt";
    case RuleOp::Le: return "le";
    case RuleOp::Gt: return "gt";
    case RuleOp::Ge: return "ge";
    case RuleOp::Eq: return "eq";
  }
  return "";
}

std::string RuleSet::token() const {
  if (atoms.empty()) return "null";
  std::string out;
  for (const RuleAtom& atom : atoms) {
    if (!out.empty()) out.push_back('|');
    out += rule_op_token(atom.op);
    out += std::to_string(atom.bound);
  }
  return out;
}

RuleSet union_rules(const RuleSet& a, const RuleSet& b) {
  if (a.unconstrained() || b.unconstrained()) return {};
  RuleSet out = a;
  for (const RuleAtom& atom : b.atoms) {
    bool present = false;
    for (const RuleAtom& existing : out.atoms) {
      if (existing == atom) {
        present = true;
        break;
      }
    }
    if (!present) out.atoms.push_back(atom);
  }
  return out;
}

std::optional<FormatPattern> parse_format(std::string_view token) {
  if (token.empty() || token == "null") return std::nullopt;
  FormatPattern pattern;
  pattern.cells.reserve(token.size());
  for (char c : token) {
    if (c == 'a') {
      pattern.cells.push_back(FormatPattern::Cell::Alpha);
    } else if (c == '9') {
      pattern.cells.push_back(FormatPattern::Cell::Digit);
    } else {
      throw ConstraintParseError("bad format '" + std::string(token) +
                                 "': only 'a' and '9' are allowed");
    }
  }
  return pattern;
}

bool matches_format(const FormatPattern& pattern, const Literal& value) {
  std::string rendered = value.render_for_matching();
  if (rendered.size() != pattern.cells.size()) return false;
  for (size_t i = 0; i < rendered.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(rendered[i]);
    bool ok = pattern.cells[i] == FormatPattern::Cell::Alpha ? std::isalpha(c) != 0
                                                             : std::isdigit(c) != 0;
    if (!ok) return false;
  }
  return true;
}

RuleSet parse_rule(std::string_view token) {
  if (token.empty() || token == "null") return {};
  RuleSet rules;
  size_t start = 0;
  while (start <= token.size()) {
    size_t sep = token.find('|', start);
    std::string_view segment =
        token.substr(start, sep == std::string_view::npos ? sep : sep - start);
    if (segment.size() < 3) {
      throw ConstraintParseError("bad validation rule '" + std::string(token) +
                                 "': expected <op><integer>");
    }
    std::string_view op_token = segment.substr(0, 2);
    RuleAtom atom;
    if (op_token == "lt") {
      atom.op = RuleOp::Lt;
    } else if (op_token == "le") {
      atom.op = RuleOp::Le;
    } else if (op_token == "gt") {
      atom.op = RuleOp::Gt;
    } else if (op_token == "ge") {
      atom.op = RuleOp::Ge;
    } else if (op_token == "eq") {
      atom.op = RuleOp::Eq;
    } else {
      throw ConstraintParseError("bad validation rule '" + std::string(token) +
                                 "': unknown operator '" + std::string(op_token) + "'");
    }
    atom.bound = parse_bound(segment.substr(2), token);
    rules.atoms.push_back(atom);
    if (sep == std::string_view::npos) break;
    start = sep + 1;
  }
  return rules;
}

bool rule_admits(const RuleSet& rules, long long value) {
  if (rules.unconstrained()) return true;
  for (const RuleAtom& atom : rules.atoms) {
    bool admitted = false;
    switch (atom.op) {
      case RuleOp::Lt: admitted = value < atom.bound; break;
      case RuleOp::Le: admitted = value <= atom.bound; break;
      case RuleOp::Gt: admitted = value > atom.bound; break;
      case RuleOp::Ge: admitted = value >= atom.bound; break;
      case RuleOp::Eq: admitted = value == atom.bound; break;
    }
    if (admitted) return true;
  }
  return false;
}

std::string_view compare_op_symbol(CompareOp op) {
  switch (op) {
    case CompareOp::Eq: return "=";
    case CompareOp::Ne: return "!=";
    case CompareOp::Lt: return "<";
    case CompareOp::Le: return "<=";
    case CompareOp::Gt: return ">";
    case CompareOp::Ge: return ">=";
  }
  return "";
}

std::optional<CompareOp> compare_op_from_symbol(std::string_view symbol) {
  if (symbol == "=") return CompareOp::Eq;
  if (symbol == "!=") return CompareOp::Ne;
  if (symbol == "<") return CompareOp::Lt;
  if (symbol == "<=") return CompareOp::Le;
  if (symbol == ">") return CompareOp::Gt;
  if (symbol == ">=") return CompareOp::Ge;
  return std::nullopt;
}

bool atom_satisfiable(CompareOp op, const Literal& value,
                      const ConstraintTuple& constraints, bool strict_format) {
  return !atom_unsat_reason(op, value, constraints, strict_format).has_value();
}

std::optional<std::string> atom_unsat_reason(CompareOp op, const Literal& value,
                                             const ConstraintTuple& constraints,
                                             bool strict_format) {
  if (value.is_text() && constraints.type == CanonicalType::Number) {
    throw TypeMismatchError("number attribute compared with text literal " +
                            value.render());
  }
  if (value.is_int() && constraints.type == CanonicalType::String) {
    throw TypeMismatchError("string attribute compared with integer literal " +
                            value.render());
  }

  if (value.is_text()) {
    // Rules carry no ordering information for text, so only equality can be
    // refuted: the literal itself must be storable under the constraints.
    if (op != CompareOp::Eq) return std::nullopt;
    if (constraints.length && value.text.size() > static_cast<size_t>(*constraints.length)) {
      return "length " + std::to_string(*constraints.length) + " rejects \"" +
             value.text + "\"";
    }
    if (strict_format && constraints.format && !matches_format(*constraints.format, value)) {
      return "format " + constraints.format->token() + " rejects \"" + value.text + "\"";
    }
    return std::nullopt;
  }

  const RuleSet& rule = constraints.rule;
  if (op == CompareOp::Ne) {
    // Unsatisfiable only when the admitted set is exactly the excluded value,
    // i.e. every atom pins that single point.
    if (rule.unconstrained()) return std::nullopt;
    for (const RuleAtom& atom : rule.atoms) {
      if (atom.op != RuleOp::Eq || atom.bound != value.number) return std::nullopt;
    }
    return "rule " + rule.token() + " rejects != " + value.render();
  }

  if (!rule.unconstrained()) {
    IntInterval wanted = compare_interval(op, value.number);
    bool reachable = false;
    for (const RuleAtom& atom : rule.atoms) {
      if (intervals_intersect(rule_atom_interval(atom), wanted)) {
        reachable = true;
        break;
      }
    }
    if (!reachable) {
      if (op == CompareOp::Eq) {
        return "rule " + rule.token() + " rejects " + value.render();
      }
      return "rule " + rule.token() + " rejects " + std::string(compare_op_symbol(op)) +
             " " + value.render();
    }
  }

  if (op == CompareOp::Eq && strict_format && constraints.format &&
      !matches_format(*constraints.format, value)) {
    return "format " + constraints.format->token() + " rejects " + value.render();
  }
  return std::nullopt;
}

}  // namespace fedql
