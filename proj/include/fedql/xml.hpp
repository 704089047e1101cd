#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Minimal XML reader for the catalog documents and XML data files.
// Covers exactly what those documents use: elements, attributes, character
// data, comments, an optional declaration, and the five predefined entities.
// No namespaces, CDATA, or DTDs.
namespace fedql::xml {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, size_t line, size_t column)
      : std::runtime_error(message + " at line " + std::to_string(line) +
                           ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}

  size_t line() const { return line_; }
  size_t column() const { return column_; }

 private:
  size_t line_;
  size_t column_;
};

struct Node {
  std::string name;
  std::vector<std::pair<std::string, std::string>> attributes;  // ordered
  std::vector<Node> children;
  std::string text;  // concatenated character data, entities decoded

  const std::string* attribute(std::string_view attr_name) const;
  const Node* child(std::string_view child_name) const;
};

// Parses a complete document and returns its root element.
Node parse_document(std::string_view input);

std::string escape_text(std::string_view value);
std::string escape_attribute(std::string_view value);

}  // namespace fedql::xml
