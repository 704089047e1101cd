#include "fedql/xml.hpp"

#include "fedql/text.hpp"

namespace fedql::xml {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view input) : input_(input) {}

  bool done() const { return pos_ >= input_.size(); }
  char peek() const { return input_[pos_]; }
  bool starts_with(std::string_view s) const {
    return input_.compare(pos_, s.size(), s) == 0;
  }

  char take() {
    char c = input_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void take(size_t n) {
    for (size_t i = 0; i < n && !done(); ++i) take();
  }

  void skip_space() {
    while (!done() && is_space(peek())) take();
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_, column_);
  }

 private:
  std::string_view input_;
  size_t pos_ = 0;
  size_t line_ = 1;
  size_t column_ = 1;
};

bool is_name_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == ':';
}

bool is_name_char(char c) {
  return is_name_start(c) || (c >= '0' && c <= '9') || c == '-' || c == '.';
}

std::string read_name(Cursor& cur) {
  if (cur.done() || !is_name_start(cur.peek())) cur.fail("expected a name");
  std::string name;
  while (!cur.done() && is_name_char(cur.peek())) name.push_back(cur.take());
  return name;
}

// Decodes one entity reference; the cursor sits on '&'.
char read_entity(Cursor& cur) {
  struct Entity {
    std::string_view ref;
    char value;
  };
  static constexpr Entity kEntities[] = {
      {"&amp;", '&'}, {"&lt;", '<'}, {"&gt;", '>'}, {"&quot;", '"'}, {"&apos;", '\''},
  };
  for (const auto& e : kEntities) {
    if (cur.starts_with(e.ref)) {
      cur.take(e.ref.size());
      return e.value;
    }
  }
  cur.fail("unknown entity reference");
}

void skip_misc(Cursor& cur) {
  for (;;) {
    cur.skip_space();
    if (cur.starts_with("<!--")) {
      cur.take(4);
      while (!cur.starts_with("-->")) {
        if (cur.done()) cur.fail("unterminated comment");
        cur.take();
      }
      cur.take(3);
      continue;
    }
    if (cur.starts_with("<?")) {
      cur.take(2);
      while (!cur.starts_with("?>")) {
        if (cur.done()) cur.fail("unterminated processing instruction");
        cur.take();
      }
      cur.take(2);
      continue;
    }
    return;
  }
}

std::string read_attribute_value(Cursor& cur) {
  if (cur.done() || (cur.peek() != '"' && cur.peek() != '\'')) {
    cur.fail("expected a quoted attribute value");
  }
  char quote = cur.take();
  std::string value;
  for (;;) {
    if (cur.done()) cur.fail("unterminated attribute value");
    char c = cur.peek();
    if (c == quote) {
      cur.take();
      return value;
    }
    if (c == '<') cur.fail("'<' in attribute value");
    if (c == '&') {
      value.push_back(read_entity(cur));
    } else {
      value.push_back(cur.take());
    }
  }
}

Node read_element(Cursor& cur) {
  if (cur.done() || cur.peek() != '<') cur.fail("expected an element");
  cur.take();
  Node node;
  node.name = read_name(cur);

  for (;;) {
    cur.skip_space();
    if (cur.done()) cur.fail("unterminated start tag");
    if (cur.peek() == '>') {
      cur.take();
      break;
    }
    if (cur.starts_with("/>")) {
      cur.take(2);
      return node;
    }
    std::string attr_name = read_name(cur);
    for (const auto& [existing, _] : node.attributes) {
      if (existing == attr_name) cur.fail("duplicate attribute '" + attr_name + "'");
    }
    cur.skip_space();
    if (cur.done() || cur.peek() != '=') cur.fail("expected '=' after attribute name");
    cur.take();
    cur.skip_space();
    node.attributes.emplace_back(std::move(attr_name), read_attribute_value(cur));
  }

  // Content: character data, children, comments, then the matching end tag.
  for (;;) {
    if (cur.done()) cur.fail("missing end tag for <" + node.name + ">");
    char c = cur.peek();
    if (c == '<') {
      if (cur.starts_with("</")) {
        cur.take(2);
        std::string end_name = read_name(cur);
        if (end_name != node.name) {
          cur.fail("end tag </" + end_name + "> does not match <" + node.name + ">");
        }
        cur.skip_space();
        if (cur.done() || cur.peek() != '>') cur.fail("malformed end tag");
        cur.take();
        return node;
      }
      if (cur.starts_with("<!--")) {
        skip_misc(cur);
        continue;
      }
      node.children.push_back(read_element(cur));
    } else if (c == '&') {
      node.text.push_back(read_entity(cur));
    } else {
      node.text.push_back(cur.take());
    }
  }
}

}  // namespace

const std::string* Node::attribute(std::string_view attr_name) const {
  for (const auto& [name_, value] : attributes) {
    if (name_ == attr_name) return &value;
  }
  return nullptr;
}

const Node* Node::child(std::string_view child_name) const {
  for (const Node& c : children) {
    if (c.name == child_name) return &c;
  }
  return nullptr;
}

Node parse_document(std::string_view input) {
  Cursor cur(input);
  if (cur.starts_with("\xEF\xBB\xBF")) cur.take(3);
  skip_misc(cur);
  if (cur.done()) cur.fail("document has no root element");
  Node root = read_element(cur);
  skip_misc(cur);
  if (!cur.done()) cur.fail("content after the root element");
  return root;
}

std::string escape_text(std::string_view value) {
  std::string out;
  out.reserve(value.size());
  for (char c : value) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string escape_attribute(std::string_view value) {
  std::string out;
  out.reserve(value.size());
  for (char c : value) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace fedql::xml
