#pragma once

#include <cctype>
#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "openbook/errors.hpp"

namespace openbook {

// Ordered key/value tree behind the machine output format. Serialization is
// canonical (two-space indents, "key = value" leaves, "key {" subtrees), so
// parse-then-serialize reproduces the input byte for byte.
class ReportTree {
 public:
  ReportTree() = default;
  ReportTree(ReportTree&&) = default;
  ReportTree& operator=(ReportTree&&) = default;

  void add(std::string key, std::string value) {
    items_.push_back({std::move(key), std::move(value), nullptr});
  }

  ReportTree& add_tree(std::string key) {
    items_.push_back({std::move(key), {}, std::make_unique<ReportTree>()});
    return *items_.back().child;
  }

  bool operator==(const ReportTree& o) const {
    if (items_.size() != o.items_.size()) return false;
    for (std::size_t i = 0; i < items_.size(); ++i) {
      const Item& a = items_[i];
      const Item& b = o.items_[i];
      if (a.key != b.key || (a.child == nullptr) != (b.child == nullptr)) return false;
      if (a.child) {
        if (!(*a.child == *b.child)) return false;
      } else if (a.value != b.value) {
        return false;
      }
    }
    return true;
  }

  std::string serialize() const {
    std::string out;
    write(out, 0);
    return out;
  }

  static ReportTree parse(const std::string& text) {
    ReportTree root;
    std::vector<ReportTree*> stack{&root};
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t eol = text.find('\n', pos);
      if (eol == std::string::npos)
        throw ParseError(line_no + 1, text.size() - pos + 1, "missing final newline");
      const std::string line = text.substr(pos, eol - pos);
      pos = eol + 1;
      ++line_no;

      std::size_t indent = 0;
      while (indent < line.size() && line[indent] == ' ') ++indent;
      if (indent % 2 != 0 || indent / 2 >= stack.size() + 1)
        throw ParseError(line_no, indent + 1, "bad indentation");
      const std::size_t depth = indent / 2;
      const std::string body = line.substr(indent);

      if (body == "}") {
        if (stack.size() < 2 || depth != stack.size() - 2)
          throw ParseError(line_no, indent + 1, "unmatched '}'");
        stack.pop_back();
        continue;
      }
      if (depth != stack.size() - 1)
        throw ParseError(line_no, indent + 1, "bad indentation");

      std::size_t key_end = 0;
      while (key_end < body.size() && (std::isalnum((unsigned char)body[key_end]) ||
                                       body[key_end] == '_'))
        ++key_end;
      if (key_end == 0) throw ParseError(line_no, indent + 1, "expected a key");
      const std::string key = body.substr(0, key_end);
      const std::string rest = body.substr(key_end);

      if (rest == " {") {
        stack.push_back(&stack.back()->add_tree(key));
      } else if (rest.rfind(" = ", 0) == 0) {
        stack.back()->add(key, rest.substr(3));
      } else {
        throw ParseError(line_no, indent + key_end + 1, "expected ' = value' or ' {'");
      }
    }
    if (stack.size() != 1)
      throw ParseError(line_no + 1, 1, "unterminated subtree");
    return root;
  }

 private:
  struct Item {
    std::string key;
    std::string value;
    std::unique_ptr<ReportTree> child;
  };

  void write(std::string& out, std::size_t depth) const {
    const std::string pad(2 * depth, ' ');
    for (const Item& it : items_) {
      if (it.child) {
        out += pad + it.key + " {\n";
        it.child->write(out, depth + 1);
        out += pad + "}\n";
      } else {
        out += pad + it.key + " = " + it.value + "\n";
      }
    }
  }

  std::vector<Item> items_;
};

}  // namespace openbook
