#include "simplikit/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "simplikit/error.hpp"

namespace simplikit {

namespace {

using nlohmann::json;

class TomlParser {
 public:
  explicit TomlParser(std::string_view text) : s_(text) {}

  json run() {
    json root = json::object();
    json* table = &root;
    while (true) {
      skip_blank_lines();
      if (eof()) break;
      if (peek() == '[') {
        table = header(root);
      } else {
        key_value(*table);
      }
      end_of_line();
    }
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ConfigError("toml line " + std::to_string(line_) + ": " + what);
  }
  bool eof() const { return i_ >= s_.size(); }
  char peek(std::size_t k = 0) const { return i_ + k < s_.size() ? s_[i_ + k] : '\0'; }
  char get() {
    const char c = s_[i_++];
    if (c == '\n') ++line_;
    return c;
  }
  void skip_ws() {
    while (!eof() && (peek() == ' ' || peek() == '\t')) ++i_;
  }
  void skip_comment() {
    if (peek() == '#')
      while (!eof() && peek() != '\n') ++i_;
  }
  void skip_blank_lines() {
    while (!eof()) {
      skip_ws();
      skip_comment();
      if (peek() == '\r') ++i_;
      if (peek() == '\n') {
        get();
        continue;
      }
      break;
    }
  }
  // whitespace, comments and newlines inside arrays
  void skip_all() {
    while (!eof()) {
      skip_ws();
      skip_comment();
      if (peek() == '\n' || peek() == '\r') {
        get();
        continue;
      }
      break;
    }
  }
  void end_of_line() {
    skip_ws();
    skip_comment();
    if (peek() == '\r') ++i_;
    if (eof()) return;
    if (peek() != '\n') fail("expected end of line");
    get();
  }

  std::vector<std::string> key_path() {
    std::vector<std::string> parts;
    while (true) {
      skip_ws();
      if (peek() == '"') {
        parts.push_back(basic_string());
      } else if (peek() == '\'') {
        parts.push_back(literal_string());
      } else {
        std::string k;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '-'))
          k += get();
        if (k.empty()) fail("expected key");
        parts.push_back(k);
      }
      skip_ws();
      if (peek() != '.') break;
      ++i_;
    }
    return parts;
  }

  json* descend(json& root, const std::vector<std::string>& path, std::size_t count) {
    json* t = &root;
    for (std::size_t k = 0; k < count; ++k) {
      json& next = (*t)[path[k]];
      if (next.is_null()) next = json::object();
      if (next.is_array() && !next.empty() && next.back().is_object()) {
        t = &next.back();
      } else if (next.is_object()) {
        t = &next;
      } else {
        fail("key '" + path[k] + "' is not a table");
      }
    }
    return t;
  }

  json* header(json& root) {
    ++i_;
    const bool array = peek() == '[';
    if (array) ++i_;
    const std::vector<std::string> path = key_path();
    if (peek() != ']') fail("expected ]");
    ++i_;
    if (array) {
      if (peek() != ']') fail("expected ]]");
      ++i_;
    }
    json* parent = descend(root, path, path.size() - 1);
    json& slot = (*parent)[path.back()];
    if (array) {
      if (slot.is_null()) slot = json::array();
      if (!slot.is_array()) fail("'" + path.back() + "' is not an array of tables");
      slot.push_back(json::object());
      return &slot.back();
    }
    if (slot.is_null()) slot = json::object();
    if (!slot.is_object()) fail("'" + path.back() + "' is not a table");
    return &slot;
  }

  void key_value(json& table) {
    const std::vector<std::string> path = key_path();
    if (peek() != '=') fail("expected =");
    ++i_;
    skip_ws();
    json* t = descend(table, path, path.size() - 1);
    if (t->contains(path.back())) fail("duplicate key '" + path.back() + "'");
    (*t)[path.back()] = value();
  }

  std::string basic_string() {
    ++i_;
    std::string out;
    while (true) {
      if (eof() || peek() == '\n') fail("unterminated string");
      const char c = get();
      if (c == '"') break;
      if (c != '\\') {
        out += c;
        continue;
      }
      const char e = get();
      switch (e) {
        case 'n': out += '\n'; break;
        case 't': out += '\t'; break;
        case 'r': out += '\r'; break;
        case '"': out += '"'; break;
        case '\\': out += '\\'; break;
        case 'u': {
          const unsigned long cp = std::stoul(std::string(s_.substr(i_, 4)), nullptr, 16);
          i_ += 4;
          if (cp < 0x80) {
            out += static_cast<char>(cp);
          } else if (cp < 0x800) {
            out += static_cast<char>(0xC0 | (cp >> 6));
            out += static_cast<char>(0x80 | (cp & 0x3F));
          } else {
            out += static_cast<char>(0xE0 | (cp >> 12));
            out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
            out += static_cast<char>(0x80 | (cp & 0x3F));
          }
          break;
        }
        default: fail(std::string("bad escape \\") + e);
      }
    }
    return out;
  }

  std::string literal_string() {
    ++i_;
    std::string out;
    while (true) {
      if (eof() || peek() == '\n') fail("unterminated string");
      const char c = get();
      if (c == '\'') break;
      out += c;
    }
    return out;
  }

  json value() {
    const char c = peek();
    if (c == '"') return basic_string();
    if (c == '\'') return literal_string();
    if (c == '[') {
      ++i_;
      json arr = json::array();
      while (true) {
        skip_all();
        if (peek() == ']') {
          ++i_;
          return arr;
        }
        arr.push_back(value());
        skip_all();
        if (peek() == ',') {
          ++i_;
        } else if (peek() != ']') {
          fail("expected , or ] in array");
        }
      }
    }
    if (c == '{') {
      ++i_;
      json obj = json::object();
      skip_ws();
      if (peek() == '}') {
        ++i_;
        return obj;
      }
      while (true) {
        key_value(obj);
        skip_ws();
        if (peek() == ',') {
          ++i_;
          continue;
        }
        if (peek() != '}') fail("expected , or } in inline table");
        ++i_;
        return obj;
      }
    }
    std::string word;
    while (!eof() && !std::isspace(static_cast<unsigned char>(peek())) && peek() != ',' && peek() != ']' &&
           peek() != '}' && peek() != '#')
      word += get();
    if (word == "true") return true;
    if (word == "false") return false;
    std::string digits;
    for (char d : word)
      if (d != '_') digits += d;
    if (digits.empty()) fail("expected value");
    try {
      std::size_t used = 0;
      if (digits.find_first_of(".eE") == std::string::npos || digits.starts_with("0x")) {
        const long long v = std::stoll(digits, &used, 0);
        if (used == digits.size()) return v;
      } else {
        const double v = std::stod(digits, &used);
        if (used == digits.size()) return v;
      }
    } catch (const std::exception&) {
    }
    fail("bad value '" + word + "'");
  }

  std::string_view s_;
  std::size_t i_ = 0;
  int line_ = 1;
};

}  // namespace

nlohmann::json parse_toml(std::string_view text) { return TomlParser(text).run(); }

nlohmann::json load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  if (path.extension() == ".json") {
    try {
      return nlohmann::json::parse(buf.str());
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(path.string() + ": " + e.what());
    }
  }
  try {
    return parse_toml(buf.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

}  // namespace simplikit
