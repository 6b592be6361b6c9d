#include "simplikit/lexer.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace simplikit {

namespace {

constexpr std::array<std::string_view, 50> kKeywords = {
    "abstract", "assert",     "boolean",   "break",     "byte",      "case",
    "catch",    "char",       "class",     "const",     "continue",  "default",
    "do",       "double",     "else",      "enum",      "extends",   "final",
    "finally",  "float",      "for",       "goto",      "if",        "implements",
    "import",   "instanceof", "int",       "interface", "long",      "native",
    "new",      "package",    "private",   "protected", "public",    "return",
    "short",    "static",     "strictfp",  "super",     "switch",    "synchronized",
    "this",     "throw",      "throws",    "transient", "try",       "void",
    "volatile", "while"};

// Longest first so that maximal munch picks the right one.
constexpr std::array<std::string_view, 38> kOperators = {
    ">>>=", "<<=", ">>=", ">>>", "...", "->", "::", "++", "--", "&&",
    "||",   "==",  "!=",  "<=",  ">=",  "+=", "-=", "*=", "/=", "&=",
    "|=",   "^=",  "%=",  "<<",  ">>",  "=",  ">",  "<",  "!",  "~",
    "?",    ":",   "+",   "-",   "*",   "/",  "&",  "|"};
constexpr std::string_view kSingleOperators = "^%";
constexpr std::string_view kPunctuation = "(){}[];,.@";

bool is_ident_start(unsigned char c) {
  return std::isalpha(c) || c == '_' || c == '$' || c >= 0x80;
}

bool is_ident_part(unsigned char c) { return is_ident_start(c) || std::isdigit(c); }

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (pos_ < text_.size()) {
      const std::size_t start = pos_;
      const int line = line_;
      const int column = column_;
      const TokenKind kind = scan();
      Token tok;
      tok.kind = kind;
      tok.text = std::string(text_.substr(start, pos_ - start));
      tok.line = line;
      tok.column = column;
      tok.offset = start;
      out.push_back(std::move(tok));
    }
    return out;
  }

 private:
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void advance(std::size_t n = 1) {
    for (std::size_t i = 0; i < n && pos_ < text_.size(); ++i) {
      const char c = text_[pos_++];
      if (c == '\n' || (c == '\r' && peek() != '\n')) {
        ++line_;
        column_ = 1;
      } else if (c != '\r') {
        ++column_;
      }
    }
  }

  bool starts_with(std::string_view s) const { return text_.substr(pos_).starts_with(s); }

  TokenKind scan() {
    const unsigned char c = static_cast<unsigned char>(peek());
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f') {
      while (pos_ < text_.size()) {
        const char w = peek();
        if (w != ' ' && w != '\t' && w != '\n' && w != '\r' && w != '\f') break;
        advance();
      }
      return TokenKind::Whitespace;
    }
    if (starts_with("//")) {
      while (pos_ < text_.size() && peek() != '\n' && peek() != '\r') advance();
      return TokenKind::Comment;
    }
    if (starts_with("/*")) {
      advance(2);
      while (pos_ < text_.size() && !starts_with("*/")) advance();
      advance(2);
      return TokenKind::Comment;
    }
    if (starts_with("\"\"\"")) {
      advance(3);
      while (pos_ < text_.size() && !starts_with("\"\"\"")) {
        if (peek() == '\\') advance();
        advance();
      }
      advance(3);
      return TokenKind::Literal;
    }
    if (c == '"' || c == '\'') {
      const char quote = static_cast<char>(c);
      advance();
      while (pos_ < text_.size() && peek() != quote && peek() != '\n') {
        if (peek() == '\\') advance();
        advance();
      }
      if (peek() == quote) advance();
      return TokenKind::Literal;
    }
    if (std::isdigit(c) || (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
      scan_number();
      return TokenKind::Literal;
    }
    if (is_ident_start(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && is_ident_part(static_cast<unsigned char>(peek()))) advance();
      const std::string_view word = text_.substr(start, pos_ - start);
      if (word == "true" || word == "false" || word == "null") return TokenKind::Literal;
      return is_java_keyword(word) ? TokenKind::Keyword : TokenKind::Identifier;
    }
    for (const std::string_view op : kOperators) {
      if (starts_with(op)) {
        advance(op.size());
        return op == "..." ? TokenKind::Punctuation : TokenKind::Operator;
      }
    }
    if (kPunctuation.find(static_cast<char>(c)) != std::string_view::npos) {
      advance();
      return TokenKind::Punctuation;
    }
    if (kSingleOperators.find(static_cast<char>(c)) != std::string_view::npos) {
      advance();
      return TokenKind::Operator;
    }
    // Unknown byte.
    advance();
    return TokenKind::Operator;
  }

  void scan_number() {
    if (peek() == '0' && (peek(1) == 'x' || peek(1) == 'X' || peek(1) == 'b' || peek(1) == 'B')) {
      advance(2);
      while (std::isxdigit(static_cast<unsigned char>(peek())) || peek() == '_') advance();
    } else {
      while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '_') advance();
      if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
        advance();
        while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '_') advance();
      } else if (peek() == '.' && !std::isalpha(static_cast<unsigned char>(peek(1))) &&
                 peek(1) != '.') {
        advance();  // "1." is a valid double literal
      }
      if (peek() == 'e' || peek() == 'E') {
        const char sign = peek(1);
        if (std::isdigit(static_cast<unsigned char>(sign)) ||
            ((sign == '+' || sign == '-') && std::isdigit(static_cast<unsigned char>(peek(2))))) {
          advance(2);
          while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
        }
      }
    }
    const char suffix = peek();
    if (suffix == 'l' || suffix == 'L' || suffix == 'f' || suffix == 'F' || suffix == 'd' ||
        suffix == 'D') {
      advance();
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

}  // namespace

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::Identifier: return "identifier";
    case TokenKind::Keyword: return "keyword";
    case TokenKind::Literal: return "literal";
    case TokenKind::Operator: return "operator";
    case TokenKind::Punctuation: return "punctuation";
    case TokenKind::Comment: return "comment";
    case TokenKind::Whitespace: return "whitespace";
  }
  return "unknown";
}

bool is_java_keyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

std::vector<Token> tokenize(std::string_view text) { return Lexer(text).run(); }

std::vector<std::string> significant_tokens(std::string_view text) {
  std::vector<std::string> out;
  for (Token& tok : tokenize(text)) {
    if (tok.significant()) out.push_back(std::move(tok.text));
  }
  return out;
}

int token_count(std::string_view text) {
  int n = 0;
  for (const Token& tok : tokenize(text)) n += tok.significant() ? 1 : 0;
  return n;
}

std::vector<bool> significant_lines(std::string_view text) {
  std::vector<bool> lines;
  for (const Token& tok : tokenize(text)) {
    int last = tok.line;
    for (const char c : tok.text) last += (c == '\n') ? 1 : 0;
    if (static_cast<int>(lines.size()) < last) lines.resize(last, false);
    if (!tok.significant()) continue;
    for (int l = tok.line; l <= last; ++l) lines[l - 1] = true;
  }
  return lines;
}

int sloc(std::string_view text) {
  const std::vector<bool> lines = significant_lines(text);
  return static_cast<int>(std::count(lines.begin(), lines.end(), true));
}

std::string token_key(std::string_view text) {
  std::string key;
  for (const Token& tok : tokenize(text)) {
    if (!tok.significant()) continue;
    key += tok.text;
    key += '\x1f';
  }
  return key;
}

}  // namespace simplikit
