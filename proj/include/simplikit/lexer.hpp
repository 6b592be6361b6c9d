#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace simplikit {

enum class TokenKind {
  Identifier,
  Keyword,
  Literal,
  Operator,
  Punctuation,
  Comment,
  Whitespace,
};

std::string_view to_string(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::Whitespace;
  std::string text;
  int line = 1;            // 1-based line of the first byte
  int column = 1;          // 1-based column of the first byte
  std::size_t offset = 0;  // byte offset into the lexed text

  bool significant() const noexcept {
    return kind != TokenKind::Comment && kind != TokenKind::Whitespace;
  }
  std::size_t end() const noexcept { return offset + text.size(); }
};

/// Lossless lexer for Java source. Concatenating the texts of the returned
/// tokens reproduces `text` byte for byte. Bytes that start no valid token
/// become single-character operator tokens.
std::vector<Token> tokenize(std::string_view text);

/// Texts of the significant (non-comment, non-whitespace) tokens.
std::vector<std::string> significant_tokens(std::string_view text);

/// Number of significant tokens.
int token_count(std::string_view text);

/// Number of lines holding at least one significant token.
int sloc(std::string_view text);

/// Stable key over the significant-token sequence. Two texts get the same
/// key iff they are equal modulo comments and whitespace.
std::string token_key(std::string_view text);

/// Java reserved words (including the literals true, false, null).
bool is_java_keyword(std::string_view word);

/// Per-line flags: element i is true when line i+1 contains a significant token.
std::vector<bool> significant_lines(std::string_view text);

}  // namespace simplikit
