#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include "simplikit/lexer.hpp"
#include "simplikit/reducer.hpp"

namespace simplikit::testing {

// A generated method whose stub oracle models "compiles and the fixed
// micro-tests pass": required statements must survive and every local still
// used must still be declared.
struct MicroMethod {
  std::string source;
  std::vector<std::string> statements;
  std::vector<bool> required;
  std::vector<std::string> locals;  // declared name per statement, or ""
};

inline MicroMethod make_micro_method(unsigned seed, int max_statements = 8) {
  std::mt19937 rng(seed);
  const int n = std::uniform_int_distribution<int>(1, max_statements)(rng);
  MicroMethod m;
  std::vector<std::string> declared;
  for (int i = 0; i < n; ++i) {
    const int pick = std::uniform_int_distribution<int>(0, 2)(rng);
    std::string operand = std::to_string(i + 1);
    if (!declared.empty() && std::uniform_int_distribution<int>(0, 1)(rng)) {
      operand = declared[std::uniform_int_distribution<std::size_t>(0, declared.size() - 1)(rng)];
    }
    if (pick < 2 || declared.empty()) {
      const std::string name = "v" + std::to_string(i);
      m.statements.push_back("int " + name + " = " + operand + " + " + std::to_string(i) + ";");
      m.locals.push_back(name);
      declared.push_back(name);
    } else {
      m.statements.push_back("sink(" + operand + ");");
      m.locals.emplace_back();
    }
    m.required.push_back(std::uniform_int_distribution<int>(0, 3)(rng) == 0);
  }
  m.source = "void micro" + std::to_string(seed) + "() {\n";
  for (const std::string& s : m.statements) m.source += "    " + s + "\n";
  m.source += "}\n";
  return m;
}

inline bool micro_oracle(const MicroMethod& m, const MethodUnit& candidate) {
  const std::vector<std::string> lines = normalized_lines(candidate.source);
  const std::set<std::string> present(lines.begin(), lines.end());
  std::multiset<std::string> idents;
  for (const Token& t : candidate.tokens)
    if (t.kind == TokenKind::Identifier) idents.insert(t.text);
  for (std::size_t i = 0; i < m.statements.size(); ++i) {
    const bool here = present.count(m.statements[i]) > 0;
    if (m.required[i] && !here) return false;
    if (!m.locals[i].empty() && !here && idents.count(m.locals[i]) > 0) return false;
  }
  return true;
}

inline Oracle micro_oracle_for(const MicroMethod& m) {
  return Oracle{[m](const MethodUnit& c) { return micro_oracle(m, c); }, true};
}

}  // namespace simplikit::testing
