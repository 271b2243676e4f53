#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace wordlab {

enum class NodeKind { Var, Inverse, Power, Product, Commutator };

struct WordNode {
  NodeKind kind = NodeKind::Var;
  std::string var;             // Var
  long long exponent = 0;      // Power, nonzero
  std::vector<WordNode> children;
};

/// A group word in variables x<digits>. Immutable; the variable list is the
/// set of distinct names ordered by index.
class Word {
public:
  static Word variable(const std::string& name);
  static Word inverse(Word w);
  static Word power(Word w, long long e);  // e != 0
  static Word product(std::vector<Word> factors);  // >= 2 factors
  static Word commutator(Word lhs, Word rhs);  // [u,v] = u^-1 v^-1 u v

  const WordNode& root() const { return root_; }
  const std::vector<std::string>& variables() const { return variables_; }
  int arity() const { return static_cast<int>(variables_.size()); }

  /// Canonical text: minimal parentheses, "^" for powers, nested products
  /// flattened. parse_word(render()) reproduces the rendered form exactly.
  std::string render() const;

private:
  explicit Word(WordNode root);
  WordNode root_;
  std::vector<std::string> variables_;
};

/// Grammar:
///   word := term { term }          (juxtaposition is product)
///   term := atom [ "^" int ]       (int nonzero, may be negative)
///   atom := var | "(" word ")" | "[" word "," word "]"
///   var  := "x" digits
Word parse_word(std::string_view text);

/// [...[x1^n1, x2]^n2, ..., xk]^nk for positive exponents; a single exponent
/// yields x1^n1, and exponent 1 adds no power node.
Word gamma_power_word(const std::vector<long long>& exponents);

}  // namespace wordlab
