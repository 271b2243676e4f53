#include "wordlab/word.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "wordlab/errors.hpp"

namespace wordlab {

namespace {

void collect_vars(const WordNode& node, std::set<std::string>& out) {
  if (node.kind == NodeKind::Var) out.insert(node.var);
  for (const auto& c : node.children) collect_vars(c, out);
}

long long var_index(const std::string& name) {
  return std::stoll(name.substr(1));
}

bool valid_var_name(const std::string& name) {
  if (name.size() < 2 || name[0] != 'x') return false;
  if (name.size() > 10) return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c));
  });
}

}  // namespace

Word::Word(WordNode root) : root_(std::move(root)) {
  std::set<std::string> names;
  collect_vars(root_, names);
  variables_.assign(names.begin(), names.end());
  std::sort(variables_.begin(), variables_.end(),
            [](const std::string& a, const std::string& b) {
              auto ia = var_index(a), ib = var_index(b);
              return ia != ib ? ia < ib : a < b;
            });
}

Word Word::variable(const std::string& name) {
  if (!valid_var_name(name))
    throw ValidationError("variable name must match x<digits>: '" + name + "'");
  WordNode n;
  n.kind = NodeKind::Var;
  n.var = name;
  return Word(std::move(n));
}

Word Word::inverse(Word w) {
  WordNode n;
  n.kind = NodeKind::Inverse;
  n.children.push_back(std::move(w.root_));
  return Word(std::move(n));
}

Word Word::power(Word w, long long e) {
  if (e == 0) throw ValidationError("power exponent must be nonzero");
  WordNode n;
  n.kind = NodeKind::Power;
  n.exponent = e;
  n.children.push_back(std::move(w.root_));
  return Word(std::move(n));
}

Word Word::product(std::vector<Word> factors) {
  if (factors.size() < 2)
    throw ValidationError("product needs at least two factors");
  WordNode n;
  n.kind = NodeKind::Product;
  for (auto& f : factors) n.children.push_back(std::move(f.root_));
  return Word(std::move(n));
}

Word Word::commutator(Word lhs, Word rhs) {
  WordNode n;
  n.kind = NodeKind::Commutator;
  n.children.push_back(std::move(lhs.root_));
  n.children.push_back(std::move(rhs.root_));
  return Word(std::move(n));
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  WordNode parse() {
    auto node = parse_word();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return node;
  }

private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool at_atom_start() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return c == 'x' || c == '(' || c == '[';
  }

  WordNode parse_word() {
    std::vector<WordNode> terms;
    terms.push_back(parse_term());
    while (at_atom_start()) terms.push_back(parse_term());
    if (terms.size() == 1) return std::move(terms[0]);
    WordNode n;
    n.kind = NodeKind::Product;
    n.children = std::move(terms);
    return n;
  }

  WordNode parse_term() {
    WordNode atom = parse_atom();
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      long long e = parse_int();
      WordNode n;
      n.kind = NodeKind::Power;
      n.exponent = e;
      n.children.push_back(std::move(atom));
      return n;
    }
    return atom;
  }

  WordNode parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("expected variable, '(' or '['", pos_);
    char c = text_[pos_];
    if (c == 'x') return parse_var();
    if (c == '(') {
      ++pos_;
      WordNode inner = parse_word();
      expect(')');
      return inner;
    }
    if (c == '[') {
      // [u,v,w,...] folds left-normed: [[u,v],w]...
      ++pos_;
      WordNode acc = parse_word();
      expect(',');
      while (true) {
        WordNode rhs = parse_word();
        WordNode n;
        n.kind = NodeKind::Commutator;
        n.children.push_back(std::move(acc));
        n.children.push_back(std::move(rhs));
        acc = std::move(n);
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ',') {
          ++pos_;
          continue;
        }
        break;
      }
      expect(']');
      return acc;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  WordNode parse_var() {
    std::size_t start = pos_;
    ++pos_;  // 'x'
    std::size_t digits = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
      ++digits;
    }
    if (digits == 0) throw ParseError("variable needs digits after 'x'", start);
    if (digits > 9) throw ParseError("variable index too long", start);
    WordNode n;
    n.kind = NodeKind::Var;
    n.var = std::string(text_.substr(start, pos_ - start));
    return n;
  }

  long long parse_int() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    std::size_t digits = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
      ++digits;
    }
    if (digits == 0) throw ParseError("expected integer exponent", start);
    if (digits > 12) throw ParseError("exponent too long", start);
    long long v = std::stoll(std::string(text_.substr(start, pos_ - start)));
    if (v == 0) throw ParseError("exponent must be nonzero", start);
    return v;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i == text.size()) throw ParseError("empty word", 0);
  Parser p(text);
  WordNode root = p.parse();
  // route through the factories to reuse their construction
  struct Rebuild {
    static Word run(const WordNode& n) {
      switch (n.kind) {
        case NodeKind::Var:
          return Word::variable(n.var);
        case NodeKind::Inverse:
          return Word::inverse(run(n.children[0]));
        case NodeKind::Power:
          return Word::power(run(n.children[0]), n.exponent);
        case NodeKind::Commutator:
          return Word::commutator(run(n.children[0]), run(n.children[1]));
        case NodeKind::Product: {
          std::vector<Word> fs;
          fs.reserve(n.children.size());
          for (const auto& c : n.children) fs.push_back(run(c));
          return Word::product(std::move(fs));
        }
      }
      throw InternalError("unreachable word node kind");
    }
  };
  return Rebuild::run(root);
}

// --------------------------------------------------------------- rendering

namespace {

void render_node(const WordNode& n, std::string& out);

// Atoms per the grammar: variables and bracketed forms need no parentheses.
bool is_atom(const WordNode& n) {
  return n.kind == NodeKind::Var || n.kind == NodeKind::Commutator;
}

void render_as_atom(const WordNode& n, std::string& out) {
  if (is_atom(n)) {
    render_node(n, out);
  } else {
    out += '(';
    render_node(n, out);
    out += ')';
  }
}

void render_node(const WordNode& n, std::string& out) {
  switch (n.kind) {
    case NodeKind::Var:
      out += n.var;
      return;
    case NodeKind::Inverse:
      render_as_atom(n.children[0], out);
      out += "^-1";
      return;
    case NodeKind::Power:
      render_as_atom(n.children[0], out);
      out += '^';
      out += std::to_string(n.exponent);
      return;
    case NodeKind::Commutator:
      out += '[';
      render_node(n.children[0], out);
      out += ',';
      render_node(n.children[1], out);
      out += ']';
      return;
    case NodeKind::Product:
      for (const auto& c : n.children) {
        // nested products flatten; power/inverse render as terms already
        if (c.kind == NodeKind::Product)
          render_node(c, out);
        else if (c.kind == NodeKind::Power || c.kind == NodeKind::Inverse)
          render_node(c, out);
        else
          render_as_atom(c, out);
      }
      return;
  }
}

}  // namespace

std::string Word::render() const {
  std::string out;
  render_node(root_, out);
  return out;
}

Word gamma_power_word(const std::vector<long long>& exponents) {
  if (exponents.empty())
    throw ValidationError("gamma power word needs at least one exponent");
  for (long long e : exponents)
    if (e < 1) throw ValidationError("gamma power word exponents must be positive");
  Word w = Word::variable("x1");
  if (exponents[0] != 1) w = Word::power(std::move(w), exponents[0]);
  for (std::size_t i = 1; i < exponents.size(); ++i) {
    w = Word::commutator(std::move(w), Word::variable("x" + std::to_string(i + 1)));
    if (exponents[i] != 1) w = Word::power(std::move(w), exponents[i]);
  }
  return w;
}

}  // namespace wordlab
