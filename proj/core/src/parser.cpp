#include "envop/parser.hpp"

#include <cctype>
#include <functional>
#include <set>
#include <sstream>

namespace envop {

namespace {

struct Token {
  enum Type {
    Ident,
    Number,
    LParen,
    RParen,
    Comma,
    Colon,
    Star,
    Plus,
    Minus,
    Equal,
    Slash,
    Greater,
    End
  };
  Type type = End;
  std::string text;
  long value = 0;
  int line = 1, col = 1;
};

[[noreturn]] void fail(const Token& at, const std::string& msg) {
  std::ostringstream os;
  os << "line " << at.line << ", col " << at.col << ": " << msg;
  throw input_error(os.str());
}

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (text[i + j] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    i += k;
  };
  while (i < text.size()) {
    char ch = text[i];
    if (ch == '#') {
      std::size_t j = i;
      while (j < text.size() && text[j] != '\n') ++j;
      advance(j - i);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.col = col;
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) ||
              text[j] == '_'))
        ++j;
      t.type = Token::Ident;
      t.text = text.substr(i, j - i);
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[j])))
        ++j;
      t.type = Token::Number;
      t.text = text.substr(i, j - i);
      t.value = std::stol(t.text);
      advance(j - i);
    } else {
      switch (ch) {
        case '(': t.type = Token::LParen; break;
        case ')': t.type = Token::RParen; break;
        case ',': t.type = Token::Comma; break;
        case ':': t.type = Token::Colon; break;
        case '*': t.type = Token::Star; break;
        case '+': t.type = Token::Plus; break;
        case '-': t.type = Token::Minus; break;
        case '=': t.type = Token::Equal; break;
        case '/': t.type = Token::Slash; break;
        case '>': t.type = Token::Greater; break;
        default:
          fail(t, std::string("unexpected character '") + ch + "'");
      }
      t.text = std::string(1, ch);
      advance(1);
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.type = Token::End;
  end.line = line;
  end.col = col;
  out.push_back(end);
  return out;
}

const std::set<std::string> kKeywords = {"algebra", "operad", "generators",
                                         "relations", "options"};

class Parser {
public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  PresentationDocument run() {
    PresentationDocument doc;
    const Token& head = expect(Token::Ident, "expected 'algebra' or 'operad'");
    if (head.text == "algebra") {
      doc.kind = PresentationDocument::Kind::algebra;
    } else if (head.text == "operad") {
      doc.kind = PresentationDocument::Kind::operad;
    } else {
      fail(head, "expected 'algebra' or 'operad'");
    }
    const Token& name = expect(Token::Ident, "expected a presentation name");
    if (kKeywords.count(name.text)) fail(name, "reserved word used as a name");
    doc.name = name.text;
    doc.algebra.name = doc.name;
    doc.operad.name = doc.name;

    keyword("generators");
    parse_generators(doc);

    keyword("relations");
    while (peek().type != Token::End && !at_keyword("options"))
      parse_relation(doc);

    if (at_keyword("options")) {
      next();
      parse_options(doc);
    }
    if (peek().type != Token::End) fail(peek(), "trailing input");

    if (doc.kind == PresentationDocument::Kind::algebra) {
      doc.algebra.validate();
    } else {
      doc.operad.validate();
    }
    return doc;
  }

private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t k = pos_ + ahead;
    return k < toks_.size() ? toks_[k] : toks_.back();
  }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  const Token& expect(Token::Type ty, const std::string& msg) {
    if (peek().type != ty) fail(peek(), msg);
    return next();
  }
  bool at_keyword(const std::string& kw) const {
    return peek().type == Token::Ident && peek().text == kw;
  }
  void keyword(const std::string& kw) {
    if (!at_keyword(kw)) fail(peek(), "expected '" + kw + "'");
    next();
  }

  void parse_generators(PresentationDocument& doc) {
    while (true) {
      const Token& name = expect(Token::Ident, "expected a generator name");
      if (kKeywords.count(name.text))
        fail(name, "reserved word used as a generator name");
      expect(Token::Colon, "expected ':' after the generator name");
      const Token& num = expect(Token::Number, "expected a number");
      if (num.value < 1) fail(num, "generator weight/arity must be >= 1");
      if (gen_ids_.count(name.text))
        fail(name, "duplicate generator " + name.text);
      if (doc.kind == PresentationDocument::Kind::algebra) {
        gen_ids_[name.text] = doc.algebra.ngens();
        doc.algebra.gen_names.push_back(name.text);
        doc.algebra.gen_weights.push_back(static_cast<int>(num.value));
      } else {
        gen_ids_[name.text] =
            // weight arity-1, the grading of enveloping-operad generators
            doc.operad.gens.add({name.text, static_cast<int>(num.value),
                                 static_cast<int>(num.value) - 1, 0});
      }
      if (peek().type != Token::Comma) break;
      next();
    }
  }

  int resolve(const Token& name) const {
    auto it = gen_ids_.find(name.text);
    if (it == gen_ids_.end()) fail(name, "unknown generator " + name.text);
    return it->second;
  }

  /// Optional "p[/q] *" prefix; returns 1 when absent.
  Rational parse_coefficient() {
    if (peek().type != Token::Number) return Rational(1);
    const Token& num = next();
    long p = num.value, q = 1;
    if (peek().type == Token::Slash) {
      next();
      const Token& den = expect(Token::Number, "expected a denominator");
      if (den.value == 0) fail(den, "zero denominator");
      q = den.value;
    }
    expect(Token::Star, "expected '*' between a coefficient and its term");
    return make_rational(p, q);
  }

  Word parse_word(const PresentationDocument& doc) {
    Word w;
    w.push_back(resolve(expect(Token::Ident, "expected a generator")));
    while (peek().type == Token::Star && peek(1).type == Token::Ident) {
      next();
      w.push_back(resolve(next()));
    }
    (void)doc;
    return w;
  }

  TreeMonomial parse_tree(const PresentationDocument& doc) {
    if (peek().type == Token::Ident) {
      const Token& name = next();
      int g = resolve(name);
      return TreeMonomial::corolla(g, doc.operad.gens[g].arity);
    }
    const Token& open =
        expect(Token::LParen, "expected a generator or '(' in a tree term");
    TreeMonomial left = parse_tree(doc);
    const Token& comp = expect(Token::Ident, "expected a composition 'oN'");
    int slot = -1;
    if (comp.text.size() >= 2 && comp.text[0] == 'o') {
      bool digits = true;
      for (std::size_t i = 1; i < comp.text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(comp.text[i])))
          digits = false;
      if (digits) slot = std::stoi(comp.text.substr(1));
    }
    if (slot < 1) fail(comp, "expected a composition 'oN'");
    TreeMonomial right = parse_tree(doc);
    expect(Token::RParen, "expected ')'");
    if (slot > left.arity()) {
      std::ostringstream os;
      os << "composition slot " << slot << " out of range for a term of arity "
         << left.arity();
      fail(open, os.str());
    }
    return graft(left, slot, right);
  }

  void parse_relation(PresentationDocument& doc) {
    bool is_algebra = doc.kind == PresentationDocument::Kind::algebra;
    WordElement we;
    OperadElement oe;
    Rational sign(1);
    if (peek().type == Token::Minus) {
      next();
      sign = -1;
    } else if (peek().type == Token::Plus) {
      next();
    }
    while (true) {
      const Token& at = peek();
      Rational c = sign * parse_coefficient();
      if (is_algebra) {
        we.add_term(parse_word(doc), c);
      } else {
        try {
          oe.add_term(parse_tree(doc), c);
        } catch (const input_error& e) {
          fail(at, e.what());
        }
      }
      if (peek().type == Token::Plus) {
        next();
        sign = 1;
      } else if (peek().type == Token::Minus) {
        next();
        sign = -1;
      } else {
        break;
      }
    }
    if (is_algebra) {
      doc.algebra.relations.push_back(std::move(we));
    } else {
      doc.operad.relations.push_back(std::move(oe));
    }
  }

  void parse_options(PresentationDocument& doc) {
    while (true) {
      const Token& key = expect(Token::Ident, "expected an option name");
      expect(Token::Equal, "expected '=' after the option name");
      std::string value;
      while (peek().type != Token::Comma && peek().type != Token::End)
        value += next().text;
      if (value.empty()) fail(peek(), "empty option value");
      doc.options[key.text] = value;
      if (peek().type != Token::Comma) break;
      next();
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::map<std::string, int> gen_ids_;
};

}  // namespace

PresentationDocument parse_presentation(const std::string& text) {
  return Parser(text).run();
}

std::string tree_expression(const TreeMonomial& m, const GeneratorSet& gens) {
  if (m.is_unit())
    throw input_error("the operad unit has no expression form");
  const auto& nodes = m.nodes();
  std::size_t pos = 0;
  std::function<std::string()> rec = [&]() -> std::string {
    const auto& n = nodes[pos++];
    std::vector<std::pair<int, std::string>> internal_children;
    for (int c = 0; c < n.nchild; ++c) {
      if (nodes[pos].gen < 0) {
        ++pos;
      } else {
        internal_children.emplace_back(c + 1, rec());
      }
    }
    std::string s = gens[n.gen].name;
    for (auto it = internal_children.rbegin(); it != internal_children.rend();
         ++it)
      s = "(" + s + " o" + std::to_string(it->first) + " " + it->second + ")";
    return s;
  };
  return rec();
}

namespace {

std::string operad_relation_text(const OperadElement& e,
                                 const GeneratorSet& gens) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : e.terms()) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (a != 1) os << a.get_str() << "*";
    os << tree_expression(m, gens);
  }
  return os.str();
}

}  // namespace

std::string print_presentation(const PresentationDocument& d) {
  std::ostringstream os;
  bool is_algebra = d.kind == PresentationDocument::Kind::algebra;
  os << (is_algebra ? "algebra " : "operad ") << d.name << "\n";
  os << "generators ";
  if (is_algebra) {
    for (int g = 0; g < d.algebra.ngens(); ++g) {
      if (g) os << ", ";
      os << d.algebra.gen_names[static_cast<std::size_t>(g)] << ":"
         << d.algebra.gen_weights[static_cast<std::size_t>(g)];
    }
  } else {
    for (int g = 0; g < d.operad.gens.size(); ++g) {
      if (g) os << ", ";
      os << d.operad.gens[g].name << ":" << d.operad.gens[g].arity;
    }
  }
  os << "\nrelations\n";
  // a relation may not render with a leading '-', or re-parsing would
  // fuse it into the previous one; flip the sign (same ideal)
  if (is_algebra) {
    for (const auto& r : d.algebra.relations) {
      if (r.is_zero()) continue;
      std::string s = r.to_string(d.algebra.gen_names);
      if (!s.empty() && s[0] == '-')
        s = (r * Rational(-1)).to_string(d.algebra.gen_names);
      os << "  " << s << "\n";
    }
  } else {
    for (const auto& r : d.operad.relations) {
      if (r.is_zero()) continue;
      std::string s = operad_relation_text(r, d.operad.gens);
      if (!s.empty() && s[0] == '-')
        s = operad_relation_text(r * Rational(-1), d.operad.gens);
      os << "  " << s << "\n";
    }
  }
  if (!d.options.empty()) {
    os << "options ";
    bool first = true;
    for (const auto& [k, v] : d.options) {
      if (!first) os << ", ";
      first = false;
      os << k << " = " << v;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace envop
