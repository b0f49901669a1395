#include "spinhecke/expr.hpp"

#include <cctype>

namespace spinhecke {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  AstPtr parse() {
    skip();
    if (pos_ == s_.size()) throw ParseError("empty_expression", "expected an expression", pos_);
    auto e = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError("unexpected_token", std::string("unexpected '") + s_[pos_] + "'", pos_);
    return e;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  AstPtr expr() {
    auto node = std::make_shared<Ast>();
    node->kind = Ast::Kind::Sum;
    node->offset = pos_;
    int sign = 1;
    if (peek('+')) {
      ++pos_;
    } else if (peek('-')) {
      ++pos_;
      sign = -1;
    }
    node->children.push_back(term());
    node->signs.push_back(sign);
    while (peek('+') || peek('-')) {
      sign = s_[pos_] == '+' ? 1 : -1;
      ++pos_;
      node->children.push_back(term());
      node->signs.push_back(sign);
    }
    if (node->children.size() == 1 && sign > 0) return node->children[0];
    return node;
  }

  AstPtr term() {
    auto node = std::make_shared<Ast>();
    node->kind = Ast::Kind::Product;
    skip();
    node->offset = pos_;
    node->children.push_back(factor());
    while (peek('*')) {
      ++pos_;
      node->children.push_back(factor());
    }
    if (node->children.size() == 1) return node->children[0];
    return node;
  }

  AstPtr factor() {
    auto base = atom();
    if (!peek('^')) return base;
    std::size_t at = pos_;
    ++pos_;
    skip();
    int sign = 1;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      sign = s_[pos_] == '-' ? -1 : 1;
      ++pos_;
    }
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      throw ParseError("expected_exponent", "expected an integer exponent", pos_);
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_++] - '0');
      if (v > 1000000) throw ParseError("exponent_too_large", "exponent too large", at);
    }
    auto node = std::make_shared<Ast>();
    node->kind = Ast::Kind::Power;
    node->offset = at;
    node->exponent = static_cast<int>(sign * v);
    node->children.push_back(base);
    return node;
  }

  mpz_class integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return mpz_class(s_.substr(start, pos_ - start));
  }

  AstPtr atom() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected_end", "unexpected end of input", pos_);
    char ch = s_[pos_];
    auto node = std::make_shared<Ast>();
    node->offset = pos_;
    if (ch == '(') {
      ++pos_;
      auto inner = expr();
      if (!peek(')')) throw ParseError("expected_rparen", "expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      mpz_class num = integer();
      mpz_class den = 1;
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
          throw ParseError("expected_denominator", "expected a denominator", pos_);
        std::size_t at = pos_;
        den = integer();
        if (den == 0) throw ParseError("division_by_zero", "zero denominator", at);
      }
      node->kind = Ast::Kind::Number;
      node->number = GaussRat(mpq_class(num, den));
      return node;
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      int index = -1;
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        std::size_t at = pos_;
        mpz_class v = integer();
        if (v > 1000) throw ParseError("index_out_of_range", "generator index too large", at);
        index = static_cast<int>(v.get_si());
      }
      if (index < 0 && (name == "q" || name == "e" || name == "i")) {
        node->kind = Ast::Kind::Param;
        node->param = name[0];
        return node;
      }
      node->kind = Ast::Kind::Gen;
      node->name = name;
      node->index = index;
      return node;
    }
    throw ParseError("unexpected_token", std::string("unexpected '") + ch + "'", pos_);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

AstPtr parse_ast(const std::string& text) { return Parser(text).parse(); }

bool is_scalar_ast(const Ast& a) {
  switch (a.kind) {
    case Ast::Kind::Number:
    case Ast::Kind::Param:
      return true;
    case Ast::Kind::Gen:
      return false;
    default:
      for (const auto& c : a.children)
        if (!is_scalar_ast(*c)) return false;
      return true;
  }
}

Laurent eval_scalar(const Ast& a) {
  switch (a.kind) {
    case Ast::Kind::Number:
      return Laurent(a.number);
    case Ast::Kind::Param:
      if (a.param == 'q') return Laurent::q(1);
      if (a.param == 'e') return Laurent::epsilon();
      return Laurent(GaussRat::i());
    case Ast::Kind::Sum: {
      Laurent acc;
      for (std::size_t k = 0; k < a.children.size(); ++k) {
        Laurent c = eval_scalar(*a.children[k]);
        acc = a.signs[k] > 0 ? acc + c : acc - c;
      }
      return acc;
    }
    case Ast::Kind::Product: {
      Laurent acc(1);
      for (const auto& c : a.children) acc *= eval_scalar(*c);
      return acc;
    }
    case Ast::Kind::Power: {
      Laurent b = eval_scalar(*a.children[0]);
      if (a.exponent < 0 && !b.is_monomial())
        throw ParseError("negative_power", "only monomials have negative powers", a.offset);
      return b.pow(a.exponent);
    }
    default:
      throw ParseError("unexpected_generator", "generator in a scalar expression", a.offset);
  }
}

Laurent parse_laurent(const std::string& text) {
  auto ast = parse_ast(text);
  if (!is_scalar_ast(*ast)) {
    // report the first generator
    const Ast* cur = ast.get();
    while (cur->kind != Ast::Kind::Gen) {
      for (const auto& c : cur->children) {
        if (!is_scalar_ast(*c)) {
          cur = c.get();
          break;
        }
      }
    }
    throw ParseError("unexpected_generator", "generator '" + cur->name + "' in a scalar", cur->offset);
  }
  return eval_scalar(*ast);
}

Gen GenRef::to_gen() const {
  GenKind kind{};
  if (!kind_from_name(name, kind)) throw ParseError("unknown_generator", "unknown generator '" + name + "'", offset);
  if (kind == GenKind::z) {
    if (index >= 0) throw ParseError("unknown_generator", "z takes no index", offset);
    return Gen{kind, 0};
  }
  if (index < 0) throw ParseError("missing_index", "generator '" + name + "' needs an index", offset);
  return Gen{kind, index};
}

}  // namespace spinhecke
