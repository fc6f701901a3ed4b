#include "framiz/word.hpp"

#include <cctype>
#include <set>

namespace framiz {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  ExprPtr parse() {
    auto e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError, why + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool starts_atom() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(';
  }

  static ExprPtr node(Expr::Kind k, std::vector<ExprPtr> kids = {}) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->kids = std::move(kids);
    return e;
  }

  long long integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 15) fail("integer too long");
    return std::stoll(s_.substr(start, pos_ - start));
  }

  ExprPtr expr() {
    auto l = term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        l = node(Expr::Kind::Add, {l, term()});
      } else if (peek('-')) {
        ++pos_;
        l = node(Expr::Kind::Sub, {l, term()});
      } else {
        return l;
      }
    }
  }

  ExprPtr term() {
    auto l = unary();
    while (true) {
      if (peek('*')) {
        ++pos_;
        l = node(Expr::Kind::Mul, {l, unary()});
      } else if (peek('/')) {
        ++pos_;
        l = node(Expr::Kind::Div, {l, unary()});
      } else if (starts_atom()) {
        l = node(Expr::Kind::Mul, {l, power()});
      } else {
        return l;
      }
    }
  }

  ExprPtr unary() {
    if (peek('-')) {
      ++pos_;
      return node(Expr::Kind::Neg, {unary()});
    }
    return power();
  }

  ExprPtr power() {
    auto b = atom();
    if (!peek('^')) return b;
    ++pos_;
    bool neg = false;
    if (peek('-')) {
      ++pos_;
      neg = true;
    }
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Pow;
    e->kids = {b};
    e->exponent = neg ? -integer() : integer();
    return e;
  }

  ExprPtr atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      auto e = expr();
      if (!peek(')')) fail("missing ')'");
      ++pos_;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Num;
      e->num = mpq_class(static_cast<long>(integer()));
      return e;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) fail("unexpected '" + std::string(1, c) + "'");
    ++pos_;
    auto e = std::make_shared<Expr>();
    bool has_index = pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    switch (c) {
      case 'q':
      case 'a':
      case 'z':
        if (has_index) fail("scalar symbols take no index");
        e->kind = c == 'q' ? Expr::Kind::Q : c == 'a' ? Expr::Kind::A : Expr::Kind::Zeta;
        return e;
      case 't':
      case 's':
      case 'e':
      case 'E':
      case 'L': {
        if (!has_index) fail(std::string("symbol '") + c + "' needs an index");
        int i = static_cast<int>(integer());
        e->index = i;
        if (c == 'L') {
          if (i < 1) fail("L index must be >= 1");
          e->kind = Expr::Kind::Lambda3;
          return e;
        }
        e->kind = Expr::Kind::Gen;
        e->sym = std::string(1, c) + std::to_string(i);
        if (c == 'E' && pos_ < s_.size() && s_[pos_] == '_') {
          ++pos_;
          e->sym += "," + std::to_string(integer());
        }
        return e;
      }
      default:
        fail(std::string("unknown symbol '") + c + "'");
    }
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

void collect(const Expr& e, std::set<std::string>& out) {
  if (e.kind == Expr::Kind::Gen) out.insert(e.sym);
  if (e.kind == Expr::Kind::Lambda3) {
    out.insert("s" + std::to_string(e.index));
    out.insert("s" + std::to_string(e.index + 1));
  }
  if (e.kind == Expr::Kind::Pow && e.exponent < 0 && e.kids[0]->kind == Expr::Kind::Gen && e.kids[0]->sym[0] == 's')
    out.insert(e.kids[0]->sym + "^-1");
  for (const auto& k : e.kids) collect(*k, out);
}

}  // namespace

ExprPtr parse_word(const std::string& text) { return Parser(text).parse(); }

std::string to_string(const Expr& e) {
  auto bin = [&](const char* op) { return "(" + to_string(*e.kids[0]) + op + to_string(*e.kids[1]) + ")"; };
  switch (e.kind) {
    case Expr::Kind::Num: return e.num.get_str();
    case Expr::Kind::Q: return "q";
    case Expr::Kind::A: return "a";
    case Expr::Kind::Zeta: return "z";
    case Expr::Kind::Gen: {
      auto c = e.sym.find(',');
      return c == std::string::npos ? e.sym : e.sym.substr(0, c) + "_" + e.sym.substr(c + 1);
    }
    case Expr::Kind::Lambda3: return "L" + std::to_string(e.index);
    case Expr::Kind::Add: return bin(" + ");
    case Expr::Kind::Sub: return bin(" - ");
    case Expr::Kind::Mul: return bin(" ");
    case Expr::Kind::Div: return bin(" / ");
    case Expr::Kind::Neg: return "-" + to_string(*e.kids[0]);
    case Expr::Kind::Pow: return to_string(*e.kids[0]) + "^" + std::to_string(e.exponent);
  }
  return "?";
}

std::vector<std::string> symbols_of(const Expr& e) {
  std::set<std::string> s;
  collect(e, s);
  return {s.begin(), s.end()};
}

}  // namespace framiz
