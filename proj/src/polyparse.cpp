#include "cremona/polyparse.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace cremona {

namespace {

struct Tok {
  enum Kind { Int, Name, Op, End } kind;
  std::string text;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }
  const Tok& peek() const { return tok_; }
  Tok take() {
    Tok t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (i_ >= s_.size()) {
      tok_ = {Tok::End, ""};
      return;
    }
    char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i_;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      tok_ = {Tok::Int, s_.substr(i_, j - i_)};
      i_ = j;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t j = i_;
      while (j < s_.size() && std::isalnum(static_cast<unsigned char>(s_[j]))) ++j;
      tok_ = {Tok::Name, s_.substr(i_, j - i_)};
      i_ = j;
      return;
    }
    static const std::string ops = "+-*/^()";
    if (ops.find(c) != std::string::npos) {
      tok_ = {Tok::Op, std::string(1, c)};
      ++i_;
      return;
    }
    throw parse_error(std::string("unexpected character '") + c + "'");
  }

  const std::string& s_;
  size_t i_ = 0;
  Tok tok_;
};

// trivariate rational expressions; plenty for parsing inputs
struct TriPoly {
  FieldPtr f;
  std::map<std::array<int, 3>, Scalar> t;

  static TriPoly constant(const FieldPtr& f, Scalar c) {
    TriPoly p{f, {}};
    if (!c.is_zero()) p.t.emplace(std::array<int, 3>{0, 0, 0}, std::move(c));
    return p;
  }
  bool is_zero() const { return t.empty(); }
  bool is_constant() const {
    return t.empty() || (t.size() == 1 && t.begin()->first == std::array<int, 3>{0, 0, 0});
  }
  Scalar constant_value() const {
    return t.empty() ? Scalar::zero(f) : t.begin()->second;
  }
};

TriPoly tp_add(const TriPoly& a, const TriPoly& b) {
  TriPoly r = a;
  r.f = join_field(a.f, b.f);
  for (const auto& [k, v] : b.t) {
    auto it = r.t.find(k);
    if (it == r.t.end()) r.t.emplace(k, v);
    else {
      it->second += v;
      if (it->second.is_zero()) r.t.erase(it);
    }
  }
  return r;
}

TriPoly tp_neg(const TriPoly& a) {
  TriPoly r = a;
  for (auto& [k, v] : r.t) v = -v;
  return r;
}

TriPoly tp_mul(const TriPoly& a, const TriPoly& b) {
  TriPoly r{join_field(a.f, b.f), {}};
  for (const auto& [ka, va] : a.t)
    for (const auto& [kb, vb] : b.t) {
      std::array<int, 3> k{ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]};
      Scalar prod = va * vb;
      auto it = r.t.find(k);
      if (it == r.t.end()) r.t.emplace(k, std::move(prod));
      else {
        it->second += prod;
        if (it->second.is_zero()) r.t.erase(it);
      }
    }
  return r;
}

struct TriRat {
  TriPoly n, d;
};

TriRat tr_make(TriPoly n, TriPoly d) {
  if (d.is_zero()) throw math_error("division by zero in expression");
  return {std::move(n), std::move(d)};
}

TriRat tr_add(const TriRat& a, const TriRat& b) {
  return tr_make(tp_add(tp_mul(a.n, b.d), tp_mul(b.n, a.d)), tp_mul(a.d, b.d));
}
TriRat tr_neg(const TriRat& a) { return {tp_neg(a.n), a.d}; }
TriRat tr_mul(const TriRat& a, const TriRat& b) { return tr_make(tp_mul(a.n, b.n), tp_mul(a.d, b.d)); }
TriRat tr_div(const TriRat& a, const TriRat& b) {
  if (b.n.is_zero()) throw math_error("division by zero in expression");
  return tr_make(tp_mul(a.n, b.d), tp_mul(a.d, b.n));
}
TriRat tr_pow(const TriRat& a, long e) {
  FieldPtr f = a.n.f;
  TriRat r{TriPoly::constant(f, Scalar::one(f)), TriPoly::constant(f, Scalar::one(f))};
  TriRat base = a;
  bool invert = e < 0;
  unsigned long u = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  while (u) {
    if (u & 1) r = tr_mul(r, base);
    base = tr_mul(base, base);
    u >>= 1;
  }
  if (invert) r = tr_make(r.d, r.n);
  return r;
}

class ExprParser {
 public:
  ExprParser(const std::string& s, FieldPtr f) : lex_(s), f_(std::move(f)) {}

  TriRat parse() {
    TriRat r = expr();
    if (lex_.peek().kind != Tok::End) throw parse_error("trailing input: '" + lex_.peek().text + "'");
    return r;
  }

 private:
  TriRat expr() {
    TriRat acc = term();
    while (lex_.peek().kind == Tok::Op && (lex_.peek().text == "+" || lex_.peek().text == "-")) {
      std::string op = lex_.take().text;
      TriRat rhs = term();
      acc = op == "+" ? tr_add(acc, rhs) : tr_add(acc, tr_neg(rhs));
    }
    return acc;
  }

  TriRat term() {
    TriRat acc = factor();
    while (lex_.peek().kind == Tok::Op && (lex_.peek().text == "*" || lex_.peek().text == "/")) {
      std::string op = lex_.take().text;
      TriRat rhs = factor();
      acc = op == "*" ? tr_mul(acc, rhs) : tr_div(acc, rhs);
    }
    return acc;
  }

  TriRat factor() {
    if (lex_.peek().kind == Tok::Op && lex_.peek().text == "-") {
      lex_.take();
      return tr_neg(factor());
    }
    TriRat base = primary();
    if (lex_.peek().kind == Tok::Op && lex_.peek().text == "^") {
      lex_.take();
      bool neg = false;
      if (lex_.peek().kind == Tok::Op && lex_.peek().text == "-") {
        lex_.take();
        neg = true;
      }
      if (lex_.peek().kind != Tok::Int) throw parse_error("integer exponent expected");
      long e = std::stol(lex_.take().text);
      base = tr_pow(base, neg ? -e : e);
    }
    return base;
  }

  TriRat primary() {
    Tok t = lex_.take();
    if (t.kind == Tok::Int) {
      mpq_class v(t.text);
      return one_rat(TriPoly::constant(f_, Scalar(v)));
    }
    if (t.kind == Tok::Name) {
      if (t.text == "x" || t.text == "y" || t.text == "z") {
        std::array<int, 3> k{0, 0, 0};
        k[t.text == "x" ? 0 : t.text == "y" ? 1 : 2] = 1;
        TriPoly p{f_, {}};
        p.t.emplace(k, Scalar::one(f_));
        return one_rat(std::move(p));
      }
      if (t.text == "t") {
        if (!f_) throw parse_error("symbol t needs a field context");
        return one_rat(TriPoly::constant(f_, Scalar::generator(f_)));
      }
      throw parse_error("unknown symbol '" + t.text + "'");
    }
    if (t.kind == Tok::Op && t.text == "(") {
      TriRat e = expr();
      Tok close = lex_.take();
      if (close.kind != Tok::Op || close.text != ")") throw parse_error("missing ')'");
      return e;
    }
    throw parse_error("unexpected token '" + t.text + "'");
  }

  TriRat one_rat(TriPoly p) {
    return {std::move(p), TriPoly::constant(f_, Scalar::one(f_))};
  }

  Lexer lex_;
  FieldPtr f_;
};

TriRat parse_expr(const std::string& s, const FieldPtr& f) { return ExprParser(s, f).parse(); }

}  // namespace

Scalar parse_scalar(const std::string& s, const FieldPtr& f) {
  TriRat r = parse_expr(s, f);
  if (!r.n.is_constant() || !r.d.is_constant()) throw parse_error("expected a constant");
  return r.n.constant_value() / r.d.constant_value();
}

HomPoly parse_hompoly(const std::string& s, const FieldPtr& f) {
  TriRat r = parse_expr(s, f);
  if (!r.d.is_constant()) throw parse_error("polynomial entry has a non-constant denominator");
  Scalar dinv = r.d.constant_value().inverse();
  if (r.n.is_zero()) throw parse_error("zero polynomial entry");
  int deg = -1;
  std::vector<HomPoly::Term> ts;
  for (const auto& [k, v] : r.n.t) {
    int d = k[0] + k[1] + k[2];
    if (deg < 0) deg = d;
    if (d != deg) throw parse_error("entry is not homogeneous");
    ts.push_back({Mono{k[0], k[1], k[2]}, v * dinv});
  }
  return HomPoly(r.n.f, deg, std::move(ts));
}

Poly2 parse_poly2(const std::string& s, const FieldPtr& f) {
  TriRat r = parse_expr(s, f);
  if (!r.d.is_constant()) throw parse_error("polynomial has a non-constant denominator");
  Scalar dinv = r.d.constant_value().inverse();
  std::map<Poly2::Key, Scalar> m;
  for (const auto& [k, v] : r.n.t) {
    if (k[2] != 0) throw parse_error("symbol z not allowed in an affine polynomial");
    m.emplace(Poly2::Key{k[0], k[1]}, v * dinv);
  }
  return Poly2(r.n.f, std::move(m));
}

RatFunc parse_ratfunc(const std::string& s, const FieldPtr& f) {
  TriRat r = parse_expr(s, f);
  auto to_poly2 = [](const TriPoly& p) {
    std::map<Poly2::Key, Scalar> m;
    for (const auto& [k, v] : p.t) {
      if (k[2] != 0) throw parse_error("symbol z not allowed in an affine entry");
      m.emplace(Poly2::Key{k[0], k[1]}, v);
    }
    return Poly2(p.f, std::move(m));
  };
  return RatFunc(to_poly2(r.n), to_poly2(r.d));
}

FieldPtr parse_field_poly(const std::string& s) {
  // parse with t as the only variable; reuse the trivariate machinery by
  // mapping t-exponents through a fake context
  Lexer lex(s);
  // quick reparse: substitute x for t and use parse_expr
  std::string sub;
  for (char c : s) sub += (c == 't') ? 'x' : c;
  TriRat r = parse_expr(sub, nullptr);
  if (!r.d.is_constant()) throw parse_error("minimal polynomial must be a polynomial");
  Scalar dc = r.d.constant_value();
  std::vector<mpz_class> coeffs;
  for (const auto& [k, v] : r.n.t) {
    if (k[1] != 0 || k[2] != 0) throw parse_error("minimal polynomial must be univariate in t");
    if (static_cast<size_t>(k[0]) >= coeffs.size()) coeffs.resize(static_cast<size_t>(k[0]) + 1);
    mpq_class q = (v / dc).rational();
    if (q.get_den() != 1) throw parse_error("minimal polynomial must have integer coefficients");
    coeffs[static_cast<size_t>(k[0])] = q.get_num();
  }
  if (coeffs.size() < 2) throw parse_error("minimal polynomial must have degree >= 1");
  if (coeffs.back() != 1) throw parse_error("minimal polynomial must be monic");
  return NumberField::make(std::move(coeffs));
}

namespace {
std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_top_commas(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(strip(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!strip(cur).empty()) out.push_back(strip(cur));
  return out;
}
}  // namespace

MapSource parse_map_source(const std::string& text) {
  MapSource src;
  bool have_map = false;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = strip(line);
    if (line.empty()) continue;
    if (line.rfind("field:", 0) == 0) {
      src.field = parse_field_poly(strip(line.substr(6)));
      continue;
    }
    if (line.rfind("torus:", 0) == 0) {
      src.torus = parse_torus_header(strip(line.substr(6)));
      continue;
    }
    if (line.rfind("map", 0) == 0) {
      std::string rest = strip(line.substr(3));
      if (rest.rfind("P2", 0) == 0) src.projective = true;
      else if (rest.rfind("A2", 0) == 0) src.projective = false;
      else throw parse_error("expected 'map P2 [...]' or 'map A2 [...]'");
      auto lb = rest.find('[');
      auto rb = rest.rfind(']');
      if (lb == std::string::npos || rb == std::string::npos || rb < lb)
        throw parse_error("missing [ ... ] in map line");
      src.entries = split_top_commas(rest.substr(lb + 1, rb - lb - 1));
      size_t want = src.projective ? 3 : 2;
      if (src.entries.size() != want) throw parse_error("wrong number of map entries");
      have_map = true;
      continue;
    }
    throw parse_error("unrecognized line: " + line);
  }
  if (!have_map) throw parse_error("no map line found");
  return src;
}

TorusGroupPtr parse_torus_header(const std::string& s) {
  long n = -1, r = -1;
  for (const auto& part : split_top_commas(s)) {
    auto eq = part.find('=');
    if (eq == std::string::npos) throw parse_error("torus header: expected key=value");
    std::string key = strip(part.substr(0, eq)), val = strip(part.substr(eq + 1));
    if (key == "N") n = std::stol(val);
    else if (key == "free") r = std::stol(val);
    else throw parse_error("torus header: unknown key " + key);
  }
  if (n < 1 || r < 0) throw parse_error("torus header needs N>=1 and free>=0");
  return TorusGroup::make(n, static_cast<int>(r));
}

TorusElem parse_torus_elem(const std::string& s, const TorusGroupPtr& g) {
  std::string t = strip(s);
  if (t.size() < 2 || t.front() != '(' || t.back() != ')') throw parse_error("torus element: expected (e0; e1,...)");
  t = t.substr(1, t.size() - 2);
  auto semi = t.find(';');
  std::string head = semi == std::string::npos ? t : t.substr(0, semi);
  std::string tail = semi == std::string::npos ? "" : t.substr(semi + 1);
  long e0 = std::stol(strip(head));
  std::vector<long> e;
  if (!strip(tail).empty())
    for (const auto& part : split_top_commas(tail)) e.push_back(std::stol(part));
  if (static_cast<int>(e.size()) != g->free_rank()) throw parse_error("torus element: wrong free rank");
  return TorusElem(g, e0, std::move(e));
}

}  // namespace cremona
