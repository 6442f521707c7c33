#include "afold/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace afold {

namespace {
const MonomialOrder& canon_order() {
  static const MonomialOrder ord = MonomialOrder::degrevlex();
  return ord;
}

void normalize(std::vector<Term>& terms) {
  const MonomialOrder& ord = canon_order();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
      if (out.back().coeff == 0) out.pop_back();
    } else if (t.coeff != 0) {
      out.push_back(std::move(t));
    }
  }
  terms.swap(out);
}
}  // namespace

Polynomial Polynomial::zero(const VarSet& vars) {
  Polynomial p;
  p.vars_ = vars;
  return p;
}

Polynomial Polynomial::constant(const VarSet& vars, const Rational& c) {
  Polynomial p;
  p.vars_ = vars;
  if (c != 0) p.terms_.push_back({Monomial::one(vars.size()), c});
  return p;
}

Polynomial Polynomial::variable(const VarSet& vars, size_t i) {
  if (i >= vars.size()) throw StructuralError("variable index out of range");
  Polynomial p;
  p.vars_ = vars;
  p.terms_.push_back({Monomial::var(vars.size(), i), Rational(1)});
  return p;
}

Polynomial Polynomial::term(const VarSet& vars, const Rational& c, const Monomial& m) {
  Polynomial p;
  p.vars_ = vars;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(const VarSet& vars, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.mono.nvars() != vars.size()) throw StructuralError("term arity mismatch");
  normalize(terms);
  Polynomial p;
  p.vars_ = vars;
  p.terms_ = std::move(terms);
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned d = terms_.front().mono.degree();
  for (const auto& t : terms_)
    if (t.mono.degree() != d) return false;
  return true;
}

std::optional<std::pair<int, int>> Polynomial::bidegree() const {
  if (terms_.empty()) return std::nullopt;
  int dx = -1, dt = -1;
  for (const auto& t : terms_) {
    int x = 0, tt = 0;
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (vars_.block(i) == VarBlock::X)
        x += t.mono[i];
      else
        tt += t.mono[i];
    }
    if (dx == -1) {
      dx = x;
      dt = tt;
    } else if (dx != x || dt != tt) {
      return std::nullopt;
    }
  }
  return std::make_pair(dx, dt);
}

const Term& Polynomial::leading_term(const MonomialOrder& ord) const {
  if (terms_.empty()) throw StructuralError("leading term of zero polynomial");
  if (ord.kind() == MonomialOrder::Kind::Degrevlex) return terms_.front();
  size_t best = 0;
  for (size_t i = 1; i < terms_.size(); ++i)
    if (ord.compare(terms_[i].mono, terms_[best].mono) > 0) best = i;
  return terms_[best];
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (vars_ != o.vars_) throw StructuralError("ring mismatch in +");
  const MonomialOrder& ord = canon_order();
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = ord.compare(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      Rational s = terms_[i].coeff + o.terms_[j].coeff;
      if (s != 0) out.push_back({terms_[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
  Polynomial p;
  p.vars_ = vars_;
  p.terms_ = std::move(out);
  return p;
}

Polynomial Polynomial::operator-() const {
  Polynomial p(*this);
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return zero(vars_);
  Polynomial p(*this);
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

Polynomial Polynomial::times_term(const Rational& c, const Monomial& m) const {
  if (c == 0) return zero(vars_);
  Polynomial p;
  p.vars_ = vars_;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono * m, t.coeff * c});
  // multiplying by a fixed monomial preserves degrevlex order
  return p;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (vars_ != o.vars_) throw StructuralError("ring mismatch in *");
  if (is_zero() || o.is_zero()) return zero(vars_);
  const Polynomial *small = this, *big = &o;
  if (small->terms_.size() > big->terms_.size()) std::swap(small, big);
  Polynomial acc = zero(vars_);
  for (const auto& t : small->terms_) acc = acc + big->times_term(t.coeff, t.mono);
  return acc;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r = constant(vars_, 1);
  Polynomial b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = (e >>= 1) ? b * b : b;
  }
  return r;
}

Polynomial Polynomial::monic(const MonomialOrder& ord) const {
  if (is_zero()) return *this;
  const Rational& lc = leading_term(ord).coeff;
  if (lc == 1) return *this;
  Rational inv = Rational(1) / lc;
  return scaled(inv);
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (vars_ != o.vars_ || terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff) return false;
  return true;
}

Polynomial Polynomial::substitute(const VarSet& target, const std::vector<Polynomial>& images) const {
  if (images.size() != vars_.size()) throw StructuralError("substitute: image count mismatch");
  for (const auto& g : images)
    if (g.vars() != target) throw StructuralError("substitute: image ring mismatch");
  Polynomial acc = Polynomial::zero(target);
  for (const auto& t : terms_) {
    Polynomial prod = Polynomial::constant(target, t.coeff);
    for (size_t i = 0; i < vars_.size(); ++i) {
      unsigned e = t.mono[i];
      if (e) prod = prod * images[i].pow(e);
    }
    acc = acc + prod;
  }
  return acc;
}

Polynomial Polynomial::map_vars(const VarSet& target, const std::vector<int>& var_map) const {
  if (var_map.size() != vars_.size()) throw StructuralError("map_vars: map size mismatch");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
      unsigned e = t.mono[i];
      if (!e) continue;
      if (var_map[i] < 0) throw StructuralError("map_vars: variable has no image");
      m.set(static_cast<size_t>(var_map[i]), m[static_cast<size_t>(var_map[i])] + e);
    }
    out.push_back({m, t.coeff});
  }
  return from_terms(target, std::move(out));
}

std::optional<Polynomial> Polynomial::divided_exactly_by(const Polynomial& g) const {
  if (g.is_zero()) throw StructuralError("division by zero polynomial");
  const MonomialOrder& ord = canon_order();
  const Term& glt = g.leading_term(ord);
  Polynomial rem = *this;
  std::vector<Term> quot;
  while (!rem.is_zero()) {
    const Term& lt = rem.terms().front();
    if (!glt.mono.divides(lt.mono)) return std::nullopt;
    Rational c = lt.coeff / glt.coeff;
    Monomial m = lt.mono.divided_by(glt.mono);
    quot.push_back({m, c});
    rem = rem - g.times_term(c, m);
  }
  return from_terms(vars_, std::move(quot));
}

int Polynomial::canonical_compare(const Polynomial& a, const Polynomial& b) {
  const MonomialOrder& ord = canon_order();
  size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (size_t i = 0; i < n; ++i) {
    int c = ord.compare(a.terms_[i].mono, b.terms_[i].mono);
    if (c) return c;
    if (a.terms_[i].coeff != b.terms_[i].coeff)
      return a.terms_[i].coeff < b.terms_[i].coeff ? -1 : 1;
  }
  if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size() ? -1 : 1;
  return 0;
}

void canonical_sort_unique(std::vector<Polynomial>& polys) {
  std::sort(polys.begin(), polys.end(), [](const Polynomial& a, const Polynomial& b) {
    return Polynomial::canonical_compare(a, b) < 0;
  });
  polys.erase(std::unique(polys.begin(), polys.end()), polys.end());
}

// ---------------------------------------------------------------------------
// Text syntax

namespace {

struct Lexer {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
};

class Parser {
 public:
  Parser(const VarSet& vars, const std::string& text) : vars_(vars), lx_{text} {}

  Polynomial run() {
    Polynomial p = expr();
    if (lx_.peek() != '\0') throw ParseError("trailing input", lx_.pos);
    return p;
  }

 private:
  const VarSet& vars_;
  Lexer lx_;

  Polynomial expr() {
    bool neg = false;
    if (lx_.eat('-'))
      neg = true;
    else
      lx_.eat('+');
    Polynomial acc = product();
    if (neg) acc = -acc;
    while (true) {
      if (lx_.eat('+'))
        acc = acc + product();
      else if (lx_.eat('-'))
        acc = acc - product();
      else
        break;
    }
    return acc;
  }

  Polynomial product() {
    Polynomial acc = factor();
    while (lx_.eat('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (lx_.eat('^')) {
      unsigned e = number_uint();
      base = base.pow(e);
    }
    return base;
  }

  Polynomial primary() {
    char c = lx_.peek();
    if (c == '(') {
      lx_.eat('(');
      Polynomial p = expr();
      if (!lx_.eat(')')) throw ParseError("expected ')'", lx_.pos);
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(vars_, rational());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name = identifier();
      auto idx = vars_.index_of(name);
      if (!idx) throw ParseError("unknown variable '" + name + "'", lx_.pos);
      return Polynomial::variable(vars_, *idx);
    }
    throw ParseError("expected number, variable or '('", lx_.pos);
  }

  std::string identifier() {
    lx_.skip_ws();
    size_t start = lx_.pos;
    while (lx_.pos < lx_.s.size()) {
      char c = lx_.s[lx_.pos];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
        ++lx_.pos;
      else
        break;
    }
    return lx_.s.substr(start, lx_.pos - start);
  }

  unsigned number_uint() {
    lx_.skip_ws();
    size_t start = lx_.pos;
    while (lx_.pos < lx_.s.size() && std::isdigit(static_cast<unsigned char>(lx_.s[lx_.pos])))
      ++lx_.pos;
    if (lx_.pos == start) throw ParseError("expected exponent", lx_.pos);
    return static_cast<unsigned>(std::stoul(lx_.s.substr(start, lx_.pos - start)));
  }

  Rational rational() {
    lx_.skip_ws();
    size_t start = lx_.pos;
    while (lx_.pos < lx_.s.size() && std::isdigit(static_cast<unsigned char>(lx_.s[lx_.pos])))
      ++lx_.pos;
    std::string num = lx_.s.substr(start, lx_.pos - start);
    if (lx_.pos < lx_.s.size() && lx_.s[lx_.pos] == '/') {
      ++lx_.pos;
      size_t dstart = lx_.pos;
      while (lx_.pos < lx_.s.size() && std::isdigit(static_cast<unsigned char>(lx_.s[lx_.pos])))
        ++lx_.pos;
      if (lx_.pos == dstart) throw ParseError("expected denominator", lx_.pos);
      num += "/" + lx_.s.substr(dstart, lx_.pos - dstart);
    }
    return parse_rational(num);
  }
};

}  // namespace

Polynomial Polynomial::parse(const VarSet& vars, const std::string& text) {
  return Parser(vars, text).run();
}

std::string Polynomial::format() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mono;
    for (size_t i = 0; i < vars_.size(); ++i) {
      unsigned e = t.mono[i];
      if (!e) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_.name(i);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += to_string(c);
    } else if (c == 1) {
      out += mono;
    } else {
      out += to_string(c) + "*" + mono;
    }
  }
  return out;
}

}  // namespace afold
