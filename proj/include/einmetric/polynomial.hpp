#pragma once
// Sparse multivariate polynomials with exact rational coefficients, over a
// named variable list.  Exponents may be negative (Laurent terms) while a
// polynomial is being assembled from metric components; clearing and
// canonicalization produce ordinary polynomials with integer content 1 and a
// fixed leading sign, so equality of canonical forms is structural equality.

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "types.hpp"

namespace einmetric {

using Mono = std::vector<int>;  // exponent per ring variable

struct Poly {
  std::vector<std::string> vars;
  std::map<Mono, Rat> terms;  // nonzero coefficients only

  bool is_zero() const { return terms.empty(); }
  int nvars() const { return static_cast<int>(vars.size()); }

  void add_term(const Mono& m, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = terms.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    require(vars == o.vars, "polynomial ring mismatch");
    for (const auto& [m, c] : o.terms) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    require(vars == o.vars, "polynomial ring mismatch");
    for (const auto& [m, c] : o.terms) add_term(m, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    require(a.vars == b.vars, "polynomial ring mismatch");
    Poly r{a.vars, {}};
    for (const auto& [ma, ca] : a.terms)
      for (const auto& [mb, cb] : b.terms) {
        Mono m = ma;
        for (int i = 0; i < a.nvars(); ++i) m[i] += mb[i];
        r.add_term(m, ca * cb);
      }
    return r;
  }
  Poly& operator*=(const Rat& c) {
    if (c == 0) {
      terms.clear();
      return *this;
    }
    for (auto& [m, v] : terms) v *= c;
    return *this;
  }
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator-(Poly a) { return a *= Rat(-1); }

  bool operator==(const Poly&) const = default;

  int var_index(const std::string& name) const {
    for (int i = 0; i < nvars(); ++i)
      if (vars[i] == name) return i;
    throw error("unknown variable: " + name);
  }

  static Poly zero(std::vector<std::string> vars) { return {std::move(vars), {}}; }
  static Poly constant(std::vector<std::string> vars, const Rat& c) {
    Poly p{std::move(vars), {}};
    p.add_term(Mono(p.nvars(), 0), c);
    return p;
  }
  static Poly variable(std::vector<std::string> vars, int i, int exp = 1) {
    Poly p{std::move(vars), {}};
    Mono m(p.nvars(), 0);
    m[i] = exp;
    p.add_term(m, Rat(1));
    return p;
  }

  // Evaluate at a point, one value per ring variable.  Negative exponents
  // require nonzero coordinates.
  template <class S>
  S eval(const std::vector<S>& at) const {
    require(static_cast<int>(at.size()) == nvars(), "evaluation point size mismatch");
    S acc = S(0);
    for (const auto& [m, c] : terms) {
      S t = to_scalar<S>(c);
      for (int i = 0; i < nvars(); ++i) {
        if (m[i] == 0) continue;
        S p = S(1);
        for (int e = 0; e < std::abs(m[i]); ++e) p *= at[i];
        if (m[i] > 0) t *= p;
        else t /= p;
      }
      acc += t;
    }
    return acc;
  }

  // Partial derivative; valid for Laurent terms too.
  Poly derivative(int var) const {
    Poly r{vars, {}};
    for (const auto& [m, c] : terms) {
      if (m[var] == 0) continue;
      Mono d = m;
      d[var] -= 1;
      r.add_term(d, c * Rat(m[var]));
    }
    return r;
  }

  // Substitute variable -> polynomial (nonnegative exponents of `var` only).
  Poly substituted(int var, const Poly& value) const {
    require(vars == value.vars, "polynomial ring mismatch");
    Poly r{vars, {}};
    for (const auto& [m, c] : terms) {
      require(m[var] >= 0, "cannot substitute into a negative power");
      Mono rest = m;
      rest[var] = 0;
      Poly t{vars, {}};
      t.add_term(rest, c);
      for (int e = 0; e < m[var]; ++e) t = t * value;
      r += t;
    }
    return r;
  }

  // Multiply by the monomial clearing all negative exponents, divide out any
  // common monomial factor, scale coefficients to coprime integers and make
  // the lexicographically leading coefficient positive.
  Poly canonical() const {
    Poly r{vars, {}};
    if (terms.empty()) return r;
    Mono shift(nvars(), 0);
    for (int i = 0; i < nvars(); ++i) {
      int mn = terms.begin()->first[i];
      for (const auto& [m, c] : terms) mn = std::min(mn, m[i]);
      shift[i] = -mn;
    }
    Int num_gcd(0), den_lcm(1);
    for (const auto& [m, c] : terms) {
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rat scale = Rat(den_lcm) / Rat(num_gcd);
    if (terms.rbegin()->second < 0) scale = -scale;
    for (const auto& [m, c] : terms) {
      Mono s = m;
      for (int i = 0; i < nvars(); ++i) s[i] += shift[i];
      r.add_term(s, c * scale);
    }
    return r;
  }

  std::string to_string() const {
    if (terms.empty()) return "0";
    std::string out;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
      const auto& [m, c] = *it;
      Rat a = c;
      if (out.empty()) {
        if (a < 0) {
          out += "-";
          a = -a;
        }
      } else {
        out += a < 0 ? " - " : " + ";
        if (a < 0) a = -a;
      }
      bool any_var = std::any_of(m.begin(), m.end(), [](int e) { return e != 0; });
      if (a != 1 || !any_var) {
        out += einmetric::to_string(a);
        if (any_var) out += " ";
      }
      bool first = true;
      for (int i = 0; i < nvars(); ++i) {
        if (m[i] == 0) continue;
        if (!first) out += " ";
        first = false;
        out += vars[i];
        if (m[i] != 1) out += "^" + std::to_string(m[i]);
      }
    }
    return out;
  }
};

// Parse "2 u0 u1 x2^2 - x3 + 7" style text: integer coefficients, variables
// by name, '^' powers, juxtaposition or '*' for products, parentheses.
inline Poly parse_poly(std::vector<std::string> vars, const std::string& text) {
  struct Parser {
    const std::vector<std::string>& vars;
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
      while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
      skip_ws();
      if (pos < s.size() && s[pos] == c) {
        ++pos;
        return true;
      }
      return false;
    }
    char peek() {
      skip_ws();
      return pos < s.size() ? s[pos] : '\0';
    }

    Int integer() {
      skip_ws();
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      require(pos > start, "expected integer at position " + std::to_string(start));
      return Int(s.substr(start, pos - start));
    }

    Poly factor() {
      skip_ws();
      require(pos < s.size(), "unexpected end of polynomial text");
      char c = s[pos];
      if (c == '(') {
        ++pos;
        Poly p = expression();
        require(eat(')'), "missing ')'");
        return maybe_power(std::move(p));
      }
      if (std::isdigit(static_cast<unsigned char>(c)))
        return maybe_power(Poly::constant(vars, Rat(integer())));
      // variable name: letters then letters/digits/underscore
      require(std::isalpha(static_cast<unsigned char>(c)), std::string("unexpected character '") + c + "'");
      std::size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
      std::string name = s.substr(start, pos - start);
      int idx = -1;
      for (int i = 0; i < static_cast<int>(vars.size()); ++i)
        if (vars[i] == name) idx = i;
      require(idx >= 0, "unknown variable: " + name);
      return maybe_power(Poly::variable(vars, idx));
    }

    Poly maybe_power(Poly base) {
      if (!eat('^')) return base;
      Int e = integer();
      require(e >= 1 && e < 64, "unsupported exponent");
      Poly r = base;
      for (Int k = 1; k < e; ++k) r = r * base;
      return r;
    }

    Poly term() {
      Poly p = factor();
      for (;;) {
        char c = peek();
        if (c == '*') {
          ++pos;
          p = p * factor();
        } else if (c == '(' || std::isalnum(static_cast<unsigned char>(c))) {
          p = p * factor();  // juxtaposition
        } else {
          return p;
        }
      }
    }

    Poly expression() {
      bool neg = false;
      if (eat('-')) neg = true;
      else eat('+');
      Poly p = term();
      if (neg) p = -p;
      for (;;) {
        char c = peek();
        if (c == '+') {
          ++pos;
          p += term();
        } else if (c == '-') {
          ++pos;
          p -= term();
        } else {
          return p;
        }
      }
    }
  };

  Poly ring = Poly::zero(std::move(vars));
  Parser parser{ring.vars, text};
  Poly p = parser.expression();
  parser.skip_ws();
  require(parser.pos == parser.s.size(),
          "trailing input in polynomial text at position " + std::to_string(parser.pos));
  return p;
}

}  // namespace einmetric
