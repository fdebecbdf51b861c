#include "qsym/render.hpp"

#include <vector>

namespace qsym {

namespace {

const char* const kMinus = "\xE2\x88\x92";  // U+2212
const char* const kDot = "\xC2\xB7";        // U+00B7

struct Style {
  bool latex = false;
};

std::string rational_text(const Rational& r, Style st) {
  if (!st.latex && sgn(r) < 0) return kMinus + rational_text(-r, st);
  if (r.get_den() == 1) return r.get_num().get_str();
  if (st.latex) return "\\frac{" + r.get_num().get_str() + "}{" + r.get_den().get_str() + "}";
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string qpow_text(int k, Style st) {
  if (k == 1) return "q";
  return st.latex ? "q^{" + std::to_string(k) + "}" : "q^" + std::to_string(k);
}

std::string poly_text(const Poly& p, Style st) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int k = 0; k <= p.degree(); ++k) {
    const Rational& c = p.coeff(k);
    if (c == 0) continue;
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    if (first) {
      if (neg) out += st.latex ? "-" : kMinus;
    } else {
      out += neg ? (st.latex ? " - " : std::string(" ") + kMinus + " ") : " + ";
    }
    first = false;
    if (k == 0) {
      out += rational_text(a, st);
    } else {
      if (a != 1) out += rational_text(a, st) + (st.latex ? " " : "*");
      out += qpow_text(k, st);
    }
  }
  return out;
}

bool looks_negative(const QScalar& c) {
  const Poly& n = c.num();
  const Poly& d = c.den();
  if (n.is_zero()) return false;
  return (n.coeff(n.valuation()) < 0) != (d.coeff(d.valuation()) < 0);
}

std::string scalar_text(const QScalar& s0, Style st) {
  if (s0.is_polynomial()) return poly_text(s0.num(), st);
  // show 1/(1 - q) rather than the monic -1/(-1 + q)
  Poly num = s0.num(), den = s0.den();
  if (den.coeff(den.valuation()) < 0) {
    num = -num;
    den = -den;
  }
  if (st.latex) return "\\frac{" + poly_text(num, st) + "}{" + poly_text(den, st) + "}";
  auto wrap = [&](const Poly& p) {
    std::string t = poly_text(p, st);
    int terms = 0;
    for (const auto& c : p.coeffs())
      if (c != 0) ++terms;
    return terms > 1 ? "(" + t + ")" : t;
  };
  return wrap(num) + "/" + wrap(den);
}

// A coefficient rendered for use in a sum: sign split off, text
// bracketed when it would otherwise be ambiguous.
struct Piece {
  bool neg = false;
  std::string text;
};

Piece coeff_piece(const QScalar& c, bool has_mono, bool many, Style st) {
  Piece pc;
  pc.neg = looks_negative(c);
  QScalar a = pc.neg ? -c : c;
  if (a.is_one()) {
    pc.text = has_mono ? "" : "1";
    return pc;
  }
  if (int k = recognize_qint(a); k >= 2) {
    pc.text = "[" + std::to_string(k) + "]" + (st.latex ? "_q" : "");
    return pc;
  }
  bool atom = a.is_polynomial() && a.num().is_monomial();
  pc.text = scalar_text(a, st);
  if (!atom && (has_mono || many)) pc.text = st.latex ? "\\left(" + pc.text + "\\right)" : "(" + pc.text + ")";
  return pc;
}

struct Term {
  QScalar coeff;
  std::string mono;
};

std::string sum_text(const std::vector<Term>& terms, Style st) {
  if (terms.empty()) return "0";
  std::string out;
  bool many = terms.size() > 1;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const Term& t = terms[i];
    Piece pc = coeff_piece(t.coeff, !t.mono.empty(), many, st);
    if (i == 0) {
      if (pc.neg) out += st.latex ? "-" : kMinus;
    } else {
      out += pc.neg ? (st.latex ? " - " : std::string(" ") + kMinus + " ") : " + ";
    }
    out += pc.text;
    if (!pc.text.empty() && !t.mono.empty()) out += st.latex ? " " : kDot;
    out += t.mono;
  }
  return out;
}

std::string mono_str(const Mono& m, Style st) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += st.latex ? " " : kDot;
    if (st.latex) {
      out += "e_{" + std::to_string(i + 1) + "}";
      if (m[i] > 1) out += "^{" + std::to_string(m[i]) + "}";
    } else {
      out += "e" + std::to_string(i + 1);
      if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
  }
  return out;
}

std::string xpow(int k, Style st) {
  if (k == 0) return "";
  if (k == 1) return "x";
  return st.latex ? "x^{" + std::to_string(k) + "}" : "x^" + std::to_string(k);
}

std::string sympoly_text(const SymPoly& s, Style st) {
  std::vector<Term> terms;
  for (const auto& [m, c] : s.terms()) terms.push_back({c, mono_str(m, st)});
  return sum_text(terms, st);
}

std::string xpoly_text(const RealXPoly& p, Style st) {
  std::vector<Term> terms;
  for (int k = p.degree(); k >= 0; --k)
    if (!p.coeff(k).is_zero()) terms.push_back({p.coeff(k), xpow(k, st)});
  return sum_text(terms, st);
}

}  // namespace

std::string to_text(const Rational& r) { return rational_text(r, Style{}); }
std::string to_text(const Poly& p) { return poly_text(p, Style{}); }
std::string to_text(const QScalar& s) { return scalar_text(s, Style{}); }

std::string to_text(const GaussQ& g) {
  if (g.is_real()) return to_text(g.re());
  std::vector<Term> terms;
  if (!g.re().is_zero()) terms.push_back({g.re(), ""});
  terms.push_back({g.im(), "i"});
  return sum_text(terms, Style{});
}

std::string to_text(const SymPoly& s) { return sympoly_text(s, Style{}); }
std::string to_text(const RealXPoly& p) { return xpoly_text(p, Style{}); }

std::string to_text(const GaussXPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    if (p.coeff(k).is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_text(p.coeff(k)) + ")";
    if (k > 0) out += std::string(kDot) + xpow(k, Style{});
  }
  return out;
}

std::string mono_text(const Mono& m) { return mono_str(m, Style{}); }

std::string to_latex(const QScalar& s) { return scalar_text(s, Style{true}); }
std::string to_latex(const SymPoly& s) { return sympoly_text(s, Style{true}); }
std::string to_latex(const RealXPoly& p) { return xpoly_text(p, Style{true}); }

std::string to_latex(const Partition& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p.parts()[i]);
  }
  return out + ")";
}

}  // namespace qsym
