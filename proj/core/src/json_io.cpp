#include "qsym/json_io.hpp"

#include <limits>
#include <string>

namespace qsym {

json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return json(static_cast<std::int64_t>(z.get_si()));
  return json(z.get_str());
}

mpz_class integer_from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw ParseError("bad integer string");
    return z;
  }
  throw ParseError("expected an integer");
}

json to_json(const Rational& r) {
  return json::array({integer_json(r.get_num()), integer_json(r.get_den())});
}

json to_json(const Poly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

json to_json(const QScalar& s) {
  json j;
  j["num"] = to_json(s.num());
  j["den"] = to_json(s.den());
  return j;
}

json to_json(const GaussQ& g) {
  json j;
  j["re"] = to_json(g.re());
  j["im"] = to_json(g.im());
  return j;
}

json to_json(const SymPoly& s) {
  json terms = json::array();
  for (const auto& [m, c] : s.terms()) {
    json mono = json::object();
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) mono[std::to_string(i + 1)] = m[i];
    json t;
    t["mono"] = std::move(mono);
    t["coeff"] = to_json(c);
    terms.push_back(std::move(t));
  }
  json j;
  j["terms"] = std::move(terms);
  return j;
}

json to_json(const RealXPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  json j;
  j["x"] = std::move(a);
  return j;
}

json to_json(const GaussXPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  json j;
  j["x"] = std::move(a);
  return j;
}

json to_json(const Partition& p) { return json(p.parts()); }

template <>
Rational from_json<Rational>(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("rational must be [num, den]");
  mpz_class d = integer_from_json(j[1]);
  if (d == 0) throw ParseError("zero denominator");
  Rational r(integer_from_json(j[0]), d);
  r.canonicalize();
  return r;
}

template <>
Poly from_json<Poly>(const json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be an array");
  std::vector<Rational> c;
  for (const auto& e : j) c.push_back(from_json<Rational>(e));
  return Poly(std::move(c));
}

template <>
QScalar from_json<QScalar>(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw ParseError("q-scalar must have num and den");
  Poly den = from_json<Poly>(j["den"]);
  if (den.is_zero()) throw ParseError("zero denominator");
  return QScalar::fraction(from_json<Poly>(j["num"]), std::move(den));
}

template <>
GaussQ from_json<GaussQ>(const json& j) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im"))
    throw ParseError("gaussian scalar must have re and im");
  return GaussQ(from_json<QScalar>(j["re"]), from_json<QScalar>(j["im"]));
}

template <>
SymPoly from_json<SymPoly>(const json& j) {
  if (!j.is_object() || !j.contains("terms")) throw ParseError("symmetric polynomial must have terms");
  SymPoly s;
  for (const auto& t : j["terms"]) {
    Mono m;
    for (const auto& [k, v] : t.at("mono").items()) {
      int idx = 0;
      try {
        idx = std::stoi(k);
      } catch (const std::exception&) {
        throw ParseError("bad generator index '" + k + "'");
      }
      if (idx < 1 || !v.is_number_integer() || v.get<int>() < 0) throw ParseError("bad monomial");
      if (static_cast<int>(m.size()) < idx) m.resize(idx, 0);
      m[idx - 1] = v.get<int>();
    }
    s.add_term(m, from_json<QScalar>(t.at("coeff")));
  }
  return s;
}

template <>
RealXPoly from_json<RealXPoly>(const json& j) {
  if (!j.is_object() || !j.contains("x")) throw ParseError("x-polynomial must have x");
  std::vector<QScalar> c;
  for (const auto& e : j["x"]) c.push_back(from_json<QScalar>(e));
  return RealXPoly(std::move(c));
}

template <>
GaussXPoly from_json<GaussXPoly>(const json& j) {
  if (!j.is_object() || !j.contains("x")) throw ParseError("x-polynomial must have x");
  std::vector<GaussQ> c;
  for (const auto& e : j["x"]) c.push_back(from_json<GaussQ>(e));
  return GaussXPoly(std::move(c));
}

template <>
Partition from_json<Partition>(const json& j) {
  if (!j.is_array()) throw ParseError("partition must be an array");
  std::vector<int> parts;
  for (const auto& e : j) {
    if (!e.is_number_integer() || e.get<int>() < 1) throw ParseError("bad partition part");
    parts.push_back(e.get<int>());
  }
  return Partition(std::move(parts));
}

}  // namespace qsym
