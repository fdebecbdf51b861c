#pragma once

#include "json.hpp"
#include "qsym/gaussian.hpp"
#include "qsym/partition.hpp"
#include "qsym/qscalar.hpp"
#include "qsym/series.hpp"
#include "qsym/sympoly.hpp"
#include "qsym/xpoly.hpp"

namespace qsym {

using json = nlohmann::ordered_json;

// Integers that fit int64 are JSON numbers, larger ones decimal strings.
json integer_json(const mpz_class& z);
mpz_class integer_from_json(const json& j);

json to_json(const Rational& r);  // [num, den]
json to_json(const Poly& p);      // coefficient array, constant term first
json to_json(const QScalar& s);   // {"num": [...], "den": [...]}
json to_json(const GaussQ& g);    // {"re": ..., "im": ...}
json to_json(const SymPoly& s);   // {"terms": [{"mono": {"1": 2}, "coeff": ...}]}
json to_json(const RealXPoly& p);   // {"x": [coeff of x^0, ...]}
json to_json(const GaussXPoly& p);
json to_json(const Partition& p);   // integer array

template <class T>
T from_json(const json& j);

template <>
Rational from_json<Rational>(const json& j);
template <>
Poly from_json<Poly>(const json& j);
template <>
QScalar from_json<QScalar>(const json& j);
template <>
GaussQ from_json<GaussQ>(const json& j);
template <>
SymPoly from_json<SymPoly>(const json& j);
template <>
RealXPoly from_json<RealXPoly>(const json& j);
template <>
GaussXPoly from_json<GaussXPoly>(const json& j);
template <>
Partition from_json<Partition>(const json& j);

template <CoefficientRing C>
json to_json(const Series<C>& s) {
  json j;
  j["t_order"] = s.t_order();
  j["q_order"] = s.q_order() ? json(*s.q_order()) : json(nullptr);
  json arr = json::array();
  for (const auto& c : s.coeffs()) arr.push_back(to_json(c));
  j["coeffs"] = std::move(arr);
  return j;
}

template <CoefficientRing C>
Series<C> series_from_json(const json& j) {
  try {
    int n = j.at("t_order").get<int>();
    std::optional<int> m;
    if (!j.at("q_order").is_null()) m = j.at("q_order").get<int>();
    std::vector<C> c;
    for (const auto& e : j.at("coeffs")) c.push_back(from_json<C>(e));
    if (static_cast<int>(c.size()) != n + 1) throw ParseError("series length does not match t_order");
    return Series<C>(std::move(c), n, m);
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

}  // namespace qsym
