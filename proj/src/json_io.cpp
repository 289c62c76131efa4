#include "hurwitz/json_io.hpp"

#include <stdexcept>

namespace hurwitz {

void to_json(Json& j, const Rat& r) { j = Json{{"num", r.num().get_str()}, {"den", r.den().get_str()}}; }

void from_json(const Json& j, Rat& r) {
  if (j.is_string()) {
    r = Rat::parse(j.get<std::string>());
    return;
  }
  r = Rat(BigInt(j.at("num").get<std::string>()), BigInt(j.at("den").get<std::string>()));
}

void to_json(Json& j, const Partition& p) { j = p.parts(); }
void from_json(const Json& j, Partition& p) { p = Partition(j.get<std::vector<int>>()); }

void to_json(Json& j, const Correlator& c) { j = Json{{"g", c.genus}, {"taus", c.taus}, {"lambda", c.lambda}}; }

void from_json(const Json& j, Correlator& c) {
  c = Correlator(j.at("g").get<int>(), j.at("taus").get<std::vector<int>>(), j.value("lambda", 0));
}

void to_json(Json& j, const HodgeTable& t) {
  j = Json::array();
  for (const auto& [c, v] : t.entries()) {
    Json e = c;
    e.update(Json(v));
    j.push_back(std::move(e));
  }
}

void from_json(const Json& j, HodgeTable& t) {
  t = HodgeTable{};
  for (const auto& e : j) t.set(e.get<Correlator>(), e.get<Rat>());
}

void to_json(Json& j, const RibbonMap& m) {
  j = Json{{"darts", m.darts()}, {"sigma", m.sigma}, {"alpha", m.alpha}, {"faceLabels", m.face_label}};
}

void from_json(const Json& j, RibbonMap& m) {
  m.sigma = j.at("sigma").get<std::vector<int>>();
  m.alpha = j.at("alpha").get<std::vector<int>>();
  m.face_label = j.value("faceLabels", std::vector<int>{});
  if (j.contains("darts") && j.at("darts").get<int>() != m.darts()) throw std::invalid_argument("dart count mismatch");
}

void to_json(Json& j, const MapClass& m) {
  j = m.rep;
  j["autOrder"] = m.aut_order;
  j["genus"] = m.genus;
  j["cells"] = m.cells;
}

void from_json(const Json& j, MapClass& m) {
  m.rep = j.get<RibbonMap>();
  m.aut_order = j.at("autOrder").get<long>();
  m.genus = j.at("genus").get<int>();
  m.cells = j.at("cells").get<int>();
}

void to_json(Json& j, const Polynomial& p) {
  j = Json::array();
  for (const auto& c : p.coeffs) j.push_back(c.get_str());
}

void from_json(const Json& j, Polynomial& p) {
  std::vector<BigInt> c;
  for (const auto& e : j) c.emplace_back(e.get<std::string>());
  p = Polynomial(std::move(c));
}

void to_json(Json& j, const StatReport& r) {
  j = Json{{"statistic", r.statistic}, {"test", r.test},  {"n", r.n},
           {"samples", r.samples},     {"seed", r.seed},  {"value", r.value},
           {"threshold", r.threshold}, {"degrees_of_freedom", r.degrees_of_freedom},
           {"pass", r.pass}};
}

void from_json(const Json& j, StatReport& r) {
  r.statistic = j.at("statistic").get<std::string>();
  r.test = j.at("test").get<std::string>();
  r.n = j.at("n").get<int>();
  r.samples = j.at("samples").get<long>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.value = j.at("value").get<double>();
  r.threshold = j.at("threshold").get<double>();
  r.degrees_of_freedom = j.at("degrees_of_freedom").get<int>();
  r.pass = j.at("pass").get<bool>();
}

void to_json(Json& j, const LaplaceEstimate& e) {
  j = Json{{"y1", e.y1},
           {"y2", e.y2},
           {"N", e.N},
           {"samples_per_n", e.samples_per_n},
           {"seed", e.seed},
           {"estimate", e.estimate},
           {"standard_error", e.standard_error},
           {"closed_form", e.closed_form},
           {"relative_error", e.relative_error}};
}

void from_json(const Json& j, LaplaceEstimate& e) {
  e.y1 = j.at("y1").get<double>();
  e.y2 = j.at("y2").get<double>();
  e.N = j.at("N").get<long>();
  e.samples_per_n = j.at("samples_per_n").get<long>();
  e.seed = j.at("seed").get<std::uint64_t>();
  e.estimate = j.at("estimate").get<double>();
  e.standard_error = j.at("standard_error").get<double>();
  e.closed_form = j.at("closed_form").get<double>();
  e.relative_error = j.at("relative_error").get<double>();
}

void to_json(Json& j, const TruncatedSeries& s) {
  Json terms = Json::array();
  for (const auto& [k, c] : s.terms()) terms.push_back(Json{{"lambda", k.first}, {"mu", k.second}, {"coeff", c}});
  j = Json{{"dmax", s.dmax()}, {"lmax", s.lmax()}, {"terms", std::move(terms)}};
}

void from_json(const Json& j, TruncatedSeries& s) {
  s = TruncatedSeries(j.at("dmax").get<int>(), j.at("lmax").get<int>());
  for (const auto& t : j.at("terms")) s.add(t.at("lambda").get<int>(), t.at("mu").get<Partition>(), t.at("coeff").get<Rat>());
}

void to_json(Json& j, const TodaResidual& r) {
  j = Json{{"max_abs", r.max_abs},
           {"window_degree", r.window_degree},
           {"window_lambda", r.window_lambda},
           {"checked", r.checked},
           {"discarded_nonzero", r.discarded_nonzero}};
}

void from_json(const Json& j, TodaResidual& r) {
  r.max_abs = j.at("max_abs").get<Rat>();
  r.window_degree = j.at("window_degree").get<int>();
  r.window_lambda = j.at("window_lambda").get<int>();
  r.checked = j.at("checked").get<long>();
  r.discarded_nonzero = j.at("discarded_nonzero").get<long>();
}

const AppendixTables& appendix_b() {
  static const AppendixTables tables = [] {
    const Json j = Json::parse(appendix_b_json());
    AppendixTables t;
    for (const auto& e : j.at("hodge")) t.hodge.push_back({e.get<Correlator>(), e.get<Rat>()});
    for (const auto& e : j.at("hurwitz"))
      t.hurwitz.push_back({e.at("g").get<int>(), e.at("mu").get<Partition>(), e.get<Rat>()});
    return t;
  }();
  return tables;
}

}  // namespace hurwitz
