#include "qpbw/json_io.hpp"

namespace qpbw {

json to_json(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({e, num_str(c), den_str(c)});
  return {{"terms", terms}};
}

LaurentPoly laurent_from_json(const json& j) {
  LaurentPoly p;
  for (const auto& t : j.at("terms"))
    p.set_coeff(t.at(0).get<long>(),
                rat_from_strings(t.at(1).get<std::string>(), t.at(2).get<std::string>()));
  return p;
}

json to_json(const RatFunc& f) {
  return {{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

RatFunc ratfunc_from_json(const json& j) {
  return RatFunc(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
}

json to_json(const Root& r) {
  json out;
  out["coords"] = r.coords;
  out["kind"] = r.kind == RootKind::Real ? "real" : "imaginary";
  if (r.kind == RootKind::Imaginary) out["mult_index"] = r.mult_index;
  return out;
}

Root root_from_json(const json& j) {
  Root r;
  r.coords = j.at("coords").get<std::vector<long>>();
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "real") {
    r.kind = RootKind::Real;
  } else if (kind == "imaginary") {
    r.kind = RootKind::Imaginary;
    r.mult_index = j.at("mult_index").get<int>();
  } else {
    throw std::invalid_argument("root kind must be real or imaginary");
  }
  return r;
}

json to_json(const CartanData& data) {
  return {{"type", data.type_string()},
          {"rank", data.rank},
          {"matrix", data.a},
          {"d", data.d},
          {"o", std::vector<int>(data.o.begin() + 1, data.o.end())},
          {"delta_marks", data.marks}};
}

json to_json(const ImPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) {
    json exps = json::object();
    for (std::size_t s = 0; s < e.size(); ++s)
      if (e[s] != 0) exps[std::to_string(s + 1)] = e[s];
    terms.push_back({{"exps", exps}, {"coeff", to_json(c)}});
  }
  return {{"terms", terms}};
}

ImPoly impoly_from_json(const json& j) {
  ImPoly p;
  for (const auto& t : j.at("terms")) {
    MultiExp e;
    for (const auto& [key, value] : t.at("exps").items()) {
      std::size_t s = std::stoul(key);
      if (s == 0) throw std::invalid_argument("generator index must be >= 1");
      if (e.size() < s) e.resize(s, 0);
      e[s - 1] = value.get<unsigned>();
    }
    p.set_coeff(std::move(e), ratfunc_from_json(t.at("coeff")));
  }
  return p;
}

json to_json(const GramMatrix& g) {
  json rows = json::array();
  for (const auto& row : g.entries) {
    json r = json::array();
    for (const auto& entry : row) r.push_back(to_json(entry));
    rows.push_back(r);
  }
  return {{"r", g.r}, {"entries", rows}};
}

json to_json(const NonvanishingReport& r) {
  json out{{"type", r.type},
           {"ell", r.ell},
           {"checked_r", r.checked_r},
           {"all_nonzero", r.all_nonzero},
           {"closed_form_all_nonzero", r.closed_all_nonzero}};
  if (r.counterexample_r) out["counterexample_r"] = *r.counterexample_r;
  if (r.closed_counterexample_r) out["closed_form_counterexample_r"] = *r.closed_counterexample_r;
  return out;
}

json to_json(const ExpVec& v) {
  json out = json::array();
  for (const auto& e : v.entries()) {
    const char* norm = e.normalization == FactorNormalization::QDivided     ? "q-divided"
                       : e.normalization == FactorNormalization::PlainDivided ? "plain-divided"
                                                                              : "bare";
    out.push_back({{"root", to_json(e.root)}, {"exp", e.exp}, {"normalization", norm}});
  }
  return out;
}

json to_json(const CycloElement& c) {
  json coeffs = json::array();
  for (const auto& v : c.residue) coeffs.push_back({num_str(v), den_str(v)});
  return {{"order", c.order}, {"residue", coeffs}};
}

}  // namespace qpbw
