#pragma once

// JSON serialization for CLI output and traces. Key order is fixed
// (nlohmann::ordered_json) and every doubles-producing field is derived
// deterministically, so identical runs emit byte-identical documents.
// Index pairs are 1-based here; this is the serialization boundary.

#include <string>

#include <json.hpp>

#include "subdet/cauchy_binet.hpp"
#include "subdet/det.hpp"
#include "subdet/detlb.hpp"
#include "subdet/index_pair.hpp"
#include "subdet/plucker.hpp"
#include "subdet/search.hpp"

namespace subdet {

using Json = nlohmann::ordered_json;

inline Json json_of(const IndexPair& s) {
  Json rows = Json::array(), cols = Json::array();
  for (int i : s.rows) rows.push_back(i + 1);
  for (int j : s.cols) cols.push_back(j + 1);
  return Json{{"rows", rows}, {"cols", cols}};
}

inline IndexPair index_pair_from_json(const Json& j) {
  std::vector<int> rows, cols;
  for (const auto& v : j.at("rows")) rows.push_back(v.get<int>() - 1);
  for (const auto& v : j.at("cols")) cols.push_back(v.get<int>() - 1);
  return make_index_pair(std::move(rows), std::move(cols));
}

inline Json json_of(const DetValue<double>& d) {
  return Json{{"sign", d.sign}, {"log10_abs", d.sign == 0 ? Json(nullptr) : Json(d.log10_abs())}};
}

inline Json json_of(const DetValue<Rational>& d) {
  return Json{{"sign", d.sign},
              {"det", d.fraction()},
              {"log10_abs", d.sign == 0 ? Json(nullptr) : Json(d.log10_abs())}};
}

inline Json json_of(const Exchange& u) {
  Json rows = Json::array(), cols = Json::array();
  for (int i : u.rows) rows.push_back(i + 1);
  for (int j : u.cols) cols.push_back(j + 1);
  return Json{{"rows", rows}, {"cols", cols}};
}

inline Json json_of(const STerms& s) {
  return Json{{"k", s.k},
              {"r", s.r},
              {"c", s.c},
              {"s1", format_rational(s.s1)},
              {"s2", format_rational(s.s2)},
              {"s2_hat", format_rational(s.s2_hat)},
              {"s3", format_rational(s.s3)},
              {"s3_hat", format_rational(s.s3_hat)}};
}

inline Json json_of(const IdentityReport& rep, bool with_terms = true) {
  Json out{{"identity", rep.identity},
           {"k", rep.k},
           {"r", rep.r},
           {"c", rep.c},
           {"lhs", format_rational(rep.lhs)},
           {"rhs", format_rational(rep.rhs)},
           {"residual", format_rational(rep.residual)},
           {"holds", rep.holds}};
  if (rep.identity == "exchange-inequality") out["gamma"] = format_rational(rep.gamma);
  if (with_terms) {
    Json terms = Json::array();
    for (const auto& t : rep.terms) {
      Json jt = json_of(t.u);
      jt["family"] = t.family;
      jt["value"] = format_rational(t.value);
      terms.push_back(std::move(jt));
    }
    out["terms"] = std::move(terms);
  }
  return out;
}

inline Json json_of(const CauchyBinetReport& rep) {
  return Json{{"identity", "cauchy-binet"},
              {"lhs", format_rational(rep.lhs)},
              {"rhs", format_rational(rep.rhs)},
              {"residual", format_rational(rep.residual)},
              {"holds", rep.holds},
              {"subsets", rep.subsets}};
}

template <Backend T>
Json json_of(const typename SearchTrace<T>::Step& step, std::size_t index) {
  Json out{{"iteration", index}, {"pair", json_of(step.pair)}, {"det", json_of(step.det)}};
  out["accepted"] = step.accepted ? json_of(*step.accepted) : Json(nullptr);
  return out;
}

template <Backend T>
Json json_of(const SearchTrace<T>& trace) {
  Json steps = Json::array();
  for (std::size_t i = 0; i < trace.steps.size(); ++i)
    steps.push_back(json_of<T>(trace.steps[i], i));
  return Json{{"start", json_of(trace.start)},
              {"iterations", std::move(steps)},
              {"result", json_of(trace.result())},
              {"accepted_moves", trace.accepted_moves()}};
}

template <Backend T>
Json json_of(const OracleResult<T>& o) {
  return Json{{"argmax", json_of(o.argmax)}, {"det", json_of(o.value)}, {"enumerated", o.enumerated}};
}

template <Backend T>
Json json_of(const CertificateReport<T>& cert) {
  return Json{{"local_max", cert.local_max},
              {"local_det", json_of(cert.local_det)},
              {"oracle", json_of(cert.oracle)},
              {"ratio_log10", cert.ratio_log10},
              {"bound_log10", cert.bound_log10},
              {"within_bound", cert.within_bound}};
}

template <Backend T>
Json json_of(const DetlbResult<T>& r) {
  Json per_k = Json::array();
  for (const auto& e : r.per_k)
    per_k.push_back(Json{{"k", e.k},
                         {"pair", json_of(e.pair)},
                         {"det", json_of(e.det)},
                         {"accepted_moves", e.accepted_moves},
                         {"root", e.root}});
  return Json{{"per_k", std::move(per_k)}, {"best_k", r.best_k}, {"value", r.value}};
}

}  // namespace subdet
