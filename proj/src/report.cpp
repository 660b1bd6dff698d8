#include "salab/report.hpp"

#include "salab/parser.hpp"

namespace salab {

Json to_json(const Coeff& c) { return to_string(c); }

Json to_json(const Monomial& m) { return Json(std::vector<int>(m.exponents().begin(), m.exponents().end())); }

Json to_json(const Polynomial& f) {
  Json out = Json::array();
  for (const auto& t : f.terms()) out.push_back({{"coeff", to_json(t.coeff)}, {"exp", to_json(t.mono)}});
  return out;
}

Json to_json(const Ideal& ideal) {
  Json gens = Json::array();
  for (const auto& g : ideal.generators()) gens.push_back(to_string(g));
  return {{"ring", ring_header(*ideal.ring())}, {"generators", gens}};
}

Json to_json(const Nu& nu) { return nu.infinite ? Json("inf") : Json(nu.value); }

Json to_json(const HilbertFunctionTable& hf) {
  Json out = Json::array();
  for (const auto& [m, v] : hf.values) out.push_back(v);
  return out;
}

Json to_json(const BettiTable& betti) {
  Json graded = Json::array();
  for (const auto& [key, count] : betti.graded) graded.push_back({key.first, key.second, count});
  return {{"graded", graded}, {"totals", betti.totals()}, {"pd", betti.projective_dimension()}};
}

Json to_json(const GradedMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(row);
  }
  return {{"row_degrees", m.row_degrees()}, {"col_degrees", m.col_degrees()}, {"entries", rows}};
}

Json to_json(const SubalgebraPresentation& sp) {
  Json inner = Json::array(), outers = Json::array();
  for (const auto& g : sp.inner) inner.push_back(to_string(g));
  for (const auto& F : sp.outers) outers.push_back(to_string(F));
  return {{"inner", inner}, {"outers", outers}, {"outer_ring", ring_header(*sp.outer_ring)}};
}

Json to_json(const GinResult& gin, const Ring& ring) {
  Json gens = Json::array();
  for (const auto& m : gin.gin) gens.push_back(to_string(Polynomial::monomial(ring, Coeff(1), m)));
  return {{"gin", gens},       {"trials_used", gin.trials_used}, {"stable", gin.stable},
          {"borel", gin.borel}, {"seed", gin.seed},               {"bound", gin.bound}};
}

Json make_report(const std::string& command, Json inputs, Json results, std::optional<std::uint64_t> seed) {
  Json r = {{"command", command}, {"inputs", std::move(inputs)}, {"results", std::move(results)},
            {"engine", kEngineVersion}};
  r["seed"] = seed ? Json(*seed) : Json(nullptr);
  return r;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace salab
