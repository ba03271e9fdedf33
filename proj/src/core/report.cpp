#include "core/report.hpp"

namespace gromov {

namespace {

nlohmann::json poly_json(const IntPoly& p) {
  return {{"coefficients", p.coeff_strings()}, {"factored", factored_display(p)}};
}

nlohmann::json poly_json(const RatPoly& p) {
  return {{"coefficients", p.coeff_strings()}, {"factored", factored_display(p)}};
}

std::vector<std::string> matrix_rows(const StructureMatrix& g) {
  std::vector<std::string> rows;
  for (int i = 1; i <= g.dim(); ++i) {
    std::string row;
    for (int j = 1; j <= g.dim(); ++j) row += g.at(i, j) ? '1' : '0';
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

nlohmann::json fingerprint_json(const InvariantFingerprint& fp) {
  std::vector<std::string> traces;
  traces.reserve(fp.trace_powers.size());
  for (const auto& t : fp.trace_powers) traces.push_back(t.get_str());
  return {{"n", fp.n},
          {"rank", fp.rank},
          {"removed_edge_count", fp.removed_edge_count},
          {"ends", fp.ends},
          {"irreducible", fp.irreducible},
          {"trace_powers", traces},
          {"char_poly", poly_json(fp.char_poly)},
          {"min_poly", poly_json(fp.min_poly)}};
}

nlohmann::json structure_json(const GromovStructure& s) {
  nlohmann::json triples = nlohmann::json::array();
  for (int i = 1; i <= s.point_count(); ++i) {
    auto [a, b] = s.pair_at(i);
    triples.push_back({i, a, b});
  }
  return {{"text", format_structure(s)}, {"triples", triples}};
}

nlohmann::json decomposition_json(const ChainCycleDecomposition& d) {
  nlohmann::json components = nlohmann::json::array();
  for (const auto& comp : d.components) {
    nlohmann::json arrows = nlohmann::json::array();
    for (auto [v, target] : comp.end_arrows) arrows.push_back({v, target});
    components.push_back(
        {{"kind", comp.kind == ChainCycleComponent::Kind::Cycle ? "cycle" : "chain"},
         {"vertices", comp.vertices},
         {"end_arrows", arrows}});
  }
  return components;
}

nlohmann::json analyze_report(const MetricSpace& m) {
  Extraction e = extract_structure_detailed(m);

  nlohmann::json j;
  j["schema_version"] = 1;
  j["n"] = m.point_count();
  j["generic"] = e.structure.has_value();
  j["nongeneric_vertices"] = e.nongeneric_vertices;
  j["zero_minimum_vertices"] = e.zero_minimum_vertices;

  nlohmann::json minima = nlohmann::json::array();
  for (int i = 1; i <= m.point_count(); ++i) {
    nlohmann::json at_vertex = nlohmann::json::array();
    for (const auto& t : e.minima[static_cast<std::size_t>(i - 1)])
      at_vertex.push_back(
          {{"apex", t.apex}, {"pair", {t.j, t.k}}, {"value", format_rational(t.value)}});
    minima.push_back(std::move(at_vertex));
  }
  j["minimal_products"] = std::move(minima);

  if (!e.structure) return j;

  const GromovStructure& s = *e.structure;
  StructureMatrix g = matrix_rep(s);
  j["structure"] = structure_json(s);
  j["matrix"] = matrix_rows(g);

  nlohmann::json removed = nlohmann::json::array();
  for (auto [a, b] : removed_edges(s)) removed.push_back({a, b});
  j["removed_edges"] = std::move(removed);

  std::vector<std::string> pf_rows;
  for (const auto& row : pendant_free_adjacency(s)) {
    std::string r;
    for (int v : row) r += v ? '1' : '0';
    pf_rows.push_back(std::move(r));
  }
  j["pendant_free_adjacency"] = std::move(pf_rows);

  j["decomposition"] = decomposition_json(decompose_chains_cycles(s));
  j["fingerprint"] = fingerprint_json(fingerprint(s));
  return j;
}

}  // namespace gromov
