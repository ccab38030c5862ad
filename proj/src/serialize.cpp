#include "leavitt/serialize.hpp"

namespace leavitt {

using nlohmann::json;

json matrix_json(const IntMatrix& a) {
  json rows = json::array();
  for (int i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < a.cols(); ++j) row.push_back(a(i, j).str());
    rows.push_back(std::move(row));
  }
  return json{{"rows", a.rows()}, {"cols", a.cols()}, {"entries", std::move(rows)}};
}

json group_json(const FgAbGroup& g) {
  json torsion = json::array();
  for (const Int& t : g.torsion()) torsion.push_back(t.str());
  return json{{"rank", g.rank()}, {"torsion", std::move(torsion)}, {"display", g.render()}};
}

json group_value_json(const GroupValue& g) {
  if (const auto* c = std::get_if<FgAbGroup>(&g)) return group_json(*c);
  return json{{"symbolic", std::get<SymbolicGroup>(g).render()},
              {"display", std::get<SymbolicGroup>(g).render()}};
}

json quiver_json(const Quiver& q) {
  json vertices = json::array();
  for (const auto& n : q.names()) vertices.push_back(n);
  json edges = json::array();
  for (const auto& e : q.edges())
    edges.push_back(json::array({q.name(e.src), q.name(e.dst)}));
  json order = json::array();
  for (int p = 0; p < q.vertex_count(); ++p) order.push_back(q.name(q.vertex_at(p)));
  return json{{"vertices", std::move(vertices)},
              {"edges", std::move(edges)},
              {"sinks_first_order", std::move(order)},
              {"sink_count", q.sink_count()}};
}

json smith_json(const SmithForm& sf) {
  json factors = json::array();
  for (const Int& f : sf.factors) factors.push_back(f.str());
  return json{{"u", matrix_json(sf.u)},
              {"d", matrix_json(sf.d)},
              {"v", matrix_json(sf.v)},
              {"factors", std::move(factors)}};
}

json kreport_json(const KReport& r, bool with_citations) {
  json degrees = json::array();
  for (const DegreeReport& row : r.degrees) {
    json d{{"degree", row.degree},
           {"coker_piece", group_value_json(row.coker_piece)},
           {"ker_piece", group_value_json(row.ker_piece)},
           {"coker_defaulted", row.coker_defaulted},
           {"ker_defaulted", row.ker_defaulted},
           {"split_status", row.split_status}};
    if (row.total_group) d["total"] = group_json(*row.total_group);
    if (row.total_display) d["total_display"] = *row.total_display;
    if (with_citations) d["citations"] = row.citations;
    degrees.push_back(std::move(d));
  }
  json out{{"mode", to_string(r.mode)}, {"flags", r.flags}, {"degrees", std::move(degrees)}};
  if (r.obstruction_note) out["note"] = *r.obstruction_note;
  return out;
}

json gamma_json(const GammaPrediction& p) {
  json out{{"det", p.det_display},
           {"verdict", p.verdict},
           {"hypothesis_trail", p.hypothesis_trail}};
  out["det_defined"] = p.det_value.has_value();
  return out;
}

}  // namespace leavitt
