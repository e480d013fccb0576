#include "vlab/report.hpp"

namespace vlab {

Json to_json(Budget const &b)
{
  return Json{{"element_cap", b.element_cap},     {"hom_cap", b.hom_cap},
              {"wreath_top_cap", b.wreath_top_cap}, {"degree_cap", b.degree_cap},
              {"tuple_cap", b.tuple_cap},         {"normal_enum_cap", b.normal_enum_cap},
              {"search_node_cap", b.search_node_cap}};
}

Json to_json(PermutationGroup const &g)
{
  Json gens = Json::array();
  for (auto const &x : g.generators())
    gens.push_back(x.to_string());
  Json j;
  if (!g.name().empty())
    j["name"] = g.name();
  j["degree"] = g.degree();
  j["order"] = g.order().str();
  j["generators"] = std::move(gens);
  return j;
}

namespace {

Json perms(std::vector<Permutation> const &xs)
{
  Json a = Json::array();
  for (auto const &x : xs)
    a.push_back(x.to_string());
  return a;
}

Json lines(std::vector<std::string> const &xs)
{
  return Json(xs);
}

} // namespace

Json to_json(Certificate const &c)
{
  Json j{{"kind", to_string(c.kind)}};
  switch (c.kind) {
  case Certificate::Kind::none:
  case Certificate::Kind::trivial:
    break;
  case Certificate::Kind::fixture:
    if (c.fixture)
      j["fixture"] = c.fixture->to_string();
    break;
  case Certificate::Kind::direct_power:
    j["block_degree"] = c.block_degree;
    j["power"] = c.power;
    if (c.component)
      j["component"] = to_json(*c.component);
    if (c.component_sub)
      j["component_sub"] = to_json(*c.component_sub);
    break;
  case Certificate::Kind::product_reduction:
  case Certificate::Kind::verbal_bound:
    if (c.inner_variety)
      j["inner_variety"] = c.inner_variety->to_string();
    if (c.verbal)
      j["verbal"] = to_json(*c.verbal);
    if (c.intersection)
      j["intersection"] = to_json(*c.intersection);
    break;
  case Certificate::Kind::neumann:
    if (c.normal)
      j["normal"] = to_json(*c.normal);
    break;
  case Certificate::Kind::separating_pair:
    if (c.target)
      j["target"] = to_json(*c.target);
    j["source_generators"] = perms(c.source_generators);
    j["f_images"] = perms(c.f_images);
    j["g_images"] = perms(c.g_images);
    if (c.witness)
      j["witness"] = c.witness->to_string();
    break;
  }
  if (c.inner)
    j["inner"] = to_json(*c.inner);
  return j;
}

Json to_json(EpiVerdict const &v)
{
  return Json{{"outcome", to_string(v.outcome)},
              {"certificate", to_json(v.certificate)},
              {"derivation", lines(v.derivation)},
              {"notes", lines(v.notes)},
              {"budgets", to_json(v.budget)}};
}

Json to_json(DominionBounds const &b)
{
  return Json{{"lower", to_json(b.lower)},
              {"upper", to_json(b.upper)},
              {"mckay", to_json(b.mckay)},
              {"exact", b.exact},
              {"derivation", lines(b.derivation)}};
}

Json to_json(EscapeResult const &e)
{
  Json j{{"found", e.found}};
  if (e.found) {
    j["name"] = e.name;
    j["group"] = to_json(*e.group);
    j["witness"] = to_json(*e.witness);
  }
  j["reason"] = e.reason;
  j["trail"] = lines(e.trail);
  return j;
}

Json to_json(PipelineResult const &p)
{
  Json j{{"verdict", to_json(p.verdict)}};
  if (p.escape)
    j["escape"] = to_json(*p.escape);
  if (p.wreath)
    j["wreath"] = to_json(*p.wreath);
  if (p.sub_wreath)
    j["sub_wreath"] = to_json(*p.sub_wreath);
  j["report"] = lines(p.report);
  return j;
}

Json to_json(QofSimpleReport const &q)
{
  return Json{{"branch", q.branch == QofSimpleReport::Branch::base ? "base" : "trivial"},
              {"verbal", to_json(q.verbal)},
              {"wreath", to_json(q.wreath)},
              {"description", q.description}};
}

Json to_json(LawFailureWitness const &w)
{
  return Json{{"p", w.p},
              {"k", w.k},
              {"d", w.d},
              {"monomial", monomial_to_string(w.monomial)},
              {"predicted_coefficient", w.predicted_coefficient},
              {"coefficient", w.coefficient},
              {"image_nontrivial", w.image_nontrivial},
              {"verified", w.verified()}};
}

Json make_report(std::string const &command, Json body)
{
  Json j{{"schema", report_schema}, {"command", command}};
  for (auto &[k, v] : body.items())
    j[k] = std::move(v);
  return j;
}

} // namespace vlab
