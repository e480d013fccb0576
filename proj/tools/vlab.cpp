// Command-line front end: group computations, epi decisions and bundled
// scenarios, reported as JSON or aligned text.

#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "vlab/catalog.hpp"
#include "vlab/constructions.hpp"
#include "vlab/dominion.hpp"
#include "vlab/errors.hpp"
#include "vlab/group_algorithms.hpp"
#include "vlab/group_spec.hpp"
#include "vlab/homomorphism.hpp"
#include "vlab/power_series.hpp"
#include "vlab/report.hpp"
#include "vlab/scenarios.hpp"

using namespace vlab;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_error = 1;
constexpr int exit_unknown = 2;

void print_text(Json const &j, std::ostream &out, std::string const &indent = "")
{
  std::size_t width = 0;
  for (auto const &[k, v] : j.items()) {
    if (!v.is_structured())
      width = std::max(width, k.size());
  }
  for (auto const &[k, v] : j.items()) {
    if (v.is_object()) {
      out << indent << k << ":\n";
      print_text(v, out, indent + "  ");
    } else if (v.is_array()) {
      out << indent << k << ":";
      if (v.empty()) {
        out << " (none)\n";
        continue;
      }
      out << "\n";
      for (auto const &e : v) {
        if (e.is_object()) {
          out << indent << "  -\n";
          print_text(e, out, indent + "    ");
        } else {
          out << indent << "  - " << (e.is_string() ? e.get<std::string>() : e.dump()) << "\n";
        }
      }
    } else {
      out << indent << k << std::string(width - k.size() + 2, ' ')
          << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

struct Options
{
  std::string format = "text";
  std::string catalog_path;
  std::string fixtures_path;
  Budget budget;
};

struct Context
{
  Options const &opt;
  Catalog catalog;
  FixtureSet fixtures;
};

int emit(Context const &c, std::string const &command, Json body, int code = exit_ok)
{
  body["budgets"] = to_json(c.opt.budget);
  auto report = make_report(command, std::move(body));
  if (c.opt.format == "json")
    std::cout << report.dump(2) << "\n";
  else
    print_text(report, std::cout);
  return code;
}

int exit_for(Outcome o)
{
  return o == Outcome::unknown ? exit_unknown : exit_ok;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Varieties of groups: verbal subgroups, wreath products, dominions and epimorphisms "
               "of finite permutation groups.\n\n"
               "Group specs:\n"
               "  NAME                    Cn, Sn, An, Dn (order 2n), V4, Q8, 1, or a catalog name\n"
               "  cat:NAME                catalog entry\n"
               "  wr(A,B)                 regular wreath product\n"
               "  pow(G,k)                direct power on k blocks\n"
               "  gens:[DEG:]g1;g2;...    generators in cycle notation, points from 0\n"
               "Variety descriptors:\n"
               "  A | Nc:c | Sl:n | var:NAME | laws:{w1;w2;...} | prod(N,Q,...)\n"
               "Words: x1, x2^-3, [x1,x2], [x1,x2,x3], (x1x2)^2, products by juxtaposition.\n"
               "Exit status: 0 success, 2 Unknown, 1 error.",
               "vlab"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--format", opt.format, "Report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--catalog", opt.catalog_path,
                 "Catalog file (default: $VLAB_CATALOG, else the bundled catalog)");
  app.add_option("--fixtures", opt.fixtures_path, "Extra fixture file, added to the bundled set");
  app.add_option("--element-cap", opt.budget.element_cap, "Largest group listed element by element")
      ->capture_default_str();
  app.add_option("--hom-cap", opt.budget.hom_cap, "Largest |G||C| for homomorphism search")
      ->capture_default_str();
  app.add_option("--wreath-top-cap", opt.budget.wreath_top_cap, "Largest wreath top group")
      ->capture_default_str();
  app.add_option("--degree-cap", opt.budget.degree_cap, "Largest constructed degree")
      ->capture_default_str();
  app.add_option("--tuple-cap", opt.budget.tuple_cap, "Largest word-evaluation tuple count")
      ->capture_default_str();
  app.add_option("--normal-enum-cap", opt.budget.normal_enum_cap,
                 "Largest group whose normal subgroups are enumerated")
      ->capture_default_str();
  app.add_option("--search-node-cap", opt.budget.search_node_cap, "Largest backtrack search")
      ->capture_default_str();

  std::string group, sub, variety, base, top, word, normal, scenario;
  std::uint64_t prime = 2;
  bool all_scenarios = false, list_scenarios = false;

  auto *order_cmd = app.add_subcommand("order", "Order of a group");
  order_cmd->add_option("group", group, "Group spec")->required();

  auto *verbal_cmd = app.add_subcommand("verbal", "Verbal subgroup V(G) and membership of G in V");
  verbal_cmd->add_option("--group,group", group, "Group spec")->required();
  verbal_cmd->add_option("--variety", variety, "Variety descriptor")->required();

  auto *wreath_cmd = app.add_subcommand("wreath", "Regular wreath product A wr B");
  wreath_cmd->add_option("--base,base", base, "Bottom group A")->required();
  wreath_cmd->add_option("--top,top", top, "Top group B")->required();

  auto *kk_cmd =
      app.add_subcommand("kk-embed", "Embedding of an extension E of A into A wr (E/A)");
  kk_cmd->add_option("--group", group, "Extension E")->required();
  kk_cmd->add_option("--normal", normal, "Normal subgroup A of E")->required();

  auto *epi_cmd = app.add_subcommand("epi", "Decide whether H is epimorphically embedded in G");
  epi_cmd->add_option("--group", group, "Group spec G")->required();
  epi_cmd->add_option("--sub", sub, "Subgroup spec H")->required();
  epi_cmd->add_option("--variety", variety, "Variety descriptor")->required();

  auto *bounds_cmd = app.add_subcommand("bounds", "Lower and upper bounds for the dominion of H");
  bounds_cmd->add_option("--group", group, "Group spec G")->required();
  bounds_cmd->add_option("--sub", sub, "Subgroup spec H")->required();
  bounds_cmd->add_option("--variety", variety, "Variety descriptor")->required();

  auto *magnus_cmd = app.add_subcommand("magnus", "Finite p-group witness that a law fails");
  magnus_cmd->add_option("--word,word", word, "Word")->required();
  magnus_cmd->add_option("--p", prime, "Prime")->capture_default_str();

  auto *escape_cmd =
      app.add_subcommand("escape", "Least ladder group G in V with A wr G outside V");
  escape_cmd->add_option("--base", base, "Group spec A")->required();
  escape_cmd->add_option("--variety", variety, "Variety descriptor")->required();

  auto *scenario_cmd = app.add_subcommand("scenario", "Run a bundled scenario");
  scenario_cmd->add_option("name", scenario, "Scenario name");
  scenario_cmd->add_flag("--all", all_scenarios, "Run every scenario");
  scenario_cmd->add_flag("--list", list_scenarios, "List scenario names");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_error;
  }

  try {
    Context c{opt,
              opt.catalog_path.empty() ? Catalog::from_environment()
                                       : Catalog::load(opt.catalog_path),
              FixtureSet::bundled()};
    if (!opt.fixtures_path.empty()) {
      for (auto const &f : FixtureSet::load(opt.fixtures_path).all())
        c.fixtures.add(f);
    }
    auto const &b = opt.budget;
    auto parse_group = [&](std::string const &s) { return parse_group_spec(s, c.catalog, b); };

    if (order_cmd->parsed()) {
      auto g = parse_group(group);
      return emit(c, "order", Json{{"group", group}, {"order", g.order().str()}});
    }

    if (verbal_cmd->parsed()) {
      auto g = parse_group(group);
      auto d = VarietyDescriptor::parse(variety);
      auto m = member_of_variety(g, d, c.fixtures, b);
      Json body{{"group", group},
                {"variety", d.to_string()},
                {"membership", to_string(m.result)},
                {"reason", m.reason}};
      try {
        body["verbal"] = to_json(q_verbal(g, d, c.fixtures, b));
      } catch (Undecidable const &e) {
        body["verbal"] = std::string("undecided: ") + e.what();
        return emit(c, "verbal", std::move(body), exit_unknown);
      }
      return emit(c, "verbal", std::move(body));
    }

    if (wreath_cmd->parsed()) {
      auto w = regular_wreath(parse_group(base), parse_group(top), b);
      return emit(c, "wreath",
                  Json{{"base", base},
                       {"top", top},
                       {"product", to_json(w.product())},
                       {"base_subgroup_order", w.base_subgroup().order().str()}});
    }

    if (kk_cmd->parsed()) {
      auto e = parse_group(group);
      auto a = parse_subgroup_spec(normal, e, c.catalog, b);
      auto kk = kaloujnine_krasner(e, a, b);
      Json images = Json::array();
      for (auto const &x : e.generators())
        images.push_back(Json{{"element", x.to_string()}, {"image", kk.embedding(x).to_string()}});
      return emit(c, "kk-embed",
                  Json{{"extension", to_json(e)},
                       {"normal", to_json(a)},
                       {"quotient", to_json(kk.quotient.group)},
                       {"wreath", to_json(kk.wreath.product())},
                       {"injective", kk.embedding.is_injective()},
                       {"image_order", kk.embedding.image().order().str()},
                       {"generator_images", images}});
    }

    if (epi_cmd->parsed() || bounds_cmd->parsed()) {
      auto g = parse_group(group);
      auto h = parse_subgroup_spec(sub, g, c.catalog, b);
      auto d = VarietyDescriptor::parse(variety);
      Json body{{"group", to_json(g)}, {"subgroup", to_json(h)}, {"variety", d.to_string()}};
      if (bounds_cmd->parsed()) {
        body["bounds"] = to_json(dominion_bounds(g, h, d, c.fixtures, b));
        return emit(c, "bounds", std::move(body));
      }
      auto v = epi_decide(g, h, d, c.fixtures, b);
      auto check = verify_verdict(g, h, d, v, c.fixtures, b);
      body["outcome"] = to_string(v.outcome);
      body["verdict"] = to_json(v);
      body["certificate_verified"] = check.ok;
      body["verification"] = check.reason;
      return emit(c, "epi", std::move(body), exit_for(v.outcome));
    }

    if (magnus_cmd->parsed()) {
      auto w = Word::parse(word);
      auto r = law_failure_witness(w, prime);
      auto j = to_json(r);
      j["word"] = w.to_string();
      return emit(c, "magnus", std::move(j), r.verified() ? exit_ok : exit_error);
    }

    if (escape_cmd->parsed()) {
      auto a = parse_group(base);
      auto d = VarietyDescriptor::parse(variety);
      auto e = find_wreath_escape(a, d, c.fixtures, b);
      return emit(c, "escape", Json{{"base", base}, {"variety", d.to_string()}, {"escape", to_json(e)}},
                  e.found ? exit_ok : exit_unknown);
    }

    if (scenario_cmd->parsed()) {
      if (list_scenarios) {
        return emit(c, "scenario", Json{{"scenarios", scenario_names()}});
      }
      std::vector<std::string> names;
      if (all_scenarios)
        names = scenario_names();
      else if (!scenario.empty())
        names.push_back(scenario);
      else
        throw InvalidArgument("scenario: give a name, --all or --list");
      bool all_passed = true;
      Json results = Json::array();
      for (auto const &n : names) {
        auto r = run_scenario(n, c.fixtures, c.catalog, b);
        all_passed = all_passed && r.passed;
        if (names.size() == 1) {
          auto body = r.report;
          body.erase("schema");
          body.erase("command");
          return emit(c, "scenario", std::move(body), r.passed ? exit_ok : exit_error);
        }
        results.push_back(Json{{"scenario", r.name},
                               {"expected", r.expected},
                               {"observed", r.observed},
                               {"passed", r.passed}});
      }
      return emit(c, "scenario", Json{{"results", results}, {"passed", all_passed}},
                  all_passed ? exit_ok : exit_error);
    }
  } catch (ParseError const &e) {
    std::cerr << "vlab: parse error: " << e.what() << "\n";
    return exit_error;
  } catch (std::exception const &e) {
    std::cerr << "vlab: " << e.what() << "\n";
    return exit_error;
  }
  return exit_error;
}
