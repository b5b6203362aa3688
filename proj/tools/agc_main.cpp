// Command-line front end: Cartan records, tropicalization, chart
// evaluation, the chart twist, crystal graph export, and the
// verification campaigns.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "agc/b_infinity.hpp"
#include "agc/cartan.hpp"
#include "agc/chart.hpp"
#include "agc/crystal.hpp"
#include "agc/faults.hpp"
#include "agc/fundamental.hpp"
#include "agc/tropic.hpp"
#include "agc/verify.hpp"

namespace {

using agc::Expr;
using agc::Rat;
using agc::TypeLabel;
using nlohmann::json;

json cartan_json(const agc::CartanData& cd) {
  return {{"type", agc::type_name(cd.type)},
          {"rank", cd.n},
          {"index_set", cd.index_set},
          {"matrix", cd.matrix},
          {"marks", cd.marks},
          {"comarks", cd.comarks},
          {"sigma", cd.sigma},
          {"iota", cd.iota},
          {"word_w1", cd.word_w1},
          {"word_w2", cd.word_w2},
          {"dual", agc::type_name(cd.dual)}};
}

std::map<std::string, Rat> parse_point(const std::string& text) {
  json j = json::parse(text);
  if (!j.is_object())
    throw agc::Error("--point must be a JSON object of coordinate values");
  std::map<std::string, Rat> env;
  for (auto& [k, v] : j.items()) {
    if (v.is_number_integer())
      env[k] = Rat(v.get<long long>());
    else if (v.is_string())
      env[k] = Rat(v.get<std::string>());
    else
      throw agc::Error("coordinate " + k +
                       " must be an integer or a \"p/q\" string");
  }
  return env;
}

std::string rstr(const Rat& r) { return agc::rat_str(r); }

json eval_chart_quantities(TypeLabel t, int n, agc::Chart chart,
                           const std::map<std::string, Rat>& env, int imax) {
  json eps = json::object(), gamma = json::object();
  for (int i = 0; i <= imax; ++i) {
    eps[std::to_string(i)] = rstr(agc::geom_eps(t, n, i, chart).eval(env));
    gamma[std::to_string(i)] = rstr(agc::geom_gamma(t, n, i, chart).eval(env));
  }
  return {{"eps", eps}, {"gamma", gamma}};
}

int run(int argc, char** argv) {
  CLI::App app{
      "Affine geometric crystals: charts, limit crystals, and their "
      "verification campaigns"};
  app.require_subcommand(1);
  int rc = 0;

  std::string type_name_arg;
  int rank = 0;

  // ---- cartan ----
  auto* cartan = app.add_subcommand("cartan", "Print the Cartan record");
  cartan->add_option("--type", type_name_arg, "Type label")->required();
  cartan->add_option("--rank", rank, "Rank n")->required();
  cartan->callback([&] {
    TypeLabel t = agc::type_from_name(type_name_arg);
    std::cout << cartan_json(agc::cartan_data(t, rank)).dump(2) << "\n";
  });

  // ---- trop ----
  std::string trop_text;
  auto* trop = app.add_subcommand(
      "trop", "Tropicalize a positive expression to max-plus form");
  trop->add_option("expression", trop_text, "Positive rational expression")
      ->required();
  trop->callback([&] {
    std::cout << agc::tropicalize(agc::parse(trop_text)).str() << "\n";
  });

  // ---- geom eval / geom sigma ----
  auto* geom = app.add_subcommand("geom", "Evaluate chart quantities");
  geom->require_subcommand(1);
  std::string point_text;

  auto* geval = geom->add_subcommand(
      "eval", "Evaluate v(x), eps_i and gamma_i at a chart point");
  geval->add_option("--type", type_name_arg, "Type label")->required();
  geval->add_option("--rank", rank, "Rank n")->required();
  geval->add_option("--point", point_text, "JSON object of coordinate values")
      ->required();
  geval->callback([&] {
    TypeLabel t = agc::type_from_name(type_name_arg);
    int n = rank;
    auto env = parse_point(point_text);
    json out;
    out["type"] = agc::type_name(t);
    out["rank"] = n;
    json v = json::array();
    auto labels = agc::FundBasis(t, n).labels();
    auto vc = agc::v_closed(t, n);
    for (std::size_t k = 0; k < vc.size(); ++k)
      v.push_back({{"basis", labels[k].str()},
                   {"value", vc[k].valid() ? rstr(vc[k].eval(env)) : "0"}});
    out["v"] = v;
    out["main"] = eval_chart_quantities(t, n, agc::Chart::main, env, n);
    if (t == TypeLabel::A2dag) {
      // the second chart carries its own eps_0/gamma_0; report it at the
      // twisted image of the same point
      agc::SigmaBar sb = agc::sigma_bar(t, n);
      std::map<std::string, Rat> env2;
      for (const auto& [k, e] : sb.map) env2[k] = e.eval(env);
      json ycoords = json::object();
      for (const auto& [k, val] : env2) ycoords[k] = rstr(val);
      json second = eval_chart_quantities(t, n, agc::Chart::second, env2, n - 1);
      second["point"] = ycoords;
      out["second"] = second;
    }
    std::cout << out.dump(2) << "\n";
  });

  auto* gsigma = geom->add_subcommand(
      "sigma", "Apply the chart twist: decoration a(x) and image point");
  gsigma->add_option("--type", type_name_arg, "Type label")->required();
  gsigma->add_option("--rank", rank, "Rank n")->required();
  gsigma->add_option("--point", point_text, "JSON object of coordinate values")
      ->required();
  gsigma->callback([&] {
    TypeLabel t = agc::type_from_name(type_name_arg);
    int n = rank;
    auto env = parse_point(point_text);
    agc::SigmaBar sb = agc::sigma_bar(t, n);
    json y = json::object();
    for (const auto& [k, e] : sb.map) y[k] = rstr(e.eval(env));
    json out = {{"type", agc::type_name(t)},
                {"rank", n},
                {"a", rstr(sb.a.eval(env))},
                {"y", y}};
    std::cout << out.dump(2) << "\n";
  });

  // ---- verify ----
  std::string check_name, mode, out_path, inject_id;
  agc::VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "Run a verification campaign");
  verify
      ->add_option("check", check_name,
                   "One of: verma geom-axioms sigma chart schubert ud mu "
                   "binfty, or \"all\"")
      ->required();
  verify->add_option("--type", type_name_arg, "Type label")->required();
  verify->add_option("--rank", rank, "Rank n")->required();
  verify->add_option("--mode", mode, "symbolic or sampled");
  verify->add_option("--trials", vopt.trials, "Sampled elements per campaign");
  verify->add_option("--box", vopt.box, "Lattice coordinate range");
  verify->add_option("--seed", vopt.seed, "Base seed");
  verify->add_option("--out", out_path, "Write the JSON report here");
  verify->add_option("--inject", inject_id,
                     "Arm a deliberate defect first (negative control)");
  verify->callback([&] {
    TypeLabel t = agc::type_from_name(type_name_arg);
    vopt.mode = mode;
    if (!inject_id.empty()) agc::faults::arm(inject_id);
    std::vector<std::string> names;
    if (check_name == "all")
      names = agc::verify_check_names();
    else
      names.push_back(check_name);
    json reports = json::array();
    bool all_pass = true;
    for (const std::string& name : names) {
      agc::Report r;
      try {
        r = agc::verify_check(name, t, rank, vopt);
      } catch (const agc::Error& e) {
        if (check_name == "all") {
          std::printf("%-12s %-6s n=%d  skipped (%s)\n", name.c_str(),
                      agc::type_name(t).c_str(), rank, e.what());
          continue;
        }
        throw;
      }
      all_pass = all_pass && r.pass;
      std::printf("%-12s %-6s n=%d  %s  (%zu checks%s)\n", r.check.c_str(),
                  r.type.c_str(), r.rank, r.pass ? "PASS" : "FAIL",
                  r.sample_size,
                  r.failures.empty()
                      ? ""
                      : (", first failure: " + r.failures.front().element)
                            .c_str());
      reports.push_back(r.to_json());
    }
    if (!out_path.empty()) {
      std::ofstream f(out_path);
      if (!f) throw agc::Error("cannot write " + out_path);
      f << (reports.size() == 1 ? reports[0] : reports).dump(2) << "\n";
    }
    agc::faults::disarm();
    rc = all_pass ? 0 : 1;
  });

  // ---- graph ----
  int radius = 2;
  std::string format = "dot";
  auto* graph =
      app.add_subcommand("graph", "Export a neighborhood of the limit crystal");
  graph->add_option("--type", type_name_arg, "Type label")->required();
  graph->add_option("--rank", rank, "Rank n")->required();
  graph->add_option("--radius", radius, "Edge distance from the origin");
  graph->add_option("--format", format, "Output format (dot)");
  graph->callback([&] {
    if (format != "dot") throw agc::Error("unsupported format: " + format);
    TypeLabel t = agc::type_from_name(type_name_arg);
    agc::CrystalOps ops = agc::binf_ops(t, rank);
    std::vector<Rat> zero(agc::binf_dim(t, rank), Rat(0));
    std::cout << agc::graph_dot(ops, {agc::Elem::leaf(zero)}, radius);
  });

  CLI11_PARSE(app, argc, argv);
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const agc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
