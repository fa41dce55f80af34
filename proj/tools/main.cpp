// Copyright 2026 The metasinr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// metasinr command line tool.
//
//   metasinr curve    evaluate meta-distribution curves as CSV
//   metasinr table    KL-divergence summary tables (formatted + CSV)
//   metasinr compare  two methods side by side, JSON report
//
// Lengths are in km, densities in km^-2 (lines: km/km^2, points on lines:
// km^-1), powers in W. Thresholds are taken in dB and converted as
// theta = 10^(dB/10).

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "metasinr/metasinr.hpp"

namespace {

using nlohmann::json;
using namespace metasinr;

constexpr const char* kToolVersion = "0.1.0";

struct ModelFlags {
  std::string model = "ppp";
  double lambda = 1.0;          // ppp / bipolar / mcp density, km^-2
  double bipolar_r = 0.05;      // transmitter-receiver distance, km
  double rc = 0.2;              // cluster radius, km
  std::string tiers = "1:10,3:5";  // lambda:power pairs
  double lambda_l = 8.0 / kPi;  // line density, km/km^2
  double lambda_p = 0.2;        // points per km of line
};

struct ChannelFlags {
  double alpha = 4.0;
  double pt = 10.0;
  double sigma2 = 1e-9;
};

struct SimFlags {
  int realizations = 100;
  int links = 500;
  std::uint64_t seed = 1;
};

std::vector<double> parse_grid(const std::string& s, const char* what) {
  std::vector<double> out;
  if (s.find(':') != std::string::npos) {
    double a, b, step;
    char c1, c2;
    std::istringstream is(s);
    if (!(is >> a >> c1 >> b >> c2 >> step) || c1 != ':' || c2 != ':' ||
        step <= 0.0)
      throw CLI::ValidationError(what, "expected start:stop:step");
    for (double v = a; v <= b + 1e-12 * std::max(1.0, std::abs(b)); v += step)
      out.push_back(v);
    return out;
  }
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stod(tok));
  }
  if (out.empty()) throw CLI::ValidationError(what, "empty grid");
  return out;
}

NetworkModel build_model(const ModelFlags& mf) {
  if (mf.model == "ppp") return PppModel{mf.lambda};
  if (mf.model == "bipolar") return BipolarModel{mf.lambda, mf.bipolar_r};
  if (mf.model == "mcp") return McpModel{mf.lambda, mf.rc};
  if (mf.model == "ktier") {
    KtierModel k;
    std::istringstream is(mf.tiers);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      auto pos = tok.find(':');
      if (pos == std::string::npos)
        throw CLI::ValidationError("--tiers", "expected lambda:power,...");
      k.tiers.push_back(
          {std::stod(tok.substr(0, pos)), std::stod(tok.substr(pos + 1))});
    }
    return k;
  }
  if (mf.model == "plcp") return PlcpModel{mf.lambda_l, mf.lambda_p};
  throw CLI::ValidationError("--model", "unknown model " + mf.model);
}

json model_json(const ModelFlags& mf) {
  json j;
  j["name"] = mf.model;
  if (mf.model == "ppp" || mf.model == "bipolar" || mf.model == "mcp")
    j["lambda"] = mf.lambda;
  if (mf.model == "bipolar") j["bipolar_r"] = mf.bipolar_r;
  if (mf.model == "mcp") j["rc"] = mf.rc;
  if (mf.model == "ktier") j["tiers"] = mf.tiers;
  if (mf.model == "plcp") {
    j["lambda_l"] = mf.lambda_l;
    j["lambda_p"] = mf.lambda_p;
  }
  return j;
}

json manifest_json(const std::string& command, const ModelFlags& mf,
                   const ChannelFlags& cf, const SimFlags& sf,
                   const json& extra, double wall_seconds) {
  json j;
  j["command"] = command;
  j["tool_version"] = kToolVersion;
  j["model"] = model_json(mf);
  j["channel"] = {{"alpha", cf.alpha}, {"pt", cf.pt}, {"sigma2", cf.sigma2}};
  j["sim"] = {{"realizations", sf.realizations},
              {"links", sf.links},
              {"seed", sf.seed}};
  QuadratureSpec q;
  j["quad"] = {{"rel_tol", q.rel_tol},
               {"abs_tol", q.abs_tol},
               {"gilpelaez_t_max", q.gilpelaez_t_max},
               {"gilpelaez_nodes", q.gilpelaez_nodes}};
  for (auto& [k, v] : extra.items()) j[k] = v;
  j["wall_time"] = wall_seconds;
  return j;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

struct CurveOut {
  double theta_db = 0.0;
  std::vector<double> value;
  std::vector<double> std_err;
  bool has_std_err = false;
};

bool method_known(const std::string& m) {
  return m == "proposed" || m == "proposed-j" || m == "beta" || m == "exact" ||
         m == "nearest-only" || m == "sim";
}

// Evaluates one method over all thetas; simulation shares realizations
// across thetas.
std::vector<CurveOut> run_method(const std::string& method,
                                 const NetworkModel& model,
                                 const ChannelModel& ch,
                                 const std::vector<double>& theta_db,
                                 const std::vector<double>& gammas, int jdom,
                                 const std::string& plcp_mode,
                                 const SimFlags& sf) {
  if (!method_known(method))
    throw CLI::ValidationError("--method", "unknown method " + method);
  if ((method == "beta" || method == "exact") &&
      std::holds_alternative<PlcpModel>(model))
    throw CLI::ValidationError(
        "--method",
        method + " needs analytic moments, which the line Cox model does not "
                 "have (non-goal); use proposed or sim");
  if (method == "proposed-j" && !std::holds_alternative<PppModel>(model))
    throw CLI::ValidationError("--method",
                               "proposed-j supports only --model ppp");

  std::vector<CurveOut> out;
  if (method == "sim") {
    std::vector<double> thetas;
    for (double db : theta_db) thetas.push_back(db_to_linear(db));
    SimulationConfig cfg;
    cfg.n_realizations = sf.realizations;
    cfg.n_links = sf.links;
    cfg.seed = sf.seed;
    auto ems = simulate_meta(model, ch, thetas, cfg, gammas);
    for (size_t i = 0; i < ems.size(); ++i) {
      CurveOut c;
      c.theta_db = theta_db[i];
      c.value = ems[i].ccdf;
      c.std_err = ems[i].std_err;
      c.has_std_err = true;
      out.push_back(std::move(c));
    }
    return out;
  }

  CurveOptions opt;
  opt.j = jdom;
  opt.proposed.plcp = plcp_mode == "ppp-approx" ? PlcpInterference::ppp_approx
                                                : PlcpInterference::lines;
  Method m = Method::proposed;
  if (method == "proposed-j") m = Method::proposed_j;
  if (method == "beta") m = Method::beta;
  if (method == "exact") m = Method::exact;
  if (method == "nearest-only") m = Method::nearest_only;
  for (double db : theta_db) {
    MetaCurve c = evaluate_curve(model, ch, db_to_linear(db), gammas, m, opt);
    CurveOut o;
    o.theta_db = db;
    o.value = std::move(c.value);
    o.std_err = std::move(c.std_err);
    o.has_std_err = (m == Method::proposed_j);
    out.push_back(std::move(o));
  }
  return out;
}

void write_out(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  f << content;
}

void write_manifest(const std::string& out_path, const json& manifest) {
  if (out_path.empty()) return;
  std::ofstream f(out_path + ".manifest.json");
  f << manifest.dump(2) << "\n";
}

// ---------------------------------------------------------------- curve --

int cmd_curve(const ModelFlags& mf, const ChannelFlags& cf, const SimFlags& sf,
              const std::string& theta_s, const std::string& gamma_s,
              const std::string& method, int jdom,
              const std::string& plcp_mode, const std::string& out_path) {
  auto t0 = std::chrono::steady_clock::now();
  auto theta_db = parse_grid(theta_s, "--theta-db");
  auto gammas = parse_grid(gamma_s, "--gamma");
  NetworkModel model = build_model(mf);
  ChannelModel ch{cf.alpha, cf.pt, cf.sigma2};
  auto curves = run_method(method, model, ch, theta_db, gammas, jdom,
                           plcp_mode, sf);

  bool se = !curves.empty() && curves.front().has_std_err;
  std::string csv = se ? "theta_db,gamma,method,value,std_err\n"
                       : "theta_db,gamma,method,value\n";
  for (const auto& c : curves)
    for (size_t i = 0; i < gammas.size(); ++i) {
      csv += fmt(c.theta_db) + "," + fmt(gammas[i]) + "," + method + "," +
             fmt(c.value[i]);
      if (se) csv += "," + fmt(c.std_err[i]);
      csv += "\n";
    }
  write_out(out_path, csv);

  double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              t0)
                    .count();
  json extra = {{"method", method},
                {"j", jdom},
                {"plcp_interference", plcp_mode},
                {"theta_db", theta_db},
                {"gamma_points", gammas.size()},
                {"seed", sf.seed}};
  write_manifest(out_path, manifest_json("curve", mf, cf, sf, extra, wall));
  return 0;
}

// ---------------------------------------------------------------- table --

struct TableSpecCase {
  std::string label;
  ModelFlags mf;
  double alpha_override = 0.0;  // 0: keep the channel default
};

int cmd_table(int table, const ChannelFlags& cf_in, const SimFlags& sf,
              bool paper_convention, double scale, const std::string& theta_s,
              const std::string& gamma_s, const std::string& out_path) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<double> theta_db = {-10.0, 0.0, 12.0};
  if (!theta_s.empty()) theta_db = parse_grid(theta_s, "--theta-db");
  std::vector<double> gammas = default_gamma_grid();
  if (!gamma_s.empty()) gammas = parse_grid(gamma_s, "--gamma");
  KlMode mode = paper_convention ? KlMode::raw_cells : KlMode::renormalized;

  std::vector<TableSpecCase> cases;
  ChannelFlags cf = cf_in;
  std::vector<std::string> methods = {"proposed", "beta"};
  std::string exact_method = "exact";

  if (table == 1) {
    for (double a : {2.5, 3.0, 3.5, 4.0}) {
      ModelFlags m;
      m.model = "ppp";
      m.lambda = 1.0;
      cases.push_back({"alpha=" + fmt(a), m, a});
    }
    for (double lam : {0.1, 0.5, 5.0, 10.0}) {
      ModelFlags m;
      m.model = "ppp";
      m.lambda = lam;
      cases.push_back({"alpha=4 lambda=" + fmt(lam), m});
    }
  } else if (table == 2) {
    for (double rm : {15.0, 30.0, 45.0, 60.0, 75.0, 100.0, 125.0, 150.0}) {
      ModelFlags m;
      m.model = "bipolar";
      m.lambda = 10.0;
      m.bipolar_r = rm / 1000.0;
      cases.push_back({"R=" + fmt(rm) + "m", m});
    }
  } else if (table == 3) {
    for (double rc : {100.0, 150.0, 200.0, 250.0, 300.0, 350.0, 400.0}) {
      ModelFlags m;
      m.model = "mcp";
      m.lambda = 1.0;
      m.rc = rc / 1000.0;
      cases.push_back({"rc=" + fmt(rc) + "m", m});
    }
  } else if (table == 4) {
    ModelFlags m1;
    m1.model = "plcp";
    m1.lambda_l = 1.6 / kPi;
    m1.lambda_p = 1.0;
    cases.push_back({"lambda_l=1.6/pi lambda_p=1", m1});
    ModelFlags m2;
    m2.model = "plcp";
    m2.lambda_l = 8.0 / kPi;
    m2.lambda_p = 0.2;
    cases.push_back({"lambda_l=8/pi lambda_p=0.2", m2});
    methods = {"proposed", "proposed-ppp"};
    exact_method = "sim";
  } else {
    throw CLI::ValidationError("--table", "must be 1..4");
  }

  SimFlags sfs = sf;
  sfs.realizations = std::max(1, int(sf.realizations * scale));

  std::string csv = "table,case,theta_db,method,kl\n";
  std::ostringstream pretty;
  pretty << "KL divergence vs exact (";
  pretty << (paper_convention ? "paper cell convention" : "renormalized");
  pretty << "), table " << table << "\n";

  for (const auto& c : cases) {
    ChannelFlags cc = cf;
    if (c.alpha_override > 0.0) cc.alpha = c.alpha_override;
    NetworkModel model = build_model(c.mf);
    ChannelModel ch{cc.alpha, cc.pt, cc.sigma2};

    for (double db : theta_db) {
      std::vector<double> one_theta = {db};
      auto exact = run_method(exact_method, model, ch, one_theta, gammas, 2,
                              "plcp", sfs);
      for (const auto& meth : methods) {
        std::string run_as = meth == "proposed-ppp" ? "proposed" : meth;
        std::string plcp_mode = meth == "proposed-ppp" ? "ppp-approx" : "plcp";
        auto got = run_method(run_as, model, ch, one_theta, gammas, 2,
                              plcp_mode, sfs);
        double kl = kl_divergence(gammas, got.front().value,
                                  exact.front().value, mode);
        csv += std::to_string(table) + "," + c.label + "," + fmt(db) + "," +
               meth + "," + fmt(kl) + "\n";
        pretty << "  " << c.label << "  theta=" << fmt(db) << " dB  " << meth
               << "|" << exact_method << "  " << fmt(kl) << "\n";
      }
      if (table == 4) {
        csv += std::to_string(table) + "," + c.label + "," + fmt(db) +
               ",tppp,n/a (out of scope)\n";
        pretty << "  " << c.label << "  theta=" << fmt(db)
               << " dB  tppp|sim  n/a (out of scope)\n";
      }
    }
  }

  std::cout << pretty.str();
  if (!out_path.empty())
    write_out(out_path, csv);
  else
    std::cout << "\n" << csv;

  double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              t0)
                    .count();
  ModelFlags mf_echo;
  mf_echo.model = "table-" + std::to_string(table);
  json extra = {{"table", table},
                {"paper_convention", paper_convention},
                {"scale", scale},
                {"seed", sf.seed}};
  write_manifest(out_path, manifest_json("table", mf_echo, cf, sfs, extra,
                                          wall));
  return 0;
}

// -------------------------------------------------------------- compare --

int cmd_compare(const ModelFlags& mf, const ChannelFlags& cf,
                const SimFlags& sf, const std::string& theta_s,
                const std::string& gamma_s,
                const std::vector<std::string>& methods, int jdom,
                const std::string& plcp_mode, const std::string& out_path) {
  if (methods.size() != 2)
    throw CLI::ValidationError("--method", "compare needs exactly two");
  auto t0 = std::chrono::steady_clock::now();
  auto theta_db = parse_grid(theta_s, "--theta-db");
  auto gammas = parse_grid(gamma_s, "--gamma");
  NetworkModel model = build_model(mf);
  ChannelModel ch{cf.alpha, cf.pt, cf.sigma2};

  auto a = run_method(methods[0], model, ch, theta_db, gammas, jdom,
                      plcp_mode, sf);
  auto b = run_method(methods[1], model, ch, theta_db, gammas, jdom,
                      plcp_mode, sf);

  json rep;
  rep["method_a"] = methods[0];
  rep["method_b"] = methods[1];
  rep["gamma"] = gammas;
  rep["per_theta"] = json::array();
  for (size_t i = 0; i < theta_db.size(); ++i) {
    SupGap g = sup_gap(gammas, a[i].value, b[i].value);
    json jt;
    jt["theta_db"] = theta_db[i];
    jt["sup_gap"] = g.value;
    jt["sup_gap_at_gamma"] = g.at_gamma;
    jt["kl_renormalized"] =
        kl_divergence(gammas, a[i].value, b[i].value, KlMode::renormalized);
    jt["kl_paper_convention"] =
        kl_divergence(gammas, a[i].value, b[i].value, KlMode::raw_cells);
    jt["curve_a"] = a[i].value;
    jt["curve_b"] = b[i].value;
    rep["per_theta"].push_back(jt);
  }
  double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              t0)
                    .count();
  json extra = {{"methods", methods},
                {"j", jdom},
                {"plcp_interference", plcp_mode},
                {"theta_db", theta_db},
                {"seed", sf.seed}};
  rep["manifest"] = manifest_json("compare", mf, cf, sf, extra, wall);
  write_out(out_path, rep.dump(2) + "\n");
  return 0;
}

void add_model_flags(CLI::App* c, ModelFlags& mf) {
  c->add_option("--model", mf.model, "ppp|bipolar|mcp|ktier|plcp")
      ->default_val("ppp");
  c->add_option("--lambda", mf.lambda, "density, km^-2 (ppp/bipolar/mcp)");
  c->add_option("--bipolar-r", mf.bipolar_r,
                "bipolar transmitter-receiver distance, km");
  c->add_option("--rc", mf.rc, "cluster radius, km");
  c->add_option("--tiers", mf.tiers, "per-tier lambda:power pairs, comma-sep");
  c->add_option("--lambda-l", mf.lambda_l, "line density, km/km^2");
  c->add_option("--lambda-p", mf.lambda_p, "points per km of line");
}

void add_channel_flags(CLI::App* c, ChannelFlags& cf) {
  c->add_option("--alpha", cf.alpha, "path loss exponent (> 2)");
  c->add_option("--pt", cf.pt, "transmit power, W");
  c->add_option("--sigma2", cf.sigma2, "noise power, W");
}

void add_sim_flags(CLI::App* c, SimFlags& sf) {
  c->add_option("--realizations", sf.realizations, "geometry realizations");
  c->add_option("--links", sf.links, "links per realization");
  c->add_option("--seed", sf.seed, "RNG seed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SINR meta distribution toolkit"};
  app.require_subcommand(1);

  ModelFlags mf;
  ChannelFlags cf;
  SimFlags sf;
  std::string theta_s = "0";
  std::string gamma_s = "0.01:0.99:0.01";
  std::string method = "proposed";
  std::vector<std::string> methods2;
  int jdom = 2;
  std::string plcp_mode = "plcp";
  std::string out_path;
  int table = 1;
  bool paper_convention = false;
  double scale = 1.0;

  auto* curve = app.add_subcommand("curve", "evaluate curves as CSV");
  add_model_flags(curve, mf);
  add_channel_flags(curve, cf);
  add_sim_flags(curve, sf);
  curve->add_option("--theta-db", theta_s, "dB list a,b,... or a:b:step");
  curve->add_option("--gamma", gamma_s, "list or a:b:step in (0,1)");
  curve->add_option("--method", method,
                    "proposed|proposed-j|beta|exact|nearest-only|sim");
  curve->add_option("--j", jdom, "dominant interferers for proposed-j (1..4)");
  curve->add_option("--plcp-interference", plcp_mode, "plcp|ppp-approx");
  curve->add_option("--out", out_path, "CSV file (default stdout)");

  std::string tab_theta_s, tab_gamma_s;
  auto* tab = app.add_subcommand("table", "KL divergence tables");
  add_channel_flags(tab, cf);
  add_sim_flags(tab, sf);
  tab->add_option("--table", table, "1..4")->required();
  tab->add_flag("--paper-convention", paper_convention,
                "raw in-grid cell sums (signed) instead of renormalized KL");
  tab->add_option("--scale", scale, "Monte-Carlo effort multiplier");
  tab->add_option("--theta-db", tab_theta_s,
                  "override the default -10,0,12 dB rows");
  tab->add_option("--gamma", tab_gamma_s, "override the 0.01:0.99:0.01 grid");
  tab->add_option("--out", out_path, "CSV file");

  auto* cmp = app.add_subcommand("compare", "two methods, JSON report");
  add_model_flags(cmp, mf);
  add_channel_flags(cmp, cf);
  add_sim_flags(cmp, sf);
  cmp->add_option("--theta-db", theta_s, "dB list or range");
  cmp->add_option("--gamma", gamma_s, "list or a:b:step in (0,1)");
  cmp->add_option("--method", methods2, "exactly two methods")
      ->expected(2);
  cmp->add_option("--j", jdom, "dominant interferers for proposed-j");
  cmp->add_option("--plcp-interference", plcp_mode, "plcp|ppp-approx");
  cmp->add_option("--out", out_path, "JSON file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (curve->parsed())
      return cmd_curve(mf, cf, sf, theta_s, gamma_s, method, jdom, plcp_mode,
                       out_path);
    if (tab->parsed())
      return cmd_table(table, cf, sf, paper_convention, scale, tab_theta_s,
                       tab_gamma_s, out_path);
    return cmd_compare(mf, cf, sf, theta_s, gamma_s, methods2, jdom,
                       plcp_mode, out_path);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const metasinr::numerical_error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
