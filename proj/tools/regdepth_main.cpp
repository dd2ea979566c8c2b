#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <thread>

#include "regdepth/csv.hpp"
#include "regdepth/dc.hpp"
#include "regdepth/fit.hpp"
#include "regdepth/fixtures.hpp"
#include "regdepth/gridmap.hpp"
#include "regdepth/prd.hpp"
#include "regdepth/rd.hpp"

namespace {

using nlohmann::json;
using namespace regdepth;

// Exit codes: 0 success, 2 input error, 3 depth-domain error, 4 optimizer
// failure.
constexpr int kInputError = 2;
constexpr int kDomainError = 3;
constexpr int kOptimizerError = 4;

int parallelism() {
  const int hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("DEPTH_REGRESS_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) return std::min(hw, cap);
  }
  return hw;
}

Notion parse_notion(const std::string& s) {
  if (s == "rd") return Notion::RD;
  if (s == "prd") return Notion::PRD;
  if (s == "dc") return Notion::DC;
  throw std::invalid_argument("unknown notion: " + s);
}

LocationEstimator parse_estimator(const std::string& t, double q) {
  if (t == "median") return LocationEstimator::make_median();
  if (t == "mean") return LocationEstimator::make_mean();
  if (t == "quantile") return LocationEstimator::make_quantile(q);
  throw std::invalid_argument("unknown location estimator: " + t);
}

json depth_json(const DepthValue& d) {
  json j;
  j["notion"] = to_string(d.notion);
  j["depth"] = d.value;
  if (d.exact()) {
    j["k"] = d.numerator;
    j["n"] = d.denominator;
  }
  return j;
}

json beta_json(const Coefficients& b) { return json(b.beta); }

json median_set_json(const MedianSet& m) {
  json j;
  j["maximizers"] = json::array();
  for (const auto& c : m.maximizers) j["maximizers"].push_back(beta_json(c));
  j["max_depth"] = depth_json(m.max_depth);
  j["average"] = beta_json(m.average);
  j["average_depth"] = depth_json(m.average_depth);
  j["unique"] = m.unique;
  return j;
}

void cmd_depth(const std::string& notion_name, const std::string& data,
               const std::vector<double>& beta, double tol,
               const std::string& t_name, double q) {
  const Notion notion = parse_notion(notion_name);
  const Dataset d = load_dataset_csv(data);
  const Coefficients b{beta};
  json out;
  switch (notion) {
    case Notion::RD:
      out = depth_json(rd_depth(d, b).depth);
      break;
    case Notion::PRD:
      out = depth_json(DepthValue::from_value(
          Notion::PRD, prd(d, b, parse_estimator(t_name, q))));
      break;
    case Notion::DC:
      out = depth_json(d.p() == 1
                           ? dc_depth_1d(d.ys(), b.beta.at(0))
                           : dc_depth(d, b, tol >= 0 ? std::optional<double>(tol)
                                                     : std::nullopt));
      break;
  }
  std::cout << out.dump() << "\n";
}

void cmd_median(const std::string& notion_name, const std::string& data,
                const std::string& t_name, double q) {
  const Notion notion = parse_notion(notion_name);
  const Dataset d = load_dataset_csv(data);
  json out;
  if (notion == Notion::PRD) {
    const auto r = prd_median(d, parse_estimator(t_name, q));
    MedianSet m;
    m.maximizers = {r.beta};
    m.max_depth = DepthValue::from_value(Notion::PRD, r.prd);
    m.average = r.beta;
    m.average_depth = m.max_depth;
    m.unique = true;
    out = median_set_json(m);
    out["uf"] = r.uf;
    out["certificate"] = r.certificate;
  } else {
    out = median_set_json(notion == Notion::RD ? rd_median(d) : dc_maximizers(d));
  }
  out["notion"] = notion_name;
  std::cout << out.dump() << "\n";
}

void cmd_gridmap(const std::string& notion_name, const std::string& data,
                 const GridSpec& spec, const std::string& out_path) {
  const Notion notion = parse_notion(notion_name);
  const Dataset d = load_dataset_csv(data);
  const auto rows = depth_gridmap(d, notion, spec, parallelism());
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot write: " + out_path);
  write_gridmap_csv(rows, out);
  json j;
  j["out"] = out_path;
  j["rows"] = rows.size();
  std::cout << j.dump() << "\n";
}

void cmd_residuals(const std::string& data, const std::string& methods,
                   const std::string& out_path, const std::string& json_path) {
  const Dataset d = load_dataset_csv(data);
  std::vector<NamedFit> fits;
  std::string token;
  std::istringstream ss(methods);
  while (std::getline(ss, token, ',')) {
    if (token == "ls") {
      fits.push_back({"ls", ls_fit(d)});
    } else if (token == "rd") {
      fits.push_back({"rd", rd_median(d).representative()});
    } else if (token == "prd") {
      fits.push_back({"prd", prd_median(d).beta});
    } else {
      throw std::invalid_argument("unknown method: " + token);
    }
  }
  if (fits.empty()) throw std::invalid_argument("no methods selected");

  const auto table = residual_table(d, fits);
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot write: " + out_path);
  write_residual_table_csv(table, out);

  json j;
  j["out"] = out_path;
  for (const auto& f : fits) j["fits"][f.name] = beta_json(f.beta);
  if (!json_path.empty()) {
    json rows = json::array();
    for (const auto& row : table.rows) {
      json r;
      r["i"] = row.id;
      r["x"] = row.x;
      r["y"] = row.y;
      for (std::size_t c = 0; c < table.names.size(); ++c) {
        r["yhat_" + table.names[c]] = row.fitted[c];
        r["r_" + table.names[c]] = row.residual[c];
      }
      rows.push_back(std::move(r));
    }
    std::ofstream jf(json_path);
    if (!jf) throw std::invalid_argument("cannot write: " + json_path);
    jf << rows.dump() << "\n";
    j["json"] = json_path;
  }
  std::cout << j.dump() << "\n";
}

void cmd_fixture(const std::string& name, const std::string& dump_path) {
  const Dataset d = load_fixture(name);
  json j;
  j["name"] = name;
  j["n"] = d.n();
  j["p"] = d.p();
  if (!dump_path.empty()) {
    std::ofstream out(dump_path);
    if (!out) throw std::invalid_argument("cannot write: " + dump_path);
    write_dataset_csv(d, out);
    j["path"] = dump_path;
  }
  std::cout << j.dump() << "\n";
}

std::string dump_trace(const OptimizerFailed& err) {
  json rows = json::array();
  for (const auto& [beta, value] : err.trace) {
    rows.push_back({{"beta", beta.beta}, {"uf", value}});
  }
  const std::string path = "regdepth-optimizer-trace.json";
  std::ofstream out(path);
  out << rows.dump() << "\n";
  return path;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regression depth functionals (RD, PRD, D_C), their medians, "
               "and the least-squares comparison layer"};
  app.require_subcommand(1);

  std::string notion = "rd", data, t_name = "median", out_path, json_path;
  std::string fixture_name, dump_path, methods = "ls,rd,prd";
  std::vector<double> beta;
  double tol = -1.0, q = 0.5;
  GridSpec spec;

  auto* depth = app.add_subcommand("depth", "Depth of one candidate fit");
  depth->add_option("--notion", notion, "rd | prd | dc")->required();
  depth->add_option("--data", data, "dataset CSV")->required();
  depth->add_option("--beta", beta, "candidate coefficients, intercept first")
      ->required()
      ->expected(-1);
  depth->add_option("--tol", tol, "dc exact-fit tolerance (default scales with data)")
      ->check(CLI::NonNegativeNumber);
  depth->add_option("--t", t_name, "prd location estimator: median | mean | quantile");
  depth->add_option("--q", q, "quantile level for --t quantile");

  auto* median = app.add_subcommand("median", "Maximum-depth fits and uniqueness");
  median->add_option("--notion", notion, "rd | prd | dc")->required();
  median->add_option("--data", data, "dataset CSV")->required();
  median->add_option("--t", t_name, "prd location estimator");
  median->add_option("--q", q, "quantile level for --t quantile");

  auto* gridmap = app.add_subcommand("gridmap", "Depth over a beta grid, CSV output");
  gridmap->add_option("--notion", notion, "rd | prd")->required();
  gridmap->add_option("--data", data, "dataset CSV")->required();
  gridmap->add_option("--lo", spec.lo, "grid lower bound (both axes)");
  gridmap->add_option("--hi", spec.hi, "grid upper bound");
  gridmap->add_option("--steps", spec.steps, "grid points per axis");
  gridmap->add_option("--out", out_path, "output CSV path")->required();

  auto* residuals = app.add_subcommand("residuals", "Fitted values and residuals per method");
  residuals->add_option("--data", data, "dataset CSV")->required();
  residuals->add_option("--methods", methods, "comma list from ls,rd,prd");
  residuals->add_option("--out", out_path, "output CSV path")->required();
  residuals->add_option("--json", json_path, "also write rows as JSON");

  auto* fixture = app.add_subcommand("fixture", "Embedded datasets");
  fixture->add_option("--name", fixture_name, "stars | abc | two_lines | symm30")->required();
  fixture->add_option("--dump", dump_path, "write the dataset as CSV");

  try {
    app.parse(argc, argv);
    if (depth->parsed()) cmd_depth(notion, data, beta, tol, t_name, q);
    if (median->parsed()) cmd_median(notion, data, t_name, q);
    if (gridmap->parsed()) cmd_gridmap(notion, data, spec, out_path);
    if (residuals->parsed()) cmd_residuals(data, methods, out_path, json_path);
    if (fixture->parsed()) cmd_fixture(fixture_name, dump_path);
    return 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  } catch (const OptimizerFailed& e) {
    std::cerr << "error: " << e.what() << "\ntrace: " << dump_trace(e) << "\n";
    return kOptimizerError;
  } catch (const DepthDomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
