// Copyright 2026 The hw Authors
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

// hw: command-line driver for the finite-group, root-system and SU(2) experiments.
#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <map>

#include "experiments.hpp"
#include "hw/group.hpp"
#include "inputs.hpp"

namespace {

using hw::cli::Json;

struct Opt {
  const char* flag;
  const char* help;
};

struct Command {
  const char* experiment;  // registry name
  const char* path;        // "gap" or "su2 gap"
  const char* help;
  std::vector<Opt> opts;
  std::vector<const char*> required;
};

const std::vector<Command>& commands() {
  static const std::vector<Command> list{
      {"gap", "gap", "spectral gap of the uniform measure on a generating set",
       {{"--group", "SL:d:q, Z:n or S:n"}, {"--gens", "std, alt or a generator file"}, {"--method", "auto, dense or iterative"},
        {"--tol", "eigensolver tolerance"}, {"--cap", "group order cap"}},
       {"--group"}},
      {"diam", "diam", "exact Cayley diameter and growth profile",
       {{"--group", "group descriptor"}, {"--gens", "std, alt or a generator file"}, {"--profile", "write |S^l| as CSV"},
        {"--cap", "group order cap"}},
       {"--group"}},
      {"sandwich", "sandwich", "(diam-1)/log|G| <= 1/gap <= |S| diam^2",
       {{"--group", "group descriptor"}, {"--gens", "comma-separated generating sets"}, {"--tol", "tolerance"},
        {"--cap", "group order cap"}},
       {"--group"}},
      {"sarnak-xue", "sarnak-xue", "dim(pi) lambda^2 <= chi_G(mu*mu) on seeded random symmetric measures",
       {{"--group", "group descriptor"}, {"--measures", "number of measures"}, {"--support", "random support size"},
        {"--tol", "tolerance"}, {"--cap", "group order cap"}},
       {"--group"}},
      {"trace-identity", "trace-identity", "|G| nu(1) against the eigenvalue sum of Reg(nu)",
       {{"--group", "group descriptor"}, {"--measures", "number of measures"}, {"--tol", "tolerance"},
        {"--cap", "group order cap"}},
       {"--group"}},
      {"chartable", "chartable", "character table by the Burnside-Dixon method",
       {{"--group", "group descriptor"}, {"--cap", "group order cap"}},
       {"--group"}},
      {"quasirandom", "quasirandom", "minimal nontrivial irrep dimension and kernel indices",
       {{"--group", "group descriptor"}, {"--alpha", "exponent in dim >= c [G:Ker]^alpha"},
        {"--expect-min-dim", "assert this minimal dimension"}, {"--cap", "group order cap"}},
       {"--group"}},
      {"clifford", "clifford", "trace bound refined through a normal subgroup",
       {{"--group", "group descriptor"}, {"--normal", "center or derived"}, {"--l", "l"}, {"--lp", "l'"},
        {"--M", "hypothesis bound (default: measured)"}, {"--measure", "random or gens"}, {"--gens", "generating set"},
        {"--count", "number of random measures"}, {"--support", "random support size"}, {"--tol", "tolerance"},
        {"--cap", "group order cap"}},
       {"--group"}},
      {"trace-decay", "trace-decay", "chi(mu^(l)) along a chain of congruence quotients",
       {{"--d", "matrix dimension"}, {"--moduli", "comma-separated chain"}, {"--gens", "generating set"},
        {"--A", "exponent A"}, {"--C0", "constant or 'calibrate'"}, {"--M", "trace bound"},
        {"--max-ratio", "assert max/min trace ratio"}, {"--omega2-primes", "prime factors allowed for squarefree levels"},
        {"--memory-cap", "largest level to convolve on"}, {"--cap", "group order cap"}},
       {}},
      {"prime-split", "prime-split", "diameter recursion along a chain with prime ratios",
       {{"--d", "matrix dimension"}, {"--chain", "comma-separated chain starting at 1"},
        {"--gens", "std or an integer matrix file"}, {"--bound", "bound on C_i"}, {"--cap", "group order cap"}},
       {"--chain"}},
      {"rootsys table", "rootsys table", "the exponent A = 1 + |S|/|R+| for every type",
       {{"--max-rank", "largest classical rank"}},
       {}},
      {"rootsys verify", "rootsys verify", "exhaustive check of the simple-root subset inequality",
       {{"--type", "A, B, C, D, E6, E7, E8, F4 or G2"}, {"--rank", "single rank"}, {"--max-rank", "largest rank"}},
       {}},
      {"su2 gap", "su2 gap", "gap_r of the uniform measure on a gate set",
       {{"--gates", "five-adic or a gate file"}, {"--r", "comma-separated radii"}, {"--expect", "assert the last value"},
        {"--tol", "tolerance for --expect"}},
       {}},
      {"su2 diam", "su2 diam", "word length for eps-density",
       {{"--gates", "five-adic or a gate file"}, {"--eps", "comma-separated eps values"}, {"--cap", "depth cap"}},
       {}},
      {"su2 chir", "su2 chir", "chi_r(mu^(l_r)) with the Clebsch-Gordan expansion",
       {{"--gates", "five-adic or a gate file"}, {"--r", "radius"}, {"--C0", "schedule constant"}, {"--A", "exponent"},
        {"--E", "bound to test"}, {"--max-dim", "largest irrep dimension"}},
       {}},
      {"su2 approx-id", "su2 approx-id", "Monte Carlo checks of the approximate identity f_r",
       {{"--r", "comma-separated radii"}, {"--samples", "Haar samples"}},
       {}},
      {"su2 sk-fit", "su2 sk-fit", "fit l ~ a log^b(1/eps) over an eps grid",
       {{"--gates", "five-adic or a gate file"}, {"--grid", "decreasing eps values"}, {"--cap", "depth cap"}},
       {}},
      {"su2 reps", "su2 reps", "unitarity, homomorphism, characters, tensor supports and positivity",
       {{"--max-m", "largest label"}, {"--samples", "random pairs per label"}, {"--tensor-max", "largest tensor label"},
        {"--positivity-measures", "number of random measures"}},
       {}},
  };
  return list;
}

std::string key_of(const std::string& flag) {
  std::string k = flag.substr(2);
  for (char& c : k)
    if (c == '-') c = '_';
  return k;
}

struct Outputs {
  std::string json, csv, seed;
};

std::string indexed_path(const std::string& path, std::size_t k) {
  std::filesystem::path p(path);
  return (p.parent_path() / (p.stem().string() + "_" + std::to_string(k) + p.extension().string())).string();
}

int emit(const std::vector<hw::cli::Report>& reports, const Outputs& out, const std::string& config_name) {
  bool pass = true;
  for (const auto& r : reports) pass = pass && r.pass;
  Json doc;
  if (reports.size() == 1 && config_name.empty()) {
    doc = reports[0].to_json();
  } else {
    doc["config"] = config_name;
    doc["experiments"] = Json::array();
    for (const auto& r : reports) doc["experiments"].push_back(r.to_json());
    doc["pass"] = pass;
  }
  const std::string text = doc.dump(2) + "\n";
  std::cout << text;
  if (!out.json.empty()) hw::cli::write_text(out.json, text);
  if (!out.csv.empty()) {
    if (reports.size() == 1) {
      hw::cli::write_text(out.csv, hw::cli::to_csv(reports[0].table));
    } else {
      for (std::size_t k = 0; k < reports.size(); ++k)
        hw::cli::write_text(indexed_path(out.csv, k), hw::cli::to_csv(reports[k].table));
    }
  }
  return pass ? 0 : 1;
}

// Input files named in a config are looked up next to the config first.
void resolve_inputs(Json& params, const std::filesystem::path& base) {
  for (const char* key : {"gates", "gens"}) {
    if (!params.contains(key) || !params[key].is_string()) continue;
    const std::filesystem::path f = params[key].get<std::string>();
    if (f.extension() != ".json" || f.is_absolute()) continue;
    if (const auto near = base / f; std::filesystem::exists(near)) params[key] = near.lexically_normal().string();
  }
}

int run_config(const std::string& path, const Outputs& out) {
  const Json cfg = hw::cli::read_json_file(path);
  if (!cfg.is_object()) throw hw::cli::ConfigError(path + ": config must be a JSON object");
  std::vector<Json> items;
  if (cfg.contains("experiments")) {
    if (!cfg["experiments"].is_array()) throw hw::cli::ConfigError(path + ": 'experiments' must be a list");
    for (const auto& e : cfg["experiments"]) items.push_back(e);
  } else {
    items.push_back(cfg);
  }
  std::vector<hw::cli::Report> reports;
  for (const auto& item : items) {
    if (!item.is_object() || !item.contains("experiment") || !item["experiment"].is_string())
      throw hw::cli::ConfigError(path + ": every entry needs an 'experiment' name");
    Json params = item.value("params", Json::object());
    resolve_inputs(params, std::filesystem::path(path).parent_path());
    if (!out.seed.empty()) params["seed"] = out.seed;
    reports.push_back(hw::cli::run_experiment(item["experiment"].get<std::string>(), std::move(params)));
  }
  Outputs o = out;
  if (o.json.empty() && cfg.contains("output") && cfg["output"].contains("json")) o.json = cfg["output"]["json"];
  if (o.csv.empty() && cfg.contains("output") && cfg["output"].contains("csv")) o.csv = cfg["output"]["csv"];
  const std::string name = cfg.value("name", std::filesystem::path(path).stem().string());
  return emit(reports, o, name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hw: spectral gaps, diameters, characters, root systems and SU(2) experiments"};
  app.require_subcommand(1);
  app.set_version_flag("--version", hw::cli::kVersion);

  Outputs out;
  auto add_common = [&out](CLI::App* sub) {
    sub->add_option("--json", out.json, "write the JSON report here");
    sub->add_option("--csv", out.csv, "write the result table here");
    sub->add_option("--seed", out.seed, "seed for randomized checks");
  };

  // Values per command; std::map keeps references stable while CLI11 writes into them.
  std::map<std::string, std::map<std::string, std::string>> values;
  std::map<std::string, CLI::App*> groups;
  std::vector<std::pair<const Command*, CLI::App*>> subs;
  for (const auto& c : commands()) {
    CLI::App* parent = &app;
    std::string leaf = c.path;
    if (const auto sp = leaf.find(' '); sp != std::string::npos) {
      const std::string head = leaf.substr(0, sp);
      leaf = leaf.substr(sp + 1);
      if (!groups.count(head)) {
        groups[head] = app.add_subcommand(head, head == "su2" ? "SU(2) experiments" : "root system experiments");
        groups[head]->require_subcommand(1);
      }
      parent = groups[head];
    }
    CLI::App* sub = parent->add_subcommand(leaf, c.help);
    auto& vals = values[c.experiment];
    for (const auto& o : c.opts) {
      auto* opt = sub->add_option(o.flag, vals[o.flag], o.help);
      for (const char* req : c.required)
        if (std::string(req) == o.flag) opt->required();
    }
    add_common(sub);
    subs.emplace_back(&c, sub);
  }

  std::string config_path;
  CLI::App* run = app.add_subcommand("run", "run a JSON experiment config");
  run->add_option("config", config_path, "config file")->required();
  add_common(run);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) return run_config(config_path, out);
    for (const auto& [cmd, sub] : subs) {
      if (!sub->parsed()) continue;
      Json params = Json::object();
      for (const auto& [flag, value] : values[cmd->experiment])
        if (sub->count(flag) > 0) params[key_of(flag)] = value;
      if (!out.seed.empty()) params["seed"] = out.seed;
      return emit({hw::cli::run_experiment(cmd->experiment, std::move(params))}, out, "");
    }
  } catch (const hw::CapExceededError& e) {
    std::cerr << "error: " << e.what() << " (order " << e.order() << ", cap " << e.cap() << ")\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
