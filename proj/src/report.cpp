#include "cdskernel/report.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cdskernel/biclique_free.hpp"
#include "cdskernel/distance_r.hpp"
#include "cdskernel/errors.hpp"
#include "cdskernel/framework.hpp"
#include "cdskernel/graph.hpp"
#include "cdskernel/reductions.hpp"

namespace cdskernel {

namespace {

std::vector<int> parse_int_args(const std::string& spec) {
  std::vector<int> out;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

Graph generate(const std::string& spec, std::uint64_t seed) {
  auto colon = spec.find(':');
  std::string name = spec.substr(0, colon);
  std::vector<int> args;
  if (colon != std::string::npos) args = parse_int_args(spec.substr(colon + 1));
  auto need = [&](std::size_t c) {
    if (args.size() != c)
      throw InputError("generator " + name + ": wrong argument count");
  };
  if (name == "path") {
    need(1);
    return path_graph(args[0]);
  }
  if (name == "cycle") {
    need(1);
    return cycle_graph(args[0]);
  }
  if (name == "star") {
    need(1);
    return star_graph(args[0]);
  }
  if (name == "complete") {
    need(1);
    return complete_graph(args[0]);
  }
  if (name == "grid") {
    need(2);
    return grid_graph(args[0], args[1]);
  }
  if (name == "grid_apex") {
    need(2);
    return grid_apex(args[0], args[1]);
  }
  if (name == "random_degenerate") {
    need(2);
    return random_degenerate(args[0], args[1], seed);
  }
  if (name == "random_bipartite_incidence") {
    need(2);
    return random_bipartite_incidence(args[0], args[1], seed);
  }
  throw InputError("unknown generator: " + name);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open " + path);
  out << text;
}

struct VerifyNumbers {
  int opt_original = -1;
  int opt_reduced = -1;
  int lifted_value = -1;
  double realized_ratio = -1.0;
  bool checked = false;
  bool ok = true;
};

// oracle verification of the kernel guarantee on one instance
VerifyNumbers verify_kernel(const Graph& g, const AnnotatedInstance& original,
                            const KernelOutput& out, double bound, bool rcds,
                            const OracleCaps& caps) {
  VerifyNumbers v;
  const int n = g.vertex_count();
  auto opt_orig = exact_min_dominator(
      {g, VertexSet::full(n), original.r, n, true, caps});
  if (!opt_orig.feasible) {
    // no solution at all: the kernel must have rejected
    v.checked = true;
    v.ok = out.trivial_negative;
    return v;
  }
  int opt_value = std::min(opt_orig.size, original.k + 1);
  v.opt_original = opt_orig.size;

  VertexSet reduced_solution;
  if (out.trivial_negative) {
    reduced_solution = VertexSet{0};
    v.opt_reduced = 1;
  } else {
    const Graph& rg = out.reduced.graph;
    VertexSet targets = rcds ? out.reduced.Z
                             : VertexSet::full(rg.vertex_count());
    auto opt_red = exact_min_dominator(
        {rg, targets, out.reduced.r, rg.vertex_count(), true, caps});
    if (!opt_red.feasible) {
      v.checked = true;
      v.ok = false;  // reduced instance must stay solvable
      return v;
    }
    v.opt_reduced = opt_red.size;
    reduced_solution = opt_red.dominator;
  }

  LiftReport lift = rcds ? r_lift(original, out, reduced_solution)
                         : lift_solution(original, out, reduced_solution);
  v.checked = true;
  if (!lift.valid) {
    v.ok = false;
    return v;
  }
  v.lifted_value = lift.value;
  v.realized_ratio = static_cast<double>(lift.value) / opt_value;
  v.ok = lift.value <= bound * opt_value + 1e-9;
  return v;
}

}  // namespace

Graph instance_from_config(const RunConfig& config) {
  if (!config.input_file.empty() && !config.generator.empty())
    throw InputError("give either an input file or a generator, not both");
  if (!config.input_file.empty()) return read_edge_list_file(config.input_file);
  if (!config.generator.empty()) return generate(config.generator, config.seed);
  throw InputError("no instance source configured");
}

RunOutcome run(const RunConfig& config) {
  RunOutcome outcome;
  nlohmann::json j;
  j["schema"] = 1;
  j["pipeline"] = config.pipeline;
  j["seed"] = config.seed;
  j["params"]["k"] = config.k;
  j["params"]["r"] = config.r;
  j["params"]["d"] = config.d;
  j["params"]["eps"] = config.eps;
  j["params"]["alpha"] = config.alpha;

  try {
    if (config.pipeline == "reduce-setcover") {
      auto sc = read_set_cover_file(config.input_file);
      auto red = reduce_to_rds(sc, config.r);
      j["input"]["universe"] = sc.universe_size;
      j["input"]["families"] = sc.families.size();
      j["input"]["k"] = sc.k;
      j["reduction"]["n"] = red.graph.vertex_count();
      j["reduction"]["m"] = red.graph.edge_count();
      j["reduction"]["k_prime"] = red.k_prime;
      j["reduction"]["in_Hp"] = membership_check_Hp(red.graph, config.r);
      if (!config.out_path.empty()) {
        std::ostringstream edges;
        write_edge_list(edges, red.graph);
        write_text(config.out_path + ".edges", edges.str());
        write_text(config.out_path + ".roles.json", rds_role_map_json(red));
      }
      if (config.verify) {
        bool sc_pos = exact_set_cover(sc, config.caps);
        auto ds = exact_min_dominator(
            {red.graph, VertexSet::full(red.graph.vertex_count()), config.r,
             red.k_prime, false, config.caps});
        j["verify"]["set_cover_positive"] = sc_pos;
        j["verify"]["rds_positive"] = ds.feasible;
        if (sc_pos != ds.feasible) {
          outcome.exit_code = kExitVerificationFailed;
          outcome.error = "reduction equivalence failed";
        }
      }
      outcome.report_json = j.dump(2) + "\n";
      if (!config.out_path.empty())
        write_text(config.out_path + ".report.json", outcome.report_json);
      return outcome;
    }

    Graph g = instance_from_config(config);
    const int n = g.vertex_count();
    j["input"]["n"] = n;
    j["input"]["m"] = g.edge_count();

    KernelOutput out;
    AnnotatedInstance original{g, VertexSet::full(n), config.k, 1};
    double ratio_bound = 1.0;
    bool rcds = false;

    if (config.pipeline == "cds-framework") {
      out = lossy_cds_kernel(g, config.k, config.eps,
                             exhaustive_core_provider(config.caps),
                             config.caps);
      ratio_bound = 1.0 + config.eps;
    } else if (config.pipeline == "kdd-psaks") {
      out = psaks_kdd(g, config.k, config.eps, config.d, config.caps);
      ratio_bound = 1.0 + config.eps;
      j["core_bound"] = kdd_core_size_bound(config.k, config.d);
    } else if (config.pipeline == "rds-nowhere-dense") {
      original.r = config.r;
      RKernelParams params;
      params.r = config.r;
      params.alpha = config.alpha;
      out = r_lossy_kernel(g, config.k, params,
                           exhaustive_r_core_provider(config.caps),
                           config.caps);
      ratio_bound = config.alpha;
      rcds = true;
    } else if (config.pipeline == "ds-bikernel") {
      auto provider = exhaustive_r_core_provider(config.caps);
      auto core = provider(g, config.k, 1);
      if (!core) {
        out.reduced = AnnotatedInstance{Graph(1), VertexSet{}, 0, 1};
        out.trivial_negative = true;
        out.kept = {-1};
      } else {
        out = ds_bikernel(g, *core, config.k);
        j["core_size"] = core->size();
      }
      rcds = true;  // annotated target semantics
    } else {
      throw InputError("unknown pipeline: " + config.pipeline);
    }

    j["kernel"]["reduced_n"] = out.reduced.graph.vertex_count();
    j["kernel"]["reduced_m"] = out.reduced.graph.edge_count();
    j["kernel"]["core_size"] = out.reduced.Z.size();
    j["kernel"]["t"] = out.params.t;
    j["kernel"]["trivial_negative"] = out.trivial_negative;
    j["kernel"]["exact_fallback"] = out.exact_fallback;
    if (!config.out_path.empty())
      write_text(config.out_path + ".kernel.json",
                 kernel_output_to_json(out));
    if (!out.trivial_negative && !out.exact_fallback &&
        config.pipeline != "ds-bikernel") {
      // class statistics over the core in the original graph
      VertexSet core_orig;
      for (int z : out.reduced.Z) core_orig.insert(out.kept[z]);
      if (config.pipeline == "rds-nowhere-dense")
        j["kernel"]["class_count"] =
            profile_classes(g, core_orig, config.r).class_count();
      else
        j["kernel"]["class_count"] =
            core_partition(g, core_orig).class_count();
    }

    if (config.verify && config.pipeline != "ds-bikernel") {
      auto v =
          verify_kernel(g, original, out, ratio_bound, rcds, config.caps);
      j["verify"]["opt_original"] = v.opt_original;
      j["verify"]["opt_reduced"] = v.opt_reduced;
      j["verify"]["lifted_value"] = v.lifted_value;
      j["verify"]["realized_ratio"] = v.realized_ratio;
      j["verify"]["ok"] = v.ok;
      if (!v.ok) {
        outcome.exit_code = kExitVerificationFailed;
        outcome.error = "kernel guarantee verification failed";
      }
    } else if (config.verify) {
      // bikernel: domination equivalence at the budget
      auto before = exact_min_dominator(
          {g, VertexSet::full(n), 1, config.k, false, config.caps});
      bool after_feasible = false;
      if (!out.trivial_negative)
        after_feasible = exact_min_dominator({out.reduced.graph,
                                              out.reduced.Z, 1, config.k,
                                              false, config.caps})
                             .feasible;
      j["verify"]["ds_le_k_before"] = before.feasible;
      j["verify"]["ds_le_k_after"] = after_feasible;
      if (before.feasible != after_feasible) {
        outcome.exit_code = kExitVerificationFailed;
        outcome.error = "bikernel equivalence failed";
      }
    }
  } catch (const ResourceError& e) {
    outcome.exit_code = kExitResourceCap;
    outcome.error = e.what();
    j["error"] = e.what();
  } catch (const InputError& e) {
    outcome.exit_code = kExitInvalidInput;
    outcome.error = e.what();
    j["error"] = e.what();
  }

  outcome.report_json = j.dump(2) + "\n";
  if (!config.out_path.empty() && outcome.exit_code == kExitOk)
    write_text(config.out_path, outcome.report_json);
  return outcome;
}

std::string sweep(const RunConfig& base, const SweepGrid& grid) {
  std::vector<std::string> rows;
  for (int k : grid.k)
    for (int r : grid.r)
      for (int d : grid.d)
        for (double eps : grid.eps)
          for (double alpha : grid.alpha) {
            RunConfig config = base;
            config.k = k;
            config.r = r;
            config.d = d;
            config.eps = eps;
            config.alpha = alpha;
            config.out_path.clear();
            std::ostringstream key;
            key << config.pipeline << ',' << config.generator << ','
                << config.input_file << ',' << config.seed << ',' << k << ','
                << r << ',' << d << ',' << eps << ',' << alpha;
            auto outcome = run(config);
            std::ostringstream row;
            row << key.str() << ',';
            if (outcome.exit_code == kExitOk ||
                outcome.exit_code == kExitVerificationFailed) {
              auto j = nlohmann::json::parse(outcome.report_json);
              auto field = [&](const char* a, const char* b) -> std::string {
                if (!j.contains(a) || !j[a].contains(b)) return "";
                return j[a][b].dump();
              };
              row << field("input", "n") << ',' << field("input", "m") << ','
                  << field("kernel", "core_size") << ','
                  << field("kernel", "class_count") << ','
                  << field("kernel", "reduced_n") << ','
                  << field("kernel", "reduced_m") << ','
                  << field("kernel", "trivial_negative") << ','
                  << field("kernel", "exact_fallback") << ','
                  << field("verify", "opt_original") << ','
                  << field("verify", "opt_reduced") << ','
                  << field("verify", "lifted_value") << ','
                  << field("verify", "realized_ratio") << ',';
              row << (outcome.exit_code == kExitOk ? "" : outcome.error);
            } else {
              row << ",,,,,,,,,,,," << outcome.error;
            }
            rows.push_back(row.str());
          }
  std::sort(rows.begin(), rows.end());
  std::string csv =
      "pipeline,gen,in,seed,k,r,d,eps,alpha,n,m,core_size,class_count,"
      "reduced_n,reduced_m,trivial_negative,exact_fallback,opt_original,"
      "opt_reduced,lifted_value,realized_ratio,error\n";
  for (const auto& row : rows) csv += row + "\n";
  return csv;
}

}  // namespace cdskernel
