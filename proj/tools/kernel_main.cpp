// Command-line driver for the lossy domination kernels: generate or load an
// instance, run a kernelization pipeline, optionally verify the guarantee
// against the exact oracles, and emit a machine-readable report.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cdskernel/errors.hpp"
#include "cdskernel/report.hpp"

namespace {

std::vector<int> parse_ints(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

std::vector<double> parse_doubles(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
  return out;
}

void add_common_options(CLI::App* cmd, cdskernel::RunConfig& config) {
  cmd->add_option("--gen", config.generator,
                  "generator spec, e.g. grid_apex:2,6 or star:40");
  cmd->add_option("--in", config.input_file, "instance file");
  cmd->add_option("--seed", config.seed, "random seed (env KERNEL_SEED)");
  cmd->add_option("--k", config.k, "solution budget");
  cmd->add_option("--r", config.r, "domination radius");
  cmd->add_option("--d", config.d, "biclique parameter");
  cmd->add_option("--eps", config.eps, "approximation slack (eps > 0)");
  cmd->add_option("--alpha", config.alpha, "approximation ratio (alpha > 1)");
  cmd->add_flag("--verify", config.verify,
                "oracle-verify the guarantee; failures exit 4");
  cmd->add_option("--out", config.out_path, "report output path");
  cmd->add_option("--cap-subset-n", config.caps.max_subset_n,
                  "oracle subset-enumeration vertex cap");
  cmd->add_option("--cap-groups", config.caps.max_groups,
                  "group Steiner group cap");
  cmd->add_option("--cap-steiner-n", config.caps.max_steiner_n,
                  "group Steiner vertex cap");
  cmd->add_option("--cap-dp-states", config.caps.max_dp_states,
                  "group Steiner DP state cap");
  cmd->add_option("--cap-enumeration", config.caps.max_enumeration,
                  "exhaustive enumeration budget");
}

void print_caps(const cdskernel::RunConfig& config) {
  std::cerr << "caps: subset-n=" << config.caps.max_subset_n
            << " groups=" << config.caps.max_groups
            << " steiner-n=" << config.caps.max_steiner_n
            << " dp-states=" << config.caps.max_dp_states
            << " enumeration=" << config.caps.max_enumeration << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lossy kernelization toolkit for connected domination"};
  app.require_subcommand(1);

  cdskernel::RunConfig config;
  if (const char* env_seed = std::getenv("KERNEL_SEED"))
    config.seed = std::strtoull(env_seed, nullptr, 10);

  const std::vector<std::string> pipelines = {
      "cds-framework", "kdd-psaks", "rds-nowhere-dense", "ds-bikernel",
      "reduce-setcover"};
  for (const auto& name : pipelines) {
    auto* cmd = app.add_subcommand(name, "run the " + name + " pipeline");
    add_common_options(cmd, config);
  }

  auto* sweep_cmd =
      app.add_subcommand("sweep", "run a pipeline over a parameter grid");
  add_common_options(sweep_cmd, config);
  std::string pipeline_opt, k_list, r_list, d_list, eps_list, alpha_list;
  sweep_cmd->add_option("--pipeline", pipeline_opt, "pipeline to sweep")
      ->required();
  sweep_cmd->add_option("--k-list", k_list, "comma list of budgets");
  sweep_cmd->add_option("--r-list", r_list, "comma list of radii");
  sweep_cmd->add_option("--d-list", d_list, "comma list of d values");
  sweep_cmd->add_option("--eps-list", eps_list, "comma list of eps values");
  sweep_cmd->add_option("--alpha-list", alpha_list,
                        "comma list of alpha values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : cdskernel::kExitInvalidInput;
  }

  try {
    print_caps(config);
    if (sweep_cmd->parsed()) {
      cdskernel::SweepGrid grid;
      config.pipeline = pipeline_opt;
      grid.k = k_list.empty() ? std::vector<int>{config.k} : parse_ints(k_list);
      grid.r = r_list.empty() ? std::vector<int>{config.r} : parse_ints(r_list);
      grid.d = d_list.empty() ? std::vector<int>{config.d} : parse_ints(d_list);
      grid.eps = eps_list.empty() ? std::vector<double>{config.eps}
                                  : parse_doubles(eps_list);
      grid.alpha = alpha_list.empty() ? std::vector<double>{config.alpha}
                                      : parse_doubles(alpha_list);
      std::string csv = cdskernel::sweep(config, grid);
      if (config.out_path.empty()) {
        std::cout << csv;
      } else {
        std::ofstream out(config.out_path);
        if (!out) {
          std::cerr << "cannot open " << config.out_path << "\n";
          return cdskernel::kExitInvalidInput;
        }
        out << csv;
      }
      return cdskernel::kExitOk;
    }

    for (const auto& name : pipelines)
      if (app.get_subcommand(name)->parsed()) config.pipeline = name;
    auto outcome = cdskernel::run(config);
    if (config.out_path.empty()) std::cout << outcome.report_json;
    if (!outcome.error.empty()) std::cerr << outcome.error << "\n";
    return outcome.exit_code;
  } catch (const cdskernel::ResourceError& e) {
    std::cerr << e.what() << "\n";
    return cdskernel::kExitResourceCap;
  } catch (const cdskernel::InputError& e) {
    std::cerr << e.what() << "\n";
    return cdskernel::kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return cdskernel::kExitInvalidInput;
  }
}
