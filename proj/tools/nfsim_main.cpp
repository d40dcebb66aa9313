#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "nfsim/checkpoint.hpp"
#include "nfsim/csv_export.hpp"
#include "nfsim/runner.hpp"

namespace {

constexpr int kExitConfigError = 2;
constexpr int kExitDivergence = 3;

struct CommonOpts {
  std::string topology;
  std::string scenario;
  std::string out_dir = "out";
  std::int64_t seed = -1;
  int episodes = -1;
  std::int64_t rate = -1;
  std::string strategy;
  std::string retx_mode;
  std::int64_t replay_capacity = -1;
  double delta_t_ms = -1;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--topology", o.topology, "Topology file (overrides scenario)");
  cmd->add_option("--scenario", o.scenario, "Scenario config file");
  cmd->add_option("--out-dir", o.out_dir, "Output directory");
  cmd->add_option("--seed", o.seed, "Base random seed");
  cmd->add_option("--episodes", o.episodes, "Training episodes");
  cmd->add_option("--rate", o.rate, "Interest rate, packets/second");
  cmd->add_option("--strategy", o.strategy, "bestroute or idqf");
  cmd->add_option("--retx-mode", o.retx_mode, "br or agent");
  cmd->add_option("--replay-capacity", o.replay_capacity, "Replay buffer capacity (0 = none)");
  cmd->add_option("--delta-t-ms", o.delta_t_ms, "Decision epoch length, ms");
}

nfsim::ScenarioConfig resolve(const CommonOpts& o) {
  nfsim::ScenarioConfig cfg;
  if (!o.scenario.empty()) cfg = nfsim::load_scenario(o.scenario);
  if (!o.topology.empty()) cfg.topology_path = o.topology;
  if (cfg.topology_path.empty()) throw nfsim::ConfigError("no topology given");
  if (o.seed >= 0) cfg.seed = static_cast<std::uint64_t>(o.seed);
  if (o.episodes > 0) cfg.episodes = o.episodes;
  if (o.rate > 0) cfg.rate_pps = o.rate;
  if (!o.retx_mode.empty()) {
    if (o.retx_mode == "br") cfg.idqf.retx_mode = nfsim::RetxMode::BrWay;
    else if (o.retx_mode == "agent") cfg.idqf.retx_mode = nfsim::RetxMode::AgentWay;
    else throw nfsim::ConfigError("retx-mode must be br or agent");
  }
  if (o.replay_capacity >= 0) cfg.replay_capacity = static_cast<std::size_t>(o.replay_capacity);
  if (o.delta_t_ms > 0) {
    cfg.idqf.delta_t = static_cast<nfsim::SimTime>(o.delta_t_ms * nfsim::kMillisecond);
  }
  cfg.hyper.episodes = cfg.episodes;
  cfg.validate();
  return cfg;
}

int cmd_run(const CommonOpts& o) {
  auto cfg = resolve(o);
  auto topo = nfsim::load_topology(cfg.topology_path);
  bool idqf = o.strategy == "idqf";
  if (idqf && cfg.agents.empty()) throw nfsim::ConfigError("idqf run needs agents in scenario");
  nfsim::MetricsReport report;
  if (idqf) {
    auto pool = nfsim::make_agent_pool(cfg);
    auto training = nfsim::run_training(cfg, topo, pool);
    report = nfsim::run_evaluation(cfg, topo, &pool);
    report.agent_episode_rewards = training.rewards;
  } else {
    report = nfsim::run_evaluation(cfg, topo, nullptr);
  }
  nfsim::export_csv(report, o.out_dir);
  std::printf("throughput %.4f Mbps, avg app delay %.2f ms, received %llu, retx %llu\n",
              report.total_throughput_mbps, report.avg_app_delay_ms,
              static_cast<unsigned long long>(report.data_received),
              static_cast<unsigned long long>(report.consumer_retransmissions));
  return 0;
}

int cmd_train(const CommonOpts& o) {
  auto cfg = resolve(o);
  if (cfg.agents.empty()) throw nfsim::ConfigError("train needs agents in scenario");
  auto topo = nfsim::load_topology(cfg.topology_path);
  auto pool = nfsim::make_agent_pool(cfg);
  auto training = nfsim::run_training(cfg, topo, pool);
  nfsim::save_checkpoints(pool, cfg, o.out_dir);
  nfsim::MetricsReport report;
  report.agent_episode_rewards = training.rewards;
  nfsim::export_csv(report, o.out_dir);
  for (const auto& [node, rewards] : training.rewards) {
    std::printf("agent %s: %zu episodes, final cumulative reward %.3f\n", node.c_str(),
                rewards.size(), rewards.empty() ? 0.0 : rewards.back());
  }
  return 0;
}

int cmd_evaluate(const CommonOpts& o, const std::string& checkpoints) {
  auto cfg = resolve(o);
  auto topo = nfsim::load_topology(cfg.topology_path);
  auto pool = nfsim::load_checkpoints(cfg, checkpoints);
  auto report = nfsim::run_evaluation(cfg, topo, &pool);
  nfsim::export_csv(report, o.out_dir);
  std::printf("throughput %.4f Mbps, avg app delay %.2f ms\n", report.total_throughput_mbps,
              report.avg_app_delay_ms);
  return 0;
}

int cmd_compare(const CommonOpts& o) {
  auto cfg = resolve(o);
  if (cfg.agents.empty()) throw nfsim::ConfigError("compare needs agents in scenario");
  auto topo = nfsim::load_topology(cfg.topology_path);
  std::filesystem::create_directories(o.out_dir);
  std::string path = o.out_dir + "/compare.csv";
  std::ofstream out(path, std::ios::binary);
  if (!out) throw nfsim::ConfigError("cannot write " + path);
  out << "rate_pps,br_throughput_mbps,idqf_throughput_mbps,br_delay_ms,idqf_delay_ms\n";
  for (std::int64_t rate : {100, 150, 200, 250, 300}) {
    auto c = cfg;
    c.rate_pps = rate;
    auto br = nfsim::run_evaluation(c, topo, nullptr);
    auto pool = nfsim::make_agent_pool(c);
    nfsim::run_training(c, topo, pool);
    auto rl = nfsim::run_evaluation(c, topo, &pool);
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%lld,%.6f,%.6f,%.6f,%.6f\n", static_cast<long long>(rate),
                  br.total_throughput_mbps, rl.total_throughput_mbps, br.avg_app_delay_ms,
                  rl.avg_app_delay_ms);
    out << buf;
    std::printf("rate %lld: BR %.4f Mbps / %.1f ms, IDQF %.4f Mbps / %.1f ms\n",
                static_cast<long long>(rate), br.total_throughput_mbps, br.avg_app_delay_ms,
                rl.total_throughput_mbps, rl.avg_app_delay_ms);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deterministic NDN forwarding simulator with DQN strategies"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string checkpoints;
  auto* run = app.add_subcommand("run", "Run a single scenario and export CSVs");
  add_common(run, o);
  auto* train = app.add_subcommand("train", "Train agents; write checkpoints and rewards.csv");
  add_common(train, o);
  auto* evaluate = app.add_subcommand("evaluate", "Evaluate trained checkpoints");
  add_common(evaluate, o);
  evaluate->add_option("--checkpoints", checkpoints, "Checkpoint directory")->required();
  auto* compare = app.add_subcommand("compare", "BR vs IDQF sweep over interest rates");
  add_common(compare, o);

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(o);
    if (train->parsed()) return cmd_train(o);
    if (evaluate->parsed()) return cmd_evaluate(o, checkpoints);
    if (compare->parsed()) return cmd_compare(o);
  } catch (const nfsim::DivergenceError& e) {
    std::cerr << "divergence: " << e.what() << "\n";
    return kExitDivergence;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
  return 0;
}
