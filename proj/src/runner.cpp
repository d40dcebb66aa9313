#include "nfsim/runner.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "nfsim/best_route.hpp"
#include "nfsim/consumer.hpp"
#include "nfsim/idqf.hpp"
#include "nfsim/network.hpp"

namespace nfsim {

AgentPool make_agent_pool(const ScenarioConfig& cfg) {
  AgentPool pool;
  int k = cfg.idqf.top_k_faces;
  int input_dim = cfg.idqf.features.dimension(k);
  for (std::size_t i = 0; i < cfg.agents.size(); ++i) {
    const auto& node = cfg.agents[i];
    // Substream keyed by node id so agent draw sequences are unaffected
    // by which other agents exist.
    std::uint64_t h = 1469598103934665603ULL;  // FNV-1a, platform independent
    for (char ch : node) h = (h ^ static_cast<unsigned char>(ch)) * 1099511628211ULL;
    Rng rng(cfg.seed, 0x41000000ULL + h);
    pool.emplace(node, AgentState(node, input_dim, 32, k, cfg.hyper, cfg.replay_capacity, rng));
  }
  return pool;
}

EpisodeOutcome run_episode(const ScenarioConfig& cfg, const TopologySpec& topo,
                           AgentPool* agents, RunMode mode, std::uint64_t env_seed) {
  Engine engine;

  NetworkConfig netcfg;
  netcfg.cs_capacity = cfg.cs_capacity;
  netcfg.pit_lifetime = static_cast<SimTime>(cfg.pit_lifetime_s * kSecond);
  netcfg.interest_lifetime = netcfg.pit_lifetime;
  netcfg.top_k_faces = cfg.idqf.top_k_faces;
  if (mode != RunMode::BestRoute) {
    for (const auto& a : cfg.agents) netcfg.agent_nodes.insert(a);
  }

  bool greedy = mode == RunMode::Greedy;
  std::map<std::string, IdqfStrategy*> agent_strategies;
  Network::StrategyFactory factory = [&](const std::string& node_id,
                                         Engine& eng) -> std::unique_ptr<Strategy> {
    if (mode != RunMode::BestRoute && agents != nullptr && agents->count(node_id) > 0) {
      auto s = std::make_unique<IdqfStrategy>(cfg.idqf, agents->at(node_id), eng, greedy);
      agent_strategies[node_id] = s.get();
      return s;
    }
    return std::make_unique<BestRouteStrategy>();
  };

  Network net(engine, topo, netcfg, factory);
  net.data_payload_bits = cfg.data_payload_bits;

  for (auto& [node_id, strat] : agent_strategies) {
    strat->begin_episode(net.node_by_id(node_id), 0);
  }

  std::vector<std::unique_ptr<ConsumerApp>> consumers;
  std::map<int, ConsumerApp*> consumer_by_node;
  for (const auto& c : topo.consumers) {
    int idx = net.node_by_id(c.node).id;
    auto app = std::make_unique<ConsumerApp>(
        engine, net, idx, c.prefix, cfg.rate_pps,
        static_cast<SimTime>(cfg.retx_timeout_s * kSecond), cfg.interest_size_bits,
        Rng(env_seed, 0x0C000000ULL + static_cast<std::uint64_t>(idx)));
    consumer_by_node[idx] = app.get();
    consumers.push_back(std::move(app));
  }
  net.on_app_data = [&](int node, const Data& data, SimTime now) {
    auto it = consumer_by_node.find(node);
    if (it != consumer_by_node.end()) it->second->handle_data(data, now);
  };
  for (auto& c : consumers) c->start();

  SimTime horizon = static_cast<SimTime>(cfg.duration_s * kSecond);
  engine.run_until(horizon);

  for (auto& [node_id, strat] : agent_strategies) {
    strat->finish_episode(net.node_by_id(node_id), horizon);
  }

  EpisodeOutcome out;
  for (auto& c : consumers) {
    const auto& bits = c->rx_bits();
    out.rx_bits.insert(out.rx_bits.end(), bits.begin(), bits.end());
    const auto& d = c->delay_samples();
    out.delays.insert(out.delays.end(), d.begin(), d.end());
    out.sent_new += c->sent_new();
    out.consumer_retx += c->retransmissions();
    out.received += c->received();
  }
  for (int l = 0; l < net.link_count(); ++l) {
    out.link_drops += net.link_dir(l, 0).dropped() + net.link_dir(l, 1).dropped();
  }
  for (auto& [node_id, strat] : agent_strategies) {
    out.agent_reward[node_id] = strat->episode_reward();
    out.agent_rtts[node_id] = strat->rtt_log_seconds();
    out.agent_face_counts[node_id] = strat->face_forwarded_total();
  }
  return out;
}

TrainingResult run_training(const ScenarioConfig& cfg, const TopologySpec& topo,
                            AgentPool& agents) {
  TrainingResult result;
  for (const auto& [node, state] : agents) result.rewards[node] = {};
  for (int e = 0; e < cfg.episodes; ++e) {
    std::uint64_t env_seed = cfg.seed + 7919ULL * static_cast<std::uint64_t>(e);
    EpisodeOutcome out = run_episode(cfg, topo, &agents, RunMode::Train, env_seed);
    for (const auto& [node, reward] : out.agent_reward) result.rewards[node].push_back(reward);
  }
  return result;
}

namespace {

// Buckets raw (time, value) events into per-second series and fills the
// summary statistics, excluding the warmup prefix from totals.
void summarize_episode(const ScenarioConfig& cfg, const EpisodeOutcome& out,
                       MetricsReport& report) {
  int seconds = static_cast<int>(std::ceil(cfg.duration_s));
  std::vector<double> bits_per_s(seconds, 0.0);
  std::vector<double> delay_sum(seconds, 0.0);
  std::vector<double> delay_cnt(seconds, 0.0);

  for (const auto& [at, bits] : out.rx_bits) {
    int s = std::min<int>(seconds - 1, static_cast<int>(at / kSecond));
    bits_per_s[s] += static_cast<double>(bits);
  }
  for (const auto& [at, d] : out.delays) {
    int s = std::min<int>(seconds - 1, static_cast<int>(at / kSecond));
    delay_sum[s] += to_ms(d);
    delay_cnt[s] += 1.0;
  }

  if (report.throughput_mbps.empty()) {
    report.throughput_mbps.assign(seconds, 0.0);
    report.delay_ms.assign(seconds, 0.0);
  }
  for (int s = 0; s < seconds; ++s) {
    report.throughput_mbps[s] += bits_per_s[s] / 1e6;
    report.delay_ms[s] += delay_cnt[s] > 0 ? delay_sum[s] / delay_cnt[s] : 0.0;
  }

  SimTime warmup = static_cast<SimTime>(cfg.warmup_s * kSecond);
  double steady_bits = 0.0;
  double steady_delay_sum = 0.0;
  std::uint64_t steady_received = 0;
  for (const auto& [at, bits] : out.rx_bits) {
    if (at >= warmup) steady_bits += static_cast<double>(bits);
  }
  for (const auto& [at, d] : out.delays) {
    if (at >= warmup) {
      steady_delay_sum += to_ms(d);
      ++steady_received;
    }
  }
  double steady_window = cfg.duration_s - cfg.warmup_s;
  if (steady_window > 0) {
    report.total_throughput_mbps += steady_bits / steady_window / 1e6;
  }
  if (steady_received > 0) {
    report.avg_app_delay_ms += steady_delay_sum / static_cast<double>(steady_received);
  }

  report.interests_sent += out.sent_new;
  report.consumer_retransmissions += out.consumer_retx;
  report.data_received += out.received;
  report.link_drops += out.link_drops;

  for (const auto& [node, rtts] : out.agent_rtts) {
    auto& dst = report.agent_rtt_seconds[node];
    dst.insert(dst.end(), rtts.begin(), rtts.end());
  }
  for (const auto& [node, counts] : out.agent_face_counts) {
    auto& share = report.agent_face_share[node];
    if (share.size() < counts.size()) share.resize(counts.size(), 0.0);
    for (std::size_t i = 0; i < counts.size(); ++i) share[i] += static_cast<double>(counts[i]);
  }
}

}  // namespace

MetricsReport run_evaluation(const ScenarioConfig& cfg, const TopologySpec& topo,
                             const AgentPool* agents) {
  MetricsReport report;
  int reps = cfg.replicates;
  for (int r = 0; r < reps; ++r) {
    std::uint64_t env_seed = cfg.seed + static_cast<std::uint64_t>(r);
    if (agents != nullptr) {
      AgentPool copy = *agents;  // evaluation must not disturb training state
      EpisodeOutcome out = run_episode(cfg, topo, &copy, RunMode::Greedy, env_seed);
      summarize_episode(cfg, out, report);
    } else {
      EpisodeOutcome out = run_episode(cfg, topo, nullptr, RunMode::BestRoute, env_seed);
      summarize_episode(cfg, out, report);
    }
  }

  // replicate means
  double inv = 1.0 / static_cast<double>(reps);
  for (auto& v : report.throughput_mbps) v *= inv;
  for (auto& v : report.delay_ms) v *= inv;
  report.total_throughput_mbps *= inv;
  report.avg_app_delay_ms *= inv;
  for (auto& [node, share] : report.agent_face_share) {
    double total = 0.0;
    for (double c : share) total += c;
    if (total > 0)
      for (double& c : share) c /= total;
  }

  int warmup_idx = static_cast<int>(cfg.warmup_s);
  std::vector<double> steady_tp, steady_delay;
  for (std::size_t s = static_cast<std::size_t>(std::max(warmup_idx, 0));
       s < report.throughput_mbps.size(); ++s) {
    steady_tp.push_back(report.throughput_mbps[s]);
    steady_delay.push_back(report.delay_ms[s]);
  }
  report.throughput_mean = mean_of(steady_tp);
  report.throughput_stddev = stddev_of(steady_tp);
  report.delay_mean_ms = mean_of(steady_delay);
  report.delay_stddev_ms = stddev_of(steady_delay);
  return report;
}

}  // namespace nfsim
