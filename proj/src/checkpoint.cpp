#include "nfsim/checkpoint.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace nfsim {

namespace {

constexpr const char* kMagic = "NFSIMCKPT 1";

const char* retx_name(RetxFeature f) {
  switch (f) {
    case RetxFeature::None: return "none";
    case RetxFeature::Ratio: return "ratio";
    case RetxFeature::Diff: return "diff";
  }
  return "none";
}

RetxFeature retx_from(const std::string& s) {
  if (s == "none") return RetxFeature::None;
  if (s == "ratio") return RetxFeature::Ratio;
  if (s == "diff") return RetxFeature::Diff;
  throw CheckpointError("bad retx feature in checkpoint: " + s);
}

}  // namespace

void save_checkpoints(const AgentPool& pool, const ScenarioConfig& cfg,
                      const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  for (const auto& [node, agent] : pool) {
    std::string path = out_dir + "/agent_" + node + ".ckpt";
    std::ofstream f(path, std::ios::binary);
    if (!f) throw CheckpointError("cannot write " + path);
    f << kMagic << "\n";
    f << "node " << node << "\n";
    f << "dims " << agent.net.input_dim() << " " << agent.net.hidden_dim() << " "
      << agent.net.output_dim() << "\n";
    const auto& fc = cfg.idqf.features;
    f << "features avg_delay=" << (fc.avg_delay ? 1 : 0)
      << " satisfaction=" << (fc.satisfaction_ratio ? 1 : 0) << " retx=" << retx_name(fc.retx)
      << "\n";
    char buf[512];
    std::snprintf(buf, sizeof(buf),
                  "hyper lr=%.17g gamma=%.17g eps_start=%.17g eps_min=%.17g decay=%.17g "
                  "batch=%d c=%.17g cm=%.17g r_thrs=%lld q_blend=%.17g",
                  agent.hyper.lr, agent.hyper.gamma, agent.hyper.eps_start, agent.hyper.eps_min,
                  agent.hyper.decay_rate, agent.hyper.batch_size, agent.hyper.penalty_c_seconds,
                  agent.hyper.cm, static_cast<long long>(agent.hyper.r_thrs),
                  agent.hyper.q_blend);
    f << buf << "\n";
    f << "steps " << agent.decision_steps << "\n";
    f << "params " << agent.net.param_count() << "\n";
    for (double p : agent.net.params()) {
      std::snprintf(buf, sizeof(buf), "%a", p);
      f << buf << "\n";
    }
  }
}

AgentPool load_checkpoints(const ScenarioConfig& cfg, const std::string& dir) {
  AgentPool pool = make_agent_pool(cfg);
  for (auto& [node, agent] : pool) {
    std::string path = dir + "/agent_" + node + ".ckpt";
    std::ifstream f(path);
    if (!f) throw CheckpointError("missing checkpoint: " + path);
    std::string line;
    if (!std::getline(f, line) || line != kMagic)
      throw CheckpointError(path + ": bad magic string");

    std::string tok;
    std::string node_in;
    f >> tok >> node_in;
    if (tok != "node" || node_in != node)
      throw CheckpointError(path + ": node mismatch (" + node_in + ")");

    int in = 0, hidden = 0, out = 0;
    f >> tok >> in >> hidden >> out;
    if (tok != "dims") throw CheckpointError(path + ": missing dims");
    if (in != agent.net.input_dim() || hidden != agent.net.hidden_dim() ||
        out != agent.net.output_dim()) {
      throw CheckpointError(path + ": checkpoint dims do not match scenario config");
    }

    std::string f_avg, f_sat, f_retx;
    f >> tok >> f_avg >> f_sat >> f_retx;
    if (tok != "features") throw CheckpointError(path + ": missing features");
    bool avg = f_avg == "avg_delay=1";
    bool sat = f_sat == "satisfaction=1";
    RetxFeature retx = retx_from(f_retx.substr(f_retx.find('=') + 1));
    const auto& fc = cfg.idqf.features;
    if (avg != fc.avg_delay || sat != fc.satisfaction_ratio || retx != fc.retx) {
      throw CheckpointError(path + ": feature flags do not match scenario config");
    }

    std::getline(f, line);  // rest of features line
    std::getline(f, line);  // hyper snapshot: informational
    f >> tok >> agent.decision_steps;
    if (tok != "steps") throw CheckpointError(path + ": missing steps");

    std::size_t count = 0;
    f >> tok >> count;
    if (tok != "params" || count != agent.net.param_count())
      throw CheckpointError(path + ": parameter count mismatch");
    for (std::size_t i = 0; i < count; ++i) {
      std::string hex;
      if (!(f >> hex)) throw CheckpointError(path + ": truncated parameters");
      agent.net.params()[i] = std::strtod(hex.c_str(), nullptr);
    }
    if (agent.target) *agent.target = agent.net;
  }
  return pool;
}

}  // namespace nfsim
