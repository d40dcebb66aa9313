#include "nfsim/scenario.hpp"

#include <fstream>
#include <sstream>

namespace nfsim {

void ScenarioConfig::validate() const {
  if (rate_pps <= 0) throw ConfigError("rate_pps must be > 0");
  if (duration_s <= 0) throw ConfigError("duration_s must be > 0");
  if (episodes < 1) throw ConfigError("episodes must be >= 1");
  if (duration_s * episodes > 1e7) throw ConfigError("duration x episodes too large");
  if (retx_timeout_s <= 0) throw ConfigError("retx_timeout_s must be > 0");
  if (warmup_s < 0 || warmup_s >= duration_s) {
    // warmup may legitimately exceed short test episodes; only reject negatives
    if (warmup_s < 0) throw ConfigError("warmup_s must be >= 0");
  }
  if (replicates < 1) throw ConfigError("replicates must be >= 1");
  try {
    idqf.validate();
    hyper.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double to_double(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw ConfigError("bad numeric value for " + key + ": '" + v + "'");
  }
}

std::int64_t to_int(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    std::int64_t i = std::stoll(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return i;
  } catch (const std::exception&) {
    throw ConfigError("bad integer value for " + key + ": '" + v + "'");
  }
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw ConfigError("bad boolean value for " + key + ": '" + v + "'");
}

}  // namespace

ScenarioConfig parse_scenario(const std::string& text) {
  ScenarioConfig cfg;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    }
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));

    if (key == "topology") {
      cfg.topology_path = val;
    } else if (key == "rate_pps") {
      cfg.rate_pps = to_int(key, val);
    } else if (key == "data_bits") {
      cfg.data_payload_bits = to_int(key, val);
    } else if (key == "interest_bits") {
      cfg.interest_size_bits = to_int(key, val);
    } else if (key == "duration_s") {
      cfg.duration_s = to_double(key, val);
    } else if (key == "episodes") {
      cfg.episodes = static_cast<int>(to_int(key, val));
    } else if (key == "seed") {
      cfg.seed = static_cast<std::uint64_t>(to_int(key, val));
    } else if (key == "agents") {
      cfg.agents = split_list(val);
    } else if (key == "delta_t_ms") {
      cfg.idqf.delta_t = static_cast<SimTime>(to_double(key, val) * kMillisecond);
    } else if (key == "retx_mode") {
      if (val == "br") cfg.idqf.retx_mode = RetxMode::BrWay;
      else if (val == "agent") cfg.idqf.retx_mode = RetxMode::AgentWay;
      else throw ConfigError("retx_mode must be 'br' or 'agent', got '" + val + "'");
    } else if (key == "features") {
      FeatureConfig fc{false, false, RetxFeature::None};
      for (const auto& f : split_list(val)) {
        if (f == "avg_delay") fc.avg_delay = true;
        else if (f == "satisfaction") fc.satisfaction_ratio = true;
        else if (f == "retx_ratio") fc.retx = RetxFeature::Ratio;
        else if (f == "retx_diff") fc.retx = RetxFeature::Diff;
        else throw ConfigError("unknown feature: '" + f + "'");
      }
      if (fc.per_face_count() == 0) throw ConfigError("feature set must not be empty");
      cfg.idqf.features = fc;
    } else if (key == "reward") {
      if (val == "rw") cfg.idqf.reward = RewardKind::Rw;
      else if (val == "rw1") cfg.idqf.reward = RewardKind::Rw1;
      else throw ConfigError("reward must be 'rw' or 'rw1', got '" + val + "'");
    } else if (key == "top_k") {
      cfg.idqf.top_k_faces = static_cast<int>(to_int(key, val));
    } else if (key == "lr") {
      cfg.hyper.lr = to_double(key, val);
    } else if (key == "gamma") {
      cfg.hyper.gamma = to_double(key, val);
    } else if (key == "eps_start") {
      cfg.hyper.eps_start = to_double(key, val);
    } else if (key == "eps_min") {
      cfg.hyper.eps_min = to_double(key, val);
    } else if (key == "decay_rate") {
      cfg.hyper.decay_rate = to_double(key, val);
    } else if (key == "batch_size") {
      cfg.hyper.batch_size = static_cast<int>(to_int(key, val));
    } else if (key == "penalty_c_s") {
      cfg.hyper.penalty_c_seconds = to_double(key, val);
    } else if (key == "cm") {
      cfg.hyper.cm = to_double(key, val);
    } else if (key == "r_thrs") {
      cfg.hyper.r_thrs = to_int(key, val);
    } else if (key == "q_blend") {
      cfg.hyper.q_blend = to_double(key, val);
    } else if (key == "use_target_network") {
      cfg.hyper.use_target_network = to_bool(key, val);
    } else if (key == "target_sync_every") {
      cfg.hyper.target_sync_every = static_cast<int>(to_int(key, val));
    } else if (key == "replay_capacity") {
      cfg.replay_capacity = static_cast<std::size_t>(to_int(key, val));
    } else if (key == "retx_timeout_s") {
      cfg.retx_timeout_s = to_double(key, val);
    } else if (key == "cs_capacity") {
      cfg.cs_capacity = static_cast<std::size_t>(to_int(key, val));
    } else if (key == "warmup_s") {
      cfg.warmup_s = to_double(key, val);
    } else if (key == "replicates") {
      cfg.replicates = static_cast<int>(to_int(key, val));
    } else if (key == "pit_lifetime_s") {
      cfg.pit_lifetime_s = to_double(key, val);
    } else {
      throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  cfg.hyper.episodes = cfg.episodes;
  cfg.validate();
  return cfg;
}

ScenarioConfig load_scenario(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open scenario file: " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_scenario(ss.str());
}

}  // namespace nfsim
