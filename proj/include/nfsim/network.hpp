#pragma once

#include <functional>
#include <memory>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "nfsim/engine.hpp"
#include "nfsim/link.hpp"
#include "nfsim/node.hpp"
#include "nfsim/packet.hpp"
#include "nfsim/strategy.hpp"
#include "nfsim/topology.hpp"

namespace nfsim {

enum class InterestOutcome { Forwarded, Aggregated, SatisfiedFromCache, Dropped };

struct InterestResult {
  InterestOutcome outcome;
  int face = -1;  // set when Forwarded
};

struct NetworkConfig {
  std::size_t cs_capacity = 0;
  SimTime pit_lifetime = kDefaultPitLifetime;
  SimTime interest_lifetime = kDefaultPitLifetime;
  std::set<std::string> agent_nodes;  // FIB truncated to top_k downstream here
  int top_k_faces = 2;
};

// The simulated network: nodes, links, and the Interest/Data pipeline.
// Producer applications are handled internally (an interest reaching a
// producer's app face is answered with Data immediately); consumer
// applications inject interests via send_from_app and receive Data
// through the on_app_data callback.
class Network {
 public:
  using StrategyFactory =
      std::function<std::unique_ptr<Strategy>(const std::string& node_id, Engine&)>;

  Network(Engine& engine, const TopologySpec& topo, const NetworkConfig& cfg,
          const StrategyFactory& strategies);

  Node& node(int index) { return *nodes_[index]; }
  Node& node_by_id(const std::string& topo_id);
  int node_count() const { return static_cast<int>(nodes_.size()); }

  LinkDir& link_dir(int link, int dir) { return links_[link].dir[dir]; }
  int link_count() const { return static_cast<int>(links_.size()); }

  // Pipeline entry points (also called by link-arrival events).
  InterestResult process_interest(int node, int in_face, const Interest& interest, SimTime now);
  // Count of downstream sends, or nullopt for unsolicited data.
  std::optional<int> process_data(int node, int in_face, const Data& data, SimTime now);

  void send_from_app(int node, const Interest& interest);

  // Called with (consumer node index, data, now) when Data reaches an app face.
  std::function<void(int, const Data&, SimTime)> on_app_data;

  SimTime data_payload_bits = kDefaultDataBits;

 private:
  void forward_on_face(int node, const Face& face, const Interest& interest, SimTime now);
  void send_data_on_face(int node, const Face& face, const Data& data, SimTime now);
  void schedule_pit_expiry(int node, const Name& name, SimTime at);
  void answer_as_producer(int node, const Interest& interest, SimTime now);

  struct LinkPair {
    LinkDir dir[2];  // dir[0]: a -> b
  };

  Engine& engine_;
  NetworkConfig cfg_;
  std::vector<std::unique_ptr<Node>> nodes_;
  std::vector<LinkPair> links_;
  std::unordered_map<std::string, int> index_by_id_;
  std::unordered_map<int, std::string> producer_prefix_;  // node index -> prefix
};

}  // namespace nfsim
