#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "nfsim/sim_time.hpp"

namespace nfsim {

struct TopoNode {
  std::string id;
  std::string label;
};

struct TopoLink {
  std::string a;
  std::string b;
  std::int64_t delay_us = 0;
  std::int64_t bw_bps = 0;
  int queue = 100;
};

struct TopoApp {
  std::string node;
  std::string prefix;
};

struct TopologySpec {
  std::vector<TopoNode> nodes;
  std::vector<TopoLink> links;
  std::vector<TopoApp> consumers;
  std::vector<TopoApp> producers;

  int node_index(const std::string& id) const;
  void validate() const;  // connectivity, duplicates, positivity
};

class TopologyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Line-oriented text format:
//   node <id> <label>
//   link <a> <b> delay_us=<int> bw_bps=<int> queue=<int>
//   producer <node> <prefix>
//   consumer <node> <prefix>
// '#' starts a comment; sections may appear in any order.
TopologySpec parse_topology(const std::string& text);
TopologySpec load_topology(const std::string& path);
std::string serialize_topology(const TopologySpec& spec);

// Dijkstra by propagation delay from `target` to every node.
// Unreachable nodes get -1.
std::vector<SimTime> shortest_distances(const TopologySpec& spec, const std::string& target);

struct RankedHop {
  std::string neighbor;
  SimTime cost;  // neighbor's shortest distance to target + link delay
};

// Every neighbor of `node`, ranked ascending by cost with lower node
// index breaking ties. Mirrors the per-face FIB ranking.
std::vector<RankedHop> ranked_next_hops(const TopologySpec& spec, const std::string& node,
                                        const std::string& target);

TopologySpec build_grid(int rows, int cols, std::int64_t delay_us, std::int64_t bw_bps);
TopologySpec build_tree(int depth, int fanout, std::int64_t delay_us, std::int64_t bw_bps);

}  // namespace nfsim
