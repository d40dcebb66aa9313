#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "nfsim/content_store.hpp"
#include "nfsim/fib.hpp"
#include "nfsim/pit.hpp"

namespace nfsim {

class Strategy;

struct Face {
  int id = -1;         // node-local, stable for the run
  int peer_node = -1;  // -1 for app faces
  int link = -1;       // index into the network link table
  int link_dir = 0;    // 0: this node is endpoint a, 1: endpoint b
  int peer_face = -1;  // face id at the peer node
  bool app = false;
};

struct NodeCounters {
  std::uint64_t interests_in = 0;
  std::uint64_t forwarded = 0;
  std::uint64_t aggregated = 0;
  std::uint64_t cache_hits = 0;
  std::uint64_t dropped = 0;   // strategy yielded no face
  std::uint64_t no_route = 0;  // no FIB entry for the prefix
  std::uint64_t data_in = 0;
  std::uint64_t downstream_sends = 0;
  std::uint64_t unsolicited = 0;
  std::uint64_t pit_expired = 0;
};

struct Node {
  int id = -1;
  std::string label;
  std::vector<Face> faces;
  int app_face = -1;  // -1 when the node hosts no application
  Pit pit;
  Fib fib;
  ContentStore cs{0};
  std::unique_ptr<Strategy> strategy;
  NodeCounters counters;
  SimTime pit_lifetime = kDefaultPitLifetime;
  SimTime interest_lifetime = kDefaultPitLifetime;
};

}  // namespace nfsim
