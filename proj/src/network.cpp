#include "nfsim/network.hpp"

#include <algorithm>

namespace nfsim {

Network::Network(Engine& engine, const TopologySpec& topo, const NetworkConfig& cfg,
                 const StrategyFactory& strategies)
    : engine_(engine), cfg_(cfg) {
  topo.validate();
  nodes_.reserve(topo.nodes.size());
  for (std::size_t i = 0; i < topo.nodes.size(); ++i) {
    auto n = std::make_unique<Node>();
    n->id = static_cast<int>(i);
    n->label = topo.nodes[i].id;
    n->cs = ContentStore(cfg.cs_capacity);
    n->pit_lifetime = cfg.pit_lifetime;
    n->interest_lifetime = cfg.interest_lifetime;
    index_by_id_[topo.nodes[i].id] = n->id;
    nodes_.push_back(std::move(n));
  }

  links_.reserve(topo.links.size());
  for (const auto& l : topo.links) {
    LinkSpec spec{from_us(l.delay_us), l.bw_bps, l.queue};
    spec.validate();
    LinkPair pair{{LinkDir(spec), LinkDir(spec)}};
    int link_idx = static_cast<int>(links_.size());
    links_.push_back(std::move(pair));

    Node& na = *nodes_[index_by_id_.at(l.a)];
    Node& nb = *nodes_[index_by_id_.at(l.b)];
    int fa = static_cast<int>(na.faces.size());
    int fb = static_cast<int>(nb.faces.size());
    na.faces.push_back(Face{fa, nb.id, link_idx, 0, fb, false});
    nb.faces.push_back(Face{fb, na.id, link_idx, 1, fa, false});
  }

  auto add_app_face = [](Node& n) {
    if (n.app_face >= 0) return;
    int id = static_cast<int>(n.faces.size());
    n.faces.push_back(Face{id, -1, -1, 0, -1, true});
    n.app_face = id;
  };
  for (const auto& c : topo.consumers) add_app_face(*nodes_[index_by_id_.at(c.node)]);
  for (const auto& p : topo.producers) {
    Node& n = *nodes_[index_by_id_.at(p.node)];
    add_app_face(n);
    producer_prefix_[n.id] = p.prefix;
  }

  // FIB population: shortest delay paths toward each producer.
  for (const auto& p : topo.producers) {
    auto dist = shortest_distances(topo, p.node);
    for (auto& nptr : nodes_) {
      Node& v = *nptr;
      FibEntry& entry = v.fib.entry(p.prefix);
      if (v.label == p.node) {
        entry.next_hops.push_back(NextHop{v.app_face, 0});
        continue;
      }
      int vi = topo.node_index(v.label);
      bool agent = cfg.agent_nodes.count(v.label) > 0;
      for (const auto& f : v.faces) {
        if (f.app) continue;
        int peer_topo = topo.node_index(nodes_[f.peer_node]->label);
        if (dist[peer_topo] < 0) continue;
        if (agent && dist[peer_topo] >= dist[vi]) continue;  // downstream only
        SimTime link_delay = links_[f.link].dir[0].spec().delay;
        entry.next_hops.push_back(NextHop{f.id, dist[peer_topo] + link_delay});
      }
      entry.sort_hops();
      if (agent && static_cast<int>(entry.next_hops.size()) > cfg.top_k_faces) {
        entry.next_hops.resize(cfg.top_k_faces);
      }
      if (entry.next_hops.empty()) {
        throw TopologyError("no route from " + v.label + " toward producer prefix " + p.prefix);
      }
    }
  }

  for (auto& nptr : nodes_) {
    nptr->strategy = strategies(nptr->label, engine_);
  }
}

Node& Network::node_by_id(const std::string& topo_id) {
  return *nodes_[index_by_id_.at(topo_id)];
}

void Network::schedule_pit_expiry(int node, const Name& name, SimTime at) {
  engine_.schedule(at, [this, node, name] {
    Node& n = *nodes_[node];
    if (n.pit.expire_one(name, engine_.now())) {
      ++n.counters.pit_expired;
      n.strategy->on_pit_erased(name, engine_.now());
    }
  });
}

void Network::answer_as_producer(int node, const Interest& interest, SimTime now) {
  Data data{interest.name, data_payload_bits};
  engine_.schedule(now, [this, node, data] {
    process_data(node, nodes_[node]->app_face, data, engine_.now());
  });
}

void Network::forward_on_face(int node, const Face& face, const Interest& interest, SimTime now) {
  if (face.app) {
    answer_as_producer(node, interest, now);
    return;
  }
  LinkDir& dir = links_[face.link].dir[face.link_dir];
  auto arrival = dir.transmit(interest.size_bits, now);
  if (!arrival) return;  // queue drop, a modeled outcome
  int peer = face.peer_node;
  int peer_face = face.peer_face;
  engine_.schedule(*arrival, [this, peer, peer_face, interest] {
    process_interest(peer, peer_face, interest, engine_.now());
  });
}

void Network::send_data_on_face(int node, const Face& face, const Data& data, SimTime now) {
  if (face.app) {
    if (on_app_data) on_app_data(node, data, now);
    return;
  }
  LinkDir& dir = links_[face.link].dir[face.link_dir];
  auto arrival = dir.transmit(data.payload_bits, now);
  if (!arrival) return;
  int peer = face.peer_node;
  int peer_face = face.peer_face;
  engine_.schedule(*arrival, [this, peer, peer_face, data] {
    process_data(peer, peer_face, data, engine_.now());
  });
}

InterestResult Network::process_interest(int node, int in_face, const Interest& interest,
                                         SimTime now) {
  Node& n = *nodes_[node];
  ++n.counters.interests_in;

  // (1) Content Store
  if (const Data* cached = n.cs.find(interest.name)) {
    ++n.counters.cache_hits;
    send_data_on_face(node, n.faces[in_face], *cached, now);
    return {InterestOutcome::SatisfiedFromCache};
  }

  // (2) PIT: pending request from another face -> aggregate
  PitEntry* entry = n.pit.find(interest.name);
  if (entry != nullptr && entry->has_in_record_other_than(in_face)) {
    entry->add_in_record(in_face, now);
    entry->entry_expires_at = now + n.pit_lifetime;
    schedule_pit_expiry(node, interest.name, entry->entry_expires_at);
    ++n.counters.aggregated;
    return {InterestOutcome::Aggregated};
  }

  // (3) classify, record, and consult the strategy
  bool is_retx = is_retransmission(entry, now);
  const FibEntry* fib = n.fib.lookup(interest.name.prefix);
  if (fib == nullptr) {
    ++n.counters.no_route;
    ++n.counters.dropped;
    return {InterestOutcome::Dropped};
  }

  PitEntry& live = n.pit.create_or_refresh(interest.name, now, n.pit_lifetime);
  live.add_in_record(in_face, now);
  schedule_pit_expiry(node, interest.name, live.entry_expires_at);

  auto face = n.strategy->choose_face(n, *fib, is_retx ? &live : (entry ? &live : nullptr),
                                      interest, is_retx, now);
  if (!face) {
    ++n.counters.dropped;
    return {InterestOutcome::Dropped};
  }

  live.add_out_record(*face, now, now + n.interest_lifetime, !is_retx);
  ++n.counters.forwarded;
  forward_on_face(node, n.faces[*face], interest, now);
  return {InterestOutcome::Forwarded, *face};
}

std::optional<int> Network::process_data(int node, int in_face, const Data& data, SimTime now) {
  Node& n = *nodes_[node];
  ++n.counters.data_in;

  PitEntry* entry = n.pit.find(data.name);
  if (entry == nullptr) {
    ++n.counters.unsolicited;
    return std::nullopt;
  }

  if (const OutRecord* rec = entry->out_record_on(in_face)) {
    n.strategy->on_data(n, data, *rec, now);
  }

  int sends = 0;
  for (const auto& in_rec : entry->in_records) {
    send_data_on_face(node, n.faces[in_rec.face], data, now);
    ++sends;
  }
  n.counters.downstream_sends += static_cast<std::uint64_t>(sends);

  n.pit.erase(data.name);
  n.strategy->on_pit_erased(data.name, now);
  n.cs.insert(data);
  return sends;
}

void Network::send_from_app(int node, const Interest& interest) {
  Node& n = *nodes_[node];
  if (n.app_face < 0) throw SimError("send_from_app: node has no app face");
  process_interest(node, n.app_face, interest, engine_.now());
}

}  // namespace nfsim
