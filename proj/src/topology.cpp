#include "nfsim/topology.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_map>

namespace nfsim {

int TopologySpec::node_index(const std::string& id) const {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].id == id) return static_cast<int>(i);
  }
  return -1;
}

void TopologySpec::validate() const {
  std::set<std::string> ids;
  for (const auto& n : nodes) {
    if (!ids.insert(n.id).second) throw TopologyError("duplicate node id: " + n.id);
  }
  std::set<std::pair<std::string, std::string>> pairs;
  for (const auto& l : links) {
    if (ids.count(l.a) == 0) throw TopologyError("link endpoint unknown: " + l.a);
    if (ids.count(l.b) == 0) throw TopologyError("link endpoint unknown: " + l.b);
    if (l.a == l.b) throw TopologyError("self-loop at " + l.a);
    auto key = std::minmax(l.a, l.b);
    if (!pairs.insert(key).second)
      throw TopologyError("duplicate link " + l.a + " - " + l.b);
    if (l.delay_us <= 0) throw TopologyError("non-positive delay on " + l.a + "-" + l.b);
    if (l.bw_bps <= 0) throw TopologyError("non-positive bandwidth on " + l.a + "-" + l.b);
    if (l.queue < 1) throw TopologyError("queue < 1 on " + l.a + "-" + l.b);
  }
  for (const auto& app : consumers) {
    if (ids.count(app.node) == 0) throw TopologyError("consumer on unknown node " + app.node);
  }
  for (const auto& app : producers) {
    if (ids.count(app.node) == 0) throw TopologyError("producer on unknown node " + app.node);
  }
  if (nodes.size() > 1) {
    // connectivity
    std::unordered_map<std::string, std::vector<std::string>> adj;
    for (const auto& l : links) {
      adj[l.a].push_back(l.b);
      adj[l.b].push_back(l.a);
    }
    std::set<std::string> seen{nodes.front().id};
    std::vector<std::string> stack{nodes.front().id};
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (const auto& u : adj[v]) {
        if (seen.insert(u).second) stack.push_back(u);
      }
    }
    if (seen.size() != nodes.size()) throw TopologyError("topology is not connected");
  }
}

namespace {

std::int64_t parse_kv_int(const std::string& tok, const std::string& key, int line_no) {
  auto pos = tok.find('=');
  if (pos == std::string::npos || tok.substr(0, pos) != key) {
    throw TopologyError("line " + std::to_string(line_no) + ": expected " + key + "=<int>, got '" +
                        tok + "'");
  }
  try {
    return std::stoll(tok.substr(pos + 1));
  } catch (const std::exception&) {
    throw TopologyError("line " + std::to_string(line_no) + ": bad integer in '" + tok + "'");
  }
}

}  // namespace

TopologySpec parse_topology(const std::string& text) {
  TopologySpec spec;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;
    if (kind == "node") {
      TopoNode n;
      if (!(ls >> n.id)) throw TopologyError("line " + std::to_string(line_no) + ": node needs id");
      ls >> n.label;
      if (n.label.empty()) n.label = n.id;
      spec.nodes.push_back(std::move(n));
    } else if (kind == "link") {
      TopoLink l;
      std::string d, b, q;
      if (!(ls >> l.a >> l.b >> d >> b)) {
        throw TopologyError("line " + std::to_string(line_no) +
                            ": link needs <a> <b> delay_us= bw_bps= [queue=]");
      }
      l.delay_us = parse_kv_int(d, "delay_us", line_no);
      l.bw_bps = parse_kv_int(b, "bw_bps", line_no);
      if (ls >> q) l.queue = static_cast<int>(parse_kv_int(q, "queue", line_no));
      spec.links.push_back(std::move(l));
    } else if (kind == "producer" || kind == "consumer") {
      TopoApp app;
      if (!(ls >> app.node >> app.prefix)) {
        throw TopologyError("line " + std::to_string(line_no) + ": " + kind +
                            " needs <node> <prefix>");
      }
      (kind == "producer" ? spec.producers : spec.consumers).push_back(std::move(app));
    } else {
      throw TopologyError("line " + std::to_string(line_no) + ": unknown directive '" + kind + "'");
    }
  }
  spec.validate();
  return spec;
}

TopologySpec load_topology(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw TopologyError("cannot open topology file: " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_topology(ss.str());
}

std::string serialize_topology(const TopologySpec& spec) {
  std::ostringstream out;
  for (const auto& n : spec.nodes) out << "node " << n.id << " " << n.label << "\n";
  for (const auto& l : spec.links) {
    out << "link " << l.a << " " << l.b << " delay_us=" << l.delay_us << " bw_bps=" << l.bw_bps
        << " queue=" << l.queue << "\n";
  }
  for (const auto& p : spec.producers) out << "producer " << p.node << " " << p.prefix << "\n";
  for (const auto& c : spec.consumers) out << "consumer " << c.node << " " << c.prefix << "\n";
  return out.str();
}

std::vector<SimTime> shortest_distances(const TopologySpec& spec, const std::string& target) {
  int n = static_cast<int>(spec.nodes.size());
  int t = spec.node_index(target);
  if (t < 0) throw TopologyError("unknown target node: " + target);

  std::vector<std::vector<std::pair<int, SimTime>>> adj(n);
  for (const auto& l : spec.links) {
    int a = spec.node_index(l.a);
    int b = spec.node_index(l.b);
    SimTime w = from_us(l.delay_us);
    adj[a].push_back({b, w});
    adj[b].push_back({a, w});
  }

  std::vector<SimTime> dist(n, -1);
  using Item = std::pair<SimTime, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  dist[t] = 0;
  pq.push({0, t});
  while (!pq.empty()) {
    auto [d, v] = pq.top();
    pq.pop();
    if (d != dist[v]) continue;
    for (auto [u, w] : adj[v]) {
      if (dist[u] < 0 || d + w < dist[u]) {
        dist[u] = d + w;
        pq.push({dist[u], u});
      }
    }
  }
  return dist;
}

std::vector<RankedHop> ranked_next_hops(const TopologySpec& spec, const std::string& node,
                                        const std::string& target) {
  auto dist = shortest_distances(spec, target);
  int v = spec.node_index(node);
  if (v < 0) throw TopologyError("unknown node: " + node);
  std::vector<std::pair<int, RankedHop>> hops;  // neighbor index for tiebreak
  for (const auto& l : spec.links) {
    int a = spec.node_index(l.a);
    int b = spec.node_index(l.b);
    int peer = a == v ? b : (b == v ? a : -1);
    if (peer < 0) continue;
    if (dist[peer] < 0) continue;
    hops.push_back({peer, RankedHop{spec.nodes[peer].id, dist[peer] + from_us(l.delay_us)}});
  }
  std::sort(hops.begin(), hops.end(), [](const auto& x, const auto& y) {
    if (x.second.cost != y.second.cost) return x.second.cost < y.second.cost;
    return x.first < y.first;
  });
  std::vector<RankedHop> out;
  out.reserve(hops.size());
  for (auto& [idx, h] : hops) out.push_back(std::move(h));
  return out;
}

TopologySpec build_grid(int rows, int cols, std::int64_t delay_us, std::int64_t bw_bps) {
  if (rows < 1 || cols < 1) throw TopologyError("grid dims must be >= 1");
  TopologySpec spec;
  auto id = [cols](int r, int c) { return "g" + std::to_string(r * cols + c); };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) spec.nodes.push_back({id(r, c), id(r, c)});
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) spec.links.push_back({id(r, c), id(r, c + 1), delay_us, bw_bps, 100});
      if (r + 1 < rows) spec.links.push_back({id(r, c), id(r + 1, c), delay_us, bw_bps, 100});
    }
  }
  spec.validate();
  return spec;
}

TopologySpec build_tree(int depth, int fanout, std::int64_t delay_us, std::int64_t bw_bps) {
  if (depth < 1 || fanout < 1) throw TopologyError("tree dims must be >= 1");
  TopologySpec spec;
  spec.nodes.push_back({"t0", "t0"});
  std::vector<int> frontier{0};
  int next = 1;
  for (int d = 0; d < depth; ++d) {
    std::vector<int> level;
    for (int parent : frontier) {
      for (int f = 0; f < fanout; ++f) {
        std::string cid = "t" + std::to_string(next);
        spec.nodes.push_back({cid, cid});
        spec.links.push_back({"t" + std::to_string(parent), cid, delay_us, bw_bps, 100});
        level.push_back(next);
        ++next;
      }
    }
    frontier = std::move(level);
  }
  spec.validate();
  return spec;
}

}  // namespace nfsim
