#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "nfsim/engine.hpp"
#include "nfsim/network.hpp"
#include "nfsim/rng.hpp"

namespace nfsim {

// Fixed-rate consumer application. Issues one interest per tick with a
// fresh sequence number, retransmits unanswered names every retx_timeout
// with a fresh nonce, and measures application delay from the FIRST
// issuance of a name.
class ConsumerApp {
 public:
  ConsumerApp(Engine& engine, Network& net, int node_index, std::string prefix,
              std::int64_t rate_pps, SimTime retx_timeout, std::int64_t interest_bits, Rng rng)
      : engine_(engine),
        net_(net),
        node_(node_index),
        prefix_(std::move(prefix)),
        rate_pps_(rate_pps),
        retx_timeout_(retx_timeout),
        interest_bits_(interest_bits),
        rng_(rng) {}

  void start() { schedule_tick(0); }

  void handle_data(const Data& data, SimTime now) {
    auto it = outstanding_.find(data.name);
    if (it == outstanding_.end()) return;  // duplicate delivery
    delays_.push_back({now, now - it->second.first_issued});
    rx_bits_.push_back({now, data.payload_bits});
    ++received_;
    outstanding_.erase(it);
  }

  struct Outstanding {
    SimTime first_issued;
    SimTime last_tx;
    int tx_count;
  };

  std::uint64_t sent_new() const { return sent_new_; }
  std::uint64_t retransmissions() const { return retx_count_; }
  std::uint64_t received() const { return received_; }
  const std::vector<std::pair<SimTime, SimTime>>& delay_samples() const { return delays_; }
  const std::vector<std::pair<SimTime, std::int64_t>>& rx_bits() const { return rx_bits_; }
  int node() const { return node_; }
  std::size_t outstanding_count() const { return outstanding_.size(); }

 private:
  void schedule_tick(std::uint64_t i) {
    SimTime at = static_cast<SimTime>(i) * kSecond / rate_pps_;
    engine_.schedule(at, [this, i] { tick(i); });
  }

  void tick(std::uint64_t i) {
    Name name{prefix_, next_seq_++};
    SimTime now = engine_.now();
    outstanding_[name] = {now, now, 1};
    ++sent_new_;
    send(name, now);
    arm_retx(name);
    schedule_tick(i + 1);
  }

  void send(const Name& name, SimTime first_issued) {
    Interest interest{name, rng_.next_u64(), first_issued, interest_bits_};
    net_.send_from_app(node_, interest);
  }

  void arm_retx(const Name& name) {
    auto it = outstanding_.find(name);
    if (it == outstanding_.end()) return;
    engine_.schedule(it->second.last_tx + retx_timeout_, [this, name] { retx_check(name); });
  }

  void retx_check(const Name& name) {
    auto it = outstanding_.find(name);
    if (it == outstanding_.end()) return;  // satisfied meanwhile
    SimTime now = engine_.now();
    if (now - it->second.last_tx >= retx_timeout_) {
      it->second.last_tx = now;
      ++it->second.tx_count;
      ++retx_count_;
      send(name, it->second.first_issued);
    }
    arm_retx(name);
  }

  Engine& engine_;
  Network& net_;
  int node_;
  std::string prefix_;
  std::int64_t rate_pps_;
  SimTime retx_timeout_;
  std::int64_t interest_bits_;
  Rng rng_;

  std::uint64_t next_seq_ = 0;
  std::unordered_map<Name, Outstanding, NameHash> outstanding_;
  std::uint64_t sent_new_ = 0;
  std::uint64_t retx_count_ = 0;
  std::uint64_t received_ = 0;
  std::vector<std::pair<SimTime, SimTime>> delays_;   // (arrival, app delay)
  std::vector<std::pair<SimTime, std::int64_t>> rx_bits_;  // (arrival, bits)
};

}  // namespace nfsim
