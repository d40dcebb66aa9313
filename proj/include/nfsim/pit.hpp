#pragma once

#include <unordered_map>
#include <vector>

#include "nfsim/name.hpp"
#include "nfsim/sim_time.hpp"

namespace nfsim {

constexpr SimTime kDefaultPitLifetime = 2 * kSecond;

struct InRecord {
  int face = -1;
  SimTime arrival = 0;
};

struct OutRecord {
  int face = -1;
  SimTime sent_at = 0;
  SimTime expires_at = 0;
  bool was_new = true;
};

struct PitEntry {
  Name name;
  std::vector<InRecord> in_records;    // at most one per face
  std::vector<OutRecord> out_records;  // at most one per face
  SimTime entry_expires_at = 0;

  void add_in_record(int face, SimTime now) {
    for (auto& r : in_records) {
      if (r.face == face) {
        r.arrival = now;
        return;
      }
    }
    in_records.push_back({face, now});
  }

  void add_out_record(int face, SimTime now, SimTime expires_at, bool was_new) {
    for (auto& r : out_records) {
      if (r.face == face) {
        r.sent_at = now;
        r.expires_at = expires_at;
        return;
      }
    }
    out_records.push_back({face, now, expires_at, was_new});
  }

  const OutRecord* out_record_on(int face) const {
    for (const auto& r : out_records)
      if (r.face == face) return &r;
    return nullptr;
  }

  bool has_unexpired_out_record(SimTime now) const {
    for (const auto& r : out_records)
      if (r.expires_at > now) return true;
    return false;
  }

  bool has_in_record_other_than(int face) const {
    for (const auto& r : in_records)
      if (r.face != face) return true;
    return false;
  }
};

// True iff the entry exists and holds at least one unexpired out-record.
// An absent entry means the interest counts as new at this router.
inline bool is_retransmission(const PitEntry* entry, SimTime now) {
  return entry != nullptr && entry->has_unexpired_out_record(now);
}

class Pit {
 public:
  PitEntry* find(const Name& name) {
    auto it = entries_.find(name);
    return it == entries_.end() ? nullptr : &it->second;
  }

  PitEntry& create_or_refresh(const Name& name, SimTime now, SimTime lifetime) {
    auto& e = entries_[name];
    e.name = name;
    e.entry_expires_at = now + lifetime;
    return e;
  }

  bool erase(const Name& name) { return entries_.erase(name) > 0; }

  // Removes the named entry if its lifetime has passed.
  bool expire_one(const Name& name, SimTime now) {
    auto it = entries_.find(name);
    if (it == entries_.end() || it->second.entry_expires_at > now) return false;
    entries_.erase(it);
    return true;
  }

  // Removes every entry whose lifetime has passed.
  std::size_t expire(SimTime now) {
    std::size_t removed = 0;
    for (auto it = entries_.begin(); it != entries_.end();) {
      if (it->second.entry_expires_at <= now) {
        it = entries_.erase(it);
        ++removed;
      } else {
        ++it;
      }
    }
    return removed;
  }

  std::size_t size() const { return entries_.size(); }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (const auto& [name, e] : entries_) fn(e);
  }

 private:
  std::unordered_map<Name, PitEntry, NameHash> entries_;
};

}  // namespace nfsim
