#include "nfsim/best_route.hpp"

namespace nfsim {

namespace {

// Downstream faces (those holding an in-record) are never valid upstream
// choices; forwarding there would loop the interest back to a requester.
bool downstream(const PitEntry* entry, int face) {
  if (entry == nullptr) return false;
  for (const auto& r : entry->in_records) {
    if (r.face == face) return true;
  }
  return false;
}

}  // namespace

std::optional<int> br_choose(const FibEntry& fib, const PitEntry* entry, bool is_retx,
                             SimTime now) {
  if (!is_retx) {
    for (const auto& hop : fib.next_hops) {
      if (!downstream(entry, hop.face)) return hop.face;
    }
    return std::nullopt;
  }
  // Retransmission: lowest-cost eligible face without a live out-record.
  const OutRecord* most_recent = nullptr;
  for (const auto& hop : fib.next_hops) {
    if (downstream(entry, hop.face)) continue;
    const OutRecord* rec = entry->out_record_on(hop.face);
    if (rec == nullptr || rec->expires_at <= now) {
      return hop.face;
    }
    if (most_recent == nullptr || rec->sent_at > most_recent->sent_at) {
      most_recent = rec;
    }
  }
  if (most_recent == nullptr) return std::nullopt;
  return most_recent->face;
}

}  // namespace nfsim
