#pragma once

#include <optional>

#include "nfsim/node.hpp"
#include "nfsim/packet.hpp"

namespace nfsim {

// Per-node forwarding strategy. choose_face returns the node-local face
// id to forward the interest on, or nullopt to drop it.
class Strategy {
 public:
  virtual ~Strategy() = default;

  virtual std::optional<int> choose_face(Node& node, const FibEntry& fib, const PitEntry* entry,
                                         const Interest& interest, bool is_retx, SimTime now) = 0;

  // Data matched a PIT entry with an out-record on the arrival face.
  virtual void on_data(Node&, const Data&, const OutRecord&, SimTime) {}

  // The PIT entry for the name was removed (satisfied or expired).
  virtual void on_pit_erased(const Name&, SimTime) {}
};

}  // namespace nfsim
