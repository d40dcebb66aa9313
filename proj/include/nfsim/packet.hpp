#pragma once

#include <cstdint>

#include "nfsim/name.hpp"
#include "nfsim/sim_time.hpp"

namespace nfsim {

constexpr std::int64_t kDefaultInterestBits = 320;
constexpr std::int64_t kDefaultDataBits = 8200;

struct Interest {
  Name name;
  std::uint64_t nonce = 0;
  SimTime issued_at = 0;  // consumer-side bookkeeping (first issuance)
  std::int64_t size_bits = kDefaultInterestBits;
};

struct Data {
  Name name;
  std::int64_t payload_bits = kDefaultDataBits;
};

}  // namespace nfsim
