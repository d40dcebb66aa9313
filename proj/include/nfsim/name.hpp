#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <tuple>

namespace nfsim {

// Content name: a producer prefix plus a sequence number.
struct Name {
  std::string prefix;
  std::uint64_t seq = 0;

  bool operator==(const Name& o) const { return seq == o.seq && prefix == o.prefix; }
  bool operator<(const Name& o) const {
    return std::tie(prefix, seq) < std::tie(o.prefix, o.seq);
  }

  std::string to_string() const { return prefix + "/" + std::to_string(seq); }
};

struct NameHash {
  std::size_t operator()(const Name& n) const {
    std::size_t h = std::hash<std::string>{}(n.prefix);
    return h ^ (std::hash<std::uint64_t>{}(n.seq) + 0x9e3779b9 + (h << 6) + (h >> 2));
  }
};

}  // namespace nfsim
