#pragma once

#include <cstdint>

namespace nfsim {

// Simulation clock value, integer nanoseconds since simulation start.
// All time arithmetic is exact; there is no floating-point clock.
using SimTime = std::int64_t;

constexpr SimTime kMicrosecond = 1'000;
constexpr SimTime kMillisecond = 1'000'000;
constexpr SimTime kSecond = 1'000'000'000;

constexpr SimTime from_us(std::int64_t us) { return us * kMicrosecond; }
constexpr SimTime from_ms(std::int64_t ms) { return ms * kMillisecond; }
constexpr SimTime from_s(std::int64_t s) { return s * kSecond; }

constexpr double to_seconds(SimTime t) { return static_cast<double>(t) / kSecond; }
constexpr double to_ms(SimTime t) { return static_cast<double>(t) / kMillisecond; }

}  // namespace nfsim
