#pragma once

#include <cstdint>
#include <random>

namespace dfjss {

using Rng = std::mt19937_64;

// SplitMix64 finaliser.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Derives a child seed from a parent seed, a stream tag and an index. Every
// random stream in the project (run, generation, simulation, test instance)
// is obtained by chaining this from a single root seed.
constexpr std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t tag, std::uint64_t index = 0) {
    return mix64(mix64(parent ^ mix64(tag)) + index);
}

namespace stream {
inline constexpr std::uint64_t kRun = 0x52554e;         // "RUN"
inline constexpr std::uint64_t kEval = 0x4556414c;      // "EVAL"
inline constexpr std::uint64_t kVary = 0x56415259;      // "VARY"
inline constexpr std::uint64_t kInit = 0x494e4954;      // "INIT"
inline constexpr std::uint64_t kTest = 0x54455354;      // "TEST"
inline constexpr std::uint64_t kTrain = 0x545241494e;   // "TRAIN"
}  // namespace stream

// Training and test seeds live in disjoint halves of the 64-bit space.
inline constexpr std::uint64_t kTestSeedBit = 1ULL << 63;

constexpr std::uint64_t as_training_seed(std::uint64_t s) { return s & ~kTestSeedBit; }
constexpr std::uint64_t as_test_seed(std::uint64_t s) { return s | kTestSeedBit; }
constexpr bool is_test_seed(std::uint64_t s) { return (s & kTestSeedBit) != 0; }

}  // namespace dfjss
