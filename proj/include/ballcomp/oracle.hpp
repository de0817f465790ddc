#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ballcomp/metric.hpp"
#include "ballcomp/sample.hpp"

namespace ballcomp {

inline constexpr int kExhaustiveLimit = 12;
inline constexpr std::uint64_t kDefaultSampleSeed = 0x5eedba11ULL;

// Distinct balls, canonical (radius, center) order.
std::vector<Ball> enumerate_balls(const DistanceMatrix& D, std::optional<int> radius_filter = std::nullopt);

bool realizes(const Ball& b, const Sample& X);
std::vector<Ball> realizing_balls(const Sample& X, const std::vector<Ball>& family);
// First realizing ball in family order (canonical order for enumerate_balls).
std::optional<Ball> first_realizing(const Sample& X, const std::vector<Ball>& family);

int vc_dimension(const std::vector<VertexSet>& family, int n);
int vc_dimension(const std::vector<Ball>& family, int n);

// All realizable samples in lexicographic order (n <= kExhaustiveLimit),
// otherwise `cap` seeded random samples drawn below random family members.
std::vector<Sample> enumerate_realizable_samples(int n, const std::vector<Ball>& family,
                                                 std::optional<std::size_t> cap = std::nullopt,
                                                 std::uint64_t seed = kDefaultSampleSeed);
std::vector<Sample> random_realizable_samples(int n, const std::vector<Ball>& family, std::size_t count,
                                              std::uint64_t seed);

}  // namespace ballcomp
