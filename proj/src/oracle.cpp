#include "ballcomp/oracle.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

namespace ballcomp {

std::vector<Ball> enumerate_balls(const DistanceMatrix& D, std::optional<int> radius_filter) {
  std::vector<Ball> out;
  std::unordered_set<VertexSet> seen;
  int lo = radius_filter ? *radius_filter : 0;
  int hi = radius_filter ? *radius_filter : D.diameter();
  for (int r = lo; r <= hi; ++r) {
    for (Vertex x = 0; x < D.n(); ++x) {
      Ball b = Ball::make(D, x, r);
      if (seen.insert(b.members).second) out.push_back(std::move(b));
    }
  }
  return out;
}

bool realizes(const Ball& b, const Sample& X) { return consistent(b.members, X); }

std::vector<Ball> realizing_balls(const Sample& X, const std::vector<Ball>& family) {
  std::vector<Ball> out;
  for (const Ball& b : family)
    if (realizes(b, X)) out.push_back(b);
  return out;
}

std::optional<Ball> first_realizing(const Sample& X, const std::vector<Ball>& family) {
  for (const Ball& b : family)
    if (realizes(b, X)) return b;
  return std::nullopt;
}

int vc_dimension(const std::vector<VertexSet>& family, int n) {
  if (family.empty()) return 0;
  int best = 0;
  std::vector<int> chosen;
  std::vector<char> seen;
  // Shattered sets are closed under subsets, so grow d until none shatters.
  for (int d = 1; d <= n && d < 24; ++d) {
    if ((std::size_t{1} << d) > family.size()) break;
    bool found = false;
    std::vector<int> idx(d);
    for (int i = 0; i < d; ++i) idx[i] = i;
    while (true) {
      seen.assign(std::size_t{1} << d, 0);
      std::size_t distinct = 0;
      for (const auto& c : family) {
        std::size_t mask = 0;
        for (int i = 0; i < d; ++i)
          if (c[idx[i]]) mask |= std::size_t{1} << i;
        if (!seen[mask]) {
          seen[mask] = 1;
          ++distinct;
        }
      }
      if (distinct == (std::size_t{1} << d)) {
        found = true;
        break;
      }
      int i = d - 1;
      while (i >= 0 && idx[i] == n - d + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) break;
    best = d;
  }
  return best;
}

int vc_dimension(const std::vector<Ball>& family, int n) {
  std::vector<VertexSet> sets;
  for (const auto& b : family) sets.push_back(b.members);
  return vc_dimension(sets, n);
}

namespace {

std::uint64_t code_of(const Sample& X) {
  std::uint64_t c = 0;
  for (Vertex v = 0; v < X.n(); ++v) c = c * 3 + (X[v] == Sign::Zero ? 0 : (X[v] == Sign::Pos ? 1 : 2));
  return c;
}

}  // namespace

std::vector<Sample> enumerate_realizable_samples(int n, const std::vector<Ball>& family,
                                                 std::optional<std::size_t> cap, std::uint64_t seed) {
  if (n > kExhaustiveLimit) return random_realizable_samples(n, family, cap.value_or(10000), seed);
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::pair<std::uint64_t, Sample>> found;
  for (const Ball& b : family) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      Sample X(n);
      for (Vertex v = 0; v < n; ++v)
        if (mask >> v & 1u) X.set(v, b.members[v] ? Sign::Pos : Sign::Neg);
      std::uint64_t c = code_of(X);
      if (seen.insert(c).second) found.emplace_back(c, std::move(X));
    }
  }
  if (family.empty()) found.emplace_back(0, Sample(n));
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Sample> out;
  for (auto& [c, X] : found) {
    if (cap && out.size() >= *cap) break;
    out.push_back(std::move(X));
  }
  return out;
}

std::vector<Sample> random_realizable_samples(int n, const std::vector<Ball>& family, std::size_t count,
                                              std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Sample> out;
  if (family.empty()) return out;
  std::uniform_int_distribution<std::size_t> pick(0, family.size() - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t k = 0; k < count; ++k) {
    const Ball& b = family[pick(rng)];
    double p = unit(rng);
    Sample X(n);
    for (Vertex v = 0; v < n; ++v)
      if (unit(rng) < p) X.set(v, b.members[v] ? Sign::Pos : Sign::Neg);
    out.push_back(std::move(X));
  }
  return out;
}

}  // namespace ballcomp
