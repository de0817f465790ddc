#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ballcomp/oracle.hpp"
#include "ballcomp/scheme.hpp"

namespace ballcomp {

// Clique S (ids ascending, |S| = ω) and independent set I.
struct SplitPartition {
  std::vector<Vertex> S;
  std::vector<Vertex> I;
  std::vector<bool> in_clique;

  int omega() const { return static_cast<int>(S.size()); }
};

// Degree-sequence partition; throws SchemeError(NotSplit).
SplitPartition split_partition(const Graph& g);
bool is_split_graph(const Graph& g);

// Literal follows the seven cases verbatim. Repaired additionally stores,
// in C5, negative independent vertices that R5 would otherwise pick.
enum class SplitVariant { Repaired, Literal };

// Size max(2, ω) scheme for all balls of a split graph.
class SplitScheme : public Scheme {
 public:
  explicit SplitScheme(GraphMetric g, SplitVariant variant = SplitVariant::Repaired);
  std::string id() const override { return variant_ == SplitVariant::Literal ? "split-literal" : "split"; }
  int size_bound() const override { return k_; }
  CompressedSample compress(const Sample& X) const override;
  Ball reconstruct(const CompressedSample& Y) const override;

  std::pair<CompressedSample, std::string> compress_traced(const Sample& X) const;
  std::pair<Ball, std::string> reconstruct_traced(const CompressedSample& Y) const;
  const SplitPartition& partition() const { return part_; }

 private:
  CompressedSample repair_twins(const Sample& X, CompressedSample Y) const;
  bool closed_adjacent(Vertex a, Vertex b) const { return a == b || gm_.graph.adjacent(a, b); }

  SplitPartition part_;
  SplitVariant variant_;
  int k_;
  std::vector<Ball> family_;
};

}  // namespace ballcomp
