#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ballcomp/graph.hpp"
#include "ballcomp/metric.hpp"

namespace ballcomp {

enum class Sign : std::int8_t { Neg = -1, Zero = 0, Pos = 1 };

// Sign vector over V.
class Sample {
 public:
  Sample() = default;
  explicit Sample(int n) : signs_(n, Sign::Zero) {}
  static Sample from(int n, const std::vector<Vertex>& pos, const std::vector<Vertex>& neg);

  int n() const { return static_cast<int>(signs_.size()); }
  Sign operator[](Vertex v) const { return signs_[v]; }
  void set(Vertex v, Sign s) { signs_[v] = s; }
  bool pos(Vertex v) const { return signs_[v] == Sign::Pos; }
  bool neg(Vertex v) const { return signs_[v] == Sign::Neg; }
  bool in_support(Vertex v) const { return signs_[v] != Sign::Zero; }

  std::vector<Vertex> positives() const;
  std::vector<Vertex> negatives() const;
  std::vector<Vertex> support() const;
  std::string to_string() const;

  // Lexicographic on (vertex 0 first) with 0 < + < -.
  friend bool operator<(const Sample& a, const Sample& b);
  friend bool operator==(const Sample& a, const Sample& b) { return a.signs_ == b.signs_; }

 private:
  std::vector<Sign> signs_;
};

// A concept B_r(x), or the empty-ball sentinel. Equality is by member set.
struct Ball {
  Vertex center = -1;
  int radius = 0;
  VertexSet members;

  static Ball make(const DistanceMatrix& D, Vertex x, int r);
  static Ball empty_ball(int n) { return Ball{-1, 0, VertexSet(n, false)}; }

  bool is_empty() const;
  bool contains(Vertex v) const { return members[v]; }
  std::string to_string() const;

  friend bool operator==(const Ball& a, const Ball& b) { return a.members == b.members; }
};

// X+ inside, X- outside.
bool consistent(const VertexSet& members, const Sample& X);

struct SignedVertex {
  Vertex v;
  Sign sign;
  friend bool operator==(const SignedVertex&, const SignedVertex&) = default;
};

// Ordered slot vector; groups lists part sizes (e.g. 2,2,2).
class CompressedSample {
 public:
  CompressedSample() = default;
  explicit CompressedSample(std::vector<int> groups);

  std::size_t size() const { return slots_.size(); }
  const std::vector<int>& groups() const { return groups_; }
  const std::optional<SignedVertex>& operator[](std::size_t i) const { return slots_[i]; }
  bool filled(std::size_t i) const { return slots_[i].has_value(); }
  Vertex vertex(std::size_t i) const { return slots_[i]->v; }
  Sign sign(std::size_t i) const { return slots_[i]->sign; }
  void set(std::size_t i, Vertex v, Sign s) { slots_[i] = SignedVertex{v, s}; }
  void clear(std::size_t i) { slots_[i].reset(); }

  std::size_t support() const;
  std::vector<Vertex> positives() const;
  std::vector<Vertex> negatives() const;
  // Slots as "+v" / "-v" / "*", groups separated by " | ".
  std::string to_string() const;
  static CompressedSample parse(const std::string& text);

  friend bool operator==(const CompressedSample&, const CompressedSample&) = default;

 private:
  std::vector<std::optional<SignedVertex>> slots_;
  std::vector<int> groups_;
};

}  // namespace ballcomp
