#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "ballcomp/oracle.hpp"
#include "ballcomp/scheme.hpp"

namespace ballcomp {

using Rational = boost::rational<long long>;

// Accepts "p/q", integers and finite decimals; throws std::invalid_argument.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

// Segment J_v = [s_v, e_v] per vertex.
struct IntervalRepresentation {
  std::vector<std::pair<Rational, Rational>> segments;

  int n() const { return static_cast<int>(segments.size()); }
  const Rational& s(Vertex v) const { return segments[v].first; }
  const Rational& e(Vertex v) const { return segments[v].second; }
};

bool validate_representation(const Graph& g, const IntervalRepresentation& rep);

// u+ has the smallest end, v+ the largest start.
std::pair<Vertex, Vertex> farthest_pair(const IntervalRepresentation& rep, const std::vector<Vertex>& positives);

// Size-4 scheme; all balls when radius is unset, otherwise the r-balls.
class IntervalScheme : public Scheme {
 public:
  IntervalScheme(GraphMetric g, IntervalRepresentation rep, std::optional<int> radius = std::nullopt);
  std::string id() const override { return r_ ? "interval-r" + std::to_string(*r_) : "interval"; }
  int size_bound() const override { return 4; }
  std::optional<int> radius() const override { return r_; }
  CompressedSample compress(const Sample& X) const override;
  Ball reconstruct(const CompressedSample& Y) const override;

  const IntervalRepresentation& representation() const { return rep_; }

 private:
  CompressedSample compress_zero(const Sample& X) const;
  Ball reconstruct_zero(const CompressedSample& Y) const;
  std::vector<Vertex> by_end() const;

  IntervalRepresentation rep_;
  std::optional<int> r_;
  std::vector<Ball> family_;
};

}  // namespace ballcomp
