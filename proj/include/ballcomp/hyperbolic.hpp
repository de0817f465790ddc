#pragma once

#include <array>
#include <string>

#include "ballcomp/oracle.hpp"
#include "ballcomp/scheme.hpp"

namespace ballcomp {

struct Hyperbolicity {
  int twice_delta = 0;
  std::array<Vertex, 4> witness{0, 0, 0, 0};

  std::string delta_string() const;  // "1", "1/2", ...
};

// Exact four-point evaluation over all quadruples.
Hyperbolicity hyperbolicity(const DistanceMatrix& D);

// Size-2 approximate scheme: diametral pair of X+, ball around a geodesic middle.
class HyperbolicScheme : public Scheme {
 public:
  explicit HyperbolicScheme(GraphMetric g);
  std::string id() const override { return "hyperbolic"; }
  int size_bound() const override { return 2; }
  CompressedSample compress(const Sample& X) const override;
  Ball reconstruct(const CompressedSample& Y) const override;
  std::optional<ApproxParams> approximation(const CompressedSample& Y) const override;

  const Hyperbolicity& delta() const { return h_; }

 private:
  Hyperbolicity h_;
  std::vector<Ball> family_;
};

}  // namespace ballcomp
