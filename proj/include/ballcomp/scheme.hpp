#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ballcomp/metric.hpp"
#include "ballcomp/sample.hpp"

namespace ballcomp {

enum class ErrorKind {
  NotRealizable,
  MalformedInput,
  Undefined,
  NotCactus,
  NotMedian,
  NotSplit,
  InvalidEmbedding,
  UnsupportedSpec,
  InvariantViolated,
};

const char* to_string(ErrorKind k);

class SchemeError : public std::runtime_error {
 public:
  SchemeError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Half-integer parameters stored doubled.
struct ApproxParams {
  int twice_rho = 0;
  int twice_mu = 0;
  std::string to_string() const;
};

// A compressor/reconstructor pair over a fixed graph.
class Scheme {
 public:
  explicit Scheme(GraphMetric gm) : gm_(std::move(gm)) {}
  virtual ~Scheme() = default;

  virtual std::string id() const = 0;
  virtual int size_bound() const = 0;
  // Fixed radius of the target family, if any.
  virtual std::optional<int> radius() const { return std::nullopt; }
  virtual bool proper() const { return true; }
  virtual CompressedSample compress(const Sample& X) const = 0;
  virtual Ball reconstruct(const CompressedSample& Y) const = 0;
  // Per-output approximation bounds for approximate schemes.
  virtual std::optional<ApproxParams> approximation(const CompressedSample&) const { return std::nullopt; }

  const GraphMetric& metric() const { return gm_; }
  int n() const { return gm_.n(); }
  int d(Vertex u, Vertex v) const { return gm_.dist(u, v); }

 protected:
  GraphMetric gm_;
};

}  // namespace ballcomp
