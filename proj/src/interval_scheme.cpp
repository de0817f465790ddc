#include "ballcomp/interval_scheme.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ballcomp {

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash != std::string::npos) {
      long long p = std::stoll(text.substr(0, slash), &used);
      if (used != slash) throw std::invalid_argument(text);
      std::string den = text.substr(slash + 1);
      long long q = std::stoll(den, &used);
      if (used != den.size() || q == 0) throw std::invalid_argument(text);
      return Rational(p, q);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) {
      long long p = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return Rational(p);
    }
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    long long scale = 1;
    for (std::size_t i = dot + 1; i < text.size(); ++i) scale *= 10;
    long long p = std::stoll(digits, &used);
    if (used != digits.size()) throw std::invalid_argument(text);
    return Rational(p, scale);
  } catch (const std::out_of_range&) {
    throw std::invalid_argument(text);
  }
}

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

bool validate_representation(const Graph& g, const IntervalRepresentation& rep) {
  if (rep.n() != g.n()) return false;
  std::set<Rational> ends;
  for (Vertex v = 0; v < rep.n(); ++v) {
    if (rep.e(v) < rep.s(v)) return false;
    ends.insert(rep.s(v));
    ends.insert(rep.e(v));
  }
  if (static_cast<int>(ends.size()) != 2 * rep.n()) return false;
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v) {
      bool meet = !(rep.e(u) < rep.s(v) || rep.e(v) < rep.s(u));
      if (meet != g.adjacent(u, v)) return false;
    }
  return true;
}

std::pair<Vertex, Vertex> farthest_pair(const IntervalRepresentation& rep, const std::vector<Vertex>& positives) {
  Vertex u = positives.front(), v = positives.front();
  for (Vertex w : positives) {
    if (rep.e(w) < rep.e(u)) u = w;
    if (rep.s(v) < rep.s(w)) v = w;
  }
  return {u, v};
}

IntervalScheme::IntervalScheme(GraphMetric g, IntervalRepresentation rep, std::optional<int> radius)
    : Scheme(std::move(g)), rep_(std::move(rep)), r_(radius) {
  if (!validate_representation(gm_.graph, rep_))
    throw SchemeError(ErrorKind::MalformedInput, "segments do not represent the graph");
  if (r_ && *r_ < 0) throw SchemeError(ErrorKind::UnsupportedSpec, "negative radius");
  family_ = enumerate_balls(gm_.dist, r_);
}

std::vector<Vertex> IntervalScheme::by_end() const {
  std::vector<Vertex> out(n());
  for (Vertex v = 0; v < n(); ++v) out[v] = v;
  std::sort(out.begin(), out.end(), [&](Vertex a, Vertex b) { return rep_.e(a) < rep_.e(b); });
  return out;
}

CompressedSample IntervalScheme::compress(const Sample& X) const {
  if (!first_realizing(X, family_))
    throw SchemeError(ErrorKind::NotRealizable, "sample " + X.to_string() + " is not realizable");
  if (r_ && *r_ == 0) return compress_zero(X);
  CompressedSample Y({2, 2});
  auto pos = X.positives();
  auto neg = X.negatives();
  if (!r_) {
    if (pos.empty()) return Y;
    if (pos.size() == 1) {
      Y.set(0, pos[0], Sign::Pos);
      return Y;
    }
  }
  if (pos.size() == 1) {
    Y.set(1, pos[0], Sign::Pos);
  } else if (pos.size() >= 2) {
    auto [u, v] = farthest_pair(rep_, pos);
    if (u != v) Y.set(0, u, Sign::Pos);
    Y.set(1, v, Sign::Pos);
  }
  if (neg.empty()) return Y;

  // Bounders from one realizing ball: both sides if some ball has them.
  std::optional<std::pair<Vertex, Vertex>> one_side;
  const int lo = r_ ? *r_ : 1, hi = r_ ? *r_ : std::max(1, gm_.diam);
  for (int r = lo; r <= hi; ++r)
    for (Vertex x = 0; x < n(); ++x) {
      Ball b = Ball::make(gm_.dist, x, r);
      if (!consistent(b.members, X)) continue;
      Vertex p = -1, q = -1;
      for (Vertex z : neg) {
        if (rep_.e(z) < rep_.s(x) && (p < 0 || rep_.e(p) < rep_.e(z))) p = z;
        if (rep_.e(x) < rep_.s(z) && (q < 0 || rep_.s(z) < rep_.s(q))) q = z;
      }
      if (p >= 0 && q >= 0) {
        Y.set(2, p, Sign::Neg);
        Y.set(3, q, Sign::Neg);
        return Y;
      }
      if (!one_side && (p >= 0 || q >= 0)) one_side = {p, q};
    }
  if (!one_side) throw SchemeError(ErrorKind::InvariantViolated, "no bounder for " + X.to_string());
  if (one_side->first >= 0) Y.set(2, one_side->first, Sign::Neg);
  if (one_side->second >= 0) Y.set(3, one_side->second, Sign::Neg);
  return Y;
}

Ball IntervalScheme::reconstruct(const CompressedSample& Y) const {
  if (Y.size() != 4) throw SchemeError(ErrorKind::MalformedInput, "expected four slots");
  if (r_ && *r_ == 0) return reconstruct_zero(Y);
  const bool y1 = Y.filled(0), y2 = Y.filled(1), y3 = Y.filled(2), y4 = Y.filled(3);
  if (!r_) {
    if (!y1 && !y2 && !y3 && !y4) return Ball::empty_ball(n());
    if (y1 && !y2 && !y3 && !y4) return Ball::make(gm_.dist, Y.vertex(0), 0);
    if (!y2) throw SchemeError(ErrorKind::MalformedInput, Y.to_string());
  }
  const int lo = r_ ? *r_ : 1, hi = r_ ? *r_ : std::max(1, gm_.diam);
  for (int r = lo; r <= hi; ++r)
    for (Vertex x = 0; x < n(); ++x) {
      Ball b = Ball::make(gm_.dist, x, r);
      if ((y1 && !b.contains(Y.vertex(0))) || (y2 && !b.contains(Y.vertex(1)))) continue;
      if (y3 && (b.contains(Y.vertex(2)) || !(rep_.e(Y.vertex(2)) < rep_.s(x)))) continue;
      if (y4 && (b.contains(Y.vertex(3)) || !(rep_.e(x) < rep_.s(Y.vertex(3))))) continue;
      return b;
    }
  throw SchemeError(ErrorKind::Undefined, "no ball matches " + Y.to_string());
}

CompressedSample IntervalScheme::compress_zero(const Sample& X) const {
  CompressedSample Y({2, 2});
  auto pos = X.positives();
  if (!pos.empty()) {
    Y.set(0, pos[0], Sign::Pos);
    return Y;
  }
  auto order = by_end();
  if (!X.neg(order[0])) return Y;
  for (std::size_t i = 1; i < order.size(); ++i)
    if (!X.neg(order[i])) {
      Y.set(2, order[i - 1], Sign::Neg);
      return Y;
    }
  throw SchemeError(ErrorKind::NotRealizable, "every vertex is negative");
}

Ball IntervalScheme::reconstruct_zero(const CompressedSample& Y) const {
  const bool y1 = Y.filled(0), y2 = Y.filled(1), y3 = Y.filled(2), y4 = Y.filled(3);
  auto order = by_end();
  if (!y1 && !y2 && !y3 && !y4) return Ball::make(gm_.dist, order[0], 0);
  if (y1 && !y2 && !y3 && !y4) return Ball::make(gm_.dist, Y.vertex(0), 0);
  if (!y1 && !y2 && y3 && !y4) {
    auto it = std::find(order.begin(), order.end(), Y.vertex(2));
    if (it + 1 != order.end()) return Ball::make(gm_.dist, *(it + 1), 0);
  }
  throw SchemeError(ErrorKind::MalformedInput, Y.to_string());
}

}  // namespace ballcomp
