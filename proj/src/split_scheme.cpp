#include "ballcomp/split_scheme.hpp"

#include <algorithm>

namespace ballcomp {

SplitPartition split_partition(const Graph& g) {
  const int n = g.n();
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  int m = 0;
  for (int i = 0; i < n; ++i)
    if (g.degree(order[i]) >= i) m = i + 1;
  SplitPartition p;
  p.in_clique.assign(n, false);
  for (int i = 0; i < m; ++i) p.in_clique[order[i]] = true;
  for (Vertex v = 0; v < n; ++v) (p.in_clique[v] ? p.S : p.I).push_back(v);
  for (std::size_t i = 0; i < p.S.size(); ++i)
    for (std::size_t j = i + 1; j < p.S.size(); ++j)
      if (!g.adjacent(p.S[i], p.S[j])) throw SchemeError(ErrorKind::NotSplit, "degree partition is not a clique");
  for (std::size_t i = 0; i < p.I.size(); ++i)
    for (std::size_t j = i + 1; j < p.I.size(); ++j)
      if (g.adjacent(p.I[i], p.I[j])) throw SchemeError(ErrorKind::NotSplit, "degree partition is not independent");
  return p;
}

bool is_split_graph(const Graph& g) {
  try {
    split_partition(g);
    return true;
  } catch (const SchemeError&) {
    return false;
  }
}

SplitScheme::SplitScheme(GraphMetric g, SplitVariant variant)
    : Scheme(std::move(g)), part_(split_partition(gm_.graph)), variant_(variant), family_(enumerate_balls(gm_.dist)) {
  k_ = std::max(2, part_.omega());
}

CompressedSample SplitScheme::compress(const Sample& X) const { return compress_traced(X).first; }

std::pair<CompressedSample, std::string> SplitScheme::compress_traced(const Sample& X) const {
  if (!first_realizing(X, family_))
    throw SchemeError(ErrorKind::NotRealizable, "sample " + X.to_string() + " is not realizable");
  const auto& D = gm_.dist;
  const auto& S = part_.S;
  CompressedSample Y({k_});
  auto pos = X.positives();
  auto neg = X.negatives();
  auto realizes_with = [&](Vertex u, int r) { return consistent(Ball::make(D, u, r).members, X); };
  if (pos.empty()) return {Y, "C1"};
  if (neg.empty()) {
    Y.set(0, pos[0], Sign::Pos);
    return {Y, "C2"};
  }
  if (pos.size() == 1) {
    Y.set(1, pos[0], Sign::Pos);
    return {Y, "C3"};
  }
  for (Vertex u : part_.I)
    if (X.pos(u) && realizes_with(u, 1)) {
      for (Vertex v : pos)
        if (gm_.graph.adjacent(u, v)) {
          Y.set(0, u, Sign::Pos);
          Y.set(1, v, Sign::Pos);
          return {Y, "C4"};
        }
    }
  for (Vertex u : part_.I)
    if (!X.pos(u) && realizes_with(u, 1)) {
      for (std::size_t i = 0; i < S.size(); ++i)
        if (X.in_support(S[i])) Y.set(i, S[i], X[S[i]]);
      if (variant_ == SplitVariant::Repaired) Y = repair_twins(X, Y);
      return {Y, "C5"};
    }
  std::vector<bool> used(n(), false);
  auto fill = [&](auto&& second_choice) {
    for (std::size_t i = 0; i < S.size(); ++i) {
      Vertex pick = -1;
      for (Vertex y : neg)
        if (!used[y] && gm_.graph.adjacent(S[i], y)) {
          pick = y;
          break;
        }
      if (pick < 0) pick = second_choice(S[i]);
      if (pick >= 0) {
        used[pick] = true;
        Y.set(i, pick, X[pick]);
      }
    }
  };
  for (Vertex u : S)
    if (realizes_with(u, 1)) {
      fill([&](Vertex w) {
        for (Vertex z : pos)
          if (!used[z] && !closed_adjacent(w, z)) return z;
        return Vertex{-1};
      });
      return {Y, "C6"};
    }
  for (Vertex u : part_.I)
    if (realizes_with(u, 2)) {
      fill([&](Vertex w) {
        if (!gm_.graph.adjacent(u, w)) return Vertex{-1};
        for (Vertex z : pos)
          if (!used[z] && !part_.in_clique[z] && gm_.graph.adjacent(w, z)) return z;
        return Vertex{-1};
      });
      return {Y, "C7"};
    }
  throw SchemeError(ErrorKind::InvariantViolated, "no case applies to " + X.to_string());
}

// R5 takes the first independent vertex whose ball agrees with Y, which can
// be a negative twin of the intended center. Store such twins in free
// coordinates, or in coordinates of negative clique vertices, while the
// decoded center moves forward.
CompressedSample SplitScheme::repair_twins(const Sample& X, CompressedSample Y) const {
  auto decoded = [&](const CompressedSample& Z) -> std::optional<Ball> {
    try {
      auto [b, label] = reconstruct_traced(Z);
      if (label == "R5") return b;
    } catch (const SchemeError&) {
    }
    return std::nullopt;
  };
  for (int round = 0; round < k_; ++round) {
    auto b = decoded(Y);
    if (!b || consistent(b->members, X) || !X.neg(b->center)) return Y;
    std::optional<CompressedSample> best;
    Vertex best_center = b->center;
    for (std::size_t i = 0; i < Y.size(); ++i) {
      if (Y.filled(i) && (Y.sign(i) == Sign::Pos || !part_.in_clique[Y.vertex(i)])) continue;
      CompressedSample Z = Y;
      Z.set(i, b->center, Sign::Neg);
      auto c = decoded(Z);
      if (!c) continue;
      if (consistent(c->members, X)) return Z;
      if (c->center > best_center) best = Z, best_center = c->center;
    }
    if (!best) return Y;
    Y = *best;
  }
  return Y;
}

Ball SplitScheme::reconstruct(const CompressedSample& Y) const { return reconstruct_traced(Y).first; }

std::pair<Ball, std::string> SplitScheme::reconstruct_traced(const CompressedSample& Y) const {
  if (static_cast<int>(Y.size()) != k_) throw SchemeError(ErrorKind::MalformedInput, "wrong slot count");
  const auto& D = gm_.dist;
  const auto& S = part_.S;
  std::vector<std::size_t> filled;
  for (std::size_t i = 0; i < Y.size(); ++i)
    if (Y.filled(i)) filled.push_back(i);
  auto only = [&](std::vector<std::size_t> slots) { return filled == slots; };
  auto positive = [&](std::size_t i) { return Y.sign(i) == Sign::Pos; };
  if (filled.empty()) return {Ball::empty_ball(n()), "R1"};
  if (only({0}) && positive(0)) {
    for (const Ball& b : family_)
      if (std::all_of(b.members.begin(), b.members.end(), [](bool m) { return m; })) return {b, "R2"};
  }
  if (only({1}) && positive(1)) return {Ball::make(D, Y.vertex(1), 0), "R3"};
  if (only({0, 1}) && positive(0) && positive(1) && !part_.in_clique[Y.vertex(0)] && part_.in_clique[Y.vertex(1)])
    return {Ball::make(D, Y.vertex(0), 1), "R4"};

  auto agrees = [&](const Ball& b) {
    for (std::size_t i : filled)
      if (b.contains(Y.vertex(i)) != positive(i)) return false;
    return true;
  };
  int clique_pos = 0;
  bool has_neg = false, all_far = true;
  for (std::size_t i : filled) {
    if (positive(i)) {
      if (part_.in_clique[Y.vertex(i)]) ++clique_pos;
      if (i < S.size() && gm_.graph.adjacent(S[i], Y.vertex(i))) all_far = false;
    } else {
      has_neg = true;
    }
  }
  if (clique_pos >= 2) {
    for (Vertex u : part_.I) {
      Ball b = Ball::make(D, u, 1);
      if (agrees(b)) return {b, "R5"};
    }
    throw SchemeError(ErrorKind::Undefined, "no R5 center for " + Y.to_string());
  }
  if (has_neg && all_far) {
    for (std::size_t t = 0; t < S.size(); ++t) {
      if (Y.filled(t)) continue;
      Ball b = Ball::make(D, S[t], 1);
      if (agrees(b)) return {b, "R6"};
    }
    throw SchemeError(ErrorKind::Undefined, "no R6 center for " + Y.to_string());
  }
  for (Vertex u : part_.I) {
    Ball b = Ball::make(D, u, 2);
    bool ok = true;
    for (std::size_t i : filled) {
      if (!positive(i) && b.contains(Y.vertex(i))) ok = false;
      if (positive(i) && (i >= S.size() || !gm_.graph.adjacent(u, S[i]))) ok = false;
    }
    if (ok) return {b, "R7"};
  }
  throw SchemeError(ErrorKind::Undefined, "no R7 center for " + Y.to_string());
}

}  // namespace ballcomp
