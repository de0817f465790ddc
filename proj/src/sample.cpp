#include "ballcomp/sample.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ballcomp {

Sample Sample::from(int n, const std::vector<Vertex>& pos, const std::vector<Vertex>& neg) {
  Sample X(n);
  for (Vertex v : pos) X.set(v, Sign::Pos);
  for (Vertex v : neg) {
    if (X.pos(v)) throw std::invalid_argument("vertex is both positive and negative");
    X.set(v, Sign::Neg);
  }
  return X;
}

std::vector<Vertex> Sample::positives() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n(); ++v)
    if (pos(v)) out.push_back(v);
  return out;
}

std::vector<Vertex> Sample::negatives() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n(); ++v)
    if (neg(v)) out.push_back(v);
  return out;
}

std::vector<Vertex> Sample::support() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n(); ++v)
    if (in_support(v)) out.push_back(v);
  return out;
}

std::string Sample::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (Vertex v = 0; v < n(); ++v) {
    if (!in_support(v)) continue;
    os << (first ? "" : " ") << (pos(v) ? "+" : "-") << v;
    first = false;
  }
  os << "}";
  return os.str();
}

static int rank(Sign s) { return s == Sign::Zero ? 0 : (s == Sign::Pos ? 1 : 2); }

bool operator<(const Sample& a, const Sample& b) {
  for (std::size_t i = 0; i < a.signs_.size() && i < b.signs_.size(); ++i) {
    int ra = rank(a.signs_[i]), rb = rank(b.signs_[i]);
    if (ra != rb) return ra < rb;
  }
  return a.signs_.size() < b.signs_.size();
}

Ball Ball::make(const DistanceMatrix& D, Vertex x, int r) {
  Ball b{x, r, VertexSet(D.n(), false)};
  for (Vertex z = 0; z < D.n(); ++z) b.members[z] = D(x, z) <= r;
  return b;
}

bool Ball::is_empty() const {
  for (bool m : members)
    if (m) return false;
  return true;
}

std::string Ball::to_string() const {
  if (is_empty()) return "empty";
  std::ostringstream os;
  os << "B_" << radius << "(" << center << ")={";
  bool first = true;
  for (std::size_t v = 0; v < members.size(); ++v) {
    if (!members[v]) continue;
    os << (first ? "" : ",") << v;
    first = false;
  }
  os << "}";
  return os.str();
}

bool consistent(const VertexSet& members, const Sample& X) {
  for (Vertex v = 0; v < X.n(); ++v) {
    if (X.pos(v) && !members[v]) return false;
    if (X.neg(v) && members[v]) return false;
  }
  return true;
}

CompressedSample::CompressedSample(std::vector<int> groups) : groups_(std::move(groups)) {
  slots_.resize(std::accumulate(groups_.begin(), groups_.end(), 0));
}

std::size_t CompressedSample::support() const {
  std::size_t k = 0;
  for (const auto& s : slots_) k += s.has_value();
  return k;
}

std::vector<Vertex> CompressedSample::positives() const {
  std::vector<Vertex> out;
  for (const auto& s : slots_)
    if (s && s->sign == Sign::Pos) out.push_back(s->v);
  return out;
}

std::vector<Vertex> CompressedSample::negatives() const {
  std::vector<Vertex> out;
  for (const auto& s : slots_)
    if (s && s->sign == Sign::Neg) out.push_back(s->v);
  return out;
}

std::string CompressedSample::to_string() const {
  std::ostringstream os;
  std::size_t i = 0;
  for (std::size_t g = 0; g < groups_.size(); ++g) {
    if (g) os << " |";
    for (int j = 0; j < groups_[g]; ++j, ++i) {
      if (g || j) os << ' ';
      if (!slots_[i]) {
        os << '*';
      } else {
        os << (slots_[i]->sign == Sign::Pos ? '+' : '-') << slots_[i]->v;
      }
    }
  }
  return os.str();
}

CompressedSample CompressedSample::parse(const std::string& text) {
  std::istringstream is(text);
  std::string tok;
  std::vector<int> groups{0};
  std::vector<std::optional<SignedVertex>> slots;
  while (is >> tok) {
    if (tok == "|") {
      groups.push_back(0);
      continue;
    }
    if (tok == "*") {
      slots.emplace_back();
    } else if ((tok[0] == '+' || tok[0] == '-') && tok.size() > 1) {
      std::size_t used = 0;
      int v = std::stoi(tok.substr(1), &used);
      if (used != tok.size() - 1 || v < 0) throw std::invalid_argument("bad slot token '" + tok + "'");
      slots.push_back(SignedVertex{v, tok[0] == '+' ? Sign::Pos : Sign::Neg});
    } else {
      throw std::invalid_argument("bad slot token '" + tok + "'");
    }
    ++groups.back();
  }
  CompressedSample c(groups);
  c.slots_ = std::move(slots);
  return c;
}

}  // namespace ballcomp
