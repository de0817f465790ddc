#include "ballcomp/verify.hpp"

#include <sstream>
#include <unordered_set>

#include "ballcomp/oracle.hpp"

namespace ballcomp {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotRealizable: return "NotRealizable";
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::Undefined: return "Undefined";
    case ErrorKind::NotCactus: return "NotCactus";
    case ErrorKind::NotMedian: return "NotMedian";
    case ErrorKind::NotSplit: return "NotSplit";
    case ErrorKind::InvalidEmbedding: return "InvalidEmbedding";
    case ErrorKind::UnsupportedSpec: return "UnsupportedSpec";
    case ErrorKind::InvariantViolated: return "InvariantViolated";
  }
  return "Unknown";
}

std::string ApproxParams::to_string() const {
  auto half = [](int t) { return t % 2 ? std::to_string(t / 2) + ".5" : std::to_string(t / 2); };
  return "(" + half(twice_rho) + "," + half(twice_mu) + ")";
}

std::string VerificationReport::to_string() const {
  std::ostringstream os;
  os << "scheme=" << scheme_id << " samples=" << samples << " failures=" << failure_count
     << " max_support=" << max_support;
  if (approx) os << " approx=" << approx->to_string();
  os << '\n';
  for (const auto& f : failures) os << "failure " << f.sample.to_string() << " " << f.reason << '\n';
  return os.str();
}

std::vector<Ball> target_family(const Scheme& s) { return enumerate_balls(s.metric().dist, s.radius()); }

VerifyOptions default_options(const Scheme& s) {
  VerifyOptions o;
  o.size_bound = s.size_bound();
  o.proper = s.proper();
  return o;
}

namespace {

std::string check_one(const Scheme& s, const Sample& X, const VerifyOptions& opt,
                      const std::unordered_set<VertexSet>& family, std::size_t& support, bool& improper) {
  const auto& D = s.metric().dist;
  CompressedSample Y = s.compress(X);
  for (std::size_t i = 0; i < Y.size(); ++i) {
    if (!Y.filled(i)) continue;
    Vertex v = Y.vertex(i);
    if (v < 0 || v >= X.n()) return "slot vertex out of range";
    if (X[v] != Y.sign(i)) return "compression not below sample at vertex " + std::to_string(v);
  }
  support = Y.support();
  if (static_cast<int>(support) > opt.size_bound)
    return "support " + std::to_string(support) + " exceeds bound " + std::to_string(opt.size_bound);
  Ball b = s.reconstruct(Y);
  std::optional<ApproxParams> approx = opt.approx;
  if (!approx && opt.per_sample_approx) approx = s.approximation(Y);
  if (approx) {
    if (b.is_empty()) {
      if (!X.positives().empty()) return "empty output for nonempty positives";
      return {};
    }
    for (Vertex w = 0; w < X.n(); ++w) {
      int twice = 2 * D(b.center, w);
      if (X.pos(w) && twice > 2 * b.radius + approx->twice_rho)
        return "positive " + std::to_string(w) + " outside B_{r+rho}; got " + b.to_string();
      if (X.neg(w) && twice <= 2 * b.radius - approx->twice_mu)
        return "negative " + std::to_string(w) + " inside B_{r-mu}; got " + b.to_string();
    }
    return {};
  }
  if (!consistent(b.members, X)) return "inconsistent output " + b.to_string() + " for " + Y.to_string();
  if (opt.proper) {
    bool ok = b.is_empty() ? X.positives().empty() : family.count(b.members) > 0;
    if (!ok) {
      improper = true;
      return "output " + b.to_string() + " not in the ball family";
    }
  }
  return {};
}

}  // namespace

VerificationReport verify_scheme(const Scheme& s, const std::vector<Sample>& samples, const VerifyOptions& opt) {
  VerificationReport rep;
  rep.scheme_id = s.id();
  rep.approx = opt.approx;
  std::unordered_set<VertexSet> family;
  if (opt.proper)
    for (auto& b : target_family(s)) family.insert(b.members);
  for (const Sample& X : samples) {
    ++rep.samples;
    std::size_t support = 0;
    bool improper = false;
    std::string reason;
    try {
      reason = check_one(s, X, opt, family, support, improper);
    } catch (const std::exception& e) {
      reason = std::string("exception: ") + e.what();
    }
    rep.max_support = std::max(rep.max_support, support);
    if (improper) ++rep.properness_violations;
    if (!reason.empty()) {
      ++rep.failure_count;
      if (rep.failures.size() < opt.keep_failures) rep.failures.push_back({X, reason});
    }
  }
  return rep;
}

VerificationReport verify_scheme(const Scheme& s, const std::vector<Sample>& samples) {
  return verify_scheme(s, samples, default_options(s));
}

}  // namespace ballcomp
