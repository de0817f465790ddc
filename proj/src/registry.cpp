#include "ballcomp/registry.hpp"

#include "ballcomp/cactus_scheme.hpp"
#include "ballcomp/hyperbolic.hpp"
#include "ballcomp/median_scheme.hpp"
#include "ballcomp/split_scheme.hpp"
#include "ballcomp/tree_schemes.hpp"

namespace ballcomp {

std::vector<std::string> scheme_names() {
  return {"tree-uscs", "uscs",  "tree-lscs",     "lscs",        "tree-fixed-r", "tree-noinfo", "cycle",
          "cactus",    "cfmedian", "interval",   "split",       "split-literal", "planar-unit", "hyperbolic"};
}

std::unique_ptr<Scheme> make_scheme(const std::string& name, const GraphMetric& gm, const SchemeInputs& in) {
  auto need_radius = [&]() {
    if (!in.radius) throw SchemeError(ErrorKind::UnsupportedSpec, name + " needs a radius");
    return *in.radius;
  };
  if (name == "tree-uscs" || name == "uscs") return std::make_unique<TreeUscs>(gm);
  if (name == "tree-lscs" || name == "lscs") return std::make_unique<TreeLscs>(gm);
  if (name == "tree-fixed-r") return std::make_unique<TreeFixedRadius>(gm, need_radius());
  if (name == "tree-noinfo") return std::make_unique<TreeFixedRadiusNoInfo>(gm, need_radius());
  if (name == "cycle") return std::make_unique<CycleScheme>(gm);
  if (name == "cactus") return std::make_unique<CactusScheme>(gm);
  if (name == "cfmedian") return std::make_unique<CfMedianScheme>(gm);
  if (name == "interval") {
    if (!in.intervals) throw SchemeError(ErrorKind::UnsupportedSpec, "interval needs an interval representation");
    return std::make_unique<IntervalScheme>(gm, *in.intervals, in.radius);
  }
  if (name == "split") return std::make_unique<SplitScheme>(gm);
  if (name == "split-literal") return std::make_unique<SplitScheme>(gm, SplitVariant::Literal);
  if (name == "planar-unit") {
    if (!in.rotation) throw SchemeError(ErrorKind::UnsupportedSpec, "planar-unit needs a rotation system");
    return std::make_unique<PlanarUnitScheme>(gm, *in.rotation);
  }
  if (name == "hyperbolic") return std::make_unique<HyperbolicScheme>(gm);
  throw SchemeError(ErrorKind::UnsupportedSpec, "unknown scheme " + name);
}

std::string default_scheme_for(const std::string& graph_class) {
  if (graph_class == "tree") return "tree-lscs";
  if (graph_class == "cycle") return "cycle";
  if (graph_class == "cactus") return "cactus";
  if (graph_class == "cfmedian") return "cfmedian";
  if (graph_class == "interval") return "interval";
  if (graph_class == "split") return "split";
  if (graph_class == "planar-rot" || graph_class == "planar") return "planar-unit";
  return "hyperbolic";
}

}  // namespace ballcomp
