#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ballcomp/formats.hpp"
#include "ballcomp/generators.hpp"
#include "ballcomp/hyperbolic.hpp"
#include "ballcomp/oracle.hpp"
#include "ballcomp/registry.hpp"
#include "ballcomp/verify.hpp"

using namespace ballcomp;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Graph source shared by the subcommands: a file, or a generator spec.
struct GraphArgs {
  std::string graph_file;
  std::string cls;
  int n = 0;
  std::uint64_t seed = 1;
  int rows = 0;
  int cols = 0;
  double density = 0.3;
  std::string family = "stacked";
  std::string intervals_file;
  std::string rotation_file;
  std::optional<int> radius;

  void add_to(CLI::App* app, bool with_radius = true) {
    app->add_option("--graph", graph_file, "graph file ('n m' header, then edges)");
    app->add_option("--class", cls, "generate a graph of this class instead");
    app->add_option("--n", n, "number of vertices for --class");
    app->add_option("--seed", seed, "generator seed");
    app->add_option("--rows", rows, "grid rows");
    app->add_option("--cols", cols, "grid columns");
    app->add_option("--density", density, "edge probability for random graphs");
    app->add_option("--planar", family, "planar family: wheel, grid, squares, stacked");
    app->add_option("--intervals", intervals_file, "interval representation file");
    app->add_option("--rotation", rotation_file, "rotation system file");
    if (with_radius) app->add_option("--radius", radius, "fixed ball radius");
  }

  GenSpec spec() const {
    static const std::map<std::string, PlanarFamily> families{{"wheel", PlanarFamily::Wheel},
                                                              {"grid", PlanarFamily::Grid},
                                                              {"squares", PlanarFamily::StackedSquares},
                                                              {"stacked", PlanarFamily::StackedTriangulation}};
    GenSpec s;
    s.cls = parse_graph_class(cls);
    s.n = n > 0 ? n : (rows > 0 && cols > 0 ? rows * cols : 0);
    s.seed = seed;
    s.rows = rows;
    s.cols = cols;
    s.density = density;
    auto it = families.find(family);
    if (it == families.end()) throw UsageError("unknown planar family " + family);
    s.planar = it->second;
    return s;
  }

  Instance load() const {
    Instance in;
    if (!graph_file.empty()) {
      in.graph = parse_graph(read_file(graph_file));
    } else if (!cls.empty()) {
      in = generate(spec());
    } else {
      throw UsageError("give --graph or --class");
    }
    if (!intervals_file.empty()) in.intervals = parse_intervals(read_file(intervals_file));
    if (!rotation_file.empty()) in.rotation = parse_rotation(read_file(rotation_file), in.graph.n());
    return in;
  }

  SchemeInputs inputs(const Instance& in) const { return {radius, in.intervals, in.rotation}; }
};

std::string scheme_or_default(const std::string& scheme, const GraphArgs& g) {
  if (!scheme.empty()) return scheme;
  if (g.cls.empty()) throw UsageError("give --scheme");
  return default_scheme_for(g.cls);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sample compression schemes for balls in graphs"};
  app.require_subcommand(1);

  GraphArgs gen_args;
  std::string gen_out, gen_intervals_out, gen_rotation_out;
  auto* gen = app.add_subcommand("gen", "generate a graph instance");
  gen_args.add_to(gen, false);
  gen->add_option("--out", gen_out, "graph output file (default stdout)");
  gen->add_option("--intervals-out", gen_intervals_out, "interval representation output file");
  gen->add_option("--rotation-out", gen_rotation_out, "rotation system output file");

  GraphArgs comp_args;
  std::string comp_scheme, comp_sample;
  auto* compress = app.add_subcommand("compress", "compress a sample");
  comp_args.add_to(compress);
  compress->add_option("--scheme", comp_scheme, "scheme name");
  compress->add_option("--sample", comp_sample, "sample file ('+ v' / '- v' lines)")->required();

  GraphArgs rec_args;
  std::string rec_scheme, rec_text, rec_file;
  auto* reconstruct = app.add_subcommand("reconstruct", "reconstruct a ball from a compressed sample");
  rec_args.add_to(reconstruct);
  reconstruct->add_option("--scheme", rec_scheme, "scheme name");
  reconstruct->add_option("--compressed", rec_text, "compressed sample text, e.g. '+0 * | -3 *'");
  reconstruct->add_option("--input", rec_file, "file holding the compressed sample text");

  GraphArgs ver_args;
  std::string ver_scheme;
  bool exhaustive = false;
  std::size_t ver_samples = 10000;
  std::uint64_t sample_seed = kDefaultSampleSeed;
  auto* verify = app.add_subcommand("verify", "verify a scheme on realizable samples");
  ver_args.add_to(verify);
  verify->add_option("--scheme", ver_scheme, "scheme name (default: the class's scheme)");
  verify->add_flag("--exhaustive", exhaustive, "all realizable samples (seeded sampling above 12 vertices)");
  verify->add_option("--samples", ver_samples, "number of seeded random samples");
  verify->add_option("--sample-seed", sample_seed, "seed for random samples");

  GraphArgs vc_args;
  std::string vc_family = "balls";
  auto* vcdim = app.add_subcommand("vcdim", "VC-dimension of the balls of a graph");
  vc_args.add_to(vcdim);
  vcdim->add_option("--family", vc_family, "balls (all radii, or --radius r)");

  GraphArgs delta_args;
  auto* delta = app.add_subcommand("delta", "Gromov hyperbolicity");
  delta_args.add_to(delta, false);

  GraphArgs balls_args;
  auto* balls = app.add_subcommand("balls", "list the distinct balls");
  balls_args.add_to(balls);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*gen) {
      Instance in = gen_args.load();
      if (gen_out.empty())
        std::cout << serialize(in.graph);
      else
        write_file(gen_out, serialize(in.graph));
      if (!gen_intervals_out.empty() && in.intervals) write_file(gen_intervals_out, serialize(*in.intervals));
      if (!gen_rotation_out.empty() && in.rotation) write_file(gen_rotation_out, serialize(*in.rotation));
      return 0;
    }
    if (*compress) {
      Instance in = comp_args.load();
      auto s = make_scheme(scheme_or_default(comp_scheme, comp_args), GraphMetric(in.graph), comp_args.inputs(in));
      Sample X = parse_sample(read_file(comp_sample), in.graph.n());
      std::cout << s->compress(X).to_string() << '\n';
      return 0;
    }
    if (*reconstruct) {
      Instance in = rec_args.load();
      auto s = make_scheme(scheme_or_default(rec_scheme, rec_args), GraphMetric(in.graph), rec_args.inputs(in));
      std::string text = !rec_text.empty() ? rec_text : (!rec_file.empty() ? read_file(rec_file) : "");
      if (text.empty()) throw UsageError("give --compressed or --input");
      while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
      std::cout << s->reconstruct(CompressedSample::parse(text)).to_string() << '\n';
      return 0;
    }
    if (*verify) {
      Instance in = ver_args.load();
      auto s = make_scheme(scheme_or_default(ver_scheme, ver_args), GraphMetric(in.graph), ver_args.inputs(in));
      auto family = target_family(*s);
      auto samples = exhaustive ? enumerate_realizable_samples(in.graph.n(), family, ver_samples, sample_seed)
                                : random_realizable_samples(in.graph.n(), family, ver_samples, sample_seed);
      VerifyOptions opt = default_options(*s);
      opt.per_sample_approx = true;
      auto rep = verify_scheme(*s, samples, opt);
      std::cout << serialize(rep);
      return rep.passed() ? 0 : kExitFail;
    }
    if (*vcdim) {
      if (vc_family != "balls") throw UsageError("unknown family " + vc_family);
      Instance in = vc_args.load();
      GraphMetric gm(in.graph);
      std::cout << vc_dimension(enumerate_balls(gm.dist, vc_args.radius), gm.n()) << '\n';
      return 0;
    }
    if (*delta) {
      Instance in = delta_args.load();
      std::cout << hyperbolicity(GraphMetric(in.graph).dist).delta_string() << '\n';
      return 0;
    }
    if (*balls) {
      Instance in = balls_args.load();
      GraphMetric gm(in.graph);
      for (const Ball& b : enumerate_balls(gm.dist, balls_args.radius)) std::cout << b.to_string() << '\n';
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GraphError& e) {
    std::cerr << "invalid graph: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SchemeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::UnsupportedSpec ? kExitUsage : kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
