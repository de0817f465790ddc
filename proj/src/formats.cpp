#include "ballcomp/formats.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace ballcomp {

namespace {

struct Token {
  std::string text;
  int line;
  int column;
};

// Non-empty lines of tokens with '#' comments removed.
std::vector<std::vector<Token>> tokenize(const std::string& text) {
  std::vector<std::vector<Token>> lines;
  std::istringstream in(text);
  std::string line;
  int ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::vector<Token> toks;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i >= line.size()) break;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      toks.push_back({line.substr(i, j - i), ln, static_cast<int>(i) + 1});
      i = j;
    }
    if (!toks.empty()) lines.push_back(std::move(toks));
  }
  return lines;
}

long long to_int(const Token& t) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(t.text, &used);
  } catch (const std::exception&) {
    throw ParseError(t.line, t.column, "expected an integer, got '" + t.text + "'");
  }
  if (used != t.text.size()) throw ParseError(t.line, t.column, "expected an integer, got '" + t.text + "'");
  return v;
}

Vertex to_vertex(const Token& t, int n) {
  long long v = to_int(t);
  if (v < 0 || v >= n) throw ParseError(t.line, t.column, "vertex " + t.text + " out of range");
  return static_cast<Vertex>(v);
}

void expect_count(const std::vector<Token>& l, std::size_t k, const char* what) {
  if (l.size() != k) {
    const Token& t = l.size() > k ? l[k] : l.back();
    throw ParseError(t.line, t.column, std::string("expected ") + what);
  }
}

int end_line(const std::string& text) {
  return static_cast<int>(std::count(text.begin(), text.end(), '\n')) + 1;
}

}  // namespace

Graph parse_graph(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(end_line(text), 1, "missing header 'n m'");
  expect_count(lines[0], 2, "header 'n m'");
  long long n = to_int(lines[0][0]), m = to_int(lines[0][1]);
  if (n < 1) throw ParseError(lines[0][0].line, lines[0][0].column, "n must be positive");
  if (m < 0) throw ParseError(lines[0][1].line, lines[0][1].column, "m must be nonnegative");
  if (static_cast<long long>(lines.size()) - 1 != m)
    throw ParseError(lines.back().back().line, 1,
                     "expected " + std::to_string(m) + " edge lines, found " + std::to_string(lines.size() - 1));
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    expect_count(lines[i], 2, "edge 'u v'");
    edges.push_back({to_vertex(lines[i][0], static_cast<int>(n)), to_vertex(lines[i][1], static_cast<int>(n))});
  }
  try {
    return Graph(static_cast<int>(n), edges);
  } catch (const GraphError& e) {
    throw ParseError(lines[0][0].line, 1, e.what());
  }
}

std::string serialize(const Graph& g) {
  std::ostringstream os;
  os << g.n() << ' ' << g.m() << '\n';
  for (auto [a, b] : g.edges()) os << a << ' ' << b << '\n';
  return os.str();
}

Sample parse_sample(const std::string& text, int n) {
  Sample X(n);
  for (const auto& l : tokenize(text)) {
    expect_count(l, 2, "'+ v' or '- v'");
    if (l[0].text != "+" && l[0].text != "-") throw ParseError(l[0].line, l[0].column, "sign must be + or -");
    Vertex v = to_vertex(l[1], n);
    if (X.in_support(v)) throw ParseError(l[1].line, l[1].column, "vertex listed twice");
    X.set(v, l[0].text == "+" ? Sign::Pos : Sign::Neg);
  }
  return X;
}

std::string serialize(const Sample& X) {
  std::ostringstream os;
  for (Vertex v = 0; v < X.n(); ++v)
    if (X.in_support(v)) os << (X.pos(v) ? '+' : '-') << ' ' << v << '\n';
  return os.str();
}

RotationSystem parse_rotation(const std::string& text, int n) {
  RotationSystem rot;
  rot.order.assign(n, {});
  std::vector<bool> seen(n, false);
  for (const auto& l : tokenize(text)) {
    Token head = l[0];
    if (head.text.empty() || head.text.back() != ':') throw ParseError(head.line, head.column, "expected 'v:'");
    head.text.pop_back();
    Vertex v = to_vertex(head, n);
    if (seen[v]) throw ParseError(head.line, head.column, "vertex listed twice");
    seen[v] = true;
    for (std::size_t i = 1; i < l.size(); ++i) rot.order[v].push_back(to_vertex(l[i], n));
  }
  return rot;
}

std::string serialize(const RotationSystem& rot) {
  std::ostringstream os;
  for (Vertex v = 0; v < rot.n(); ++v) {
    os << v << ':';
    for (Vertex w : rot.order[v]) os << ' ' << w;
    os << '\n';
  }
  return os.str();
}

IntervalRepresentation parse_intervals(const std::string& text) {
  auto lines = tokenize(text);
  IntervalRepresentation rep;
  rep.segments.resize(lines.size());
  std::vector<bool> seen(lines.size(), false);
  for (const auto& l : lines) {
    expect_count(l, 3, "'v s e'");
    Vertex v = to_vertex(l[0], static_cast<int>(lines.size()));
    if (seen[v]) throw ParseError(l[0].line, l[0].column, "vertex listed twice");
    seen[v] = true;
    for (int k = 1; k <= 2; ++k) {
      try {
        (k == 1 ? rep.segments[v].first : rep.segments[v].second) = parse_rational(l[k].text);
      } catch (const std::exception&) {
        throw ParseError(l[k].line, l[k].column, "bad rational '" + l[k].text + "'");
      }
    }
  }
  return rep;
}

std::string serialize(const IntervalRepresentation& rep) {
  std::ostringstream os;
  for (Vertex v = 0; v < rep.n(); ++v) os << v << ' ' << to_string(rep.s(v)) << ' ' << to_string(rep.e(v)) << '\n';
  return os.str();
}

VerificationReport parse_report(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, 1, "empty report");
  VerificationReport r;
  bool have[4] = {};
  for (const auto& t : lines[0]) {
    auto eq = t.text.find('=');
    if (eq == std::string::npos) throw ParseError(t.line, t.column, "expected key=value");
    std::string key = t.text.substr(0, eq);
    Token val{t.text.substr(eq + 1), t.line, t.column + static_cast<int>(eq) + 1};
    if (key == "scheme") {
      r.scheme_id = val.text;
      have[0] = true;
    } else if (key == "samples") {
      r.samples = static_cast<std::size_t>(to_int(val));
      have[1] = true;
    } else if (key == "failures") {
      r.failure_count = static_cast<std::size_t>(to_int(val));
      have[2] = true;
    } else if (key == "max_support") {
      r.max_support = static_cast<std::size_t>(to_int(val));
      have[3] = true;
    } else if (key != "approx") {
      throw ParseError(t.line, t.column, "unknown key '" + key + "'");
    }
  }
  for (bool h : have)
    if (!h) throw ParseError(lines[0][0].line, 1, "report header incomplete");
  return r;
}

std::string serialize(const VerificationReport& r) { return r.to_string(); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace ballcomp
