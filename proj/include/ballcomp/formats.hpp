#pragma once

#include <stdexcept>
#include <string>

#include "ballcomp/graph.hpp"
#include "ballcomp/interval_scheme.hpp"
#include "ballcomp/planar_scheme.hpp"
#include "ballcomp/sample.hpp"
#include "ballcomp/verify.hpp"

namespace ballcomp {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& msg)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// "n m" header, then m lines "u v".
Graph parse_graph(const std::string& text);
std::string serialize(const Graph& g);

// Lines "+ v" / "- v"; omitted vertices are 0.
Sample parse_sample(const std::string& text, int n);
std::string serialize(const Sample& X);

// Per vertex "v: n1 n2 ..." in clockwise order.
RotationSystem parse_rotation(const std::string& text, int n);
std::string serialize(const RotationSystem& rot);

// Per vertex "v s e"; rationals as "p/q" or decimals.
IntervalRepresentation parse_intervals(const std::string& text);
std::string serialize(const IntervalRepresentation& rep);

// Header line of a report; failure lines are kept as reasons only.
VerificationReport parse_report(const std::string& text);
std::string serialize(const VerificationReport& r);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace ballcomp
