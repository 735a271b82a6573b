#ifndef PLANEFLOW_PFN_IO_HPP
#define PLANEFLOW_PFN_IO_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "planeflow/plane_graph.hpp"

namespace planeflow {

/// Syntax error in a pfn document. Semantic problems (bad rotations, Euler
/// failures, ...) surface as GraphError subclasses from PlaneGraph::build.
struct ParseError : std::runtime_error {
  int line = 0;
  int column = 0;
  ParseError(int line_, int column_, const std::string &what_)
      : std::runtime_error("line " + std::to_string(line_) + ":" +
                           std::to_string(column_) + ": " + what_),
        line(line_),
        column(column_) {}
};

/// Line-oriented "pfn 1" document:
///   pfn 1
///   n m
///   s t
///   arc <id> <tail> <head> [capacity]     (m lines, dense ids 0..m-1)
///   rot <v> <end>...                      (n lines, ends are <arc>T / <arc>H, CCW)
///   outer <arcid> <L|R>                   (omitted when m = 0)
/// '#' starts a comment anywhere on a line.
PlaneGraph parse_pfn(std::string_view text);

std::string serialize_pfn(const PlaneGraph &g);

/// Structural equality: same counts, arcs, capacities, terminals, outer face
/// and identical rotation sequences.
bool graphs_equal(const PlaneGraph &a, const PlaneGraph &b);

}  // namespace planeflow

#endif  // PLANEFLOW_PFN_IO_HPP
