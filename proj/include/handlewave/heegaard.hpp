#pragma once

#include <array>
#include <string>
#include <vector>

#include "handlewave/curve_system.hpp"

namespace handlewave {

// The 4-vertex graph of a curve's disk crossings: vertices are the four
// circles, edges are the strands between consecutive crossings, grouped
// into bands of parallel strands.
struct GraphEdgeClass {
  CircleId ends[2];
  std::vector<int> strands;  // indices into WhiteheadGraph::strands
  std::array<int, 2> signs_at_ends;  // crossing signs seen at ends[0], ends[1]
};

struct WhiteheadGraph {
  std::string curve;
  std::vector<Strand> strands;
  std::vector<std::array<CircleId, 2>> strand_ends;
  std::vector<std::array<int, 2>> strand_signs;
  std::vector<GraphEdgeClass> classes;
  // Class indices in angular order around each vertex (indexed by CircleId).
  std::array<std::vector<int>, 4> cyclic_order;
  std::array<int, 4> degree = {0, 0, 0, 0};
};

WhiteheadGraph whitehead_graph(const CurveSystem& sys, const std::string& curve);

// Orientation witness: inverting the listed generators (or the whole curve)
// rewrites the cyclic word with positive letters only.
struct PositivityWitness {
  bool positive = false;
  int sign_A = 0;  // common crossing sign on the A handle, 0 if no crossings
  int sign_B = 0;
  bool invert_A = false;
  bool invert_B = false;
};

PositivityWitness is_positive(const WhiteheadGraph& g);

struct ConnectivityReport {
  bool connected = false;
  std::vector<CircleId> cut_vertices;
};

ConnectivityReport connectivity_report(const WhiteheadGraph& g);

enum class GraphType {
  TypeA,
  TypeB,
  TypeC_disconnected,
  TypeC_cutvertex,
};

struct GraphClassification {
  GraphType kind;
  std::string detail;
};

// TypeC iff disconnected or has a cut vertex. Clean graphs split by the
// embedded pattern: TypeA carries direct edges across both handles,
// TypeB across at most one.
GraphClassification classify_graph_type(const WhiteheadGraph& g);

const char* circle_name(CircleId c);
const char* graph_type_name(GraphType t);

std::string graph_to_json(const WhiteheadGraph& g);

}  // namespace handlewave
