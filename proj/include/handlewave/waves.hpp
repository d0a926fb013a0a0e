#pragma once

#include <string>
#include <vector>

#include "handlewave/curve_system.hpp"
#include "handlewave/word.hpp"

namespace handlewave {

// A point on a named curve where an arc attaches: on the given chord,
// next to the chosen endpoint slot, approached from the walk-after or
// walk-before side of that slot.
struct AttachPoint {
  int chord = -1;
  int end = 0;
  bool after = false;
};

// An embedded arc: chords ordered along the arc, end[0] of the first chord
// standing in for the start attachment, end[1] of the last for the finish.
// Consecutive chords connect through seam copies at equal parameters.
struct ArcRoute {
  std::vector<Chord> chords;
  AttachPoint start;
  AttachPoint finish;
};

bool chords_cross(const Chord& a, const Chord& b);

// Empty iff the route is embeddable: chords chain through seams, avoid all
// existing slots, never cross the base curve or themselves, and the arc
// ends sit immediately next to their attachment slots.
std::vector<std::string> validate_route(const CurveSystem& sys,
                                        const ArcRoute& route,
                                        const std::string& base);

// Geometric (or algebraic) intersection number of the arc with the named
// curve: chord-pair interleavings inside the cut-open disk.
int minimal_intersection(const CurveSystem& sys, const ArcRoute& arc,
                         const std::string& target, bool signed_count);

// Complement structure of one curve's chords in the cut-open disk: which
// face each boundary gap belongs to, plus the seam intervals an arc can
// pass through and the faces on their two sides.
struct FaceStructure {
  std::vector<Endpoint> slots;  // the curve's endpoints in walk order
  std::vector<int> face_of_gap;  // gap i lies between slots i and i+1 (mod n)
  int face_count = 0;
  struct SeamPass {
    int seam;
    Frac lo, hi;     // free parameter interval on both copies
    int face_left;   // face touching the ascending copy
    int face_right;  // face touching the descending copy
  };
  std::vector<SeamPass> passes;

  int face_of_point(const Endpoint& p) const;
};

FaceStructure face_structure(const CurveSystem& sys, const std::string& base);

enum class WaveKind { Vertical, Horizontal };

struct Wave {
  WaveKind kind;
  std::string base_curve;
  ArcRoute route;
  // Signed crossing directions of the arc ends against the base curve's
  // orientation; a wave requires them opposite.
  int attach_signs[2] = {0, 0};
  int handle = -1;          // vertical: 0 = A side, 1 = B side
  int candidate_gaps = 0;   // vertical: adjacent opposite-sign slot pairs
  bool unique_candidate = false;
};

// Locate the distinguished wave: the hypothesis is a connected, cut-vertex
// free diagram. Nonpositive diagrams get the vertical wave along the
// mixed-sign disk boundary; positive diagrams get the horizontal wave from
// an A+A- edge to a B+B- edge.
Wave find_distinguished_wave(const CurveSystem& sys, const std::string& R);

IntersectionCount wave_alpha_count(const CurveSystem& sys, const Wave& wave,
                                   const std::string& alpha);

struct SurgeryComponent {
  CurveSystem system;  // the original system with the base curve replaced
  CyclicWord word;
  int wave_traversals = 1;
};

struct SurgeryResult {
  SurgeryComponent components[2];
};

// Cuts the base curve at the two attachment points and splices both sides
// with the arc, producing the two non-parallel boundary components of a
// neighborhood of curve-plus-arc.
SurgeryResult band_surgery(const CurveSystem& sys, const std::string& R,
                           const ArcRoute& wave);

struct MeridianCandidate {
  CyclicWord word;
  CurveSystem system;
  HomologyVerdict homology;
  int wave_traversals = 1;
};

// Surgery along the distinguished wave, dropping components whose word
// matches the base curve's (up to inversion).
std::vector<MeridianCandidate> meridian_candidates(
    const CurveSystem& sys, const std::string& R,
    std::vector<std::string>* diagnostics = nullptr);

}  // namespace handlewave
