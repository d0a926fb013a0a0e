#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "handlewave/frac.hpp"
#include "handlewave/word.hpp"

namespace handlewave {

// Boundary segments of the cut-open disk, in cyclic walk order. The four
// circles A+, A-, B+, B- bound the 4-holed sphere; three seams (s1 from A-,
// s2 from B+, s3 from B- to the outer circle A+) cut it to a disk whose
// boundary consists of these twelve segments. The seam feet split A+ into
// three arcs at angles 0 (s1), 1/3 (s2), 2/3 (s3); the other circles keep a
// single foot at angle 0.
enum Seg : int {
  kAPlusArc0 = 0,
  kSeam2L = 1,
  kBPlus = 2,
  kSeam2R = 3,
  kAPlusArc1 = 4,
  kSeam3L = 5,
  kBMinus = 6,
  kSeam3R = 7,
  kAPlusArc2 = 8,
  kSeam1L = 9,
  kAMinus = 10,
  kSeam1R = 11,
};

constexpr int kSegmentCount = 12;

enum class CircleId : int { APlus, AMinus, BPlus, BMinus };

constexpr bool seg_is_seam(int seg) { return seg % 2 == 1; }
constexpr bool seg_is_circle(int seg) { return seg % 2 == 0; }

// 0 for s1, 1 for s2, 2 for s3.
int seam_index(int seg);
int seam_partner_seg(int seg);

CircleId circle_of_seg(int seg);
CircleId partner_circle(CircleId c);

// Walk direction of the disk boundary along the segment: true means the
// segment's position coordinate increases along the walk.
bool seg_walk_ascending(int seg);

// Segment holding a crossing of the given circle at the given angle.
// Angles must avoid the seam feet (0 on every circle, plus 1/3 and 2/3
// on A+).
int circle_seg_at(CircleId c, const Frac& angle);

const char* seg_name(int seg);
int seg_from_name(const std::string& name);

// Letter emitted when a traversal jumps across a handle from circle `from`
// to its partner: A- to A+ emits A, B- to B+ emits B, the reverse jumps
// emit the inverses.
Letter glue_letter(CircleId from);

struct Endpoint {
  int seg = 0;
  Frac pos;  // circle angle or seam parameter, strictly inside (0, 1)

  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

// Walk rank within a segment respects seg_walk_ascending.
bool walk_less(const Endpoint& x, const Endpoint& y);

struct Chord {
  Endpoint end[2];
  std::string curve;

  friend bool operator==(const Chord&, const Chord&) = default;
};

// A multi-curve in normal position: noncrossing chords on the cut-open
// disk, seam copies matched by equal parameter, handle copies matched by
// equal angle. Named curve pairs listed in `transversal` are allowed to
// cross each other; every other interleaving is a validation error.
struct CurveSystem {
  std::vector<Chord> chords;
  std::set<std::pair<std::string, std::string>> transversal;

  friend bool operator==(const CurveSystem&, const CurveSystem&) = default;
};

void mark_transversal(CurveSystem& sys, const std::string& c1,
                      const std::string& c2);
bool is_transversal(const CurveSystem& sys, const std::string& c1,
                    const std::string& c2);

// Empty iff the system is valid.
std::vector<std::string> validate(const CurveSystem& sys);

// Rewrites all positions to canonical fractions and sorts the chord list;
// the combinatorial structure is unchanged. Requires a valid system.
CurveSystem canonicalize(const CurveSystem& sys);

struct EndpointRef {
  int chord = -1;
  int end = 0;

  friend bool operator==(const EndpointRef&, const EndpointRef&) = default;
  friend auto operator<=>(const EndpointRef&, const EndpointRef&) = default;
};

// One maximal arc of a curve between two disk crossings: a chain of chords
// joined across seams. Endpoints lie on circle segments.
struct Strand {
  EndpointRef from;
  EndpointRef to;
  std::vector<int> chord_path;  // chords traversed, in order from `from`
};

// Traversal-derived data for a valid system.
struct Analysis {
  int component_count = 0;
  std::vector<int> component_of_chord;
  std::map<std::string, int> component_of_curve;
  std::vector<Word> raw_words;          // per component, canonical start
  std::vector<bool> raw_word_reduced;   // cyclically reduced as traversed
  // End index the canonical traversal hops from, per chord.
  std::vector<int> chord_from_end;
  // Sign of the disk crossing at each circle endpoint, with respect to the
  // canonical traversal orientation of its component: +1 where the
  // traversal emits an uppercase letter. Indexed [chord][end]; 0 for seam
  // endpoints.
  std::vector<std::array<int, 2>> endpoint_sign;
  std::vector<Strand> strands;
  std::vector<std::array<int, 2>> strand_of_endpoint;  // -1 for seam ends
};

Analysis analyze(const CurveSystem& sys);

// Words of all named curves. Throws on an invalid system; appends a
// diagnostic when a raw traversal word needed a nontrivial reduction.
std::map<std::string, CyclicWord> extract_words(const CurveSystem& sys);
std::map<std::string, CyclicWord> extract_words(
    const CurveSystem& sys, std::vector<std::string>& diagnostics);

struct StrandCounts {
  std::map<std::pair<std::string, std::string>, int> per_class;
  int through_handle_A = 0;
  int through_handle_B = 0;
};

StrandCounts strand_counts(const CurveSystem& sys, const std::string& curve);

// Keeps only the named curves, dropping everything else.
CurveSystem subsystem(const CurveSystem& sys,
                      const std::set<std::string>& keep);

// Geometric (and signed) intersection number of two named curves, counted
// as chord interleavings.
struct IntersectionCount {
  int unsigned_count = 0;
  int signed_count = 0;
};

IntersectionCount curve_intersection(const CurveSystem& sys,
                                     const std::string& curve1,
                                     const std::string& curve2);

// Component id per chord from glue connectivity alone; ignores curve names.
std::vector<int> component_partition(const CurveSystem& sys);

// Canonical JSON form; parse(serialize(x)) == canonicalize(x) bit-exactly.
std::string to_json(const CurveSystem& sys);
CurveSystem curve_system_from_json(const std::string& text);

}  // namespace handlewave
