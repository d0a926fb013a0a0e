#pragma once

#include <string>
#include <vector>

#include "handlewave/curve_system.hpp"
#include "handlewave/word.hpp"

namespace handlewave {

// Embeds a closed curve into the system from a crossing plan: letters[i] is
// the i-th disk crossing along the curve, placed at angles[i] on the matching
// circle pair (A-crossings pick their A+ arc from the angle value). The
// strand between consecutive crossings is routed through the complement of
// the chords already present, detouring across seams where the face
// structure demands it; shortest detour wins, ties broken by seam pass
// order, so the result is deterministic.
//
// Throws std::invalid_argument when a crossing angle collides with an
// existing slot, a strand admits no noncrossing route, or the finished
// system fails validation.
void add_planned_curve(CurveSystem& sys, const std::string& curve,
                       const Word& letters, const std::vector<Frac>& angles);

// Evenly spaced angles strictly inside (lo, hi), in ascending order.
std::vector<Frac> spread_angles(const Frac& lo, const Frac& hi, int count);

}  // namespace handlewave
