#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "handlewave/waves.hpp"

namespace handlewave {

namespace {

const Frac kZero{0, 1};
const Frac kOne{1, 1};
const Frac kThird{1, 3};
const Frac kTwoThirds{2, 3};

// Parameter range of a segment: A+ arcs carry global angles, everything
// else runs over (0,1).
Frac seg_lo(int seg) {
  if (seg == kAPlusArc1) return kThird;
  if (seg == kAPlusArc2) return kTwoThirds;
  return kZero;
}

Frac seg_hi(int seg) {
  if (seg == kAPlusArc0) return kThird;
  if (seg == kAPlusArc1) return kTwoThirds;
  return kOne;
}

struct CrossTest {
  bool cross = false;
  int sign = 0;
};

// Relative cyclic order of four distinct boundary points. Sign follows the
// closed-curve convention: +1 when b's tail appears between a's tail and
// head along the boundary walk.
CrossTest four_point(const Endpoint& a0, const Endpoint& a1,
                     const Endpoint& b0, const Endpoint& b1) {
  const Endpoint* pts[4] = {&a0, &a1, &b0, &b1};
  int rank[4] = {0, 0, 0, 0};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (walk_less(*pts[j], *pts[i])) ++rank[i];
    }
  }
  const auto rel = [&](int i) { return (rank[i] - rank[0] + 4) % 4; };
  const int head = rel(1);
  const bool in0 = rel(2) < head;
  const bool in1 = rel(3) < head;
  CrossTest out;
  out.cross = in0 != in1;
  out.sign = in0 ? 1 : -1;
  return out;
}

std::vector<const Endpoint*> endpoints_on_seg(const CurveSystem& sys,
                                              int seg) {
  std::vector<const Endpoint*> out;
  for (const Chord& ch : sys.chords) {
    for (int e = 0; e < 2; ++e) {
      if (ch.end[e].seg == seg) out.push_back(&ch.end[e]);
    }
  }
  return out;
}

}  // namespace

bool chords_cross(const Chord& a, const Chord& b) {
  return four_point(a.end[0], a.end[1], b.end[0], b.end[1]).cross;
}

std::vector<std::string> validate_route(const CurveSystem& sys,
                                        const ArcRoute& route,
                                        const std::string& base) {
  std::vector<std::string> out;
  const int k = static_cast<int>(route.chords.size());
  if (k == 0) {
    out.push_back("empty route");
    return out;
  }

  for (int i = 0; i < k; ++i) {
    for (int e = 0; e < 2; ++e) {
      const Endpoint& p = route.chords[i].end[e];
      if (p.seg < 0 || p.seg >= kSegmentCount) {
        out.push_back("route chord " + std::to_string(i) + ": bad segment");
        return out;
      }
      if (p.pos <= seg_lo(p.seg) || p.pos >= seg_hi(p.seg)) {
        out.push_back("route chord " + std::to_string(i) +
                      ": position outside segment range");
      }
      for (const Chord& ch : sys.chords) {
        if (ch.end[0] == p || ch.end[1] == p) {
          out.push_back("route chord " + std::to_string(i) +
                        " lands on an existing slot");
        }
      }
    }
  }
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      for (int e = 0; e < 2; ++e) {
        for (int f = 0; f < 2; ++f) {
          if (route.chords[i].end[e] == route.chords[j].end[f]) {
            out.push_back("route reuses a boundary point");
          }
        }
      }
    }
  }
  if (!out.empty()) return out;

  // Interior transitions pass through seam copies at equal parameters.
  for (int i = 0; i + 1 < k; ++i) {
    const Endpoint& p = route.chords[i].end[1];
    const Endpoint& q = route.chords[i + 1].end[0];
    if (!seg_is_seam(p.seg) || q.seg != seam_partner_seg(p.seg) ||
        !(q.pos == p.pos)) {
      out.push_back("route breaks at transition " + std::to_string(i));
    }
  }

  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (chords_cross(route.chords[i], route.chords[j])) {
        out.push_back("route crosses itself at chords " + std::to_string(i) +
                      " and " + std::to_string(j));
      }
    }
  }
  for (int i = 0; i < k; ++i) {
    for (int c = 0; c < static_cast<int>(sys.chords.size()); ++c) {
      if (sys.chords[c].curve != base) continue;
      if (chords_cross(route.chords[i], sys.chords[c])) {
        out.push_back("route chord " + std::to_string(i) +
                      " crosses base chord " + std::to_string(c));
      }
    }
  }

  // Arc ends sit immediately next to their attachment slots, approached
  // from the declared side.
  const auto check_attach = [&](const AttachPoint& at, const Endpoint& tip,
                                const char* which) {
    if (at.chord < 0 || at.chord >= static_cast<int>(sys.chords.size()) ||
        at.end < 0 || at.end > 1) {
      out.push_back(std::string(which) + " attachment out of range");
      return;
    }
    if (sys.chords[at.chord].curve != base) {
      out.push_back(std::string(which) + " attachment off the base curve");
      return;
    }
    const Endpoint& slot = sys.chords[at.chord].end[at.end];
    if (slot.seg != tip.seg) {
      out.push_back(std::string(which) + " attachment off its slot segment");
      return;
    }
    if (walk_less(slot, tip) != at.after) {
      out.push_back(std::string(which) +
                    " attachment approaches from the wrong side");
    }
    for (const Endpoint* q : endpoints_on_seg(sys, slot.seg)) {
      if (*q == slot) continue;
      const bool lo = walk_less(slot, tip) ? walk_less(slot, *q)
                                           : walk_less(*q, slot);
      const bool hi = walk_less(slot, tip) ? walk_less(*q, tip)
                                           : walk_less(tip, *q);
      if (lo && hi) {
        out.push_back(std::string(which) +
                      " attachment not adjacent to its slot");
        break;
      }
    }
  };
  check_attach(route.start, route.chords.front().end[0], "start");
  check_attach(route.finish, route.chords.back().end[1], "finish");

  return out;
}

int minimal_intersection(const CurveSystem& sys, const ArcRoute& arc,
                         const std::string& target, bool signed_count) {
  if (arc.start.chord < 0 ||
      arc.start.chord >= static_cast<int>(sys.chords.size())) {
    throw std::invalid_argument("minimal_intersection: bad attachment");
  }
  const std::string base = sys.chords[arc.start.chord].curve;
  const auto diags = validate_route(sys, arc, base);
  if (!diags.empty()) {
    throw std::invalid_argument("minimal_intersection: " + diags.front());
  }

  const Analysis a = analyze(sys);
  int total = 0;
  int total_signed = 0;
  for (const Chord& c : arc.chords) {
    for (int d = 0; d < static_cast<int>(sys.chords.size()); ++d) {
      if (sys.chords[d].curve != target) continue;
      const int f = a.chord_from_end[d];
      const CrossTest t = four_point(c.end[0], c.end[1],
                                     sys.chords[d].end[f],
                                     sys.chords[d].end[1 - f]);
      if (!t.cross) continue;
      ++total;
      total_signed += t.sign;
    }
  }
  return signed_count ? total_signed : total;
}

int FaceStructure::face_of_point(const Endpoint& p) const {
  const int m = static_cast<int>(slots.size());
  if (m == 0) return 0;
  for (const Endpoint& s : slots) {
    if (s == p) {
      throw std::logic_error("face_of_point: point collides with a slot");
    }
  }
  int idx = 0;
  while (idx < m && walk_less(slots[idx], p)) ++idx;
  return face_of_gap[(idx + m - 1) % m];
}

FaceStructure face_structure(const CurveSystem& sys,
                             const std::string& base) {
  FaceStructure fs;
  std::vector<EndpointRef> refs;
  std::vector<int> base_chords;
  for (int c = 0; c < static_cast<int>(sys.chords.size()); ++c) {
    if (sys.chords[c].curve != base) continue;
    base_chords.push_back(c);
    refs.push_back({c, 0});
    refs.push_back({c, 1});
  }
  if (refs.empty()) {
    throw std::invalid_argument("face_structure: unknown curve '" + base +
                                "'");
  }
  std::sort(refs.begin(), refs.end(),
            [&sys](const EndpointRef& x, const EndpointRef& y) {
              return walk_less(sys.chords[x.chord].end[x.end],
                               sys.chords[y.chord].end[y.end]);
            });
  const int m = static_cast<int>(refs.size());
  fs.slots.reserve(m);
  for (const EndpointRef& r : refs) {
    fs.slots.push_back(sys.chords[r.chord].end[r.end]);
  }

  // Gap signature: the set of base chords whose endpoints separate the gap
  // from gap m-1; equal signatures mean one face.
  std::vector<std::vector<int>> open(m);
  for (const int c : base_chords) {
    int u = -1, v = -1;
    for (int i = 0; i < m; ++i) {
      if (refs[i].chord != c) continue;
      (u < 0 ? u : v) = i;
    }
    for (int g = u; g < v; ++g) open[g].push_back(c);
  }
  std::map<std::vector<int>, int> face_of_signature;
  fs.face_of_gap.assign(m, -1);
  for (int g = 0; g < m; ++g) {
    const auto it = face_of_signature.find(open[g]);
    if (it != face_of_signature.end()) {
      fs.face_of_gap[g] = it->second;
    } else {
      fs.face_of_gap[g] = fs.face_count;
      face_of_signature.emplace(open[g], fs.face_count++);
    }
  }

  static constexpr int kSeamL[3] = {kSeam1L, kSeam2L, kSeam3L};
  static constexpr int kSeamR[3] = {kSeam1R, kSeam2R, kSeam3R};
  for (int s = 0; s < 3; ++s) {
    std::vector<Frac> params;
    for (const Endpoint& p : fs.slots) {
      if (p.seg == kSeamL[s]) params.push_back(p.pos);
    }
    std::sort(params.begin(), params.end());
    std::vector<Frac> bounds;
    bounds.push_back(kZero);
    bounds.insert(bounds.end(), params.begin(), params.end());
    bounds.push_back(kOne);
    for (int i = 0; i + 1 < static_cast<int>(bounds.size()); ++i) {
      FaceStructure::SeamPass pass;
      pass.seam = s;
      pass.lo = bounds[i];
      pass.hi = bounds[i + 1];
      const Frac midp = Frac::mid(pass.lo, pass.hi);
      pass.face_left = fs.face_of_point({kSeamL[s], midp});
      pass.face_right = fs.face_of_point({kSeamR[s], midp});
      fs.passes.push_back(pass);
    }
  }
  return fs;
}

}  // namespace handlewave
