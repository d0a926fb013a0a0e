#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>

#include "handlewave/heegaard.hpp"
#include "handlewave/waves.hpp"

namespace handlewave {

namespace {

const Frac kZero{0, 1};
const Frac kOne{1, 1};
const Frac kThird{1, 3};
const Frac kTwoThirds{2, 3};

Frac seg_lo_bound(int seg) {
  if (seg == kAPlusArc1) return kThird;
  if (seg == kAPlusArc2) return kTwoThirds;
  return kZero;
}

Frac seg_hi_bound(int seg) {
  if (seg == kAPlusArc0) return kThird;
  if (seg == kAPlusArc1) return kTwoThirds;
  return kOne;
}

struct PartnerMaps {
  // (circle id, angle) -> endpoint.
  std::map<std::pair<int, Frac>, EndpointRef> circle_point;
  // (seam index, side 0=L/1=R, param) -> endpoint.
  std::map<std::tuple<int, int, Frac>, EndpointRef> seam_point;
};

PartnerMaps build_partner_maps(const CurveSystem& sys) {
  PartnerMaps maps;
  for (int c = 0; c < static_cast<int>(sys.chords.size()); ++c) {
    for (int e = 0; e < 2; ++e) {
      const Endpoint& p = sys.chords[c].end[e];
      if (seg_is_seam(p.seg)) {
        const int side = seg_walk_ascending(p.seg) ? 0 : 1;
        maps.seam_point[{seam_index(p.seg), side, p.pos}] = {c, e};
      } else {
        const int circle = static_cast<int>(circle_of_seg(p.seg));
        maps.circle_point[{circle, p.pos}] = {c, e};
      }
    }
  }
  return maps;
}

EndpointRef step_partner(const PartnerMaps& maps, const Endpoint& p) {
  if (seg_is_seam(p.seg)) {
    const int side = seg_walk_ascending(p.seg) ? 1 : 0;
    const auto it = maps.seam_point.find({seam_index(p.seg), side, p.pos});
    if (it == maps.seam_point.end()) {
      throw std::logic_error("step_partner: unmatched seam point");
    }
    return it->second;
  }
  const int circle = static_cast<int>(partner_circle(circle_of_seg(p.seg)));
  const auto it = maps.circle_point.find({circle, p.pos});
  if (it == maps.circle_point.end()) {
    throw std::logic_error("step_partner: unmatched crossing");
  }
  return it->second;
}

int next_chord(const CurveSystem& sys, const PartnerMaps& maps,
               const Analysis& a, int c) {
  const Endpoint& exit = sys.chords[c].end[1 - a.chord_from_end[c]];
  return step_partner(maps, exit).chord;
}

// Signed crossing direction of the arc against the base curve at an
// attachment: +1 and -1 distinguish the two sides of the oriented base
// curve, with the arc oriented start to finish.
int attach_sign(const Analysis& a, const AttachPoint& at, bool is_start) {
  const int f = a.chord_from_end[at.chord];
  const bool gap_side = (at.end == 0) ? at.after : !at.after;
  const bool left = gap_side == (f == 1);
  const int raw = left ? -1 : 1;
  return is_start ? raw : -raw;
}

// Boundary point adjacent to the attachment slot on its declared side,
// strictly between the slot and its nearest occupied neighbor.
Endpoint make_virtual(const CurveSystem& sys, const AttachPoint& at,
                      std::vector<Endpoint>& used) {
  const Endpoint& slot = sys.chords[at.chord].end[at.end];
  const bool asc = seg_walk_ascending(slot.seg);
  const bool higher = asc == at.after;  // neighbor side in position terms
  std::optional<Frac> neighbor;
  const auto consider = [&](const Endpoint& q) {
    if (q.seg != slot.seg || q.pos == slot.pos) return;
    if (higher ? !(slot.pos < q.pos) : !(q.pos < slot.pos)) return;
    if (!neighbor || (higher ? q.pos < *neighbor : *neighbor < q.pos)) {
      neighbor = q.pos;
    }
  };
  for (const Chord& ch : sys.chords) {
    consider(ch.end[0]);
    consider(ch.end[1]);
  }
  for (const Endpoint& q : used) consider(q);
  const Frac limit =
      neighbor ? *neighbor
               : (higher ? seg_hi_bound(slot.seg) : seg_lo_bound(slot.seg));
  const Endpoint out{slot.seg, Frac::mid(slot.pos, limit)};
  used.push_back(out);
  return out;
}

// Free parameter inside (lo, hi) on a seam, clear of both copies.
Frac pick_seam_param(const CurveSystem& sys, const std::vector<Endpoint>& used,
                     int seg_l, int seg_r, const Frac& lo, const Frac& hi) {
  std::optional<Frac> first;
  const auto consider = [&](const Endpoint& q) {
    if (q.seg != seg_l && q.seg != seg_r) return;
    if (!(lo < q.pos) || !(q.pos < hi)) return;
    if (!first || q.pos < *first) first = q.pos;
  };
  for (const Chord& ch : sys.chords) {
    consider(ch.end[0]);
    consider(ch.end[1]);
  }
  for (const Endpoint& q : used) consider(q);
  return Frac::mid(lo, first ? *first : hi);
}

constexpr int kSeamLSeg[3] = {kSeam1L, kSeam2L, kSeam3L};
constexpr int kSeamRSeg[3] = {kSeam1R, kSeam2R, kSeam3R};

// Shortest face path between the two attachments, materialized as chords.
std::optional<ArcRoute> bfs_route(const CurveSystem& sys,
                                  const FaceStructure& fs,
                                  const AttachPoint& from,
                                  const AttachPoint& to) {
  std::vector<Endpoint> used;
  const Endpoint vp = make_virtual(sys, from, used);
  const Endpoint vq = make_virtual(sys, to, used);
  const int f0 = fs.face_of_point(vp);
  const int f1 = fs.face_of_point(vq);

  ArcRoute route;
  route.start = from;
  route.finish = to;
  if (f0 == f1) {
    route.chords.push_back({{vp, vq}, ""});
    return route;
  }

  const int np = static_cast<int>(fs.passes.size());
  std::vector<int> via(fs.face_count, -1);   // pass taken into the face
  std::vector<int> prev(fs.face_count, -1);  // face it was entered from
  std::vector<int> queue{f0};
  via[f0] = np;  // sentinel marking visited
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int f = queue[head];
    for (int i = 0; i < np; ++i) {
      const auto& pass = fs.passes[i];
      int other = -1;
      if (pass.face_left == f) other = pass.face_right;
      else if (pass.face_right == f) other = pass.face_left;
      if (other < 0 || via[other] != -1) continue;
      via[other] = i;
      prev[other] = f;
      queue.push_back(other);
    }
  }
  if (via[f1] == -1) return std::nullopt;

  std::vector<int> path;  // pass indices from start to finish
  for (int f = f1; f != f0; f = prev[f]) path.push_back(via[f]);
  std::reverse(path.begin(), path.end());

  Endpoint cur = vp;
  int face = f0;
  for (const int i : path) {
    const auto& pass = fs.passes[i];
    const bool from_left = pass.face_left == face;
    const int seg_in = from_left ? kSeamLSeg[pass.seam] : kSeamRSeg[pass.seam];
    const int seg_out = from_left ? kSeamRSeg[pass.seam] : kSeamLSeg[pass.seam];
    const Frac t = pick_seam_param(sys, used, kSeamLSeg[pass.seam],
                                   kSeamRSeg[pass.seam], pass.lo, pass.hi);
    used.push_back({seg_in, t});
    used.push_back({seg_out, t});
    route.chords.push_back({{cur, Endpoint{seg_in, t}}, ""});
    cur = {seg_out, t};
    face = from_left ? pass.face_right : pass.face_left;
  }
  route.chords.push_back({{cur, vq}, ""});
  return route;
}

struct CircleSlot {
  Frac angle;
  int chord = -1;
  int end = 0;
  int sign = 0;
};

std::vector<CircleSlot> slots_on_seg(const CurveSystem& sys,
                                     const Analysis& a,
                                     const std::string& curve, int seg) {
  std::vector<CircleSlot> out;
  for (int c = 0; c < static_cast<int>(sys.chords.size()); ++c) {
    if (sys.chords[c].curve != curve) continue;
    for (int e = 0; e < 2; ++e) {
      if (sys.chords[c].end[e].seg != seg) continue;
      out.push_back({sys.chords[c].end[e].pos, c, e, a.endpoint_sign[c][e]});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const CircleSlot& x, const CircleSlot& y) {
              return x.angle < y.angle;
            });
  return out;
}

// Arc alongside the disk boundary across one gap between adjacent slots;
// the wrap gap detours through the seam at the circle's foot.
ArcRoute vertical_route(const CurveSystem& sys,
                        const std::vector<CircleSlot>& slots, int gap,
                        int handle) {
  const int m = static_cast<int>(slots.size());
  const CircleSlot& u = slots[gap];
  const CircleSlot& v = slots[(gap + 1) % m];
  ArcRoute route;
  route.start = {u.chord, u.end, false};  // the gap lies above u in angle
  route.finish = {v.chord, v.end, true};  // and below v
  std::vector<Endpoint> used;
  const Endpoint vp = make_virtual(sys, route.start, used);
  const Endpoint vq = make_virtual(sys, route.finish, used);
  if (gap + 1 < m) {
    route.chords.push_back({{vp, vq}, ""});
    return route;
  }
  // Wrap gap: leave through the seam hanging at the foot, past every slot.
  const int seam = handle == 0 ? 0 : 2;
  Frac lo = kZero;
  for (const Chord& ch : sys.chords) {
    for (int e = 0; e < 2; ++e) {
      const Endpoint& p = ch.end[e];
      if ((p.seg == kSeamLSeg[seam] || p.seg == kSeamRSeg[seam]) &&
          lo < p.pos) {
        lo = p.pos;
      }
    }
  }
  const Frac t = Frac::mid(lo, kOne);
  route.chords.push_back({{vp, Endpoint{kSeamLSeg[seam], t}}, ""});
  route.chords.push_back({{Endpoint{kSeamRSeg[seam], t}, vq}, ""});
  return route;
}

// Unordered word pair, orientation-blind; used to compare surgery outcomes.
std::pair<CyclicWord, CyclicWord> outcome_key(const SurgeryResult& res) {
  const auto normal = [](const CyclicWord& w) {
    const CyclicWord rev{inverse_word(w.letters())};
    return std::min(w, rev);
  };
  CyclicWord x = normal(res.components[0].word);
  CyclicWord y = normal(res.components[1].word);
  if (y < x) std::swap(x, y);
  return {x, y};
}

Wave vertical_wave(const CurveSystem& sys, const Analysis& a,
                   const std::string& R) {
  // The disk the curve meets with both signs; the B side wins when both do.
  int handle = -1;
  for (int h : {1, 0}) {
    const int seg = h == 0 ? kAMinus : kBMinus;
    const auto slots = slots_on_seg(sys, a, R, seg);
    bool plus = false, minus = false;
    for (const CircleSlot& s : slots) (s.sign > 0 ? plus : minus) = true;
    if (plus && minus) {
      handle = h;
      break;
    }
  }
  if (handle < 0) {
    throw std::logic_error("vertical_wave: no mixed-sign disk");
  }
  const int seg = handle == 0 ? kAMinus : kBMinus;
  const auto slots = slots_on_seg(sys, a, R, seg);
  const int m = static_cast<int>(slots.size());
  std::vector<int> gaps;
  for (int i = 0; i < m; ++i) {
    if (slots[i].sign != slots[(i + 1) % m].sign) gaps.push_back(i);
  }
  if (gaps.empty()) throw std::logic_error("vertical_wave: no sign change");

  Wave wave;
  wave.kind = WaveKind::Vertical;
  wave.base_curve = R;
  wave.handle = handle;
  wave.candidate_gaps = static_cast<int>(gaps.size());
  wave.route = vertical_route(sys, slots, gaps.front(), handle);
  wave.attach_signs[0] = attach_sign(a, wave.route.start, true);
  wave.attach_signs[1] = attach_sign(a, wave.route.finish, false);

  // Uniqueness in the surgery outcome: every candidate gap must yield the
  // same pair of component words.
  wave.unique_candidate = true;
  const auto first_key = outcome_key(band_surgery(sys, R, wave.route));
  for (std::size_t i = 1; i < gaps.size(); ++i) {
    const ArcRoute other = vertical_route(sys, slots, gaps[i], handle);
    if (outcome_key(band_surgery(sys, R, other)) != first_key) {
      wave.unique_candidate = false;
      break;
    }
  }
  return wave;
}

// Slot angle of a strand end on the given circle.
Frac strand_angle(const CurveSystem& sys, const WhiteheadGraph& g, int strand,
                  CircleId on) {
  const EndpointRef ref[2] = {g.strands[strand].from, g.strands[strand].to};
  for (const EndpointRef& r : ref) {
    const Endpoint& p = sys.chords[r.chord].end[r.end];
    if (circle_of_seg(p.seg) == on) return p.pos;
  }
  throw std::logic_error("strand_angle: strand misses the circle");
}

Wave horizontal_wave(const CurveSystem& sys, const Analysis& a,
                     const WhiteheadGraph& g, const std::string& R) {
  const auto handle_class = [&](CircleId plus, CircleId minus,
                                const char* label) {
    int best = -1;
    for (int i = 0; i < static_cast<int>(g.classes.size()); ++i) {
      const auto& cls = g.classes[i];
      const bool match = (cls.ends[0] == plus && cls.ends[1] == minus) ||
                         (cls.ends[0] == minus && cls.ends[1] == plus);
      if (!match) continue;
      if (best < 0 || g.classes[best].strands.size() < cls.strands.size()) {
        best = i;
      }
    }
    if (best < 0) {
      throw std::invalid_argument(
          std::string("horizontal_wave: positive diagram lacks a ") + label +
          " edge");
    }
    return best;
  };
  const int cls_a =
      handle_class(CircleId::APlus, CircleId::AMinus, "A+A-");
  const int cls_b =
      handle_class(CircleId::BPlus, CircleId::BMinus, "B+B-");

  // Outermost strands of the band: extreme slot angles on the plus circle.
  const auto outer_strands = [&](int cls, CircleId on) {
    std::vector<int> strands = g.classes[cls].strands;
    std::sort(strands.begin(), strands.end(), [&](int x, int y) {
      return strand_angle(sys, g, x, on) < strand_angle(sys, g, y, on);
    });
    std::vector<int> out{strands.front()};
    if (strands.back() != strands.front()) out.push_back(strands.back());
    return out;
  };
  const auto strand_attach_points = [&](int strand) {
    std::vector<AttachPoint> out;
    for (const EndpointRef& r :
         {g.strands[strand].from, g.strands[strand].to}) {
      out.push_back({r.chord, r.end, false});
      out.push_back({r.chord, r.end, true});
    }
    return out;
  };

  const FaceStructure fs = face_structure(sys, R);
  for (const int sa : outer_strands(cls_a, CircleId::APlus)) {
    for (const int sb : outer_strands(cls_b, CircleId::BPlus)) {
      for (const AttachPoint& pa : strand_attach_points(sa)) {
        for (const AttachPoint& pb : strand_attach_points(sb)) {
          const int sp = attach_sign(a, pa, true);
          const int sq = attach_sign(a, pb, false);
          if (sp == sq) continue;
          const auto route = bfs_route(sys, fs, pa, pb);
          if (!route) continue;
          if (!validate_route(sys, *route, R).empty()) continue;
          Wave wave;
          wave.kind = WaveKind::Horizontal;
          wave.base_curve = R;
          wave.route = *route;
          wave.attach_signs[0] = sp;
          wave.attach_signs[1] = sq;
          return wave;
        }
      }
    }
  }
  throw std::invalid_argument(
      "horizontal_wave: no admissible arc between the handle edges");
}

}  // namespace

Wave find_distinguished_wave(const CurveSystem& sys, const std::string& R) {
  const WhiteheadGraph g = whitehead_graph(sys, R);
  const ConnectivityReport conn = connectivity_report(g);
  if (!conn.connected) {
    throw std::invalid_argument(
        "find_distinguished_wave: graph is disconnected");
  }
  if (!conn.cut_vertices.empty()) {
    throw std::invalid_argument(
        "find_distinguished_wave: graph has a cut vertex");
  }
  const Analysis a = analyze(sys);
  if (is_positive(g).positive) {
    return horizontal_wave(sys, a, g, R);
  }
  return vertical_wave(sys, a, R);
}

IntersectionCount wave_alpha_count(const CurveSystem& sys, const Wave& wave,
                                   const std::string& alpha) {
  const IntersectionCount base =
      curve_intersection(sys, wave.base_curve, alpha);
  if (base.unsigned_count != 0) {
    throw std::invalid_argument(
        "wave_alpha_count: target meets the base curve");
  }
  IntersectionCount out;
  out.unsigned_count = minimal_intersection(sys, wave.route, alpha, false);
  out.signed_count = minimal_intersection(sys, wave.route, alpha, true);
  return out;
}

SurgeryResult band_surgery(const CurveSystem& sys, const std::string& R,
                           const ArcRoute& wave) {
  {
    const auto diags = validate_route(sys, wave, R);
    if (!diags.empty()) {
      throw std::invalid_argument("band_surgery: " + diags.front());
    }
  }
  const Analysis a = analyze(sys);
  const PartnerMaps maps = build_partner_maps(sys);

  const int c_p = wave.start.chord;
  const int c_q = wave.finish.chord;
  if (c_p == c_q) {
    throw std::invalid_argument(
        "band_surgery: both attachments on one chord");
  }
  const int sp = attach_sign(a, wave.start, true);
  const int sq = attach_sign(a, wave.finish, false);
  if (sp == sq) {
    throw std::invalid_argument(
        "band_surgery: same-sign attachment is not a wave");
  }

  std::vector<int> cycle{c_p};
  for (int c = next_chord(sys, maps, a, c_p); c != c_p;
       c = next_chord(sys, maps, a, c)) {
    cycle.push_back(c);
  }
  const auto q_it = std::find(cycle.begin(), cycle.end(), c_q);
  if (q_it == cycle.end()) {
    throw std::invalid_argument(
        "band_surgery: attachments on different components");
  }
  const int q_pos = static_cast<int>(q_it - cycle.begin());

  const auto exit_slot = [&](int c) {
    return sys.chords[c].end[1 - a.chord_from_end[c]];
  };
  const auto entry_slot = [&](int c) {
    return sys.chords[c].end[a.chord_from_end[c]];
  };

  const int k = static_cast<int>(wave.chords.size());
  const auto spliced = [&](const Endpoint& from_p, const Endpoint& into_q) {
    std::vector<Chord> out;
    if (k == 1) {
      out.push_back({{from_p, into_q}, R});
      return out;
    }
    out.push_back({{from_p, wave.chords.front().end[1]}, R});
    for (int i = 1; i + 1 < k; ++i) {
      out.push_back({{wave.chords[i].end[0], wave.chords[i].end[1]}, R});
    }
    out.push_back({{wave.chords.back().end[0], into_q}, R});
    return out;
  };

  const auto build = [&](int lo, int hi, const Endpoint& from_p,
                         const Endpoint& into_q, int coherent_entry_end) {
    CurveSystem comp;
    for (const Chord& ch : sys.chords) {
      if (ch.curve != R) comp.chords.push_back(ch);
    }
    for (int i = lo; i < hi; ++i) {
      comp.chords.push_back(sys.chords[cycle[i]]);
    }
    const int first_spliced = static_cast<int>(comp.chords.size());
    for (const Chord& ch : spliced(from_p, into_q)) comp.chords.push_back(ch);

    for (const auto& pair : sys.transversal) {
      if (pair.first != R && pair.second != R) comp.transversal.insert(pair);
    }
    std::set<std::string> met;
    for (const Chord& ch : comp.chords) {
      if (ch.curve == R || met.count(ch.curve)) continue;
      for (const Chord& mine : comp.chords) {
        if (mine.curve != R) continue;
        if (chords_cross(mine, ch)) {
          met.insert(ch.curve);
          break;
        }
      }
    }
    for (const std::string& o : met) mark_transversal(comp, R, o);

    const auto diags = validate(comp);
    if (!diags.empty()) {
      throw std::logic_error("band_surgery: invalid component: " +
                             diags.front());
    }
    SurgeryComponent out;
    out.system = std::move(comp);
    // Orient the word along the base curve's own direction: the traversal
    // coherent with it enters the first spliced chord at a known end.
    const Analysis ca = analyze(out.system);
    Word raw = ca.raw_words[ca.component_of_curve.at(R)];
    if (ca.chord_from_end[first_spliced] != coherent_entry_end) {
      raw = inverse_word(raw);
    }
    out.word = CyclicWord(raw);
    out.wave_traversals = 1;
    return out;
  };

  SurgeryResult res;
  // The first component runs the wave backward, so the coherent traversal
  // enters its spliced chord at the attachment's far end; the second runs
  // it forward and enters at the slot end.
  res.components[0] =
      build(1, q_pos, exit_slot(c_p), entry_slot(c_q), 1);
  res.components[1] = build(q_pos + 1, static_cast<int>(cycle.size()),
                            entry_slot(c_p), exit_slot(c_q), 0);
  return res;
}

std::vector<MeridianCandidate> meridian_candidates(
    const CurveSystem& sys, const std::string& R,
    std::vector<std::string>* diagnostics) {
  const Wave wave = find_distinguished_wave(sys, R);
  const SurgeryResult res = band_surgery(sys, R, wave.route);
  const CyclicWord r_word = extract_words(sys).at(R);
  const CyclicWord r_inv{inverse_word(r_word.letters())};

  std::vector<MeridianCandidate> out;
  for (const SurgeryComponent& comp : res.components) {
    if (comp.word == r_word || comp.word == r_inv) {
      if (diagnostics) {
        diagnostics->push_back("component word " + to_string(comp.word) +
                               " matches the base curve; dropped");
      }
      continue;
    }
    MeridianCandidate cand;
    cand.word = comp.word;
    cand.system = comp.system;
    cand.homology = homology_check(comp.word);
    cand.wave_traversals = comp.wave_traversals;
    out.push_back(std::move(cand));
  }
  if (out.empty() && diagnostics) {
    diagnostics->push_back(
        "every surgery component matches the base curve word");
  }
  return out;
}

}  // namespace handlewave
