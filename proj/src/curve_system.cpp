#include "handlewave/curve_system.hpp"

#include <algorithm>
#include <stdexcept>

namespace handlewave {

namespace {

const Frac kThird{1, 3};
const Frac kTwoThirds{2, 3};
const Frac kZero{0, 1};
const Frac kOne{1, 1};

}  // namespace

std::string to_string(const Frac& f) {
  return std::to_string(f.num) + "/" + std::to_string(f.den);
}

Frac parse_frac(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    return Frac(std::stoll(text));
  }
  return Frac(std::stoll(text.substr(0, slash)),
              std::stoll(text.substr(slash + 1)));
}

int seam_index(int seg) {
  switch (seg) {
    case kSeam1L:
    case kSeam1R: return 0;
    case kSeam2L:
    case kSeam2R: return 1;
    case kSeam3L:
    case kSeam3R: return 2;
    default: throw std::invalid_argument("seam_index: not a seam segment");
  }
}

int seam_partner_seg(int seg) {
  switch (seg) {
    case kSeam1L: return kSeam1R;
    case kSeam1R: return kSeam1L;
    case kSeam2L: return kSeam2R;
    case kSeam2R: return kSeam2L;
    case kSeam3L: return kSeam3R;
    case kSeam3R: return kSeam3L;
    default: throw std::invalid_argument("seam_partner_seg: not a seam");
  }
}

CircleId circle_of_seg(int seg) {
  switch (seg) {
    case kAPlusArc0:
    case kAPlusArc1:
    case kAPlusArc2: return CircleId::APlus;
    case kAMinus: return CircleId::AMinus;
    case kBPlus: return CircleId::BPlus;
    case kBMinus: return CircleId::BMinus;
    default: throw std::invalid_argument("circle_of_seg: not a circle segment");
  }
}

CircleId partner_circle(CircleId c) {
  switch (c) {
    case CircleId::APlus: return CircleId::AMinus;
    case CircleId::AMinus: return CircleId::APlus;
    case CircleId::BPlus: return CircleId::BMinus;
    case CircleId::BMinus: return CircleId::BPlus;
  }
  throw std::invalid_argument("partner_circle");
}

bool seg_walk_ascending(int seg) {
  switch (seg) {
    case kAPlusArc0:
    case kAPlusArc1:
    case kAPlusArc2:
    case kBPlus:
    case kSeam1L:
    case kSeam2L:
    case kSeam3L: return true;
    default: return false;
  }
}

int circle_seg_at(CircleId c, const Frac& angle) {
  if (angle <= kZero || angle >= kOne) {
    throw std::invalid_argument("circle_seg_at: angle outside (0,1)");
  }
  switch (c) {
    case CircleId::APlus:
      if (angle == kThird || angle == kTwoThirds) {
        throw std::invalid_argument("circle_seg_at: angle at a seam foot");
      }
      if (angle < kThird) return kAPlusArc0;
      if (angle < kTwoThirds) return kAPlusArc1;
      return kAPlusArc2;
    case CircleId::AMinus: return kAMinus;
    case CircleId::BPlus: return kBPlus;
    case CircleId::BMinus: return kBMinus;
  }
  throw std::invalid_argument("circle_seg_at");
}

const char* seg_name(int seg) {
  static constexpr const char* names[kSegmentCount] = {
      "A+0", "s2L", "B+", "s2R", "A+1", "s3L",
      "B-",  "s3R", "A+2", "s1L", "A-",  "s1R"};
  if (seg < 0 || seg >= kSegmentCount) {
    throw std::invalid_argument("seg_name: bad segment");
  }
  return names[seg];
}

int seg_from_name(const std::string& name) {
  for (int seg = 0; seg < kSegmentCount; ++seg) {
    if (name == seg_name(seg)) return seg;
  }
  throw std::invalid_argument("seg_from_name: unknown segment '" + name + "'");
}

Letter glue_letter(CircleId from) {
  switch (from) {
    case CircleId::AMinus: return Letter::A;
    case CircleId::APlus: return Letter::a;
    case CircleId::BMinus: return Letter::B;
    case CircleId::BPlus: return Letter::b;
  }
  throw std::invalid_argument("glue_letter");
}

bool walk_less(const Endpoint& x, const Endpoint& y) {
  if (x.seg != y.seg) return x.seg < y.seg;
  return seg_walk_ascending(x.seg) ? x.pos < y.pos : y.pos < x.pos;
}

void mark_transversal(CurveSystem& sys, const std::string& c1,
                      const std::string& c2) {
  if (c1 == c2) {
    throw std::invalid_argument("mark_transversal: identical curves");
  }
  sys.transversal.insert(c1 < c2 ? std::make_pair(c1, c2)
                                 : std::make_pair(c2, c1));
}

bool is_transversal(const CurveSystem& sys, const std::string& c1,
                    const std::string& c2) {
  const auto key =
      c1 < c2 ? std::make_pair(c1, c2) : std::make_pair(c2, c1);
  return sys.transversal.count(key) > 0;
}

namespace {

const Endpoint& endpoint(const CurveSystem& sys, const EndpointRef& r) {
  return sys.chords[r.chord].end[r.end];
}

// Linearized walk order over the whole disk boundary.
bool global_less(const CurveSystem& sys, const EndpointRef& x,
                 const EndpointRef& y) {
  const Endpoint& ex = endpoint(sys, x);
  const Endpoint& ey = endpoint(sys, y);
  if (ex == ey) return x < y;
  return walk_less(ex, ey);
}

std::vector<EndpointRef> all_endpoints_sorted(const CurveSystem& sys) {
  std::vector<EndpointRef> out;
  out.reserve(sys.chords.size() * 2);
  for (int c = 0; c < static_cast<int>(sys.chords.size()); ++c) {
    out.push_back({c, 0});
    out.push_back({c, 1});
  }
  std::sort(out.begin(), out.end(),
            [&sys](const EndpointRef& x, const EndpointRef& y) {
              return global_less(sys, x, y);
            });
  return out;
}

// Rank of every endpoint in the linearized boundary order.
std::vector<std::array<int, 2>> endpoint_ranks(const CurveSystem& sys) {
  std::vector<std::array<int, 2>> rank(sys.chords.size(), {0, 0});
  const auto sorted = all_endpoints_sorted(sys);
  for (int i = 0; i < static_cast<int>(sorted.size()); ++i) {
    rank[sorted[i].chord][sorted[i].end] = i;
  }
  return rank;
}

bool chords_interleave(int a0, int a1, int b0, int b1) {
  if (a0 > a1) std::swap(a0, a1);
  const bool in0 = a0 < b0 && b0 < a1;
  const bool in1 = a0 < b1 && b1 < a1;
  return in0 != in1;
}

struct GlueMaps {
  // (circle, angle) -> endpoint; one entry per crossing copy.
  std::map<std::pair<int, Frac>, EndpointRef> circle_point;
  // (seam index, side 0=L/1=R, param) -> endpoint.
  std::map<std::tuple<int, int, Frac>, EndpointRef> seam_point;
};

GlueMaps build_glue_maps(const CurveSystem& sys) {
  GlueMaps maps;
  for (int c = 0; c < static_cast<int>(sys.chords.size()); ++c) {
    for (int e = 0; e < 2; ++e) {
      const Endpoint& p = sys.chords[c].end[e];
      if (seg_is_circle(p.seg)) {
        const int circle = static_cast<int>(circle_of_seg(p.seg));
        maps.circle_point[{circle, p.pos}] = {c, e};
      } else {
        const int side = seg_walk_ascending(p.seg) ? 0 : 1;
        maps.seam_point[{seam_index(p.seg), side, p.pos}] = {c, e};
      }
    }
  }
  return maps;
}

EndpointRef glue_partner(const GlueMaps& maps, const Endpoint& p) {
  const int circle =
      static_cast<int>(partner_circle(circle_of_seg(p.seg)));
  const auto it = maps.circle_point.find({circle, p.pos});
  if (it == maps.circle_point.end()) {
    throw std::logic_error("glue_partner: unmatched crossing");
  }
  return it->second;
}

EndpointRef seam_partner(const GlueMaps& maps, const Endpoint& p) {
  const int side = seg_walk_ascending(p.seg) ? 1 : 0;
  const auto it = maps.seam_point.find({seam_index(p.seg), side, p.pos});
  if (it == maps.seam_point.end()) {
    throw std::logic_error("seam_partner: unmatched seam point");
  }
  return it->second;
}

struct DisjointSet {
  std::vector<int> parent;

  explicit DisjointSet(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }

  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  void unite(int x, int y) { parent[find(x)] = find(y); }
};

}  // namespace

std::vector<std::string> validate(const CurveSystem& sys) {
  std::vector<std::string> out;
  const int n = static_cast<int>(sys.chords.size());

  // Positions legal and segments consistent with angles.
  for (int c = 0; c < n; ++c) {
    const Chord& ch = sys.chords[c];
    if (ch.curve.empty()) {
      out.push_back("chord " + std::to_string(c) + ": unnamed curve");
    }
    for (int e = 0; e < 2; ++e) {
      const Endpoint& p = ch.end[e];
      if (p.seg < 0 || p.seg >= kSegmentCount) {
        out.push_back("chord " + std::to_string(c) + ": bad segment");
        continue;
      }
      if (p.pos <= kZero || p.pos >= kOne) {
        out.push_back("chord " + std::to_string(c) +
                      ": position outside (0,1) on " + seg_name(p.seg));
        continue;
      }
      if (seg_is_circle(p.seg)) {
        try {
          if (circle_seg_at(circle_of_seg(p.seg), p.pos) != p.seg) {
            out.push_back("chord " + std::to_string(c) +
                          ": angle not inside segment " + seg_name(p.seg));
          }
        } catch (const std::invalid_argument&) {
          out.push_back("chord " + std::to_string(c) +
                        ": angle at a seam foot on " + seg_name(p.seg));
        }
      }
    }
    if (ch.end[0] == ch.end[1]) {
      out.push_back("chord " + std::to_string(c) + ": zero length");
    }
  }
  if (!out.empty()) return out;

  // Each slot used exactly once.
  {
    std::map<std::pair<int, Frac>, int> seen;
    for (int c = 0; c < n; ++c) {
      for (int e = 0; e < 2; ++e) {
        const Endpoint& p = sys.chords[c].end[e];
        const auto key = std::make_pair(p.seg, p.pos);
        const auto it = seen.find(key);
        if (it != seen.end()) {
          out.push_back("slot reuse on " + std::string(seg_name(p.seg)) +
                        " at " +
                        to_string(p.pos) + " by chords " +
                        std::to_string(it->second) + " and " +
                        std::to_string(c));
        }
        seen[key] = c;
      }
    }
  }
  if (!out.empty()) return out;

  // Seam copies carry equal parameter sets.
  for (int s = 0; s < 3; ++s) {
    std::vector<Frac> left;
    std::vector<Frac> right;
    for (const Chord& ch : sys.chords) {
      for (int e = 0; e < 2; ++e) {
        const Endpoint& p = ch.end[e];
        if (!seg_is_seam(p.seg) || seam_index(p.seg) != s) continue;
        (seg_walk_ascending(p.seg) ? left : right).push_back(p.pos);
      }
    }
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    if (left != right) {
      out.push_back("seam s" + std::to_string(s + 1) +
                    ": copies carry different parameter sets");
    }
  }

  // Handle copies carry equal angle sets.
  for (const auto& [plus, minus, label] :
       {std::make_tuple(CircleId::APlus, CircleId::AMinus, "A"),
        std::make_tuple(CircleId::BPlus, CircleId::BMinus, "B")}) {
    std::vector<Frac> on_plus;
    std::vector<Frac> on_minus;
    for (const Chord& ch : sys.chords) {
      for (int e = 0; e < 2; ++e) {
        const Endpoint& p = ch.end[e];
        if (!seg_is_circle(p.seg)) continue;
        const CircleId c = circle_of_seg(p.seg);
        if (c == plus) on_plus.push_back(p.pos);
        if (c == minus) on_minus.push_back(p.pos);
      }
    }
    std::sort(on_plus.begin(), on_plus.end());
    std::sort(on_minus.begin(), on_minus.end());
    if (on_plus != on_minus) {
      out.push_back(std::string("handle ") + label +
                    ": circle copies carry different angle sets");
    }
  }
  if (!out.empty()) return out;

  // Noncrossing, except declared transversal curve pairs.
  {
    const auto rank = endpoint_ranks(sys);
    for (int c = 0; c < n; ++c) {
      for (int d = c + 1; d < n; ++d) {
        if (!chords_interleave(rank[c][0], rank[c][1], rank[d][0],
                               rank[d][1])) {
          continue;
        }
        const std::string& u = sys.chords[c].curve;
        const std::string& v = sys.chords[d].curve;
        if (u == v || !is_transversal(sys, u, v)) {
          out.push_back("crossing chords " + std::to_string(c) + " (" + u +
                        ") and " + std::to_string(d) + " (" + v + ")");
        }
      }
    }
  }
  if (!out.empty()) return out;

  // Components match curve names one to one.
  {
    const GlueMaps maps = build_glue_maps(sys);
    DisjointSet dsu(n);
    for (int c = 0; c < n; ++c) {
      for (int e = 0; e < 2; ++e) {
        const Endpoint& p = sys.chords[c].end[e];
        const EndpointRef next = seg_is_seam(p.seg)
                                     ? seam_partner(maps, p)
                                     : glue_partner(maps, p);
        dsu.unite(c, next.chord);
      }
    }
    std::map<int, std::set<std::string>> names_of_component;
    std::map<std::string, std::set<int>> components_of_name;
    for (int c = 0; c < n; ++c) {
      names_of_component[dsu.find(c)].insert(sys.chords[c].curve);
      components_of_name[sys.chords[c].curve].insert(dsu.find(c));
    }
    for (const auto& [root, names] : names_of_component) {
      if (names.size() > 1) {
        std::string joined;
        for (const auto& name : names) {
          joined += (joined.empty() ? "" : ", ") + name;
        }
        out.push_back("one component carries several curve names: " + joined);
      }
    }
    for (const auto& [name, comps] : components_of_name) {
      if (comps.size() > 1) {
        out.push_back("curve '" + name + "' splits into " +
                      std::to_string(comps.size()) + " components");
      }
    }
  }

  return out;
}

CurveSystem canonicalize(const CurveSystem& sys) {
  {
    const auto diagnostics = validate(sys);
    if (!diagnostics.empty()) {
      throw std::invalid_argument("canonicalize: invalid system: " +
                                  diagnostics.front());
    }
  }

  // Fresh canonical positions, preserving all orders and arc membership.
  std::map<std::pair<int, Frac>, Frac> new_angle;  // (circle pair id, angle)
  std::map<std::pair<int, Frac>, Frac> new_param;  // (seam index, param)

  // Handle A: positions derived per arc of A+.
  {
    std::array<std::vector<Frac>, 3> arc_angles;
    for (const Chord& ch : sys.chords) {
      for (int e = 0; e < 2; ++e) {
        const Endpoint& p = ch.end[e];
        if (p.seg == kAPlusArc0) arc_angles[0].push_back(p.pos);
        if (p.seg == kAPlusArc1) arc_angles[1].push_back(p.pos);
        if (p.seg == kAPlusArc2) arc_angles[2].push_back(p.pos);
      }
    }
    for (int r = 0; r < 3; ++r) {
      auto& angles = arc_angles[r];
      std::sort(angles.begin(), angles.end());
      const long long m = static_cast<long long>(angles.size());
      for (long long i = 0; i < m; ++i) {
        new_angle[{0, angles[i]}] = Frac(r, 3) + Frac(i + 1, 3 * (m + 1));
      }
    }
  }

  // Handle B.
  {
    std::vector<Frac> angles;
    for (const Chord& ch : sys.chords) {
      for (int e = 0; e < 2; ++e) {
        if (ch.end[e].seg == kBPlus) angles.push_back(ch.end[e].pos);
      }
    }
    std::sort(angles.begin(), angles.end());
    const long long m = static_cast<long long>(angles.size());
    for (long long i = 0; i < m; ++i) {
      new_angle[{1, angles[i]}] = Frac(i + 1, m + 1);
    }
  }

  // Seams: positions derived from the left copies.
  for (int s = 0; s < 3; ++s) {
    std::vector<Frac> params;
    for (const Chord& ch : sys.chords) {
      for (int e = 0; e < 2; ++e) {
        const Endpoint& p = ch.end[e];
        if (seg_is_seam(p.seg) && seam_index(p.seg) == s &&
            seg_walk_ascending(p.seg)) {
          params.push_back(p.pos);
        }
      }
    }
    std::sort(params.begin(), params.end());
    const long long m = static_cast<long long>(params.size());
    for (long long i = 0; i < m; ++i) {
      new_param[{s, params[i]}] = Frac(i + 1, m + 1);
    }
  }

  CurveSystem out = sys;
  for (Chord& ch : out.chords) {
    for (int e = 0; e < 2; ++e) {
      Endpoint& p = ch.end[e];
      if (seg_is_circle(p.seg)) {
        const int pair_id = circle_of_seg(p.seg) == CircleId::APlus ||
                                    circle_of_seg(p.seg) == CircleId::AMinus
                                ? 0
                                : 1;
        p.pos = new_angle.at({pair_id, p.pos});
      } else {
        p.pos = new_param.at({seam_index(p.seg), p.pos});
      }
    }
    if (walk_less(ch.end[1], ch.end[0])) std::swap(ch.end[0], ch.end[1]);
  }
  std::sort(out.chords.begin(), out.chords.end(),
            [](const Chord& x, const Chord& y) {
              if (walk_less(x.end[0], y.end[0])) return true;
              if (walk_less(y.end[0], x.end[0])) return false;
              if (walk_less(x.end[1], y.end[1])) return true;
              if (walk_less(y.end[1], x.end[1])) return false;
              return x.curve < y.curve;
            });
  return out;
}

Analysis analyze(const CurveSystem& sys) {
  {
    const auto diagnostics = validate(sys);
    if (!diagnostics.empty()) {
      throw std::invalid_argument("analyze: invalid system: " +
                                  diagnostics.front());
    }
  }

  Analysis a;
  const int n = static_cast<int>(sys.chords.size());
  a.component_of_chord.assign(n, -1);
  a.endpoint_sign.assign(n, {0, 0});
  a.strand_of_endpoint.assign(n, {-1, -1});
  a.chord_from_end.assign(n, -1);

  const GlueMaps maps = build_glue_maps(sys);
  const auto sorted = all_endpoints_sorted(sys);

  // Canonical traversal: start each component at its least endpoint and
  // hop the chord first.
  for (const EndpointRef& start : sorted) {
    if (a.component_of_chord[start.chord] != -1) continue;
    const int comp = a.component_count++;
    Word raw;
    EndpointRef at = start;
    do {
      a.component_of_chord[at.chord] = comp;
      a.chord_from_end[at.chord] = at.end;
      const EndpointRef other{at.chord, 1 - at.end};
      const Endpoint& p = endpoint(sys, other);
      if (seg_is_seam(p.seg)) {
        at = seam_partner(maps, p);
      } else {
        const CircleId from = circle_of_seg(p.seg);
        const Letter letter = glue_letter(from);
        const EndpointRef landing = glue_partner(maps, p);
        a.endpoint_sign[other.chord][other.end] = sign_of(letter);
        a.endpoint_sign[landing.chord][landing.end] = sign_of(letter);
        raw.push_back(letter);
        at = landing;
      }
    } while (!(at == start));
    const bool reduced =
        free_reduce(raw) == raw &&
        (raw.size() < 2 || raw.front() != inverse(raw.back()));
    a.raw_words.push_back(std::move(raw));
    a.raw_word_reduced.push_back(reduced);
  }

  for (int c = 0; c < n; ++c) {
    const auto& name = sys.chords[c].curve;
    const int comp = a.component_of_chord[c];
    const auto it = a.component_of_curve.find(name);
    if (it == a.component_of_curve.end()) {
      a.component_of_curve.emplace(name, comp);
    }
  }

  // Strands: chains of chords joined across seams, endpoints on circles.
  std::vector<std::array<bool, 2>> seen(n, {false, false});
  for (int c = 0; c < n; ++c) {
    for (int e = 0; e < 2; ++e) {
      if (seen[c][e]) continue;
      const Endpoint& p = sys.chords[c].end[e];
      if (!seg_is_circle(p.seg)) continue;
      Strand strand;
      strand.from = {c, e};
      EndpointRef at{c, e};
      for (;;) {
        seen[at.chord][at.end] = true;
        strand.chord_path.push_back(at.chord);
        const EndpointRef other{at.chord, 1 - at.end};
        seen[other.chord][other.end] = true;
        const Endpoint& q = endpoint(sys, other);
        if (seg_is_circle(q.seg)) {
          strand.to = other;
          break;
        }
        at = seam_partner(maps, q);
      }
      const int idx = static_cast<int>(a.strands.size());
      a.strand_of_endpoint[strand.from.chord][strand.from.end] = idx;
      a.strand_of_endpoint[strand.to.chord][strand.to.end] = idx;
      a.strands.push_back(std::move(strand));
    }
  }

  return a;
}

std::map<std::string, CyclicWord> extract_words(
    const CurveSystem& sys, std::vector<std::string>& diagnostics) {
  const Analysis a = analyze(sys);
  std::map<std::string, CyclicWord> out;
  for (const auto& [name, comp] : a.component_of_curve) {
    if (!a.raw_word_reduced[comp]) {
      diagnostics.push_back("curve '" + name +
                            "': traversal word required nontrivial reduction");
    }
    out.emplace(name, CyclicWord(a.raw_words[comp]));
  }
  return out;
}

std::map<std::string, CyclicWord> extract_words(const CurveSystem& sys) {
  std::vector<std::string> diagnostics;
  return extract_words(sys, diagnostics);
}

StrandCounts strand_counts(const CurveSystem& sys, const std::string& curve) {
  StrandCounts out;
  for (const Chord& ch : sys.chords) {
    if (ch.curve != curve) continue;
    const int s0 = std::min(ch.end[0].seg, ch.end[1].seg);
    const int s1 = std::max(ch.end[0].seg, ch.end[1].seg);
    ++out.per_class[{seg_name(s0), seg_name(s1)}];
    for (int e = 0; e < 2; ++e) {
      const int seg = ch.end[e].seg;
      if (seg == kAPlusArc0 || seg == kAPlusArc1 || seg == kAPlusArc2) {
        ++out.through_handle_A;
      }
      if (seg == kBPlus) ++out.through_handle_B;
    }
  }
  return out;
}

CurveSystem subsystem(const CurveSystem& sys,
                      const std::set<std::string>& keep) {
  CurveSystem out;
  for (const Chord& ch : sys.chords) {
    if (keep.count(ch.curve)) out.chords.push_back(ch);
  }
  for (const auto& pair : sys.transversal) {
    if (keep.count(pair.first) && keep.count(pair.second)) {
      out.transversal.insert(pair);
    }
  }
  return out;
}

std::vector<int> component_partition(const CurveSystem& sys) {
  const int n = static_cast<int>(sys.chords.size());
  const GlueMaps maps = build_glue_maps(sys);
  DisjointSet dsu(n);
  for (int c = 0; c < n; ++c) {
    for (int e = 0; e < 2; ++e) {
      const Endpoint& p = sys.chords[c].end[e];
      const EndpointRef next =
          seg_is_seam(p.seg) ? seam_partner(maps, p) : glue_partner(maps, p);
      dsu.unite(c, next.chord);
    }
  }
  std::vector<int> out(n, -1);
  std::map<int, int> relabel;
  for (int c = 0; c < n; ++c) {
    const int root = dsu.find(c);
    const auto [it, inserted] =
        relabel.emplace(root, static_cast<int>(relabel.size()));
    out[c] = it->second;
  }
  return out;
}

IntersectionCount curve_intersection(const CurveSystem& sys,
                                     const std::string& curve1,
                                     const std::string& curve2) {
  const Analysis a = analyze(sys);
  const auto rank = endpoint_ranks(sys);
  const int n = static_cast<int>(sys.chords.size());
  const std::vector<int>& from_end = a.chord_from_end;

  IntersectionCount out;
  const int total = 2 * n;
  for (int c = 0; c < n; ++c) {
    if (sys.chords[c].curve != curve1) continue;
    for (int d = 0; d < n; ++d) {
      if (sys.chords[d].curve != curve2) continue;
      if (!chords_interleave(rank[c][0], rank[c][1], rank[d][0], rank[d][1])) {
        continue;
      }
      ++out.unsigned_count;
      const int u = rank[c][from_end[c]];
      const int v = rank[c][1 - from_end[c]];
      const int x = rank[d][from_end[d]];
      // +1 when, walking from the tail of chord c, the tail of chord d
      // appears before the head of c.
      const int x_rel = x > u ? x - u : x - u + total;
      const int v_rel = v > u ? v - u : v - u + total;
      out.signed_count += x_rel < v_rel ? 1 : -1;
    }
  }
  return out;
}

}  // namespace handlewave
