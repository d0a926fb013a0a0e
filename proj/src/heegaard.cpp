#include "handlewave/heegaard.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace handlewave {

namespace {

int circle_index(CircleId c) { return static_cast<int>(c); }

struct StrandSlot {
  Frac angle;
  int strand;
};

// Union-find over strand indices.
struct StrandSets {
  std::vector<int> parent;
  explicit StrandSets(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int x, int y) { parent[find(x)] = find(y); }
};

}  // namespace

const char* circle_name(CircleId c) {
  switch (c) {
    case CircleId::APlus: return "A+";
    case CircleId::AMinus: return "A-";
    case CircleId::BPlus: return "B+";
    case CircleId::BMinus: return "B-";
  }
  throw std::logic_error("circle_name: bad circle");
}

const char* graph_type_name(GraphType t) {
  switch (t) {
    case GraphType::TypeA: return "TypeA";
    case GraphType::TypeB: return "TypeB";
    case GraphType::TypeC_disconnected: return "TypeC-disconnected";
    case GraphType::TypeC_cutvertex: return "TypeC-cutvertex";
  }
  throw std::logic_error("graph_type_name: bad type");
}

WhiteheadGraph whitehead_graph(const CurveSystem& sys,
                               const std::string& curve) {
  const Analysis a = analyze(sys);
  if (!a.component_of_curve.count(curve)) {
    throw std::invalid_argument("whitehead_graph: unknown curve '" + curve +
                                "'");
  }

  WhiteheadGraph g;
  g.curve = curve;
  for (const Strand& s : a.strands) {
    if (sys.chords[s.from.chord].curve != curve) continue;
    const Endpoint& pf = sys.chords[s.from.chord].end[s.from.end];
    const Endpoint& pt = sys.chords[s.to.chord].end[s.to.end];
    g.strands.push_back(s);
    g.strand_ends.push_back({circle_of_seg(pf.seg), circle_of_seg(pt.seg)});
    g.strand_signs.push_back({a.endpoint_sign[s.from.chord][s.from.end],
                              a.endpoint_sign[s.to.chord][s.to.end]});
  }
  const int n = static_cast<int>(g.strands.size());
  if (n == 0) {
    throw std::invalid_argument(
        "whitehead_graph: curve '" + curve + "' meets neither cutting disk");
  }

  // Strand endpoints around each circle, in angular order.
  std::array<std::vector<StrandSlot>, 4> around;
  for (int i = 0; i < n; ++i) {
    for (int e = 0; e < 2; ++e) {
      const EndpointRef& ref = e == 0 ? g.strands[i].from : g.strands[i].to;
      const Endpoint& p = sys.chords[ref.chord].end[ref.end];
      around[circle_index(circle_of_seg(p.seg))].push_back({p.pos, i});
    }
  }
  for (auto& slots : around) {
    std::sort(slots.begin(), slots.end(),
              [](const StrandSlot& x, const StrandSlot& y) {
                return x.angle < y.angle;
              });
  }

  // Parallel bands: strands with the same vertex pair, adjacent in the
  // angular order on both of their circles.
  const auto pair_of = [&](int i) {
    CircleId u = g.strand_ends[i][0];
    CircleId v = g.strand_ends[i][1];
    if (circle_index(v) < circle_index(u)) std::swap(u, v);
    return std::pair<CircleId, CircleId>(u, v);
  };
  StrandSets sets(n);
  const auto cyclically_adjacent = [](const std::vector<StrandSlot>& slots,
                                      int s, int t) {
    const int m = static_cast<int>(slots.size());
    for (int j = 0; j < m; ++j) {
      const int jn = (j + 1) % m;
      if (jn == j) continue;
      if ((slots[j].strand == s && slots[jn].strand == t) ||
          (slots[j].strand == t && slots[jn].strand == s)) {
        return true;
      }
    }
    return false;
  };
  for (const auto& slots : around) {
    const int m = static_cast<int>(slots.size());
    for (int k = 0; k < m; ++k) {
      const int s = slots[k].strand;
      const int t = slots[(k + 1) % m].strand;
      if (s == t || pair_of(s) != pair_of(t)) continue;
      bool other_adjacent = false;
      for (const auto& other : around) {
        if (&other == &slots) continue;
        if (cyclically_adjacent(other, s, t)) other_adjacent = true;
      }
      if (other_adjacent) sets.unite(s, t);
    }
  }

  std::map<int, int> class_of_root;
  for (int i = 0; i < n; ++i) {
    const int root = sets.find(i);
    if (!class_of_root.count(root)) {
      const int id = static_cast<int>(g.classes.size());
      class_of_root[root] = id;
      GraphEdgeClass cls;
      const auto [u, v] = pair_of(i);
      cls.ends[0] = u;
      cls.ends[1] = v;
      g.classes.push_back(cls);
    }
  }
  for (int i = 0; i < n; ++i) {
    GraphEdgeClass& cls = g.classes[class_of_root[sets.find(i)]];
    cls.strands.push_back(i);
    const int sign_from = g.strand_signs[i][0];
    const int sign_to = g.strand_signs[i][1];
    if (g.strand_ends[i][0] == cls.ends[0]) {
      cls.signs_at_ends = {sign_from, sign_to};
    } else {
      cls.signs_at_ends = {sign_to, sign_from};
    }
  }

  // Degrees and angular class order per vertex.
  for (int v = 0; v < 4; ++v) {
    g.degree[v] = static_cast<int>(around[v].size());
    std::vector<int> order;
    for (const StrandSlot& slot : around[v]) {
      const int cls = class_of_root[sets.find(slot.strand)];
      if (std::find(order.begin(), order.end(), cls) == order.end()) {
        order.push_back(cls);
      }
    }
    g.cyclic_order[v] = std::move(order);
  }
  return g;
}

PositivityWitness is_positive(const WhiteheadGraph& g) {
  PositivityWitness w;
  bool ok = true;
  int signs[2] = {0, 0};  // handle A, handle B
  for (size_t i = 0; i < g.strands.size(); ++i) {
    for (int e = 0; e < 2; ++e) {
      const CircleId c = g.strand_ends[i][e];
      const int handle =
          (c == CircleId::APlus || c == CircleId::AMinus) ? 0 : 1;
      const int s = g.strand_signs[i][e];
      if (s == 0) continue;
      if (signs[handle] == 0) {
        signs[handle] = s;
      } else if (signs[handle] != s) {
        ok = false;
      }
    }
  }
  w.positive = ok;
  w.sign_A = signs[0];
  w.sign_B = signs[1];
  if (ok) {
    // Normalize to all-positive letters: flipping both signs is reorienting
    // the curve, flipping one is inverting that generator.
    if (signs[0] < 0 && signs[1] >= 0) w.invert_A = true;
    if (signs[1] < 0 && signs[0] >= 0) w.invert_B = true;
  }
  return w;
}

ConnectivityReport connectivity_report(const WhiteheadGraph& g) {
  bool adj[4][4] = {};
  for (const GraphEdgeClass& cls : g.classes) {
    const int u = circle_index(cls.ends[0]);
    const int v = circle_index(cls.ends[1]);
    adj[u][v] = adj[v][u] = true;
  }

  const auto reachable = [&](int from, int skip) {
    std::array<bool, 4> seen = {};
    seen[from] = true;
    std::vector<int> stack = {from};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < 4; ++v) {
        if (v == skip || seen[v] || !adj[u][v]) continue;
        seen[v] = true;
        stack.push_back(v);
      }
    }
    return seen;
  };

  ConnectivityReport report;
  const auto from0 = reachable(0, -1);
  report.connected =
      std::all_of(from0.begin(), from0.end(), [](bool b) { return b; });

  for (int v = 0; v < 4; ++v) {
    bool cut = false;
    for (int u = 0; u < 4 && !cut; ++u) {
      if (u == v) continue;
      const auto seen = reachable(u, v);
      for (int w = 0; w < 4; ++w) {
        if (w == v || w == u || seen[w]) continue;
        // u and w are separated by removing v; a cut only counts if they
        // were connected with v present.
        if (reachable(u, -1)[w]) cut = true;
      }
    }
    if (cut) report.cut_vertices.push_back(static_cast<CircleId>(v));
  }
  return report;
}

GraphClassification classify_graph_type(const WhiteheadGraph& g) {
  const ConnectivityReport report = connectivity_report(g);
  if (!report.connected) {
    return {GraphType::TypeC_disconnected, "graph is disconnected"};
  }
  if (!report.cut_vertices.empty()) {
    std::string detail = "cut vertex at";
    for (CircleId v : report.cut_vertices) {
      detail += std::string(" ") + circle_name(v);
    }
    return {GraphType::TypeC_cutvertex, detail};
  }
  if (g.degree[0] != g.degree[1] || g.degree[2] != g.degree[3] ||
      g.degree[0] == 0 || g.degree[2] == 0) {
    throw std::invalid_argument(
        "classify_graph_type: embedded degrees do not fit a clean pattern");
  }
  bool handle_edge[2] = {false, false};
  for (const GraphEdgeClass& cls : g.classes) {
    if (cls.ends[0] == CircleId::APlus && cls.ends[1] == CircleId::AMinus) {
      handle_edge[0] = true;
    }
    if (cls.ends[0] == CircleId::BPlus && cls.ends[1] == CircleId::BMinus) {
      handle_edge[1] = true;
    }
  }
  if (handle_edge[0] && handle_edge[1]) {
    return {GraphType::TypeA, "direct edges across both handles"};
  }
  return {GraphType::TypeB, "direct edges across at most one handle"};
}

std::string graph_to_json(const WhiteheadGraph& g) {
  nlohmann::ordered_json doc;
  doc["curve"] = g.curve;
  doc["degrees"] = nlohmann::ordered_json::object();
  for (int v = 0; v < 4; ++v) {
    doc["degrees"][circle_name(static_cast<CircleId>(v))] = g.degree[v];
  }
  doc["classes"] = nlohmann::ordered_json::array();
  for (const GraphEdgeClass& cls : g.classes) {
    nlohmann::ordered_json c;
    c["ends"] = {circle_name(cls.ends[0]), circle_name(cls.ends[1])};
    c["multiplicity"] = cls.strands.size();
    c["signs"] = {cls.signs_at_ends[0], cls.signs_at_ends[1]};
    doc["classes"].push_back(c);
  }
  doc["cyclic_order"] = nlohmann::ordered_json::object();
  for (int v = 0; v < 4; ++v) {
    doc["cyclic_order"][circle_name(static_cast<CircleId>(v))] =
        g.cyclic_order[v];
  }
  return doc.dump(2) + "\n";
}

}  // namespace handlewave
