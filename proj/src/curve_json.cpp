#include <json.hpp>
#include <stdexcept>

#include "handlewave/curve_system.hpp"

namespace handlewave {

namespace {

using json = nlohmann::ordered_json;

}  // namespace

std::string to_json(const CurveSystem& sys) {
  const CurveSystem canon = canonicalize(sys);

  json doc;
  // Slot-convention constants: walking each circle copy and each seam copy
  // in disk-boundary order, partner slot i matches slot (t - i) mod n.
  doc["cut"] = {{"twist_A", -1}, {"twist_B", -1}};

  json chords = json::array();
  for (std::size_t i = 0; i < canon.chords.size();) {
    const Chord& ch = canon.chords[i];
    const std::string s0 = seg_name(ch.end[0].seg);
    const std::string s1 = seg_name(ch.end[1].seg);
    std::size_t run = i + 1;
    while (run < canon.chords.size() &&
           seg_name(canon.chords[run].end[0].seg) == s0 &&
           seg_name(canon.chords[run].end[1].seg) == s1) {
      ++run;
    }
    chords.push_back(
        {{"class", {s0, s1}}, {"count", static_cast<int>(run - i)}});
    i = run;
  }
  doc["chords"] = std::move(chords);

  json slot_orders = json::object();
  for (int seg = 0; seg < kSegmentCount; ++seg) {
    std::vector<std::pair<Endpoint, std::pair<int, int>>> refs;
    for (int c = 0; c < static_cast<int>(canon.chords.size()); ++c) {
      for (int e = 0; e < 2; ++e) {
        if (canon.chords[c].end[e].seg == seg) {
          refs.push_back({canon.chords[c].end[e], {c, e}});
        }
      }
    }
    if (refs.empty()) continue;
    std::sort(refs.begin(), refs.end(), [](const auto& x, const auto& y) {
      return walk_less(x.first, y.first);
    });
    json list = json::array();
    for (const auto& [pos, ref] : refs) {
      list.push_back({ref.first, ref.second});
    }
    slot_orders[seg_name(seg)] = std::move(list);
  }
  doc["slot_orders"] = std::move(slot_orders);

  json curves = json::object();
  {
    std::map<std::string, int> least_chord;
    for (int c = 0; c < static_cast<int>(canon.chords.size()); ++c) {
      const auto [it, inserted] = least_chord.emplace(canon.chords[c].curve, c);
      (void)it;
    }
    for (const auto& [name, idx] : least_chord) curves[name] = idx;
  }
  doc["curves"] = std::move(curves);

  json transversal = json::array();
  for (const auto& [c1, c2] : canon.transversal) {
    transversal.push_back({c1, c2});
  }
  doc["transversal"] = std::move(transversal);

  return doc.dump(2) + "\n";
}

CurveSystem curve_system_from_json(const std::string& text) {
  const json doc = json::parse(text);
  CurveSystem sys;

  for (const auto& entry : doc.at("chords")) {
    const auto& cls = entry.at("class");
    const int seg0 = seg_from_name(cls.at(0).get<std::string>());
    const int seg1 = seg_from_name(cls.at(1).get<std::string>());
    const int count = entry.at("count").get<int>();
    if (count < 1) throw std::invalid_argument("chord class with count < 1");
    for (int k = 0; k < count; ++k) {
      Chord ch;
      ch.end[0].seg = seg0;
      ch.end[1].seg = seg1;
      sys.chords.push_back(ch);
    }
  }

  // Walk-order ranks per segment, from slot_orders.
  std::array<std::vector<std::pair<int, int>>, kSegmentCount> order;
  {
    std::vector<std::array<bool, 2>> seen(sys.chords.size(), {false, false});
    for (const auto& [name, list] : doc.at("slot_orders").items()) {
      const int seg = seg_from_name(name);
      for (const auto& ref : list) {
        const int chord = ref.at(0).get<int>();
        const int end = ref.at(1).get<int>();
        if (chord < 0 || chord >= static_cast<int>(sys.chords.size()) ||
            end < 0 || end > 1) {
          throw std::invalid_argument("slot_orders: bad endpoint reference");
        }
        if (sys.chords[chord].end[end].seg != seg) {
          throw std::invalid_argument(
              "slot_orders: endpoint listed under the wrong segment");
        }
        if (seen[chord][end]) {
          throw std::invalid_argument("slot_orders: endpoint listed twice");
        }
        seen[chord][end] = true;
        order[seg].push_back({chord, end});
      }
    }
    for (std::size_t c = 0; c < sys.chords.size(); ++c) {
      if (!seen[c][0] || !seen[c][1]) {
        throw std::invalid_argument("slot_orders: endpoint missing");
      }
    }
  }

  // Canonical positions. A+ arcs fix the angle list for the A circles;
  // B+ fixes it for the B circles; seam left copies fix the parameters.
  {
    std::vector<Frac> a_angles;
    for (const int seg : {kAPlusArc0, kAPlusArc1, kAPlusArc2}) {
      const int r = seg == kAPlusArc0 ? 0 : seg == kAPlusArc1 ? 1 : 2;
      const long long m = static_cast<long long>(order[seg].size());
      for (long long i = 0; i < m; ++i) {
        const Frac angle = Frac(r, 3) + Frac(i + 1, 3 * (m + 1));
        const auto [chord, end] = order[seg][i];
        sys.chords[chord].end[end].pos = angle;
        a_angles.push_back(angle);
      }
    }
    const long long ka = static_cast<long long>(a_angles.size());
    if (static_cast<long long>(order[kAMinus].size()) != ka) {
      throw std::invalid_argument("A- slot count differs from A+");
    }
    for (long long i = 0; i < ka; ++i) {
      const auto [chord, end] = order[kAMinus][i];
      sys.chords[chord].end[end].pos = a_angles[ka - 1 - i];
    }

    const long long kb = static_cast<long long>(order[kBPlus].size());
    if (static_cast<long long>(order[kBMinus].size()) != kb) {
      throw std::invalid_argument("B- slot count differs from B+");
    }
    for (long long i = 0; i < kb; ++i) {
      sys.chords[order[kBPlus][i].first].end[order[kBPlus][i].second].pos =
          Frac(i + 1, kb + 1);
      sys.chords[order[kBMinus][i].first].end[order[kBMinus][i].second].pos =
          Frac(kb - i, kb + 1);
    }

    for (const auto& [left, right] :
         {std::make_pair(kSeam1L, kSeam1R), std::make_pair(kSeam2L, kSeam2R),
          std::make_pair(kSeam3L, kSeam3R)}) {
      const long long m = static_cast<long long>(order[left].size());
      if (static_cast<long long>(order[right].size()) != m) {
        throw std::invalid_argument("seam copies carry different slot counts");
      }
      for (long long i = 0; i < m; ++i) {
        sys.chords[order[left][i].first].end[order[left][i].second].pos =
            Frac(i + 1, m + 1);
        sys.chords[order[right][i].first].end[order[right][i].second].pos =
            Frac(m - i, m + 1);
      }
    }
  }

  // Curve names propagate over components from the selector chords.
  {
    const std::vector<int> comp = component_partition(sys);
    std::map<int, std::string> name_of_comp;
    for (const auto& [name, selector] : doc.at("curves").items()) {
      const int chord = selector.get<int>();
      if (chord < 0 || chord >= static_cast<int>(sys.chords.size())) {
        throw std::invalid_argument("curves: bad selector chord");
      }
      const auto [it, inserted] = name_of_comp.emplace(comp[chord], name);
      if (!inserted) {
        throw std::invalid_argument("curves: two names select one component");
      }
    }
    for (std::size_t c = 0; c < sys.chords.size(); ++c) {
      const auto it = name_of_comp.find(comp[c]);
      if (it == name_of_comp.end()) {
        throw std::invalid_argument("curves: unnamed component");
      }
      sys.chords[c].curve = it->second;
    }
  }

  if (doc.contains("transversal")) {
    for (const auto& pair : doc.at("transversal")) {
      mark_transversal(sys, pair.at(0).get<std::string>(),
                       pair.at(1).get<std::string>());
    }
  }

  const auto diagnostics = validate(sys);
  if (!diagnostics.empty()) {
    throw std::invalid_argument("parsed system invalid: " +
                                diagnostics.front());
  }
  return sys;
}

}  // namespace handlewave
