#include "handlewave/layout.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "handlewave/waves.hpp"

namespace handlewave {

namespace {

constexpr int kSeamLSeg[3] = {kSeam1L, kSeam2L, kSeam3L};
constexpr int kSeamRSeg[3] = {kSeam1R, kSeam2R, kSeam3R};

// Slot the traversal arrives at when it is about to emit `l`: the jump that
// emits A runs from A- to A+, so the incoming strand ends on A-.
Endpoint in_slot(Letter l, const Frac& t) {
  switch (l) {
    case Letter::A:
      return {kAMinus, t};
    case Letter::a:
      return {circle_seg_at(CircleId::APlus, t), t};
    case Letter::B:
      return {kBMinus, t};
    case Letter::b:
      return {kBPlus, t};
  }
  throw std::logic_error("in_slot: bad letter");
}

// Slot the traversal continues from after emitting `l`.
Endpoint out_slot(Letter l, const Frac& t) {
  switch (l) {
    case Letter::A:
      return {circle_seg_at(CircleId::APlus, t), t};
    case Letter::a:
      return {kAMinus, t};
    case Letter::B:
      return {kBPlus, t};
    case Letter::b:
      return {kBMinus, t};
  }
  throw std::logic_error("out_slot: bad letter");
}

FaceStructure faces_of_everything(const CurveSystem& sys) {
  CurveSystem walls = sys;
  for (Chord& ch : walls.chords) ch.curve = "*";
  return face_structure(walls, "*");
}

// A step crosses seam pass `e / 2`; `e % 2` picks the side it enters from
// (0 for the ascending copy). The side only carries information on a pass
// whose two faces coincide.
using PassPath = std::vector<int>;

// Every walk from face f0 to f1 that crosses each pass at most once,
// shortest first; ties keep discovery order, which follows ascending pass
// indices. Truncated once kMaxPaths walks are found.
std::vector<PassPath> pass_paths(const FaceStructure& fs, int f0, int f1) {
  constexpr int kMaxLen = 6;
  constexpr int kMaxPaths = 64;

  // Pass-count lower bound to reach f1, for pruning dead branches.
  std::vector<int> dist(fs.face_count, kMaxLen + 1);
  {
    std::queue<int> frontier;
    dist[f1] = 0;
    frontier.push(f1);
    while (!frontier.empty()) {
      const int f = frontier.front();
      frontier.pop();
      for (const auto& pass : fs.passes) {
        if (pass.face_left == f && dist[pass.face_right] > dist[f] + 1) {
          dist[pass.face_right] = dist[f] + 1;
          frontier.push(pass.face_right);
        }
        if (pass.face_right == f && dist[pass.face_left] > dist[f] + 1) {
          dist[pass.face_left] = dist[f] + 1;
          frontier.push(pass.face_left);
        }
      }
    }
  }

  std::vector<PassPath> out;
  PassPath cur;
  std::vector<bool> used(fs.passes.size(), false);
  auto step = [&](auto&& self, int f) -> void {
    if (static_cast<int>(out.size()) >= kMaxPaths) return;
    if (f == f1) out.push_back(cur);
    if (static_cast<int>(cur.size()) >= kMaxLen) return;
    for (int p = 0; p < static_cast<int>(fs.passes.size()); ++p) {
      if (used[p]) continue;
      const auto& pass = fs.passes[p];
      for (const int side : {0, 1}) {
        const int here = side == 0 ? pass.face_left : pass.face_right;
        const int there = side == 0 ? pass.face_right : pass.face_left;
        if (here != f) continue;
        if (side == 1 && pass.face_left == pass.face_right) continue;
        if (static_cast<int>(cur.size()) + 1 + dist[there] > kMaxLen &&
            there != f1) {
          continue;
        }
        used[p] = true;
        cur.push_back(p * 2 + side);
        self(self, there);
        cur.pop_back();
        used[p] = false;
      }
    }
  };
  step(step, f0);
  std::stable_sort(out.begin(), out.end(),
                   [](const PassPath& x, const PassPath& y) {
                     return x.size() < y.size();
                   });
  return out;
}

struct Router {
  CurveSystem& sys;
  const std::string& curve;
  const Word& letters;
  const std::vector<Frac>& angles;
  int budget = 20000;
  std::string fail;

  bool place(int i) {
    const int n = static_cast<int>(letters.size());
    if (i == n) {
      const auto diags = validate(sys);
      if (diags.empty()) return true;
      if (fail.empty()) fail = diags.front();
      return false;
    }
    if (--budget < 0) return false;
    const Endpoint from = out_slot(letters[i], angles[i]);
    const int j = (i + 1) % n;
    const Endpoint to = in_slot(letters[j], angles[j]);

    if (sys.chords.empty()) {
      sys.chords.push_back(Chord{{from, to}, curve});
      if (place(i + 1)) return true;
      sys.chords.pop_back();
      return false;
    }

    const FaceStructure fs = faces_of_everything(sys);
    const int f0 = fs.face_of_point(from);
    const int f1 = fs.face_of_point(to);
    const auto paths = pass_paths(fs, f0, f1);
    if (paths.empty() && fail.empty()) {
      fail = "no route for strand #" + std::to_string(i) + " from " +
             seg_name(from.seg) + "@" + to_string(from.pos) + " to " +
             seg_name(to.seg) + "@" + to_string(to.pos);
    }
    const std::size_t mark = sys.chords.size();
    for (const PassPath& path : paths) {
      Endpoint cur = from;
      for (const int e : path) {
        const auto& pass = fs.passes[e / 2];
        const bool from_left = e % 2 == 0;
        const Frac t = Frac::mid(pass.lo, pass.hi);
        const Endpoint hit{
            from_left ? kSeamLSeg[pass.seam] : kSeamRSeg[pass.seam], t};
        const Endpoint cont{
            from_left ? kSeamRSeg[pass.seam] : kSeamLSeg[pass.seam], t};
        sys.chords.push_back(Chord{{cur, hit}, curve});
        cur = cont;
      }
      sys.chords.push_back(Chord{{cur, to}, curve});
      if (place(i + 1)) return true;
      sys.chords.resize(mark);
      if (budget < 0) return false;
    }
    return false;
  }
};

}  // namespace

void add_planned_curve(CurveSystem& sys, const std::string& curve,
                       const Word& letters, const std::vector<Frac>& angles) {
  if (letters.empty()) {
    throw std::invalid_argument("add_planned_curve: empty crossing plan");
  }
  if (letters.size() != angles.size()) {
    throw std::invalid_argument(
        "add_planned_curve: letters and angles disagree in length");
  }
  CurveSystem scratch = sys;
  Router router{scratch, curve, letters, angles, 20000, {}};
  if (!router.place(0)) {
    if (router.fail.empty()) router.fail = "routing budget exhausted";
    throw std::invalid_argument("add_planned_curve: " + curve + ": " +
                                router.fail);
  }
  sys = std::move(scratch);
}

std::vector<Frac> spread_angles(const Frac& lo, const Frac& hi, int count) {
  std::vector<Frac> out;
  out.reserve(count);
  const Frac span = hi - lo;
  for (int k = 1; k <= count; ++k) {
    out.push_back(lo + Frac(span.num * k, span.den * (count + 1)));
  }
  return out;
}

}  // namespace handlewave
