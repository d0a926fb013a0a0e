#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "handlewave/curve_system.hpp"
#include "handlewave/heegaard.hpp"
#include "handlewave/parse.hpp"
#include "handlewave/waves.hpp"
#include "handlewave/word.hpp"

using namespace handlewave;

namespace {

Chord chord(int seg0, const Frac& pos0, int seg1, const Frac& pos1,
            const std::string& curve) {
  Chord c;
  c.end[0] = {seg0, pos0};
  c.end[1] = {seg1, pos1};
  c.curve = curve;
  return c;
}

CyclicWord cyc(const std::string& text) {
  return CyclicWord(parse_word_text(text));
}

// Commutator word AbaB: one crossing of each sign on each handle, so both
// minus circles carry a mixed sign pattern. Crossings: A at angle 1/4,
// b at 1/4, B at 1/2, a at 5/6.
//
// Chord 0: (A+0@1/4, B+@1/4)   exit of A, entry of b
// Chord 1: (B-@1/4, A+2@5/6)   exit of b, entry of a
// Chord 2: (A-@5/6, B-@1/2)    exit of a, entry of B
// Chord 3: (B+@1/2, A-@1/4)    exit of B, entry of A
CurveSystem commutator_system() {
  CurveSystem sys;
  sys.chords.push_back(chord(kAPlusArc0, {1, 4}, kBPlus, {1, 4}, "r"));
  sys.chords.push_back(chord(kBMinus, {1, 4}, kAPlusArc2, {5, 6}, "r"));
  sys.chords.push_back(chord(kAMinus, {5, 6}, kBMinus, {1, 2}, "r"));
  sys.chords.push_back(chord(kBPlus, {1, 2}, kAMinus, {1, 4}, "r"));
  return sys;
}

// Commutator plus two bystanders: "z" rides the A handle away from every r
// slot and never meets r; "k" is an AB curve crossing r twice, with one
// disk slot parked inside the wave gap on the B- circle.
CurveSystem observed_commutator_system() {
  CurveSystem sys = commutator_system();
  sys.chords.push_back(chord(kAPlusArc2, {23, 24}, kAMinus, {23, 24}, "z"));
  sys.chords.push_back(chord(kAPlusArc2, {11, 12}, kBMinus, {7, 16}, "k"));
  sys.chords.push_back(chord(kBPlus, {7, 16}, kAMinus, {11, 12}, "k"));
  mark_transversal(sys, "r", "k");
  return sys;
}

// Word BB: every disk crossing has the same sign.
CurveSystem double_b_system() {
  CurveSystem sys;
  sys.chords.push_back(chord(kBPlus, {1, 10}, kBMinus, {6, 10}, "w"));
  sys.chords.push_back(chord(kBPlus, {6, 10}, kSeam3L, {1, 2}, "w"));
  sys.chords.push_back(chord(kSeam3R, {1, 2}, kBMinus, {1, 10}, "w"));
  return sys;
}

// Short hug across the sign-change gap on the B- circle.
ArcRoute gap_hug_route() {
  ArcRoute route;
  route.chords.push_back(chord(kBMinus, {3, 8}, kBMinus, {7, 16}, ""));
  route.start = {1, 0, false};
  route.finish = {2, 1, true};
  return route;
}

bool mentions(const std::vector<std::string>& diags, const std::string& bit) {
  return std::any_of(diags.begin(), diags.end(), [&](const std::string& d) {
    return d.find(bit) != std::string::npos;
  });
}

std::pair<long long, long long> sums_of(const CyclicWord& w) {
  return exponent_sums(w.letters());
}

}  // namespace

TEST_CASE("commutator fixture") {
  const CurveSystem sys = commutator_system();
  CHECK(validate(sys).empty());
  CHECK(extract_words(sys).at("r") == cyc("AbaB"));

  const WhiteheadGraph g = whitehead_graph(sys, "r");
  const ConnectivityReport conn = connectivity_report(g);
  CHECK(conn.connected);
  CHECK(conn.cut_vertices.empty());
  CHECK(!is_positive(g).positive);
}

TEST_CASE("face structure of the commutator complement") {
  const CurveSystem sys = commutator_system();
  const FaceStructure fs = face_structure(sys, "r");

  CHECK(fs.slots.size() == 8);
  CHECK(fs.face_count == 5);
  CHECK(fs.passes.size() == 3);

  // Both parking spots of the distinguished hug share a face.
  const int ga = fs.face_of_point({kBMinus, {3, 8}});
  const int gb = fs.face_of_point({kBMinus, {7, 16}});
  CHECK(ga == gb);

  // Seam s3 joins two distinct faces of the same complementary side.
  const int left = fs.face_of_point({kSeam3L, {1, 2}});
  const int right = fs.face_of_point({kSeam3R, {1, 2}});
  CHECK(left != right);

  CHECK_THROWS_AS(face_structure(sys, "nope"), std::invalid_argument);
}

TEST_CASE("route validation") {
  const CurveSystem sys = commutator_system();

  SUBCASE("gap hug is clean") {
    CHECK(validate_route(sys, gap_hug_route(), "r").empty());
  }

  SUBCASE("empty route") {
    CHECK(!validate_route(sys, ArcRoute{}, "r").empty());
  }

  SUBCASE("crossing the base curve") {
    ArcRoute route;
    route.chords.push_back(chord(kBMinus, {1, 8}, kBMinus, {3, 4}, ""));
    route.start = {1, 0, true};
    route.finish = {2, 1, false};
    const auto diags = validate_route(sys, route, "r");
    CHECK(mentions(diags, "crosses base chord"));
    CHECK_THROWS_AS(minimal_intersection(sys, route, "r", false),
                    std::invalid_argument);
  }

  SUBCASE("wrong approach side") {
    ArcRoute route = gap_hug_route();
    route.start.after = true;
    CHECK(mentions(validate_route(sys, route, "r"), "wrong side"));
  }

  SUBCASE("attachment separated from its slot") {
    ArcRoute route;
    route.chords.push_back(chord(kBMinus, {3, 4}, kBMinus, {7, 8}, ""));
    route.start = {1, 0, false};
    route.finish = {2, 1, false};
    CHECK(mentions(validate_route(sys, route, "r"), "not adjacent"));
  }
}

TEST_CASE("distinguished vertical wave") {
  const CurveSystem sys = commutator_system();
  const Wave wave = find_distinguished_wave(sys, "r");

  CHECK(wave.kind == WaveKind::Vertical);
  CHECK(wave.base_curve == "r");
  CHECK(wave.handle == 1);
  CHECK(wave.candidate_gaps == 2);
  CHECK(wave.unique_candidate);
  CHECK(wave.attach_signs[0] == -1);
  CHECK(wave.attach_signs[1] == 1);

  REQUIRE(wave.route.chords.size() == 1);
  CHECK(wave.route.chords[0].end[0].seg == kBMinus);
  CHECK(wave.route.chords[0].end[1].seg == kBMinus);
  CHECK(validate_route(sys, wave.route, "r").empty());

  // The hug never crosses its own curve, so the minimal count against the
  // base curve vanishes.
  CHECK(minimal_intersection(sys, wave.route, "r", false) == 0);
}

TEST_CASE("band surgery across the sign-change gap") {
  const CurveSystem sys = commutator_system();
  const Wave wave = find_distinguished_wave(sys, "r");
  const SurgeryResult sr = band_surgery(sys, "r", wave.route);

  CHECK(sr.components[0].word == cyc("a"));
  CHECK(sr.components[1].word == cyc("A"));
  for (const SurgeryComponent& comp : sr.components) {
    CHECK(validate(comp.system).empty());
    CHECK(comp.wave_traversals == 1);
    CHECK(extract_words(comp.system).count("r") == 1);
  }

  // The arc carries no letters, so the two sides split the base word's
  // exponent sums exactly.
  const auto s0 = sums_of(sr.components[0].word);
  const auto s1 = sums_of(sr.components[1].word);
  const auto base = sums_of(cyc("AbaB"));
  CHECK(s0.first + s1.first == base.first);
  CHECK(s0.second + s1.second == base.second);
}

TEST_CASE("surgery through the seam detour") {
  const CurveSystem sys = commutator_system();

  // The wrap gap of the same sign pattern: around the foot of the B-
  // circle through seam s3.
  ArcRoute route;
  route.chords.push_back(chord(kBMinus, {3, 4}, kSeam3L, {1, 2}, ""));
  route.chords.push_back(chord(kSeam3R, {1, 2}, kBMinus, {1, 8}, ""));
  route.start = {2, 1, false};
  route.finish = {1, 0, true};
  REQUIRE(validate_route(sys, route, "r").empty());

  // Interior junctions of a wave route sit on seams, never on circles:
  // the arc contributes no letters to either component.
  CHECK(seg_is_seam(route.chords[0].end[1].seg));
  CHECK(seg_is_seam(route.chords[1].end[0].seg));

  const SurgeryResult sr = band_surgery(sys, "r", route);
  CHECK(sr.components[0].word == cyc("A"));
  CHECK(sr.components[1].word == cyc("a"));
  for (const SurgeryComponent& comp : sr.components) {
    CHECK(validate(comp.system).empty());
  }

  // Same unordered outcome as the short hug across the other gap.
  const Wave wave = find_distinguished_wave(sys, "r");
  const SurgeryResult hug = band_surgery(sys, "r", wave.route);
  const std::multiset<CyclicWord> a{hug.components[0].word,
                                    hug.components[1].word};
  const std::multiset<CyclicWord> b{sr.components[0].word,
                                    sr.components[1].word};
  CHECK(a == b);
}

TEST_CASE("surgery attachment gates") {
  const CurveSystem sys = commutator_system();

  SUBCASE("both attachments on one chord") {
    ArcRoute route;
    route.chords.push_back(chord(kBMinus, {1, 8}, kAPlusArc2, {3, 4}, ""));
    route.start = {1, 0, true};
    route.finish = {1, 1, false};
    REQUIRE(validate_route(sys, route, "r").empty());
    CHECK_THROWS_WITH_AS(band_surgery(sys, "r", route),
                         "band_surgery: both attachments on one chord",
                         std::invalid_argument);
  }

  SUBCASE("same-sign attachment") {
    const CurveSystem bb = double_b_system();
    ArcRoute route;
    route.chords.push_back(chord(kBMinus, {1, 4}, kBMinus, {1, 2}, ""));
    route.start = {2, 1, false};
    route.finish = {0, 1, true};
    REQUIRE(validate_route(bb, route, "w").empty());
    CHECK_THROWS_WITH_AS(band_surgery(bb, "w", route),
                         "band_surgery: same-sign attachment is not a wave",
                         std::invalid_argument);
  }

  SUBCASE("dive between the handle circles") {
    // A legitimate arc from the B+ circle to the B- circle; surgery cuts
    // the two A jumps out of the commutator.
    ArcRoute route;
    route.chords.push_back(chord(kBPlus, {3, 4}, kBMinus, {3, 4}, ""));
    route.start = {3, 0, true};
    route.finish = {2, 1, false};
    REQUIRE(validate_route(sys, route, "r").empty());
    const SurgeryResult sr = band_surgery(sys, "r", route);
    CHECK(sr.components[0].word == cyc("b"));
    CHECK(sr.components[1].word == cyc("B"));
    for (const SurgeryComponent& comp : sr.components) {
      CHECK(validate(comp.system).empty());
    }
  }
}

TEST_CASE("meridian candidates of the commutator") {
  const CurveSystem sys = commutator_system();
  std::vector<std::string> diags;
  const auto cands = meridian_candidates(sys, "r", &diags);

  REQUIRE(cands.size() == 2);
  CHECK(diags.empty());
  const std::multiset<CyclicWord> words{cands[0].word, cands[1].word};
  CHECK(words == std::multiset<CyclicWord>{cyc("A"), cyc("a")});
  for (const MeridianCandidate& cand : cands) {
    CHECK(cand.homology.knot_exterior_compatible);
    CHECK(cand.wave_traversals == 1);
    CHECK(validate(cand.system).empty());
  }
}

TEST_CASE("wave against bystander curves") {
  const CurveSystem sys = observed_commutator_system();
  REQUIRE(validate(sys).empty());
  CHECK(extract_words(sys).at("z") == cyc("A"));
  CHECK(extract_words(sys).at("k") == cyc("AB"));
  CHECK(curve_intersection(sys, "r", "k").unsigned_count == 2);

  const Wave wave = find_distinguished_wave(sys, "r");
  CHECK(wave.kind == WaveKind::Vertical);
  CHECK(wave.handle == 1);
  CHECK(wave.unique_candidate);

  // The hug squeezes between the base slots and the k slot parked in the
  // same gap, so it crosses k exactly once.
  CHECK(minimal_intersection(sys, wave.route, "k", false) == 1);
  CHECK(std::abs(minimal_intersection(sys, wave.route, "k", true)) == 1);

  CHECK(wave_alpha_count(sys, wave, "z").unsigned_count == 0);
  CHECK(wave_alpha_count(sys, wave, "z").signed_count == 0);
  CHECK_THROWS_AS(wave_alpha_count(sys, wave, "k"), std::invalid_argument);

  // Surgery still splits cleanly with bystanders copied along.
  const SurgeryResult sr = band_surgery(sys, "r", wave.route);
  for (const SurgeryComponent& comp : sr.components) {
    CHECK(validate(comp.system).empty());
    CHECK(extract_words(comp.system).at("z") == cyc("A"));
    CHECK(extract_words(comp.system).at("k") == cyc("AB"));
  }
  CHECK(sr.components[0].word == cyc("a"));
  CHECK(sr.components[1].word == cyc("A"));
}
