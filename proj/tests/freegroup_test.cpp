#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "handlewave/morphism.hpp"
#include "handlewave/parse.hpp"
#include "handlewave/primitive.hpp"
#include "handlewave/word.hpp"

using namespace handlewave;

namespace {

CyclicWord cyc(const std::string& text) {
  return CyclicWord(parse_word_text(text));
}

Endomorphism morphism(const std::string& image_a, const std::string& image_b) {
  return Endomorphism{free_reduce(parse_word_text(image_a)),
                      free_reduce(parse_word_text(image_b))};
}

// All cyclically reduced words of the given length, enumerated in letter
// order. Used for small exhaustive sweeps.
void each_cyclically_reduced(std::size_t length,
                             const std::function<void(const Word&)>& fn) {
  Word w(length, Letter::A);
  const auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == length) {
      if (length < 2 || w.front() != inverse(w.back())) fn(w);
      return;
    }
    for (std::uint8_t v = 0; v < 4; ++v) {
      const Letter x = static_cast<Letter>(v);
      if (i > 0 && x == inverse(w[i - 1])) continue;
      w[i] = x;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace

TEST_CASE("letter utilities") {
  CHECK(inverse(Letter::A) == Letter::a);
  CHECK(inverse(Letter::b) == Letter::B);
  CHECK(generator_of(Letter::a) == 0);
  CHECK(generator_of(Letter::B) == 1);
  CHECK(sign_of(Letter::A) == 1);
  CHECK(sign_of(Letter::b) == -1);
  CHECK(to_char(Letter::a) == 'a');
  CHECK(letter_from_char('B') == Letter::B);
  CHECK(!letter_from_char('C').has_value());
}

TEST_CASE("normalization") {
  CHECK(to_string(cyc("Aa B")) == "B");
  CHECK(to_string(cyc("B A b")) == "A");
  CHECK(to_string(cyc("ABBaBB")) == "ABBaBB");
  CHECK(cyc("").empty());

  SUBCASE("idempotent") {
    for (const char* text : {"ABBaBB", "BAb", "AABBB", "bbaa"}) {
      const CyclicWord once = cyc(text);
      CHECK(CyclicWord(once.letters()) == once);
    }
  }

  SUBCASE("word times inverse cancels") {
    const Word w = parse_word_text("ABaBBA");
    Word doubled = w;
    const Word inv = inverse_word(w);
    doubled.insert(doubled.end(), inv.begin(), inv.end());
    CHECK(free_reduce(doubled).empty());
    CHECK(CyclicWord(doubled).empty());
  }

  SUBCASE("canonical rotation is least") {
    CHECK(to_string(cyc("BBA")) == "ABB");
    CHECK(to_string(cyc("BaBA")) == "ABaB");
  }
}

TEST_CASE("cyclic reduction trims ends") {
  CHECK(to_string(cyc("A BB a")) == "BB");
  CHECK(to_string(cyc("a BB A")) == "BB");
  CHECK(to_string(cyc("ba BB AB")) == "BB");
}

TEST_CASE("exponent sums") {
  CHECK(exponent_sums(cyc("AABBB")) == std::pair<long long, long long>{2, 3});
  CHECK(exponent_sums(cyc("ABBaBB")) == std::pair<long long, long long>{0, 4});
  CHECK(exponent_sums(cyc("ABAB")) == std::pair<long long, long long>{2, 2});

  SUBCASE("conjugation invariant, inversion negates") {
    const Word w = parse_word_text("ABBaB");
    Word conj = parse_word_text("BA");
    conj.insert(conj.end(), w.begin(), w.end());
    const Word tail = inverse_word(parse_word_text("BA"));
    conj.insert(conj.end(), tail.begin(), tail.end());
    CHECK(exponent_sums(CyclicWord(conj)) == exponent_sums(CyclicWord(w)));
    const auto [p, q] = exponent_sums(w);
    CHECK(exponent_sums(inverse_word(w)) ==
          std::pair<long long, long long>{-p, -q});
  }
}

TEST_CASE("homology verdicts") {
  const HomologyVerdict abab = homology_check(cyc("ABAB"));
  CHECK(abab.gcd == 2);
  CHECK(!abab.torsion_free);
  CHECK(!abab.knot_exterior_compatible);

  const HomologyVerdict aabbb = homology_check(cyc("AABBB"));
  CHECK(aabbb.gcd == 1);
  CHECK(aabbb.torsion_free);
  CHECK(aabbb.knot_exterior_compatible);

  const HomologyVerdict bb = homology_check(cyc("BB"));
  CHECK(bb.exponent_sum_A == 0);
  CHECK(bb.exponent_sum_B == 2);
  CHECK(bb.gcd == 2);
  CHECK(!bb.torsion_free);

  const HomologyVerdict trivial = homology_check(cyc(""));
  CHECK(trivial.gcd == 0);
  CHECK(trivial.torsion_free);
  CHECK(!trivial.knot_exterior_compatible);
}

TEST_CASE("apply_morphism") {
  const Endomorphism phi = morphism("A B^-2", "B");

  CHECK(apply_morphism(phi, cyc("ABBaBB")) == cyc("ABBaBB"));
  CHECK(apply_morphism(phi, cyc("AABB")) == cyc("AAbb"));

  SUBCASE("identity fixes everything") {
    for (const char* text : {"ABBaBB", "AABB", "A", "bAbA"}) {
      CHECK(apply_morphism(Endomorphism::identity(), cyc(text)) == cyc(text));
    }
  }

  SUBCASE("composition agrees with sequential application") {
    const Endomorphism psi = morphism("B", "A");
    const Endomorphism both = compose(phi, psi);
    for (const char* text : {"ABBaBB", "AAB", "AbbAB"}) {
      CHECK(apply_morphism(both, cyc(text)) ==
            apply_morphism(phi, apply_morphism(psi, cyc(text))));
    }
  }
}

TEST_CASE("is_automorphism") {
  CHECK(is_automorphism(morphism("A B^-2", "B")));
  CHECK(!is_automorphism(morphism("AA", "B")));
  CHECK(is_automorphism(morphism("B", "A")));
  CHECK(is_automorphism(Endomorphism::identity()));
  CHECK(!is_automorphism(morphism("AB", "BA")));
}

TEST_CASE("christoffel words") {
  CHECK(to_string(christoffel_word(1, 1)) == "AB");
  CHECK(to_string(christoffel_word(2, 1)) == "AAB");
  CHECK(to_string(christoffel_word(3, 2)) == "AABAB");
  CHECK(to_string(christoffel_word(1, 2)) == "ABB");
  CHECK_THROWS_AS(christoffel_word(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(christoffel_word(0, 1), std::invalid_argument);

  SUBCASE("always primitive") {
    for (long long p = 1; p <= 6; ++p) {
      for (long long q = 1; q <= 6; ++q) {
        if (std::gcd(p, q) != 1) continue;
        CHECK(is_primitive(CyclicWord(christoffel_word(p, q))));
      }
    }
  }
}

TEST_CASE("is_primitive") {
  CHECK(is_primitive(cyc("AB")));
  CHECK(!is_primitive(cyc("AABB")));
  CHECK(!is_primitive(cyc("AABBB")));
  CHECK(is_primitive(cyc("A")));
  CHECK(is_primitive(cyc("b")));
  CHECK(is_primitive(cyc("AAb")));
  CHECK(!is_primitive(cyc("ABaB")));
  CHECK_THROWS_AS(is_primitive(cyc("")), std::invalid_argument);

  SUBCASE("invariant under automorphisms") {
    const std::vector<Endomorphism> autos = {
        morphism("A B^-2", "B"), morphism("B", "A"), morphism("AB", "B")};
    for (const char* text : {"AB", "AABB", "AABBB", "ABBaBB", "AAB"}) {
      for (const auto& phi : autos) {
        CHECK(is_primitive(apply_morphism(phi, cyc(text))) ==
              is_primitive(cyc(text)));
      }
    }
  }
}

TEST_CASE("whitehead_reduce") {
  CHECK(whitehead_reduce(cyc("AABAB")).minimum.size() == 1);
  CHECK(whitehead_reduce(cyc("AABBB")).minimum.size() > 1);

  const WhiteheadReduction already = whitehead_reduce(cyc("A"));
  CHECK(already.minimum == cyc("A"));
  CHECK(already.steps.empty());

  SUBCASE("agrees with is_primitive up to length 8") {
    for (std::size_t len = 1; len <= 8; ++len) {
      each_cyclically_reduced(len, [](const Word& w) {
        const CyclicWord cw{w};
        if (cw.size() != w.size()) return;  // skip non-canonical duplicates
        CHECK(is_primitive(cw) == (whitehead_reduce(cw).minimum.size() == 1));
      });
    }
  }
}

TEST_CASE("count_cyclic_occurrences") {
  CHECK(count_cyclic_occurrences(cyc("ABABAb"), parse_word_text("AB")) == 2);
  CHECK(count_cyclic_occurrences(cyc("AB^2AB^2ABAB"), parse_word_text("AB")) ==
        4);
  CHECK(count_cyclic_occurrences(cyc("AABB"), parse_word_text("ABABAB")) == 0);
  CHECK(count_cyclic_occurrences(cyc(""), parse_word_text("A")) == 0);
  CHECK_THROWS_AS(count_cyclic_occurrences(cyc("AB"), Word{}),
                  std::invalid_argument);

  SUBCASE("wraparound counts") {
    CHECK(count_cyclic_occurrences(cyc("BA"), parse_word_text("AB")) == 1);
  }
}

TEST_CASE("seifert-m word is fixed by A -> A B^-T") {
  for (long long s = 2; s <= 4; ++s) {
    const CyclicWord alpha =
        cyc("A B^" + std::to_string(s) + " a B^" + std::to_string(s));
    for (long long t = -3; t <= 3; ++t) {
      Word image_a = {Letter::A};
      const Letter block = t >= 0 ? Letter::b : Letter::B;
      image_a.insert(image_a.end(), static_cast<std::size_t>(std::llabs(t)),
                     block);
      const Endomorphism phi{image_a, {Letter::B}};
      CHECK(apply_morphism(phi, alpha) == alpha);
    }
  }
}

TEST_CASE("word text parsing") {
  CHECK(to_string(cyc("A B^2 a B^2")) == "ABBaBB");
  CHECK(CyclicWord(parse_word_text("A^-1A")).empty());
  CHECK(to_string(free_reduce(parse_word_text("B^-2"))) == "bb");
  CHECK_THROWS_AS(parse_word_text("C"), ParseError);
  CHECK_THROWS_AS(parse_word_text("^2"), ParseError);
  CHECK_THROWS_AS(parse_word_text("A^"), ParseError);
  CHECK_THROWS_AS(parse_word_text("A^x"), ParseError);
  CHECK(parse_word_text("A^0").empty());

  SUBCASE("error positions") {
    try {
      parse_word_text("AB C");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.position == 3);
    }
  }
}
