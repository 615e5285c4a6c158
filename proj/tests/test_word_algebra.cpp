#include <catch2/catch_amalgamated.hpp>

#include "dnalg/perm.hpp"
#include "dnalg/random_words.hpp"
#include "dnalg/word.hpp"

using namespace dnalg;

TEST_CASE("compose concatenates without simplifying") {
  GenWord a = GenWord::parse("s1", 3);
  GenWord b = GenWord::parse("s2^-1", 3);
  CHECK(a.compose(b).str() == "s1 s2^-1");

  GenWord w = GenWord::parse("s1 s2 s1", 3);
  CHECK(w.compose(GenWord::empty(3)) == w);
  CHECK(GenWord::empty(3).compose(w) == w);

  CHECK(GenWord::parse("s2", 3).compose(GenWord::parse("s2^-1", 3)).str() == "s2 s2^-1");
  CHECK_THROWS_AS(a.compose(GenWord::parse("s1", 4)), WordError);
}

TEST_CASE("free_reduce cancels adjacent inverse pairs") {
  GenWord w = GenWord::parse("s2 s2 s2 s2^-1 s4^-1 s4 s3 s2 s4^-1", 6);
  CHECK(w.free_reduce().str() == "s2 s2 s3 s2 s4^-1");

  CHECK(GenWord::empty(4).free_reduce() == GenWord::empty(4));
  CHECK(GenWord::parse("s1 s1^-1 s1", 2).free_reduce().str() == "s1");

  // e letters never cancel
  CHECK(GenWord::parse("e2 e2", 4).free_reduce().str() == "e2 e2");
  GenWord x(2, {Generator::x1(), Generator::x1_inv()}, true);
  CHECK(x.free_reduce().size() == 0);
}

TEST_CASE("free_reduce is idempotent on random words") {
  WordSampler s(101);
  for (int t = 0; t < 50; ++t) {
    GenWord w = s.word(5, 12, true);
    GenWord r = w.free_reduce();
    CHECK(r.free_reduce() == r);
  }
}

TEST_CASE("invert reverses and flips") {
  CHECK(GenWord::parse("s1 s2^-1", 3).invert().str() == "s2 s1^-1");
  CHECK(GenWord::empty(3).invert() == GenWord::empty(3));
  CHECK_THROWS_AS(GenWord::parse("e2 s1", 4).invert(), WordError);

  WordSampler s(102);
  for (int t = 0; t < 30; ++t) {
    GenWord w = s.word(5, 8, false);
    CHECK(w.compose(w.invert()).free_reduce().size() == 0);
    GenWord v = s.word(5, 5, false);
    // anti-homomorphism
    CHECK(w.compose(v).invert() == v.invert().compose(w.invert()));
  }
}

TEST_CASE("mirror flips crossing signs in place") {
  CHECK(GenWord::parse("s1 s1 s1", 2).mirror().str() == "s1^-1 s1^-1 s1^-1");
  CHECK(GenWord::parse("e2", 4).mirror().str() == "e2");
  WordSampler s(103);
  for (int t = 0; t < 30; ++t) {
    GenWord w = s.word(6, 9, true);
    CHECK(w.mirror().mirror() == w);
  }
}

TEST_CASE("underlying permutation") {
  CHECK(underlying_permutation(GenWord::empty(3)) == Permutation::identity(3));
  CHECK(underlying_permutation(GenWord::parse("s1", 2)) == Permutation::transposition(2, 1));

  // s1 s2 carries the strand at top position 1 to bottom position 3
  Permutation p = underlying_permutation(GenWord::parse("s1 s2", 3));
  CHECK(p.apply(1) == 3);
  CHECK(p.apply(2) == 1);
  CHECK(p.apply(3) == 2);

  CHECK_THROWS_AS(underlying_permutation(GenWord::parse("e2", 4)), WordError);

  WordSampler s(104);
  for (int t = 0; t < 30; ++t) {
    GenWord a = s.word(5, 6, false), b = s.word(5, 6, false);
    CHECK(underlying_permutation(a.compose(b)) ==
          underlying_permutation(a) * underlying_permutation(b));
    CHECK(underlying_permutation(a.invert()) == underlying_permutation(a).inverse());
  }
}

TEST_CASE("type-B quotient") {
  GenWord x1(4, {Generator::x1()}, true);
  SignedPermutation t = quotient_to_typeB(x1);
  CHECK(t.images() == std::vector<int>{-1, 2, 3, 4});

  CHECK(quotient_to_typeB(GenWord(3, {Generator::sigma(1), Generator::sigma(1)}, true))
            .is_identity());

  // s1 x1 s1 flips the sign at position 2
  GenWord w(3, {Generator::sigma(1), Generator::x1(), Generator::sigma(1)}, true);
  CHECK(quotient_to_typeB(w).images() == std::vector<int>{1, -2, 3});

  // generator letters square to the identity in the quotient
  for (int i = 1; i <= 2; ++i) {
    GenWord g(3, {Generator::sigma(i), Generator::sigma(i)}, true);
    CHECK(quotient_to_typeB(g).is_identity());
  }
  GenWord xx(3, {Generator::x1(), Generator::x1()}, true);
  CHECK(quotient_to_typeB(xx).is_identity());
}

TEST_CASE("edit_crossing swap and smooth") {
  GenWord w = GenWord::parse("s1 s2", 3);
  CHECK(w.edit_crossing(0, GenWord::EditMode::Swap).str() == "s1^-1 s2");
  CHECK(GenWord::parse("s2", 4).edit_crossing(0, GenWord::EditMode::Smooth).str() == "e2");
  CHECK(w.edit_crossing(1, GenWord::EditMode::Swap).edit_crossing(1, GenWord::EditMode::Swap) == w);
  CHECK_THROWS_AS(w.edit_crossing(5, GenWord::EditMode::Swap), WordError);
  CHECK_THROWS_AS(GenWord::parse("e2", 4).edit_crossing(0, GenWord::EditMode::Swap), WordError);
}

TEST_CASE("serialization round trip") {
  for (const char *text : {"s1 s2^-1 e4", "", "s1 s1 s1", "e2 s3^-1 e1"}) {
    GenWord w = GenWord::parse(text, 6);
    CHECK(GenWord::parse(w.str(), 6) == w);
    CHECK(w.str() == text);
  }
  GenWord a = GenWord::parse("x1 s1 x1^-1", 3, true);
  CHECK(a.str() == "x1 s1 x1^-1");
  CHECK(GenWord::parse(a.str(), 3, true) == a);
}

TEST_CASE("validation errors") {
  CHECK_THROWS_AS(GenWord::parse("s4", 4), WordError);  // index out of range
  CHECK_THROWS_AS(GenWord::parse("x1", 4), WordError);  // affine letter, non-affine word
  CHECK_THROWS_AS(GenWord::parse("e1^-1", 4), WordError);
  CHECK_THROWS_AS(GenWord::parse("q3", 4), WordError);
  CHECK_THROWS_AS(GenWord(0, {}), WordError);
}
