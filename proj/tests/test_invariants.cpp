#include <catch2/catch_amalgamated.hpp>

#include "dnalg/jones.hpp"
#include "dnalg/knot_table.hpp"
#include "dnalg/random_words.hpp"
#include "dnalg/statesum.hpp"
#include "dnalg/tl.hpp"

using namespace dnalg;

namespace {
LaurentPoly A_pow(int k) { return LaurentPoly::monomial(1, k); }
} // namespace

TEST_CASE("laurent arithmetic and text form") {
  LaurentPoly d = LaurentPoly::delta();
  CHECK(d.str() == "-A^2 - A^-2");
  CHECK((d * d).coeff(4) == 1);
  CHECK((d * d).coeff(0) == 2);
  CHECK((d - d).is_zero());
  CHECK(d.mirror() == d);
  CHECK(A_pow(3).times_minus_A_pow(-3) == LaurentPoly(-1));
  CHECK(LaurentPoly::monomial(1, -4).str() == "A^-4");
  LaurentPoly p = LaurentPoly::monomial(-1, -4) + LaurentPoly::monomial(1, -12);
  CHECK(p.str() == "-A^-4 + A^-12");
}

TEST_CASE("TL diagram algebra relations") {
  int n = 4;
  for (int i = 1; i < n; ++i) {
    TLElement e = TLElement::generator(n, i);
    TLElement ee = e * e;
    CHECK(ee == e.scaled(LaurentPoly::delta()));
    CHECK(TLElement::one(n) * e == e);
    CHECK(e * TLElement::one(n) == e);
  }
  // e_i e_{i+1} e_i = e_i
  for (int i = 1; i + 1 < n; ++i) {
    TLElement a = TLElement::generator(n, i) * TLElement::generator(n, i + 1) *
                  TLElement::generator(n, i);
    CHECK(a == TLElement::generator(n, i));
  }
  // all basis diagrams of products stay planar
  WordSampler s(301);
  for (int t = 0; t < 20; ++t) {
    TLElement x = word_to_tl(s.word(5, 7, true));
    for (const auto &[d, c] : x.terms()) CHECK(d.is_planar());
  }
}

TEST_CASE("skein relation under the bracket") {
  for (int n = 2; n <= 6; ++n)
    for (int i = 1; i < n; ++i) {
      TLElement lhs = word_to_tl(GenWord(n, {Generator::sigma(i)})) +
                      word_to_tl(GenWord(n, {Generator::sigma_inv(i)}));
      TLElement rhs = (TLElement::one(n) + TLElement::generator(n, i))
                          .scaled(A_pow(1) + A_pow(-1));
      CHECK(lhs == rhs);
      // sigma_i e_i = -A^-3 e_i
      TLElement se = word_to_tl(GenWord(n, {Generator::sigma(i), Generator::e(i)}));
      CHECK(se == TLElement::generator(n, i).scaled(A_pow(-3) * LaurentPoly(-1)));
    }
}

TEST_CASE("bracket reference values") {
  CHECK(kauffman_bracket(GenWord::empty(2), Closure::Plat) == LaurentPoly(1));
  CHECK(kauffman_bracket(GenWord::empty(4), Closure::Plat) == LaurentPoly::delta());
  CHECK(kauffman_bracket(GenWord::parse("s1", 2), Closure::Trace) ==
        LaurentPoly::monomial(-1, 3));
  // trefoil bracket from the 2-strand torus braid
  LaurentPoly tref = kauffman_bracket(GenWord::parse("s1 s1 s1", 2), Closure::Trace);
  LaurentPoly expect = LaurentPoly::monomial(-1, 5) + LaurentPoly::monomial(-1, -3) +
                       LaurentPoly::monomial(1, -7);
  CHECK(tref == expect);
}

TEST_CASE("Reidemeister moves at the bracket level") {
  WordSampler s(302);
  for (int t = 0; t < 25; ++t) {
    GenWord w = s.word(5, 7, true);
    LaurentPoly base_t = kauffman_bracket(w, Closure::Trace);
    // R2: insert s_i s_i^-1 at a random position
    int i = 1 + static_cast<int>(s.next(4));
    std::size_t pos = s.next(static_cast<std::uint32_t>(w.size() + 1));
    std::vector<Generator> ls = w.letters();
    ls.insert(ls.begin() + pos, {Generator::sigma(i), Generator::sigma_inv(i)});
    GenWord w2(5, std::move(ls));
    CHECK(kauffman_bracket(w2, Closure::Trace) == base_t);

    // R1 as stabilization: a fresh strand plus a kink onto it scales the
    // trace bracket by -A^{+-3}
    GenWord w6(6, w.letters());
    GenWord kp = w6.compose(GenWord(6, {Generator::sigma(5)}));
    GenWord km = w6.compose(GenWord(6, {Generator::sigma_inv(5)}));
    CHECK(kauffman_bracket(kp, Closure::Trace) == base_t.times_minus_A_pow(3));
    CHECK(kauffman_bracket(km, Closure::Trace) == base_t.times_minus_A_pow(-3));
  }
}

TEST_CASE("TL route equals state-sum oracle on random words") {
  WordSampler s(303);
  for (int t = 0; t < 120; ++t) {
    int n = 2 + 2 * static_cast<int>(s.next(3)); // 2, 4, 6
    GenWord w = s.word(n, 1 + static_cast<int>(s.next(10)), true);
    CHECK(kauffman_bracket(w, Closure::Plat) == bracket_statesum(plat_closure(w)));
    CHECK(kauffman_bracket(w, Closure::Trace) == bracket_statesum(trace_closure(w)));
  }
}

TEST_CASE("jones reference values") {
  // unknot
  CHECK(jones_key(plat_closure(GenWord::empty(2))).polys ==
        std::vector<LaurentPoly>{LaurentPoly(1)});

  // right trefoil: V = A^-4 + A^-12 - A^-16, i.e. t + t^3 - t^4 at t = A^-4
  JonesKey tref = jones_key(trace_closure(GenWord::parse("s1 s1 s1", 2)));
  REQUIRE(tref.polys.size() == 1);
  LaurentPoly expect = LaurentPoly::monomial(1, -4) + LaurentPoly::monomial(1, -12) +
                       LaurentPoly::monomial(-1, -16);
  CHECK(tref.polys[0] == expect);

  // a kink on a stabilizing strand does not change the key
  JonesKey kinked = jones_key(trace_closure(GenWord::parse("s1 s1 s1 s2", 3)));
  CHECK(kinked.polys == tref.polys);

  // Hopf link has two orientation classes
  JonesKey hopf = jones_key(trace_closure(GenWord::parse("s1 s1", 2)));
  CHECK(hopf.polys.size() == 2);
  CHECK(hopf.is_amphichiral()); // the orientation multiset cannot see its chirality

  // mirror symmetry
  WordSampler s(304);
  for (int t = 0; t < 20; ++t) {
    GenWord w = s.word(4, 6, false);
    CHECK(jones_key(plat_closure(w.mirror())) == jones_key(plat_closure(w)).mirrored());
  }
}

TEST_CASE("knot table builds with unique keys") {
  const auto &table = knot_table();
  CHECK(table.size() >= 22);
  for (std::size_t i = 0; i < table.size(); ++i)
    for (std::size_t j = i + 1; j < table.size(); ++j)
      CHECK_FALSE((table[i].components == table[j].components && table[i].key == table[j].key));

  // mirror pairs related by A -> A^-1
  for (const auto &e : table) {
    if (e.chirality == "self") {
      CHECK(e.key.is_amphichiral());
      continue;
    }
    bool found = false;
    for (const auto &m : table)
      if (m.full_name() == e.mirror) {
        found = true;
        CHECK(m.key == e.key.mirrored());
      }
    CHECK(found);
  }

  // chiral pairs exist where expected
  int trefoils = 0;
  for (const auto &e : table)
    if (e.name == "trefoil") ++trefoils;
  CHECK(trefoils == 2);

  std::string js = knot_table_json(table);
  CHECK(js.find("\"trefoil\"") != std::string::npos);
  CHECK(js.find("\"whitehead link\"") != std::string::npos);
}

TEST_CASE("identification of reference closures") {
  CHECK(identify(GenWord::empty(4), Closure::Plat).str() == "2-component unlink");
  CHECK(identify(GenWord::empty(6), Closure::Plat).str() == "3-component unlink");
  CHECK(identify(GenWord::parse("s1", 2), Closure::Trace).str() == "unknot");
  CHECK(identify(GenWord::parse("s1 s1", 2), Closure::Trace).str() == "hopf link");
  CHECK(identify(GenWord::parse("s1 s1 s1", 2), Closure::Trace).str() == "trefoil (right)");
  CHECK(identify(GenWord::parse("s1 s1 s1", 2).mirror(), Closure::Trace).str() ==
        "trefoil (left)");
  CHECK(identify(GenWord::parse("s1 s2^-1 s1 s2^-1", 3), Closure::Trace).name ==
        "figure-8 knot");
  CHECK(identify(GenWord::parse("s1 s1 s1 s1", 2), Closure::Trace).name == "solomon link");
  CHECK(identify(GenWord::parse("s1 s1 s1 s1 s1", 2), Closure::Trace).name == "5_1");
  CHECK(identify(GenWord::parse("s1 s1 s1 s1 s1 s1 s1", 2), Closure::Trace).name == "7_1");

  CHECK(identify(GenWord::parse("s2 s1 s3 s2^-1", 4), Closure::Plat).str() == "hopf link");
  CHECK(identify(GenWord::parse("s2 s2 s1 s2^-1", 4), Closure::Plat).name == "trefoil");
  CHECK(identify(GenWord::parse("s2 s2 s2 s1 s2^-1", 4), Closure::Plat).name == "figure-8 knot");

  // an 8-crossing knot is not in the table
  Identification un = identify(GenWord::parse("s1 s1 s1 s1 s1 s2^-1 s1 s2^-1", 3), Closure::Trace);
  CHECK((un.found == false || un.crossings <= 8));
}
