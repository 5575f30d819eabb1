#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "perfcx/koszul.hpp"
#include "perfcx/textio.hpp"
#include "test_util.hpp"

using namespace perfcx;

TEST_CASE("polynomial parsing") {
    Ring r = parseRing("Q[x,y]");
    Polynomial x = r.var(0), y = r.var(1);

    CHECK(parsePolynomial(r, "x^2*y - 2*x + 3/4") ==
          x * x * y - x.scaled(Scalar::ofInt(r.field(), 2)) +
              r.constant(Scalar::ofRational(r.field(), mpq_class(3, 4))));
    CHECK(parsePolynomial(r, "(x + y)*(x - y)") == x * x - y * y);
    CHECK(parsePolynomial(r, "-x") == -x);
    CHECK(parsePolynomial(r, "0") == r.zero());

    CHECK_THROWS_AS(parsePolynomial(r, "x + z"), DataError);
    CHECK_THROWS_AS(parsePolynomial(r, "x +"), DataError);
    CHECK_THROWS_AS(parsePolynomial(r, "x ^ -1"), DataError);

    // diagnostics carry positions
    try {
        parsePolynomial(r, "x *\n q");
        CHECK(false);
    } catch (const DataError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("polynomial printing round trips") {
    Ring r = parseRing("Q[x,y]");
    testutil::Rng rng(2718);
    for (int i = 0; i < 60; ++i) {
        Polynomial p = testutil::randomPolynomial(rng, r, 4);
        CHECK(parsePolynomial(r, p.str()) == p);
    }
    Ring f5 = parseRing("F5[x,y]");
    for (int i = 0; i < 30; ++i) {
        Polynomial p = testutil::randomPolynomial(rng, f5, 3);
        CHECK(parsePolynomial(f5, p.str()) == p);
    }
}

TEST_CASE("ring parsing") {
    Ring r = parseRing("ring = Q[x,y,z] / (x*y - z^2); order = degrevlex;");
    CHECK(r.nvars() == 3);
    CHECK(r.field().isRationals());
    CHECK(r.quotientGens().size() == 1);
    Polynomial p = r.var(0) * r.var(1) - r.var(2) * r.var(2);
    CHECK(p.isZero());

    Ring bare = parseRing("Q[t]/(t^2)");
    CHECK((bare.var(0) * bare.var(0)).isZero());

    Ring fp = parseRing("F2[x]");
    CHECK(fp.field().characteristic() == 2);
    CHECK((fp.var(0) + fp.var(0)).isZero());

    Ring lexr = parseRing("ring = Q[x,y]; order = lex;");
    CHECK(lexr.order().kind == MonomialOrder::Kind::Lex);

    CHECK_THROWS_AS(parseRing("Z[x]"), DataError);
    CHECK_THROWS_AS(parseRing("Q[a,b,c,d,e,f,g]"), DataError);
    CHECK_THROWS_AS(parseRing("Q[x]/(x - 1)"), DataError);
}

TEST_CASE("ring printing round trips") {
    for (auto text : {"Q[x,y]", "Q[x,y] / (x*y)", "F5[a,b] / (a^2 + b^2)"}) {
        Ring r = parseRing(text);
        Ring back = parseRing(printRing(r));
        CHECK(back.str() == r.str());
        CHECK(back.order().kind == r.order().kind);
    }
}

TEST_CASE("document parsing") {
    std::string text = R"(
ring = Q[x,y]; order = degrevlex;
complex F {
  deg 0: rank 1;
  deg 1: rank 2;
  deg 2: rank 1;
  d1 = [[x, y]];
  d2 = [[-y], [x]];
}
complex G {
  deg 2: rank 1;
}
map f : F -> G {
  c2 = [[1]];
}
)";
    Document doc = parseDocument(text);
    CHECK(doc.complexes.size() == 2);
    CHECK(doc.maps.size() == 1);
    const FreeComplex& f = doc.complexNamed("F");
    CHECK(f.rank(1) == 2);
    CHECK(spanOf(f) == 3);
    const NamedChainMap& m = doc.mapNamed("f");
    CHECK(m.source == "F");
    CHECK(m.map.comp(2).at(0, 0).isOne());

    CHECK_THROWS_AS(parseDocument("complex F { deg 0: rank 1; }"), DataError);
    // malformed matrix shape
    CHECK_THROWS_AS(
        parseDocument("ring = Q[x]; complex F { deg 0: rank 2; deg 1: rank 1; d1 = [[x]]; }"),
        DataError);
}

TEST_CASE("complex printing round trips") {
    Ring r = parseRing("Q[x,y]");
    KoszulComplex k = koszul(r, {r.var(0), r.var(1)});
    std::string text = printRing(r) + "\n" + printComplex(k.cx, "K");
    Document doc = parseDocument(text);
    CHECK(doc.complexNamed("K") == k.cx);

    // negative degrees use the parenthesized tags
    FreeComplex d = dual(k.cx);
    std::string dualText = printRing(r) + "\n" + printComplex(d, "D");
    CHECK(parseDocument(dualText).complexNamed("D") == d);

    // chain maps round trip as well
    ChainMap id = ChainMap::identity(k.cx);
    std::string mapText = text + printChainMap(id, "f", "K", "K");
    Document doc2 = parseDocument(mapText);
    CHECK(doc2.mapNamed("f").map == id);
}

TEST_CASE("matrix parsing") {
    Ring r = parseRing("Q[x,y]");
    RingMatrix m = parseMatrix(r, "[[x, y], [0, x*y]]", 2, 2);
    CHECK(m.at(0, 0) == r.var(0));
    CHECK(m.at(1, 0).isZero());
    CHECK(m.at(1, 1) == r.var(0) * r.var(1));
    CHECK_THROWS_AS(parseMatrix(r, "[[x], [y, x]]", 2, 1), DataError);
}
