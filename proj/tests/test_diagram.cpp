#include "knotinv/diagram.hpp"

#include "knot_fixtures.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace knotinv;

TEST_CASE("parse standard PDs") {
    PlanarDiagram t = fixtures::trefoil_pd();
    CHECK(t.size() == 3);
    CHECK(t.writhe() == -3);
    for (int s : t.signs()) CHECK(s == -1);

    PlanarDiagram f8 = fixtures::figure_eight_pd();
    CHECK(f8.size() == 4);
    CHECK(f8.writhe() == 0);

    CHECK(t.str() == "X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)");
    CHECK(PlanarDiagram::parse(" X( 1,4, 2,5 ) , X(3,6,4,1), X(5,2,6,3) ").str() == t.str());
}

TEST_CASE("unknot token") {
    PlanarDiagram u = PlanarDiagram::parse("U");
    CHECK(u.is_unknot());
    CHECK(u.size() == 0);
    CHECK(u.writhe() == 0);
}

TEST_CASE("parse rejects bad input") {
    CHECK_THROWS_AS(PlanarDiagram::parse(""), input_error);
    CHECK_THROWS_AS(PlanarDiagram::parse("X(1,4,2,5)"), input_error);  // unpaired labels
    CHECK_THROWS_AS(PlanarDiagram::parse("X(1,4,2"), input_error);
    CHECK_THROWS_AS(PlanarDiagram::parse("Y(1,2,3,4)"), input_error);
    CHECK_THROWS_AS(PlanarDiagram::parse("X(1,4,2,5),X(3,6,4,1),X(5,2,6,3),"), input_error);
    // two-component link
    CHECK_THROWS_WITH(PlanarDiagram::parse("X(1,3,2,4),X(3,1,4,2)"),
                      Catch::Matchers::ContainsSubstring("links unsupported"));
    // labels not in strand order
    CHECK_THROWS_AS(PlanarDiagram::parse("X(2,4,1,5),X(3,6,4,1),X(5,1,6,3)"), input_error);
}

TEST_CASE("validation report lists violations") {
    CHECK(validate(fixtures::trefoil_pd()).ok());
    CHECK(validate(PlanarDiagram::unknot()).ok());

    ValidationReport r =
        validate_crossings({Crossing{{1, 4, 2, 5}}, Crossing{{3, 6, 4, 1}}, Crossing{{5, 2, 6, 1}}});
    CHECK_FALSE(r.ok());
    bool mentions_multiplicity = false;
    for (const auto& m : r.issues)
        if (m.find("appears") != std::string::npos) mentions_multiplicity = true;
    CHECK(mentions_multiplicity);

    ValidationReport link = validate_crossings({Crossing{{1, 3, 2, 4}}, Crossing{{3, 1, 4, 2}}});
    CHECK_FALSE(link.ok());
    CHECK(link.joined().find("links unsupported") != std::string::npos);
}

TEST_CASE("braid parsing") {
    BraidWord b = parse_braid("strands: 3; word: 1,-2,1,-2");
    CHECK(b.strands == 3);
    CHECK(b.letters == std::vector<int>{1, -2, 1, -2});

    BraidWord e = parse_braid("strands: 1; word:");
    CHECK(e.letters.empty());

    CHECK_THROWS_AS(parse_braid("strands: 2; word: 0"), input_error);
    CHECK_THROWS_AS(parse_braid("strands: 2; word: 2"), input_error);
    CHECK_THROWS_AS(parse_braid("strands: 0; word:"), input_error);
    CHECK_THROWS_AS(parse_braid("word: 1"), input_error);
}

TEST_CASE("braid closures") {
    PlanarDiagram t = braid_to_pd(fixtures::torus_braid(3));
    CHECK(t.size() == 3);
    CHECK(t.writhe() == 3);

    PlanarDiagram tm = braid_to_pd(fixtures::torus_braid(-3));
    CHECK(tm.writhe() == -3);

    PlanarDiagram f8 = braid_to_pd(fixtures::braid(3, {1, -2, 1, -2}));
    CHECK(f8.size() == 4);
    CHECK(f8.writhe() == 0);

    PlanarDiagram one = braid_to_pd(fixtures::torus_braid(1));
    CHECK(one.size() == 1);
    CHECK(one.writhe() == 1);

    CHECK(braid_to_pd(parse_braid("strands: 1; word:")).is_unknot());

    CHECK_THROWS_WITH(braid_to_pd(fixtures::braid(3, {1})),
                      Catch::Matchers::ContainsSubstring("links unsupported"));
    CHECK_THROWS_WITH(braid_to_pd(parse_braid("strands: 2; word:")),
                      Catch::Matchers::ContainsSubstring("links unsupported"));
}

TEST_CASE("braid-generated diagrams carry the letter signs") {
    // This locks the crossing-sign convention: the diagram's writhe equals
    // the algebraic letter sum, crossing by crossing, and the PD text
    // round-trips through the parser with identical signs.
    for (const BraidWord& b :
         {fixtures::torus_braid(5), fixtures::braid(3, {1, -2, 1, -2}),
          fixtures::braid(3, {-1, -1, -2, 1, -2, -2}), fixtures::braid(4, {1, 2, 3, 1, 1}),
          fixtures::torus_braid(-7)}) {
        PlanarDiagram d = braid_to_pd(b);
        REQUIRE(d.size() == b.letters.size());
        long long sum = 0;
        for (int l : b.letters) sum += l > 0 ? 1 : -1;
        CHECK(d.writhe() == sum);

        PlanarDiagram reparsed = PlanarDiagram::parse(d.str());
        CHECK(reparsed.signs() == d.signs());
        CHECK(reparsed.crossings() == d.crossings());
    }
}

TEST_CASE("mirror flips every sign and is an involution") {
    PlanarDiagram t = fixtures::trefoil_pd();
    PlanarDiagram m = t.mirrored();
    CHECK(m.writhe() == 3);
    CHECK(m.mirrored().crossings() == t.crossings());

    PlanarDiagram f8 = fixtures::figure_eight_pd();
    CHECK(f8.mirrored().writhe() == 0);
    CHECK(f8.mirrored().mirrored().crossings() == f8.crossings());

    CHECK(PlanarDiagram::unknot().mirrored().is_unknot());

    PlanarDiagram one = braid_to_pd(fixtures::torus_braid(1));
    CHECK(one.mirrored().writhe() == -1);
    CHECK(one.mirrored().mirrored().crossings() == one.crossings());
}
