#include <catch2/catch_amalgamated.hpp>

#include <census/presentation.hpp>

#include <random>

using namespace census;

TEST_CASE("word reduction") {
    REQUIRE(free_reduce({1, -1, 2}) == Word{2});
    REQUIRE(cyclic_reduce({1, 2, -1}) == Word{2});
    REQUIRE(free_reduce({1, 2, -2, -1}).empty());
    REQUIRE(inverse_word({1, -2}) == Word{2, -1});
}

TEST_CASE("serialisation round trip") {
    Presentation p;
    p.gens = 2;
    p.relators = {{1, 1, -2, -2}};
    REQUIRE(p.str() == "gens 2; rel a a B B");
    REQUIRE(Presentation::parse(p.str()) == p);
}

TEST_CASE("single-generator relator collapses the presentation") {
    // <a | a> is trivial
    Presentation p;
    p.gens = 1;
    p.relators = {{1}};
    auto r = tietze_simplify(p);
    REQUIRE(r.p.gens == 0);
    REQUIRE(r.p.relators.empty());
    REQUIRE(!r.budget_exhausted);
}

TEST_CASE("length-3 relator with a single occurrence eliminates a generator") {
    // <a,b,c | cba, abA B> -> two generators, abelianization Z^2
    Presentation p;
    p.gens = 3;
    p.relators = {{3, 2, 1}, {1, 2, -1, -2}};
    auto r = tietze_simplify(p);
    REQUIRE(r.p.gens == 2);
    REQUIRE(abelianization(r.p) == abelianization(p));
    REQUIRE(abelianization(r.p) == AbGroup{2, {}});
}

TEST_CASE("tietze preserves abelianization on random presentations") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        Presentation p;
        p.gens = 2 + int(rng() % 3);
        int nrel = 1 + int(rng() % 3);
        for (int r = 0; r < nrel; ++r) {
            Word w;
            int len = 1 + int(rng() % 8);
            for (int i = 0; i < len; ++i) {
                int g = 1 + int(rng() % p.gens);
                w.push_back(rng() % 2 ? g : -g);
            }
            p.relators.push_back(w);
        }
        auto r = tietze_simplify(p);
        REQUIRE(abelianization(r.p) == abelianization(p));
    }
}

TEST_CASE("torus group recogniser") {
    Presentation p;
    p.gens = 2;
    p.relators = {{1, 1, 1, -2, -2}};
    auto t = recognize_torus_group(p);
    REQUIRE(t.has_value());
    REQUIRE(*t == std::make_pair(3, 2));

    p.relators = {{1, 1, 1, 1, 1, -2, -2}};
    t = recognize_torus_group(p);
    REQUIRE(t.has_value());
    REQUIRE(*t == std::make_pair(5, 2));

    // abab is not of the shape
    p.relators = {{1, 2, 1, 2}};
    REQUIRE(!recognize_torus_group(p).has_value());

    // single generator block is not of the shape
    p.relators = {{1, 1, 1}};
    REQUIRE(!recognize_torus_group(p).has_value());
}

TEST_CASE("non-hyperbolic pattern recogniser") {
    Presentation p;
    p.gens = 2;
    // a^3 (a b^2)^2
    p.relators = {{1, 1, 1, 1, 2, 2, 1, 2, 2}};
    auto m = recognize_nonhyp_pattern(p);
    REQUIRE(m.has_value());
    REQUIRE(m->tag == 1);
    REQUIRE(m->q == 2);
    REQUIRE(m->k == 2);
    REQUIRE(m->p == 1);
    REQUIRE(m->n == 3);

    // the 8-letter relator
    p.relators = {{1, 1, -2, -1, 2, 2, -1, -2}};
    m = recognize_nonhyp_pattern(p);
    REQUIRE(m.has_value());
    REQUIRE(m->tag == 2);

    // commutator of powers
    p.relators = {{1, 1, 2, 2, 2, -1, -1, -2, -2, -2}};
    m = recognize_nonhyp_pattern(p);
    REQUIRE(m.has_value());
    REQUIRE(m->tag == 3);
    REQUIRE(m->n == 2);
    REQUIRE(m->q == 3);

    // torus shape matches the k=1 instance of tag 1
    p.relators = {{1, 1, 1, -2, -2}};
    m = recognize_nonhyp_pattern(p);
    REQUIRE(m.has_value());
    REQUIRE(m->tag == 1);
    REQUIRE(m->k == 1);
}

TEST_CASE("recognisers are syntactic: random relators rarely match, never crash") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        Presentation p;
        p.gens = 2;
        Word w;
        int len = 1 + int(rng() % 12);
        for (int i = 0; i < len; ++i) {
            int g = 1 + int(rng() % 2);
            w.push_back(rng() % 2 ? g : -g);
        }
        p.relators = {w};
        auto t = recognize_torus_group(p);
        if (t) {
            // verify the claim syntactically: abelianization must be that of x^a y^-b
            Presentation ref;
            ref.gens = 2;
            Word r;
            for (int i = 0; i < t->first; ++i) r.push_back(1);
            for (int i = 0; i < t->second; ++i) r.push_back(-2);
            ref.relators = {r};
            REQUIRE(abelianization(p).rank == abelianization(ref).rank);
        }
        recognize_nonhyp_pattern(p);  // must not throw
    }
}

TEST_CASE("abelianization examples") {
    Presentation p;
    p.gens = 2;
    p.relators = {{1, 1, 1, -2, -2}};  // trefoil-like
    REQUIRE(abelianization(p) == AbGroup{1, {}});
    p.gens = 1;
    p.relators = {{1, 1, 1}};
    REQUIRE(abelianization(p).str() == "Z/3");
}
