#include <catch2/catch_amalgamated.hpp>

#include <census/gluings.hpp>
#include <census/homology.hpp>
#include <census/spine.hpp>

#include "fixtures.hpp"

using namespace census;

TEST_CASE("smith normal form basics") {
    REQUIRE(smith_normal_form({{2, 0}, {0, 3}}) == std::vector<long long>{1, 6});
    REQUIRE(smith_normal_form({{1, 0}, {0, 1}}) == std::vector<long long>{1, 1});
    REQUIRE(smith_normal_form({{0, 0}, {0, 0}}).empty());
    REQUIRE(smith_normal_form({{4}}) == std::vector<long long>{4});
    REQUIRE(smith_normal_form({{2, 4}, {6, 8}}) == std::vector<long long>{2, 4});
}

TEST_CASE("cokernel invariant factors") {
    // Z^2 / <(2,0),(0,2)> = Z/2 + Z/2
    AbGroup g = cokernel({{2, 0}, {0, 2}}, 2);
    REQUIRE(g.rank == 0);
    REQUIRE(g.torsion == std::vector<long long>{2, 2});
    // Z^2 / <(1,-1)> = Z
    g = cokernel({{1, -1}}, 2);
    REQUIRE(g == AbGroup{1, {}});
    // no relations
    REQUIRE(cokernel({}, 3) == AbGroup{3, {}});
    REQUIRE(cokernel({{3}}, 1).str() == "Z/3");
}

TEST_CASE("integer kernel") {
    IntMat k = integer_kernel({{1, 1, 1}}, 3);
    REQUIRE(k.size() == 2);
    for (auto& v : k) REQUIRE(v[0] + v[1] + v[2] == 0);
    REQUIRE(integer_kernel({{1, 0}, {0, 1}}, 2).empty());
}

TEST_CASE("chain H1 of the handcuff sphere is trivial") {
    REQUIRE(chain_h1(fixtures::handcuff_sphere()).trivial());
}

TEST_CASE("two-route H1 agreement on all small closed triangulations") {
    for (int n = 1; n <= 2; ++n) {
        for (const Triangulation& tri : enumerate_closed(n)) {
            Classes cl = compute_classes(tri);
            Presentation pm = spine_presentation(tri, cl, {}, false);
            REQUIRE(abelianization(pm) == chain_h1(tri, cl));
        }
    }
}
