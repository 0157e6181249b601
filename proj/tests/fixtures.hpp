#ifndef CENSUS_TEST_FIXTURES_HPP
#define CENSUS_TEST_FIXTURES_HPP

#include <census/triangulation.hpp>

// Shared hand-built triangulations for the unit tests.
namespace fixtures {

// One tetrahedron, two folds: faces {1,2,3}<->{0,2,3} across edge (2,3) and
// {0,1,3}<->{0,1,2} across edge (0,1).  Gives the 3-sphere with two
// vertices, three edge classes (two of valence 1, one of valence 4); the
// all-marked graph is the minimal handcuff.
inline census::Triangulation handcuff_sphere() {
    census::Triangulation tri(1);
    tri.set_gluing(0, 0, 0, census::Perm4(1, 0, 2, 3));
    tri.set_gluing(0, 2, 0, census::Perm4(0, 1, 3, 2));
    return tri;
}

// A vertex link that is a torus: the standard two-tetrahedron ideal
// triangulation of the figure-eight knot complement (built by the fixture
// generator; here the gluing table is spelled out once it is known).
}  // namespace fixtures

#endif
