#pragma once

#include <string>
#include <vector>

#include "omdual/ground.hpp"
#include "omdual/rational.hpp"

// Built-in worked example: five collinear points, their Gale dual, and the
// expected combinatorics of the two associated Lawrence triangulations.
namespace omdual::fixtures {

// Homogenized points 4,3,2,1,0 on an affine line; the last column is the
// distinguished element f.
inline RatMat collinear_points() {
  RatMat a(2, 5);
  a << 1, 1, 1, 1, 1, 4, 3, 2, 1, 0;
  return a;
}

// Gale dual of collinear_points with the column of f reoriented.
inline RatMat collinear_gale() {
  RatMat b(3, 5);
  b << 1, -2, 1, 0, 0, 0, 1, -2, 1, 0, 0, 0, 1, -2, -1;
  return b;
}

inline RatMat collinear_points_contracted() {
  RatMat a(1, 4);
  a << 4, 3, 2, 1;
  return a;
}

inline RatMat collinear_gale_contracted() {
  RatMat b(2, 4);
  b << 1, -2, 1, 0, 0, 1, -2, 1;
  return b;
}

inline GroundSet line_ground() { return GroundSet::numbered_with_f(4); }

// The four cocircuits of the point side with f positive, spelled with
// x_i for i in C+ and y_j for j in C-.
inline std::vector<std::vector<std::string>> point_side_cocircuit_sets() {
  return {{"x2", "x3", "x4", "f"},
          {"y1", "x3", "x4", "f"},
          {"y1", "y2", "x4", "f"},
          {"y1", "y2", "y3", "f"}};
}

// The six cocircuits of the Gale side with f positive, spelled the same way.
inline std::vector<std::vector<std::string>> gale_side_cocircuit_sets() {
  return {{"y1", "x2", "f"}, {"y1", "x3", "f"}, {"y1", "x4", "f"},
          {"y2", "x3", "f"}, {"y2", "x4", "f"}, {"y3", "x4", "f"}};
}

// Staircase triangulation of the point-side Lawrence polytope (a product of a
// segment and a tetrahedron): complements of point_side_cocircuit_sets.
inline std::vector<std::vector<std::string>> staircase_facets() {
  return {{"x1", "y1", "y2", "y3", "y4"},
          {"x1", "x2", "y2", "y3", "y4"},
          {"x1", "x2", "x3", "y3", "y4"},
          {"x1", "x2", "x3", "x4", "y4"}};
}

// Triangulation of the Gale-side Lawrence polytope: complements of
// gale_side_cocircuit_sets.
inline std::vector<std::vector<std::string>> gale_triangulation_facets() {
  return {{"x1", "x2", "x3", "y1", "y2", "y4"},
          {"x1", "x2", "x3", "y1", "y3", "y4"},
          {"x1", "x2", "x4", "y1", "y3", "y4"},
          {"x1", "x2", "x3", "y2", "y3", "y4"},
          {"x1", "x2", "x4", "y2", "y3", "y4"},
          {"x1", "x3", "x4", "y2", "y3", "y4"}};
}

// Stanley-Reisner generators of the staircase triangulation.
inline std::vector<std::string> staircase_sr_generators() {
  return {"y1*x2", "y1*x3", "y1*x4", "y2*x3", "y2*x4", "y3*x4"};
}

// Stanley-Reisner generators of the Gale-side triangulation.
inline std::vector<std::string> gale_sr_generators() {
  return {"x2*x3*x4", "y1*x3*x4", "y1*y2*x4", "y1*y2*y3"};
}

// The three rank-2 types on four elements: two parallel pairs, one parallel
// pair, and no parallel pair (collinear_gale_contracted). Their Lawrence
// polytopes have 8, 10 and 12 facets.
inline RatMat two_parallel_pairs() {
  RatMat m(2, 4);
  m << 1, 1, 0, 0, 0, 0, 1, 1;
  return m;
}

inline RatMat one_parallel_pair() {
  RatMat m(2, 4);
  m << 1, 1, 0, 1, 0, 0, 1, 1;
  return m;
}

// Three points and a lifting direction: the lifted triangular prism.
inline RatMat prism_points() {
  RatMat m(2, 4);
  m << 1, 1, 1, 0, 0, 1, 2, 1;
  return m;
}

inline std::vector<std::vector<std::string>> prism_delta_facets() {
  return {{"x1", "y1", "y2", "y3"}, {"x1", "x2", "y2", "y3"}, {"x1", "x2", "x3", "y3"}};
}

// Contracting f yields a configuration with a zero column: the Lawrence
// polytope of the contraction is a pyramid over a pair of identified points.
inline RatMat pyramid_points() {
  RatMat m(2, 4);
  m << 1, 1, 0, 0, 2, 1, 1, 1;
  return m;
}

// Two opposite points and a lifting direction: the lifting subdivision is the
// 0-sphere {{1},{2}}.
inline RatMat segment_pair() {
  RatMat m(2, 3);
  m << 1, -1, 0, 1, 0, 1;
  return m;
}

// Bipyramid over a triangle: a 5-vertex 2-sphere.
inline std::vector<std::vector<std::string>> bipyramid_facets() {
  return {{"1", "2", "4"}, {"2", "3", "4"}, {"1", "3", "4"},
          {"1", "2", "5"}, {"2", "3", "5"}, {"1", "3", "5"}};
}

// Six-vertex triangulation of the real projective plane (antipodal
// quotient of the icosahedron; every edge lies in exactly two triangles).
inline std::vector<std::vector<std::string>> projective_plane_facets() {
  return {{"1", "2", "3"}, {"1", "2", "6"}, {"1", "3", "4"}, {"1", "4", "5"},
          {"1", "5", "6"}, {"2", "3", "5"}, {"2", "4", "5"}, {"2", "4", "6"},
          {"3", "4", "6"}, {"3", "5", "6"}};
}

}  // namespace omdual::fixtures
