// Copyright 2026 The toruspenny Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TORUSPENNY_TORUS_HPP_
#define TORUSPENNY_TORUS_HPP_

// Metric geometry of the flat unit square torus R^2 / Z^2.
//
// Points are kept in the canonical half-open square [-1/2, 1/2)^2 centred on
// the origin. Every routine exists in a floating-point flavour (double) and an
// exact flavour (Rational); the exact flavour only ever produces squared
// distances since distances themselves are generally irrational.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "toruspenny/rational.hpp"

namespace toruspenny {

template <class T>
struct Vec2 {
  T x{};
  T y{};

  friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(const T& s, const Vec2& a) { return {s * a.x, s * a.y}; }
  friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
};

using Point = Vec2<double>;
using ExactPoint = Vec2<Rational>;

template <class T>
T dot(const Vec2<T>& a, const Vec2<T>& b) {
  return a.x * b.x + a.y * b.y;
}

template <class T>
T cross(const Vec2<T>& a, const Vec2<T>& b) {
  return a.x * b.y - a.y * b.x;
}

template <class T>
T norm_squared(const Vec2<T>& a) {
  return dot(a, a);
}

Point to_point(const ExactPoint& p);

// Integer translate (mx, my) of the lattice Z^2.
struct LatticeOffset {
  int mx = 0;
  int my = 0;

  friend bool operator==(const LatticeOffset&, const LatticeOffset&) = default;
};

// delta = q - p + offset for some pair (p, q).
template <class T>
struct BasicDisplacement {
  Vec2<T> delta;
  LatticeOffset offset;
};

using Displacement = BasicDisplacement<double>;
using ExactDisplacement = BasicDisplacement<Rational>;

// Reduces each coordinate into [-1/2, 1/2). Throws kInvalidInput on NaN/inf.
Point wrap(Point raw);
ExactPoint wrap(const ExactPoint& raw);

bool is_canonical(Point p);
bool is_canonical(const ExactPoint& p);

// Minimal-norm representative of q - p + m over m in {-1,0,1}^2. Coordinates
// are minimized independently; on an exact tie (|delta| = 1/2) the smaller
// |offset| wins.
Displacement min_displacement(Point p, Point q);
ExactDisplacement min_displacement(const ExactPoint& p, const ExactPoint& q);

double torus_distance(Point p, Point q);
Rational torus_distance_squared(const ExactPoint& p, const ExactPoint& q);

// Number of offsets m in {-1,0,1}^2 with |q - p + m| <= (1 + tol) * d_min.
// Throws kDegeneratePair when p and q coincide.
int distance_multiplicity(Point p, Point q, double tol);
int distance_multiplicity(const ExactPoint& p, const ExactPoint& q);

// All offsets realizing the minimum (within tol, or exactly), in offset order
// mx-major from -1 to 1.
std::vector<Displacement> realizing_displacements(Point p, Point q, double tol);
std::vector<ExactDisplacement> realizing_displacements(const ExactPoint& p,
                                                       const ExactPoint& q);

// ---------------------------------------------------------------------------
// Isometries.

// The point group of the square lattice. Reflections are named by their
// mirror line.
enum class SquareSymmetry : std::uint8_t {
  kIdentity = 0,
  kRotate90,
  kRotate180,
  kRotate270,
  kMirrorXAxis,     // (x, y) -> (x, -y)
  kMirrorYAxis,     // (x, y) -> (-x, y)
  kMirrorDiagonal,  // (x, y) -> (y, x)
  kMirrorAntiDiagonal,  // (x, y) -> (-y, -x)
};

inline constexpr std::array<SquareSymmetry, 8> kAllSquareSymmetries = {
    SquareSymmetry::kIdentity,       SquareSymmetry::kRotate90,
    SquareSymmetry::kRotate180,      SquareSymmetry::kRotate270,
    SquareSymmetry::kMirrorXAxis,    SquareSymmetry::kMirrorYAxis,
    SquareSymmetry::kMirrorDiagonal, SquareSymmetry::kMirrorAntiDiagonal};

// Row-major integer matrix {a, b, c, d} acting as (a x + b y, c x + d y).
std::array<int, 4> matrix_of(SquareSymmetry s);
SquareSymmetry symmetry_of(const std::array<int, 4>& m);
const char* name_of(SquareSymmetry s);

template <class T>
Vec2<T> apply_linear(SquareSymmetry s, const Vec2<T>& v) {
  const auto m = matrix_of(s);
  return {T(m[0]) * v.x + T(m[1]) * v.y, T(m[2]) * v.x + T(m[3]) * v.y};
}

// x -> wrap(linear * x + translation)
template <class T>
struct BasicIsometry {
  SquareSymmetry linear = SquareSymmetry::kIdentity;
  Vec2<T> translation{};
};

using IsometryMap = BasicIsometry<double>;
using ExactIsometryMap = BasicIsometry<Rational>;

Point apply_isometry(const IsometryMap& g, Point p);
ExactPoint apply_isometry(const ExactIsometryMap& g, const ExactPoint& p);

// compose(g, h) applies h first, then g.
IsometryMap compose(const IsometryMap& g, const IsometryMap& h);
ExactIsometryMap compose(const ExactIsometryMap& g, const ExactIsometryMap& h);
IsometryMap inverse(const IsometryMap& g);
ExactIsometryMap inverse(const ExactIsometryMap& g);

struct IsometryMatch {
  IsometryMap isometry;
  // permutation[i] is the index in B that point i of A lands on.
  std::vector<std::size_t> permutation;
};

inline constexpr double kDefaultIsometryTol = 1e-7;

// Searches the 8 linear parts and every anchor target for A[0]; a candidate
// is accepted when each image lies within `tol` (absolute, per coordinate,
// measured on the torus) of a distinct point of B. Throws kInvalidInput on a
// size mismatch or an empty input.
std::optional<IsometryMatch> find_isometry(std::span<const Point> a,
                                           std::span<const Point> b,
                                           double tol = kDefaultIsometryTol);

// ---------------------------------------------------------------------------
// Geodesic segments.

template <class T>
struct BasicSegment {
  Vec2<T> start;  // canonical
  Vec2<T> delta;  // |delta| < 1
};

using Segment = BasicSegment<double>;
using ExactSegment = BasicSegment<Rational>;

// True iff the two geodesics meet at a point interior to both. Touching at an
// endpoint is not a crossing; collinear overlap of positive length is.
// Throws kInvalidInput for a zero-length segment.
bool segments_cross(const Segment& s1, const Segment& s2);
bool segments_cross(const ExactSegment& s1, const ExactSegment& s2);

}  // namespace toruspenny

#endif  // TORUSPENNY_TORUS_HPP_
