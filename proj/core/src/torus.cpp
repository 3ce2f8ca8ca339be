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

#include "toruspenny/torus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "toruspenny/error.hpp"

namespace toruspenny {
namespace {

constexpr double kOrientEps = 1e-12;

double wrap_coord(double x) {
  if (x >= -0.5 && x < 0.5) return x;
  double r = x - std::floor(x);  // [0, 1], may round up to 1
  if (r >= 0.5) r -= 1.0;
  return r;
}

Rational wrap_coord(const Rational& x) {
  static const Rational kHalf(1, 2);
  return x - Rational(toruspenny::floor(Rational(x + kHalf)));
}

template <class T>
T abs_value(const T& v) {
  return v < T(0) ? T(-v) : v;
}

// Offset in {0, -1, 1} minimizing |d + m|; earlier candidates win ties.
template <class T>
int best_offset(const T& d) {
  int best = 0;
  T best_abs = abs_value(d);
  for (int m : {-1, 1}) {
    T a = abs_value(T(d + T(m)));
    if (a < best_abs) {
      best = m;
      best_abs = a;
    }
  }
  return best;
}

template <class T>
BasicDisplacement<T> min_displacement_impl(const Vec2<T>& p, const Vec2<T>& q) {
  const Vec2<T> d = q - p;
  const int mx = best_offset(d.x);
  const int my = best_offset(d.y);
  return {{d.x + T(mx), d.y + T(my)}, {mx, my}};
}

int sgn(double v) { return v > kOrientEps ? 1 : (v < -kOrientEps ? -1 : 0); }
int sgn(const Rational& v) { return v.sign(); }

template <class T>
bool interiors_meet(const Vec2<T>& a, const Vec2<T>& b, const Vec2<T>& c,
                    const Vec2<T>& d) {
  const Vec2<T> ab = b - a;
  const Vec2<T> cd = d - c;
  const int o1 = sgn(cross(ab, Vec2<T>(c - a)));
  const int o2 = sgn(cross(ab, Vec2<T>(d - a)));
  const int o3 = sgn(cross(cd, Vec2<T>(a - c)));
  const int o4 = sgn(cross(cd, Vec2<T>(b - c)));
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && o2 == 0) {
    // Collinear: project onto ab and look for an overlap of positive length.
    const T len = dot(ab, ab);
    T tc = dot(Vec2<T>(c - a), ab);
    T td = dot(Vec2<T>(d - a), ab);
    if (td < tc) std::swap(tc, td);
    const T lo = tc > T(0) ? tc : T(0);
    const T hi = td < len ? td : len;
    return sgn(T(hi - lo)) > 0;
  }
  return false;
}

template <class T>
bool boxes_overlap(const Vec2<T>& a, const Vec2<T>& b, const Vec2<T>& c,
                   const Vec2<T>& d) {
  auto [x1lo, x1hi] = std::minmax(a.x, b.x);
  auto [y1lo, y1hi] = std::minmax(a.y, b.y);
  auto [x2lo, x2hi] = std::minmax(c.x, d.x);
  auto [y2lo, y2hi] = std::minmax(c.y, d.y);
  return !(sgn(T(x2lo - x1hi)) > 0 || sgn(T(x1lo - x2hi)) > 0 ||
           sgn(T(y2lo - y1hi)) > 0 || sgn(T(y1lo - y2hi)) > 0);
}

template <class T>
bool segments_cross_impl(const BasicSegment<T>& s1, const BasicSegment<T>& s2) {
  if (sgn(norm_squared(s1.delta)) == 0 || sgn(norm_squared(s2.delta)) == 0) {
    throw Error(Errc::kInvalidInput, "zero-length segment");
  }
  const Vec2<T> a = s1.start;
  const Vec2<T> b = s1.start + s1.delta;
  // Lifts live in (-3/2, 3/2)^2, so translates up to +-2 can meet.
  for (int mx = -2; mx <= 2; ++mx) {
    for (int my = -2; my <= 2; ++my) {
      const Vec2<T> c = s2.start + Vec2<T>{T(mx), T(my)};
      const Vec2<T> d = c + s2.delta;
      if (!boxes_overlap(a, b, c, d)) continue;
      if (interiors_meet(a, b, c, d)) return true;
    }
  }
  return false;
}

template <class T, class Pred>
int count_offsets(const Vec2<T>& p, const Vec2<T>& q, Pred keep) {
  int count = 0;
  for (int mx = -1; mx <= 1; ++mx)
    for (int my = -1; my <= 1; ++my)
      if (keep(norm_squared(Vec2<T>(q - p + Vec2<T>{T(mx), T(my)})))) ++count;
  return count;
}

}  // namespace

Point to_point(const ExactPoint& p) { return {to_double(p.x), to_double(p.y)}; }

Point wrap(Point raw) {
  if (!std::isfinite(raw.x) || !std::isfinite(raw.y)) {
    throw Error(Errc::kInvalidInput, "non-finite coordinate");
  }
  return {wrap_coord(raw.x), wrap_coord(raw.y)};
}

ExactPoint wrap(const ExactPoint& raw) {
  return {wrap_coord(raw.x), wrap_coord(raw.y)};
}

bool is_canonical(Point p) {
  return p.x >= -0.5 && p.x < 0.5 && p.y >= -0.5 && p.y < 0.5;
}

bool is_canonical(const ExactPoint& p) {
  static const Rational kHalf(1, 2);
  return p.x >= -kHalf && p.x < kHalf && p.y >= -kHalf && p.y < kHalf;
}

Displacement min_displacement(Point p, Point q) {
  return min_displacement_impl(p, q);
}

ExactDisplacement min_displacement(const ExactPoint& p, const ExactPoint& q) {
  return min_displacement_impl(p, q);
}

double torus_distance(Point p, Point q) {
  const Displacement d = min_displacement(p, q);
  return std::hypot(d.delta.x, d.delta.y);
}

Rational torus_distance_squared(const ExactPoint& p, const ExactPoint& q) {
  return norm_squared(min_displacement(p, q).delta);
}

std::vector<Displacement> realizing_displacements(Point p, Point q, double tol) {
  const double dmin = torus_distance(p, q);
  if (dmin == 0.0) {
    throw Error(Errc::kDegeneratePair, "coincident points");
  }
  const double limit = dmin * (1.0 + tol);
  std::vector<Displacement> out;
  for (int mx = -1; mx <= 1; ++mx) {
    for (int my = -1; my <= 1; ++my) {
      const Point d{q.x - p.x + mx, q.y - p.y + my};
      if (std::hypot(d.x, d.y) <= limit) out.push_back({d, {mx, my}});
    }
  }
  return out;
}

std::vector<ExactDisplacement> realizing_displacements(const ExactPoint& p,
                                                       const ExactPoint& q) {
  const Rational dmin = torus_distance_squared(p, q);
  if (dmin == 0) {
    throw Error(Errc::kDegeneratePair, "coincident points");
  }
  std::vector<ExactDisplacement> out;
  for (int mx = -1; mx <= 1; ++mx) {
    for (int my = -1; my <= 1; ++my) {
      const ExactPoint d{q.x - p.x + mx, q.y - p.y + my};
      if (norm_squared(d) == dmin) out.push_back({d, {mx, my}});
    }
  }
  return out;
}

int distance_multiplicity(Point p, Point q, double tol) {
  return static_cast<int>(realizing_displacements(p, q, tol).size());
}

int distance_multiplicity(const ExactPoint& p, const ExactPoint& q) {
  return static_cast<int>(realizing_displacements(p, q).size());
}

// ---------------------------------------------------------------------------

std::array<int, 4> matrix_of(SquareSymmetry s) {
  switch (s) {
    case SquareSymmetry::kIdentity: return {1, 0, 0, 1};
    case SquareSymmetry::kRotate90: return {0, -1, 1, 0};
    case SquareSymmetry::kRotate180: return {-1, 0, 0, -1};
    case SquareSymmetry::kRotate270: return {0, 1, -1, 0};
    case SquareSymmetry::kMirrorXAxis: return {1, 0, 0, -1};
    case SquareSymmetry::kMirrorYAxis: return {-1, 0, 0, 1};
    case SquareSymmetry::kMirrorDiagonal: return {0, 1, 1, 0};
    case SquareSymmetry::kMirrorAntiDiagonal: return {0, -1, -1, 0};
  }
  return {1, 0, 0, 1};
}

SquareSymmetry symmetry_of(const std::array<int, 4>& m) {
  for (SquareSymmetry s : kAllSquareSymmetries) {
    if (matrix_of(s) == m) return s;
  }
  throw Error(Errc::kInvalidInput, "matrix is not a square-lattice symmetry");
}

const char* name_of(SquareSymmetry s) {
  switch (s) {
    case SquareSymmetry::kIdentity: return "identity";
    case SquareSymmetry::kRotate90: return "rotate90";
    case SquareSymmetry::kRotate180: return "rotate180";
    case SquareSymmetry::kRotate270: return "rotate270";
    case SquareSymmetry::kMirrorXAxis: return "mirror-x-axis";
    case SquareSymmetry::kMirrorYAxis: return "mirror-y-axis";
    case SquareSymmetry::kMirrorDiagonal: return "mirror-diagonal";
    case SquareSymmetry::kMirrorAntiDiagonal: return "mirror-anti-diagonal";
  }
  return "?";
}

namespace {

SquareSymmetry multiply(SquareSymmetry g, SquareSymmetry h) {
  const auto a = matrix_of(g);
  const auto b = matrix_of(h);
  return symmetry_of({a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
                      a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]});
}

SquareSymmetry transpose(SquareSymmetry g) {
  const auto a = matrix_of(g);
  return symmetry_of({a[0], a[2], a[1], a[3]});
}

template <class T>
BasicIsometry<T> compose_impl(const BasicIsometry<T>& g, const BasicIsometry<T>& h) {
  return {multiply(g.linear, h.linear),
          wrap(apply_linear(g.linear, h.translation) + g.translation)};
}

template <class T>
BasicIsometry<T> inverse_impl(const BasicIsometry<T>& g) {
  const SquareSymmetry inv = transpose(g.linear);
  const Vec2<T> t = apply_linear(inv, g.translation);
  return {inv, wrap(Vec2<T>{T(-t.x), T(-t.y)})};
}

}  // namespace

Point apply_isometry(const IsometryMap& g, Point p) {
  return wrap(apply_linear(g.linear, p) + g.translation);
}

ExactPoint apply_isometry(const ExactIsometryMap& g, const ExactPoint& p) {
  return wrap(apply_linear(g.linear, p) + g.translation);
}

IsometryMap compose(const IsometryMap& g, const IsometryMap& h) {
  return compose_impl(g, h);
}
ExactIsometryMap compose(const ExactIsometryMap& g, const ExactIsometryMap& h) {
  return compose_impl(g, h);
}
IsometryMap inverse(const IsometryMap& g) { return inverse_impl(g); }
ExactIsometryMap inverse(const ExactIsometryMap& g) { return inverse_impl(g); }

std::optional<IsometryMatch> find_isometry(std::span<const Point> a,
                                           std::span<const Point> b,
                                           double tol) {
  if (a.size() != b.size()) {
    throw Error(Errc::kInvalidInput,
                "configuration sizes differ: " + std::to_string(a.size()) +
                    " vs " + std::to_string(b.size()));
  }
  if (a.empty()) {
    throw Error(Errc::kInvalidInput, "empty configuration");
  }
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  std::vector<char> used(n);

  for (SquareSymmetry s : kAllSquareSymmetries) {
    const Point anchor = apply_linear(s, a[0]);
    for (std::size_t j = 0; j < n; ++j) {
      const IsometryMap g{s, wrap(b[j] - anchor)};
      std::fill(used.begin(), used.end(), 0);
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) {
        const Point image = apply_isometry(g, a[i]);
        std::size_t best = n;
        double best_err = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < n; ++k) {
          if (used[k]) continue;
          const double ex = std::abs(wrap_coord(image.x - b[k].x));
          const double ey = std::abs(wrap_coord(image.y - b[k].y));
          const double err = std::max(ex, ey);
          if (err <= tol && err < best_err) {
            best = k;
            best_err = err;
          }
        }
        if (best == n) {
          ok = false;
        } else {
          used[best] = 1;
          perm[i] = best;
        }
      }
      if (ok) return IsometryMatch{g, perm};
    }
  }
  return std::nullopt;
}

bool segments_cross(const Segment& s1, const Segment& s2) {
  return segments_cross_impl(s1, s2);
}

bool segments_cross(const ExactSegment& s1, const ExactSegment& s2) {
  return segments_cross_impl(s1, s2);
}

}  // namespace toruspenny
