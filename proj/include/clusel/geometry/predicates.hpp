#pragma once

#include <array>

namespace clusel::geometry {

// Robust geometric predicates returning the exact sign (-1, 0, +1). Each first
// evaluates in double precision with a forward error bound and falls back to
// exact rational arithmetic when the bound cannot certify the sign.
//
// orient2d(a, b, c)        > 0 when a, b, c turn counter-clockwise.
// incircle(a, b, c, d)     > 0 when d is inside the circle through a, b, c,
//                            given orient2d(a, b, c) > 0.
// orient3d(a, b, c, d)     > 0 when d lies below the plane through a, b, c
//                            (a, b, c counter-clockwise seen from above).
// insphere(a, b, c, d, e)  > 0 when e is inside the sphere through a..d,
//                            given orient3d(a, b, c, d) > 0.

using Point2 = std::array<double, 2>;
using Point3 = std::array<double, 3>;

int orient2d(const Point2& a, const Point2& b, const Point2& c);
int incircle(const Point2& a, const Point2& b, const Point2& c, const Point2& d);
int orient3d(const Point3& a, const Point3& b, const Point3& c, const Point3& d);
int insphere(const Point3& a, const Point3& b, const Point3& c, const Point3& d, const Point3& e);

// Exact-only versions, used to verify the filtered ones.
int orient2d_exact(const Point2& a, const Point2& b, const Point2& c);
int incircle_exact(const Point2& a, const Point2& b, const Point2& c, const Point2& d);
int orient3d_exact(const Point3& a, const Point3& b, const Point3& c, const Point3& d);
int insphere_exact(const Point3& a, const Point3& b, const Point3& c, const Point3& d,
                   const Point3& e);

}  // namespace clusel::geometry
