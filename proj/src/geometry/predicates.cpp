#include "clusel/geometry/predicates.hpp"

#include <cmath>
#include <limits>

#include <gmpxx.h>

namespace clusel::geometry {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon() / 2.0;  // 2^-53
// Static filter constants for the straightforward evaluation order below,
// widened by 4x for margin.
constexpr double kOrient2dBound = 4.0 * (3.0 + 16.0 * kEps) * kEps;
constexpr double kOrient3dBound = 4.0 * (7.0 + 56.0 * kEps) * kEps;
constexpr double kIncircleBound = 4.0 * (10.0 + 96.0 * kEps) * kEps;
constexpr double kInsphereBound = 4.0 * (16.0 + 224.0 * kEps) * kEps;

template <class T>
int sign_of(const T& v) {
  if (v > 0) return 1;
  if (v < 0) return -1;
  return 0;
}

template <class T, class P>
T orient2d_det(const P& a, const P& b, const P& c) {
  const T acx = T(a[0]) - T(c[0]);
  const T bcx = T(b[0]) - T(c[0]);
  const T acy = T(a[1]) - T(c[1]);
  const T bcy = T(b[1]) - T(c[1]);
  return T(acx * bcy) - T(acy * bcx);
}

template <class T, class P>
T incircle_det(const P& a, const P& b, const P& c, const P& d) {
  const T adx = T(a[0]) - T(d[0]), ady = T(a[1]) - T(d[1]);
  const T bdx = T(b[0]) - T(d[0]), bdy = T(b[1]) - T(d[1]);
  const T cdx = T(c[0]) - T(d[0]), cdy = T(c[1]) - T(d[1]);
  const T alift = T(adx * adx) + T(ady * ady);
  const T blift = T(bdx * bdx) + T(bdy * bdy);
  const T clift = T(cdx * cdx) + T(cdy * cdy);
  return T(alift * T(T(bdx * cdy) - T(cdx * bdy))) + T(blift * T(T(cdx * ady) - T(adx * cdy))) +
         T(clift * T(T(adx * bdy) - T(bdx * ady)));
}

template <class T, class P>
T orient3d_det(const P& a, const P& b, const P& c, const P& d) {
  const T adx = T(a[0]) - T(d[0]), ady = T(a[1]) - T(d[1]), adz = T(a[2]) - T(d[2]);
  const T bdx = T(b[0]) - T(d[0]), bdy = T(b[1]) - T(d[1]), bdz = T(b[2]) - T(d[2]);
  const T cdx = T(c[0]) - T(d[0]), cdy = T(c[1]) - T(d[1]), cdz = T(c[2]) - T(d[2]);
  return T(adx * T(T(bdy * cdz) - T(bdz * cdy))) + T(bdx * T(T(cdy * adz) - T(cdz * ady))) +
         T(cdx * T(T(ady * bdz) - T(adz * bdy)));
}

template <class T, class P>
T insphere_det(const P& a, const P& b, const P& c, const P& d, const P& e) {
  const T aex = T(a[0]) - T(e[0]), aey = T(a[1]) - T(e[1]), aez = T(a[2]) - T(e[2]);
  const T bex = T(b[0]) - T(e[0]), bey = T(b[1]) - T(e[1]), bez = T(b[2]) - T(e[2]);
  const T cex = T(c[0]) - T(e[0]), cey = T(c[1]) - T(e[1]), cez = T(c[2]) - T(e[2]);
  const T dex = T(d[0]) - T(e[0]), dey = T(d[1]) - T(e[1]), dez = T(d[2]) - T(e[2]);
  const T ab = T(aex * bey) - T(bex * aey);
  const T bc = T(bex * cey) - T(cex * bey);
  const T cd = T(cex * dey) - T(dex * cey);
  const T da = T(dex * aey) - T(aex * dey);
  const T ac = T(aex * cey) - T(cex * aey);
  const T bd = T(bex * dey) - T(dex * bey);
  const T abc = T(T(aez * bc) - T(bez * ac)) + T(cez * ab);
  const T bcd = T(T(bez * cd) - T(cez * bd)) + T(dez * bc);
  const T cda = T(T(cez * da) + T(dez * ac)) + T(aez * cd);
  const T dab = T(T(dez * ab) + T(aez * bd)) + T(bez * da);
  const T alift = T(T(aex * aex) + T(aey * aey)) + T(aez * aez);
  const T blift = T(T(bex * bex) + T(bey * bey)) + T(bez * bez);
  const T clift = T(T(cex * cex) + T(cey * cey)) + T(cez * cez);
  const T dlift = T(T(dex * dex) + T(dey * dey)) + T(dez * dez);
  return T(T(dlift * abc) - T(clift * dab)) + T(T(blift * cda) - T(alift * bcd));
}

double orient2d_permanent(const Point2& a, const Point2& b, const Point2& c) {
  return std::abs((a[0] - c[0]) * (b[1] - c[1])) + std::abs((a[1] - c[1]) * (b[0] - c[0]));
}

double incircle_permanent(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
  const double adx = a[0] - d[0], ady = a[1] - d[1];
  const double bdx = b[0] - d[0], bdy = b[1] - d[1];
  const double cdx = c[0] - d[0], cdy = c[1] - d[1];
  const double alift = adx * adx + ady * ady;
  const double blift = bdx * bdx + bdy * bdy;
  const double clift = cdx * cdx + cdy * cdy;
  return (std::abs(bdx * cdy) + std::abs(cdx * bdy)) * alift +
         (std::abs(cdx * ady) + std::abs(adx * cdy)) * blift +
         (std::abs(adx * bdy) + std::abs(bdx * ady)) * clift;
}

double orient3d_permanent(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
  const double adx = a[0] - d[0], ady = a[1] - d[1], adz = a[2] - d[2];
  const double bdx = b[0] - d[0], bdy = b[1] - d[1], bdz = b[2] - d[2];
  const double cdx = c[0] - d[0], cdy = c[1] - d[1], cdz = c[2] - d[2];
  return (std::abs(bdy * cdz) + std::abs(bdz * cdy)) * std::abs(adx) +
         (std::abs(cdy * adz) + std::abs(cdz * ady)) * std::abs(bdx) +
         (std::abs(ady * bdz) + std::abs(adz * bdy)) * std::abs(cdx);
}

double insphere_permanent(const Point3& a, const Point3& b, const Point3& c, const Point3& d,
                          const Point3& e) {
  const double aex = a[0] - e[0], aey = a[1] - e[1], aez = std::abs(a[2] - e[2]);
  const double bex = b[0] - e[0], bey = b[1] - e[1], bez = std::abs(b[2] - e[2]);
  const double cex = c[0] - e[0], cey = c[1] - e[1], cez = std::abs(c[2] - e[2]);
  const double dex = d[0] - e[0], dey = d[1] - e[1], dez = std::abs(d[2] - e[2]);
  const double ab = std::abs(aex * bey) + std::abs(bex * aey);
  const double bc = std::abs(bex * cey) + std::abs(cex * bey);
  const double cd = std::abs(cex * dey) + std::abs(dex * cey);
  const double da = std::abs(dex * aey) + std::abs(aex * dey);
  const double ac = std::abs(aex * cey) + std::abs(cex * aey);
  const double bd = std::abs(bex * dey) + std::abs(dex * bey);
  const double alift = aex * aex + aey * aey + aez * aez;
  const double blift = bex * bex + bey * bey + bez * bez;
  const double clift = cex * cex + cey * cey + cez * cez;
  const double dlift = dex * dex + dey * dey + dez * dez;
  return (cd * bez + bd * cez + bc * dez) * alift + (da * cez + ac * dez + cd * aez) * blift +
         (ab * dez + bd * aez + da * bez) * clift + (bc * aez + ac * bez + ab * cez) * dlift;
}

int filtered(double det, double permanent, double bound) {
  if (det > bound * permanent) return 1;
  if (-det > bound * permanent) return -1;
  return 2;  // undecided
}

}  // namespace

int orient2d_exact(const Point2& a, const Point2& b, const Point2& c) {
  return sign_of(orient2d_det<mpq_class>(a, b, c));
}
int incircle_exact(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
  return sign_of(incircle_det<mpq_class>(a, b, c, d));
}
int orient3d_exact(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
  return sign_of(orient3d_det<mpq_class>(a, b, c, d));
}
int insphere_exact(const Point3& a, const Point3& b, const Point3& c, const Point3& d,
                   const Point3& e) {
  return sign_of(insphere_det<mpq_class>(a, b, c, d, e));
}

int orient2d(const Point2& a, const Point2& b, const Point2& c) {
  const int s = filtered(orient2d_det<double>(a, b, c), orient2d_permanent(a, b, c), kOrient2dBound);
  return s != 2 ? s : orient2d_exact(a, b, c);
}

int incircle(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
  const int s = filtered(incircle_det<double>(a, b, c, d), incircle_permanent(a, b, c, d),
                         kIncircleBound);
  return s != 2 ? s : incircle_exact(a, b, c, d);
}

int orient3d(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
  const int s = filtered(orient3d_det<double>(a, b, c, d), orient3d_permanent(a, b, c, d),
                         kOrient3dBound);
  return s != 2 ? s : orient3d_exact(a, b, c, d);
}

int insphere(const Point3& a, const Point3& b, const Point3& c, const Point3& d, const Point3& e) {
  const int s = filtered(insphere_det<double>(a, b, c, d, e), insphere_permanent(a, b, c, d, e),
                         kInsphereBound);
  return s != 2 ? s : insphere_exact(a, b, c, d, e);
}

}  // namespace clusel::geometry
