#include "ultralen/su2.hpp"

#include "ultralen/errors.hpp"

#include <algorithm>
#include <numbers>

namespace ul::lie {

namespace {
constexpr double kPi = std::numbers::pi;

struct V3 {
  double x, y, z;
};
double dot3(const V3& a, const V3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
V3 cross3(const V3& a, const V3& b) { return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x}; }
double len3(const V3& a) { return std::sqrt(dot3(a, a)); }
V3 unit3(const V3& a) {
  double l = len3(a);
  return {a.x / l, a.y / l, a.z / l};
}
V3 vec(const Quat& q) { return {q.x, q.y, q.z}; }

V3 some_perp(const V3& v) {
  V3 e = std::fabs(v.x) <= std::fabs(v.y) && std::fabs(v.x) <= std::fabs(v.z) ? V3{1, 0, 0}
         : std::fabs(v.y) <= std::fabs(v.z)                                   ? V3{0, 1, 0}
                                                                                : V3{0, 0, 1};
  double d = dot3(e, v);
  return unit3({e.x - d * v.x, e.y - d * v.y, e.z - d * v.z});
}

AngleInterval clamp_interval(AngleInterval I) {
  I.lo = std::clamp(I.lo, 0.0, kPi);
  I.hi = std::clamp(I.hi, 0.0, kPi);
  return I;
}
}  // namespace

Quat Quat::operator*(const Quat& o) const {
  return {w * o.w - x * o.x - y * o.y - z * o.z, w * o.x + x * o.w + y * o.z - z * o.y,
          w * o.y - x * o.z + y * o.w + z * o.x, w * o.z + x * o.y - y * o.x + z * o.w};
}

double Quat::norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

Quat Quat::normalized() const {
  double n = norm();
  return {w / n, x / n, y / n, z / n};
}

double Quat::angle() const { return std::atan2(std::sqrt(x * x + y * y + z * z), w); }

std::array<std::complex<double>, 4> Quat::matrix() const {
  using C = std::complex<double>;
  return {C(w, x), C(y, z), C(-y, z), C(w, -x)};
}

double quat_distance(const Quat& a, const Quat& b) {
  auto ma = a.matrix(), mb = b.matrix();
  double e = 0;
  for (int i = 0; i < 4; ++i) e = std::max(e, std::abs(ma[i] - mb[i]));
  return e;
}

Quat rotation_between(const Quat& p, const Quat& target) {
  // Conjugation by a unit quaternion rotates pure vectors by twice its angle.
  V3 a = unit3(vec(p)), b = unit3(vec(target));
  double d = dot3(a, b);
  if (d < 0) {
    // Near-opposite vectors: map a to -b, then turn by pi about an axis
    // perpendicular to b.
    V3 u = some_perp(b);
    return Quat{0, u.x, u.y, u.z} * rotation_between(p, Quat{0, -b.x, -b.y, -b.z});
  }
  V3 c = cross3(a, b);
  return Quat{1 + d, c.x, c.y, c.z}.normalized();
}

AngleInterval reach_step(const AngleInterval& from, double b) {
  AngleInterval out;
  if (from.contains(b, 0)) {
    out.lo = 0;
  } else {
    out.lo = std::min(std::fabs(from.lo - b), std::fabs(from.hi - b));
  }
  auto f = [&](double c) { return std::min(c + b, 2 * kPi - c - b); };
  if (from.contains(kPi - b, 0))
    out.hi = kPi;
  else
    out.hi = std::max(f(from.lo), f(from.hi));
  return clamp_interval(out);
}

AngleInterval reach(double b, int factors) {
  if (factors == 0) return {0, 0};
  AngleInterval I{b, b};
  for (int i = 1; i < factors; ++i) I = reach_step(I, b);
  return I;
}

std::vector<Quat> su2_conjugators(const Quat& target, const Quat& base, int factors) {
  double a = target.angle(), b = base.angle();
  if (factors == 0) {
    if (quat_distance(target, Quat{}) > 1e-12) fail(Errc::BoundViolated, "target is not the identity");
    return {};
  }
  if (!reach(b, factors).contains(a, 1e-12))
    fail(Errc::BoundViolated, "target angle not reachable with " + std::to_string(factors) + " conjugates");
  // feas[j]: angles from which the target is reachable in j more factors
  std::vector<AngleInterval> feas{AngleInterval{a, a}};
  for (int j = 1; j < factors; ++j) feas.push_back(reach_step(feas.back(), b));

  V3 hax = std::sin(b) > 1e-300 ? unit3(vec(base)) : V3{1, 0, 0};
  Quat hq = Quat{0, hax.x, hax.y, hax.z};
  std::vector<Quat> xs{Quat{}};
  Quat prod = base;
  for (int t = 1; t < factors; ++t) {
    double c = prod.angle();
    AngleInterval step{std::fabs(c - b), std::min(c + b, 2 * kPi - c - b)};
    const AngleInterval& want = feas[factors - t - 1];
    double lo = std::max(step.lo, want.lo), hi = std::min(step.hi, want.hi);
    if (lo > hi) lo = hi = (lo + hi) / 2;
    double next = std::clamp(a, lo, hi);
    V3 u;
    double sc = std::sin(c), sb = std::sin(b);
    if (sc < 1e-14 || sb < 1e-14) {
      u = hax;
    } else {
      // cos c' = cos c cos b - sin c sin b cos psi, in half-angle form so psi
      // stays accurate at both ends of the interval
      V3 v = unit3(vec(prod));
      double s2 = std::sin((next + c - b) / 2) * std::sin((next - c + b) / 2);
      double c2 = std::sin((c + b + next) / 2) * std::sin((c + b - next) / 2);
      double psi = 2 * std::atan2(std::sqrt(std::max(0.0, c2)), std::sqrt(std::max(0.0, s2)));
      double cp = std::cos(psi), sp = std::sin(psi);
      V3 w = some_perp(v);
      u = {cp * v.x + sp * w.x, cp * v.y + sp * w.y, cp * v.z + sp * w.z};
    }
    Quat x = rotation_between(hq, Quat{0, u.x, u.y, u.z});
    xs.push_back(x);
    prod = prod * (x * base * x.conj());
  }
  // Rotate the product onto the target axis.
  if (len3(vec(prod)) > 1e-300 && len3(vec(target)) > 1e-300) {
    Quat r = rotation_between(Quat{0, prod.x, prod.y, prod.z}, Quat{0, target.x, target.y, target.z});
    for (auto& x : xs) x = r * x;
  }
  return xs;
}

Su2Certificate su2_decompose(const Rat& theta_g, const Rat& theta_h, int m) {
  if (m < 2 || m % 2) fail(Errc::InvalidArgument, "m must be even and at least 2");
  Su2Certificate c;
  c.theta_g = norm_angle(theta_g);
  c.theta_h = norm_angle(theta_h);
  c.m = m;
  Rat ag = abs_angle(c.theta_g), ah = abs_angle(c.theta_h);
  Rat hbar = std::min(ah, Rat(1) - ah);
  if (ag > hbar * m) fail(Errc::BoundViolated, "angle of g exceeds m times the folded angle of h");
  Quat g = Quat::torus(kPi * to_double(c.theta_g)), h = Quat::torus(kPi * to_double(c.theta_h));
  if (ag == 0) {
    c.product_error = su2_verify(c);
    return c;
  }
  double a = g.angle(), b = h.angle();
  int count = 1;
  while (count < m && !reach(b, count).contains(a, 1e-12)) ++count;
  c.conjugators = su2_conjugators(g, h, count);
  c.signs.assign(c.conjugators.size(), 1);
  c.product_error = su2_verify(c);
  return c;
}

double su2_verify(const Su2Certificate& c) {
  Quat g = Quat::torus(kPi * to_double(c.theta_g)), h = Quat::torus(kPi * to_double(c.theta_h));
  Quat p{};
  for (size_t i = 0; i < c.conjugators.size(); ++i) {
    const Quat& x = c.conjugators[i];
    Quat f = x * (c.signs[i] > 0 ? h : h.conj()) * x.conj();
    p = p * f;
  }
  return quat_distance(p, g);
}

}  // namespace ul::lie
