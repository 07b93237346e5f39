#include "ultralen/errors.hpp"
#include "ultralen/rational.hpp"

#include <cmath>
#include <numeric>

namespace ul {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::Ok: return "Ok";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::OddTypeInAlt: return "OddTypeInAlt";
    case Errc::Singular: return "Singular";
    case Errc::CharTwoSymmetric: return "CharTwoSymmetric";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::IdentityElement: return "IdentityElement";
    case Errc::NotSimple: return "NotSimple";
    case Errc::BadRank: return "BadRank";
    case Errc::RankTooLargeForExact: return "RankTooLargeForExact";
    case Errc::BoundViolated: return "BoundViolated";
    case Errc::CentralH: return "CentralH";
    case Errc::NotInOrbit: return "NotInOrbit";
    case Errc::NoSplit: return "NoSplit";
    case Errc::RankTooSmall: return "RankTooSmall";
    case Errc::Unrealizable: return "Unrealizable";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::SearchExhausted: return "SearchExhausted";
    case Errc::ConfigInvalid: return "ConfigInvalid";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

Rat parse_rat(const std::string& s) {
  if (s.empty()) fail(Errc::InvalidArgument, "empty rational");
  try {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
      long long p = std::stoll(s.substr(0, slash));
      long long q = std::stoll(s.substr(slash + 1));
      if (q == 0) fail(Errc::InvalidArgument, "zero denominator: " + s);
      return Rat(p, q);
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rat(std::stoll(s));
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    bool neg = !ip.empty() && ip[0] == '-';
    if (fp.size() > 15) fail(Errc::InvalidArgument, "too many decimals: " + s);
    long long den = 1;
    for (size_t i = 0; i < fp.size(); ++i) den *= 10;
    long long whole = (ip.empty() || ip == "-" || ip == "+") ? 0 : std::llabs(std::stoll(ip));
    long long frac = fp.empty() ? 0 : std::stoll(fp);
    Rat r(whole * den + frac, den);
    return neg ? -r : r;
  } catch (const std::logic_error&) {
    fail(Errc::InvalidArgument, "bad rational: " + s);
  }
}

std::string rat_str(const Rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

double to_double(const Rat& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

Rat norm_angle(const Rat& theta) {
  long long p = theta.numerator(), q = theta.denominator();
  long long m = ((p % (2 * q)) + 2 * q) % (2 * q);  // in [0, 2q)
  if (m > q) m -= 2 * q;
  return Rat(m, q);
}

Rat abs_angle(const Rat& theta) {
  Rat a = norm_angle(theta);
  return a < 0 ? -a : a;
}

long long common_denominator(const std::vector<Rat>& v) {
  long long l = 1;
  for (const auto& r : v) l = std::lcm(l, r.denominator());
  return l;
}

Rat approximate(double x, long long max_den) {
  bool neg = x < 0;
  x = std::fabs(x);
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double y = x;
  for (int it = 0; it < 64; ++it) {
    double a = std::floor(y);
    long long ai = static_cast<long long>(a);
    long long q2 = ai * q1 + q0;
    if (q2 > max_den) break;
    long long p2 = ai * p1 + p0;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    double frac = y - a;
    if (frac < 1e-15) break;
    y = 1.0 / frac;
  }
  if (q1 == 0) return Rat(0);
  Rat r(p1, q1);
  return neg ? -r : r;
}

}  // namespace ul
