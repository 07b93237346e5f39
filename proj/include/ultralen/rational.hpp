#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <vector>

// Boost 1.74's mixed rational/integer operator== recurses forever under C++20
// rewritten comparisons; exact non-template overloads take precedence.
namespace boost {
inline bool operator==(const rational<long long>& a, long long b) { return a.denominator() == 1 && a.numerator() == b; }
inline bool operator==(const rational<long long>& a, int b) { return a == static_cast<long long>(b); }
}  // namespace boost

namespace ul {

using Rat = boost::rational<long long>;

// Parses "p/q", "p" or a finite decimal such as "0.125".
Rat parse_rat(const std::string& s);
std::string rat_str(const Rat& r);
double to_double(const Rat& r);

// Reduces an angle (in units of pi) into (-1, 1].
Rat norm_angle(const Rat& theta);
// |norm_angle(theta)|, the angle l(e^{i pi theta}) divided by pi.
Rat abs_angle(const Rat& theta);

// Least common multiple of the denominators.
long long common_denominator(const std::vector<Rat>& v);

// Best rational approximation with denominator at most max_den.
Rat approximate(double x, long long max_den);

}  // namespace ul
