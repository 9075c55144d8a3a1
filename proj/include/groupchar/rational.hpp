#ifndef GROUPCHAR_RATIONAL_HPP
#define GROUPCHAR_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace groupchar {

// Exact scalars. cpp_rational keeps gcd(num, den) = 1 and den > 0, which is
// exactly the canonical form the rest of the code relies on.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using Vec = std::vector<Rational>;

std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

}  // namespace groupchar

#endif
