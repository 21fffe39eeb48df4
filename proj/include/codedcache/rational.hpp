#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace codedcache {

using Rational = boost::rational<std::int64_t>;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

inline double to_double(const Rational& r) {
  return boost::rational_cast<double>(r);
}

}  // namespace codedcache
