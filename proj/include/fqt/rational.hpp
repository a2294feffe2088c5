#ifndef FQT_RATIONAL_HPP
#define FQT_RATIONAL_HPP

#include <cstdint>

#include <boost/rational.hpp>

namespace fqt {

using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& r)
{
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace fqt

#endif
