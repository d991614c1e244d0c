#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace vmkdv {

/// Exact rational coefficient type. All symbolic computation is exact; floating
/// point appears only at the numeric evaluation boundary.
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) { return r.str(); }

template <typename Real>
Real to_real(const Rational& r) {
    return r.template convert_to<Real>();
}

} // namespace vmkdv
