#ifndef TREEISO_NATURAL_HPP
#define TREEISO_NATURAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace treeiso {

/// Arbitrary-precision natural number. Derived counts (walk counts, monoid
/// coefficients, rho multiplicities) use this; input edge multiplicities do not.
using Natural = boost::multiprecision::cpp_int;

}  // namespace treeiso

#endif
