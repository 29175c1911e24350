#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace dpzoo {

using Rational = boost::multiprecision::cpp_rational;

}  // namespace dpzoo
