#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace wideness {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace wideness
