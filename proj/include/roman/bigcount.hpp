#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace roman {

/// Exact nonnegative counter. Cover and subset counts overflow 64 bits well
/// within the sizes this library targets, so every count is arbitrary
/// precision end to end.
using BigCount = boost::multiprecision::cpp_int;

}  // namespace roman
