#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace trn {

/// Exact nonnegative counts. All enumeration results use this type;
/// nothing in the counting paths is ever rounded.
using BigCount = boost::multiprecision::cpp_int;

}  // namespace trn
