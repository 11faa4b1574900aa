#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace sadic {

// Exact integers for incidence matrices and telescoped lengths; iterate
// lengths such as 3^{k(k+1)/2} overflow 64 bits well inside desk scale.
using Bigint = boost::multiprecision::cpp_int;

}  // namespace sadic
