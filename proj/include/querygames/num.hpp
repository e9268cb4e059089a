#ifndef QUERYGAMES_NUM_HPP
#define QUERYGAMES_NUM_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

namespace qg {

// Arbitrary-precision natural number. The alias is signed so intermediate
// subtractions are safe; the public helpers below reject negative inputs.
using Nat = boost::multiprecision::cpp_int;

// floor(log2(n)) with floor_log2(0) = floor_log2(1) = 0.
Nat floor_log2(const Nat& n);

// ceil(log2(n)) with ceil_log2(0) = ceil_log2(1) = 0.
Nat ceil_log2(const Nat& n);

// 2^e. Exponents are capped at one million bits to keep mistakes loud.
Nat pow2(const Nat& e);

}  // namespace qg

#endif
