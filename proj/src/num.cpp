#include "querygames/num.hpp"

namespace qg {

namespace {

void require_nonnegative(const Nat& n, const char* who) {
  if (n < 0) throw std::domain_error(std::string(who) + ": negative argument");
}

}  // namespace

Nat floor_log2(const Nat& n) {
  require_nonnegative(n, "floor_log2");
  if (n <= 1) return 0;
  return Nat(boost::multiprecision::msb(n));
}

Nat ceil_log2(const Nat& n) {
  require_nonnegative(n, "ceil_log2");
  if (n <= 1) return 0;
  // Smallest e with n <= 2^e; for n >= 2 that is floor_log2(n - 1) + 1.
  return floor_log2(n - 1) + 1;
}

Nat pow2(const Nat& e) {
  require_nonnegative(e, "pow2");
  if (e > 1000000) throw std::domain_error("pow2: exponent too large");
  return Nat(1) << e.convert_to<unsigned long>();
}

}  // namespace qg
