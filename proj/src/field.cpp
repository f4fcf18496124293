#include "qsymp/field.hpp"

namespace qsymp {

bool is_prime(std::uint64_t value) {
  if (value < 2) return false;
  for (std::uint64_t d = 2; d * d <= value; ++d) {
    if (value % d == 0) return false;
  }
  return true;
}

Scalar PrimeField::pow(Scalar base, std::uint64_t exponent) const {
  Scalar result = 1 % q_;
  Scalar b = base % q_;
  while (exponent > 0) {
    if (exponent & 1U) result = mul(result, b);
    b = mul(b, b);
    exponent >>= 1U;
  }
  return result;
}

Scalar PrimeField::inv(Scalar a) const {
  if (a % q_ == 0) throw InvalidArgument("zero has no inverse");
  return pow(a, q_ - 2);
}

}  // namespace qsymp
