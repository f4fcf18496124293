#pragma once

#include <cstdint>
#include <string>

#include "qsymp/errors.hpp"

namespace qsymp {

using Scalar = std::uint32_t;

bool is_prime(std::uint64_t value);

/// Arithmetic in F_q for a prime q. Scalars are always kept reduced to [0, q).
class PrimeField {
 public:
  explicit PrimeField(Scalar q) : q_(q) {
    if (q < 2 || q > 65521 || !is_prime(q)) {
      throw InvalidArgument("field order must be a prime below 2^16, got " + std::to_string(q));
    }
  }

  Scalar order() const { return q_; }

  Scalar reduce(std::int64_t value) const {
    const auto q = static_cast<std::int64_t>(q_);
    auto r = value % q;
    return static_cast<Scalar>(r < 0 ? r + q : r);
  }

  Scalar add(Scalar a, Scalar b) const { return static_cast<Scalar>((a + b) % q_); }
  Scalar sub(Scalar a, Scalar b) const { return static_cast<Scalar>((a + q_ - b) % q_); }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : q_ - a; }
  Scalar mul(Scalar a, Scalar b) const {
    return static_cast<Scalar>((static_cast<std::uint64_t>(a) * b) % q_);
  }
  Scalar pow(Scalar base, std::uint64_t exponent) const;
  // Throws InvalidArgument on zero.
  Scalar inv(Scalar a) const;
  Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  Scalar q_;
};

}  // namespace qsymp
