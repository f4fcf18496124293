#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qsymp/errors.hpp"

namespace qsymp {

inline constexpr std::size_t kMaxFactors = 64;

/// A subset J of the factor indices {0, ..., n-1}. User-facing text is 1-based.
class Support {
 public:
  Support() = default;
  Support(std::size_t n, std::uint64_t bits) : n_(n), bits_(bits) {
    if (n > kMaxFactors) throw InvalidArgument("at most 64 tensor factors are supported");
    if (n < kMaxFactors && (bits >> n) != 0) throw InvalidArgument("support index out of range");
  }

  static Support empty(std::size_t n) { return {n, 0}; }
  static Support full(std::size_t n) {
    return {n, n == kMaxFactors ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
  }
  // 0-based indices.
  static Support from_indices(std::size_t n, const std::vector<std::size_t>& indices);
  // "1,2,4" (1-based, as typed on the command line); "" is the empty support.
  static Support parse(std::size_t n, const std::string& text);

  std::size_t ambient() const { return n_; }
  std::uint64_t bits() const { return bits_; }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool contains(std::size_t i) const { return i < n_ && ((bits_ >> i) & 1U); }
  bool is_subset_of(const Support& other) const { return (bits_ & ~other.bits_) == 0; }

  Support complement() const { return {n_, full(n_).bits_ & ~bits_}; }
  Support meet(const Support& other) const { return {n_, bits_ & other.bits_}; }
  Support join(const Support& other) const { return {n_, bits_ | other.bits_}; }

  // Sorted 0-based indices.
  std::vector<std::size_t> indices() const;
  // "{1,2,4}"
  std::string to_string() const;

  friend bool operator==(const Support&, const Support&) = default;

 private:
  std::size_t n_ = 0;
  std::uint64_t bits_ = 0;
};

// Visits all 2^n supports by increasing cardinality, lexicographically within a
// cardinality. The visitor returns false to stop early.
void for_each_support(std::size_t n, const std::function<bool(const Support&)>& visit);

}  // namespace qsymp
