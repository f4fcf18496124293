#include "qsymp/support.hpp"

#include <sstream>

namespace qsymp {

Support Support::from_indices(std::size_t n, const std::vector<std::size_t>& indices) {
  std::uint64_t bits = 0;
  for (auto i : indices) {
    if (i >= n) {
      throw InvalidArgument("factor index " + std::to_string(i + 1) + " outside 1.." +
                            std::to_string(n));
    }
    bits |= std::uint64_t{1} << i;
  }
  return {n, bits};
}

Support Support::parse(std::size_t n, const std::string& text) {
  std::vector<std::size_t> indices;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    std::size_t pos = 0;
    long long value = 0;
    try {
      value = std::stoll(item, &pos);
    } catch (const std::exception&) {
      throw InvalidArgument("malformed support entry \"" + item + "\"");
    }
    if (item.find_first_not_of(" \t", pos) != std::string::npos || value < 1 ||
        static_cast<std::size_t>(value) > n) {
      throw InvalidArgument("support entry \"" + item + "\" outside 1.." + std::to_string(n));
    }
    indices.push_back(static_cast<std::size_t>(value - 1));
  }
  return from_indices(n, indices);
}

std::vector<std::size_t> Support::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n_; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::string Support::to_string() const {
  std::string out = "{";
  bool first = true;
  for (auto i : indices()) {
    if (!first) out += ",";
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

namespace {

bool visit_combinations(std::size_t n, std::size_t size, std::size_t start, std::uint64_t bits,
                        std::size_t remaining,
                        const std::function<bool(const Support&)>& visit) {
  if (remaining == 0) return visit(Support(n, bits));
  for (std::size_t i = start; i + remaining <= n; ++i) {
    if (!visit_combinations(n, size, i + 1, bits | (std::uint64_t{1} << i), remaining - 1, visit)) {
      return false;
    }
  }
  return true;
}

}  // namespace

void for_each_support(std::size_t n, const std::function<bool(const Support&)>& visit) {
  if (n > kMaxFactors) throw InvalidArgument("at most 64 tensor factors are supported");
  for (std::size_t size = 0; size <= n; ++size) {
    if (!visit_combinations(n, size, 0, 0, size, visit)) return;
  }
}

}  // namespace qsymp
