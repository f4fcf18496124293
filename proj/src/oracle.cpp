#include "qsymp/oracle.hpp"

#include <algorithm>
#include <bit>

#include "qsymp/errors.hpp"

namespace qsymp::oracle {

namespace {

std::uint64_t checked_count(std::uint64_t q, std::size_t e, std::uint64_t budget, const char* what) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (v > budget / q) {
      throw BudgetExceeded(what, v * q, budget);
    }
    v *= q;
  }
  return v;
}

std::vector<Coords> sorted_unique(std::vector<Coords> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

CodewordIterator::CodewordIterator(PrimeField field, std::size_t n, std::vector<Coords> generators,
                                   std::uint64_t budget)
    : field_(field),
      generators_(std::move(generators)),
      digits_(generators_.size(), 0),
      current_(2 * n, 0),
      budget_(budget) {
  checked_count(field.order(), generators_.size(), budget, "codeword enumeration");
}

void CodewordIterator::next() {
  if (done_) return;
  std::size_t i = 0;
  while (i < digits_.size() && digits_[i] + 1 == field_.order()) {
    digits_[i] = 0;
    ++i;
  }
  if (i == digits_.size()) {
    done_ = true;
    return;
  }
  ++digits_[i];
  ++count_;
  if (count_ > budget_) throw BudgetExceeded("codeword enumeration", count_, budget_);
  // Recompute the combination from scratch; this is the literal definition.
  std::fill(current_.begin(), current_.end(), 0);
  for (std::size_t g = 0; g < generators_.size(); ++g) {
    for (std::size_t c = 0; c < current_.size(); ++c) {
      current_[c] = field_.add(current_[c], field_.mul(digits_[g], generators_[g][c]));
    }
  }
}

std::vector<Coords> enumerate(const Instance& w, std::uint64_t budget) {
  std::vector<Coords> out;
  for (CodewordIterator it(w.field, w.n, w.generators, budget); !it.done(); it.next()) {
    out.push_back(it.current());
  }
  return sorted_unique(std::move(out));
}

bool contains(const std::vector<Coords>& sorted, const Coords& v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

Scalar form(const PrimeField& f, const Coords& u, const Coords& v) {
  Scalar s = 0;
  for (std::size_t i = 0; i + 1 < u.size(); i += 2) {
    s = f.add(s, f.sub(f.mul(u[i], v[i + 1]), f.mul(u[i + 1], v[i])));
  }
  return s;
}

std::size_t weight(const Coords& v) { return static_cast<std::size_t>(std::popcount(support(v))); }

Mask support(const Coords& v) {
  Mask m = 0;
  for (std::size_t i = 0; i + 1 < v.size(); i += 2) {
    if (v[i] != 0 || v[i + 1] != 0) m |= Mask{1} << (i / 2);
  }
  return m;
}

std::vector<Coords> perp(const Instance& w, std::uint64_t budget) {
  const std::uint64_t total = checked_count(w.field.order(), 2 * w.n, budget, "perp scan");
  std::vector<Coords> out;
  Coords v(2 * w.n, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t r = idx;
    for (auto& c : v) {
      c = static_cast<Scalar>(r % w.field.order());
      r /= w.field.order();
    }
    const bool orthogonal = std::all_of(w.generators.begin(), w.generators.end(),
                                        [&](const Coords& g) { return form(w.field, v, g) == 0; });
    if (orthogonal) out.push_back(v);
  }
  return sorted_unique(std::move(out));
}

std::vector<Coords> radical(const PrimeField& f, const std::vector<Coords>& elements) {
  std::vector<Coords> out;
  for (const auto& v : elements) {
    const bool orthogonal = std::all_of(elements.begin(), elements.end(),
                                        [&](const Coords& u) { return form(f, v, u) == 0; });
    if (orthogonal) out.push_back(v);
  }
  return out;
}

std::size_t log_q(const PrimeField& f, std::size_t size) {
  std::size_t e = 0;
  std::size_t v = 1;
  while (v < size) {
    v *= f.order();
    ++e;
  }
  if (v != size) throw InvalidArgument("set size is not a power of q");
  return e;
}

Dims dims(const PrimeField& f, const std::vector<Coords>& elements) {
  const std::size_t dim_f = log_q(f, elements.size());
  const std::size_t rad = log_q(f, radical(f, elements).size());
  return {dim_f, (dim_f - rad) / 2, (dim_f + rad) / 2};
}

std::optional<std::size_t> min_distance(const Instance& code, std::uint64_t budget) {
  const auto elements = enumerate(code, budget);
  const auto rad = radical(code.field, elements);
  std::optional<std::size_t> d;
  for (const auto& v : elements) {
    if (contains(rad, v)) continue;
    const std::size_t w = weight(v);
    if (!d || w < *d) d = w;
  }
  return d;
}

Params params(const Instance& code, std::uint64_t budget) {
  const auto elements = enumerate(code, budget);
  const Dims d = dims(code.field, elements);
  Params p;
  p.n = code.n;
  p.k = d.sym_dim;
  p.s = d.isorank;
  p.d = min_distance(code, budget);
  for (const auto& v : elements) p.maxwt = std::max(p.maxwt, weight(v));
  return p;
}

std::vector<std::int64_t> distribution(const Instance& w, std::uint64_t budget) {
  std::vector<std::int64_t> out(w.n + 1, 0);
  for (const auto& v : enumerate(w, budget)) ++out[weight(v)];
  return out;
}

std::vector<std::int64_t> moments(const Instance& w, std::uint64_t budget) {
  const auto elements = enumerate(w, budget);
  const std::uint64_t supports = checked_count(2, w.n, budget, "support scan");
  std::vector<std::int64_t> out(w.n + 1, 0);
  for (Mask m = 0; m < supports; ++m) {
    out[std::popcount(m)] += static_cast<std::int64_t>(restrict_to(elements, m).size());
  }
  return out;
}

std::vector<Coords> restrict_to(const std::vector<Coords>& elements, Mask mask) {
  std::vector<Coords> out;
  for (const auto& v : elements) {
    if ((support(v) & ~mask) == 0) out.push_back(v);
  }
  return out;
}

AlphaBeta alpha_beta(const PrimeField& f, const std::vector<Coords>& code,
                     const std::vector<Coords>& rad, Mask mask) {
  const auto in_a = restrict_to(code, mask);
  const auto rad_in_a = restrict_to(rad, mask);
  const Dims d = dims(f, in_a);
  const Dims r = dims(f, rad_in_a);
  return {d.sym_dim, d.isorank - r.isorank};
}

std::vector<Coords> project(const std::vector<Coords>& elements, Mask mask) {
  std::vector<Coords> out;
  for (const auto& v : elements) {
    Coords p;
    for (std::size_t i = 0; i < v.size() / 2; ++i) {
      if ((mask >> i) & 1U) {
        p.push_back(v[2 * i]);
        p.push_back(v[2 * i + 1]);
      }
    }
    out.push_back(std::move(p));
  }
  return sorted_unique(std::move(out));
}

std::vector<Coords> puncture(const std::vector<Coords>& code, Mask mask) { return project(code, mask); }

std::vector<Coords> shorten(const std::vector<Coords>& code, Mask mask) {
  return project(restrict_to(code, mask), mask);
}

}  // namespace qsymp::oracle
