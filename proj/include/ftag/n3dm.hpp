#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "ftag/errors.hpp"

namespace ftag {

// Numerical 3-dimensional matching instance in canonical form: three equal-size
// multisets of positive integers, each sorted non-increasing (stably, so ties
// keep their original relative order), with target q = (sum u + sum v + sum w) / n.
struct N3dmInstance {
  std::vector<std::int64_t> u, v, w;
  std::int64_t q = 0;

  std::size_t size() const { return u.size(); }

  friend bool operator==(const N3dmInstance&, const N3dmInstance&) = default;
};

// n disjoint triples (i, j, k) of 0-based indices, each summing to q; the i's,
// j's and k's are each a permutation of 0..n-1.
struct Matching {
  std::vector<std::array<std::size_t, 3>> triples;
};

// Canonicalizes and derives q.  Throws ValidationError on unequal lengths,
// non-positive entries, or a non-integral q.
N3dmInstance validate_n3dm(std::vector<std::int64_t> u, std::vector<std::int64_t> v,
                           std::vector<std::int64_t> w);

// Exhaustive backtracking decision oracle.  Returns a witness matching or
// nullopt; throws CapExceededError above the cap.
std::optional<Matching> brute_force_match(const N3dmInstance& inst, std::size_t cap = 10);

// True iff m pairs every index exactly once and every triple sums to q.
bool matching_satisfies(const N3dmInstance& inst, const Matching& m);

// Answer-preserving normalization: adds k to every element of w and to q.
N3dmInstance shift_w(const N3dmInstance& inst, std::int64_t k);

}  // namespace ftag
