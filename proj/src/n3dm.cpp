#include "ftag/n3dm.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "ftag/rational.hpp"

namespace ftag {

namespace {

void sort_non_increasing(std::vector<std::int64_t>& xs) {
  std::stable_sort(xs.begin(), xs.end(), std::greater<std::int64_t>());
}

}  // namespace

N3dmInstance validate_n3dm(std::vector<std::int64_t> u, std::vector<std::int64_t> v,
                           std::vector<std::int64_t> w) {
  const std::size_t n = u.size();
  if (n == 0) throw ValidationError("n3dm: empty multisets");
  if (v.size() != n || w.size() != n)
    throw ValidationError("n3dm: multisets must have equal size (" + std::to_string(n) + ", " +
                          std::to_string(v.size()) + ", " + std::to_string(w.size()) + ")");
  __int128 total = 0;
  for (const auto* list : {&u, &v, &w})
    for (std::int64_t x : *list) {
      if (x < 1) throw ValidationError("n3dm: entries must be positive, got " + std::to_string(x));
      total += x;
    }
  if (total % static_cast<__int128>(n) != 0)
    throw ValidationError("not a valid N3DM instance: total sum " +
                          std::to_string(static_cast<long long>(total)) +
                          " is not divisible by n = " + std::to_string(n));
  const __int128 q = total / static_cast<__int128>(n);
  if (q > std::numeric_limits<std::int64_t>::max()) throw OverflowError();

  N3dmInstance inst;
  inst.u = std::move(u);
  inst.v = std::move(v);
  inst.w = std::move(w);
  sort_non_increasing(inst.u);
  sort_non_increasing(inst.v);
  sort_non_increasing(inst.w);
  inst.q = static_cast<std::int64_t>(q);
  return inst;
}

namespace {

struct MatchSearch {
  const N3dmInstance& inst;
  std::vector<bool> used_v, used_w;
  Matching out;

  explicit MatchSearch(const N3dmInstance& i)
      : inst(i), used_v(i.size(), false), used_w(i.size(), false) {}

  bool solve(std::size_t i) {
    const std::size_t n = inst.size();
    if (i == n) return true;
    for (std::size_t j = 0; j < n; ++j) {
      if (used_v[j]) continue;
      // equal values are interchangeable: only try the first free one
      if (j > 0 && inst.v[j] == inst.v[j - 1] && !used_v[j - 1]) continue;
      const std::int64_t rest = inst.q - inst.u[i] - inst.v[j];
      if (rest < 1) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (used_w[k] || inst.w[k] != rest) continue;
        if (k > 0 && inst.w[k] == inst.w[k - 1] && !used_w[k - 1]) continue;
        used_v[j] = used_w[k] = true;
        out.triples.push_back({i, j, k});
        if (solve(i + 1)) return true;
        out.triples.pop_back();
        used_v[j] = used_w[k] = false;
        break;  // all w slots of this value are equivalent
      }
    }
    return false;
  }
};

}  // namespace

std::optional<Matching> brute_force_match(const N3dmInstance& inst, std::size_t cap) {
  if (inst.size() > cap)
    throw CapExceededError("n3dm: " + std::to_string(inst.size()) +
                           " triples exceed the exhaustive cap of " + std::to_string(cap));
  MatchSearch search(inst);
  if (search.solve(0)) return search.out;
  return std::nullopt;
}

bool matching_satisfies(const N3dmInstance& inst, const Matching& m) {
  const std::size_t n = inst.size();
  if (m.triples.size() != n) return false;
  std::vector<bool> seen_u(n, false), seen_v(n, false), seen_w(n, false);
  for (const auto& [i, j, k] : m.triples) {
    if (i >= n || j >= n || k >= n) return false;
    if (seen_u[i] || seen_v[j] || seen_w[k]) return false;
    seen_u[i] = seen_v[j] = seen_w[k] = true;
    if (inst.u[i] + inst.v[j] + inst.w[k] != inst.q) return false;
  }
  return true;
}

N3dmInstance shift_w(const N3dmInstance& inst, std::int64_t k) {
  if (k < 0) throw ValidationError("n3dm: shift must be nonnegative, got " + std::to_string(k));
  N3dmInstance shifted = inst;
  for (std::int64_t& x : shifted.w) {
    const __int128 wide = static_cast<__int128>(x) + k;
    if (wide > std::numeric_limits<std::int64_t>::max()) throw OverflowError();
    x = static_cast<std::int64_t>(wide);
  }
  const __int128 q = static_cast<__int128>(inst.q) + k;
  if (q > std::numeric_limits<std::int64_t>::max()) throw OverflowError();
  shifted.q = static_cast<std::int64_t>(q);
  return shifted;  // adding a constant preserves the non-increasing order
}

}  // namespace ftag
