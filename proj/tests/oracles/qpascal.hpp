#pragma once

// Independent q-binomial oracle: the q-Pascal recurrence
//   [N;K] = q^{-K} [N-1;K] + q^{N-K} [N-1;K-1],  q = v^2 = w^4,
// built from scratch with no factorials and no division.

#include <map>
#include <vector>

#include "ktgjones/exactring.hpp"

namespace oracle {

inline ktg::LaurentPoly qpascal(long n, long k) {
  static std::map<std::pair<long, long>, ktg::LaurentPoly> memo;
  if (k < 0 || n < 0 || k > n) return {};
  if (k == 0 || k == n) return ktg::LaurentPoly(1);
  auto key = std::pair{n, k};
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  ktg::LaurentPoly v = qpascal(n - 1, k).shifted(-4 * k) + qpascal(n - 1, k - 1).shifted(4 * (n - k));
  memo.emplace(key, v);
  return v;
}

}  // namespace oracle
