#ifndef BIPERMKIT_TEST_ORACLES_HPP
#define BIPERMKIT_TEST_ORACLES_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

// Brute-force references built from labelled elements: a rearrangement is the
// permutation sending the source position of each label to its target
// position.

namespace oracle {

using Label = std::pair<int, int>;

inline std::vector<int> rearrangement(std::vector<Label> const &src, std::vector<Label> const &tgt)
{
  std::vector<int> r;
  for (auto const &l : src)
    r.push_back(static_cast<int>(std::find(tgt.begin(), tgt.end(), l) - tgt.begin()) + 1);
  return r;
}

// A + B -> B + A
inline std::vector<int> block_swap(int m, int n)
{
  std::vector<Label> src, tgt;
  for (int i = 1; i <= m; ++i)
    src.push_back({0, i});
  for (int j = 1; j <= n; ++j)
    src.push_back({1, j});
  for (int j = 1; j <= n; ++j)
    tgt.push_back({1, j});
  for (int i = 1; i <= m; ++i)
    tgt.push_back({0, i});
  return rearrangement(src, tgt);
}

// m x n matrix read with the first index fastest, to its transpose read the
// same way
inline std::vector<int> transpose(int m, int n)
{
  std::vector<Label> src, tgt;
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= m; ++i)
      src.push_back({i, j});
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j)
      tgt.push_back({i, j});
  return rearrangement(src, tgt);
}

// [A|B] stacked into [A/B]: (A + B) x C -> A x C + B x C
inline std::vector<int> stack(int m, int n, int p)
{
  std::vector<Label> src, tgt;
  for (int k = 1; k <= p; ++k)
    for (int x = 1; x <= m + n; ++x)
      src.push_back({x, k});
  for (int k = 1; k <= p; ++k)
    for (int x = 1; x <= m; ++x)
      tgt.push_back({x, k});
  for (int k = 1; k <= p; ++k)
    for (int x = m + 1; x <= m + n; ++x)
      tgt.push_back({x, k});
  return rearrangement(src, tgt);
}

// product of sequences: pairs (x in block i of a, y in block j of b), blocks
// ordered (i, j) with i fastest, inside a block x fastest
inline std::vector<int> seq_times(std::vector<int> const &a, std::vector<int> const &b)
{
  std::vector<int> r;
  for (int bj : b)
    for (int ai : a)
      r.push_back(ai * bj);
  return r;
}

inline std::vector<std::vector<int>> all_perms(int n)
{
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i)
    v[i] = i + 1;
  std::vector<std::vector<int>> r;
  do
    r.push_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return r;
}

inline long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

} // namespace oracle

#endif
