#include "bipermkit/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bpk {

Perm::Perm(std::vector<int> images)
: img_(std::move(images))
{
  std::vector<char> seen(img_.size() + 1, 0);
  for (int x : img_) {
    if (x < 1 || x > size() || seen[x])
      throw std::invalid_argument("not a permutation: " + str());
    seen[x] = 1;
  }
}

Perm Perm::identity(int n)
{
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Perm(std::move(v));
}

std::vector<Perm> Perm::all(int n)
{
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Perm> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

bool Perm::is_identity() const
{
  for (int i = 0; i < size(); ++i)
    if (img_[i] != i + 1)
      return false;
  return true;
}

Perm Perm::inverse() const
{
  std::vector<int> r(img_.size());
  for (int i = 0; i < size(); ++i)
    r[img_[i] - 1] = i + 1;
  return Perm(std::move(r));
}

std::string Perm::str() const
{
  std::string s = "[";
  for (int i = 0; i < size(); ++i) {
    if (i)
      s += ",";
    s += std::to_string(img_[i]);
  }
  return s + "]";
}

Perm operator*(Perm const &s, Perm const &t)
{
  if (s.size() != t.size())
    throw std::invalid_argument("compose: arity mismatch");
  std::vector<int> r(t.size());
  for (int i = 1; i <= t.size(); ++i)
    r[i - 1] = s(t(i));
  return Perm(std::move(r));
}

Perm compose(Perm const &s, Perm const &t) { return s * t; }

Perm inverse(Perm const &s) { return s.inverse(); }

Perm block_sum(std::vector<Perm> const &ps)
{
  std::vector<int> r;
  int off = 0;
  for (auto const &p : ps) {
    for (int x : p.images())
      r.push_back(x + off);
    off += p.size();
  }
  return Perm(std::move(r));
}

Perm block_permutation(Perm const &s, std::vector<int> const &lengths)
{
  int n = s.size();
  if (static_cast<int>(lengths.size()) != n)
    throw std::invalid_argument("block_permutation: length-count mismatch");
  // source block i has the length of the target block j with s(j) = i
  Perm si = s.inverse();
  std::vector<int> src_len(n), src_off(n + 1, 0);
  for (int i = 1; i <= n; ++i)
    src_len[i - 1] = lengths[si(i) - 1];
  for (int i = 0; i < n; ++i)
    src_off[i + 1] = src_off[i] + src_len[i];
  std::vector<int> r;
  for (int j = 1; j <= n; ++j)
    for (int t = 1; t <= lengths[j - 1]; ++t)
      r.push_back(src_off[s(j) - 1] + t);
  return Perm(std::move(r));
}

Perm block_swap(int m, int n)
{
  std::vector<int> r(m + n);
  for (int k = 1; k <= m + n; ++k)
    r[k - 1] = k <= m ? n + k : k - m;
  return Perm(std::move(r));
}

Perm transpose_perm(int m, int n)
{
  std::vector<int> r(m * n);
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= m; ++i)
      r[i + (j - 1) * m - 1] = j + (i - 1) * n;
  return Perm(std::move(r));
}

Perm tetris(int m, int n, int p)
{
  std::vector<int> r((m + n) * p);
  for (int k = 1; k <= p; ++k) {
    for (int i = 1; i <= m; ++i)
      r[i + (k - 1) * (m + n) - 1] = i + (k - 1) * m;
    for (int j = 1; j <= n; ++j)
      r[j + m + (k - 1) * (m + n) - 1] = j + (k - 1) * n + p * m;
  }
  return Perm(std::move(r));
}

Perm be_gamma(Perm const &s, std::vector<Perm> const &ts)
{
  if (static_cast<int>(ts.size()) != s.size())
    throw std::invalid_argument("be_gamma: arity mismatch");
  std::vector<int> k;
  for (auto const &t : ts)
    k.push_back(t.size());
  return block_permutation(s, k) * block_sum(ts);
}

Perm transposition(int n, int i, int j)
{
  auto v = Perm::identity(n).images();
  std::swap(v[i - 1], v[j - 1]);
  return Perm(std::move(v));
}

} // namespace bpk
