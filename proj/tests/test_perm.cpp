#include <doctest.h>

#include "bipermkit/einfty.hpp"
#include "bipermkit/multicat.hpp"
#include "bipermkit/perm.hpp"
#include "oracles.hpp"

using namespace bpk;

TEST_CASE("perm rejects non-bijections")
{
  CHECK_THROWS_AS(Perm({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Perm({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Perm({1, 3}), std::invalid_argument);
}

TEST_CASE("composition is s after t")
{
  Perm s({2, 3, 1}), t({2, 1, 3});
  CHECK((s * t).images() == std::vector<int>{3, 2, 1});
  CHECK((s * s.inverse()).is_identity());
  CHECK(Perm::all(4).size() == 24);
}

TEST_CASE("block swap against labelled blocks")
{
  CHECK(block_swap(2, 3).images() == std::vector<int>{4, 5, 1, 2, 3});
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n) {
      CHECK(block_swap(m, n).images() == oracle::block_swap(m, n));
      CHECK((block_swap(n, m) * block_swap(m, n)).is_identity());
    }
}

TEST_CASE("transpose against matrix transpose")
{
  CHECK(transpose_perm(2, 2).images() == std::vector<int>{1, 3, 2, 4});
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; n <= 6; ++n) {
      CHECK(transpose_perm(m, n).images() == oracle::transpose(m, n));
      CHECK((transpose_perm(n, m) * transpose_perm(m, n)).is_identity());
    }
  CHECK(transpose_perm(1, 5).is_identity());
}

TEST_CASE("tetris against stacking")
{
  CHECK(tetris(1, 1, 2).images() == std::vector<int>{1, 3, 2, 4});
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n)
      for (int p = 1; p <= 4; ++p)
        CHECK(tetris(m, n, p).images() == oracle::stack(m, n, p));
  CHECK(tetris(3, 2, 1).is_identity());
  CHECK(tetris(0, 3, 3).is_identity());
}

TEST_CASE("transpose square through tetris")
{
  for (int p = 1; p <= 4; ++p)
    for (int r = 1; r <= 4; ++r)
      for (int q = 1; q <= 4; ++q) {
        Perm lhs = transpose_perm(p + r, q);
        Perm rhs = block_sum({transpose_perm(p, q), transpose_perm(r, q)}) * tetris(p, r, q);
        CHECK_MESSAGE(lhs == rhs, p, r, q);
      }
}

TEST_CASE("block permutation on labelled blocks")
{
  // blocks of lengths 1 and 2 exchanged, read off from the target
  Perm s({2, 1});
  std::vector<oracle::Label> src{{1, 1}, {2, 1}, {2, 2}}, tgt{{2, 1}, {2, 2}, {1, 1}};
  CHECK(block_permutation(s, {2, 1}).images() == oracle::rearrangement(tgt, src));
  for (int n = 1; n <= 3; ++n)
    for (auto const &a : Perm::all(n)) {
      CHECK(block_permutation(a, std::vector<int>(n, 1)) == a);
      CHECK(block_permutation(Perm::identity(n), std::vector<int>(n, 2)).is_identity());
    }
}

namespace {

// k[j] is the length of the block landing at j; that block sits at s(j) in
// the source. One-line form reads off, for each target position, the source
// position it came from.
std::vector<int> block_oracle(Perm const &s, std::vector<int> const &k)
{
  int n = s.size();
  std::vector<int> len_at(n);
  for (int j = 1; j <= n; ++j)
    len_at[s(j) - 1] = k[j - 1];
  std::vector<oracle::Label> src, tgt;
  for (int i = 1; i <= n; ++i)
    for (int e = 1; e <= len_at[i - 1]; ++e)
      src.push_back({i, e});
  for (int j = 1; j <= n; ++j)
    for (int e = 1; e <= k[j - 1]; ++e)
      tgt.push_back({s(j), e});
  return oracle::rearrangement(tgt, src);
}

std::vector<int> lengths(int n, long code)
{
  std::vector<int> k(n);
  for (int j = 0; j < n; ++j) {
    k[j] = static_cast<int>(code % 4);
    code /= 4;
  }
  return k;
}

} // namespace

TEST_CASE("block permutation against brute force")
{
  for (int n = 1; n <= 4; ++n)
    for (auto const &s : Perm::all(n))
      for (long code = 0; code < (1L << (2 * n)); code += (n == 4 ? 7 : 1))
        CHECK(block_permutation(s, lengths(n, code)).images() == block_oracle(s, lengths(n, code)));
}

TEST_CASE("block permutation of a product")
{
  for (int n = 1; n <= 4; ++n)
    for (auto const &s : Perm::all(n))
      for (auto const &t : Perm::all(n)) {
        auto k = lengths(n, (s.images()[0] * 13 + t.images()[n - 1] * 5 + n) % (1L << (2 * n)));
        std::vector<int> ka(n);
        for (int i = 1; i <= n; ++i)
          ka[i - 1] = k[t.inverse()(i) - 1];
        CHECK(block_permutation(s * t, k) == block_permutation(s, ka) * block_permutation(t, k));
      }
}

TEST_CASE("Barratt-Eccles composition is a multicategory")
{
  MulticatSample ms;
  ms.count = 200;
  CellGen<Perm> gen = [](Rng &g, int n) { return detail::random_perm(g, n); };
  Report r = check_multicat(be_view(), gen, ms);
  CHECK_MESSAGE(r.ok(), r.human());
}

TEST_CASE("Barratt-Eccles composite degenerate cases")
{
  std::vector<Perm> ts{Perm({2, 1}), Perm({1}), Perm({3, 1, 2})};
  CHECK(be_gamma(Perm::identity(3), ts) == block_sum(ts));
  for (auto const &s : Perm::all(3))
    CHECK(be_gamma(s, {Perm({1}), Perm({1}), Perm({1})}) == s);
}
