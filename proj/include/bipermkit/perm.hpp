#ifndef BIPERMKIT_PERM_HPP
#define BIPERMKIT_PERM_HPP

#include <compare>
#include <string>
#include <vector>

namespace bpk {

// Bijection of {1..n} in one-line notation.
class Perm
{
public:
  Perm() = default;
  explicit Perm(std::vector<int> images);

  static Perm identity(int n);
  // Every permutation of {1..n}, in lexicographic order.
  static std::vector<Perm> all(int n);

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i - 1]; }
  const std::vector<int> &images() const { return img_; }

  bool is_identity() const;
  Perm inverse() const;

  std::string str() const;

  friend bool operator==(Perm const &, Perm const &) = default;
  friend auto operator<=>(Perm const &, Perm const &) = default;

private:
  std::vector<int> img_;
};

// (s * t)(i) = s(t(i))
Perm operator*(Perm const &s, Perm const &t);
Perm compose(Perm const &s, Perm const &t);
Perm inverse(Perm const &s);

Perm block_sum(std::vector<Perm> const &ps);

// lengths[j] is the length of the block that lands at position j, so the
// block sitting at position s(j) of the source moves to position j.
Perm block_permutation(Perm const &s, std::vector<int> const &lengths);

Perm block_swap(int m, int n);
Perm transpose_perm(int m, int n);
Perm tetris(int m, int n, int p);

// Composite in the Barratt-Eccles operad: s<k_1..k_n> * (t_1 x ... x t_n)
Perm be_gamma(Perm const &s, std::vector<Perm> const &ts);

// The transposition exchanging i and j in Sigma_n.
Perm transposition(int n, int i, int j);

} // namespace bpk

#endif
