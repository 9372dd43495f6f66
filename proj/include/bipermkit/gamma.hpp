#ifndef BIPERMKIT_GAMMA_HPP
#define BIPERMKIT_GAMMA_HPP

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "biperm.hpp"
#include "dcat.hpp"
#include "fincat.hpp"
#include "gro.hpp"
#include "perm.hpp"
#include "permcat.hpp"
#include "report.hpp"

namespace bpk {

// Pointed function <m> -> <n>; map[i-1] is the image of i, 0 is the basepoint.
struct PointedFn
{
  int m = 0, n = 0;
  std::vector<int> map;

  static PointedFn identity(int n);
  static std::vector<PointedFn> all(int m, int n);
  // <1> -> <n>, 1 |-> i
  static PointedFn point(int n, int i);
  int operator()(int i) const { return i == 0 ? 0 : map.at(i - 1); }
  std::string str() const;

  friend bool operator==(PointedFn const &, PointedFn const &) = default;
  friend auto operator<=>(PointedFn const &, PointedFn const &) = default;
};

// g after f
PointedFn compose(PointedFn const &g, PointedFn const &f);

// <m_1> ^ ... ^ <m_n> = <m_1 ... m_n>, first factor varying fastest; this is the
// element order of a block of the product in the sequence instance.
int smash_index(std::vector<int> const &ms, std::vector<int> const &is);
std::vector<int> smash_split(std::vector<int> const &ms, int k);
int product_of(std::vector<int> const &ms);
PointedFn smash_fn(std::vector<PointedFn> const &fs);
// <prod s<m>> -> <prod m> moving the factors back: the index of s<i> goes to i
PointedFn smash_permutation(std::vector<int> const &ms, Perm const &s);

// Truncated Gamma-category: X<n> for n <= trunc, X<0> terminal.
class GammaCategory
{
public:
  virtual ~GammaCategory() = default;
  virtual std::string name() const = 0;
  virtual int trunc() const = 0;
  // n > trunc raises BoundError
  virtual CatPtr category(int n) const = 0;
  virtual Val basepoint(int n) const = 0;
  virtual Val push(PointedFn const &f, Val const &x) const = 0;
  virtual Val push_mor(PointedFn const &f, Val const &p) const = 0;

  std::vector<Val> objects(int n) const { return category(n)->objects(); }
  PointedFinCategory at(int n) const;

protected:
  void require(int n) const;
};

using GammaPtr = std::shared_ptr<const GammaCategory>;

class TerminalGamma : public GammaCategory
{
public:
  explicit TerminalGamma(int trunc);
  std::string name() const override { return "terminal"; }
  int trunc() const override { return n_; }
  CatPtr category(int n) const override;
  Val basepoint(int n) const override;
  Val push(PointedFn const &, Val const &x) const override { return x; }
  Val push_mor(PointedFn const &, Val const &p) const override { return p; }

private:
  int n_;
  CatPtr pt_;
};

// The monoidal unit: <n> as a discrete pointed category.
class UnitGamma : public GammaCategory
{
public:
  explicit UnitGamma(int trunc);
  std::string name() const override { return "unit"; }
  int trunc() const override { return n_; }
  CatPtr category(int n) const override;
  Val basepoint(int) const override { return Val(0); }
  Val push(PointedFn const &f, Val const &x) const override;
  Val push_mor(PointedFn const &f, Val const &p) const override;

private:
  int n_;
  std::vector<CatPtr> cats_;
};

// X<n> = S^n, discrete or pointwise ordered, pushforward sums fibres.
class MonoidPowerGamma : public GammaCategory
{
public:
  MonoidPowerGamma(Semiring s, int trunc, bool ordered);
  std::string name() const override;
  int trunc() const override { return n_; }
  CatPtr category(int n) const override;
  Val basepoint(int n) const override;
  Val push(PointedFn const &f, Val const &x) const override;
  Val push_mor(PointedFn const &f, Val const &p) const override;
  Semiring const &semiring() const { return s_; }
  bool ordered() const { return ordered_; }

private:
  Semiring s_;
  int n_;
  bool ordered_;
  mutable std::mutex mu_;
  mutable std::map<int, CatPtr> cats_;
};

// Table-backed Gamma-category, as read from a file.
class TabulatedGamma : public GammaCategory
{
public:
  struct Push
  {
    std::map<Val, Val> objects, morphisms;
  };
  TabulatedGamma(std::string name, std::vector<PointedFinCategory> cats,
                 std::map<PointedFn, Push> pushes);
  std::string name() const override { return name_; }
  int trunc() const override { return static_cast<int>(cats_.size()) - 1; }
  CatPtr category(int n) const override;
  Val basepoint(int n) const override;
  Val push(PointedFn const &f, Val const &x) const override;
  Val push_mor(PointedFn const &f, Val const &p) const override;

  std::vector<PointedFinCategory> const &categories() const { return cats_; }
  std::map<PointedFn, Push> const &pushes() const { return pushes_; }

private:
  std::string name_;
  std::vector<PointedFinCategory> cats_;
  std::vector<CatPtr> ptrs_;
  std::map<PointedFn, Push> pushes_;
};

std::shared_ptr<const TabulatedGamma> tabulate_gamma(GammaCategory const &x);
GammaPtr terminal_gamma(int trunc);
GammaPtr monoidal_unit_gamma(int trunc);

// Terminal at <0>, basepoints, pointed functors, identities and composites.
Report check_gamma(GammaCategory const &x, long count, std::uint64_t seed);

// Quotient of the product collapsing tuples with a basepoint entry. Inputs
// must be thin; the empty smash is the unit with objects 0 (basepoint) and 1.
PointedFinCategory smash(std::vector<PointedFinCategory> const &cats);

// Multimorphism X_1 ... X_n -> Z of Gamma-categories: components
// X_1<m_1> ^ ... ^ X_n<m_n> -> Z<m_1 ... m_n>. Arity 0 is an object of Z<1>.
class GammaMultimap
{
public:
  virtual ~GammaMultimap() = default;
  virtual std::vector<GammaPtr> sources() const = 0;
  virtual GammaPtr target() const = 0;
  int arity() const { return static_cast<int>(sources().size()); }
  virtual Val obj(std::vector<int> const &ms, std::vector<Val> const &xs) const = 0;
  virtual Val mor(std::vector<int> const &ms, std::vector<Val> const &ps) const = 0;
};

using GMapPtr = std::shared_ptr<const GammaMultimap>;

// c * x^1_{i_1} ... x^n_{i_n} over a commutative semiring
class ProductMultimap : public GammaMultimap
{
public:
  ProductMultimap(std::vector<GammaPtr> sources, GammaPtr target, int c);
  std::vector<GammaPtr> sources() const override { return src_; }
  GammaPtr target() const override { return tgt_; }
  Val obj(std::vector<int> const &ms, std::vector<Val> const &xs) const override;
  Val mor(std::vector<int> const &ms, std::vector<Val> const &ps) const override;
  int scalar() const { return c_; }

private:
  std::vector<GammaPtr> src_;
  GammaPtr tgt_;
  int c_;
  Semiring s_;
};

class IdentityMultimap : public GammaMultimap
{
public:
  explicit IdentityMultimap(GammaPtr x)
  : x_(std::move(x))
  {}
  std::vector<GammaPtr> sources() const override { return {x_}; }
  GammaPtr target() const override { return x_; }
  Val obj(std::vector<int> const &, std::vector<Val> const &xs) const override { return xs.at(0); }
  Val mor(std::vector<int> const &, std::vector<Val> const &ps) const override { return ps.at(0); }

private:
  GammaPtr x_;
};

class ConstantMultimap : public GammaMultimap
{
public:
  ConstantMultimap(GammaPtr z, Val x)
  : z_(std::move(z)), x_(std::move(x))
  {}
  std::vector<GammaPtr> sources() const override { return {}; }
  GammaPtr target() const override { return z_; }
  Val obj(std::vector<int> const &, std::vector<Val> const &) const override { return x_; }
  Val mor(std::vector<int> const &, std::vector<Val> const &) const override;

private:
  GammaPtr z_;
  Val x_;
};

class CompositeMultimap : public GammaMultimap
{
public:
  CompositeMultimap(GMapPtr outer, std::vector<GMapPtr> inner);
  std::vector<GammaPtr> sources() const override { return src_; }
  GammaPtr target() const override { return outer_->target(); }
  Val obj(std::vector<int> const &ms, std::vector<Val> const &xs) const override;
  Val mor(std::vector<int> const &ms, std::vector<Val> const &ps) const override;

private:
  template <class F>
  Val apply(std::vector<int> const &ms, std::vector<Val> const &xs, F f) const;
  GMapPtr outer_;
  std::vector<GMapPtr> inner_;
  std::vector<GammaPtr> src_;
};

// F^s<x> = Z(r) F(s<x>) with r the factor permutation of the smash
class SigmaMultimap : public GammaMultimap
{
public:
  SigmaMultimap(GMapPtr f, Perm s);
  std::vector<GammaPtr> sources() const override { return src_; }
  GammaPtr target() const override { return f_->target(); }
  Val obj(std::vector<int> const &ms, std::vector<Val> const &xs) const override;
  Val mor(std::vector<int> const &ms, std::vector<Val> const &ps) const override;

private:
  GMapPtr f_;
  Perm s_;
  std::vector<GammaPtr> src_;
};

GMapPtr gamma(GMapPtr f, std::vector<GMapPtr> const &inner);
GMapPtr sigma_act(GMapPtr f, Perm const &s);

// 2-cell F => G with components in Z<m_1 ... m_n>.
class GammaTwoCell
{
public:
  virtual ~GammaTwoCell() = default;
  virtual GMapPtr source() const = 0;
  virtual GMapPtr target() const = 0;
  virtual Val component(std::vector<int> const &ms, std::vector<Val> const &xs) const = 0;
};

using GModPtr = std::shared_ptr<const GammaTwoCell>;

class IdentityGammaMod : public GammaTwoCell
{
public:
  explicit IdentityGammaMod(GMapPtr f)
  : f_(std::move(f))
  {}
  GMapPtr source() const override { return f_; }
  GMapPtr target() const override { return f_; }
  Val component(std::vector<int> const &ms, std::vector<Val> const &xs) const override;

private:
  GMapPtr f_;
};

// c <= c' between product multimaps over an ordered semiring
class ScalarGammaMod : public GammaTwoCell
{
public:
  ScalarGammaMod(std::shared_ptr<const ProductMultimap> lo,
                 std::shared_ptr<const ProductMultimap> hi);
  GMapPtr source() const override { return lo_; }
  GMapPtr target() const override { return hi_; }
  Val component(std::vector<int> const &ms, std::vector<Val> const &xs) const override;

private:
  std::shared_ptr<const ProductMultimap> lo_, hi_;
};

class VerticalGammaMod : public GammaTwoCell
{
public:
  VerticalGammaMod(GModPtr second, GModPtr first)
  : g_(std::move(second)), f_(std::move(first))
  {}
  GMapPtr source() const override { return f_->source(); }
  GMapPtr target() const override { return g_->target(); }
  Val component(std::vector<int> const &ms, std::vector<Val> const &xs) const override;

private:
  GModPtr g_, f_;
};

class CompositeGammaMod : public GammaTwoCell
{
public:
  CompositeGammaMod(GModPtr outer, std::vector<GModPtr> inner);
  GMapPtr source() const override { return src_; }
  GMapPtr target() const override { return tgt_; }
  Val component(std::vector<int> const &ms, std::vector<Val> const &xs) const override;

private:
  GModPtr outer_;
  std::vector<GModPtr> inner_;
  GMapPtr src_, tgt_;
};

class SigmaGammaMod : public GammaTwoCell
{
public:
  SigmaGammaMod(GModPtr t, Perm s);
  GMapPtr source() const override { return src_; }
  GMapPtr target() const override { return tgt_; }
  Val component(std::vector<int> const &ms, std::vector<Val> const &xs) const override;

private:
  GModPtr t_;
  Perm s_;
  GMapPtr src_, tgt_;
};

GModPtr gamma(GModPtr t, std::vector<GModPtr> const &inner);
GModPtr sigma_act(GModPtr t, Perm const &s);
GModPtr vertical(GModPtr second, GModPtr first);

// Tuples <m_j> drawn with every m_j <= mmax and product within the target
// truncation.
struct GSample
{
  int mmax = 2;
  long count = 200;
  std::uint64_t seed = 1;
};

Report check_gamma_multimap(GammaMultimap const &f, GSample const &s);
Report check_gamma_mod(GammaTwoCell const &t, GSample const &s);
std::string diff_gmap(GammaMultimap const &a, GammaMultimap const &b, GSample const &s);
std::string diff_gmod(GammaTwoCell const &a, GammaTwoCell const &b, GSample const &s);

// ---- A: Gamma-Cat -> D-Cat over the sequence instance

// (AX)(m) = prod X<m_i>
class AObject : public AdditiveSMF
{
public:
  explicit AObject(GammaPtr x);
  BipermPtr base() const override { return d_; }
  CatPtr fiber(Obj const &a) const override;
  std::vector<Val> fiber_objects(Obj const &a) const override;
  Val push(Mor const &f, Val const &x) const override;
  Val push_mor(Mor const &f, Val const &p) const override;
  Val unit() const override { return Val::list(std::vector<Val>{}); }
  Val sum(Obj const &a, Obj const &b, Val const &x, Val const &y) const override;
  Val sum_mor(Obj const &a, Obj const &b, Val const &p, Val const &q) const override;

  GammaPtr const &gamma() const { return x_; }

private:
  template <class F>
  Val along(Mor const &f, Val const &x, F apply, bool morphism) const;
  GammaPtr x_;
  BipermPtr d_;
};

// phi_{i,j}: <m_i> -> <n_j> for a morphism of the sequence instance
PointedFn block_component(Mor const &f, int i, int j);

class AMultimap : public AdditiveNatTrans
{
public:
  AMultimap(GMapPtr f, std::vector<AsmfPtr> sources, AsmfPtr target);
  std::vector<AsmfPtr> sources() const override { return src_; }
  AsmfPtr target() const override { return tgt_; }
  Val obj(std::vector<Obj> const &as, std::vector<Val> const &xs) const override;
  Val mor(std::vector<Obj> const &as, std::vector<Val> const &ps) const override;
  GMapPtr const &multimap() const { return f_; }

private:
  template <class F>
  Val apply(std::vector<Obj> const &as, std::vector<Val> const &xs, F f) const;
  GMapPtr f_;
  std::vector<AsmfPtr> src_;
  AsmfPtr tgt_;
};

class AModification : public AdditiveMod
{
public:
  AModification(GModPtr t, NatPtr source, NatPtr target)
  : t_(std::move(t)), src_(std::move(source)), tgt_(std::move(target))
  {}
  NatPtr source() const override { return src_; }
  NatPtr target() const override { return tgt_; }
  Val component(std::vector<Obj> const &as, std::vector<Val> const &xs) const override;

private:
  GModPtr t_;
  NatPtr src_, tgt_;
};

// A with one AX per Gamma-category, so images of composable cells compose.
class AFunctor
{
public:
  AsmfPtr object(GammaPtr const &x) const;
  NatPtr multimap(GMapPtr const &f) const;
  ModPtr modification(GModPtr const &t) const;

private:
  mutable std::mutex mu_;
  mutable std::map<GammaCategory const *, AsmfPtr> cache_;
};

// Arity 0: a multimap out of the unit is its value at 1 in Z<1>.
Val A_arity0(GammaMultimap const &f);
GMapPtr A_arity0_inverse(GammaPtr z, Val const &x);
Val A_arity0_mor(GammaTwoCell const &t);
GModPtr A_arity0_inverse_mor(GammaPtr z, Val const &p);
// components of an arity-0 multimap read as a natural map from the unit
std::vector<Val> arity0_components(GammaMultimap const &f, int n);
Report check_A_arity0(GammaPtr z, std::vector<GMapPtr> const &samples, GSample const &s);

// ---- P = int o A

class InverseK
{
public:
  explicit InverseK(std::vector<Obj> bound)
  : gro_(std::move(bound))
  {}
  GroPtr object(GammaPtr const &x) const { return gro_.category(a_.object(x)); }
  NLPtr multimap(GMapPtr const &f) const { return gro_.nat(a_.multimap(f)); }
  NLTransPtr modification(GModPtr const &t) const { return gro_.mod(a_.modification(t)); }
  // (int)_{s; AF}, A being strictly symmetric
  NLTransPtr pseudo(GMapPtr const &f, Perm const &s) const { return gro_.pseudo(a_.multimap(f), s); }
  AFunctor const &A() const { return a_; }
  GroContext const &gro() const { return gro_; }

private:
  AFunctor a_;
  GroContext gro_;
};

GroPtr inverse_K(GammaPtr x, std::vector<Obj> const &bound);

// The component (s, 1) of P_s at objects (m^j, x^j), computed from the
// coherence iso of the sequence instance.
Val P_pseudo_sigma(GammaMultimap const &f, Perm const &s, std::vector<Val> const &objs);

// P(terminal) against the additive category of the sequence instance: objects
// and hom-sets bijective, strict symmetric monoidal.
Report check_P_terminal(GroPtr p, std::shared_ptr<const DCategory> d);

} // namespace bpk

#endif
