#ifndef BIPERMKIT_DCAT_HPP
#define BIPERMKIT_DCAT_HPP

#include <memory>
#include <string>
#include <vector>

#include "biperm.hpp"
#include "fincat.hpp"
#include "perm.hpp"
#include "report.hpp"

namespace bpk {

// Additive symmetric monoidal functor X: D -> Cat, strictly unital.
class AdditiveSMF
{
public:
  virtual ~AdditiveSMF() = default;

  virtual BipermPtr base() const = 0;
  virtual CatPtr fiber(Obj const &a) const = 0;
  // objects of Xa; may throw BoundError
  virtual std::vector<Val> fiber_objects(Obj const &a) const = 0;
  virtual Val push(Mor const &f, Val const &x) const = 0;
  virtual Val push_mor(Mor const &f, Val const &p) const = 0;
  virtual Val unit() const = 0;  // object of X0
  // monoidal constraint Xa x Xb -> X(a+b)
  virtual Val sum(Obj const &a, Obj const &b, Val const &x, Val const &y) const = 0;
  virtual Val sum_mor(Obj const &a, Obj const &b, Val const &p, Val const &q) const = 0;
  // False outside a tabulated bound.
  virtual bool defined_at(Obj const &) const { return true; }
};

using AsmfPtr = std::shared_ptr<const AdditiveSMF>;

struct Semiring
{
  enum Kind { Trunc, MaxMin, Mod } kind = Trunc;
  int k = 1;

  int size() const { return kind == Mod ? k : k + 1; }
  int zero() const { return 0; }
  int one() const;
  int add(int a, int b) const;
  int mul(int a, int b) const;
  bool ordered() const { return kind != Mod; }
  std::string name() const;
  static Semiring parse(std::string const &s);

  friend bool operator==(Semiring const &, Semiring const &) = default;
};

// S^n as a discrete or pointwise-ordered category. Morphisms are [x, y].
class VecFiber : public Category
{
public:
  VecFiber(Semiring s, int n, bool ordered, bool sorted = false);

  bool has_object(Val const &x) const override;
  Val dom(Val const &f) const override { return f[0]; }
  Val cod(Val const &f) const override { return f[1]; }
  Val id(Val const &x) const override { return Val::list({x, x}); }
  Val compose(Val const &g, Val const &f) const override;
  std::vector<Val> hom(Val const &a, Val const &b) const override;
  bool has_objects() const override { return true; }
  std::vector<Val> objects() const override;
  std::optional<Val> inverse(Val const &f) const override;

private:
  Semiring s_;
  int n_;
  bool ordered_, sorted_;
};

// Xa = S^|a|, pushforward by summing fibres, sum by concatenation. The sorted
// variant stores multisets and is meant for the discrete commutative instance.
class VecFunctor : public AdditiveSMF
{
public:
  VecFunctor(BipermPtr d, Semiring s, bool ordered, bool sorted = false);

  BipermPtr base() const override { return d_; }
  CatPtr fiber(Obj const &a) const override;
  std::vector<Val> fiber_objects(Obj const &a) const override;
  Val push(Mor const &f, Val const &x) const override;
  Val push_mor(Mor const &f, Val const &p) const override;
  Val unit() const override { return Val::list(std::vector<Val>{}); }
  Val sum(Obj const &a, Obj const &b, Val const &x, Val const &y) const override;
  Val sum_mor(Obj const &a, Obj const &b, Val const &p, Val const &q) const override;

  Semiring const &semiring() const { return s_; }
  bool ordered() const { return ordered_; }
  bool sorted() const { return sorted_; }

private:
  BipermPtr d_;
  Semiring s_;
  bool ordered_, sorted_;
};

// Constant at the terminal category.
class ConstUnitSMF : public AdditiveSMF
{
public:
  explicit ConstUnitSMF(BipermPtr d)
  : d_(std::move(d))
  {}
  BipermPtr base() const override { return d_; }
  CatPtr fiber(Obj const &a) const override;
  std::vector<Val> fiber_objects(Obj const &) const override { return {point()}; }
  Val push(Mor const &, Val const &x) const override { return x; }
  Val push_mor(Mor const &, Val const &p) const override { return p; }
  Val unit() const override { return point(); }
  Val sum(Obj const &, Obj const &, Val const &, Val const &) const override { return point(); }
  Val sum_mor(Obj const &, Obj const &, Val const &, Val const &) const override
  {
    return point();
  }
  // the single object and morphism of the terminal category
  static Val point() { return Val::list(std::vector<Val>{}); }

private:
  BipermPtr d_;
};

// Tabulated X on a finite set of D-objects; anything outside raises BoundError.
class TabulatedSMF : public AdditiveSMF
{
public:
  struct Push
  {
    std::map<Val, Val> objects, morphisms;
  };

  TabulatedSMF(BipermPtr d, std::vector<Obj> bound,
               std::map<Obj, std::shared_ptr<const FinCategory>> fibers,
               std::map<Mor, Push> pushes, Val unit,
               std::map<std::pair<Obj, Obj>, Push> sums);

  BipermPtr base() const override { return d_; }
  CatPtr fiber(Obj const &a) const override;
  std::vector<Val> fiber_objects(Obj const &a) const override;
  Val push(Mor const &f, Val const &x) const override;
  Val push_mor(Mor const &f, Val const &p) const override;
  Val unit() const override { return unit_; }
  Val sum(Obj const &a, Obj const &b, Val const &x, Val const &y) const override;
  Val sum_mor(Obj const &a, Obj const &b, Val const &p, Val const &q) const override;

  bool defined_at(Obj const &a) const override { return fibers_.count(a) > 0; }

  std::vector<Obj> const &bound() const { return bound_; }
  std::map<Obj, std::shared_ptr<const FinCategory>> const &fibers() const { return fibers_; }
  std::map<Mor, Push> const &pushes() const { return pushes_; }
  std::map<std::pair<Obj, Obj>, Push> const &sums() const { return sums_; }

private:
  BipermPtr d_;
  std::vector<Obj> bound_;
  std::map<Obj, std::shared_ptr<const FinCategory>> fibers_;
  std::map<Mor, Push> pushes_;
  Val unit_;
  std::map<std::pair<Obj, Obj>, Push> sums_;
};

// Tabulates X over the D-objects of bound and all D-morphisms between them.
TabulatedSMF tabulate_smf(AdditiveSMF const &x, std::vector<Obj> const &bound);

// Additive natural transformation X_1..X_n => Z. Arity 0 is an object of Z(1).
class AdditiveNatTrans
{
public:
  virtual ~AdditiveNatTrans() = default;
  virtual std::vector<AsmfPtr> sources() const = 0;
  virtual AsmfPtr target() const = 0;
  int arity() const { return static_cast<int>(sources().size()); }
  // object of Z(a_1 ... a_n)
  virtual Val obj(std::vector<Obj> const &as, std::vector<Val> const &xs) const = 0;
  virtual Val mor(std::vector<Obj> const &as, std::vector<Val> const &ps) const = 0;
};

using NatPtr = std::shared_ptr<const AdditiveNatTrans>;

class AdditiveMod
{
public:
  virtual ~AdditiveMod() = default;
  virtual NatPtr source() const = 0;
  virtual NatPtr target() const = 0;
  // morphism source(as, xs) -> target(as, xs) in Z(a_1 ... a_n)
  virtual Val component(std::vector<Obj> const &as, std::vector<Val> const &xs) const = 0;
};

using ModPtr = std::shared_ptr<const AdditiveMod>;

// c * (x_1 (x) ... (x) x_n) for vector functors over one semiring.
class ProductNat : public AdditiveNatTrans
{
public:
  ProductNat(std::vector<AsmfPtr> sources, AsmfPtr target, int c);

  std::vector<AsmfPtr> sources() const override { return src_; }
  AsmfPtr target() const override { return tgt_; }
  Val obj(std::vector<Obj> const &as, std::vector<Val> const &xs) const override;
  Val mor(std::vector<Obj> const &as, std::vector<Val> const &ps) const override;
  int scalar() const { return c_; }

private:
  std::vector<AsmfPtr> src_;
  AsmfPtr tgt_;
  int c_;
  Semiring s_;
  bool sorted_;
};

class IdentityNat : public AdditiveNatTrans
{
public:
  explicit IdentityNat(AsmfPtr x)
  : x_(std::move(x))
  {}
  std::vector<AsmfPtr> sources() const override { return {x_}; }
  AsmfPtr target() const override { return x_; }
  Val obj(std::vector<Obj> const &, std::vector<Val> const &xs) const override { return xs.at(0); }
  Val mor(std::vector<Obj> const &, std::vector<Val> const &ps) const override { return ps.at(0); }

private:
  AsmfPtr x_;
};

// arity 0: a chosen object of Z(1)
class ConstantNat : public AdditiveNatTrans
{
public:
  ConstantNat(AsmfPtr z, Val x)
  : z_(std::move(z)), x_(std::move(x))
  {}
  std::vector<AsmfPtr> sources() const override { return {}; }
  AsmfPtr target() const override { return z_; }
  Val obj(std::vector<Obj> const &, std::vector<Val> const &) const override { return x_; }
  Val mor(std::vector<Obj> const &, std::vector<Val> const &) const override;

private:
  AsmfPtr z_;
  Val x_;
};

// phi o (phi_1 x ... x phi_n)
class GammaNat : public AdditiveNatTrans
{
public:
  GammaNat(NatPtr outer, std::vector<NatPtr> inner);
  std::vector<AsmfPtr> sources() const override { return src_; }
  AsmfPtr target() const override { return outer_->target(); }
  Val obj(std::vector<Obj> const &as, std::vector<Val> const &xs) const override;
  Val mor(std::vector<Obj> const &as, std::vector<Val> const &ps) const override;

private:
  template <class F>
  Val apply(std::vector<Obj> const &as, std::vector<Val> const &xs, F f) const;
  NatPtr outer_;
  std::vector<NatPtr> inner_;
  std::vector<AsmfPtr> src_;
};

// phi^s: Z(s^-1) o phi at the permuted tuple
class SigmaNat : public AdditiveNatTrans
{
public:
  SigmaNat(NatPtr phi, Perm s);
  std::vector<AsmfPtr> sources() const override { return src_; }
  AsmfPtr target() const override { return phi_->target(); }
  Val obj(std::vector<Obj> const &as, std::vector<Val> const &xs) const override;
  Val mor(std::vector<Obj> const &as, std::vector<Val> const &ps) const override;

private:
  NatPtr phi_;
  Perm s_;
  std::vector<AsmfPtr> src_;
};

// i-th entry goes to position s(i): (s<v>)_i = v_{s^-1(i)}
template <class T>
std::vector<T> permute_tuple(Perm const &s, std::vector<T> const &v)
{
  std::vector<T> r(v.size());
  for (int j = 1; j <= s.size(); ++j)
    r[s(j) - 1] = v[j - 1];
  return r;
}

NatPtr gamma(NatPtr phi, std::vector<NatPtr> const &inner);
NatPtr sigma_act(NatPtr phi, Perm const &s);

class IdentityMod : public AdditiveMod
{
public:
  explicit IdentityMod(NatPtr phi)
  : phi_(std::move(phi))
  {}
  NatPtr source() const override { return phi_; }
  NatPtr target() const override { return phi_; }
  Val component(std::vector<Obj> const &as, std::vector<Val> const &xs) const override;

private:
  NatPtr phi_;
};

// c <= c' between product transformations
class ScalarMod : public AdditiveMod
{
public:
  ScalarMod(std::shared_ptr<const ProductNat> lo, std::shared_ptr<const ProductNat> hi);
  NatPtr source() const override { return lo_; }
  NatPtr target() const override { return hi_; }
  Val component(std::vector<Obj> const &as, std::vector<Val> const &xs) const override;

private:
  std::shared_ptr<const ProductNat> lo_, hi_;
};

class VerticalMod : public AdditiveMod
{
public:
  VerticalMod(ModPtr second, ModPtr first)
  : g_(std::move(second)), f_(std::move(first))
  {}
  NatPtr source() const override { return f_->source(); }
  NatPtr target() const override { return g_->target(); }
  Val component(std::vector<Obj> const &as, std::vector<Val> const &xs) const override;

private:
  ModPtr g_, f_;
};

class GammaMod : public AdditiveMod
{
public:
  GammaMod(ModPtr outer, std::vector<ModPtr> inner);
  NatPtr source() const override { return src_; }
  NatPtr target() const override { return tgt_; }
  Val component(std::vector<Obj> const &as, std::vector<Val> const &xs) const override;

private:
  ModPtr outer_;
  std::vector<ModPtr> inner_;
  NatPtr src_, tgt_;
};

class SigmaMod : public AdditiveMod
{
public:
  SigmaMod(ModPtr m, Perm s);
  NatPtr source() const override { return src_; }
  NatPtr target() const override { return tgt_; }
  Val component(std::vector<Obj> const &as, std::vector<Val> const &xs) const override;

private:
  ModPtr m_;
  Perm s_;
  NatPtr src_, tgt_;
};

ModPtr gamma(ModPtr m, std::vector<ModPtr> const &inner);
ModPtr sigma_act(ModPtr m, Perm const &s);

// Sampling configuration shared by the D-Cat checks.
struct DSample
{
  std::vector<Obj> dobjs;   // D-objects inputs are drawn from
  long count = 300;         // instances per axiom
  std::uint64_t seed = 1;
  int max_card = 3;         // morphism-level checks use objects up to this size
};

Report check_additive_smf(AdditiveSMF const &x, DSample const &s);
Report check_additive_nat(AdditiveNatTrans const &phi, DSample const &s);
Report check_additive_mod(AdditiveMod const &m, DSample const &s);

// Structural comparison on sampled inputs; "" when equal.
std::string diff_nat(AdditiveNatTrans const &a, AdditiveNatTrans const &b, DSample const &s);
std::string diff_mod(AdditiveMod const &a, AdditiveMod const &b, DSample const &s);

// Random inputs for an arity-n cell: D-objects and fiber objects per source.
struct NatInput
{
  std::vector<Obj> as;
  std::vector<Val> xs;
};
NatInput sample_input(std::vector<AsmfPtr> const &srcs, std::vector<Obj> const &dobjs, Rng &g);
Val sample_fiber_object(AdditiveSMF const &x, Obj const &a, Rng &g);
// a morphism of Xa out of x (identity if nothing else is found)
Val sample_fiber_morphism(AdditiveSMF const &x, Obj const &a, Val const &from, Rng &g);

} // namespace bpk

#endif
