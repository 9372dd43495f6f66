#ifndef BIPERMKIT_GRO_HPP
#define BIPERMKIT_GRO_HPP

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "biperm.hpp"
#include "dcat.hpp"
#include "fincat.hpp"
#include "permcat.hpp"
#include "report.hpp"

namespace bpk {

// Objects [a, x] with x in Xa; morphisms [[a, x], f, p] with f: a -> b in D
// and p: f_* x -> y in Xb.
class GrothendieckCategory : public PermutativeCategory
{
public:
  // bound lists the D-objects used by objects(); hom-sets work everywhere X does
  GrothendieckCategory(AsmfPtr x, std::vector<Obj> bound);

  bool has_object(Val const &e) const override;
  Val dom(Val const &m) const override { return m[0]; }
  Val cod(Val const &m) const override;
  Val id(Val const &e) const override;
  Val compose(Val const &g, Val const &f) const override;
  std::vector<Val> hom(Val const &a, Val const &b) const override;
  bool has_objects() const override { return true; }
  std::vector<Val> objects() const override;
  std::optional<Val> inverse(Val const &m) const override;

  Val unit() const override;
  Val tensor(Val const &a, Val const &b) const override;
  Val tensor_mor(Val const &f, Val const &g) const override;
  Val braid(Val const &a, Val const &b) const override;

  AsmfPtr const &functor() const { return x_; }
  std::vector<Obj> const &bound() const { return bound_; }
  Val morphism(Val const &e, Mor const &f, Val const &p) const;
  // chosen lift (f, 1)
  Val lift(Val const &e, Mor const &f) const;
  // f_* x is the domain of p
  bool well_typed(Val const &m) const;

private:
  AsmfPtr x_;
  BipermPtr d_;
  std::vector<Obj> bound_;
};

using GroPtr = std::shared_ptr<const GrothendieckCategory>;

GroPtr build_grothendieck(AsmfPtr x, std::vector<Obj> const &bound);

// Projection onto D.
class ProjectionFunctor : public Functor
{
public:
  ProjectionFunctor(GroPtr e, std::shared_ptr<const DCategory> d)
  : e_(std::move(e)), d_(std::move(d))
  {}
  CatPtr source() const override { return e_; }
  CatPtr target() const override { return d_; }
  Val obj(Val const &x) const override { return x[0]; }
  Val mor(Val const &f) const override;

private:
  GroPtr e_;
  std::shared_ptr<const DCategory> d_;
};

// P: E -> D with a cleavage. The permutative variant additionally has E and D
// permutative.
struct SplitOpfibration
{
  CatPtr E, D;
  FunctorPtr P;
  std::function<Val(Val const &y, Val const &f)> lift;
  std::vector<Val> eobjs;  // bound of E-objects
  std::vector<Val> dobjs;  // bound of D-objects
  PermCatPtr Eperm, Dperm;  // set for permutative opfibrations
};

SplitOpfibration grothendieck_opfibration(GroPtr e, std::shared_ptr<const DCategory> d);
SplitOpfibration identity_opfibration(std::shared_ptr<const DCategory> d);

// "" if g is opcartesian with respect to the bounded E-objects, else the
// failing fore-raise.
std::string check_opcartesian_morphism(SplitOpfibration const &p, Val const &g);

Report check_split_opfib(SplitOpfibration const &p, long count, std::uint64_t seed);
Report check_perm_opfib(SplitOpfibration const &p, long count, std::uint64_t seed);

// X reconstructed from a split opfibration: fibers are P^-1(a).
class ReconstructedSMF : public AdditiveSMF
{
public:
  ReconstructedSMF(SplitOpfibration p, BipermPtr d);
  BipermPtr base() const override { return d_; }
  CatPtr fiber(Obj const &a) const override;
  std::vector<Val> fiber_objects(Obj const &a) const override;
  Val push(Mor const &f, Val const &x) const override;
  Val push_mor(Mor const &f, Val const &p) const override;
  Val unit() const override;
  Val sum(Obj const &a, Obj const &b, Val const &x, Val const &y) const override;
  Val sum_mor(Obj const &a, Obj const &b, Val const &p, Val const &q) const override;

  SplitOpfibration const &opfibration() const { return p_; }
  // the unique raise r: cod(lift(y, f)) -> z with P r = 1 and r lift(y,f) = m
  Val raise(Val const &m) const;

private:
  SplitOpfibration p_;
  BipermPtr d_;
  std::map<Obj, std::shared_ptr<const FinCategory>> fibers_;
};

struct Reconstruction
{
  std::shared_ptr<const ReconstructedSMF> X;
  GroPtr gro;
  FunctorPtr phi;      // int X -> E
  FunctorPtr phi_inv;  // E -> int X
};

// Refuses (StructuralError) if p fails the split opfibration axioms.
Reconstruction reconstruct_from_opfibration(SplitOpfibration const &p, BipermPtr d,
                                            long count = 200, std::uint64_t seed = 1);

// phi invertible on the bound, P phi = U_X, lifts preserved, and strict
// symmetric monoidal when p is permutative.
Report check_reconstruction(Reconstruction const &r, SplitOpfibration const &p, long count,
                            std::uint64_t seed);

// int phi: strong n-linear functor with constraints (lambda^-1, 1).
class GroNat : public NLinearFunctor
{
public:
  GroNat(NatPtr phi, std::vector<GroPtr> sources, GroPtr target);
  std::vector<PermCatPtr> sources() const override;
  PermCatPtr target() const override { return tgt_; }
  Val obj(std::vector<Val> const &xs) const override;
  Val mor(std::vector<Val> const &fs) const override;
  Val constraint(int j, std::vector<Val> const &xs, Val const &xj2) const override;

  NatPtr const &nat() const { return phi_; }

private:
  NatPtr phi_;
  std::vector<GroPtr> src_;
  GroPtr tgt_;
};

class GroMod : public NLinearTrans
{
public:
  GroMod(ModPtr m, NLPtr source, NLPtr target)
  : m_(std::move(m)), src_(std::move(source)), tgt_(std::move(target))
  {}
  NLPtr source() const override { return src_; }
  NLPtr target() const override { return tgt_; }
  Val component(std::vector<Val> const &xs) const override;

private:
  ModPtr m_;
  NLPtr src_, tgt_;
};

// Pseudo symmetry int(phi^s) => (int phi)^s, component ((s), 1).
class GroPseudoSigma : public NLinearTrans
{
public:
  GroPseudoSigma(NatPtr phi, Perm s, std::vector<GroPtr> sources, GroPtr target);
  NLPtr source() const override { return src_; }
  NLPtr target() const override { return tgt_; }
  Val component(std::vector<Val> const &xs) const override;

private:
  NatPtr phi_;
  Perm s_;
  GroPtr z_;
  NLPtr src_, tgt_;
};

// Caches one Grothendieck category per additive functor so that composites
// of int-images share source categories.
class GroContext
{
public:
  explicit GroContext(std::vector<Obj> bound)
  : bound_(std::move(bound))
  {}
  GroPtr category(AsmfPtr const &x) const;
  NLPtr nat(NatPtr const &phi) const;
  NLTransPtr mod(ModPtr const &m) const;
  NLTransPtr pseudo(NatPtr const &phi, Perm const &s) const;
  std::vector<Obj> const &bound() const { return bound_; }

private:
  std::vector<Obj> bound_;
  mutable std::mutex mu_;
  mutable std::map<AdditiveSMF const *, GroPtr> cache_;
};

// Second entries of F; F must be an n-linear functor between Grothendieck
// categories satisfying the projection axiom.
NatPtr preimage_nlinear(NLPtr f);
ModPtr preimage_transformation(NLTransPtr w);

// Projection, chosen-lift preservation, and constraint lift axioms.
Report check_opcartesian_nlinear(NLinearFunctor const &f, NLSample const &s);
Report check_opcartesian_trans(NLinearTrans const &t, NLSample const &s);

// Objects of int X for the given D-objects, at most per_fiber per fiber.
std::vector<Val> gro_pool(GrothendieckCategory const &g, std::vector<Obj> const &dobjs,
                          long per_fiber, std::uint64_t seed);

} // namespace bpk

#endif
