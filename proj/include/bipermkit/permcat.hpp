#ifndef BIPERMKIT_PERMCAT_HPP
#define BIPERMKIT_PERMCAT_HPP

#include <memory>
#include <string>
#include <vector>

#include "biperm.hpp"
#include "fincat.hpp"
#include "perm.hpp"
#include "report.hpp"

namespace bpk {

// n-linear functor C_1 x ... x C_n -> D between permutative categories.
// Arity 0 is a chosen object of D.
class NLinearFunctor
{
public:
  virtual ~NLinearFunctor() = default;
  virtual std::vector<PermCatPtr> sources() const = 0;
  virtual PermCatPtr target() const = 0;
  int arity() const { return static_cast<int>(sources().size()); }
  virtual Val obj(std::vector<Val> const &xs) const = 0;
  virtual Val mor(std::vector<Val> const &fs) const = 0;
  // j-th constraint F<x> + F<x with x_j'> -> F<x with x_j + x_j'>, j 0-based
  virtual Val constraint(int j, std::vector<Val> const &xs, Val const &xj2) const = 0;
  virtual bool strong() const { return true; }
};

using NLPtr = std::shared_ptr<const NLinearFunctor>;

class NLinearTrans
{
public:
  virtual ~NLinearTrans() = default;
  virtual NLPtr source() const = 0;
  virtual NLPtr target() const = 0;
  // F<x> -> G<x>
  virtual Val component(std::vector<Val> const &xs) const = 0;
};

using NLTransPtr = std::shared_ptr<const NLinearTrans>;

class IdentityNL : public NLinearFunctor
{
public:
  explicit IdentityNL(PermCatPtr c)
  : c_(std::move(c))
  {}
  std::vector<PermCatPtr> sources() const override { return {c_}; }
  PermCatPtr target() const override { return c_; }
  Val obj(std::vector<Val> const &xs) const override { return xs.at(0); }
  Val mor(std::vector<Val> const &fs) const override { return fs.at(0); }
  Val constraint(int j, std::vector<Val> const &xs, Val const &xj2) const override;

private:
  PermCatPtr c_;
};

class ConstantNL : public NLinearFunctor
{
public:
  ConstantNL(PermCatPtr d, Val x)
  : d_(std::move(d)), x_(std::move(x))
  {}
  std::vector<PermCatPtr> sources() const override { return {}; }
  PermCatPtr target() const override { return d_; }
  Val obj(std::vector<Val> const &) const override { return x_; }
  Val mor(std::vector<Val> const &) const override { return d_->id(x_); }
  Val constraint(int, std::vector<Val> const &, Val const &) const override;

private:
  PermCatPtr d_;
  Val x_;
};

// The multiplication of a tight bipermutative instance, n-fold, with
// constraints the inverse canonical isos. The corrupted variant uses
// identity maps instead.
class TensorNL : public NLinearFunctor
{
public:
  TensorNL(std::shared_ptr<const DCategory> d, int n, bool corrupted = false);
  std::vector<PermCatPtr> sources() const override;
  PermCatPtr target() const override { return d_; }
  Val obj(std::vector<Val> const &xs) const override;
  Val mor(std::vector<Val> const &fs) const override;
  Val constraint(int j, std::vector<Val> const &xs, Val const &xj2) const override;

private:
  std::shared_ptr<const DCategory> d_;
  int n_;
  bool corrupted_;
};

// F^s<x> = F(s<x>)
class SigmaNL : public NLinearFunctor
{
public:
  SigmaNL(NLPtr f, Perm s);
  std::vector<PermCatPtr> sources() const override { return src_; }
  PermCatPtr target() const override { return f_->target(); }
  Val obj(std::vector<Val> const &xs) const override;
  Val mor(std::vector<Val> const &fs) const override;
  Val constraint(int j, std::vector<Val> const &xs, Val const &xj2) const override;
  bool strong() const override { return f_->strong(); }

private:
  NLPtr f_;
  Perm s_;
  std::vector<PermCatPtr> src_;
};

class CompositeNL : public NLinearFunctor
{
public:
  CompositeNL(NLPtr outer, std::vector<NLPtr> inner);
  std::vector<PermCatPtr> sources() const override { return src_; }
  PermCatPtr target() const override { return outer_->target(); }
  Val obj(std::vector<Val> const &xs) const override;
  Val mor(std::vector<Val> const &fs) const override;
  Val constraint(int l, std::vector<Val> const &xs, Val const &xj2) const override;
  bool strong() const override;

private:
  std::vector<Val> inner_values(std::vector<Val> const &xs, bool morphisms) const;
  NLPtr outer_;
  std::vector<NLPtr> inner_;
  std::vector<PermCatPtr> src_;
  std::vector<int> start_;
};

NLPtr gamma_compose(NLPtr f, std::vector<NLPtr> const &inner);
NLPtr sigma_act(NLPtr f, Perm const &s);

class IdentityNLTrans : public NLinearTrans
{
public:
  explicit IdentityNLTrans(NLPtr f)
  : f_(std::move(f))
  {}
  NLPtr source() const override { return f_; }
  NLPtr target() const override { return f_; }
  Val component(std::vector<Val> const &xs) const override;

private:
  NLPtr f_;
};

class VerticalNLTrans : public NLinearTrans
{
public:
  VerticalNLTrans(NLTransPtr second, NLTransPtr first)
  : g_(std::move(second)), f_(std::move(first))
  {}
  NLPtr source() const override { return f_->source(); }
  NLPtr target() const override { return g_->target(); }
  Val component(std::vector<Val> const &xs) const override;

private:
  NLTransPtr g_, f_;
};

// G<theta_j> o theta<F_j x_j>
class GammaNLTrans : public NLinearTrans
{
public:
  GammaNLTrans(NLTransPtr outer, std::vector<NLTransPtr> inner);
  NLPtr source() const override { return src_; }
  NLPtr target() const override { return tgt_; }
  Val component(std::vector<Val> const &xs) const override;

private:
  NLTransPtr outer_;
  std::vector<NLTransPtr> inner_;
  NLPtr src_, tgt_;
};

class SigmaNLTrans : public NLinearTrans
{
public:
  SigmaNLTrans(NLTransPtr t, Perm s);
  NLPtr source() const override { return src_; }
  NLPtr target() const override { return tgt_; }
  Val component(std::vector<Val> const &xs) const override;

private:
  NLTransPtr t_;
  Perm s_;
  NLPtr src_, tgt_;
};

// Multiplicative braiding as a 2-cell mu => mu^(12) for a binary TensorNL.
class BraidingNLTrans : public NLinearTrans
{
public:
  BraidingNLTrans(std::shared_ptr<const DCategory> d, NLPtr mu);
  NLPtr source() const override { return mu_; }
  NLPtr target() const override { return tgt_; }
  Val component(std::vector<Val> const &xs) const override;

private:
  std::shared_ptr<const DCategory> d_;
  NLPtr mu_, tgt_;
};

NLTransPtr gamma(NLTransPtr t, std::vector<NLTransPtr> const &inner);
NLTransPtr sigma_act(NLTransPtr t, Perm const &s);
NLTransPtr vertical(NLTransPtr second, NLTransPtr first);

// Pools of objects for each input slot; morphisms are drawn from hom-sets
// between pool objects.
struct NLSample
{
  std::vector<std::vector<Val>> pools;
  long count = 200;
  std::uint64_t seed = 1;
};

// Same pool for every slot.
NLSample uniform_sample(std::vector<Val> const &pool, int n, long count, std::uint64_t seed);

Report check_nlinear(NLinearFunctor const &f, NLSample const &s);
Report check_nlinear_trans(NLinearTrans const &t, NLSample const &s);

// Structural comparison on sampled inputs, constraints included; "" if equal.
std::string diff_nl(NLinearFunctor const &a, NLinearFunctor const &b, NLSample const &s);
std::string diff_nl_trans(NLinearTrans const &a, NLinearTrans const &b, NLSample const &s);

// A morphism out of x into some pool object (identity if none found).
Val sample_morphism(Category const &c, Val const &x, std::vector<Val> const &pool, Rng &g);

} // namespace bpk

#endif
