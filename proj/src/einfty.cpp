#include "bipermkit/einfty.hpp"

#include "bipermkit/gro.hpp"

namespace bpk {

MulticatView<Perm, BECell2> be_view()
{
  MulticatView<Perm, BECell2> v;
  v.name = "BE";
  v.arity = [](Perm const &c) { return c.size(); };
  v.out_unit = [](Perm const &) { return Perm::identity(1); };
  v.in_unit = [](Perm const &, int) { return Perm::identity(1); };
  v.gamma = [](Perm const &c, std::vector<Perm> const &ds) { return be_gamma(c, ds); };
  v.act = [](Perm const &c, Perm const &s) { return c * s; };
  v.diff = [](Perm const &a, Perm const &b) {
    return a == b ? std::string() : a.str() + " vs " + b.str();
  };
  v.id2 = [](Perm const &c) { return BECell2{c, c}; };
  v.vcomp = [](BECell2 const &g, BECell2 const &f) {
    if (g.first != f.second)
      throw StructuralError("vertical composite of non-composable 2-cells");
    return BECell2{f.first, g.second};
  };
  v.gamma2 = [](BECell2 const &c, std::vector<BECell2> const &ds) {
    std::vector<Perm> a, b;
    for (auto const &d : ds) {
      a.push_back(d.first);
      b.push_back(d.second);
    }
    return BECell2{be_gamma(c.first, a), be_gamma(c.second, b)};
  };
  v.act2 = [](BECell2 const &c, Perm const &s) { return BECell2{c.first * s, c.second * s}; };
  v.diff2 = [](BECell2 const &a, BECell2 const &b) {
    return a == b ? std::string()
                  : "(" + a.first.str() + "," + a.second.str() + ") vs (" + b.first.str() +
                        "," + b.second.str() + ")";
  };
  v.src2 = [](BECell2 const &a) { return a.first; };
  v.tgt2 = [](BECell2 const &a) { return a.second; };
  return v;
}

MulticatView<NatPtr, ModPtr> dcat_view(DSample s)
{
  MulticatView<NatPtr, ModPtr> v;
  v.name = "D-Cat";
  v.arity = [](NatPtr const &c) { return c->arity(); };
  v.out_unit = [](NatPtr const &c) -> NatPtr { return std::make_shared<IdentityNat>(c->target()); };
  v.in_unit = [](NatPtr const &c, int j) -> NatPtr {
    return std::make_shared<IdentityNat>(c->sources().at(j));
  };
  v.gamma = [](NatPtr const &c, std::vector<NatPtr> const &ds) { return gamma(c, ds); };
  v.act = [](NatPtr const &c, Perm const &p) { return sigma_act(c, p); };
  v.diff = [s](NatPtr const &a, NatPtr const &b) { return diff_nat(*a, *b, s); };
  v.id2 = [](NatPtr const &c) -> ModPtr { return std::make_shared<IdentityMod>(c); };
  v.vcomp = [](ModPtr const &g, ModPtr const &f) -> ModPtr {
    return std::make_shared<VerticalMod>(g, f);
  };
  v.gamma2 = [](ModPtr const &c, std::vector<ModPtr> const &ds) { return gamma(c, ds); };
  v.act2 = [](ModPtr const &c, Perm const &p) { return sigma_act(c, p); };
  v.diff2 = [s](ModPtr const &a, ModPtr const &b) { return diff_mod(*a, *b, s); };
  v.src2 = [](ModPtr const &a) { return a->source(); };
  v.tgt2 = [](ModPtr const &a) { return a->target(); };
  return v;
}

MulticatView<NLPtr, NLTransPtr> permcat_view(PoolFn pool, long count, std::uint64_t seed)
{
  auto sample = [pool, count, seed](std::vector<PermCatPtr> const &srcs) {
    NLSample s;
    s.count = count;
    s.seed = seed;
    for (auto const &c : srcs)
      s.pools.push_back(pool(c));
    return s;
  };
  MulticatView<NLPtr, NLTransPtr> v;
  v.name = "PermCat";
  v.arity = [](NLPtr const &c) { return c->arity(); };
  v.out_unit = [](NLPtr const &c) -> NLPtr { return std::make_shared<IdentityNL>(c->target()); };
  v.in_unit = [](NLPtr const &c, int j) -> NLPtr {
    return std::make_shared<IdentityNL>(c->sources().at(j));
  };
  v.gamma = [](NLPtr const &c, std::vector<NLPtr> const &ds) { return gamma_compose(c, ds); };
  v.act = [](NLPtr const &c, Perm const &p) { return sigma_act(c, p); };
  v.diff = [sample](NLPtr const &a, NLPtr const &b) {
    return diff_nl(*a, *b, sample(a->sources()));
  };
  v.id2 = [](NLPtr const &c) -> NLTransPtr { return std::make_shared<IdentityNLTrans>(c); };
  v.vcomp = [](NLTransPtr const &g, NLTransPtr const &f) { return vertical(g, f); };
  v.gamma2 = [](NLTransPtr const &c, std::vector<NLTransPtr> const &ds) { return gamma(c, ds); };
  v.act2 = [](NLTransPtr const &c, Perm const &p) { return sigma_act(c, p); };
  v.diff2 = [sample](NLTransPtr const &a, NLTransPtr const &b) {
    return diff_nl_trans(*a, *b, sample(a->source()->sources()));
  };
  v.src2 = [](NLTransPtr const &a) { return a->source(); };
  v.tgt2 = [](NLTransPtr const &a) { return a->target(); };
  return v;
}

MulticatView<GMapPtr, GModPtr> gammacat_view(GSample s)
{
  MulticatView<GMapPtr, GModPtr> v;
  v.name = "Gamma-Cat";
  v.arity = [](GMapPtr const &c) { return c->arity(); };
  v.out_unit = [](GMapPtr const &c) -> GMapPtr {
    return std::make_shared<IdentityMultimap>(c->target());
  };
  v.in_unit = [](GMapPtr const &c, int j) -> GMapPtr {
    return std::make_shared<IdentityMultimap>(c->sources().at(j));
  };
  v.gamma = [](GMapPtr const &c, std::vector<GMapPtr> const &ds) { return gamma(c, ds); };
  v.act = [](GMapPtr const &c, Perm const &p) { return sigma_act(c, p); };
  v.diff = [s](GMapPtr const &a, GMapPtr const &b) { return diff_gmap(*a, *b, s); };
  v.id2 = [](GMapPtr const &c) -> GModPtr { return std::make_shared<IdentityGammaMod>(c); };
  v.vcomp = [](GModPtr const &g, GModPtr const &f) { return vertical(g, f); };
  v.gamma2 = [](GModPtr const &c, std::vector<GModPtr> const &ds) { return gamma(c, ds); };
  v.act2 = [](GModPtr const &c, Perm const &p) { return sigma_act(c, p); };
  v.diff2 = [s](GModPtr const &a, GModPtr const &b) { return diff_gmod(*a, *b, s); };
  v.src2 = [](GModPtr const &a) { return a->source(); };
  v.tgt2 = [](GModPtr const &a) { return a->target(); };
  return v;
}

EInfinity<NLPtr, NLTransPtr> bipermutative_einfty(std::shared_ptr<const DCategory> d)
{
  EInfinity<NLPtr, NLTransPtr> e;
  e.unit = std::make_shared<ConstantNL>(d, obj_val(d->base()->one()));
  e.mu = std::make_shared<TensorNL>(d, 2);
  e.xi = std::make_shared<BraidingNLTrans>(d, e.mu);
  return e;
}

EInfinity<GMapPtr, GModPtr> monoid_power_einfty(std::shared_ptr<const MonoidPowerGamma> y)
{
  EInfinity<GMapPtr, GModPtr> e;
  e.unit = std::make_shared<ConstantMultimap>(y, Val::ints({y->semiring().one()}));
  e.mu = std::make_shared<ProductMultimap>(std::vector<GammaPtr>{y, y}, y, y->semiring().one());
  e.xi = std::make_shared<CoherenceGammaMod>(e.mu, sigma_act(e.mu, Perm({2, 1})));
  return e;
}

Val CoherenceGammaMod::component(std::vector<int> const &ms, std::vector<Val> const &xs) const
{
  Val x = src_->obj(ms, xs), y = tgt_->obj(ms, xs);
  if (!(x == y))
    throw StructuralError("coherence 2-cell between multimaps that differ at " + x.str() +
                          " and " + y.str());
  return src_->target()->category(product_of(ms))->id(x);
}

GammaEInftyMap::GammaEInftyMap(EInfinity<GMapPtr, GModPtr> e, GSample s)
: e_(std::move(e)), v_(gammacat_view(s))
{}

GMapPtr GammaEInftyMap::cell(Perm const &s) const
{
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(s);
    if (it != cache_.end())
      return it->second;
  }
  GMapPtr r = sigma_act(einfty_power(v_, e_, s.size()), s);
  std::lock_guard<std::mutex> lock(mu_);
  return cache_.emplace(s, r).first->second;
}

GModPtr GammaEInftyMap::cell2(BECell2 const &a) const
{
  return std::make_shared<CoherenceGammaMod>(cell(a.first), cell(a.second));
}

PseudoSymmetricData<Perm, BECell2, GMapPtr, GModPtr> GammaEInftyMap::data() const
{
  PseudoSymmetricData<Perm, BECell2, GMapPtr, GModPtr> d;
  d.cell = [this](Perm const &s) { return cell(s); };
  d.cell2 = [this](BECell2 const &a) { return cell2(a); };
  d.pseudo = [this](Perm const &c, Perm const &s) -> GModPtr {
    return std::make_shared<IdentityGammaMod>(sigma_act(cell(c), s));
  };
  return d;
}

PoolFn gro_pools(std::vector<Obj> const &dobjs, long per_fiber, std::uint64_t seed)
{
  auto cache = std::make_shared<std::map<PermutativeCategory const *, std::pair<PermCatPtr, std::vector<Val>>>>();
  auto mu = std::make_shared<std::mutex>();
  return [=](PermCatPtr const &c) {
    std::lock_guard<std::mutex> lock(*mu);
    auto it = cache->find(c.get());
    if (it != cache->end())
      return it->second.second;
    auto g = std::dynamic_pointer_cast<const GrothendieckCategory>(c);
    if (!g)
      throw StructuralError("object pool requested for a category that is not a Grothendieck construction");
    auto pool = gro_pool(*g, dobjs, per_fiber, seed);
    return cache->emplace(c.get(), std::make_pair(c, pool)).first->second.second;
  };
}

} // namespace bpk
