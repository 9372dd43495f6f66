#include "bipermkit/suites.hpp"

#include <algorithm>

#include "bipermkit/einfty.hpp"
#include "bipermkit/multicat.hpp"

namespace bpk {

namespace {

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt)
{
  return seed * 0x9e3779b97f4a7c15ULL + salt * 0xbf58476d1ce4e5b9ULL + 0x94d049bb133111ebULL;
}

std::shared_ptr<const VecFunctor> as_vec(AsmfPtr const &x)
{
  auto v = std::dynamic_pointer_cast<const VecFunctor>(x);
  if (!v)
    throw std::invalid_argument("expected a vector-valued additive functor");
  return v;
}

// Appends r's lines under one suite, tagging ids with a label.
void merge(Report &into, Report const &r, std::string const &label)
{
  for (auto l : r.lines) {
    if (!label.empty())
      l.witness = l.witness.empty() ? l.witness : label + ": " + l.witness;
    auto it = std::find_if(into.lines.begin(), into.lines.end(),
                           [&](CheckLine const &x) { return x.id == l.id; });
    if (it == into.lines.end()) {
      into.lines.push_back(l);
      continue;
    }
    if (it->ok() && !l.ok())
      it->witness = l.witness;
    it->instances += l.instances;
    it->failures += l.failures;
  }
}

std::vector<Obj> small_sequences(int len, int max)
{
  return instance_mandellA()->objects(DBound{0, len, max});
}

} // namespace

DBound bound_of(SuiteConfig const &c) { return DBound{c.size, c.len, c.max}; }

// ---- generators

std::vector<AsmfPtr> generated_smfs(BipermPtr d, int count)
{
  // semirings by size; sequences get the two-element ones so that fibres over
  // four-element objects stay at 16 objects
  std::vector<std::string> names;
  bool seq = d->name() == "mandellA";
  if (seq)
    names = {"trunc1", "maxmin1", "mod2"};
  else
    names = {"trunc1", "maxmin1", "mod2", "trunc2", "maxmin2", "mod3", "trunc3", "mod4"};
  bool sorted = d->name() == "natdisc";
  std::vector<AsmfPtr> r;
  r.push_back(std::make_shared<ConstUnitSMF>(d));
  for (int pass = 0; static_cast<int>(r.size()) < count; ++pass) {
    for (auto const &n : names) {
      if (static_cast<int>(r.size()) >= count)
        break;
      Semiring s = Semiring::parse(n);
      bool ordered = pass % 2 == 0 && s.ordered();
      // later passes repeat with the other order flag
      if (pass >= 2 && !s.ordered())
        continue;
      r.push_back(std::make_shared<VecFunctor>(d, s, ordered, sorted));
    }
    if (pass > 4)
      break;
  }
  return r;
}

NatPtr random_product_nat(Rng &g, std::shared_ptr<const VecFunctor> const &x, int arity)
{
  Semiring const &s = x->semiring();
  int c = static_cast<int>(g.below(s.size()));
  if (arity == 0)
    return std::make_shared<ConstantNat>(x, Val::ints({c}));
  return std::make_shared<ProductNat>(std::vector<AsmfPtr>(arity, x), x, c);
}

std::pair<ModPtr, NatPtr> random_scalar_mod(Rng &g, NatPtr const &from)
{
  auto p = std::dynamic_pointer_cast<const ProductNat>(from);
  if (p) {
    auto v = as_vec(p->target());
    if (v->ordered() && v->semiring().ordered()) {
      int hi = p->scalar() + static_cast<int>(g.below(v->semiring().size() - p->scalar()));
      auto q = std::make_shared<const ProductNat>(p->sources(), p->target(), hi);
      return {std::make_shared<ScalarMod>(p, q), q};
    }
  }
  return {std::make_shared<IdentityMod>(from), from};
}

GMapPtr random_product_multimap(Rng &g, std::shared_ptr<const MonoidPowerGamma> const &y,
                                int arity)
{
  int c = static_cast<int>(g.below(y->semiring().size()));
  if (arity == 0)
    return std::make_shared<ConstantMultimap>(y, Val::ints({c}));
  return std::make_shared<ProductMultimap>(std::vector<GammaPtr>(arity, y), y, c);
}

std::pair<GModPtr, GMapPtr> random_scalar_gamma_mod(Rng &g, GMapPtr const &from)
{
  auto p = std::dynamic_pointer_cast<const ProductMultimap>(from);
  if (p) {
    auto y = std::dynamic_pointer_cast<const MonoidPowerGamma>(p->target());
    if (y && y->ordered()) {
      int hi = p->scalar() + static_cast<int>(g.below(y->semiring().size() - p->scalar()));
      auto q = std::make_shared<const ProductMultimap>(p->sources(), p->target(), hi);
      return {std::make_shared<ScalarGammaMod>(p, q), q};
    }
  }
  return {std::make_shared<IdentityGammaMod>(from), from};
}

std::vector<GammaPtr> generated_gammas(int n)
{
  std::vector<GammaPtr> r{terminal_gamma(n), monoidal_unit_gamma(n)};
  for (auto const &s : {"trunc1", "trunc2", "maxmin1", "mod2", "mod3"})
    for (bool ordered : {false, true}) {
      Semiring sr = Semiring::parse(s);
      if (ordered && !sr.ordered())
        continue;
      r.push_back(std::make_shared<MonoidPowerGamma>(sr, n, ordered));
    }
  r.push_back(tabulate_gamma(*std::make_shared<MonoidPowerGamma>(Semiring::parse("trunc1"), n, true)));
  return r;
}

// ---- suites

Report suite_instance(SuiteConfig const &c)
{
  auto b = instance_by_name(c.instance);
  DBound bd = bound_of(c);
  CheckBudget budget;
  budget.seed = c.seed;
  Report r = check_bipermutative(*b, bd, budget);
  r.append(check_laplaza(*b, bd, 3, budget));
  r.suite = "instance " + b->name();
  return r;
}

Report suite_grothendieck(AsmfPtr const &x, std::vector<Obj> const &bound, std::uint64_t seed)
{
  auto d = x->base();
  GroContext ctx(bound);
  auto g = ctx.category(x);
  auto objs = g->objects();
  std::vector<Val> mors;
  {
    // all morphisms out of a deterministic slice of objects, bounded by the
    // morphism-level checks being quadratic
    Rng rg(mix(seed, 5));
    for (long i : choose_indices(static_cast<long>(objs.size()), 24, mix(seed, 6)))
      for (long j : choose_indices(static_cast<long>(objs.size()), 6, mix(seed, 7 + i))) {
        auto h = g->hom(objs[i], objs[j]);
        if (!h.empty())
          mors.push_back(h[rg.below(static_cast<long>(h.size()))]);
      }
  }
  Report r = check_permutative(*g, objs, mors, "gro");
  DBound big{};
  auto dc = std::make_shared<DCategory>(d, big);
  auto p = grothendieck_opfibration(g, dc);
  r.append(check_perm_opfib(p, 60, seed));
  r.suite = "grothendieck";
  return r;
}

Report suite_grothendieck_generated(SuiteConfig const &c, int count)
{
  Report all;
  all.suite = "grothendieck-generated";
  struct Base
  {
    BipermPtr d;
    std::vector<Obj> bound;
  };
  std::vector<Base> bases{{instance_mandellA(), small_sequences(std::min(c.len, 2), 2)},
                          {instance_fset(), instance_fset()->objects(DBound{2, 0, 0})}};
  long k = 0;
  for (auto const &b : bases) {
    auto xs = generated_smfs(b.d, (count + 1) / 2);
    for (auto const &x : xs) {
      Report r = suite_grothendieck(x, b.bound, mix(c.seed, k++));
      merge(all, r, b.d->name() + " #" + std::to_string(k));
    }
    all.add(single_check("gro.generated-count", "number of generated functors",
                         static_cast<long>(xs.size()) >= (count + 1) / 2,
                         b.d->name() + " has " + std::to_string(xs.size())));
  }
  // one line per base for the count; fold
  Report out;
  out.suite = all.suite;
  merge(out, all, "");
  return out;
}

Report suite_gro_multifunctor(SuiteConfig const &c, int cells)
{
  Report rep;
  rep.suite = "int-multifunctor";
  auto dA = instance_mandellA();
  auto dobjs = small_sequences(2, 2);
  auto x = as_vec(generated_smfs(dA, 3)[1]);  // trunc1, ordered
  GroContext ctx(dobjs);
  auto gro = ctx.category(x);
  auto pool = gro_pool(*gro, dobjs, 3, c.seed);
  Rng g(mix(c.seed, 11));

  std::vector<NatPtr> phis;
  for (int i = 0; i < cells; ++i)
    phis.push_back(random_product_nat(g, x, i % (c.arity + 1)));

  // n-linear and opcartesian axioms for each int phi
  for (std::size_t i = 0; i < phis.size(); ++i) {
    auto F = ctx.nat(phis[i]);
    NLSample s = uniform_sample(pool, F->arity(), 120, mix(c.seed, 20 + i));
    merge(rep, check_nlinear(*F, s), "phi#" + std::to_string(i));
    merge(rep, check_opcartesian_nlinear(*F, s), "phi#" + std::to_string(i));
  }

  DSample ds;
  ds.dobjs = dobjs;
  ds.count = 20;
  ds.seed = c.seed;
  auto m = dcat_view(ds);
  auto n = permcat_view(gro_pools(dobjs, 2, c.seed), 20, c.seed);
  PseudoSymmetricData<NatPtr, ModPtr, NLPtr, NLTransPtr> f;
  f.cell = [&ctx](NatPtr const &p) { return ctx.nat(p); };
  f.cell2 = [&ctx](ModPtr const &p) { return ctx.mod(p); };
  f.pseudo = [&ctx](NatPtr const &p, Perm const &s) { return ctx.pseudo(p, s); };
  CellGen<NatPtr> gen = [x](Rng &r, int k) { return random_product_nat(r, x, k); };
  TwoCellGen<NatPtr, ModPtr> gen2 = [](Rng &r, NatPtr const &p) { return random_scalar_mod(r, p); };
  merge(rep, check_pseudo_symmetric_all(m, n, f, phis, gen, 1, c.seed, gen2), "");

  // symmetry obstruction: over sequences int(phi^s) and (int phi)^s differ,
  // over the discrete naturals they agree
  auto mu = std::make_shared<ProductNat>(std::vector<AsmfPtr>{x, x}, x, 1);
  Perm sw({2, 1});
  std::string w = diff_nl(*ctx.nat(sigma_act(mu, sw)), *sigma_act(ctx.nat(mu), sw),
                          uniform_sample(pool, 2, 200, c.seed));
  rep.add(single_check("int.non-symmetry-witness", "x (x) y differs from y (x) x", !w.empty(),
                       "no differing object found"));

  auto dN = instance_natdisc();
  auto nobjs = dN->objects(DBound{3, 0, 0});
  auto xn = as_vec(generated_smfs(dN, 2)[1]);
  GroContext nctx(nobjs);
  auto npool = gro_pool(*nctx.category(xn), nobjs, 4, c.seed);
  std::string strict;
  long inst = 0;
  for (int k = 2; k <= c.arity && strict.empty(); ++k)
    for (int t = 0; t < 3 && strict.empty(); ++t) {
      auto phi = random_product_nat(g, xn, k);
      for (auto const &s : Perm::all(k)) {
        ++inst;
        strict = diff_nl(*nctx.nat(sigma_act(phi, s)), *sigma_act(nctx.nat(phi), s),
                         uniform_sample(npool, k, 60, mix(c.seed, inst)));
        if (!strict.empty()) {
          strict = s.str() + ": " + strict;
          break;
        }
      }
    }
  CheckLine l = single_check("int.strict-symmetry", "x (x) y = y (x) x gives a strict symmetric int",
                             strict.empty(), strict);
  l.instances = inst;
  l.failures = strict.empty() ? 0 : 1;
  rep.add(l);
  return rep;
}

Report suite_roundtrip(SuiteConfig const &c, int count)
{
  Report rep;
  rep.suite = "roundtrip";
  auto dA = instance_mandellA();
  auto dobjs = small_sequences(2, 2);
  auto x = as_vec(generated_smfs(dA, 3)[1]);
  GroContext ctx(dobjs);
  auto pool = gro_pool(*ctx.category(x), dobjs, 3, c.seed);
  DSample ds;
  ds.dobjs = dobjs;
  ds.count = 40;
  ds.seed = c.seed;
  auto nls = [&](int n, std::uint64_t s) { return uniform_sample(pool, n, 60, s); };
  auto arity_of = [&](Rng &g) { return static_cast<int>(g.below(c.arity + 1)); };

  RoundTrip<NatPtr, NLPtr> t1;
  t1.name = "int";
  t1.forward = [&](NatPtr const &p) { return ctx.nat(p); };
  t1.back = [](NLPtr const &f) { return preimage_nlinear(f); };
  t1.diff_source = [&](NatPtr const &a, NatPtr const &b) { return diff_nat(*a, *b, ds); };
  t1.diff_target = [&](NLPtr const &a, NLPtr const &b) {
    return diff_nl(*a, *b, nls(a->arity(), c.seed));
  };
  std::function<NatPtr(Rng &)> gen_phi = [&](Rng &g) {
    return random_product_nat(g, x, arity_of(g));
  };
  // opcartesian functors built as composites of int-images
  std::function<NLPtr(Rng &)> gen_F = [&](Rng &g) -> NLPtr {
    int k = 1 + static_cast<int>(g.below(2));
    std::vector<NLPtr> inner;
    for (int j = 0; j < k; ++j)
      inner.push_back(ctx.nat(random_product_nat(g, x, static_cast<int>(g.below(2)))));
    return gamma_compose(ctx.nat(random_product_nat(g, x, k)), inner);
  };
  merge(rep, multiequivalence_roundtrip(t1, gen_phi, gen_F, count, c.seed), "");

  RoundTrip<ModPtr, NLTransPtr> t2;
  t2.name = "int-2cells";
  t2.forward = [&](ModPtr const &p) { return ctx.mod(p); };
  t2.back = [](NLTransPtr const &w) { return preimage_transformation(w); };
  t2.diff_source = [&](ModPtr const &a, ModPtr const &b) { return diff_mod(*a, *b, ds); };
  std::function<ModPtr(Rng &)> gen_mod = [&](Rng &g) {
    return random_scalar_mod(g, random_product_nat(g, x, 1 + arity_of(g) % c.arity)).first;
  };
  merge(rep, multiequivalence_roundtrip<ModPtr, NLTransPtr>(t2, gen_mod, {}, count, c.seed), "");

  // reconstruction from generated permutative opfibrations
  long k = 0;
  auto dF = instance_fset();
  auto fobjs = dF->objects(DBound{2, 0, 0});
  for (auto const &[d, bound] : std::vector<std::pair<BipermPtr, std::vector<Obj>>>{
           {dA, small_sequences(2, 1)}, {dF, fobjs}}) {
    auto dc = std::make_shared<DCategory>(d, DBound{});
    auto xs = generated_smfs(d, (count + 1) / 2 + 1);
    for (auto const &xi : xs) {
      GroContext rc(bound);
      auto p = grothendieck_opfibration(rc.category(xi), dc);
      std::string label = d->name() + " #" + std::to_string(k++);
      try {
        auto r = reconstruct_from_opfibration(p, d, 60, mix(c.seed, k));
        merge(rep, check_reconstruction(r, p, 60, mix(c.seed, k)), label);
      } catch (StructuralError const &e) {
        rep.add(single_check("recon.refused", "reconstruction refused", false,
                             label + ": " + e.what()));
      }
    }
  }
  return rep;
}

Report suite_A(SuiteConfig const &c)
{
  Report rep;
  rep.suite = "A";
  int N = c.trunc;
  AFunctor A;
  DSample ds;
  ds.dobjs = instance_mandellA()->objects(DBound{0, 2, N});
  ds.count = 150;
  ds.seed = c.seed;
  long k = 0;
  for (auto const &x : generated_gammas(N)) {
    merge(rep, check_gamma(*x, 100, mix(c.seed, k)), x->name());
    merge(rep, check_additive_smf(*A.object(x), ds), x->name());
    ++k;
  }

  auto Y = std::make_shared<MonoidPowerGamma>(Semiring::parse("trunc2"), 16, true);
  GSample gs;
  gs.count = 40;
  gs.seed = c.seed;
  Rng g(mix(c.seed, 3));
  std::vector<GMapPtr> zs;
  for (int i = 0; i < 6; ++i)
    zs.push_back(random_product_multimap(g, Y, 0));
  zs.push_back(gamma(random_product_multimap(g, Y, 2),
                     {random_product_multimap(g, Y, 0), random_product_multimap(g, Y, 0)}));
  merge(rep, check_A_arity0(Y, zs, gs), "");

  DSample dv;
  dv.dobjs = instance_mandellA()->objects(DBound{0, 2, 2});
  dv.count = 30;
  dv.seed = c.seed;
  MulticatSample ms;
  ms.nmax = std::min(c.arity, 2);
  ms.inner_max = 2;
  ms.count = 40;
  ms.seed = c.seed;
  std::function<NatPtr(GMapPtr const &)> cell = [&A](GMapPtr const &f) { return A.multimap(f); };
  CellGen<GMapPtr> gen = [Y](Rng &r, int n) { return random_product_multimap(r, Y, n); };
  merge(rep, check_strict_multifunctor(gammacat_view(gs), dcat_view(dv), cell, gen, ms), "");
  return rep;
}

Report suite_inverse_k(SuiteConfig const &c, bool terminal)
{
  Report rep;
  rep.suite = "inverse-K";
  auto dA = instance_mandellA();
  if (terminal) {
    DBound b{0, c.len, c.max};
    auto P = inverse_K(terminal_gamma(c.max), dA->objects(b));
    merge(rep, check_P_terminal(P, std::make_shared<DCategory>(dA, b)), "");
  }

  auto dobjs = dA->objects(DBound{0, 2, 2});
  InverseK P(dobjs);
  auto Y = std::make_shared<MonoidPowerGamma>(Semiring::parse("trunc2"), 16, true);
  auto PY = P.object(Y);
  auto pool = gro_pool(*PY, dobjs, 3, c.seed);
  Rng g(mix(c.seed, 17));

  // P_s is the identity exactly for s = id
  struct Job
  {
    GMapPtr f;
    Perm s;
  };
  std::vector<Job> jobs_;
  for (int n = 1; n <= c.arity; ++n) {
    auto f = random_product_multimap(g, Y, n);
    for (auto const &s : Perm::all(n))
      jobs_.push_back({f, s});
  }
  auto draw = [&](Rng &r, int n) {
    std::vector<Val> xs;
    for (int j = 0; j < n; ++j)
      xs.push_back(pool[r.below(static_cast<long>(pool.size()))]);
    return xs;
  };
  rep.add(run_check("P.pseudo-identity", "P_s is the identity exactly when s is",
                    static_cast<long>(jobs_.size()), [&](long i) {
                      auto const &j = jobs_[i];
                      auto w = P.pseudo(j.f, j.s);
                      Rng r(mix(c.seed, 100 + i));
                      bool all_id = true;
                      for (int t = 0; t < 60; ++t) {
                        auto xs = draw(r, j.s.size());
                        Val comp = w->component(xs);
                        if (!(comp == PY->id(PY->dom(comp))))
                          all_id = false;
                      }
                      if (j.s.is_identity() && !all_id)
                        return std::string("identity permutation gives a non-identity component");
                      if (!j.s.is_identity() && all_id)
                        return j.s.str() + " gives identities on every sample";
                      return std::string();
                    }));

  rep.add(run_check("P.pseudo-direct", "composite pseudo symmetry against the direct formula",
                    static_cast<long>(jobs_.size()), [&](long i) {
                      auto const &j = jobs_[i];
                      auto comp = vertical(P.pseudo(j.f, j.s),
                                           P.gro().mod(std::make_shared<IdentityMod>(
                                               P.A().multimap(sigma_act(j.f, j.s)))));
                      Rng r(mix(c.seed, 300 + i));
                      for (int t = 0; t < 60; ++t) {
                        auto xs = draw(r, j.s.size());
                        Val a = comp->component(xs), b = P_pseudo_sigma(*j.f, j.s, xs);
                        if (!(a == b))
                          return j.s.str() + ": " + a.str() + " vs " + b.str();
                      }
                      return std::string();
                    }));

  // P as a pseudo symmetric multifunctor on samples
  GSample gs;
  gs.count = 30;
  gs.seed = c.seed;
  PseudoSymmetricData<GMapPtr, GModPtr, NLPtr, NLTransPtr> f;
  f.cell = [&P](GMapPtr const &x) { return P.multimap(x); };
  f.cell2 = [&P](GModPtr const &x) { return P.modification(x); };
  f.pseudo = [&P](GMapPtr const &x, Perm const &s) { return P.pseudo(x, s); };
  MulticatSample ms;
  ms.nmax = std::min(c.arity, 2);
  ms.inner_max = 1;
  ms.count = 20;
  ms.seed = c.seed;
  CellGen<GMapPtr> gen = [Y](Rng &r, int n) { return random_product_multimap(r, Y, n); };
  TwoCellGen<GMapPtr, GModPtr> gen2 = [](Rng &r, GMapPtr const &p) {
    return random_scalar_gamma_mod(r, p);
  };
  merge(rep,
        check_pseudo_symmetric(gammacat_view(gs), permcat_view(gro_pools(dobjs, 2, c.seed), 20, c.seed),
                               f, gen, ms, gen2),
        "");
  return rep;
}

Report suite_einfty(SuiteConfig const &c)
{
  Report rep;
  rep.suite = "einfty";
  for (auto const &name : {"finsk", "fset", "fskel", "mandellA", "natdisc"}) {
    auto b = instance_by_name(name);
    auto dc = std::make_shared<DCategory>(b, DBound{2, 1, 2});
    auto pool = dc->objects();
    auto v = permcat_view([pool](PermCatPtr const &) { return pool; }, 30, c.seed);
    merge(rep, check_einfty(v, bipermutative_einfty(dc), std::min(c.arity, 3)), name);
  }

  auto Y = std::make_shared<MonoidPowerGamma>(Semiring::parse("trunc2"), 16, true);
  GSample gs;
  gs.count = 40;
  gs.seed = c.seed;
  auto ge = monoid_power_einfty(Y);
  merge(rep, check_einfty(gammacat_view(gs), ge, std::min(c.arity, 3)), "Gamma");

  GammaEInftyMap G(ge, gs);
  merge(rep, check_pseudo_einfty(gammacat_view(gs), G.data(), 2, 2, c.seed), "Gamma");

  auto dobjs = instance_mandellA()->objects(DBound{0, 2, 2});
  InverseK P(dobjs);
  PseudoSymmetricData<GMapPtr, GModPtr, NLPtr, NLTransPtr> pd;
  pd.cell = [&P](GMapPtr const &f) { return P.multimap(f); };
  pd.cell2 = [&P](GModPtr const &f) { return P.modification(f); };
  pd.pseudo = [&P](GMapPtr const &f, Perm const &s) { return P.pseudo(f, s); };
  auto pv = permcat_view(gro_pools(dobjs, 2, c.seed), 30, c.seed);
  auto PG = compose_pseudo_symmetric(pd, G.data(), pv);
  merge(rep, check_pseudo_einfty(pv, PG, 2, 2, c.seed), "P-image");
  return rep;
}

} // namespace bpk
