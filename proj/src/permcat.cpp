#include "bipermkit/permcat.hpp"

#include "bipermkit/dcat.hpp"

#include <stdexcept>

namespace bpk {

namespace {

std::vector<Val> with(std::vector<Val> xs, int j, Val v)
{
  xs[j] = std::move(v);
  return xs;
}

std::string tuple_str(std::vector<Val> const &xs)
{
  std::string s = "<";
  for (std::size_t i = 0; i < xs.size(); ++i)
    s += (i ? " " : "") + xs[i].str();
  return s + ">";
}

std::string neq(std::string const &what, Val const &l, Val const &r)
{
  return l == r ? std::string() : what + ": " + l.str() + " != " + r.str();
}

std::string first_of(std::initializer_list<std::string> xs)
{
  for (auto const &x : xs)
    if (!x.empty())
      return x;
  return "";
}

std::uint64_t mix(std::uint64_t seed, long i)
{
  return seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(i) * 0xd1b54a32d192ed03ULL +
         7;
}

} // namespace

Val IdentityNL::constraint(int, std::vector<Val> const &xs, Val const &xj2) const
{
  return c_->id(c_->tensor(xs.at(0), xj2));
}

Val ConstantNL::constraint(int, std::vector<Val> const &, Val const &) const
{
  throw StructuralError("a 0-linear functor has no constraints");
}

// ---- tensor

TensorNL::TensorNL(std::shared_ptr<const DCategory> d, int n, bool corrupted)
: d_(std::move(d)), n_(n), corrupted_(corrupted)
{}

std::vector<PermCatPtr> TensorNL::sources() const
{
  return std::vector<PermCatPtr>(n_, d_);
}

Val TensorNL::obj(std::vector<Val> const &xs) const
{
  std::vector<Obj> as;
  for (auto const &x : xs)
    as.push_back(val_obj(x));
  return obj_val(d_->base()->times_all(as));
}

Val TensorNL::mor(std::vector<Val> const &fs) const
{
  std::vector<Mor> ms;
  for (auto const &f : fs)
    ms.push_back(val_mor(f));
  if (ms.empty())
    return d_->id(obj_val(d_->base()->one()));
  return mor_val(d_->base()->times_all(ms));
}

Val TensorNL::constraint(int j, std::vector<Val> const &xs, Val const &xj2) const
{
  auto const &b = *d_->base();
  std::vector<Obj> as;
  for (auto const &x : xs)
    as.push_back(val_obj(x));
  Mor l = b.laplaza(as, j, val_obj(xj2));
  if (!corrupted_)
    return mor_val(b.inverse(l));
  Mor m{l.cod, l.dom, {}};
  for (int k = 1; k <= b.card(l.cod); ++k)
    m.map.push_back(k);
  return mor_val(m);
}

// ---- sigma

SigmaNL::SigmaNL(NLPtr f, Perm s)
: f_(std::move(f)), s_(std::move(s))
{
  if (s_.size() != f_->arity())
    throw std::invalid_argument("sigma action: arity mismatch");
  auto src = f_->sources();
  for (int j = 1; j <= s_.size(); ++j)
    src_.push_back(src[s_(j) - 1]);
}

Val SigmaNL::obj(std::vector<Val> const &xs) const { return f_->obj(permute_tuple(s_, xs)); }
Val SigmaNL::mor(std::vector<Val> const &fs) const { return f_->mor(permute_tuple(s_, fs)); }

Val SigmaNL::constraint(int j, std::vector<Val> const &xs, Val const &xj2) const
{
  return f_->constraint(s_(j + 1) - 1, permute_tuple(s_, xs), xj2);
}

NLPtr sigma_act(NLPtr f, Perm const &s) { return std::make_shared<SigmaNL>(std::move(f), s); }

// ---- composite

CompositeNL::CompositeNL(NLPtr outer, std::vector<NLPtr> inner)
: outer_(std::move(outer)), inner_(std::move(inner))
{
  if (static_cast<int>(inner_.size()) != outer_->arity())
    throw std::invalid_argument("gamma: profile mismatch");
  int pos = 0;
  for (std::size_t j = 0; j < inner_.size(); ++j) {
    start_.push_back(pos);
    for (auto const &c : inner_[j]->sources())
      src_.push_back(c);
    pos += inner_[j]->arity();
  }
  start_.push_back(pos);
}

std::vector<Val> CompositeNL::inner_values(std::vector<Val> const &xs, bool morphisms) const
{
  if (static_cast<int>(xs.size()) != start_.back())
    throw std::invalid_argument("composite: arity mismatch");
  std::vector<Val> ys;
  for (std::size_t j = 0; j < inner_.size(); ++j) {
    std::vector<Val> blk(xs.begin() + start_[j], xs.begin() + start_[j + 1]);
    ys.push_back(morphisms ? inner_[j]->mor(blk) : inner_[j]->obj(blk));
  }
  return ys;
}

Val CompositeNL::obj(std::vector<Val> const &xs) const { return outer_->obj(inner_values(xs, false)); }
Val CompositeNL::mor(std::vector<Val> const &fs) const { return outer_->mor(inner_values(fs, true)); }

Val CompositeNL::constraint(int l, std::vector<Val> const &xs, Val const &xj2) const
{
  std::size_t j = 0;
  while (start_[j + 1] <= l)
    ++j;
  int i = l - start_[j];
  std::vector<Val> blk(xs.begin() + start_[j], xs.begin() + start_[j + 1]);
  auto ys = inner_values(xs, false);
  Val yj2 = inner_[j]->obj(with(blk, i, xj2));
  Val first = outer_->constraint(static_cast<int>(j), ys, yj2);
  std::vector<Val> ms;
  auto os = outer_->sources();
  for (std::size_t k = 0; k < ys.size(); ++k)
    ms.push_back(os[k]->id(ys[k]));
  ms[j] = inner_[j]->constraint(i, blk, xj2);
  return outer_->target()->compose(outer_->mor(ms), first);
}

bool CompositeNL::strong() const
{
  if (!outer_->strong())
    return false;
  for (auto const &f : inner_)
    if (!f->strong())
      return false;
  return true;
}

NLPtr gamma_compose(NLPtr f, std::vector<NLPtr> const &inner)
{
  return std::make_shared<CompositeNL>(std::move(f), inner);
}

// ---- transformations

Val IdentityNLTrans::component(std::vector<Val> const &xs) const
{
  return f_->target()->id(f_->obj(xs));
}

Val VerticalNLTrans::component(std::vector<Val> const &xs) const
{
  return f_->source()->target()->compose(g_->component(xs), f_->component(xs));
}

GammaNLTrans::GammaNLTrans(NLTransPtr outer, std::vector<NLTransPtr> inner)
: outer_(std::move(outer)), inner_(std::move(inner))
{
  std::vector<NLPtr> lo, hi;
  for (auto const &t : inner_) {
    lo.push_back(t->source());
    hi.push_back(t->target());
  }
  src_ = gamma_compose(outer_->source(), lo);
  tgt_ = gamma_compose(outer_->target(), hi);
}

Val GammaNLTrans::component(std::vector<Val> const &xs) const
{
  std::vector<Val> lo, comps;
  std::size_t pos = 0;
  for (auto const &t : inner_) {
    std::size_t k = static_cast<std::size_t>(t->source()->arity());
    std::vector<Val> blk(xs.begin() + pos, xs.begin() + pos + k);
    lo.push_back(t->source()->obj(blk));
    comps.push_back(t->component(blk));
    pos += k;
  }
  Val first = outer_->component(lo);
  Val second = outer_->target()->mor(comps);
  return src_->target()->compose(second, first);
}

SigmaNLTrans::SigmaNLTrans(NLTransPtr t, Perm s)
: t_(std::move(t)), s_(std::move(s))
{
  src_ = sigma_act(t_->source(), s_);
  tgt_ = sigma_act(t_->target(), s_);
}

Val SigmaNLTrans::component(std::vector<Val> const &xs) const
{
  return t_->component(permute_tuple(s_, xs));
}

BraidingNLTrans::BraidingNLTrans(std::shared_ptr<const DCategory> d, NLPtr mu)
: d_(std::move(d)), mu_(std::move(mu))
{
  if (mu_->arity() != 2)
    throw std::invalid_argument("braiding needs a binary functor");
  tgt_ = sigma_act(mu_, Perm({2, 1}));
}

Val BraidingNLTrans::component(std::vector<Val> const &xs) const
{
  return mor_val(d_->base()->beta_times(val_obj(xs.at(0)), val_obj(xs.at(1))));
}

NLTransPtr gamma(NLTransPtr t, std::vector<NLTransPtr> const &inner)
{
  return std::make_shared<GammaNLTrans>(std::move(t), inner);
}

NLTransPtr sigma_act(NLTransPtr t, Perm const &s)
{
  return std::make_shared<SigmaNLTrans>(std::move(t), s);
}

NLTransPtr vertical(NLTransPtr second, NLTransPtr first)
{
  return std::make_shared<VerticalNLTrans>(std::move(second), std::move(first));
}

// ---- sampling

NLSample uniform_sample(std::vector<Val> const &pool, int n, long count, std::uint64_t seed)
{
  NLSample s;
  s.pools.assign(static_cast<std::size_t>(n), pool);
  s.count = count;
  s.seed = seed;
  return s;
}

Val sample_morphism(Category const &c, Val const &x, std::vector<Val> const &pool, Rng &g)
{
  for (int tries = 0; tries < 4; ++tries) {
    Val y = pool[g.below(static_cast<long>(pool.size()))];
    auto h = c.hom(x, y);
    if (!h.empty())
      return h[g.below(static_cast<long>(h.size()))];
  }
  return c.id(x);
}

namespace {

struct Draw
{
  NLSample const &s;
  std::vector<PermCatPtr> src;
  Rng g;

  Val object(int j) { return s.pools[j][g.below(static_cast<long>(s.pools[j].size()))]; }
  std::vector<Val> objects()
  {
    std::vector<Val> xs;
    for (std::size_t j = 0; j < src.size(); ++j)
      xs.push_back(object(static_cast<int>(j)));
    return xs;
  }
  Val morphism(int j, Val const &x) { return sample_morphism(*src[j], x, s.pools[j], g); }
  std::vector<Val> morphisms(std::vector<Val> const &xs)
  {
    std::vector<Val> fs;
    for (std::size_t j = 0; j < src.size(); ++j)
      fs.push_back(morphism(static_cast<int>(j), xs[j]));
    return fs;
  }
  int slot() { return static_cast<int>(g.below(static_cast<long>(src.size()))); }
};

void check_pools(NLSample const &s, int n)
{
  if (static_cast<int>(s.pools.size()) != n)
    throw std::invalid_argument("sample pools do not match the arity");
  for (auto const &p : s.pools)
    if (p.empty())
      throw std::invalid_argument("empty object pool");
}

} // namespace

Report check_nlinear(NLinearFunctor const &f, NLSample const &s)
{
  Report rep;
  rep.suite = "nlinear";
  auto src = f.sources();
  auto d = f.target();
  int n = f.arity();
  if (n == 0) {
    rep.add(single_check("nlinear.arity0", "a 0-linear functor is a choice of an object",
                         d->has_object(f.obj({})), f.obj({}).str()));
    return rep;
  }
  check_pools(s, n);
  auto draw = [&](long i) { return Draw{s, src, Rng(mix(s.seed, i))}; };
  Val e = d->unit();

  rep.add(run_check("nlinear.functor", "the underlying functor", s.count, [&](long i) {
    auto r = draw(i);
    auto xs = r.objects();
    auto fs = r.morphisms(xs);
    std::vector<Val> ys, gfs, ids;
    for (int j = 0; j < n; ++j)
      ys.push_back(src[j]->cod(fs[j]));
    auto gs = r.morphisms(ys);
    for (int j = 0; j < n; ++j) {
      gfs.push_back(src[j]->compose(gs[j], fs[j]));
      ids.push_back(src[j]->id(xs[j]));
    }
    Val m = f.mor(fs);
    std::string w = tuple_str(xs);
    return first_of({neq(w + " identity", f.mor(ids), d->id(f.obj(xs))),
                     neq(w + " domain", d->dom(m), f.obj(xs)),
                     neq(w + " codomain", d->cod(m), f.obj(ys)),
                     neq(w + " composite", f.mor(gfs), d->compose(f.mor(gs), m))});
  }));
  rep.add(run_check("nlinear.unity", "unity of an n-linear functor", s.count, [&](long i) {
    auto r = draw(i);
    auto xs = r.objects();
    int j = r.slot();
    xs[j] = src[j]->unit();
    auto fs = r.morphisms(xs);
    fs[j] = src[j]->id(xs[j]);
    return first_of({neq(tuple_str(xs), f.obj(xs), e),
                     neq(tuple_str(xs) + " morphisms", f.mor(fs), d->id(e))});
  }));
  rep.add(run_check("nlinear.constraint-unity", "constraint unity", s.count, [&](long i) {
    auto r = draw(i);
    auto xs = r.objects();
    int j = r.slot();
    Val x2 = r.object(j);
    Val c1 = f.constraint(j, xs, src[j]->unit());
    auto ys = with(xs, j, src[j]->unit());
    Val c2 = f.constraint(j, ys, x2);
    std::string w = "slot " + std::to_string(j + 1) + " " + tuple_str(xs);
    return first_of({neq(w + " right", c1, d->id(f.obj(xs))),
                     neq(w + " left", c2, d->id(f.obj(with(xs, j, x2))))});
  }));
  rep.add(run_check("nlinear.constraint-naturality", "naturality of the constraints", s.count,
                    [&](long i) {
                      auto r = draw(i);
                      auto xs = r.objects();
                      int j = r.slot();
                      Val x2 = r.object(j);
                      auto fs = r.morphisms(xs);
                      Val f2 = r.morphism(j, x2);
                      std::vector<Val> ys;
                      for (int k = 0; k < n; ++k)
                        ys.push_back(src[k]->cod(fs[k]));
                      Val y2 = src[j]->cod(f2);
                      Val lhs = d->compose(f.mor(with(fs, j, src[j]->tensor_mor(fs[j], f2))),
                                           f.constraint(j, xs, x2));
                      Val rhs = d->compose(f.constraint(j, ys, y2),
                                           d->tensor_mor(f.mor(fs), f.mor(with(fs, j, f2))));
                      return neq("slot " + std::to_string(j + 1) + " " + tuple_str(xs), lhs, rhs);
                    }));
  rep.add(run_check("nlinear.constraint-associativity", "constraint associativity", s.count,
                    [&](long i) {
                      auto r = draw(i);
                      auto xs = r.objects();
                      int j = r.slot();
                      Val x2 = r.object(j), x3 = r.object(j);
                      auto C = src[j];
                      Val fx = f.obj(xs), f3 = f.obj(with(xs, j, x3));
                      Val lhs = d->compose(
                          f.constraint(j, xs, C->tensor(x2, x3)),
                          d->tensor_mor(d->id(fx), f.constraint(j, with(xs, j, x2), x3)));
                      Val rhs = d->compose(
                          f.constraint(j, with(xs, j, C->tensor(xs[j], x2)), x3),
                          d->tensor_mor(f.constraint(j, xs, x2), d->id(f3)));
                      return neq("slot " + std::to_string(j + 1) + " " + tuple_str(xs) + " " +
                                     x2.str() + " " + x3.str(),
                                 lhs, rhs);
                    }));
  rep.add(run_check("nlinear.constraint-symmetry", "constraint symmetry", s.count, [&](long i) {
    auto r = draw(i);
    auto xs = r.objects();
    int j = r.slot();
    Val x2 = r.object(j);
    auto C = src[j];
    auto ys = with(xs, j, x2);
    std::vector<Val> ids;
    for (int k = 0; k < n; ++k)
      ids.push_back(src[k]->id(xs[k]));
    Val lhs = d->compose(f.mor(with(ids, j, C->braid(xs[j], x2))), f.constraint(j, xs, x2));
    Val rhs = d->compose(f.constraint(j, ys, xs[j]), d->braid(f.obj(xs), f.obj(ys)));
    return neq("slot " + std::to_string(j + 1) + " " + tuple_str(xs) + " " + x2.str(), lhs, rhs);
  }));
  if (n >= 2)
    rep.add(run_check("nlinear.constraint-2by2", "constraint 2-by-2", s.count, [&](long i) {
      auto r = draw(i);
      auto xs = r.objects();
      int j = r.slot(), k = r.slot();
      while (k == j)
        k = r.slot();
      if (k < j)
        std::swap(j, k);
      Val xj2 = r.object(j), xk2 = r.object(k);
      auto Cj = src[j], Ck = src[k];
      auto at = [&](Val const &a, Val const &b) { return with(with(xs, j, a), k, b); };
      Val xj = xs[j], xk = xs[k];
      Val sj = Cj->tensor(xj, xj2), sk = Ck->tensor(xk, xk2);
      Val X00 = f.obj(at(xj, xk)), X10 = f.obj(at(xj2, xk)), X01 = f.obj(at(xj, xk2)),
          X11 = f.obj(at(xj2, xk2));
      Val lhs = d->compose(f.constraint(k, at(sj, xk), xk2),
                           d->tensor_mor(f.constraint(j, at(xj, xk), xj2),
                                         f.constraint(j, at(xj, xk2), xj2)));
      Val mid = d->tensor_mor(d->tensor_mor(d->id(X00), d->braid(X10, X01)), d->id(X11));
      Val rhs = d->compose(f.constraint(j, at(xj, sk), xj2),
                           d->compose(d->tensor_mor(f.constraint(k, at(xj, xk), xk2),
                                                    f.constraint(k, at(xj2, xk), xk2)),
                                      mid));
      return neq("slots " + std::to_string(j + 1) + "," + std::to_string(k + 1) + " " +
                     tuple_str(xs),
                 lhs, rhs);
    }));
  if (f.strong())
    rep.add(run_check("nlinear.strong", "constraints are invertible", s.count, [&](long i) {
      auto r = draw(i);
      auto xs = r.objects();
      int j = r.slot();
      Val x2 = r.object(j);
      return d->is_iso(f.constraint(j, xs, x2))
                 ? std::string()
                 : "slot " + std::to_string(j + 1) + " " + tuple_str(xs) + " " + x2.str();
    }));
  return rep;
}

Report check_nlinear_trans(NLinearTrans const &t, NLSample const &s)
{
  Report rep;
  rep.suite = "nlinear-trans";
  auto F = t.source(), G = t.target();
  auto src = F->sources();
  auto d = F->target();
  int n = F->arity();
  if (n == 0) {
    Val c = t.component({});
    rep.add(single_check("ntrans.typing", "components have the right type",
                         d->dom(c) == F->obj({}) && d->cod(c) == G->obj({}), c.str()));
    return rep;
  }
  check_pools(s, n);
  auto draw = [&](long i) { return Draw{s, src, Rng(mix(s.seed, i))}; };
  rep.add(run_check("ntrans.naturality", "naturality", s.count, [&](long i) {
    auto r = draw(i);
    auto xs = r.objects();
    auto fs = r.morphisms(xs);
    std::vector<Val> ys;
    for (int j = 0; j < n; ++j)
      ys.push_back(src[j]->cod(fs[j]));
    Val c = t.component(xs);
    return first_of({neq(tuple_str(xs) + " source", d->dom(c), F->obj(xs)),
                     neq(tuple_str(xs) + " target", d->cod(c), G->obj(xs)),
                     neq(tuple_str(xs), d->compose(G->mor(fs), c),
                         d->compose(t.component(ys), F->mor(fs)))});
  }));
  rep.add(run_check("ntrans.unity", "unity of an n-linear transformation", s.count,
                    [&](long i) {
                      auto r = draw(i);
                      auto xs = r.objects();
                      int j = r.slot();
                      xs[j] = src[j]->unit();
                      return neq(tuple_str(xs), t.component(xs), d->id(d->unit()));
                    }));
  rep.add(run_check("ntrans.constraint-compatibility", "constraint compatibility", s.count,
                    [&](long i) {
                      auto r = draw(i);
                      auto xs = r.objects();
                      int j = r.slot();
                      Val x2 = r.object(j);
                      auto ys = with(xs, j, x2);
                      auto zs = with(xs, j, src[j]->tensor(xs[j], x2));
                      Val lhs = d->compose(t.component(zs), F->constraint(j, xs, x2));
                      Val rhs = d->compose(G->constraint(j, xs, x2),
                                           d->tensor_mor(t.component(xs), t.component(ys)));
                      return neq("slot " + std::to_string(j + 1) + " " + tuple_str(xs), lhs, rhs);
                    }));
  return rep;
}

std::string diff_nl(NLinearFunctor const &a, NLinearFunctor const &b, NLSample const &s)
{
  if (a.arity() != b.arity())
    return "arity " + std::to_string(a.arity()) + " vs " + std::to_string(b.arity());
  int n = a.arity();
  if (n == 0)
    return neq("0-ary", a.obj({}), b.obj({}));
  check_pools(s, n);
  auto src = a.sources();
  for (long i = 0; i < s.count; ++i) {
    Draw r{s, src, Rng(mix(s.seed, i))};
    auto xs = r.objects();
    auto fs = r.morphisms(xs);
    int j = r.slot();
    Val x2 = r.object(j);
    std::string w = first_of(
        {neq(tuple_str(xs) + " object", a.obj(xs), b.obj(xs)),
         neq(tuple_str(fs) + " morphism", a.mor(fs), b.mor(fs)),
         neq(tuple_str(xs) + " constraint " + std::to_string(j + 1) + " with " + x2.str(),
             a.constraint(j, xs, x2), b.constraint(j, xs, x2))});
    if (!w.empty())
      return w;
  }
  return "";
}

std::string diff_nl_trans(NLinearTrans const &a, NLinearTrans const &b, NLSample const &s)
{
  int n = a.source()->arity();
  if (n != b.source()->arity())
    return "arity mismatch";
  if (n == 0)
    return neq("0-ary", a.component({}), b.component({}));
  check_pools(s, n);
  auto src = a.source()->sources();
  for (long i = 0; i < s.count; ++i) {
    Draw r{s, src, Rng(mix(s.seed, i))};
    auto xs = r.objects();
    std::string w = neq(tuple_str(xs), a.component(xs), b.component(xs));
    if (!w.empty())
      return w;
  }
  return "";
}

} // namespace bpk
