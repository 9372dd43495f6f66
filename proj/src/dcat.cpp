#include "bipermkit/dcat.hpp"

#include <algorithm>
#include <stdexcept>

namespace bpk {

// ---- semirings

int Semiring::one() const
{
  switch (kind) {
  case Trunc: return k >= 1 ? 1 : 0;
  case MaxMin: return k;
  case Mod: return 1 % k;
  }
  return 1;
}

int Semiring::add(int a, int b) const
{
  switch (kind) {
  case Trunc: return std::min(a + b, k);
  case MaxMin: return std::max(a, b);
  case Mod: return (a + b) % k;
  }
  return 0;
}

int Semiring::mul(int a, int b) const
{
  switch (kind) {
  case Trunc: return std::min(a * b, k);
  case MaxMin: return std::min(a, b);
  case Mod: return (a * b) % k;
  }
  return 0;
}

std::string Semiring::name() const
{
  switch (kind) {
  case Trunc: return "trunc" + std::to_string(k);
  case MaxMin: return "maxmin" + std::to_string(k);
  case Mod: return "mod" + std::to_string(k);
  }
  return "?";
}

Semiring Semiring::parse(std::string const &s)
{
  auto num = [&](std::size_t pos) {
    int k = std::stoi(s.substr(pos));
    if (k < 1)
      throw std::invalid_argument("semiring parameter must be positive: " + s);
    return k;
  };
  if (s.rfind("trunc", 0) == 0)
    return {Trunc, num(5)};
  if (s.rfind("maxmin", 0) == 0)
    return {MaxMin, num(6)};
  if (s.rfind("mod", 0) == 0)
    return {Mod, num(3)};
  throw std::invalid_argument("unknown semiring: " + s);
}

// ---- vector fibers

VecFiber::VecFiber(Semiring s, int n, bool ordered, bool sorted)
: s_(s), n_(n), ordered_(ordered && s.ordered()), sorted_(sorted)
{}

bool VecFiber::has_object(Val const &x) const
{
  if (x.is_int() || static_cast<int>(x.size()) != n_)
    return false;
  long prev = -1;
  for (auto const &e : x.items()) {
    if (!e.is_int() || e.as_int() < 0 || e.as_int() >= s_.size())
      return false;
    if (sorted_ && e.as_int() < prev)
      return false;
    prev = e.as_int();
  }
  return true;
}

Val VecFiber::compose(Val const &g, Val const &f) const
{
  if (f[1] != g[0])
    throw StructuralError("composite not defined in fiber");
  return Val::list({f[0], g[1]});
}

std::vector<Val> VecFiber::hom(Val const &a, Val const &b) const
{
  if (!ordered_)
    return a == b ? std::vector<Val>{id(a)} : std::vector<Val>{};
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].as_int() > b[i].as_int())
      return {};
  return {Val::list({a, b})};
}

std::vector<Val> VecFiber::objects() const
{
  std::vector<Val> r;
  std::vector<int> cur(n_, 0);
  int q = s_.size();
  while (true) {
    bool ok = true;
    if (sorted_)
      for (int i = 1; i < n_; ++i)
        ok = ok && cur[i - 1] <= cur[i];
    if (ok)
      r.push_back(Val::ints(cur));
    int k = 0;
    while (k < n_ && cur[k] == q - 1) {
      cur[k] = 0;
      ++k;
    }
    if (k == n_)
      break;
    ++cur[k];
  }
  return r;
}

std::optional<Val> VecFiber::inverse(Val const &f) const
{
  if (f[0] == f[1])
    return f;
  return std::nullopt;
}

// ---- vector functors

VecFunctor::VecFunctor(BipermPtr d, Semiring s, bool ordered, bool sorted)
: d_(std::move(d)), s_(s), ordered_(ordered && s.ordered()), sorted_(sorted)
{}

CatPtr VecFunctor::fiber(Obj const &a) const
{
  return std::make_shared<VecFiber>(s_, d_->card(a), ordered_, sorted_);
}

std::vector<Val> VecFunctor::fiber_objects(Obj const &a) const
{
  return VecFiber(s_, d_->card(a), ordered_, sorted_).objects();
}

namespace {

Val sorted_val(std::vector<int> v, bool sorted)
{
  if (sorted)
    std::sort(v.begin(), v.end());
  return Val::ints(v);
}

} // namespace

Val VecFunctor::push(Mor const &f, Val const &x) const
{
  auto xs = x.to_ints();
  if (static_cast<int>(xs.size()) != d_->card(f.dom))
    throw StructuralError("pushforward: " + x.str() + " is not over " + obj_str(f.dom));
  std::vector<int> y(d_->card(f.cod), s_.zero());
  for (std::size_t u = 0; u < xs.size(); ++u)
    if (f.map[u] != 0)
      y[f.map[u] - 1] = s_.add(y[f.map[u] - 1], xs[u]);
  return sorted_val(std::move(y), sorted_);
}

Val VecFunctor::push_mor(Mor const &f, Val const &p) const
{
  return Val::list({push(f, p[0]), push(f, p[1])});
}

Val VecFunctor::sum(Obj const &, Obj const &, Val const &x, Val const &y) const
{
  auto v = x.to_ints();
  auto w = y.to_ints();
  v.insert(v.end(), w.begin(), w.end());
  return sorted_val(std::move(v), sorted_);
}

Val VecFunctor::sum_mor(Obj const &a, Obj const &b, Val const &p, Val const &q) const
{
  return Val::list({sum(a, b, p[0], q[0]), sum(a, b, p[1], q[1])});
}

CatPtr ConstUnitSMF::fiber(Obj const &) const
{
  static auto const t = std::make_shared<const FinCategory>(terminal_category());
  return t;
}

// ---- tabulated

TabulatedSMF::TabulatedSMF(BipermPtr d, std::vector<Obj> bound,
                           std::map<Obj, std::shared_ptr<const FinCategory>> fibers,
                           std::map<Mor, Push> pushes, Val unit,
                           std::map<std::pair<Obj, Obj>, Push> sums)
: d_(std::move(d)), bound_(std::move(bound)), fibers_(std::move(fibers)),
  pushes_(std::move(pushes)), unit_(std::move(unit)), sums_(std::move(sums))
{
  for (auto const &a : bound_)
    if (!fibers_.count(a))
      throw StructuralError("missing fiber over " + obj_str(a));
  auto z = fibers_.find(d_->zero());
  if (z != fibers_.end() && !z->second->has_object(unit_))
    throw StructuralError("unit is not an object of the zero fiber");
}

CatPtr TabulatedSMF::fiber(Obj const &a) const
{
  auto it = fibers_.find(a);
  if (it == fibers_.end())
    throw BoundError("D-object " + obj_str(a) + " outside the tabulated bound");
  return it->second;
}

std::vector<Val> TabulatedSMF::fiber_objects(Obj const &a) const
{
  return fiber(a)->objects();
}

Val TabulatedSMF::push(Mor const &f, Val const &x) const
{
  auto it = pushes_.find(f);
  if (it == pushes_.end())
    throw BoundError("D-morphism " + mor_str(f) + " outside the tabulated bound");
  auto jt = it->second.objects.find(x);
  if (jt == it->second.objects.end())
    throw StructuralError("pushforward along " + mor_str(f) + " missing object " + x.str());
  return jt->second;
}

Val TabulatedSMF::push_mor(Mor const &f, Val const &p) const
{
  auto it = pushes_.find(f);
  if (it == pushes_.end())
    throw BoundError("D-morphism " + mor_str(f) + " outside the tabulated bound");
  auto jt = it->second.morphisms.find(p);
  if (jt == it->second.morphisms.end())
    throw StructuralError("pushforward along " + mor_str(f) + " missing morphism " + p.str());
  return jt->second;
}

Val TabulatedSMF::sum(Obj const &a, Obj const &b, Val const &x, Val const &y) const
{
  auto it = sums_.find({a, b});
  if (it == sums_.end())
    throw BoundError("sum over " + obj_str(a) + " " + obj_str(b) + " outside the bound");
  auto jt = it->second.objects.find(Val::list({x, y}));
  if (jt == it->second.objects.end())
    throw StructuralError("sum table missing " + x.str() + " " + y.str());
  return jt->second;
}

Val TabulatedSMF::sum_mor(Obj const &a, Obj const &b, Val const &p, Val const &q) const
{
  auto it = sums_.find({a, b});
  if (it == sums_.end())
    throw BoundError("sum over " + obj_str(a) + " " + obj_str(b) + " outside the bound");
  auto jt = it->second.morphisms.find(Val::list({p, q}));
  if (jt == it->second.morphisms.end())
    throw StructuralError("sum table missing " + p.str() + " " + q.str());
  return jt->second;
}

TabulatedSMF tabulate_smf(AdditiveSMF const &x, std::vector<Obj> const &bound)
{
  auto d = x.base();
  std::map<Obj, std::shared_ptr<const FinCategory>> fibers;
  for (auto const &a : bound)
    fibers[a] = std::make_shared<const FinCategory>(
        materialize(*x.fiber(a), x.fiber_objects(a)));
  std::map<Mor, TabulatedSMF::Push> pushes;
  for (auto const &a : bound)
    for (auto const &b : bound)
      for (auto const &f : d->hom(a, b)) {
        TabulatedSMF::Push t;
        for (auto const &o : fibers[a]->objects())
          t.objects[o] = x.push(f, o);
        for (auto const &m : fibers[a]->morphisms())
          t.morphisms[m.id] = x.push_mor(f, m.id);
        pushes[f] = std::move(t);
      }
  std::map<std::pair<Obj, Obj>, TabulatedSMF::Push> sums;
  for (auto const &a : bound)
    for (auto const &b : bound) {
      if (!fibers.count(d->plus(a, b)))
        continue;
      TabulatedSMF::Push t;
      for (auto const &o : fibers[a]->objects())
        for (auto const &o2 : fibers[b]->objects())
          t.objects[Val::list({o, o2})] = x.sum(a, b, o, o2);
      for (auto const &m : fibers[a]->morphisms())
        for (auto const &m2 : fibers[b]->morphisms())
          t.morphisms[Val::list({m.id, m2.id})] = x.sum_mor(a, b, m.id, m2.id);
      sums[{a, b}] = std::move(t);
    }
  return TabulatedSMF(d, bound, std::move(fibers), std::move(pushes), x.unit(),
                      std::move(sums));
}

// ---- transformations

ProductNat::ProductNat(std::vector<AsmfPtr> sources, AsmfPtr target, int c)
: src_(std::move(sources)), tgt_(std::move(target)), c_(c)
{
  auto z = std::dynamic_pointer_cast<const VecFunctor>(tgt_);
  if (!z)
    throw std::invalid_argument("product transformation needs a vector functor target");
  for (auto const &x : src_) {
    auto v = std::dynamic_pointer_cast<const VecFunctor>(x);
    if (!v || !(v->semiring() == z->semiring()))
      throw std::invalid_argument("product transformation needs matching vector functors");
  }
  s_ = z->semiring();
  sorted_ = z->sorted();
  if (c < 0 || c >= s_.size())
    throw std::invalid_argument("scalar outside the semiring");
}

Val ProductNat::obj(std::vector<Obj> const &as, std::vector<Val> const &xs) const
{
  if (as.size() != src_.size() || xs.size() != src_.size())
    throw std::invalid_argument("product transformation: arity mismatch");
  auto d = tgt_->base();
  Obj cur_obj = d->one();
  std::vector<int> cur{c_};
  for (std::size_t j = 0; j < as.size(); ++j) {
    auto x = xs[j].to_ints();
    if (static_cast<int>(x.size()) != d->card(as[j]))
      throw StructuralError("product transformation: " + xs[j].str() + " not over " +
                            obj_str(as[j]));
    std::vector<int> next;
    for (auto [u, v] : d->pair_order(cur_obj, as[j]))
      next.push_back(s_.mul(cur[u - 1], x[v - 1]));
    cur = std::move(next);
    cur_obj = d->times(cur_obj, as[j]);
  }
  return sorted_val(std::move(cur), sorted_);
}

Val ProductNat::mor(std::vector<Obj> const &as, std::vector<Val> const &ps) const
{
  std::vector<Val> lo, hi;
  for (auto const &p : ps) {
    lo.push_back(p[0]);
    hi.push_back(p[1]);
  }
  return Val::list({obj(as, lo), obj(as, hi)});
}

Val ConstantNat::mor(std::vector<Obj> const &, std::vector<Val> const &) const
{
  return z_->fiber(z_->base()->one())->id(x_);
}

GammaNat::GammaNat(NatPtr outer, std::vector<NatPtr> inner)
: outer_(std::move(outer)), inner_(std::move(inner))
{
  if (static_cast<int>(inner_.size()) != outer_->arity())
    throw std::invalid_argument("gamma: profile mismatch");
  for (auto const &p : inner_)
    for (auto const &x : p->sources())
      src_.push_back(x);
}

template <class F>
Val GammaNat::apply(std::vector<Obj> const &as, std::vector<Val> const &xs, F f) const
{
  auto d = target()->base();
  std::vector<Obj> bs;
  std::vector<Val> ys;
  std::size_t pos = 0;
  for (auto const &p : inner_) {
    std::size_t k = static_cast<std::size_t>(p->arity());
    if (pos + k > as.size())
      throw std::invalid_argument("gamma: arity mismatch");
    std::vector<Obj> a(as.begin() + pos, as.begin() + pos + k);
    std::vector<Val> x(xs.begin() + pos, xs.begin() + pos + k);
    bs.push_back(d->times_all(a));
    ys.push_back(f(*p, a, x));
    pos += k;
  }
  if (pos != as.size())
    throw std::invalid_argument("gamma: arity mismatch");
  return f(*outer_, bs, ys);
}

Val GammaNat::obj(std::vector<Obj> const &as, std::vector<Val> const &xs) const
{
  return apply(as, xs, [](AdditiveNatTrans const &p, auto const &a, auto const &x) {
    return p.obj(a, x);
  });
}

Val GammaNat::mor(std::vector<Obj> const &as, std::vector<Val> const &ps) const
{
  return apply(as, ps, [](AdditiveNatTrans const &p, auto const &a, auto const &x) {
    return p.mor(a, x);
  });
}

SigmaNat::SigmaNat(NatPtr phi, Perm s)
: phi_(std::move(phi)), s_(std::move(s))
{
  if (s_.size() != phi_->arity())
    throw std::invalid_argument("sigma action: arity mismatch");
  auto src = phi_->sources();
  for (int j = 1; j <= s_.size(); ++j)
    src_.push_back(src[s_(j) - 1]);
}

Val SigmaNat::obj(std::vector<Obj> const &as, std::vector<Val> const &xs) const
{
  auto bs = permute_tuple(s_, as);
  Val y = phi_->obj(bs, permute_tuple(s_, xs));
  return target()->push(target()->base()->permute_tensor(bs, s_), y);
}

Val SigmaNat::mor(std::vector<Obj> const &as, std::vector<Val> const &ps) const
{
  auto bs = permute_tuple(s_, as);
  Val y = phi_->mor(bs, permute_tuple(s_, ps));
  return target()->push_mor(target()->base()->permute_tensor(bs, s_), y);
}

NatPtr gamma(NatPtr phi, std::vector<NatPtr> const &inner)
{
  return std::make_shared<GammaNat>(std::move(phi), inner);
}

NatPtr sigma_act(NatPtr phi, Perm const &s) { return std::make_shared<SigmaNat>(std::move(phi), s); }

// ---- modifications

namespace {

CatPtr fiber_at(AdditiveNatTrans const &phi, std::vector<Obj> const &as)
{
  auto z = phi.target();
  return z->fiber(z->base()->times_all(as));
}

} // namespace

Val IdentityMod::component(std::vector<Obj> const &as, std::vector<Val> const &xs) const
{
  return fiber_at(*phi_, as)->id(phi_->obj(as, xs));
}

ScalarMod::ScalarMod(std::shared_ptr<const ProductNat> lo, std::shared_ptr<const ProductNat> hi)
: lo_(std::move(lo)), hi_(std::move(hi))
{
  if (lo_->scalar() > hi_->scalar())
    throw std::invalid_argument("scalar modification needs c <= c'");
}

Val ScalarMod::component(std::vector<Obj> const &as, std::vector<Val> const &xs) const
{
  return Val::list({lo_->obj(as, xs), hi_->obj(as, xs)});
}

Val VerticalMod::component(std::vector<Obj> const &as, std::vector<Val> const &xs) const
{
  return fiber_at(*g_->source(), as)->compose(g_->component(as, xs), f_->component(as, xs));
}

GammaMod::GammaMod(ModPtr outer, std::vector<ModPtr> inner)
: outer_(std::move(outer)), inner_(std::move(inner))
{
  std::vector<NatPtr> lo, hi;
  for (auto const &m : inner_) {
    lo.push_back(m->source());
    hi.push_back(m->target());
  }
  src_ = gamma(outer_->source(), lo);
  tgt_ = gamma(outer_->target(), hi);
}

Val GammaMod::component(std::vector<Obj> const &as, std::vector<Val> const &xs) const
{
  auto d = src_->target()->base();
  std::vector<Obj> bs;
  std::vector<Val> lo, comps;
  std::size_t pos = 0;
  for (auto const &m : inner_) {
    std::size_t k = static_cast<std::size_t>(m->source()->arity());
    std::vector<Obj> a(as.begin() + pos, as.begin() + pos + k);
    std::vector<Val> x(xs.begin() + pos, xs.begin() + pos + k);
    bs.push_back(d->times_all(a));
    lo.push_back(m->source()->obj(a, x));
    comps.push_back(m->component(a, x));
    pos += k;
  }
  Val first = outer_->component(bs, lo);
  Val second = outer_->target()->mor(bs, comps);
  return fiber_at(*src_, as)->compose(second, first);
}

SigmaMod::SigmaMod(ModPtr m, Perm s)
: m_(std::move(m)), s_(std::move(s))
{
  src_ = sigma_act(m_->source(), s_);
  tgt_ = sigma_act(m_->target(), s_);
}

Val SigmaMod::component(std::vector<Obj> const &as, std::vector<Val> const &xs) const
{
  auto z = src_->target();
  auto bs = permute_tuple(s_, as);
  Val c = m_->component(bs, permute_tuple(s_, xs));
  return z->push_mor(z->base()->permute_tensor(bs, s_), c);
}

ModPtr gamma(ModPtr m, std::vector<ModPtr> const &inner)
{
  return std::make_shared<GammaMod>(std::move(m), inner);
}

ModPtr sigma_act(ModPtr m, Perm const &s) { return std::make_shared<SigmaMod>(std::move(m), s); }

// ---- sampling

Val sample_fiber_object(AdditiveSMF const &x, Obj const &a, Rng &g)
{
  if (auto v = dynamic_cast<VecFunctor const *>(&x)) {
    int n = x.base()->card(a);
    std::vector<int> e(n);
    for (auto &t : e)
      t = static_cast<int>(g.below(v->semiring().size()));
    if (v->sorted())
      std::sort(e.begin(), e.end());
    return Val::ints(e);
  }
  auto objs = x.fiber_objects(a);
  if (objs.empty())
    throw StructuralError("empty fiber over " + obj_str(a));
  return objs[g.below(static_cast<long>(objs.size()))];
}

Val sample_fiber_morphism(AdditiveSMF const &x, Obj const &a, Val const &from, Rng &g)
{
  auto c = x.fiber(a);
  if (auto v = dynamic_cast<VecFunctor const *>(&x)) {
    if (!v->ordered())
      return c->id(from);
    auto e = from.to_ints();
    for (auto &t : e)
      if (g.below(2))
        t = t + static_cast<int>(g.below(v->semiring().size() - t));
    if (v->sorted())
      std::sort(e.begin(), e.end());
    auto h = c->hom(from, Val::ints(e));
    return h.empty() ? c->id(from) : h[0];
  }
  auto objs = x.fiber_objects(a);
  for (int tries = 0; tries < 6; ++tries) {
    auto h = c->hom(from, objs[g.below(static_cast<long>(objs.size()))]);
    if (!h.empty())
      return h[g.below(static_cast<long>(h.size()))];
  }
  return c->id(from);
}

NatInput sample_input(std::vector<AsmfPtr> const &srcs, std::vector<Obj> const &dobjs, Rng &g)
{
  NatInput in;
  for (auto const &x : srcs) {
    Obj a = dobjs[g.below(static_cast<long>(dobjs.size()))];
    in.as.push_back(a);
    in.xs.push_back(sample_fiber_object(*x, a, g));
  }
  return in;
}

// ---- checks

namespace {

std::uint64_t mix(std::uint64_t seed, long i)
{
  return seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(i) * 0xbf58476d1ce4e5b9ULL +
         1;
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

std::string objs_str(std::vector<Obj> const &as)
{
  std::string s = "<";
  for (std::size_t i = 0; i < as.size(); ++i)
    s += (i ? " " : "") + obj_str(as[i]);
  return s + ">";
}

std::string vals_str(std::vector<Val> const &xs)
{
  std::string s = "<";
  for (std::size_t i = 0; i < xs.size(); ++i)
    s += (i ? " " : "") + xs[i].str();
  return s + ">";
}

struct DMors
{
  std::vector<Mor> mors;
  std::map<Obj, std::vector<std::size_t>> by_dom;

  DMors(Biperm const &d, DSample const &s)
  {
    std::vector<Obj> small;
    for (auto const &a : s.dobjs)
      if (d.card(a) <= s.max_card)
        small.push_back(a);
    mors = morphism_sample(d, small, s.seed, s.max_card, 8);
    for (std::size_t i = 0; i < mors.size(); ++i)
      by_dom[mors[i].dom].push_back(i);
  }

  Mor const &any(Rng &g) const { return mors[g.below(static_cast<long>(mors.size()))]; }
  Mor const *after(Mor const &f, Rng &g) const
  {
    auto it = by_dom.find(f.cod);
    if (it == by_dom.end())
      return nullptr;
    return &mors[it->second[g.below(static_cast<long>(it->second.size()))]];
  }
};

Obj pick(std::vector<Obj> const &v, Rng &g) { return v[g.below(static_cast<long>(v.size()))]; }

} // namespace

Report check_additive_smf(AdditiveSMF const &x, DSample const &s)
{
  Report rep;
  rep.suite = "additive-smf";
  auto d = x.base();
  DMors dm(*d, s);
  Obj Z = d->zero();
  auto fib = [&](Obj const &a) { return x.fiber(a); };
  auto ok = [&](Obj const &a) { return x.defined_at(a); };
  // retry draws whose sums leave a tabulated bound
  auto draw = [&](Rng &g, int k, std::vector<Obj> &out) {
    for (int t = 0; t < 64; ++t) {
      out.clear();
      for (int j = 0; j < k; ++j)
        out.push_back(pick(s.dobjs, g));
      bool good = true;
      for (int j = 0; j + 1 < k; ++j)
        good = good && ok(d->plus(out[j], out[j + 1]));
      if (k == 3)
        good = good && ok(d->plus_all(out));
      if (good)
        return true;
    }
    return false;
  };

  rep.add(run_check("asmf.unit-object", "unit lies in the zero fiber", 1, [&](long) {
    return fib(Z)->has_object(x.unit()) ? std::string()
                                        : "unit " + x.unit().str() + " not in X0";
  }));
  rep.add(run_check("asmf.identity", "identities push to identities", s.count, [&](long i) {
    Rng g(mix(s.seed, i));
    Obj a = pick(s.dobjs, g);
    Val o = sample_fiber_object(x, a, g);
    Val p = sample_fiber_morphism(x, a, o, g);
    Mor e = d->id(a);
    return first_of({neq("object", x.push(e, o), o), neq("morphism", x.push_mor(e, p), p)});
  }));
  if (!dm.mors.empty()) {
    rep.add(run_check("asmf.composition", "pushforward respects composition", s.count,
                      [&](long i) {
                        Rng g(mix(s.seed, i));
                        Mor const &f = dm.any(g);
                        Mor const *h = dm.after(f, g);
                        if (!h)
                          return std::string();
                        Val o = sample_fiber_object(x, f.dom, g);
                        Val p = sample_fiber_morphism(x, f.dom, o, g);
                        Mor hf = d->compose(*h, f);
                        return first_of(
                            {neq(mor_str(f) + " then " + mor_str(*h) + " on " + o.str(),
                                 x.push(hf, o), x.push(*h, x.push(f, o))),
                             neq("morphism " + p.str(), x.push_mor(hf, p),
                                 x.push_mor(*h, x.push_mor(f, p)))});
                      }));
    rep.add(run_check("asmf.pushforward-functor", "each pushforward is a functor", s.count,
                      [&](long i) {
                        Rng g(mix(s.seed, i));
                        Mor const &f = dm.any(g);
                        auto ca = fib(f.dom), cb = fib(f.cod);
                        Val o = sample_fiber_object(x, f.dom, g);
                        Val p = sample_fiber_morphism(x, f.dom, o, g);
                        Val q = sample_fiber_morphism(x, f.dom, ca->cod(p), g);
                        Val fp = x.push_mor(f, p);
                        return first_of(
                            {neq("identity", x.push_mor(f, ca->id(o)), cb->id(x.push(f, o))),
                             neq("domain", cb->dom(fp), x.push(f, ca->dom(p))),
                             neq("composite", x.push_mor(f, ca->compose(q, p)),
                                 cb->compose(x.push_mor(f, q), fp))});
                      }));
    rep.add(run_check("asmf.sum-naturality", "monoidal constraint is natural", s.count,
                      [&](long i) {
                        Rng g(mix(s.seed, i));
                        Mor const *fp = &dm.any(g), *hp = &dm.any(g);
                        for (int t = 0; t < 64 && !(ok(d->plus(fp->dom, hp->dom)) &&
                                                    ok(d->plus(fp->cod, hp->cod)));
                             ++t) {
                          fp = &dm.any(g);
                          hp = &dm.any(g);
                        }
                        Mor const &f = *fp, &h = *hp;
                        if (!ok(d->plus(f.dom, h.dom)) || !ok(d->plus(f.cod, h.cod)))
                          return std::string();
                        Val o = sample_fiber_object(x, f.dom, g);
                        Val o2 = sample_fiber_object(x, h.dom, g);
                        Val p = sample_fiber_morphism(x, f.dom, o, g);
                        Val p2 = sample_fiber_morphism(x, h.dom, o2, g);
                        Mor fh = d->plus(f, h);
                        std::string w = mor_str(f) + " " + mor_str(h) + " " + o.str() + " " +
                                        o2.str();
                        return first_of(
                            {neq(w, x.push(fh, x.sum(f.dom, h.dom, o, o2)),
                                 x.sum(f.cod, h.cod, x.push(f, o), x.push(h, o2))),
                             neq(w + " morphisms", x.push_mor(fh, x.sum_mor(f.dom, h.dom, p, p2)),
                                 x.sum_mor(f.cod, h.cod, x.push_mor(f, p), x.push_mor(h, p2)))});
                      }));
  }
  rep.add(run_check("asmf.unity", "unity of the monoidal constraint", s.count, [&](long i) {
    Rng g(mix(s.seed, i));
    Obj a = pick(s.dobjs, g);
    Val o = sample_fiber_object(x, a, g);
    Val p = sample_fiber_morphism(x, a, o, g);
    Val e = x.unit(), ie = fib(Z)->id(e);
    std::string w = obj_str(a) + " " + o.str();
    return first_of({neq(w + " left", x.sum(Z, a, e, o), o), neq(w + " right", x.sum(a, Z, o, e), o),
                     neq(w + " left morphism", x.sum_mor(Z, a, ie, p), p),
                     neq(w + " right morphism", x.sum_mor(a, Z, p, ie), p)});
  }));
  rep.add(run_check("asmf.associativity", "associativity of the monoidal constraint", s.count,
                    [&](long i) {
                      Rng g(mix(s.seed, i));
                      std::vector<Obj> abc;
                      if (!draw(g, 3, abc))
                        return std::string();
                      Obj const &a = abc[0], &b = abc[1], &c = abc[2];
                      Val o = sample_fiber_object(x, a, g), o2 = sample_fiber_object(x, b, g),
                          o3 = sample_fiber_object(x, c, g);
                      Val p = sample_fiber_morphism(x, a, o, g),
                          p2 = sample_fiber_morphism(x, b, o2, g),
                          p3 = sample_fiber_morphism(x, c, o3, g);
                      Obj ab = d->plus(a, b), bc = d->plus(b, c);
                      std::string w = objs_str({a, b, c}) + " " + vals_str({o, o2, o3});
                      return first_of(
                          {neq(w, x.sum(ab, c, x.sum(a, b, o, o2), o3),
                               x.sum(a, bc, o, x.sum(b, c, o2, o3))),
                           neq(w + " morphisms", x.sum_mor(ab, c, x.sum_mor(a, b, p, p2), p3),
                               x.sum_mor(a, bc, p, x.sum_mor(b, c, p2, p3)))});
                    }));
  rep.add(run_check("asmf.braiding", "compatibility with the additive braiding", s.count,
                    [&](long i) {
                      Rng g(mix(s.seed, i));
                      std::vector<Obj> ab;
                      if (!draw(g, 2, ab))
                        return std::string();
                      Obj const &a = ab[0], &b = ab[1];
                      Val o = sample_fiber_object(x, a, g), o2 = sample_fiber_object(x, b, g);
                      Val p = sample_fiber_morphism(x, a, o, g),
                          p2 = sample_fiber_morphism(x, b, o2, g);
                      Mor br = d->beta_plus(a, b);
                      std::string w = objs_str({a, b}) + " " + vals_str({o, o2});
                      return first_of({neq(w, x.push(br, x.sum(a, b, o, o2)), x.sum(b, a, o2, o)),
                                       neq(w + " morphisms", x.push_mor(br, x.sum_mor(a, b, p, p2)),
                                           x.sum_mor(b, a, p2, p))});
                    }));
  rep.add(run_check("asmf.sum-functor", "monoidal constraint is a functor", s.count,
                    [&](long i) {
                      Rng g(mix(s.seed, i));
                      std::vector<Obj> ab;
                      if (!draw(g, 2, ab))
                        return std::string();
                      Obj const &a = ab[0], &b = ab[1];
                      auto ca = fib(a), cb = fib(b), cab = fib(d->plus(a, b));
                      Val o = sample_fiber_object(x, a, g), o2 = sample_fiber_object(x, b, g);
                      Val p = sample_fiber_morphism(x, a, o, g),
                          p2 = sample_fiber_morphism(x, b, o2, g);
                      Val q = sample_fiber_morphism(x, a, ca->cod(p), g),
                          q2 = sample_fiber_morphism(x, b, cb->cod(p2), g);
                      return first_of(
                          {neq("identity", x.sum_mor(a, b, ca->id(o), cb->id(o2)),
                               cab->id(x.sum(a, b, o, o2))),
                           neq("composite",
                               x.sum_mor(a, b, ca->compose(q, p), cb->compose(q2, p2)),
                               cab->compose(x.sum_mor(a, b, q, q2), x.sum_mor(a, b, p, p2)))});
                    }));
  return rep;
}

namespace {

std::vector<Val> fiber_morphisms(AdditiveNatTrans const &phi, NatInput const &in, Rng &g)
{
  auto src = phi.sources();
  std::vector<Val> ps;
  for (std::size_t j = 0; j < src.size(); ++j)
    ps.push_back(sample_fiber_morphism(*src[j], in.as[j], in.xs[j], g));
  return ps;
}

std::vector<Val> cods(std::vector<AsmfPtr> const &src, std::vector<Obj> const &as,
                      std::vector<Val> const &ps)
{
  std::vector<Val> r;
  for (std::size_t j = 0; j < src.size(); ++j)
    r.push_back(src[j]->fiber(as[j])->cod(ps[j]));
  return r;
}

std::vector<Val> ids(std::vector<AsmfPtr> const &src, std::vector<Obj> const &as,
                     std::vector<Val> const &xs)
{
  std::vector<Val> r;
  for (std::size_t j = 0; j < src.size(); ++j)
    r.push_back(src[j]->fiber(as[j])->id(xs[j]));
  return r;
}

std::string input_str(NatInput const &in) { return objs_str(in.as) + " " + vals_str(in.xs); }

// a'' and x'' for the additivity axioms
struct Split
{
  int i;
  NatInput lo, hi, both;
  Mor lambda;
};

Split make_split(std::vector<AsmfPtr> const &src, Biperm const &d, std::vector<Obj> const &dobjs,
                 Rng &g)
{
  Split s;
  s.lo = sample_input(src, dobjs, g);
  s.i = static_cast<int>(g.below(static_cast<long>(src.size())));
  s.hi = s.lo;
  s.hi.as[s.i] = pick(dobjs, g);
  s.hi.xs[s.i] = sample_fiber_object(*src[s.i], s.hi.as[s.i], g);
  s.both = s.lo;
  s.both.as[s.i] = d.plus(s.lo.as[s.i], s.hi.as[s.i]);
  s.both.xs[s.i] = src[s.i]->sum(s.lo.as[s.i], s.hi.as[s.i], s.lo.xs[s.i], s.hi.xs[s.i]);
  s.lambda = d.laplaza(s.lo.as, s.i, s.hi.as[s.i]);
  return s;
}

} // namespace

Report check_additive_nat(AdditiveNatTrans const &phi, DSample const &s)
{
  Report rep;
  rep.suite = "additive-nat";
  auto src = phi.sources();
  auto z = phi.target();
  auto d = z->base();
  int n = phi.arity();
  if (n == 0) {
    rep.add(single_check("nat.arity0", "a 0-ary cell is an object of the unit fiber",
                         z->fiber(d->one())->has_object(phi.obj({}, {})),
                         phi.obj({}, {}).str()));
    return rep;
  }
  DMors dm(*d, s);
  auto zf = [&](std::vector<Obj> const &as) { return z->fiber(d->times_all(as)); };

  rep.add(run_check("nat.functor", "components are functors", s.count, [&](long i) {
    Rng g(mix(s.seed, i));
    auto in = sample_input(src, s.dobjs, g);
    auto ps = fiber_morphisms(phi, in, g);
    auto qs = fiber_morphisms(phi, NatInput{in.as, cods(src, in.as, ps)}, g);
    auto c = zf(in.as);
    std::vector<Val> comp;
    for (int j = 0; j < n; ++j)
      comp.push_back(src[j]->fiber(in.as[j])->compose(qs[j], ps[j]));
    Val m = phi.mor(in.as, ps);
    std::string w = input_str(in);
    return first_of({neq(w + " identity", phi.mor(in.as, ids(src, in.as, in.xs)),
                         c->id(phi.obj(in.as, in.xs))),
                     neq(w + " domain", c->dom(m), phi.obj(in.as, in.xs)),
                     neq(w + " composite", phi.mor(in.as, comp),
                         c->compose(phi.mor(in.as, qs), m))});
  }));
  if (!dm.mors.empty())
    rep.add(run_check("nat.naturality", "naturality in the D-variables", s.count, [&](long i) {
      Rng g(mix(s.seed, i));
      std::vector<Mor> fs;
      NatInput in, out;
      std::vector<Val> ps, qs;
      for (int j = 0; j < n; ++j) {
        fs.push_back(dm.any(g));
        in.as.push_back(fs[j].dom);
        out.as.push_back(fs[j].cod);
        in.xs.push_back(sample_fiber_object(*src[j], fs[j].dom, g));
        out.xs.push_back(src[j]->push(fs[j], in.xs[j]));
        ps.push_back(sample_fiber_morphism(*src[j], fs[j].dom, in.xs[j], g));
        qs.push_back(src[j]->push_mor(fs[j], ps[j]));
      }
      Mor tf = d->times_all(fs);
      std::string w = input_str(in);
      for (auto const &f : fs)
        w += " " + mor_str(f);
      return first_of({neq(w, z->push(tf, phi.obj(in.as, in.xs)), phi.obj(out.as, out.xs)),
                       neq(w + " morphisms", z->push_mor(tf, phi.mor(in.as, ps)),
                           phi.mor(out.as, qs))});
    }));
  rep.add(run_check("nat.unity", "a unit input gives the unit", s.count, [&](long i) {
    Rng g(mix(s.seed, i));
    auto in = sample_input(src, s.dobjs, g);
    int k = static_cast<int>(g.below(n));
    in.as[k] = d->zero();
    in.xs[k] = src[k]->unit();
    auto ps = fiber_morphisms(phi, in, g);
    ps[k] = src[k]->fiber(d->zero())->id(src[k]->unit());
    std::string w = input_str(in);
    return first_of({neq(w, phi.obj(in.as, in.xs), z->unit()),
                     neq(w + " morphism", phi.mor(in.as, ps), z->fiber(d->zero())->id(z->unit()))});
  }));
  rep.add(run_check("nat.additivity", "additivity", s.count, [&](long i) {
    Rng g(mix(s.seed, i));
    Split sp = make_split(src, *d, s.dobjs, g);
    Obj lo = d->times_all(sp.lo.as), hi = d->times_all(sp.hi.as);
    Val lhs = z->push(sp.lambda, phi.obj(sp.both.as, sp.both.xs));
    Val rhs = z->sum(lo, hi, phi.obj(sp.lo.as, sp.lo.xs), phi.obj(sp.hi.as, sp.hi.xs));
    std::string w = "slot " + std::to_string(sp.i + 1) + " " + input_str(sp.lo) + " and " +
                    obj_str(sp.hi.as[sp.i]) + " " + sp.hi.xs[sp.i].str();
    if (lhs != rhs)
      return w + ": " + lhs.str() + " != " + rhs.str();
    auto ps = fiber_morphisms(phi, sp.lo, g);
    auto ps2 = ps;
    ps2[sp.i] = sample_fiber_morphism(*src[sp.i], sp.hi.as[sp.i], sp.hi.xs[sp.i], g);
    auto pb = ps;
    pb[sp.i] = src[sp.i]->sum_mor(sp.lo.as[sp.i], sp.hi.as[sp.i], ps[sp.i], ps2[sp.i]);
    Val ml = z->push_mor(sp.lambda, phi.mor(sp.both.as, pb));
    Val mr = z->sum_mor(lo, hi, phi.mor(sp.lo.as, ps), phi.mor(sp.hi.as, ps2));
    return neq(w + " morphisms", ml, mr);
  }));
  return rep;
}

Report check_additive_mod(AdditiveMod const &m, DSample const &s)
{
  Report rep;
  rep.suite = "additive-mod";
  auto phi = m.source(), psi = m.target();
  auto src = phi->sources();
  auto z = phi->target();
  auto d = z->base();
  int n = phi->arity();
  auto zf = [&](std::vector<Obj> const &as) { return z->fiber(d->times_all(as)); };
  if (n == 0) {
    Val c = m.component({}, {});
    auto f = zf({});
    rep.add(single_check("mod.typing", "components have the right type",
                         f->dom(c) == phi->obj({}, {}) && f->cod(c) == psi->obj({}, {}),
                         c.str()));
    return rep;
  }
  DMors dm(*d, s);
  rep.add(run_check("mod.typing", "components have the right type", s.count, [&](long i) {
    Rng g(mix(s.seed, i));
    auto in = sample_input(src, s.dobjs, g);
    Val c = m.component(in.as, in.xs);
    auto f = zf(in.as);
    return first_of({neq(input_str(in) + " source", f->dom(c), phi->obj(in.as, in.xs)),
                     neq(input_str(in) + " target", f->cod(c), psi->obj(in.as, in.xs))});
  }));
  rep.add(run_check("mod.naturality", "components are natural", s.count, [&](long i) {
    Rng g(mix(s.seed, i));
    auto in = sample_input(src, s.dobjs, g);
    auto ps = fiber_morphisms(*phi, in, g);
    auto f = zf(in.as);
    Val lhs = f->compose(psi->mor(in.as, ps), m.component(in.as, in.xs));
    Val rhs = f->compose(m.component(in.as, cods(src, in.as, ps)), phi->mor(in.as, ps));
    return neq(input_str(in), lhs, rhs);
  }));
  if (!dm.mors.empty())
    rep.add(run_check("mod.modification", "modification axiom", s.count, [&](long i) {
      Rng g(mix(s.seed, i));
      std::vector<Mor> fs;
      NatInput in, out;
      for (int j = 0; j < n; ++j) {
        fs.push_back(dm.any(g));
        in.as.push_back(fs[j].dom);
        out.as.push_back(fs[j].cod);
        in.xs.push_back(sample_fiber_object(*src[j], fs[j].dom, g));
        out.xs.push_back(src[j]->push(fs[j], in.xs[j]));
      }
      return neq(input_str(in), z->push_mor(d->times_all(fs), m.component(in.as, in.xs)),
                 m.component(out.as, out.xs));
    }));
  rep.add(run_check("mod.unity", "unity", s.count, [&](long i) {
    Rng g(mix(s.seed, i));
    auto in = sample_input(src, s.dobjs, g);
    int k = static_cast<int>(g.below(n));
    in.as[k] = d->zero();
    in.xs[k] = src[k]->unit();
    return neq(input_str(in), m.component(in.as, in.xs), z->fiber(d->zero())->id(z->unit()));
  }));
  rep.add(run_check("mod.additivity", "additivity", s.count, [&](long i) {
    Rng g(mix(s.seed, i));
    Split sp = make_split(src, *d, s.dobjs, g);
    Obj lo = d->times_all(sp.lo.as), hi = d->times_all(sp.hi.as);
    Val lhs = z->push_mor(sp.lambda, m.component(sp.both.as, sp.both.xs));
    Val rhs = z->sum_mor(lo, hi, m.component(sp.lo.as, sp.lo.xs), m.component(sp.hi.as, sp.hi.xs));
    return neq("slot " + std::to_string(sp.i + 1) + " " + input_str(sp.lo), lhs, rhs);
  }));
  return rep;
}

std::string diff_nat(AdditiveNatTrans const &a, AdditiveNatTrans const &b, DSample const &s)
{
  if (a.arity() != b.arity())
    return "arity " + std::to_string(a.arity()) + " vs " + std::to_string(b.arity());
  if (a.arity() == 0)
    return neq("0-ary", a.obj({}, {}), b.obj({}, {}));
  auto src = a.sources();
  for (long i = 0; i < s.count; ++i) {
    Rng g(mix(s.seed, i));
    auto in = sample_input(src, s.dobjs, g);
    Val x = a.obj(in.as, in.xs), y = b.obj(in.as, in.xs);
    if (x != y)
      return input_str(in) + ": " + x.str() + " vs " + y.str();
    auto ps = fiber_morphisms(a, in, g);
    Val p = a.mor(in.as, ps), q = b.mor(in.as, ps);
    if (p != q)
      return input_str(in) + " on " + vals_str(ps) + ": " + p.str() + " vs " + q.str();
  }
  return "";
}

std::string diff_mod(AdditiveMod const &a, AdditiveMod const &b, DSample const &s)
{
  int n = a.source()->arity();
  if (n != b.source()->arity())
    return "arity mismatch";
  if (n == 0)
    return neq("0-ary", a.component({}, {}), b.component({}, {}));
  auto src = a.source()->sources();
  for (long i = 0; i < s.count; ++i) {
    Rng g(mix(s.seed, i));
    auto in = sample_input(src, s.dobjs, g);
    Val x = a.component(in.as, in.xs), y = b.component(in.as, in.xs);
    if (x != y)
      return input_str(in) + ": " + x.str() + " vs " + y.str();
  }
  return "";
}

} // namespace bpk
