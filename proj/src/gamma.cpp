#include "bipermkit/gamma.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace bpk {

namespace {

std::string neq(std::string const &what, Val const &l, Val const &r)
{
  return l == r ? std::string() : what + ": " + l.str() + " != " + r.str();
}

std::uint64_t mix(std::uint64_t seed, long i)
{
  return (seed + 0x3c6ef372fe94f82bULL) * 0xd6e8feb86659fd93ULL +
         static_cast<std::uint64_t>(i) * 0x9e3779b97f4a7c15ULL;
}

std::string ms_str(std::vector<int> const &ms)
{
  std::string s = "<";
  for (std::size_t i = 0; i < ms.size(); ++i)
    s += (i ? "," : "") + std::to_string(ms[i]);
  return s + ">";
}

PointedFn random_fn(Rng &g, int m, int n)
{
  PointedFn f{m, n, {}};
  for (int i = 0; i < m; ++i)
    f.map.push_back(static_cast<int>(g.below(n + 1)));
  return f;
}

Val vec_val(std::vector<int> const &v) { return Val::ints(v); }

} // namespace

// ---- pointed functions and smash indexing

PointedFn PointedFn::identity(int n)
{
  PointedFn f{n, n, std::vector<int>(n)};
  std::iota(f.map.begin(), f.map.end(), 1);
  return f;
}

std::vector<PointedFn> PointedFn::all(int m, int n)
{
  std::vector<PointedFn> r;
  std::vector<long> rad(m, n + 1);
  long total = 1;
  for (int i = 0; i < m; ++i)
    total *= n + 1;
  for (long k = 0; k < total; ++k) {
    auto t = decode_tuple(k, rad);
    PointedFn f{m, n, {}};
    for (long v : t)
      f.map.push_back(static_cast<int>(v));
    r.push_back(std::move(f));
  }
  return r;
}

PointedFn PointedFn::point(int n, int i) { return PointedFn{1, n, {i}}; }

std::string PointedFn::str() const
{
  std::string s = "<" + std::to_string(m) + ">-><" + std::to_string(n) + ">[";
  for (std::size_t i = 0; i < map.size(); ++i)
    s += (i ? "," : "") + std::to_string(map[i]);
  return s + "]";
}

PointedFn compose(PointedFn const &g, PointedFn const &f)
{
  if (f.n != g.m)
    throw std::invalid_argument("pointed functions not composable");
  PointedFn h{f.m, g.n, {}};
  for (int i = 1; i <= f.m; ++i)
    h.map.push_back(g(f(i)));
  return h;
}

int product_of(std::vector<int> const &ms)
{
  int p = 1;
  for (int m : ms)
    p *= m;
  return p;
}

int smash_index(std::vector<int> const &ms, std::vector<int> const &is)
{
  int k = 0, w = 1;
  for (std::size_t j = 0; j < ms.size(); ++j) {
    if (is[j] == 0)
      return 0;
    k += (is[j] - 1) * w;
    w *= ms[j];
  }
  return k + 1;
}

std::vector<int> smash_split(std::vector<int> const &ms, int k)
{
  std::vector<int> r(ms.size(), 0);
  if (k == 0)
    return r;
  int rest = k - 1;
  for (std::size_t j = 0; j < ms.size(); ++j) {
    r[j] = rest % ms[j] + 1;
    rest /= ms[j];
  }
  return r;
}

PointedFn smash_fn(std::vector<PointedFn> const &fs)
{
  std::vector<int> ms, ns;
  for (auto const &f : fs) {
    ms.push_back(f.m);
    ns.push_back(f.n);
  }
  PointedFn h{product_of(ms), product_of(ns), {}};
  for (int k = 1; k <= h.m; ++k) {
    auto is = smash_split(ms, k);
    std::vector<int> js;
    for (std::size_t j = 0; j < fs.size(); ++j)
      js.push_back(fs[j](is[j]));
    h.map.push_back(smash_index(ns, js));
  }
  return h;
}

PointedFn smash_permutation(std::vector<int> const &ms, Perm const &s)
{
  auto sm = permute_tuple(s, ms);
  int p = product_of(ms);
  PointedFn r{p, p, std::vector<int>(p, 0)};
  for (int k = 1; k <= p; ++k) {
    auto is = smash_split(ms, k);
    r.map[smash_index(sm, permute_tuple(s, is)) - 1] = k;
  }
  return r;
}

// ---- Gamma-categories

void GammaCategory::require(int n) const
{
  if (n < 0 || n > trunc())
    throw BoundError(name() + ": <" + std::to_string(n) + "> exceeds truncation " +
                     std::to_string(trunc()));
}

PointedFinCategory GammaCategory::at(int n) const
{
  require(n);
  return PointedFinCategory(materialize(*category(n)), basepoint(n));
}

TerminalGamma::TerminalGamma(int trunc)
: n_(trunc), pt_(std::make_shared<FinCategory>(terminal_category()))
{}

CatPtr TerminalGamma::category(int n) const
{
  require(n);
  return pt_;
}

Val TerminalGamma::basepoint(int n) const
{
  require(n);
  return pt_->objects().front();
}

UnitGamma::UnitGamma(int trunc)
: n_(trunc)
{
  for (int n = 0; n <= trunc; ++n) {
    std::vector<Val> obs;
    for (int i = 0; i <= n; ++i)
      obs.push_back(Val(i));
    cats_.push_back(std::make_shared<FinCategory>(discrete_category(obs)));
  }
}

CatPtr UnitGamma::category(int n) const
{
  require(n);
  return cats_[n];
}

Val UnitGamma::push(PointedFn const &f, Val const &x) const
{
  require(f.n);
  return Val(f(static_cast<int>(x.as_int())));
}

Val UnitGamma::push_mor(PointedFn const &f, Val const &p) const
{
  Val y = push(f, p[0]);
  return Val::list({y, y});
}

MonoidPowerGamma::MonoidPowerGamma(Semiring s, int trunc, bool ordered)
: s_(s), n_(trunc), ordered_(ordered && s.ordered())
{}

std::string MonoidPowerGamma::name() const
{
  return "power-" + s_.name() + (ordered_ ? "-ordered" : "");
}

CatPtr MonoidPowerGamma::category(int n) const
{
  require(n);
  std::lock_guard<std::mutex> lk(mu_);
  auto &c = cats_[n];
  if (!c)
    c = std::make_shared<VecFiber>(s_, n, ordered_);
  return c;
}

Val MonoidPowerGamma::basepoint(int n) const
{
  require(n);
  return vec_val(std::vector<int>(n, 0));
}

Val MonoidPowerGamma::push(PointedFn const &f, Val const &x) const
{
  require(f.m);
  require(f.n);
  std::vector<int> y(f.n, s_.zero());
  for (int i = 1; i <= f.m; ++i)
    if (f(i) != 0)
      y[f(i) - 1] = s_.add(y[f(i) - 1], static_cast<int>(x[i - 1].as_int()));
  return vec_val(y);
}

Val MonoidPowerGamma::push_mor(PointedFn const &f, Val const &p) const
{
  return Val::list({push(f, p[0]), push(f, p[1])});
}

TabulatedGamma::TabulatedGamma(std::string name, std::vector<PointedFinCategory> cats,
                               std::map<PointedFn, Push> pushes)
: name_(std::move(name)), cats_(std::move(cats)), pushes_(std::move(pushes))
{
  if (cats_.empty())
    throw StructuralError("Gamma-category needs <0>");
  for (auto const &c : cats_)
    ptrs_.push_back(std::make_shared<FinCategory>(c.cat));
}

CatPtr TabulatedGamma::category(int n) const
{
  require(n);
  return ptrs_[n];
}

Val TabulatedGamma::basepoint(int n) const
{
  require(n);
  return cats_[n].basepoint;
}

Val TabulatedGamma::push(PointedFn const &f, Val const &x) const
{
  require(f.m);
  require(f.n);
  auto it = pushes_.find(f);
  if (it == pushes_.end())
    throw StructuralError(name_ + ": no functor for " + f.str());
  auto jt = it->second.objects.find(x);
  if (jt == it->second.objects.end())
    throw StructuralError(name_ + ": " + f.str() + " undefined on " + x.str());
  return jt->second;
}

Val TabulatedGamma::push_mor(PointedFn const &f, Val const &p) const
{
  require(f.m);
  require(f.n);
  auto it = pushes_.find(f);
  if (it == pushes_.end())
    throw StructuralError(name_ + ": no functor for " + f.str());
  auto jt = it->second.morphisms.find(p);
  if (jt == it->second.morphisms.end())
    throw StructuralError(name_ + ": " + f.str() + " undefined on " + p.str());
  return jt->second;
}

std::shared_ptr<const TabulatedGamma> tabulate_gamma(GammaCategory const &x)
{
  int N = x.trunc();
  std::vector<PointedFinCategory> cats;
  for (int n = 0; n <= N; ++n)
    cats.push_back(x.at(n));
  std::map<PointedFn, TabulatedGamma::Push> pushes;
  for (int m = 0; m <= N; ++m)
    for (int n = 0; n <= N; ++n)
      for (auto const &f : PointedFn::all(m, n)) {
        auto &t = pushes[f];
        for (auto const &o : cats[m].cat.objects())
          t.objects[o] = x.push(f, o);
        for (auto const &mo : cats[m].cat.morphisms())
          t.morphisms[mo.id] = x.push_mor(f, mo.id);
      }
  return std::make_shared<TabulatedGamma>(x.name(), std::move(cats), std::move(pushes));
}

GammaPtr terminal_gamma(int trunc) { return std::make_shared<TerminalGamma>(trunc); }
GammaPtr monoidal_unit_gamma(int trunc) { return std::make_shared<UnitGamma>(trunc); }

namespace {

// all pointed functions among <0..N> when there are few, else empty
std::vector<PointedFn> small_fns(int N, long cap)
{
  long total = 0;
  for (int m = 0; m <= N; ++m)
    for (int n = 0; n <= N; ++n) {
      long c = 1;
      for (int i = 0; i < m && c <= cap; ++i)
        c *= n + 1;
      total += c;
    }
  std::vector<PointedFn> r;
  if (total > cap)
    return r;
  for (int m = 0; m <= N; ++m)
    for (int n = 0; n <= N; ++n)
      for (auto &f : PointedFn::all(m, n))
        r.push_back(std::move(f));
  return r;
}

} // namespace

Report check_gamma(GammaCategory const &x, long count, std::uint64_t seed)
{
  Report rep;
  rep.suite = "gamma." + x.name();
  int N = x.trunc();
  auto fns = small_fns(N, 4096);
  long nf = fns.empty() ? count : static_cast<long>(fns.size());
  auto fn_at = [&](long i, Rng &g) {
    if (!fns.empty())
      return fns[i];
    int m = static_cast<int>(g.below(N + 1)), n = static_cast<int>(g.below(N + 1));
    return random_fn(g, m, n);
  };
  {
    auto c0 = x.category(0);
    auto obs = c0->objects();
    bool ok = obs.size() == 1 && c0->hom(obs[0], obs[0]).size() == 1 && obs[0] == x.basepoint(0);
    rep.add(single_check("gamma.zero-terminal", "value at <0> is terminal", ok,
                         ok ? "" : std::to_string(obs.size()) + " objects at <0>"));
  }
  rep.add(run_check("gamma.basepoint", "pushforwards preserve basepoints", nf, [&](long i) {
    Rng g(mix(seed, i));
    PointedFn f = fn_at(i, g);
    Val b = x.basepoint(f.m);
    if (!x.category(f.m)->has_object(b))
      return "basepoint of <" + std::to_string(f.m) + "> is not an object";
    std::string w = neq(f.str(), x.push(f, b), x.basepoint(f.n));
    if (w.empty())
      w = neq(f.str() + " identity", x.push_mor(f, x.category(f.m)->id(b)),
              x.category(f.n)->id(x.basepoint(f.n)));
    return w;
  }));
  rep.add(run_check("gamma.functor", "each pushforward is a functor", nf, [&](long i) {
    Rng g(mix(seed + 1, i));
    PointedFn f = fn_at(i, g);
    auto src = x.category(f.m), tgt = x.category(f.n);
    auto obs = src->objects();
    for (int t = 0; t < 3; ++t) {
      Val a = obs[g.below(static_cast<long>(obs.size()))];
      Val p = sample_morphism(*src, a, obs, g);
      Val q = sample_morphism(*src, src->cod(p), obs, g);
      Val fp = x.push_mor(f, p);
      if (!tgt->has_object(x.push(f, a)))
        return f.str() + " sends " + a.str() + " outside <" + std::to_string(f.n) + ">";
      std::string w = neq(f.str() + " domain", tgt->dom(fp), x.push(f, a));
      if (w.empty())
        w = neq(f.str() + " identity", x.push_mor(f, src->id(a)), tgt->id(x.push(f, a)));
      if (w.empty())
        w = neq(f.str() + " composite", x.push_mor(f, src->compose(q, p)),
                tgt->compose(x.push_mor(f, q), fp));
      if (!w.empty())
        return w;
    }
    return std::string();
  }));
  rep.add(run_check("gamma.identity", "identity functions act trivially", N + 1, [&](long n) {
    auto c = x.category(static_cast<int>(n));
    auto idf = PointedFn::identity(static_cast<int>(n));
    for (auto const &a : c->objects())
      for (auto const &b : c->objects())
        for (auto const &p : c->hom(a, b)) {
          std::string w = neq(std::to_string(n) + " on " + p.str(), x.push_mor(idf, p), p);
          if (!w.empty())
            return w;
        }
    return std::string();
  }));
  rep.add(run_check("gamma.composition", "pushforward along composites", count, [&](long i) {
    Rng g(mix(seed + 2, i));
    int m = static_cast<int>(g.below(N + 1)), n = static_cast<int>(g.below(N + 1)),
        k = static_cast<int>(g.below(N + 1));
    PointedFn f = random_fn(g, m, n), h = random_fn(g, n, k);
    auto src = x.category(m);
    auto obs = src->objects();
    Val a = obs[g.below(static_cast<long>(obs.size()))];
    Val p = sample_morphism(*src, a, obs, g);
    PointedFn hf = compose(h, f);
    std::string w = neq(f.str() + " then " + h.str(), x.push(hf, a), x.push(h, x.push(f, a)));
    if (w.empty())
      w = neq(f.str() + " then " + h.str() + " on " + p.str(), x.push_mor(hf, p),
              x.push_mor(h, x.push_mor(f, p)));
    return w;
  }));
  return rep;
}

// ---- smash

PointedFinCategory smash(std::vector<PointedFinCategory> const &cats)
{
  if (cats.empty())
    return PointedFinCategory(discrete_category({Val(0), Val(1)}), Val(0));
  for (auto const &c : cats) {
    std::set<std::pair<Val, Val>> seen;
    for (auto const &m : c.cat.morphisms())
      if (!seen.insert({m.dom, m.cod}).second)
        throw StructuralError("smash is implemented for thin categories only");
  }
  auto thin = [](FinCategory const &c, Val const &a, Val const &b) {
    return !c.hom(a, b).empty();
  };
  std::vector<Val> base;
  std::vector<std::vector<Val>> free;  // non-basepoint objects per factor
  std::vector<long> rad;
  for (auto const &c : cats) {
    base.push_back(c.basepoint);
    free.emplace_back();
    for (auto const &o : c.cat.objects())
      if (o != c.basepoint)
        free.back().push_back(o);
    rad.push_back(static_cast<long>(free.back().size()));
  }
  Val star = Val::list(base);
  std::vector<Val> obs{star};
  long total = 1;
  for (long r : rad)
    total *= r;
  for (long k = 0; k < total; ++k) {
    auto t = decode_tuple(k, rad);
    std::vector<Val> tup;
    for (std::size_t j = 0; j < cats.size(); ++j)
      tup.push_back(free[j][t[j]]);
    obs.push_back(Val::list(tup));
  }
  std::size_t n = obs.size();
  std::vector<std::vector<char>> le(n, std::vector<char>(n, 0));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      bool r = false;
      if (u == v)
        r = true;
      else if (u == 0 || v == 0) {
        for (std::size_t j = 0; j < cats.size() && !r; ++j)
          r = u == 0 ? thin(cats[j].cat, base[j], obs[v][j]) : thin(cats[j].cat, obs[u][j], base[j]);
      } else {
        r = true;
        for (std::size_t j = 0; j < cats.size() && r; ++j)
          r = thin(cats[j].cat, obs[u][j], obs[v][j]);
      }
      le[u][v] = r;
    }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t u = 0; u < n; ++u)
      if (le[u][k])
        for (std::size_t v = 0; v < n; ++v)
          if (le[k][v])
            le[u][v] = 1;
  std::map<Val, std::size_t> idx;
  for (std::size_t u = 0; u < n; ++u)
    idx[obs[u]] = u;
  auto cat = preorder_category(obs, [&](Val const &a, Val const &b) {
    return le[idx.at(a)][idx.at(b)] != 0;
  });
  return PointedFinCategory(std::move(cat), star);
}

// ---- multimaps

ProductMultimap::ProductMultimap(std::vector<GammaPtr> sources, GammaPtr target, int c)
: src_(std::move(sources)), tgt_(std::move(target)), c_(c)
{
  auto const *t = dynamic_cast<MonoidPowerGamma const *>(tgt_.get());
  if (!t)
    throw StructuralError("product multimap needs monoid power Gamma-categories");
  s_ = t->semiring();
  for (auto const &x : src_) {
    auto const *p = dynamic_cast<MonoidPowerGamma const *>(x.get());
    if (!p || !(p->semiring() == s_))
      throw StructuralError("product multimap needs one semiring throughout");
  }
  if (c_ < 0 || c_ >= s_.size())
    throw StructuralError("scalar outside the semiring");
}

Val ProductMultimap::obj(std::vector<int> const &ms, std::vector<Val> const &xs) const
{
  int p = product_of(ms);
  std::vector<int> r;
  for (int k = 1; k <= p; ++k) {
    auto is = smash_split(ms, k);
    int v = c_;
    for (std::size_t j = 0; j < ms.size(); ++j)
      v = s_.mul(v, static_cast<int>(xs[j][is[j] - 1].as_int()));
    r.push_back(v);
  }
  return vec_val(r);
}

Val ProductMultimap::mor(std::vector<int> const &ms, std::vector<Val> const &ps) const
{
  std::vector<Val> d, c;
  for (auto const &p : ps) {
    d.push_back(p[0]);
    c.push_back(p[1]);
  }
  return Val::list({obj(ms, d), obj(ms, c)});
}

Val ConstantMultimap::mor(std::vector<int> const &, std::vector<Val> const &) const
{
  return z_->category(1)->id(x_);
}

CompositeMultimap::CompositeMultimap(GMapPtr outer, std::vector<GMapPtr> inner)
: outer_(std::move(outer)), inner_(std::move(inner))
{
  if (static_cast<int>(inner_.size()) != outer_->arity())
    throw StructuralError("composite: arity mismatch");
  for (auto const &f : inner_)
    for (auto const &x : f->sources())
      src_.push_back(x);
}

template <class F>
Val CompositeMultimap::apply(std::vector<int> const &ms, std::vector<Val> const &xs, F f) const
{
  std::vector<int> outer_ms;
  std::vector<Val> ys;
  std::size_t pos = 0;
  for (auto const &in : inner_) {
    std::size_t k = static_cast<std::size_t>(in->arity());
    std::vector<int> bm(ms.begin() + pos, ms.begin() + pos + k);
    std::vector<Val> bx(xs.begin() + pos, xs.begin() + pos + k);
    outer_ms.push_back(product_of(bm));
    ys.push_back(f(*in, bm, bx));
    pos += k;
  }
  return f(*outer_, outer_ms, ys);
}

Val CompositeMultimap::obj(std::vector<int> const &ms, std::vector<Val> const &xs) const
{
  return apply(ms, xs, [](GammaMultimap const &g, std::vector<int> const &m,
                          std::vector<Val> const &x) { return g.obj(m, x); });
}

Val CompositeMultimap::mor(std::vector<int> const &ms, std::vector<Val> const &ps) const
{
  return apply(ms, ps, [](GammaMultimap const &g, std::vector<int> const &m,
                          std::vector<Val> const &x) { return g.mor(m, x); });
}

SigmaMultimap::SigmaMultimap(GMapPtr f, Perm s)
: f_(std::move(f)), s_(std::move(s))
{
  if (s_.size() != f_->arity())
    throw StructuralError("sigma action: arity mismatch");
  auto fs = f_->sources();
  for (int j = 1; j <= s_.size(); ++j)
    src_.push_back(fs[s_(j) - 1]);
}

Val SigmaMultimap::obj(std::vector<int> const &ms, std::vector<Val> const &xs) const
{
  return target()->push(smash_permutation(ms, s_),
                        f_->obj(permute_tuple(s_, ms), permute_tuple(s_, xs)));
}

Val SigmaMultimap::mor(std::vector<int> const &ms, std::vector<Val> const &ps) const
{
  return target()->push_mor(smash_permutation(ms, s_),
                            f_->mor(permute_tuple(s_, ms), permute_tuple(s_, ps)));
}

GMapPtr gamma(GMapPtr f, std::vector<GMapPtr> const &inner)
{
  return std::make_shared<CompositeMultimap>(std::move(f), inner);
}

GMapPtr sigma_act(GMapPtr f, Perm const &s)
{
  return std::make_shared<SigmaMultimap>(std::move(f), s);
}

// ---- 2-cells

Val IdentityGammaMod::component(std::vector<int> const &ms, std::vector<Val> const &xs) const
{
  return f_->target()->category(product_of(ms))->id(f_->obj(ms, xs));
}

ScalarGammaMod::ScalarGammaMod(std::shared_ptr<const ProductMultimap> lo,
                               std::shared_ptr<const ProductMultimap> hi)
: lo_(std::move(lo)), hi_(std::move(hi))
{
  auto const *t = dynamic_cast<MonoidPowerGamma const *>(lo_->target().get());
  if (!t || !t->ordered() || lo_->scalar() > hi_->scalar() || lo_->arity() != hi_->arity())
    throw StructuralError("scalar 2-cell needs c <= c' over an ordered semiring");
}

Val ScalarGammaMod::component(std::vector<int> const &ms, std::vector<Val> const &xs) const
{
  return Val::list({lo_->obj(ms, xs), hi_->obj(ms, xs)});
}

Val VerticalGammaMod::component(std::vector<int> const &ms, std::vector<Val> const &xs) const
{
  auto c = g_->target()->target()->category(product_of(ms));
  return c->compose(g_->component(ms, xs), f_->component(ms, xs));
}

CompositeGammaMod::CompositeGammaMod(GModPtr outer, std::vector<GModPtr> inner)
: outer_(std::move(outer)), inner_(std::move(inner))
{
  std::vector<GMapPtr> s, t;
  for (auto const &in : inner_) {
    s.push_back(in->source());
    t.push_back(in->target());
  }
  src_ = gamma(outer_->source(), s);
  tgt_ = gamma(outer_->target(), t);
}

// theta<G_j y> o F<theta_j>
Val CompositeGammaMod::component(std::vector<int> const &ms, std::vector<Val> const &xs) const
{
  std::vector<int> outer_ms;
  std::vector<Val> fin, gobj;
  std::size_t pos = 0;
  for (auto const &in : inner_) {
    std::size_t k = static_cast<std::size_t>(in->source()->arity());
    std::vector<int> bm(ms.begin() + pos, ms.begin() + pos + k);
    std::vector<Val> bx(xs.begin() + pos, xs.begin() + pos + k);
    outer_ms.push_back(product_of(bm));
    fin.push_back(in->component(bm, bx));
    gobj.push_back(in->target()->obj(bm, bx));
    pos += k;
  }
  auto c = outer_->target()->target()->category(product_of(ms));
  return c->compose(outer_->component(outer_ms, gobj), outer_->source()->mor(outer_ms, fin));
}

SigmaGammaMod::SigmaGammaMod(GModPtr t, Perm s)
: t_(std::move(t)), s_(std::move(s))
{
  src_ = sigma_act(t_->source(), s_);
  tgt_ = sigma_act(t_->target(), s_);
}

Val SigmaGammaMod::component(std::vector<int> const &ms, std::vector<Val> const &xs) const
{
  return t_->target()->target()->push_mor(
      smash_permutation(ms, s_), t_->component(permute_tuple(s_, ms), permute_tuple(s_, xs)));
}

GModPtr gamma(GModPtr t, std::vector<GModPtr> const &inner)
{
  return std::make_shared<CompositeGammaMod>(std::move(t), inner);
}

GModPtr sigma_act(GModPtr t, Perm const &s)
{
  return std::make_shared<SigmaGammaMod>(std::move(t), s);
}

GModPtr vertical(GModPtr second, GModPtr first)
{
  return std::make_shared<VerticalGammaMod>(std::move(second), std::move(first));
}

namespace {

class ConstantGammaMod : public GammaTwoCell
{
public:
  ConstantGammaMod(GMapPtr s, GMapPtr t, Val p)
  : s_(std::move(s)), t_(std::move(t)), p_(std::move(p))
  {}
  GMapPtr source() const override { return s_; }
  GMapPtr target() const override { return t_; }
  Val component(std::vector<int> const &, std::vector<Val> const &) const override { return p_; }

private:
  GMapPtr s_, t_;
  Val p_;
};

// a tuple <m_j> within the source truncations and mmax, product within Z
std::vector<int> sample_ms(std::vector<GammaPtr> const &srcs, GammaCategory const &z, int mmax,
                           Rng &g)
{
  std::vector<int> ms(srcs.size(), 0);
  for (int attempt = 0; attempt < 50; ++attempt) {
    for (std::size_t j = 0; j < srcs.size(); ++j)
      ms[j] = static_cast<int>(g.below(std::min(mmax, srcs[j]->trunc()) + 1));
    if (product_of(ms) <= z.trunc())
      return ms;
  }
  std::fill(ms.begin(), ms.end(), srcs.empty() ? 0 : 1);
  if (product_of(ms) > z.trunc())
    std::fill(ms.begin(), ms.end(), 0);
  return ms;
}

struct GInput
{
  std::vector<int> ms;
  std::vector<Val> xs, ys, ps;  // ps: xs -> ys
};

GInput sample_ginput(std::vector<GammaPtr> const &srcs, GammaCategory const &z, int mmax, Rng &g)
{
  GInput in;
  in.ms = sample_ms(srcs, z, mmax, g);
  for (std::size_t j = 0; j < srcs.size(); ++j) {
    auto c = srcs[j]->category(in.ms[j]);
    auto obs = c->objects();
    Val x = obs[g.below(static_cast<long>(obs.size()))];
    Val p = sample_morphism(*c, x, obs, g);
    in.xs.push_back(x);
    in.ys.push_back(c->cod(p));
    in.ps.push_back(p);
  }
  return in;
}

} // namespace

Report check_gamma_multimap(GammaMultimap const &f, GSample const &s)
{
  Report rep;
  rep.suite = "gamma-multimap";
  auto srcs = f.sources();
  auto z = f.target();
  int n = f.arity();
  rep.add(run_check("gmap.typing", "components land in the target", s.count, [&](long i) {
    Rng g(mix(s.seed, i));
    auto in = sample_ginput(srcs, *z, s.mmax, g);
    auto c = z->category(product_of(in.ms));
    Val y = f.obj(in.ms, in.xs);
    if (!c->has_object(y))
      return ms_str(in.ms) + ": " + y.str() + " is not an object";
    Val p = f.mor(in.ms, in.ps);
    std::string w = neq(ms_str(in.ms) + " domain", c->dom(p), y);
    if (w.empty())
      w = neq(ms_str(in.ms) + " codomain", c->cod(p), f.obj(in.ms, in.ys));
    return w;
  }));
  rep.add(run_check("gmap.functor", "components are functors", s.count, [&](long i) {
    Rng g(mix(s.seed + 1, i));
    auto in = sample_ginput(srcs, *z, s.mmax, g);
    auto c = z->category(product_of(in.ms));
    std::vector<Val> ids, qs, qps;
    for (int j = 0; j < n; ++j) {
      auto cj = srcs[j]->category(in.ms[j]);
      auto obs = cj->objects();
      ids.push_back(cj->id(in.xs[j]));
      Val q = sample_morphism(*cj, in.ys[j], obs, g);
      qs.push_back(q);
      qps.push_back(cj->compose(q, in.ps[j]));
    }
    std::string w = neq(ms_str(in.ms) + " identity", f.mor(in.ms, ids), c->id(f.obj(in.ms, in.xs)));
    if (w.empty())
      w = neq(ms_str(in.ms) + " composite", f.mor(in.ms, qps),
              c->compose(f.mor(in.ms, qs), f.mor(in.ms, in.ps)));
    return w;
  }));
  if (n > 0)
    rep.add(run_check("gmap.pointed", "basepoint entries collapse", s.count, [&](long i) {
      Rng g(mix(s.seed + 2, i));
      auto in = sample_ginput(srcs, *z, s.mmax, g);
      int j = static_cast<int>(g.below(n));
      in.xs[j] = srcs[j]->basepoint(in.ms[j]);
      int p = product_of(in.ms);
      std::vector<Val> ps;
      for (int l = 0; l < n; ++l)
        ps.push_back(srcs[l]->category(in.ms[l])->id(in.xs[l]));
      std::string w = neq(ms_str(in.ms) + " object", f.obj(in.ms, in.xs), z->basepoint(p));
      if (w.empty())
        w = neq(ms_str(in.ms) + " identity", f.mor(in.ms, ps),
                z->category(p)->id(z->basepoint(p)));
      return w;
    }));
  rep.add(run_check("gmap.naturality", "naturality in pointed functions", s.count, [&](long i) {
    Rng g(mix(s.seed + 3, i));
    auto in = sample_ginput(srcs, *z, s.mmax, g);
    auto ns = sample_ms(srcs, *z, s.mmax, g);
    std::vector<PointedFn> fs;
    std::vector<Val> pushed, pushed_mor;
    for (int j = 0; j < n; ++j) {
      fs.push_back(random_fn(g, in.ms[j], ns[j]));
      pushed.push_back(srcs[j]->push(fs[j], in.xs[j]));
      pushed_mor.push_back(srcs[j]->push_mor(fs[j], in.ps[j]));
    }
    PointedFn h = smash_fn(fs);
    std::string w = neq(ms_str(in.ms) + " to " + ms_str(ns), z->push(h, f.obj(in.ms, in.xs)),
                        f.obj(ns, pushed));
    if (w.empty())
      w = neq(ms_str(in.ms) + " to " + ms_str(ns) + " on morphisms",
              z->push_mor(h, f.mor(in.ms, in.ps)), f.mor(ns, pushed_mor));
    return w;
  }));
  return rep;
}

Report check_gamma_mod(GammaTwoCell const &t, GSample const &s)
{
  Report rep;
  rep.suite = "gamma-mod";
  auto f = t.source(), h = t.target();
  auto srcs = f->sources();
  auto z = f->target();
  int n = f->arity();
  rep.add(run_check("gmod.typing", "components run from source to target", s.count, [&](long i) {
    Rng g(mix(s.seed + 4, i));
    auto in = sample_ginput(srcs, *z, s.mmax, g);
    auto c = z->category(product_of(in.ms));
    Val th = t.component(in.ms, in.xs);
    std::string w = neq(ms_str(in.ms) + " domain", c->dom(th), f->obj(in.ms, in.xs));
    if (w.empty())
      w = neq(ms_str(in.ms) + " codomain", c->cod(th), h->obj(in.ms, in.xs));
    return w;
  }));
  rep.add(run_check("gmod.naturality", "components are natural", s.count, [&](long i) {
    Rng g(mix(s.seed + 5, i));
    auto in = sample_ginput(srcs, *z, s.mmax, g);
    auto c = z->category(product_of(in.ms));
    return neq(ms_str(in.ms),
               c->compose(h->mor(in.ms, in.ps), t.component(in.ms, in.xs)),
               c->compose(t.component(in.ms, in.ys), f->mor(in.ms, in.ps)));
  }));
  rep.add(run_check("gmod.modification", "compatibility with pointed functions", s.count,
                    [&](long i) {
                      Rng g(mix(s.seed + 6, i));
                      auto in = sample_ginput(srcs, *z, s.mmax, g);
                      auto ns = sample_ms(srcs, *z, s.mmax, g);
                      std::vector<PointedFn> fs;
                      std::vector<Val> pushed;
                      for (int j = 0; j < n; ++j) {
                        fs.push_back(random_fn(g, in.ms[j], ns[j]));
                        pushed.push_back(srcs[j]->push(fs[j], in.xs[j]));
                      }
                      return neq(ms_str(in.ms) + " to " + ms_str(ns),
                                 z->push_mor(smash_fn(fs), t.component(in.ms, in.xs)),
                                 t.component(ns, pushed));
                    }));
  return rep;
}

std::string diff_gmap(GammaMultimap const &a, GammaMultimap const &b, GSample const &s)
{
  if (a.arity() != b.arity())
    return "arities " + std::to_string(a.arity()) + " and " + std::to_string(b.arity());
  auto srcs = a.sources();
  auto z = a.target();
  for (long i = 0; i < s.count; ++i) {
    Rng g(mix(s.seed + 7, i));
    auto in = sample_ginput(srcs, *z, s.mmax, g);
    std::string w = neq(ms_str(in.ms) + " at " + Val::list(in.xs).str(), a.obj(in.ms, in.xs),
                        b.obj(in.ms, in.xs));
    if (w.empty())
      w = neq(ms_str(in.ms) + " at " + Val::list(in.ps).str(), a.mor(in.ms, in.ps),
              b.mor(in.ms, in.ps));
    if (!w.empty())
      return w;
  }
  return "";
}

std::string diff_gmod(GammaTwoCell const &a, GammaTwoCell const &b, GSample const &s)
{
  std::string w = diff_gmap(*a.source(), *b.source(), s);
  if (!w.empty())
    return "source: " + w;
  w = diff_gmap(*a.target(), *b.target(), s);
  if (!w.empty())
    return "target: " + w;
  auto srcs = a.source()->sources();
  auto z = a.source()->target();
  for (long i = 0; i < s.count; ++i) {
    Rng g(mix(s.seed + 8, i));
    auto in = sample_ginput(srcs, *z, s.mmax, g);
    w = neq(ms_str(in.ms) + " at " + Val::list(in.xs).str(), a.component(in.ms, in.xs),
            b.component(in.ms, in.xs));
    if (!w.empty())
      return w;
  }
  return "";
}

// ---- A

AObject::AObject(GammaPtr x)
: x_(std::move(x)), d_(instance_mandellA())
{}

CatPtr AObject::fiber(Obj const &a) const
{
  std::vector<CatPtr> fs;
  for (int m : a)
    fs.push_back(x_->category(m));
  return std::make_shared<ProductCategory>(std::move(fs));
}

std::vector<Val> AObject::fiber_objects(Obj const &a) const { return fiber(a)->objects(); }

PointedFn block_component(Mor const &f, int i, int j)
{
  int si = 0, sj = 0;
  for (int k = 0; k < i; ++k)
    si += f.dom[k];
  for (int k = 0; k < j; ++k)
    sj += f.cod[k];
  PointedFn r{f.dom[i], f.cod[j], {}};
  for (int u = 1; u <= f.dom[i]; ++u) {
    int t = f.map[si + u - 1];
    r.map.push_back(t > sj && t <= sj + f.cod[j] ? t - sj : 0);
  }
  return r;
}

template <class F>
Val AObject::along(Mor const &f, Val const &x, F apply, bool morphism) const
{
  int p = static_cast<int>(f.dom.size()), q = static_cast<int>(f.cod.size());
  std::vector<int> owner(q, -1);
  int u = 0;
  for (int i = 0; i < p; ++i)
    for (int k = 0; k < f.dom[i]; ++k, ++u) {
      int t = f.map[u], j = 0, acc = 0;
      while (t > acc + f.cod[j])
        acc += f.cod[j++];
      owner[j] = i;
    }
  std::vector<Val> r;
  for (int j = 0; j < q; ++j) {
    if (owner[j] < 0) {
      Val b = x_->basepoint(f.cod[j]);
      r.push_back(morphism ? x_->category(f.cod[j])->id(b) : b);
    } else {
      r.push_back(apply(block_component(f, owner[j], j), x[owner[j]]));
    }
  }
  return Val::list(std::move(r));
}

Val AObject::push(Mor const &f, Val const &x) const
{
  return along(f, x, [&](PointedFn const &h, Val const &v) { return x_->push(h, v); }, false);
}

Val AObject::push_mor(Mor const &f, Val const &p) const
{
  return along(f, p, [&](PointedFn const &h, Val const &v) { return x_->push_mor(h, v); }, true);
}

Val AObject::sum(Obj const &, Obj const &, Val const &x, Val const &y) const
{
  std::vector<Val> r = x.items();
  r.insert(r.end(), y.items().begin(), y.items().end());
  return Val::list(std::move(r));
}

Val AObject::sum_mor(Obj const &a, Obj const &b, Val const &p, Val const &q) const
{
  return sum(a, b, p, q);
}

AMultimap::AMultimap(GMapPtr f, std::vector<AsmfPtr> sources, AsmfPtr target)
: f_(std::move(f)), src_(std::move(sources)), tgt_(std::move(target))
{}

// blocks of a_1 (x) ... (x) a_n with the first index fastest
template <class F>
Val AMultimap::apply(std::vector<Obj> const &as, std::vector<Val> const &xs, F f) const
{
  std::vector<long> rad;
  long total = 1;
  for (auto const &a : as) {
    rad.push_back(static_cast<long>(a.size()));
    total *= rad.back();
  }
  std::vector<Val> r;
  for (long k = 0; k < total; ++k) {
    auto t = decode_tuple(k, rad);
    std::vector<int> ms;
    std::vector<Val> ys;
    for (std::size_t j = 0; j < as.size(); ++j) {
      ms.push_back(as[j][t[j]]);
      ys.push_back(xs[j][t[j]]);
    }
    r.push_back(f(ms, ys));
  }
  return Val::list(std::move(r));
}

Val AMultimap::obj(std::vector<Obj> const &as, std::vector<Val> const &xs) const
{
  return apply(as, xs, [&](std::vector<int> const &ms, std::vector<Val> const &ys) {
    return f_->obj(ms, ys);
  });
}

Val AMultimap::mor(std::vector<Obj> const &as, std::vector<Val> const &ps) const
{
  return apply(as, ps, [&](std::vector<int> const &ms, std::vector<Val> const &ys) {
    return f_->mor(ms, ys);
  });
}

Val AModification::component(std::vector<Obj> const &as, std::vector<Val> const &xs) const
{
  std::vector<long> rad;
  long total = 1;
  for (auto const &a : as) {
    rad.push_back(static_cast<long>(a.size()));
    total *= rad.back();
  }
  std::vector<Val> r;
  for (long k = 0; k < total; ++k) {
    auto t = decode_tuple(k, rad);
    std::vector<int> ms;
    std::vector<Val> ys;
    for (std::size_t j = 0; j < as.size(); ++j) {
      ms.push_back(as[j][t[j]]);
      ys.push_back(xs[j][t[j]]);
    }
    r.push_back(t_->component(ms, ys));
  }
  return Val::list(std::move(r));
}

AsmfPtr AFunctor::object(GammaPtr const &x) const
{
  std::lock_guard<std::mutex> lk(mu_);
  auto &slot = cache_[x.get()];
  if (!slot)
    slot = std::make_shared<AObject>(x);
  return slot;
}

NatPtr AFunctor::multimap(GMapPtr const &f) const
{
  std::vector<AsmfPtr> src;
  for (auto const &x : f->sources())
    src.push_back(object(x));
  return std::make_shared<AMultimap>(f, std::move(src), object(f->target()));
}

ModPtr AFunctor::modification(GModPtr const &t) const
{
  return std::make_shared<AModification>(t, multimap(t->source()), multimap(t->target()));
}

Val A_arity0(GammaMultimap const &f)
{
  if (f.arity() != 0)
    throw StructuralError("A_arity0 needs an arity-0 multimap");
  return f.obj({}, {});
}

GMapPtr A_arity0_inverse(GammaPtr z, Val const &x)
{
  if (!z->category(1)->has_object(x))
    throw StructuralError(x.str() + " is not an object of Z<1>");
  return std::make_shared<ConstantMultimap>(std::move(z), x);
}

Val A_arity0_mor(GammaTwoCell const &t)
{
  if (t.source()->arity() != 0)
    throw StructuralError("A_arity0 needs an arity-0 2-cell");
  return t.component({}, {});
}

GModPtr A_arity0_inverse_mor(GammaPtr z, Val const &p)
{
  auto c = z->category(1);
  auto s = A_arity0_inverse(z, c->dom(p));
  auto t = A_arity0_inverse(z, c->cod(p));
  return std::make_shared<ConstantGammaMod>(s, t, p);
}

std::vector<Val> arity0_components(GammaMultimap const &f, int n)
{
  Val x = A_arity0(f);
  auto z = f.target();
  std::vector<Val> r;
  for (int i = 0; i <= n; ++i)
    r.push_back(z->push(PointedFn::point(n, i), x));
  return r;
}

Report check_A_arity0(GammaPtr z, std::vector<GMapPtr> const &samples, GSample const &s)
{
  Report rep;
  rep.suite = "A.arity0";
  auto c1 = materialize(*z->category(1));
  auto obs = c1.objects();
  auto const &mors = c1.morphisms();
  long no = static_cast<long>(obs.size()), ns = static_cast<long>(samples.size());
  rep.add(run_check("a0.objects", "bijective on objects", no + ns, [&](long i) {
    if (i < no)
      return neq(obs[i].str(), A_arity0(*A_arity0_inverse(z, obs[i])), obs[i]);
    auto const &f = samples[i - no];
    std::string w = diff_gmap(*A_arity0_inverse(z, A_arity0(*f)), *f, s);
    return w.empty() ? w : "sample " + std::to_string(i - no) + ": " + w;
  }));
  rep.add(run_check("a0.morphisms", "bijective on morphisms",
                    static_cast<long>(mors.size()) + ns, [&](long i) {
                      if (i < static_cast<long>(mors.size())) {
                        Val p = mors[i].id;
                        return neq(p.str(), A_arity0_mor(*A_arity0_inverse_mor(z, p)), p);
                      }
                      auto const &f = samples[i - mors.size()];
                      IdentityGammaMod idm(f);
                      auto back = A_arity0_inverse_mor(z, A_arity0_mor(idm));
                      return diff_gmod(*back, idm, s);
                    }));
  int nmax = std::min(z->trunc(), 3);
  std::vector<PointedFn> fns;
  for (int m = 0; m <= nmax; ++m)
    for (int n = 0; n <= nmax; ++n)
      for (auto &f : PointedFn::all(m, n))
        fns.push_back(std::move(f));
  std::vector<GMapPtr> all = samples;
  for (auto const &x : obs)
    all.push_back(A_arity0_inverse(z, x));
  rep.add(run_check("a0.naturality", "components natural in pointed functions",
                    static_cast<long>(fns.size() * all.size()), [&](long i) {
                      auto const &f = fns[i % fns.size()];
                      auto const &F = *all[i / fns.size()];
                      auto cm = arity0_components(F, f.m), cn = arity0_components(F, f.n);
                      for (int k = 0; k <= f.m; ++k) {
                        std::string w = neq(f.str() + " at " + std::to_string(k),
                                            F.target()->push(f, cm[k]), cn[f(k)]);
                        if (!w.empty())
                          return w;
                      }
                      return std::string();
                    }));
  return rep;
}

// ---- P

GroPtr inverse_K(GammaPtr x, std::vector<Obj> const &bound)
{
  return build_grothendieck(std::make_shared<AObject>(std::move(x)), bound);
}

Val P_pseudo_sigma(GammaMultimap const &f, Perm const &s, std::vector<Val> const &objs)
{
  auto d = instance_mandellA();
  std::vector<Obj> as;
  std::vector<Val> xs;
  for (auto const &o : objs) {
    as.push_back(val_obj(o[0]));
    xs.push_back(o[1]);
  }
  auto fs = f.sources();
  std::vector<AsmfPtr> src;
  for (auto const &x : fs)
    src.push_back(std::make_shared<AObject>(x));
  auto zt = std::make_shared<AObject>(f.target());
  AMultimap af(std::shared_ptr<const GammaMultimap>(&f, [](GammaMultimap const *) {}), src, zt);
  auto sas = permute_tuple(s, as);
  Val there = af.obj(sas, permute_tuple(s, xs));
  // the coherence iso (x) s<a> -> (x) a, inverted
  Mor back = d->permute_tensor(sas, s);
  Mor f1 = d->inverse(back);
  Val here = zt->push(back, there);
  return Val::list({Val::list({obj_val(d->times_all(as)), here}), mor_val(f1),
                    zt->fiber(d->times_all(sas))->id(there)});
}

Report check_P_terminal(GroPtr p, std::shared_ptr<const DCategory> d)
{
  Report rep;
  rep.suite = "P.terminal";
  auto pobs = p->objects();
  auto dobs = d->objects();
  {
    std::set<Val> img;
    std::string w;
    for (auto const &o : pobs)
      if (!img.insert(o[0]).second && w.empty())
        w = "two objects over " + o[0].str();
    std::set<Val> want(dobs.begin(), dobs.end());
    if (w.empty() && img != want)
      w = std::to_string(img.size()) + " images for " + std::to_string(want.size()) + " objects";
    rep.add(single_check("pterm.objects", "(m,*) |-> m is bijective on objects", w.empty(), w));
  }
  long n = static_cast<long>(pobs.size());
  rep.add(run_check("pterm.morphisms", "(f,1) |-> f is bijective on hom-sets", n * n,
                    [&](long i) {
                      Val const &u = pobs[i / n];
                      Val const &v = pobs[i % n];
                      auto dh = d->hom(u[0], v[0]);
                      auto ph = p->hom(u, v);
                      std::set<Val> img;
                      for (auto const &m : ph)
                        img.insert(m[1]);
                      std::set<Val> want(dh.begin(), dh.end());
                      if (img.size() != ph.size() || img != want)
                        return u.str() + " to " + v.str() + ": " + std::to_string(ph.size()) +
                               " morphisms, " + std::to_string(img.size()) + " images, " +
                               std::to_string(want.size()) + " expected";
                      return std::string();
                    }));
  rep.add(run_check("pterm.monoidal", "strict symmetric monoidal", n * n, [&](long i) {
    Val const &u = pobs[i / n];
    Val const &v = pobs[i % n];
    std::string w = neq("unit", p->unit()[0], d->unit());
    if (w.empty())
      w = neq(u.str() + " " + v.str(), p->tensor(u, v)[0], d->tensor(u[0], v[0]));
    if (w.empty())
      w = neq("braiding " + u.str() + " " + v.str(), p->braid(u, v)[1], d->braid(u[0], v[0]));
    if (w.empty())
      w = neq("identity sum " + u.str() + " " + v.str(),
              p->tensor_mor(p->id(u), p->id(v))[1], d->tensor_mor(d->id(u[0]), d->id(v[0])));
    return w;
  }));
  return rep;
}

} // namespace bpk
