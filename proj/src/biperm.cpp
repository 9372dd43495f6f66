#include "bipermkit/biperm.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bpk {

namespace {

struct Layout
{
  std::vector<int> sizes, start;  // per block; start is 0-based offset
  std::vector<int> blk, off;      // per element (1-based index), off is 1-based
  int card = 0;
};

Layout layout_of(std::vector<int> const &sizes)
{
  Layout l;
  l.sizes = sizes;
  int s = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    l.start.push_back(s);
    s += sizes[i];
  }
  l.card = s;
  l.blk.assign(s + 1, -1);
  l.off.assign(s + 1, 0);
  for (std::size_t i = 0; i < sizes.size(); ++i)
    for (int x = 1; x <= sizes[i]; ++x) {
      l.blk[l.start[i] + x] = static_cast<int>(i);
      l.off[l.start[i] + x] = x;
    }
  return l;
}

// flat index of (u,v) in a (x) b
int pair_idx(Layout const &a, Layout const &b, int u, int v)
{
  int i = a.blk[u], x = a.off[u];
  int j = b.blk[v], y = b.off[v];
  return a.card * b.start[j] + b.sizes[j] * a.start[i] + x + (y - 1) * a.sizes[i];
}

// calls fn(u, v) for the elements of a (x) b in flat order
template <class Fn>
void for_each_pair(Layout const &a, Layout const &b, Fn fn)
{
  for (std::size_t j = 0; j < b.sizes.size(); ++j)
    for (std::size_t i = 0; i < a.sizes.size(); ++i)
      for (int y = 1; y <= b.sizes[j]; ++y)
        for (int x = 1; x <= a.sizes[i]; ++x)
          fn(a.start[i] + x, b.start[j] + y);
}

std::string ints_str(std::vector<int> const &v)
{
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

std::vector<int> identity_map(int n)
{
  std::vector<int> m(n);
  std::iota(m.begin(), m.end(), 1);
  return m;
}

} // namespace

std::string obj_str(Obj const &a)
{
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i)
    s += (i ? "," : "") + std::to_string(a[i]);
  return s + ")";
}

std::string mor_str(Mor const &f)
{
  return obj_str(f.dom) + "->" + obj_str(f.cod) + ints_str(f.map);
}

Val obj_val(Obj const &a) { return Val::ints(a); }

Obj val_obj(Val const &v) { return v.to_ints(); }

Val mor_val(Mor const &f)
{
  return Val::list({Val::ints(f.dom), Val::ints(f.cod), Val::ints(f.map)});
}

Mor val_mor(Val const &v)
{
  if (v.is_int() || v.size() != 3)
    throw StructuralError("not a morphism descriptor: " + v.str());
  return Mor{v[0].to_ints(), v[1].to_ints(), v[2].to_ints()};
}

// ---- Biperm generic structure

int Biperm::card(Obj const &a) const
{
  auto bs = blocks(a);
  return std::accumulate(bs.begin(), bs.end(), 0);
}

bool Biperm::valid(Mor const &f) const
{
  if (!is_object(f.dom) || !is_object(f.cod))
    return false;
  int n = card(f.cod);
  if (static_cast<int>(f.map.size()) != card(f.dom))
    return false;
  int lo = pointed() ? 0 : 1;
  for (int x : f.map)
    if (x < lo || x > n)
      return false;
  return true;
}

Mor Biperm::id(Obj const &a) const { return Mor{a, a, identity_map(card(a))}; }

Mor Biperm::compose(Mor const &g, Mor const &f) const
{
  if (f.cod != g.dom)
    throw StructuralError("composite not defined: " + mor_str(g) + " after " +
                          mor_str(f));
  Mor h{f.dom, g.cod, f.map};
  for (auto &x : h.map)
    x = x == 0 ? 0 : g.map[x - 1];
  return h;
}

Mor Biperm::plus(Mor const &f, Mor const &g) const
{
  Mor h{plus(f.dom, g.dom), plus(f.cod, g.cod), f.map};
  int shift = card(f.cod);
  for (int x : g.map)
    h.map.push_back(x == 0 ? 0 : x + shift);
  return h;
}

Mor Biperm::times(Mor const &f, Mor const &g) const
{
  Layout da = layout_of(blocks(f.dom)), db = layout_of(blocks(g.dom));
  Layout ca = layout_of(blocks(f.cod)), cb = layout_of(blocks(g.cod));
  Mor h{times(f.dom, g.dom), times(f.cod, g.cod), {}};
  h.map.reserve(static_cast<std::size_t>(da.card) * db.card);
  for_each_pair(da, db, [&](int u, int v) {
    int x = f.map[u - 1], y = g.map[v - 1];
    h.map.push_back(x == 0 || y == 0 ? 0 : pair_idx(ca, cb, x, y));
  });
  return h;
}

bool Biperm::is_iso(Mor const &f) const
{
  int n = card(f.cod);
  if (static_cast<int>(f.map.size()) != n)
    return false;
  std::vector<char> seen(n + 1, 0);
  for (int x : f.map) {
    if (x < 1 || x > n || seen[x])
      return false;
    seen[x] = 1;
  }
  return true;
}

Mor Biperm::inverse(Mor const &f) const
{
  if (!is_iso(f))
    throw StructuralError("not invertible: " + mor_str(f));
  Mor g{f.cod, f.dom, std::vector<int>(f.map.size())};
  for (std::size_t u = 0; u < f.map.size(); ++u)
    g.map[f.map[u] - 1] = static_cast<int>(u) + 1;
  return g;
}

Mor Biperm::beta_plus(Obj const &a, Obj const &b) const
{
  int m = card(a), n = card(b);
  Mor h{plus(a, b), plus(b, a), {}};
  for (int k = 1; k <= m + n; ++k)
    h.map.push_back(k <= m ? n + k : k - m);
  return h;
}

Mor Biperm::beta_times(Obj const &a, Obj const &b) const
{
  Layout la = layout_of(blocks(a)), lb = layout_of(blocks(b));
  Mor h{times(a, b), times(b, a), {}};
  for_each_pair(la, lb, [&](int u, int v) { h.map.push_back(pair_idx(lb, la, v, u)); });
  return h;
}

Mor Biperm::fact_left(Obj const &a, Obj const &b, Obj const &c) const
{
  Layout la = layout_of(blocks(a)), lb = layout_of(blocks(b)), lc = layout_of(blocks(c));
  Layout lab = layout_of(blocks(plus(a, b)));
  Mor h{plus(times(a, c), times(b, c)), times(plus(a, b), c), {}};
  for_each_pair(la, lc, [&](int u, int w) { h.map.push_back(pair_idx(lab, lc, u, w)); });
  for_each_pair(lb, lc, [&](int v, int w) {
    h.map.push_back(pair_idx(lab, lc, la.card + v, w));
  });
  return h;
}

Mor Biperm::fact_right(Obj const &a, Obj const &b, Obj const &c) const
{
  Layout la = layout_of(blocks(a)), lb = layout_of(blocks(b)), lc = layout_of(blocks(c));
  Layout lbc = layout_of(blocks(plus(b, c)));
  Mor h{plus(times(a, b), times(a, c)), times(a, plus(b, c)), {}};
  for_each_pair(la, lb, [&](int u, int v) { h.map.push_back(pair_idx(la, lbc, u, v)); });
  for_each_pair(la, lc, [&](int u, int w) {
    h.map.push_back(pair_idx(la, lbc, u, lb.card + w));
  });
  return h;
}

std::vector<std::pair<int, int>> Biperm::pair_order(Obj const &a, Obj const &b) const
{
  Layout la = layout_of(blocks(a)), lb = layout_of(blocks(b));
  std::vector<std::pair<int, int>> r;
  r.reserve(static_cast<std::size_t>(la.card) * lb.card);
  for_each_pair(la, lb, [&](int u, int v) { r.emplace_back(u, v); });
  return r;
}

int Biperm::pair_index(Obj const &a, Obj const &b, int u, int v) const
{
  Layout la = layout_of(blocks(a)), lb = layout_of(blocks(b));
  if (u < 1 || u > la.card || v < 1 || v > lb.card)
    throw std::out_of_range("pair_index");
  return pair_idx(la, lb, u, v);
}

std::pair<int, int> Biperm::pair_split(Obj const &a, Obj const &b, int w) const
{
  Layout la = layout_of(blocks(a)), lb = layout_of(blocks(b));
  int k = 0;
  std::pair<int, int> r{0, 0};
  for_each_pair(la, lb, [&](int u, int v) {
    if (++k == w)
      r = {u, v};
  });
  if (r.first == 0)
    throw std::out_of_range("pair_split");
  return r;
}

Obj Biperm::plus_all(std::vector<Obj> const &as) const
{
  Obj r = zero();
  for (auto const &a : as)
    r = plus(r, a);
  return r;
}

Obj Biperm::times_all(std::vector<Obj> const &as) const
{
  Obj r = one();
  for (auto const &a : as)
    r = times(r, a);
  return r;
}

Mor Biperm::plus_all(std::vector<Mor> const &fs) const
{
  Mor r = id(zero());
  for (auto const &f : fs)
    r = plus(r, f);
  return r;
}

Mor Biperm::times_all(std::vector<Mor> const &fs) const
{
  Mor r = id(one());
  for (auto const &f : fs)
    r = times(r, f);
  return r;
}

Mor Biperm::permute_tensor(std::vector<Obj> const &as, Perm const &s) const
{
  int n = static_cast<int>(as.size());
  if (s.size() != n)
    throw std::invalid_argument("permute_tensor: arity mismatch");
  std::vector<int> cur(n);
  std::iota(cur.begin(), cur.end(), 0);
  auto prod = [&](int lo, int hi) {
    std::vector<Obj> xs;
    for (int k = lo; k < hi; ++k)
      xs.push_back(as[cur[k]]);
    return times_all(xs);
  };
  Mor acc = id(prod(0, n));
  for (int k = 0; k < n; ++k) {
    int want = s(k + 1) - 1;
    int p = static_cast<int>(std::find(cur.begin(), cur.end(), want) - cur.begin());
    for (int q = p; q > k; --q) {
      Mor step = times(times(id(prod(0, q - 1)), beta_times(as[cur[q - 1]], as[cur[q]])),
                       id(prod(q + 1, n)));
      acc = compose(step, acc);
      std::swap(cur[q - 1], cur[q]);
    }
  }
  return acc;
}

Mor Biperm::laplaza(std::vector<Obj> const &as, int i, Obj const &ai2) const
{
  int n = static_cast<int>(as.size());
  if (i < 0 || i >= n)
    throw std::out_of_range("laplaza: index " + std::to_string(i + 1) + " not in 1.." +
                            std::to_string(n));
  Obj L = times_all(std::vector<Obj>(as.begin(), as.begin() + i));
  Obj R = times_all(std::vector<Obj>(as.begin() + i + 1, as.end()));
  Obj const &a = as[i];
  Mor s1 = times(id(L), inverse(fact_left(a, ai2, R)));
  Mor s2 = inverse(fact_right(L, times(a, R), times(ai2, R)));
  return compose(s2, s1);
}

// ---- instances

bool NumberInstance::is_object(Obj const &a) const { return a.size() == 1 && a[0] >= 0; }

std::vector<int> NumberInstance::blocks(Obj const &a) const
{
  if (a.size() != 1)
    throw StructuralError("not a number object: " + obj_str(a));
  return {a[0]};
}

std::vector<Obj> NumberInstance::objects(DBound const &b) const
{
  std::vector<Obj> r;
  for (int n = 0; n <= b.size; ++n)
    r.push_back({n});
  return r;
}

namespace {

// all maps {1..m} -> {lo..n}
std::vector<std::vector<int>> all_maps(int m, int lo, int n)
{
  std::vector<std::vector<int>> r;
  if (m > 0 && n < lo)
    return r;
  std::vector<int> cur(m, lo);
  while (true) {
    r.push_back(cur);
    int k = 0;
    while (k < m && cur[k] == n) {
      cur[k] = lo;
      ++k;
    }
    if (k == m)
      break;
    ++cur[k];
  }
  return r;
}

} // namespace

std::vector<Mor> FinskInstance::hom(Obj const &a, Obj const &b) const
{
  std::vector<Mor> r;
  for (auto &m : all_maps(card(a), 1, card(b)))
    r.push_back(Mor{a, b, std::move(m)});
  return r;
}

bool FsetInstance::valid(Mor const &f) const { return Biperm::valid(f) && is_iso(f); }

std::vector<Mor> FsetInstance::hom(Obj const &a, Obj const &b) const
{
  std::vector<Mor> r;
  if (card(a) != card(b))
    return r;
  for (auto const &p : Perm::all(card(a)))
    r.push_back(Mor{a, b, p.images()});
  return r;
}

std::vector<Mor> FskelInstance::hom(Obj const &a, Obj const &b) const
{
  std::vector<Mor> r;
  for (auto &m : all_maps(card(a), 0, card(b)))
    r.push_back(Mor{a, b, std::move(m)});
  return r;
}

bool MandellInstance::is_object(Obj const &a) const
{
  return std::all_of(a.begin(), a.end(), [](int x) { return x >= 1; });
}

Obj MandellInstance::plus(Obj const &a, Obj const &b) const
{
  Obj r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

Obj MandellInstance::times(Obj const &a, Obj const &b) const
{
  Obj r;
  for (int y : b)
    for (int x : a)
      r.push_back(x * y);
  return r;
}

bool MandellInstance::valid(Mor const &f) const
{
  if (!Biperm::valid(f))
    return false;
  Layout ld = layout_of(f.dom), lc = layout_of(f.cod);
  std::vector<int> owner(f.cod.size(), -1);
  for (int u = 1; u <= ld.card; ++u) {
    int tb = lc.blk[f.map[u - 1]];
    if (owner[tb] == -1)
      owner[tb] = ld.blk[u];
    else if (owner[tb] != ld.blk[u])
      return false;
  }
  return true;
}

std::vector<Mor> MandellInstance::hom(Obj const &a, Obj const &b) const
{
  std::vector<Mor> r;
  if (!is_object(a) || !is_object(b))
    throw StructuralError("not an object");
  Layout ld = layout_of(a), lc = layout_of(b);
  std::vector<int> owner(b.size(), -1), count(b.size(), 0), cur(ld.card, 0);
  auto rec = [&](auto &&self, int u) -> void {
    if (u > ld.card) {
      r.push_back(Mor{a, b, cur});
      return;
    }
    int sb = ld.blk[u];
    for (int v = 1; v <= lc.card; ++v) {
      int tb = lc.blk[v];
      if (owner[tb] != -1 && owner[tb] != sb)
        continue;
      int saved = owner[tb];
      owner[tb] = sb;
      ++count[tb];
      cur[u - 1] = v;
      self(self, u + 1);
      if (--count[tb] == 0)
        owner[tb] = saved;
    }
  };
  rec(rec, 1);
  return r;
}

std::vector<Obj> MandellInstance::objects(DBound const &b) const
{
  std::vector<Obj> r{{}};
  std::vector<Obj> layer{{}};
  for (int l = 1; l <= b.len; ++l) {
    std::vector<Obj> next;
    for (auto const &s : layer)
      for (int x = 1; x <= b.max; ++x) {
        Obj t = s;
        t.push_back(x);
        next.push_back(t);
      }
    r.insert(r.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return r;
}

bool DiscreteNatInstance::valid(Mor const &f) const
{
  return Biperm::valid(f) && f.dom == f.cod && f.map == identity_map(card(f.dom));
}

std::vector<Mor> DiscreteNatInstance::hom(Obj const &a, Obj const &b) const
{
  if (a != b)
    return {};
  return {id(a)};
}

Mor DiscreteNatInstance::beta_plus(Obj const &a, Obj const &b) const
{
  return id(plus(a, b));
}

Mor DiscreteNatInstance::beta_times(Obj const &a, Obj const &b) const
{
  return id(times(a, b));
}

Mor DiscreteNatInstance::fact_left(Obj const &a, Obj const &b, Obj const &c) const
{
  return id(times(plus(a, b), c));
}

Mor DiscreteNatInstance::fact_right(Obj const &a, Obj const &b, Obj const &c) const
{
  return id(times(a, plus(b, c)));
}

Mor CorruptedFinsk::beta_times(Obj const &a, Obj const &b) const
{
  return Mor{times(a, b), times(b, a), identity_map(card(times(a, b)))};
}

BipermPtr instance_finsk() { return std::make_shared<FinskInstance>(); }
BipermPtr instance_fset() { return std::make_shared<FsetInstance>(); }
BipermPtr instance_fskel() { return std::make_shared<FskelInstance>(); }
BipermPtr instance_mandellA() { return std::make_shared<MandellInstance>(); }
BipermPtr instance_natdisc() { return std::make_shared<DiscreteNatInstance>(); }

BipermPtr instance_by_name(std::string const &name)
{
  if (name == "finsk")
    return instance_finsk();
  if (name == "fset")
    return instance_fset();
  if (name == "fskel")
    return instance_fskel();
  if (name == "mandellA")
    return instance_mandellA();
  if (name == "natdisc")
    return instance_natdisc();
  if (name == "finsk-corrupted")
    return std::make_shared<CorruptedFinsk>();
  throw std::invalid_argument("unknown instance: " + name);
}

// ---- axiom checker

namespace {

struct Ctx
{
  Biperm const &b;
  std::vector<Obj> obs;
  std::vector<Mor> mors;
  std::map<Obj, std::vector<int>> by_dom;  // indices into mors
  CheckBudget budget;
  Report *rep;

  long pow(int k) const
  {
    long r = 1;
    for (int i = 0; i < k; ++i)
      r *= static_cast<long>(obs.size());
    return r;
  }

  std::vector<Obj> objs(long idx, int k) const
  {
    std::vector<long> rad(k, static_cast<long>(obs.size()));
    auto t = decode_tuple(idx, rad);
    std::vector<Obj> r;
    for (long x : t)
      r.push_back(obs[x]);
    return r;
  }

  // exhaustive over object k-tuples
  void objects_check(std::string id, std::string anchor, int k,
                     std::function<std::string(std::vector<Obj> const &)> pred)
  {
    rep->add(run_check(std::move(id), std::move(anchor), pow(k),
                       [&](long i) { return pred(objs(i, k)); }));
  }

  // sampled over morphism k-tuples
  void morphisms_check(std::string id, std::string anchor, int k,
                       std::function<std::string(std::vector<Mor const *> const &)> pred)
  {
    long total = 1;
    for (int i = 0; i < k; ++i)
      total *= static_cast<long>(mors.size());
    auto idx = choose_indices(total, budget.max_instances, budget.seed);
    std::vector<long> rad(k, static_cast<long>(mors.size()));
    rep->add(run_check(std::move(id), std::move(anchor), static_cast<long>(idx.size()),
                       [&](long i) {
                         auto t = decode_tuple(idx[i], rad);
                         std::vector<Mor const *> fs;
                         for (long x : t)
                           fs.push_back(&mors[x]);
                         return pred(fs);
                       }));
  }
};

std::string objs_str(std::vector<Obj> const &as)
{
  std::string s;
  for (std::size_t i = 0; i < as.size(); ++i)
    s += (i ? " " : "") + obj_str(as[i]);
  return s;
}

std::string neq(std::string const &what, Mor const &l, Mor const &r)
{
  if (l == r)
    return "";
  return what + ": " + mor_str(l) + " != " + mor_str(r);
}

std::string neq(std::string const &what, Obj const &l, Obj const &r)
{
  if (l == r)
    return "";
  return what + ": " + obj_str(l) + " != " + obj_str(r);
}

std::string first_of(std::initializer_list<std::string> xs)
{
  for (auto const &x : xs)
    if (!x.empty())
      return x;
  return "";
}

std::string at(std::vector<Obj> const &as, std::string const &w)
{
  return w.empty() ? w : objs_str(as) + ": " + w;
}

std::string at(std::vector<Mor const *> const &fs, std::string const &w)
{
  if (w.empty())
    return w;
  std::string s;
  for (auto f : fs)
    s += mor_str(*f) + " ";
  return s + ": " + w;
}

} // namespace

std::vector<Mor> morphism_sample(Biperm const &b, std::vector<Obj> const &obs,
                                 std::uint64_t seed, int max_card, long per_hom)
{
  std::vector<Mor> r;
  for (auto const &a : obs)
    for (auto const &c : obs) {
      if (b.card(a) > max_card || b.card(c) > max_card)
        continue;
      auto h = b.hom(a, c);
      for (long i : choose_indices(static_cast<long>(h.size()), per_hom, seed))
        r.push_back(h[i]);
    }
  return r;
}

Report check_bipermutative(Biperm const &b, DBound const &bound, CheckBudget const &budget)
{
  Report rep;
  rep.suite = "bipermutative:" + b.name();
  Ctx c{b, b.objects(bound), {}, {}, budget, &rep};
  c.mors = morphism_sample(b, c.obs, budget.seed);
  for (std::size_t i = 0; i < c.mors.size(); ++i)
    c.by_dom[c.mors[i].dom].push_back(static_cast<int>(i));

  Obj Z = b.zero(), U = b.one();
  auto P = [&](Obj const &x, Obj const &y) { return b.plus(x, y); };
  auto T = [&](Obj const &x, Obj const &y) { return b.times(x, y); };
  auto I = [&](Obj const &x) { return b.id(x); };
  auto C = [&](Mor const &g, Mor const &f) { return b.compose(g, f); };
  auto Pm = [&](Mor const &f, Mor const &g) { return b.plus(f, g); };
  auto Tm = [&](Mor const &f, Mor const &g) { return b.times(f, g); };
  auto bp = [&](Obj const &x, Obj const &y) { return b.beta_plus(x, y); };
  auto bt = [&](Obj const &x, Obj const &y) { return b.beta_times(x, y); };
  auto dl = [&](Obj const &x, Obj const &y, Obj const &z) { return b.fact_left(x, y, z); };
  auto dr = [&](Obj const &x, Obj const &y, Obj const &z) { return b.fact_right(x, y, z); };

  auto typed = [&](std::string const &what, Mor const &f, Obj const &d, Obj const &cd) {
    if (f.dom != d || f.cod != cd)
      return what + " has type " + obj_str(f.dom) + "->" + obj_str(f.cod) +
             ", expected " + obj_str(d) + "->" + obj_str(cd);
    if (!b.valid(f))
      return what + " is not a morphism: " + mor_str(f);
    return std::string();
  };

  // structure morphisms are morphisms of the right type
  c.objects_check("structure.typing", "structure morphisms are well-typed morphisms", 3,
                  [&](auto const &v) {
                    auto const &x = v[0], &y = v[1], &z = v[2];
                    return at(v, first_of({
                                     typed("additive braiding", bp(x, y), P(x, y), P(y, x)),
                                     typed("multiplicative braiding", bt(x, y), T(x, y),
                                           T(y, x)),
                                     typed("left factorization", dl(x, y, z),
                                           P(T(x, z), T(y, z)), T(P(x, y), z)),
                                     typed("right factorization", dr(x, y, z),
                                           P(T(x, y), T(x, z)), T(x, P(y, z))),
                                 }));
                  });

  // additive permutative structure
  c.objects_check("additive.unit", "additive unit", 1, [&](auto const &v) {
    return at(v, first_of({neq("0+a", P(Z, v[0]), v[0]), neq("a+0", P(v[0], Z), v[0])}));
  });
  c.objects_check("additive.associativity", "additive associativity", 3, [&](auto const &v) {
    return at(v, neq("(a+b)+c", P(P(v[0], v[1]), v[2]), P(v[0], P(v[1], v[2]))));
  });
  c.objects_check("additive.symmetry", "additive symmetry", 2, [&](auto const &v) {
    return at(v, neq("b_{b,a} b_{a,b}", C(bp(v[1], v[0]), bp(v[0], v[1])),
                     I(P(v[0], v[1]))));
  });
  c.objects_check("additive.braiding-unit", "additive braiding with the unit", 1,
                  [&](auto const &v) { return at(v, neq("b_{a,0}", bp(v[0], Z), I(v[0]))); });
  c.objects_check("additive.hexagon", "additive hexagon", 3, [&](auto const &v) {
    auto const &x = v[0], &y = v[1], &z = v[2];
    return at(v, neq("b_{a,b+c}", bp(x, P(y, z)),
                     C(Pm(I(y), bp(x, z)), Pm(bp(x, y), I(z)))));
  });

  // multiplicative permutative structure
  c.objects_check("multiplicative.unit", "multiplicative unit", 1, [&](auto const &v) {
    return at(v, first_of({neq("1a", T(U, v[0]), v[0]), neq("a1", T(v[0], U), v[0])}));
  });
  c.objects_check("multiplicative.associativity", "multiplicative associativity", 3,
                  [&](auto const &v) {
                    return at(v, neq("(ab)c", T(T(v[0], v[1]), v[2]),
                                     T(v[0], T(v[1], v[2]))));
                  });
  c.objects_check("multiplicative.symmetry", "multiplicative symmetry", 2, [&](auto const &v) {
    return at(v, neq("b_{b,a} b_{a,b}", C(bt(v[1], v[0]), bt(v[0], v[1])),
                     I(T(v[0], v[1]))));
  });
  c.objects_check("multiplicative.braiding-unit", "multiplicative braiding with the unit", 1,
                  [&](auto const &v) { return at(v, neq("b_{a,1}", bt(v[0], U), I(v[0]))); });
  c.objects_check("multiplicative.hexagon", "multiplicative hexagon", 3, [&](auto const &v) {
    auto const &x = v[0], &y = v[1], &z = v[2];
    return at(v, neq("b_{a,bc}", bt(x, T(y, z)),
                     C(Tm(I(y), bt(x, z)), Tm(bt(x, y), I(z)))));
  });

  // ring axioms
  c.objects_check("ring.multiplicative-zero", "multiplicative zero", 1, [&](auto const &v) {
    return at(v, first_of({neq("a0", T(v[0], Z), Z), neq("0a", T(Z, v[0]), Z)}));
  });
  c.objects_check("ring.zero-factorization", "zero factorization", 2, [&](auto const &v) {
    auto const &x = v[0], &y = v[1];
    return at(v, first_of({
                     neq("dl_{0,a,b}", dl(Z, x, y), I(T(x, y))),
                     neq("dl_{a,0,b}", dl(x, Z, y), I(T(x, y))),
                     neq("dl_{a,b,0}", dl(x, y, Z), I(Z)),
                     neq("dr_{0,a,b}", dr(Z, x, y), I(Z)),
                     neq("dr_{a,0,b}", dr(x, Z, y), I(T(x, y))),
                     neq("dr_{a,b,0}", dr(x, y, Z), I(T(x, y))),
                 }));
  });
  c.objects_check("ring.unit-factorization", "unit factorization", 2, [&](auto const &v) {
    auto const &x = v[0], &y = v[1];
    return at(v, first_of({neq("dl_{a,b,1}", dl(x, y, U), I(P(x, y))),
                           neq("dr_{1,a,b}", dr(U, x, y), I(P(x, y)))}));
  });
  c.objects_check("ring.braiding-factorization", "braiding factorization", 3,
                  [&](auto const &v) {
                    auto const &x = v[0], &y = v[1], &z = v[2];
                    return at(v, first_of({
                                     neq("left", C(Tm(bp(x, y), I(z)), dl(x, y, z)),
                                         C(dl(y, x, z), bp(T(x, z), T(y, z)))),
                                     neq("right", C(Tm(I(x), bp(y, z)), dr(x, y, z)),
                                         C(dr(x, z, y), bp(T(x, y), T(x, z)))),
                                 }));
                  });
  c.objects_check("ring.internal-factorization", "internal factorization", 4,
                  [&](auto const &v) {
                    auto const &x = v[0], &x2 = v[1], &x3 = v[2], &y = v[3];
                    Mor l1 = C(dl(P(x, x2), x3, y), Pm(dl(x, x2, y), I(T(x3, y))));
                    Mor l2 = C(dl(x, P(x2, x3), y), Pm(I(T(x, y)), dl(x2, x3, y)));
                    // right version: y(x+x2+x3)
                    Mor r1 = C(dr(y, P(x, x2), x3), Pm(dr(y, x, x2), I(T(y, x3))));
                    Mor r2 = C(dr(y, x, P(x2, x3)), Pm(I(T(y, x)), dr(y, x2, x3)));
                    return at(v, first_of({neq("left", l1, l2), neq("right", r1, r2)}));
                  });
  c.objects_check("ring.external-factorization", "external factorization", 4,
                  [&](auto const &v) {
                    auto const &a = v[0], &a2 = v[1], &bb = v[2], &cc = v[3];
                    // (i) dl_{A,A',BC} = (dl_{A,A',B} 1_C) dl_{AB,A'B,C}
                    Mor e1 = dl(a, a2, T(bb, cc));
                    Mor e1r = C(Tm(dl(a, a2, bb), I(cc)), dl(T(a, bb), T(a2, bb), cc));
                    // (ii) with A, B, B', C = a, a2, bb, cc
                    Mor e2l = C(Tm(dr(a, a2, bb), I(cc)), dl(T(a, a2), T(a, bb), cc));
                    Mor e2r = C(Tm(I(a), dl(a2, bb, cc)), dr(a, T(a2, cc), T(bb, cc)));
                    // (iii) dr_{AB,C,C'} = (1_A dr_{B,C,C'}) dr_{A,BC,BC'}
                    Mor e3 = dr(T(a, a2), bb, cc);
                    Mor e3r = C(Tm(I(a), dr(a2, bb, cc)), dr(a, T(a2, bb), T(a2, cc)));
                    return at(v, first_of({neq("first", e1, e1r), neq("second", e2l, e2r),
                                           neq("third", e3, e3r)}));
                  });
  c.objects_check("ring.two-by-two", "2-by-2 factorization", 4, [&](auto const &v) {
    auto const &a = v[0], &a2 = v[1], &bb = v[2], &b2 = v[3];
    Mor lhs = C(dl(a, a2, P(bb, b2)), Pm(dr(a, bb, b2), dr(a2, bb, b2)));
    Mor mid = Pm(Pm(I(T(a, bb)), bp(T(a, b2), T(a2, bb))), I(T(a2, b2)));
    Mor rhs = C(dr(P(a, a2), bb, b2), C(Pm(dl(a, a2, bb), dl(a, a2, b2)), mid));
    return at(v, neq("square", lhs, rhs));
  });
  c.objects_check("ring.zero-braiding", "zero braiding", 1, [&](auto const &v) {
    return at(v, neq("bt_{a,0}", bt(v[0], Z), I(Z)));
  });
  c.objects_check("ring.multiplicative-braiding-factorization",
                  "multiplicative braiding factorization", 3, [&](auto const &v) {
                    auto const &x = v[0], &y = v[1], &z = v[2];
                    Mor lhs = C(bt(P(x, y), z), dl(x, y, z));
                    Mor rhs = C(dr(z, x, y), Pm(bt(x, z), bt(y, z)));
                    return at(v, neq("square", lhs, rhs));
                  });
  c.objects_check("ring.tightness", "factorizations are invertible", 3, [&](auto const &v) {
    auto const &x = v[0], &y = v[1], &z = v[2];
    if (!b.is_iso(dl(x, y, z)))
      return at(v, "left factorization not invertible: " + mor_str(dl(x, y, z)));
    if (!b.is_iso(dr(x, y, z)))
      return at(v, "right factorization not invertible: " + mor_str(dr(x, y, z)));
    return std::string();
  });

  // morphism level, sampled
  auto comp_partner = [&](Mor const &f, long salt) -> Mor const * {
    auto it = c.by_dom.find(f.cod);
    if (it == c.by_dom.end())
      return nullptr;
    return &c.mors[it->second[static_cast<std::size_t>(salt) % it->second.size()]];
  };
  c.morphisms_check("additive.functoriality", "sum is a functor", 2, [&](auto const &fs) {
    Mor const &f = *fs[0], &g = *fs[1];
    std::string w = neq("1+1", Pm(I(f.dom), I(g.dom)), I(P(f.dom, g.dom)));
    Mor const *f2 = comp_partner(f, g.map.size() + 1), *g2 = comp_partner(g, f.map.size());
    if (w.empty() && f2 && g2)
      w = neq("composite", C(Pm(*f2, *g2), Pm(f, g)), Pm(C(*f2, f), C(*g2, g)));
    return at(fs, w);
  });
  c.morphisms_check("additive.strictness", "additive unit and associativity on morphisms", 3,
                    [&](auto const &fs) {
                      Mor const &f = *fs[0], &g = *fs[1], &h = *fs[2];
                      return at(fs, first_of({neq("f+1_0", Pm(f, I(Z)), f),
                                              neq("1_0+f", Pm(I(Z), f), f),
                                              neq("(f+g)+h", Pm(Pm(f, g), h),
                                                  Pm(f, Pm(g, h)))}));
                    });
  c.morphisms_check("additive.naturality", "additive braiding naturality", 2,
                    [&](auto const &fs) {
                      Mor const &f = *fs[0], &g = *fs[1];
                      return at(fs, neq("square", C(bp(f.cod, g.cod), Pm(f, g)),
                                        C(Pm(g, f), bp(f.dom, g.dom))));
                    });
  c.morphisms_check("multiplicative.functoriality", "product is a functor", 2,
                    [&](auto const &fs) {
                      Mor const &f = *fs[0], &g = *fs[1];
                      std::string w =
                          neq("1 1", Tm(I(f.dom), I(g.dom)), I(T(f.dom, g.dom)));
                      Mor const *f2 = comp_partner(f, g.map.size() + 1),
                                *g2 = comp_partner(g, f.map.size());
                      if (w.empty() && f2 && g2)
                        w = neq("composite", C(Tm(*f2, *g2), Tm(f, g)),
                                Tm(C(*f2, f), C(*g2, g)));
                      return at(fs, w);
                    });
  c.morphisms_check("multiplicative.strictness",
                    "multiplicative unit and associativity on morphisms", 3,
                    [&](auto const &fs) {
                      Mor const &f = *fs[0], &g = *fs[1], &h = *fs[2];
                      return at(fs, first_of({neq("f 1_1", Tm(f, I(U)), f),
                                              neq("1_1 f", Tm(I(U), f), f),
                                              neq("(fg)h", Tm(Tm(f, g), h),
                                                  Tm(f, Tm(g, h)))}));
                    });
  c.morphisms_check("multiplicative.naturality", "multiplicative braiding naturality", 2,
                    [&](auto const &fs) {
                      Mor const &f = *fs[0], &g = *fs[1];
                      return at(fs, neq("square", C(bt(f.cod, g.cod), Tm(f, g)),
                                        C(Tm(g, f), bt(f.dom, g.dom))));
                    });
  c.morphisms_check("ring.multiplicative-zero-morphisms", "multiplicative zero on morphisms",
                    1, [&](auto const &fs) {
                      Mor const &f = *fs[0];
                      return at(fs, first_of({neq("f 1_0", Tm(f, I(Z)), I(Z)),
                                              neq("1_0 f", Tm(I(Z), f), I(Z))}));
                    });
  c.morphisms_check("ring.factorization-naturality", "factorization naturality", 3,
                    [&](auto const &fs) {
                      Mor const &f = *fs[0], &f2 = *fs[1], &g = *fs[2];
                      Mor l1 = C(Tm(Pm(f, f2), g), dl(f.dom, f2.dom, g.dom));
                      Mor l2 = C(dl(f.cod, f2.cod, g.cod), Pm(Tm(f, g), Tm(f2, g)));
                      Mor r1 = C(Tm(g, Pm(f, f2)), dr(g.dom, f.dom, f2.dom));
                      Mor r2 = C(dr(g.cod, f.cod, f2.cod), Pm(Tm(g, f), Tm(g, f2)));
                      return at(fs, first_of({neq("left", l1, l2), neq("right", r1, r2)}));
                    });
  return rep;
}

// ---- formal words and structure paths

ExprPtr ex_var(std::string name)
{
  return std::make_shared<Expr>(Expr{Expr::Var, std::move(name), nullptr, nullptr});
}
ExprPtr ex_zero() { return std::make_shared<Expr>(Expr{Expr::Zero, "", nullptr, nullptr}); }
ExprPtr ex_one() { return std::make_shared<Expr>(Expr{Expr::One, "", nullptr, nullptr}); }
ExprPtr ex_sum(ExprPtr a, ExprPtr b)
{
  return std::make_shared<Expr>(Expr{Expr::Sum, "", std::move(a), std::move(b)});
}
ExprPtr ex_prod(ExprPtr a, ExprPtr b)
{
  return std::make_shared<Expr>(Expr{Expr::Prod, "", std::move(a), std::move(b)});
}

std::string ex_str(ExprPtr const &e)
{
  switch (e->kind) {
  case Expr::Var: return e->var;
  case Expr::Zero: return "0";
  case Expr::One: return "1";
  case Expr::Sum: return "(" + ex_str(e->l) + "+" + ex_str(e->r) + ")";
  case Expr::Prod: return "(" + ex_str(e->l) + "*" + ex_str(e->r) + ")";
  }
  return "?";
}

namespace {

void vars_of(ExprPtr const &e, std::multiset<std::string> &out)
{
  if (!e)
    return;
  if (e->kind == Expr::Var)
    out.insert(e->var);
  vars_of(e->l, out);
  vars_of(e->r, out);
}

} // namespace

bool ex_regular(ExprPtr const &e)
{
  if (!e || e->kind == Expr::Var || e->kind == Expr::Zero || e->kind == Expr::One)
    return true;
  if (!ex_regular(e->l) || !ex_regular(e->r))
    return false;
  if (e->kind == Expr::Prod) {
    std::multiset<std::string> l, r;
    vars_of(e->l, l);
    vars_of(e->r, r);
    for (auto const &v : l)
      if (r.count(v))
        return false;
  }
  return true;
}

Obj ex_eval(Biperm const &b, ExprPtr const &e, Bindings const &env)
{
  switch (e->kind) {
  case Expr::Var: {
    auto it = env.find(e->var);
    if (it == env.end())
      throw PathError("unbound variable " + e->var);
    return it->second;
  }
  case Expr::Zero: return b.zero();
  case Expr::One: return b.one();
  case Expr::Sum: return b.plus(ex_eval(b, e->l, env), ex_eval(b, e->r, env));
  case Expr::Prod: return b.times(ex_eval(b, e->l, env), ex_eval(b, e->r, env));
  }
  throw PathError("bad expression");
}

Mor evaluate_structure_path(Biperm const &b, StructurePath const &p, Bindings const &env)
{
  Mor acc = b.id(ex_eval(b, p.domain, env));
  int k = 0;
  for (auto const &e : p.edges) {
    ++k;
    std::vector<Obj> xs;
    for (auto const &a : e.args)
      xs.push_back(ex_eval(b, a, env));
    auto need = [&](std::size_t n) {
      if (xs.size() != n)
        throw PathError("step " + std::to_string(k) + ": " + e.gen + " takes " +
                        std::to_string(n) + " arguments");
    };
    Mor g;
    if (e.gen == "1") {
      need(1);
      g = b.id(xs[0]);
    } else if (e.gen == "fl") {
      need(3);
      g = b.fact_left(xs[0], xs[1], xs[2]);
    } else if (e.gen == "fr") {
      need(3);
      g = b.fact_right(xs[0], xs[1], xs[2]);
    } else if (e.gen == "bp") {
      need(2);
      g = b.beta_plus(xs[0], xs[1]);
    } else if (e.gen == "bt") {
      need(2);
      g = b.beta_times(xs[0], xs[1]);
    } else {
      throw PathError("step " + std::to_string(k) + ": unknown generator " + e.gen);
    }
    if (e.inv) {
      if (!b.is_iso(g))
        throw PathError("step " + std::to_string(k) + ": generator not invertible");
      g = b.inverse(g);
    }
    if (e.lt)
      g = b.times(b.id(ex_eval(b, e.lt, env)), g);
    if (e.rt)
      g = b.times(g, b.id(ex_eval(b, e.rt, env)));
    if (e.lp)
      g = b.plus(b.id(ex_eval(b, e.lp, env)), g);
    if (e.rp)
      g = b.plus(g, b.id(ex_eval(b, e.rp, env)));
    if (g.dom != acc.cod)
      throw PathError("step " + std::to_string(k) + " expects " + obj_str(g.dom) +
                      " but receives " + obj_str(acc.cod));
    acc = b.compose(g, acc);
  }
  return acc;
}

namespace {

ExprPtr prod_of(std::vector<ExprPtr> const &xs)
{
  if (xs.empty())
    return ex_one();
  ExprPtr r = xs[0];
  for (std::size_t i = 1; i < xs.size(); ++i)
    r = ex_prod(r, xs[i]);
  return r;
}

ExprPtr prod_opt(std::vector<ExprPtr> const &xs) { return xs.empty() ? nullptr : prod_of(xs); }

std::string var_name(int j) { return "a" + std::to_string(j + 1); }

} // namespace

std::vector<StructurePath> laplaza_paths(int n, int i)
{
  if (i < 0 || i >= n)
    throw std::out_of_range("laplaza_paths: index");
  std::vector<ExprPtr> Ls, Rs;
  for (int j = 0; j < i; ++j)
    Ls.push_back(ex_var(var_name(j)));
  for (int j = i + 1; j < n; ++j)
    Rs.push_back(ex_var(var_name(j)));
  ExprPtr a = ex_var(var_name(i)), a2 = ex_var("b");
  ExprPtr L = prod_of(Ls), R = prod_of(Rs);
  std::vector<ExprPtr> word = Ls;
  word.push_back(ex_sum(a, a2));
  word.insert(word.end(), Rs.begin(), Rs.end());
  ExprPtr dom = prod_of(word);
  auto cat = [](ExprPtr x, std::vector<ExprPtr> const &rest) {
    std::vector<ExprPtr> v{std::move(x)};
    v.insert(v.end(), rest.begin(), rest.end());
    return prod_of(v);
  };
  auto pre = [](std::vector<ExprPtr> const &front, ExprPtr x) {
    std::vector<ExprPtr> v = front;
    v.push_back(std::move(x));
    return prod_of(v);
  };

  std::vector<StructurePath> out;
  // distribute over the right factors first, then the left ones
  {
    StructurePath p{dom, {}};
    p.edges.push_back(Edge{"fl", {a, a2, R}, true, prod_opt(Ls), nullptr, nullptr, nullptr});
    p.edges.push_back(Edge{"fr", {L, cat(a, Rs), cat(a2, Rs)}, true, nullptr, nullptr,
                           nullptr, nullptr});
    out.push_back(p);
  }
  // left factors first
  {
    StructurePath p{dom, {}};
    p.edges.push_back(Edge{"fr", {L, a, a2}, true, nullptr, prod_opt(Rs), nullptr, nullptr});
    p.edges.push_back(Edge{"fl", {pre(Ls, a), pre(Ls, a2), R}, true, nullptr, nullptr,
                           nullptr, nullptr});
    out.push_back(p);
  }
  // one factor at a time
  {
    StructurePath p{dom, {}};
    int k = static_cast<int>(Rs.size());
    for (int t = 0; t < k; ++t) {
      std::vector<ExprPtr> done(Rs.begin(), Rs.begin() + t), rest(Rs.begin() + t + 1, Rs.end());
      p.edges.push_back(Edge{"fl", {cat(a, done), cat(a2, done), Rs[t]}, true, prod_opt(Ls),
                             prod_opt(rest), nullptr, nullptr});
    }
    int h = static_cast<int>(Ls.size());
    for (int t = h - 1; t >= 0; --t) {
      std::vector<ExprPtr> outer(Ls.begin(), Ls.begin() + t), inner(Ls.begin() + t + 1, Ls.end());
      std::vector<ExprPtr> ia = inner, ib = inner;
      ia.push_back(a);
      ia.insert(ia.end(), Rs.begin(), Rs.end());
      ib.push_back(a2);
      ib.insert(ib.end(), Rs.begin(), Rs.end());
      p.edges.push_back(Edge{"fr", {Ls[t], prod_of(ia), prod_of(ib)}, true, prod_opt(outer),
                             nullptr, nullptr, nullptr});
    }
    out.push_back(p);
  }
  return out;
}

Bindings laplaza_bindings(std::vector<Obj> const &as, int i, Obj const &ai2)
{
  Bindings env;
  for (std::size_t j = 0; j < as.size(); ++j)
    env[var_name(static_cast<int>(j))] = as[j];
  (void)i;
  env["b"] = ai2;
  return env;
}

Report check_laplaza(Biperm const &b, DBound const &bound, int nmax, CheckBudget const &budget)
{
  Report rep;
  rep.suite = "laplaza:" + b.name();
  auto obs = b.objects(bound);
  long O = static_cast<long>(obs.size());

  struct Case
  {
    int n, i;
    long base;  // index into a tuple space of O^(n+1)
  };
  std::vector<Case> cases;
  long total = 0;
  for (int n = 1; n <= nmax; ++n) {
    long sz = 1;
    for (int k = 0; k <= n; ++k)
      sz *= O;
    for (int i = 0; i < n; ++i) {
      cases.push_back({n, i, total});
      total += sz;
    }
  }
  std::vector<std::vector<StructurePath>> paths;
  for (auto const &cs : cases)
    paths.push_back(laplaza_paths(cs.n, cs.i));

  auto decode = [&](long k, std::size_t &ci, std::vector<Obj> &as, Obj &a2) {
    ci = 0;
    while (ci + 1 < cases.size() && cases[ci + 1].base <= k)
      ++ci;
    auto const &cs = cases[ci];
    auto t = decode_tuple(k - cs.base, std::vector<long>(cs.n + 1, O));
    as.clear();
    for (int j = 0; j < cs.n; ++j)
      as.push_back(obs[t[j]]);
    a2 = obs[t[cs.n]];
  };
  auto where = [&](std::vector<Obj> const &as, int i, Obj const &a2) {
    return "a=" + objs_str(as) + " i=" + std::to_string(i + 1) + " a'=" + obj_str(a2);
  };

  rep.add(run_check("laplaza.regular-domains", "paths start at regular words",
                    static_cast<long>(paths.size()), [&](long k) {
                      for (auto const &p : paths[k])
                        if (!ex_regular(p.domain))
                          return "irregular domain " + ex_str(p.domain);
                      return std::string();
                    }));

  rep.add(run_check("laplaza.paths-agree", "alternative structure paths agree", total,
                    [&](long k) {
                      std::size_t ci;
                      std::vector<Obj> as;
                      Obj a2;
                      decode(k, ci, as, a2);
                      int i = cases[ci].i;
                      Mor ref = b.laplaza(as, i, a2);
                      auto env = laplaza_bindings(as, i, a2);
                      for (std::size_t q = 0; q < paths[ci].size(); ++q) {
                        Mor v = evaluate_structure_path(b, paths[ci][q], env);
                        if (v != ref)
                          return where(as, i, a2) + ": path " + std::to_string(q + 1) +
                                 " gives " + mor_str(v) + ", recipe gives " + mor_str(ref);
                      }
                      return std::string();
                    }));

  rep.add(run_check("laplaza.identity-cases", "degenerate inputs give identities", total,
                    [&](long k) {
                      std::size_t ci;
                      std::vector<Obj> as;
                      Obj a2;
                      decode(k, ci, as, a2);
                      int i = cases[ci].i;
                      bool degenerate = cases[ci].n == 1 || a2 == b.zero();
                      for (auto const &x : as)
                        degenerate = degenerate || x == b.zero();
                      if (!degenerate)
                        return std::string();
                      Mor v = b.laplaza(as, i, a2);
                      if (v.map != b.id(v.dom).map || v.dom != v.cod)
                        return where(as, i, a2) + ": " + mor_str(v);
                      return std::string();
                    }));

  // naturality on sampled morphism tuples, n <= 2
  auto mors = morphism_sample(b, obs, budget.seed);
  if (!mors.empty()) {
    long M = static_cast<long>(mors.size());
    long space = M * M * M;
    auto idx = choose_indices(space, budget.max_instances, budget.seed + 1);
    rep.add(run_check("laplaza.naturality", "naturality of the canonical iso",
                      static_cast<long>(idx.size()), [&](long k) {
                        auto t = decode_tuple(idx[k], {M, M, M});
                        Mor const &f = mors[t[0]], &f2 = mors[t[1]], &g = mors[t[2]];
                        for (int i = 0; i < 2; ++i) {
                          std::vector<Mor> fs = {f, g}, gs = {f2, g};
                          if (i == 1) {
                            fs = {g, f};
                            gs = {g, f2};
                          }
                          std::vector<Mor> mid = fs;
                          mid[i] = b.plus(f, f2);
                          std::vector<Obj> d, cd;
                          for (auto const &x : fs) {
                            d.push_back(x.dom);
                            cd.push_back(x.cod);
                          }
                          Mor lhs = b.compose(b.laplaza(cd, i, f2.cod), b.times_all(mid));
                          Mor rhs = b.compose(b.plus(b.times_all(fs), b.times_all(gs)),
                                              b.laplaza(d, i, f2.dom));
                          if (lhs != rhs)
                            return mor_str(f) + " " + mor_str(f2) + " " + mor_str(g) +
                                   " slot " + std::to_string(i + 1) + ": " + mor_str(lhs) +
                                   " != " + mor_str(rhs);
                        }
                        return std::string();
                      }));
  }
  return rep;
}

// ---- category view

DCategory::DCategory(BipermPtr b, DBound bound)
: b_(std::move(b)), bound_(bound)
{}

bool DCategory::has_object(Val const &x) const
{
  if (x.is_int())
    return false;
  for (auto const &k : x.items())
    if (!k.is_int())
      return false;
  return b_->is_object(x.to_ints());
}

Val DCategory::dom(Val const &f) const { return f[0]; }
Val DCategory::cod(Val const &f) const { return f[1]; }
Val DCategory::id(Val const &x) const { return mor_val(b_->id(val_obj(x))); }

Val DCategory::compose(Val const &g, Val const &f) const
{
  return mor_val(b_->compose(val_mor(g), val_mor(f)));
}

std::vector<Val> DCategory::hom(Val const &a, Val const &b) const
{
  std::vector<Val> r;
  for (auto const &f : b_->hom(val_obj(a), val_obj(b)))
    r.push_back(mor_val(f));
  return r;
}

std::vector<Val> DCategory::objects() const
{
  std::vector<Val> r;
  for (auto const &a : b_->objects(bound_))
    r.push_back(obj_val(a));
  return r;
}

std::optional<Val> DCategory::inverse(Val const &f) const
{
  Mor m = val_mor(f);
  if (!b_->is_iso(m))
    return std::nullopt;
  return mor_val(b_->inverse(m));
}

Val DCategory::unit() const { return obj_val(b_->zero()); }

Val DCategory::tensor(Val const &a, Val const &b) const
{
  return obj_val(b_->plus(val_obj(a), val_obj(b)));
}

Val DCategory::tensor_mor(Val const &f, Val const &g) const
{
  return mor_val(b_->plus(val_mor(f), val_mor(g)));
}

Val DCategory::braid(Val const &a, Val const &b) const
{
  return mor_val(b_->beta_plus(val_obj(a), val_obj(b)));
}

// ---- generic permutative checks

Report check_permutative(PermutativeCategory const &c, std::vector<Val> const &objs,
                         std::vector<Val> const &mors, std::string const &prefix)
{
  Report rep;
  rep.suite = prefix;
  long O = static_cast<long>(objs.size()), M = static_cast<long>(mors.size());
  Val e = c.unit();
  auto ne = [](std::string const &what, Val const &l, Val const &r) {
    return l == r ? std::string() : what + ": " + l.str() + " != " + r.str();
  };
  auto T = [&](Val const &a, Val const &b) { return c.tensor(a, b); };
  auto Tm = [&](Val const &a, Val const &b) { return c.tensor_mor(a, b); };

  rep.add(run_check(prefix + ".unit", "strict unity", O, [&](long i) {
    auto const &x = objs[i];
    return first_of({ne("e x", T(e, x), x), ne("x e", T(x, e), x),
                     ne("1_e 1_x", Tm(c.id(e), c.id(x)), c.id(x))});
  }));
  rep.add(run_check(prefix + ".associativity", "strict associativity", O * O * O, [&](long k) {
    auto t = decode_tuple(k, {O, O, O});
    auto const &x = objs[t[0]], &y = objs[t[1]], &z = objs[t[2]];
    return ne(x.str() + " " + y.str() + " " + z.str(), T(T(x, y), z), T(x, T(y, z)));
  }));
  rep.add(run_check(prefix + ".symmetry", "symmetry", O * O, [&](long k) {
    auto t = decode_tuple(k, {O, O});
    auto const &x = objs[t[0]], &y = objs[t[1]];
    return ne(x.str() + " " + y.str(), c.compose(c.braid(y, x), c.braid(x, y)), c.id(T(x, y)));
  }));
  rep.add(run_check(prefix + ".braiding-unit", "braiding with the unit", O, [&](long i) {
    auto const &x = objs[i];
    return ne(x.str(), c.braid(x, e), c.id(x));
  }));
  rep.add(run_check(prefix + ".hexagon", "hexagon", O * O * O, [&](long k) {
    auto t = decode_tuple(k, {O, O, O});
    auto const &x = objs[t[0]], &y = objs[t[1]], &z = objs[t[2]];
    Val lhs = c.braid(x, T(y, z));
    Val rhs = c.compose(Tm(c.id(y), c.braid(x, z)), Tm(c.braid(x, y), c.id(z)));
    return ne(x.str() + " " + y.str() + " " + z.str(), lhs, rhs);
  }));
  rep.add(run_check(prefix + ".braiding-invertible", "braiding is an isomorphism", O * O,
                    [&](long k) {
                      auto t = decode_tuple(k, {O, O});
                      Val bb = c.braid(objs[t[0]], objs[t[1]]);
                      return c.is_iso(bb) ? std::string() : "not invertible: " + bb.str();
                    }));
  if (M > 0) {
    rep.add(run_check(prefix + ".naturality", "braiding naturality", M * M, [&](long k) {
      auto t = decode_tuple(k, {M, M});
      auto const &f = mors[t[0]], &g = mors[t[1]];
      Val lhs = c.compose(c.braid(c.cod(f), c.cod(g)), Tm(f, g));
      Val rhs = c.compose(Tm(g, f), c.braid(c.dom(f), c.dom(g)));
      return ne(f.str() + " " + g.str(), lhs, rhs);
    }));
    rep.add(run_check(prefix + ".morphism-strictness", "unity and associativity on morphisms",
                      M * M, [&](long k) {
                        auto t = decode_tuple(k, {M, M});
                        auto const &f = mors[t[0]], &g = mors[t[1]];
                        auto const &h = mors[(t[0] + t[1]) % M];
                        return first_of({ne("f 1_e", Tm(f, c.id(e)), f),
                                         ne("(fg)h", Tm(Tm(f, g), h), Tm(f, Tm(g, h)))});
                      }));
  }
  return rep;
}

} // namespace bpk
