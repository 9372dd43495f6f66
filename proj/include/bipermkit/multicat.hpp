#ifndef BIPERMKIT_MULTICAT_HPP
#define BIPERMKIT_MULTICAT_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "fincat.hpp"
#include "perm.hpp"
#include "report.hpp"

namespace bpk {

// Cat-multicategory presented by procedures on 1-cells C and 2-cells C2.
// Cells are compared with diff/diff2, which return "" on equality.
template <class C, class C2>
struct MulticatView
{
  std::string name;
  std::function<int(C const &)> arity;
  std::function<C(C const &)> out_unit;       // unit at the output colour
  std::function<C(C const &, int)> in_unit;   // unit at the j-th input colour
  std::function<C(C const &, std::vector<C> const &)> gamma;
  std::function<C(C const &, Perm const &)> act;  // empty if not symmetric
  std::function<std::string(C const &, C const &)> diff;

  std::function<C2(C const &)> id2;
  std::function<C2(C2 const &, C2 const &)> vcomp;  // second after first
  std::function<C2(C2 const &, std::vector<C2> const &)> gamma2;
  std::function<C2(C2 const &, Perm const &)> act2;
  std::function<std::string(C2 const &, C2 const &)> diff2;
  std::function<C(C2 const &)> src2, tgt2;  // optional
};

// Single-coloured cell generator.
template <class C>
using CellGen = std::function<C(Rng &, int arity)>;

struct MulticatSample
{
  int nmax = 3;       // arity bound for outer cells
  int inner_max = 2;  // arity bound for inner cells
  long count = 20;
  std::uint64_t seed = 1;
};

// Block permutation for top equivariance:
// gamma(c^s; d_1..d_n) = gamma(c; s<d>)^top_perm(s, k) with k_j the arity of d_j.
inline Perm top_perm(Perm const &s, std::vector<int> const &k)
{
  return block_permutation(s, k);
}

template <class T>
std::vector<T> permute_cells(Perm const &s, std::vector<T> const &v)
{
  std::vector<T> r(v.size());
  for (int j = 1; j <= s.size(); ++j)
    r[s(j) - 1] = v[j - 1];
  return r;
}

namespace detail {

inline std::uint64_t mc_mix(std::uint64_t seed, long i)
{
  return (seed + 0x632be59bd9b4e019ULL) * 0x9e3779b97f4a7c15ULL +
         static_cast<std::uint64_t>(i) * 0x94d049bb133111ebULL;
}

inline Perm random_perm(Rng &g, int n)
{
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i)
    v[i] = i + 1;
  for (int i = n - 1; i > 0; --i)
    std::swap(v[i], v[g.below(i + 1)]);
  return Perm(v);
}

template <class C>
std::vector<C> gen_inner(CellGen<C> const &gen, Rng &g, int n, int inner_max,
                         std::vector<int> &ks)
{
  std::vector<C> ds;
  ks.clear();
  for (int j = 0; j < n; ++j) {
    int k = static_cast<int>(g.below(inner_max + 1));
    ks.push_back(k);
    ds.push_back(gen(g, k));
  }
  return ds;
}

inline std::string tag(std::string const &what, std::string const &d)
{
  return d.empty() ? d : what + ": " + d;
}

} // namespace detail

template <class C, class C2>
Report check_multicat(MulticatView<C, C2> const &v, CellGen<C> const &gen,
                      MulticatSample const &s)
{
  using detail::tag;
  Report rep;
  rep.suite = v.name + ".multicategory";
  auto R = [&](long i) { return Rng(detail::mc_mix(s.seed, i)); };
  auto arity_of = [&](Rng &g) { return 1 + static_cast<int>(g.below(s.nmax)); };

  rep.add(run_check("multicat.unity", "left and right unity", s.count, [&](long i) {
    Rng g = R(i);
    int n = static_cast<int>(g.below(s.nmax + 1));
    C c = gen(g, n);
    std::vector<C> us;
    for (int j = 0; j < n; ++j)
      us.push_back(v.in_unit(c, j));
    std::string w = tag("right", v.diff(v.gamma(c, us), c));
    if (w.empty())
      w = tag("left", v.diff(v.gamma(v.out_unit(c), {c}), c));
    return w;
  }));
  rep.add(run_check("multicat.associativity", "associativity of composition", s.count,
                    [&](long i) {
                      Rng g = R(i);
                      int n = arity_of(g);
                      C c = gen(g, n);
                      std::vector<int> ks;
                      auto ds = detail::gen_inner(gen, g, n, s.inner_max, ks);
                      std::vector<C> es;
                      std::vector<std::vector<C>> blocks;
                      for (int j = 0; j < n; ++j) {
                        std::vector<int> ls;
                        blocks.push_back(detail::gen_inner(gen, g, ks[j], 1, ls));
                        es.insert(es.end(), blocks.back().begin(), blocks.back().end());
                      }
                      C lhs = v.gamma(v.gamma(c, ds), es);
                      std::vector<C> inner;
                      for (int j = 0; j < n; ++j)
                        inner.push_back(v.gamma(ds[j], blocks[j]));
                      return v.diff(lhs, v.gamma(c, inner));
                    }));
  if (!v.act)
    return rep;
  rep.add(run_check("multicat.action", "symmetric group action", s.count, [&](long i) {
    Rng g = R(i);
    int n = arity_of(g);
    C c = gen(g, n);
    Perm a = detail::random_perm(g, n), b = detail::random_perm(g, n);
    std::string w = tag("identity", v.diff(v.act(c, Perm::identity(n)), c));
    if (w.empty())
      w = tag("product " + a.str() + " " + b.str(), v.diff(v.act(v.act(c, a), b), v.act(c, a * b)));
    return w;
  }));
  rep.add(run_check("multicat.top-equivariance", "top equivariance", s.count, [&](long i) {
    Rng g = R(i);
    int n = arity_of(g);
    C c = gen(g, n);
    Perm a = detail::random_perm(g, n);
    std::vector<int> ks;
    auto ds = detail::gen_inner(gen, g, n, s.inner_max, ks);
    C lhs = v.gamma(v.act(c, a), ds);
    C rhs = v.act(v.gamma(c, permute_cells(a, ds)), top_perm(a, ks));
    return tag(a.str(), v.diff(lhs, rhs));
  }));
  rep.add(run_check("multicat.bottom-equivariance", "bottom equivariance", s.count, [&](long i) {
    Rng g = R(i);
    int n = arity_of(g);
    C c = gen(g, n);
    std::vector<int> ks;
    auto ds = detail::gen_inner(gen, g, n, s.inner_max, ks);
    std::vector<Perm> ts;
    std::vector<C> acted;
    for (int j = 0; j < n; ++j) {
      ts.push_back(detail::random_perm(g, ks[j]));
      acted.push_back(v.act(ds[j], ts[j]));
    }
    return v.diff(v.gamma(c, acted), v.act(v.gamma(c, ds), block_sum(ts)));
  }));
  return rep;
}

// Pseudo symmetric Cat-multifunctor M -> N. pseudo(p, s) is the invertible
// 2-cell F(p^s) -> (Fp)^s.
template <class C, class C2, class D, class D2>
struct PseudoSymmetricData
{
  std::function<D(C const &)> cell;
  std::function<D2(C2 const &)> cell2;
  std::function<D2(C const &, Perm const &)> pseudo;
};

// Optional 2-cell generator in the source: a 2-cell out of p with its target.
template <class C, class C2>
using TwoCellGen = std::function<std::pair<C2, C>(Rng &, C const &)>;

template <class C, class C2, class D, class D2>
Report check_pseudo_symmetric(MulticatView<C, C2> const &m, MulticatView<D, D2> const &n,
                              PseudoSymmetricData<C, C2, D, D2> const &f,
                              CellGen<C> const &gen, MulticatSample const &s,
                              TwoCellGen<C, C2> const &gen2 = {})
{
  using detail::tag;
  Report rep;
  rep.suite = m.name + "->" + n.name + ".pseudo-symmetric";
  auto R = [&](long i) { return Rng(detail::mc_mix(s.seed + 17, i)); };
  auto arity_of = [&](Rng &g) { return 1 + static_cast<int>(g.below(s.nmax)); };

  rep.add(run_check("pseudo.units", "strict preservation of units", s.count, [&](long i) {
    Rng g = R(i);
    C c = gen(g, arity_of(g));
    return n.diff(f.cell(m.out_unit(c)), n.out_unit(f.cell(c)));
  }));
  rep.add(run_check("pseudo.composition", "strict preservation of composition", s.count,
                    [&](long i) {
                      Rng g = R(i);
                      int k = arity_of(g);
                      C c = gen(g, k);
                      std::vector<int> ks;
                      auto ds = detail::gen_inner(gen, g, k, s.inner_max, ks);
                      std::vector<D> fds;
                      for (auto const &d : ds)
                        fds.push_back(f.cell(d));
                      return n.diff(f.cell(m.gamma(c, ds)), n.gamma(f.cell(c), fds));
                    }));
  if (gen2) {
    rep.add(run_check("pseudo.functoriality", "component functoriality", s.count, [&](long i) {
      Rng g = R(i);
      C c = gen(g, arity_of(g));
      auto [a, c2] = gen2(g, c);
      auto [b, c3] = gen2(g, c2);
      std::string w = tag("identity", n.diff2(f.cell2(m.id2(c)), n.id2(f.cell(c))));
      if (w.empty())
        w = tag("composite", n.diff2(f.cell2(m.vcomp(b, a)), n.vcomp(f.cell2(b), f.cell2(a))));
      return w;
    }));
    rep.add(run_check("pseudo.naturality", "naturality of the pseudo symmetry", s.count,
                      [&](long i) {
                        Rng g = R(i);
                        int k = arity_of(g);
                        C c = gen(g, k);
                        auto [a, c2] = gen2(g, c);
                        Perm sg = detail::random_perm(g, k);
                        D2 lhs = n.vcomp(f.pseudo(c2, sg), f.cell2(m.act2(a, sg)));
                        D2 rhs = n.vcomp(n.act2(f.cell2(a), sg), f.pseudo(c, sg));
                        return tag(sg.str(), n.diff2(lhs, rhs));
                      }));
  }
  rep.add(run_check("pseudo.unit-permutation", "unit permutation", s.count, [&](long i) {
    Rng g = R(i);
    int k = arity_of(g);
    C c = gen(g, k);
    return n.diff2(f.pseudo(c, Perm::identity(k)), n.id2(f.cell(c)));
  }));
  rep.add(run_check("pseudo.product-permutation", "product permutation", s.count, [&](long i) {
    Rng g = R(i);
    int k = arity_of(g);
    C c = gen(g, k);
    Perm a = detail::random_perm(g, k), b = detail::random_perm(g, k);
    D2 lhs = f.pseudo(c, a * b);
    D2 rhs = n.vcomp(n.act2(f.pseudo(c, a), b), f.pseudo(m.act(c, a), b));
    return tag(a.str() + " " + b.str(), n.diff2(lhs, rhs));
  }));
  rep.add(run_check("pseudo.top-equivariance", "top equivariance", s.count, [&](long i) {
    Rng g = R(i);
    int k = arity_of(g);
    C c = gen(g, k);
    Perm a = detail::random_perm(g, k);
    std::vector<int> ks;
    auto ds = detail::gen_inner(gen, g, k, s.inner_max, ks);
    std::vector<D2> ids;
    for (auto const &d : ds)
      ids.push_back(n.id2(f.cell(d)));
    D2 lhs = n.gamma2(f.pseudo(c, a), ids);
    D2 rhs = f.pseudo(m.gamma(c, permute_cells(a, ds)), top_perm(a, ks));
    return tag(a.str(), n.diff2(lhs, rhs));
  }));
  rep.add(run_check("pseudo.bottom-equivariance", "bottom equivariance", s.count, [&](long i) {
    Rng g = R(i);
    int k = arity_of(g);
    C c = gen(g, k);
    std::vector<int> ks;
    auto ds = detail::gen_inner(gen, g, k, s.inner_max, ks);
    std::vector<Perm> ts;
    std::vector<D2> comps;
    for (int j = 0; j < k; ++j) {
      ts.push_back(detail::random_perm(g, ks[j]));
      comps.push_back(f.pseudo(ds[j], ts[j]));
    }
    D2 lhs = n.gamma2(n.id2(f.cell(c)), comps);
    D2 rhs = f.pseudo(m.gamma(c, ds), block_sum(ts));
    return n.diff2(lhs, rhs);
  }));
  return rep;
}

// Strict symmetric multifunctor: units, composition and the action preserved
// on the nose.
template <class C, class C2, class D, class D2>
Report check_strict_multifunctor(MulticatView<C, C2> const &m, MulticatView<D, D2> const &n,
                                 std::function<D(C const &)> const &cell,
                                 CellGen<C> const &gen, MulticatSample const &s)
{
  using detail::tag;
  Report rep;
  rep.suite = m.name + "->" + n.name + ".strict";
  auto R = [&](long i) { return Rng(detail::mc_mix(s.seed + 23, i)); };
  auto arity_of = [&](Rng &g) { return static_cast<int>(g.below(s.nmax + 1)); };
  rep.add(run_check("strict.units", "preservation of units", s.count, [&](long i) {
    Rng g = R(i);
    C c = gen(g, arity_of(g));
    return n.diff(cell(m.out_unit(c)), n.out_unit(cell(c)));
  }));
  rep.add(run_check("strict.composition", "preservation of composition", s.count, [&](long i) {
    Rng g = R(i);
    int k = arity_of(g);
    C c = gen(g, k);
    std::vector<int> ks;
    auto ds = detail::gen_inner(gen, g, k, s.inner_max, ks);
    std::vector<D> fds;
    for (auto const &d : ds)
      fds.push_back(cell(d));
    return n.diff(cell(m.gamma(c, ds)), n.gamma(cell(c), fds));
  }));
  rep.add(run_check("strict.symmetry", "preservation of the symmetric group action", s.count,
                    [&](long i) {
                      Rng g = R(i);
                      int k = arity_of(g);
                      C c = gen(g, k);
                      Perm a = detail::random_perm(g, k);
                      return tag(a.str(), n.diff(cell(m.act(c, a)), n.act(cell(c), a)));
                    }));
  return rep;
}

// The pseudo symmetry axioms for every permutation of the arity of each listed
// cell. Inner cells for the equivariance axioms come from gen; bottom
// equivariance runs over every tuple of inner permutations.
template <class C, class C2, class D, class D2>
Report check_pseudo_symmetric_all(MulticatView<C, C2> const &m, MulticatView<D, D2> const &n,
                                  PseudoSymmetricData<C, C2, D, D2> const &f,
                                  std::vector<C> const &cells, CellGen<C> const &gen,
                                  int inner_max, std::uint64_t seed,
                                  TwoCellGen<C, C2> const &gen2 = {})
{
  using detail::tag;
  Report rep;
  rep.suite = m.name + "->" + n.name + ".pseudo-symmetric";
  struct Job
  {
    std::size_t c;
    Perm a, b;
  };
  std::vector<Job> singles, pairs;
  for (std::size_t ci = 0; ci < cells.size(); ++ci) {
    auto ps = Perm::all(m.arity(cells[ci]));
    for (auto const &a : ps) {
      singles.push_back({ci, a, a});
      for (auto const &b : ps)
        pairs.push_back({ci, a, b});
    }
  }
  long ns = static_cast<long>(singles.size()), np = static_cast<long>(pairs.size());
  long nc = static_cast<long>(cells.size());
  auto R = [&](long i, std::uint64_t salt) { return Rng(detail::mc_mix(seed + salt, i)); };

  rep.add(run_check("pseudo.units", "strict preservation of units", nc, [&](long i) {
    C const &c = cells[i];
    return n.diff(f.cell(m.out_unit(c)), n.out_unit(f.cell(c)));
  }));
  rep.add(run_check("pseudo.composition", "strict preservation of composition", nc, [&](long i) {
    Rng g = R(i, 41);
    C const &c = cells[i];
    std::vector<int> ks;
    auto ds = detail::gen_inner(gen, g, m.arity(c), inner_max, ks);
    std::vector<D> fds;
    for (auto const &d : ds)
      fds.push_back(f.cell(d));
    return n.diff(f.cell(m.gamma(c, ds)), n.gamma(f.cell(c), fds));
  }));
  if (gen2) {
    rep.add(run_check("pseudo.functoriality", "component functoriality", nc, [&](long i) {
      Rng g = R(i, 43);
      C const &c = cells[i];
      auto [a, c2] = gen2(g, c);
      auto [b, c3] = gen2(g, c2);
      std::string w = tag("identity", n.diff2(f.cell2(m.id2(c)), n.id2(f.cell(c))));
      if (w.empty())
        w = tag("composite", n.diff2(f.cell2(m.vcomp(b, a)), n.vcomp(f.cell2(b), f.cell2(a))));
      return w;
    }));
    rep.add(run_check("pseudo.naturality", "naturality of the pseudo symmetry", ns, [&](long i) {
      Rng g = R(i, 47);
      auto const &j = singles[i];
      C const &c = cells[j.c];
      auto [a, c2] = gen2(g, c);
      D2 lhs = n.vcomp(f.pseudo(c2, j.a), f.cell2(m.act2(a, j.a)));
      D2 rhs = n.vcomp(n.act2(f.cell2(a), j.a), f.pseudo(c, j.a));
      return tag(j.a.str(), n.diff2(lhs, rhs));
    }));
  }
  rep.add(run_check("pseudo.unit-permutation", "unit permutation", nc, [&](long i) {
    C const &c = cells[i];
    return n.diff2(f.pseudo(c, Perm::identity(m.arity(c))), n.id2(f.cell(c)));
  }));
  rep.add(run_check("pseudo.product-permutation", "product permutation", np, [&](long i) {
    auto const &j = pairs[i];
    C const &c = cells[j.c];
    D2 lhs = f.pseudo(c, j.a * j.b);
    D2 rhs = n.vcomp(n.act2(f.pseudo(c, j.a), j.b), f.pseudo(m.act(c, j.a), j.b));
    return tag(j.a.str() + " " + j.b.str(), n.diff2(lhs, rhs));
  }));
  rep.add(run_check("pseudo.top-equivariance", "top equivariance", ns, [&](long i) {
    Rng g = R(i, 53);
    auto const &j = singles[i];
    C const &c = cells[j.c];
    std::vector<int> ks;
    auto ds = detail::gen_inner(gen, g, m.arity(c), inner_max, ks);
    std::vector<D2> ids;
    for (auto const &d : ds)
      ids.push_back(n.id2(f.cell(d)));
    D2 lhs = n.gamma2(f.pseudo(c, j.a), ids);
    D2 rhs = f.pseudo(m.gamma(c, permute_cells(j.a, ds)), top_perm(j.a, ks));
    return tag(j.a.str(), n.diff2(lhs, rhs));
  }));
  rep.add(run_check("pseudo.bottom-equivariance", "bottom equivariance", nc, [&](long i) {
    Rng g = R(i, 59);
    C const &c = cells[i];
    int k = m.arity(c);
    std::vector<int> ks;
    auto ds = detail::gen_inner(gen, g, k, inner_max, ks);
    std::vector<std::vector<Perm>> choices;
    std::vector<long> rad;
    long total = 1;
    for (int j = 0; j < k; ++j) {
      choices.push_back(Perm::all(ks[j]));
      rad.push_back(static_cast<long>(choices.back().size()));
      total *= rad.back();
    }
    for (long t = 0; t < total; ++t) {
      auto pick = decode_tuple(t, rad);
      std::vector<Perm> ts;
      std::vector<D2> comps;
      for (int j = 0; j < k; ++j) {
        ts.push_back(choices[j][pick[j]]);
        comps.push_back(f.pseudo(ds[j], ts[j]));
      }
      D2 lhs = n.gamma2(n.id2(f.cell(c)), comps);
      D2 rhs = f.pseudo(m.gamma(c, ds), block_sum(ts));
      std::string w = n.diff2(lhs, rhs);
      if (!w.empty())
        return block_sum(ts).str() + ": " + w;
    }
    return std::string();
  }));
  return rep;
}

// (GF)_{s;p} = G_{s;Fp} o G(F_{s;p})
template <class C, class C2, class D, class D2, class E, class E2>
PseudoSymmetricData<C, C2, E, E2>
compose_pseudo_symmetric(PseudoSymmetricData<D, D2, E, E2> const &g,
                         PseudoSymmetricData<C, C2, D, D2> const &f,
                         MulticatView<E, E2> const &target)
{
  PseudoSymmetricData<C, C2, E, E2> r;
  r.cell = [g, f](C const &c) { return g.cell(f.cell(c)); };
  r.cell2 = [g, f](C2 const &a) { return g.cell2(f.cell2(a)); };
  r.pseudo = [g, f, target](C const &c, Perm const &s) {
    return target.vcomp(g.pseudo(f.cell(c), s), g.cell2(f.pseudo(c, s)));
  };
  return r;
}

// Identity pseudo components for a strict multifunctor.
template <class C, class C2, class D, class D2>
PseudoSymmetricData<C, C2, D, D2> strict_symmetric(std::function<D(C const &)> cell,
                                                   std::function<D2(C2 const &)> cell2,
                                                   MulticatView<D, D2> const &target)
{
  PseudoSymmetricData<C, C2, D, D2> r;
  r.cell = cell;
  r.cell2 = cell2;
  r.pseudo = [cell, target](C const &c, Perm const &s) {
    return target.id2(target.act(cell(c), s));
  };
  return r;
}

// Round trips of a multifunctor against supplied preimage procedures.
template <class C, class D>
struct RoundTrip
{
  std::string name;
  std::function<D(C const &)> forward;
  std::function<C(D const &)> back;
  std::function<std::string(C const &, C const &)> diff_source;
  std::function<std::string(D const &, D const &)> diff_target;
};

template <class C, class D>
Report multiequivalence_roundtrip(RoundTrip<C, D> const &t,
                                  std::function<C(Rng &)> const &gen_source,
                                  std::function<D(Rng &)> const &gen_target, long count,
                                  std::uint64_t seed)
{
  Report rep;
  rep.suite = t.name + ".roundtrip";
  rep.add(run_check(t.name + ".back-after-forward", "injective on multimorphisms", count,
                    [&](long i) {
                      Rng g(detail::mc_mix(seed + 31, i));
                      C c = gen_source(g);
                      return t.diff_source(t.back(t.forward(c)), c);
                    }));
  if (gen_target)
    rep.add(run_check(t.name + ".forward-after-back", "surjective on multimorphisms", count,
                      [&](long i) {
                        Rng g(detail::mc_mix(seed + 37, i));
                        D d = gen_target(g);
                        return t.diff_target(t.forward(t.back(d)), d);
                      }));
  return rep;
}

} // namespace bpk

#endif
