#ifndef BIPERMKIT_EINFTY_HPP
#define BIPERMKIT_EINFTY_HPP

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "biperm.hpp"
#include "dcat.hpp"
#include "gamma.hpp"
#include "multicat.hpp"
#include "permcat.hpp"

namespace bpk {

// ---- views

// The Barratt-Eccles operad: 1-cells are permutations, and there is exactly
// one 2-cell between any two permutations of the same arity, stored as
// (source, target).
using BECell2 = std::pair<Perm, Perm>;
MulticatView<Perm, BECell2> be_view();

MulticatView<NatPtr, ModPtr> dcat_view(DSample s);

// Object pool per permutative category for sampled comparisons.
using PoolFn = std::function<std::vector<Val>(PermCatPtr const &)>;
MulticatView<NLPtr, NLTransPtr> permcat_view(PoolFn pool, long count, std::uint64_t seed);

MulticatView<GMapPtr, GModPtr> gammacat_view(GSample s);

// ---- E-infinity algebras

// A commutative monoid up to the 2-cell xi: mu => mu^(12).
template <class C, class C2>
struct EInfinity
{
  C unit;
  C mu;
  C2 xi;
};

// mu_0 = unit, mu_1 = identity, mu_n = gamma(mu; mu_{n-1}, 1)
template <class C, class C2>
C einfty_power(MulticatView<C, C2> const &v, EInfinity<C, C2> const &e, int n)
{
  if (n == 0)
    return e.unit;
  C one = v.out_unit(e.mu);
  C r = one;
  for (int k = 2; k <= n; ++k)
    r = v.gamma(e.mu, {r, one});
  return r;
}

namespace detail {

// weak compositions of at most total into n parts
inline void compositions(int n, int total, std::vector<int> &cur,
                         std::vector<std::vector<int>> &out)
{
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  for (int k = 0; k <= total; ++k) {
    cur.push_back(k);
    compositions(n, total - k, cur, out);
    cur.pop_back();
  }
}

} // namespace detail

// Unity, associativity, symmetry, unit and hexagon axioms of the data, then
// the induced cells G(s) = mu_n^s checked against composition of the operad
// for outer arity n <= nmax and total inner arity <= nmax.
template <class C, class C2>
Report check_einfty(MulticatView<C, C2> const &v, EInfinity<C, C2> const &e, int nmax)
{
  using detail::tag;
  Report rep;
  rep.suite = v.name + ".einfty";
  C one = v.out_unit(e.mu);
  C2 i1 = v.id2(one), imu = v.id2(e.mu), iu = v.id2(e.unit);
  Perm sw({2, 1});

  if (v.src2 && v.tgt2)
    rep.add(run_check("einfty.braiding-typing", "the braiding goes from mu to mu^(12)", 1,
                      [&](long) {
                        std::string w = tag("source", v.diff(v.src2(e.xi), e.mu));
                        if (w.empty())
                          w = tag("target", v.diff(v.tgt2(e.xi), v.act(e.mu, sw)));
                        return w;
                      }));
  rep.add(run_check("einfty.unity", "unit laws for the multiplication", 2, [&](long i) {
    C lhs = i == 0 ? v.gamma(e.mu, {e.unit, one}) : v.gamma(e.mu, {one, e.unit});
    return tag(i == 0 ? "left" : "right", v.diff(lhs, one));
  }));
  rep.add(run_check("einfty.associativity", "associativity of the multiplication", 1, [&](long) {
    return v.diff(v.gamma(e.mu, {e.mu, one}), v.gamma(e.mu, {one, e.mu}));
  }));
  rep.add(run_check("einfty.symmetry", "the braiding squares to the identity", 1, [&](long) {
    return v.diff2(v.vcomp(v.act2(e.xi, sw), e.xi), imu);
  }));
  rep.add(run_check("einfty.unit", "the braiding is trivial at the unit", 1, [&](long) {
    return v.diff2(v.gamma2(e.xi, {iu, i1}), i1);
  }));
  rep.add(run_check("einfty.hexagon", "hexagon for the braiding", 1, [&](long) {
    C2 lhs = v.gamma2(e.xi, {imu, i1});
    C2 rhs = v.vcomp(v.act2(v.gamma2(imu, {e.xi, i1}), Perm({1, 3, 2})),
                     v.gamma2(imu, {i1, e.xi}));
    return v.diff2(lhs, rhs);
  }));

  struct Job
  {
    Perm s;
    std::vector<Perm> ts;
  };
  std::vector<Job> jobs_;
  std::map<int, C> powers;
  for (int n = 0; n <= nmax; ++n)
    powers.emplace(n, einfty_power(v, e, n));
  for (int n = 0; n <= nmax; ++n) {
    std::vector<std::vector<int>> ks;
    std::vector<int> cur;
    detail::compositions(n, nmax, cur, ks);
    for (auto const &s : Perm::all(n))
      for (auto const &k : ks) {
        std::vector<std::vector<Perm>> choices;
        std::vector<long> rad;
        long total = 1;
        for (int kj : k) {
          choices.push_back(Perm::all(kj));
          rad.push_back(static_cast<long>(choices.back().size()));
          total *= rad.back();
        }
        for (long t = 0; t < total; ++t) {
          auto pick = decode_tuple(t, rad);
          std::vector<Perm> ts;
          for (std::size_t j = 0; j < k.size(); ++j)
            ts.push_back(choices[j][pick[j]]);
          jobs_.push_back({s, ts});
        }
      }
  }
  auto G = [&](Perm const &s) { return v.act(powers.at(s.size()), s); };
  rep.add(run_check("einfty.extension", "the induced operad map preserves composition",
                    static_cast<long>(jobs_.size()), [&](long i) {
                      auto const &j = jobs_[i];
                      std::vector<C> inner;
                      for (auto const &t : j.ts)
                        inner.push_back(G(t));
                      C lhs = v.gamma(G(j.s), inner);
                      C rhs = G(be_gamma(j.s, j.ts));
                      return tag(be_gamma(j.s, j.ts).str(), v.diff(lhs, rhs));
                    }));
  return rep;
}

// Pseudo symmetric multifunctor out of the operad, exhaustive in the
// permutations of arity <= nmax.
template <class D, class D2>
Report check_pseudo_einfty(MulticatView<D, D2> const &n,
                           PseudoSymmetricData<Perm, BECell2, D, D2> const &f, int nmax,
                           int inner_max, std::uint64_t seed)
{
  auto m = be_view();
  std::vector<Perm> cells;
  for (int k = 0; k <= nmax; ++k)
    for (auto const &p : Perm::all(k))
      cells.push_back(p);
  CellGen<Perm> gen = [](Rng &g, int k) { return detail::random_perm(g, k); };
  TwoCellGen<Perm, BECell2> gen2 = [](Rng &g, Perm const &c) {
    Perm t = detail::random_perm(g, c.size());
    return std::make_pair(BECell2{c, t}, t);
  };
  Report r = check_pseudo_symmetric_all(m, n, f, cells, gen, inner_max, seed, gen2);
  r.suite = n.name + ".pseudo-einfty";
  return r;
}

// ---- stock E-infinity algebras

// Multiplication of a tight bipermutative instance in its additive
// permutative category.
EInfinity<NLPtr, NLTransPtr> bipermutative_einfty(std::shared_ptr<const DCategory> d);

// Pointwise product on a monoid-power Gamma-category; the braiding is the
// identity since the semiring is commutative.
EInfinity<GMapPtr, GModPtr> monoid_power_einfty(std::shared_ptr<const MonoidPowerGamma> y);

// The 2-cell between two multimaps that agree on objects, with identity
// components.
class CoherenceGammaMod : public GammaTwoCell
{
public:
  CoherenceGammaMod(GMapPtr source, GMapPtr target)
  : src_(std::move(source)), tgt_(std::move(target))
  {}
  GMapPtr source() const override { return src_; }
  GMapPtr target() const override { return tgt_; }
  Val component(std::vector<int> const &ms, std::vector<Val> const &xs) const override;

private:
  GMapPtr src_, tgt_;
};

// Strict operad map s -> mu_n^s into Gamma-Cat for a strictly commutative
// algebra. Cells are cached per permutation.
class GammaEInftyMap
{
public:
  explicit GammaEInftyMap(EInfinity<GMapPtr, GModPtr> e, GSample s = {});
  GMapPtr cell(Perm const &s) const;
  GModPtr cell2(BECell2 const &a) const;
  PseudoSymmetricData<Perm, BECell2, GMapPtr, GModPtr> data() const;

private:
  EInfinity<GMapPtr, GModPtr> e_;
  MulticatView<GMapPtr, GModPtr> v_;
  mutable std::mutex mu_;
  mutable std::map<Perm, GMapPtr> cache_;
};

// D-Cat view adapted to PermCat^sg images of Gamma multimaps: objects pooled
// from each Grothendieck category.
PoolFn gro_pools(std::vector<Obj> const &dobjs, long per_fiber, std::uint64_t seed);

} // namespace bpk

#endif
