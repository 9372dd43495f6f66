#ifndef BIPERMKIT_BIPERM_HPP
#define BIPERMKIT_BIPERM_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "fincat.hpp"
#include "perm.hpp"
#include "report.hpp"

namespace bpk {

// Objects of the concrete instances. Number-like instances use a one-entry
// vector {n}; the sequence instance stores the sequence itself.
using Obj = std::vector<int>;

// A morphism is a function on flattened underlying sets, 1-based. In the pointed
// instance an image of 0 means the basepoint.
struct Mor
{
  Obj dom, cod;
  std::vector<int> map;

  friend bool operator==(Mor const &, Mor const &) = default;
  friend auto operator<=>(Mor const &, Mor const &) = default;
};

std::string obj_str(Obj const &a);
std::string mor_str(Mor const &f);
Val obj_val(Obj const &a);
Obj val_obj(Val const &v);
Val mor_val(Mor const &f);
Mor val_mor(Val const &v);

struct DBound
{
  int size = 4;  // number-like instances: objects 0..size
  int len = 2;   // sequences: length <= len
  int max = 3;   // sequences: entries <= max
};

// Tight bipermutative category with element-level structure.
class Biperm
{
public:
  virtual ~Biperm() = default;

  virtual std::string name() const = 0;
  virtual bool is_object(Obj const &a) const = 0;
  virtual Obj zero() const = 0;
  virtual Obj one() const = 0;
  virtual Obj plus(Obj const &a, Obj const &b) const = 0;
  virtual Obj times(Obj const &a, Obj const &b) const = 0;
  // Block decomposition of the flattened underlying set.
  virtual std::vector<int> blocks(Obj const &a) const = 0;
  virtual bool pointed() const { return false; }
  virtual bool valid(Mor const &f) const;
  virtual std::vector<Mor> hom(Obj const &a, Obj const &b) const = 0;
  virtual std::vector<Obj> objects(DBound const &b) const = 0;

  int card(Obj const &a) const;

  Mor id(Obj const &a) const;
  Mor compose(Mor const &g, Mor const &f) const;
  Mor plus(Mor const &f, Mor const &g) const;
  Mor times(Mor const &f, Mor const &g) const;
  bool is_iso(Mor const &f) const;
  Mor inverse(Mor const &f) const;

  virtual Mor beta_plus(Obj const &a, Obj const &b) const;
  virtual Mor beta_times(Obj const &a, Obj const &b) const;
  // left factorization AC + BC -> (A+B)C
  virtual Mor fact_left(Obj const &a, Obj const &b, Obj const &c) const;
  // right factorization AB + AC -> A(B+C)
  virtual Mor fact_right(Obj const &a, Obj const &b, Obj const &c) const;

  // (u,v) for each element of a (x) b, in flat order
  std::vector<std::pair<int, int>> pair_order(Obj const &a, Obj const &b) const;
  // element (u,v) of a x b, flat indices, to its flat index in a (x) b
  int pair_index(Obj const &a, Obj const &b, int u, int v) const;
  std::pair<int, int> pair_split(Obj const &a, Obj const &b, int w) const;

  Obj plus_all(std::vector<Obj> const &as) const;
  Obj times_all(std::vector<Obj> const &as) const;
  Mor plus_all(std::vector<Mor> const &fs) const;
  Mor times_all(std::vector<Mor> const &fs) const;

  // Coherence iso (x)_j a_j -> (x)_j a_{s(j)}, a composite of multiplicative
  // braidings on adjacent factors.
  Mor permute_tensor(std::vector<Obj> const &as, Perm const &s) const;

  // Canonical iso a_1..(a_i + a_i')..a_n -> (a_1..a_i..a_n) + (a_1..a_i'..a_n),
  // i is 0-based.
  Mor laplaza(std::vector<Obj> const &as, int i, Obj const &ai2) const;
};

using BipermPtr = std::shared_ptr<const Biperm>;

// Number-like instance base: objects {n}.
class NumberInstance : public Biperm
{
public:
  bool is_object(Obj const &a) const override;
  Obj zero() const override { return {0}; }
  Obj one() const override { return {1}; }
  Obj plus(Obj const &a, Obj const &b) const override { return {a[0] + b[0]}; }
  Obj times(Obj const &a, Obj const &b) const override { return {a[0] * b[0]}; }
  std::vector<int> blocks(Obj const &a) const override;
  std::vector<Obj> objects(DBound const &b) const override;
  using Biperm::plus;
  using Biperm::times;
};

class FinskInstance : public NumberInstance
{
public:
  std::string name() const override { return "finsk"; }
  std::vector<Mor> hom(Obj const &a, Obj const &b) const override;
};

class FsetInstance : public NumberInstance
{
public:
  std::string name() const override { return "fset"; }
  bool valid(Mor const &f) const override;
  std::vector<Mor> hom(Obj const &a, Obj const &b) const override;
};

class FskelInstance : public NumberInstance
{
public:
  std::string name() const override { return "fskel"; }
  bool pointed() const override { return true; }
  std::vector<Mor> hom(Obj const &a, Obj const &b) const override;
};

class MandellInstance : public Biperm
{
public:
  std::string name() const override { return "mandellA"; }
  bool is_object(Obj const &a) const override;
  Obj zero() const override { return {}; }
  Obj one() const override { return {1}; }
  Obj plus(Obj const &a, Obj const &b) const override;
  Obj times(Obj const &a, Obj const &b) const override;
  std::vector<int> blocks(Obj const &a) const override { return a; }
  bool valid(Mor const &f) const override;
  std::vector<Mor> hom(Obj const &a, Obj const &b) const override;
  std::vector<Obj> objects(DBound const &b) const override;
  using Biperm::plus;
  using Biperm::times;
};

// The natural numbers as a discrete category; every structure morphism is an
// identity, so the multiplicative braiding is trivial.
class DiscreteNatInstance : public NumberInstance
{
public:
  std::string name() const override { return "natdisc"; }
  bool valid(Mor const &f) const override;
  std::vector<Mor> hom(Obj const &a, Obj const &b) const override;
  Mor beta_plus(Obj const &a, Obj const &b) const override;
  Mor beta_times(Obj const &a, Obj const &b) const override;
  Mor fact_left(Obj const &a, Obj const &b, Obj const &c) const override;
  Mor fact_right(Obj const &a, Obj const &b, Obj const &c) const override;
};

// Finite sets with the multiplicative braiding replaced by identities.
class CorruptedFinsk : public FinskInstance
{
public:
  std::string name() const override { return "finsk-corrupted"; }
  Mor beta_times(Obj const &a, Obj const &b) const override;
};

BipermPtr instance_finsk();
BipermPtr instance_fset();
BipermPtr instance_fskel();
BipermPtr instance_mandellA();
BipermPtr instance_natdisc();
BipermPtr instance_by_name(std::string const &name);

struct CheckBudget
{
  long max_instances = 20000;  // per morphism-level check; objects are exhaustive
  std::uint64_t seed = 1;
};

// Morphisms between objects of card <= max_card, at most per_hom from each hom-set.
std::vector<Mor> morphism_sample(Biperm const &b, std::vector<Obj> const &obs,
                                 std::uint64_t seed, int max_card = 4, long per_hom = 16);

Report check_bipermutative(Biperm const &b, DBound const &bound,
                           CheckBudget const &budget = {});

// Formal sum/product words for structure paths.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;
struct Expr
{
  enum Kind { Var, Zero, One, Sum, Prod } kind;
  std::string var;
  ExprPtr l, r;
};

ExprPtr ex_var(std::string name);
ExprPtr ex_zero();
ExprPtr ex_one();
ExprPtr ex_sum(ExprPtr a, ExprPtr b);
ExprPtr ex_prod(ExprPtr a, ExprPtr b);
std::string ex_str(ExprPtr const &e);
// Distinct variables in the two factors of every product.
bool ex_regular(ExprPtr const &e);

using Bindings = std::map<std::string, Obj>;
Obj ex_eval(Biperm const &b, ExprPtr const &e, Bindings const &env);

// One prime edge: lp + (lt (x) g (x) rt) + rp, where missing whiskers are omitted.
struct Edge
{
  std::string gen;  // "1", "fl", "fr", "bp", "bt"
  std::vector<ExprPtr> args;
  bool inv = false;
  ExprPtr lt, rt, lp, rp;
};

struct StructurePath
{
  ExprPtr domain;
  std::vector<Edge> edges;
};

struct PathError : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

Mor evaluate_structure_path(Biperm const &b, StructurePath const &p,
                            Bindings const &env);

// Alternative paths computing the canonical iso of Biperm::laplaza with
// variables a1..an and a_i'. The first is the recipe used by laplaza().
std::vector<StructurePath> laplaza_paths(int n, int i);
Bindings laplaza_bindings(std::vector<Obj> const &as, int i, Obj const &ai2);

Report check_laplaza(Biperm const &b, DBound const &bound, int nmax,
                     CheckBudget const &budget = {});

// Category view of an instance, objects and morphisms as Vals, with the
// additive permutative structure.
class DCategory : public PermutativeCategory
{
public:
  explicit DCategory(BipermPtr b, DBound bound = {});

  bool has_object(Val const &x) const override;
  Val dom(Val const &f) const override;
  Val cod(Val const &f) const override;
  Val id(Val const &x) const override;
  Val compose(Val const &g, Val const &f) const override;
  std::vector<Val> hom(Val const &a, Val const &b) const override;
  bool has_objects() const override { return true; }
  std::vector<Val> objects() const override;  // within the bound
  std::optional<Val> inverse(Val const &f) const override;

  Val unit() const override;
  Val tensor(Val const &a, Val const &b) const override;
  Val tensor_mor(Val const &f, Val const &g) const override;
  Val braid(Val const &a, Val const &b) const override;

  BipermPtr const &base() const { return b_; }

private:
  BipermPtr b_;
  DBound bound_;
};

Report check_permutative(PermutativeCategory const &c, std::vector<Val> const &objs,
                         std::vector<Val> const &mors, std::string const &prefix);

} // namespace bpk

#endif
