#ifndef BIPERMKIT_FINCAT_HPP
#define BIPERMKIT_FINCAT_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "report.hpp"
#include "val.hpp"

namespace bpk {

struct StructuralError : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

struct BoundError : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

// Locally finite category over Val descriptors. Object enumeration is optional.
class Category
{
public:
  virtual ~Category() = default;

  virtual bool has_object(Val const &x) const = 0;
  virtual Val dom(Val const &f) const = 0;
  virtual Val cod(Val const &f) const = 0;
  virtual Val id(Val const &x) const = 0;
  // g after f
  virtual Val compose(Val const &g, Val const &f) const = 0;

  virtual std::vector<Val> hom(Val const &a, Val const &b) const;
  virtual bool has_objects() const { return false; }
  virtual std::vector<Val> objects() const;

  virtual std::optional<Val> inverse(Val const &f) const;
  bool is_iso(Val const &f) const { return inverse(f).has_value(); }
};

using CatPtr = std::shared_ptr<const Category>;

class PermutativeCategory : public Category
{
public:
  virtual Val unit() const = 0;
  virtual Val tensor(Val const &a, Val const &b) const = 0;
  virtual Val tensor_mor(Val const &f, Val const &g) const = 0;
  virtual Val braid(Val const &a, Val const &b) const = 0;
};

using PermCatPtr = std::shared_ptr<const PermutativeCategory>;

// Table-backed finite category.
class FinCategory : public Category
{
public:
  struct Mor
  {
    Val id, dom, cod;
  };

  FinCategory() = default;
  FinCategory(std::vector<Val> objects, std::vector<Mor> morphisms,
              std::map<Val, Val> identity,
              std::map<std::pair<Val, Val>, Val> composition);

  bool has_object(Val const &x) const override;
  bool has_morphism(Val const &f) const;
  Val dom(Val const &f) const override;
  Val cod(Val const &f) const override;
  Val id(Val const &x) const override;
  Val compose(Val const &g, Val const &f) const override;
  std::vector<Val> hom(Val const &a, Val const &b) const override;
  bool has_objects() const override { return true; }
  std::vector<Val> objects() const override { return objects_; }

  std::vector<Mor> const &morphisms() const { return morphisms_; }
  std::map<Val, Val> const &identity_map() const { return identity_; }
  std::map<std::pair<Val, Val>, Val> const &composition() const
  {
    return composition_;
  }

  friend bool operator==(FinCategory const &a, FinCategory const &b);

private:
  std::vector<Val> objects_;
  std::vector<Mor> morphisms_;
  std::map<Val, Val> identity_;
  std::map<std::pair<Val, Val>, Val> composition_;
  std::map<Val, std::size_t> mor_index_;
  std::map<std::pair<Val, Val>, std::vector<Val>> homs_;
};

FinCategory terminal_category();
FinCategory discrete_category(std::vector<Val> objects);
// Thin category on the given objects with a -> b iff leq(a, b); morphism ids [a,b].
FinCategory preorder_category(std::vector<Val> objects,
                              std::function<bool(Val const &, Val const &)> leq);
FinCategory product(std::vector<FinCategory> const &cs);
// Tabulates a category with enumerable objects.
FinCategory materialize(Category const &c);
FinCategory materialize(Category const &c, std::vector<Val> const &objects);

Report verify_category(FinCategory const &c,
                       std::optional<std::vector<Val>> bound = std::nullopt);

// Lazy product of categories; objects and morphisms are Val lists.
class ProductCategory : public Category
{
public:
  explicit ProductCategory(std::vector<CatPtr> factors);

  bool has_object(Val const &x) const override;
  Val dom(Val const &f) const override;
  Val cod(Val const &f) const override;
  Val id(Val const &x) const override;
  Val compose(Val const &g, Val const &f) const override;
  std::vector<Val> hom(Val const &a, Val const &b) const override;
  bool has_objects() const override;
  std::vector<Val> objects() const override;
  std::optional<Val> inverse(Val const &f) const override;

  std::vector<CatPtr> const &factors() const { return factors_; }

private:
  std::vector<CatPtr> factors_;
};

struct PointedFinCategory
{
  FinCategory cat;
  Val basepoint;

  PointedFinCategory() = default;
  PointedFinCategory(FinCategory c, Val b);
};

class Functor
{
public:
  virtual ~Functor() = default;
  virtual CatPtr source() const = 0;
  virtual CatPtr target() const = 0;
  virtual Val obj(Val const &x) const = 0;
  virtual Val mor(Val const &f) const = 0;
};

using FunctorPtr = std::shared_ptr<const Functor>;

// Tabulated functor between finite categories.
class FunctorData : public Functor
{
public:
  FunctorData(std::shared_ptr<const FinCategory> src,
              std::shared_ptr<const FinCategory> tgt, std::map<Val, Val> objects,
              std::map<Val, Val> morphisms);

  CatPtr source() const override { return src_; }
  CatPtr target() const override { return tgt_; }
  Val obj(Val const &x) const override;
  Val mor(Val const &f) const override;

  std::shared_ptr<const FinCategory> const &src() const { return src_; }
  std::shared_ptr<const FinCategory> const &tgt() const { return tgt_; }
  std::map<Val, Val> const &object_map() const { return obj_; }
  std::map<Val, Val> const &morphism_map() const { return mor_; }

private:
  std::shared_ptr<const FinCategory> src_, tgt_;
  std::map<Val, Val> obj_, mor_;
};

FunctorData identity_functor(std::shared_ptr<const FinCategory> c);
// Tabulates a functor out of a finite category.
FunctorData tabulate(Functor const &f, std::shared_ptr<const FinCategory> src,
                     std::shared_ptr<const FinCategory> tgt);
// g after f, tabulated on the source of f.
FunctorData compose_functors(FunctorData const &g, FunctorData const &f);

class NatTrans
{
public:
  virtual ~NatTrans() = default;
  virtual FunctorPtr source() const = 0;
  virtual FunctorPtr target() const = 0;
  virtual Val component(Val const &x) const = 0;
};

using NatTransPtr = std::shared_ptr<const NatTrans>;

class NatTransData : public NatTrans
{
public:
  NatTransData(FunctorPtr src, FunctorPtr tgt, std::map<Val, Val> components);

  FunctorPtr source() const override { return src_; }
  FunctorPtr target() const override { return tgt_; }
  Val component(Val const &x) const override;
  std::map<Val, Val> const &components() const { return comp_; }

private:
  FunctorPtr src_, tgt_;
  std::map<Val, Val> comp_;
};

NatTransData identity_nat(FunctorPtr f, std::vector<Val> const &objects);
// t after s, tabulated on objects
NatTransData vertical(NatTrans const &t, NatTrans const &s,
                      std::vector<Val> const &objects);

Report verify_functor(Functor const &f, std::vector<Val> const &bound);
Report verify_natural(NatTrans const &t, std::vector<Val> const &bound);

// Functor I -> Cat presented objectwise.
struct CatDiagram
{
  CatPtr index;
  std::function<CatPtr(Val const &)> at;
  std::function<FunctorPtr(Val const &)> along;
};

// Phi: phi => psi for natural transformations phi, psi: X => Z of diagrams.
struct ModificationData
{
  CatDiagram X, Z;
  std::function<FunctorPtr(Val const &)> phi, psi;
  std::function<NatTransPtr(Val const &)> component;
};

// Objects of X at each bounded index object are supplied by sample(i).
Report verify_modification(ModificationData const &m,
                           std::vector<Val> const &index_bound,
                           std::function<std::vector<Val>(Val const &)> const &sample);

// Deterministic sampling.
class Rng
{
public:
  explicit Rng(std::uint64_t seed)
  : g_(seed)
  {}
  std::uint64_t next() { return g_(); }
  long below(long n) { return n <= 0 ? 0 : static_cast<long>(g_() % static_cast<std::uint64_t>(n)); }

private:
  std::mt19937_64 g_;
};

// All indices of [0,total) if total <= cap, else cap sorted distinct indices.
std::vector<long> choose_indices(long total, long cap, std::uint64_t seed);

// Mixed-radix decode of k into a tuple of indices with the given radices.
std::vector<long> decode_tuple(long k, std::vector<long> const &radices);

} // namespace bpk

#endif
