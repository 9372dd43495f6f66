#ifndef BIPERMKIT_SERIALIZE_HPP
#define BIPERMKIT_SERIALIZE_HPP

#include <memory>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "biperm.hpp"
#include "dcat.hpp"
#include "fincat.hpp"
#include "gamma.hpp"
#include "perm.hpp"

namespace bpk {

using Json = nlohmann::json;

struct ParseError : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

// Reads a file and parses it; ParseError on I/O or syntax errors.
Json load_json_file(std::string const &path);
// Deterministic text form: two-space indent, keys sorted.
std::string dump(Json const &j);

Json perm_to_json(Perm const &p);
Perm perm_from_json(Json const &j);

Json obj_to_json(Obj const &a);
Obj obj_from_json(Json const &j);
Json mor_to_json(Mor const &f);
Mor mor_from_json(Json const &j);

Json category_to_json(FinCategory const &c);
FinCategory category_from_json(Json const &j);

Json functor_to_json(FunctorData const &f);
FunctorData functor_from_json(Json const &j);

// Source and target functors must be FunctorData.
Json nat_to_json(NatTransData const &t);
NatTransData nat_from_json(Json const &j);

Json pointed_fn_to_json(PointedFn const &f);
PointedFn pointed_fn_from_json(Json const &j);

// Tabulated form of an additive functor over the given bound.
Json smf_to_json(TabulatedSMF const &x);
// Tabulated or stock ("const-unit", "vector") additive functor. The bound is
// returned through bound_out when non-null.
AsmfPtr smf_from_json(Json const &j, std::vector<Obj> *bound_out = nullptr);

Json gamma_to_json(TabulatedGamma const &x);
// Tabulated or stock ("terminal", "unit", "monoid-power") Gamma-category.
GammaPtr gamma_from_json(Json const &j);

// Objects and morphisms of a category with enumerable objects, for output.
Json category_tables(Category const &c, std::vector<Val> const &objects);

} // namespace bpk

#endif
