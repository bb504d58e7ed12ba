#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "bernalg/dsl.hpp"
#include "bernalg/theorem_lab.hpp"

namespace bernalg {

using Json = nlohmann::ordered_json;

using Names = std::vector<std::string>;

/// Scalars are rendered as "p/q" strings, integers as "p".
Json vector_json(const Vec<Rational>& x);

/// {"dim": k, "basis": [[...], ...]} with RREF rows.
Json subspace_json(const Subspace<Rational>& s);

Json witness_json(const Witness<Rational>& w, const Names& names);
Json check_json(const Check<Rational>& c, const Names& names);
Json chain_json(const PowerChain<Rational>& chain);
Json peirce_json(const PeirceData<Rational>& p, const Names& names);
Json fixed_subspace_json(const FixedSubspaceResult<Rational>& r);
Json mult_closure_json(const MultClosure<Rational>& m);
Json certificate_json(const Thm43Certificate<Rational>& c);

/// Flags plus witnesses for every false flag. Jordan and nuclear flags are
/// present only for Bernstein inputs.
Json flags_json(const Classification<Rational>& c, const Names& names);

/// Indented `key: value` rendering for terminals.
std::string render_text(const Json& j);

}  // namespace bernalg
