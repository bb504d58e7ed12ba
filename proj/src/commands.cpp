#include "bernalg/commands.hpp"

#include <random>
#include <utility>

namespace bernalg {

namespace {

using Q = Rational;

Json header(const AlgebraFile& f) {
  return {{"algebra", f.algebra.name()}, {"dimension", f.algebra.dim()}};
}

const Names& names_of(const AlgebraFile& f) { return f.algebra.basis_names(); }

BaricAlgebra<Q> require_baric(const AlgebraFile& f) {
  if (!f.has_weight()) throw InputError("algebra '" + f.algebra.name() + "' declares no weight");
  return f.baric();
}

void merge(Json& into, const Json& from) {
  for (const auto& [key, value] : from.items()) into[key] = value;
}

Json non_baric_flags() {
  return {{"flags", {{"baric", false}}},
          {"witnesses", {{"baric", {{"what", "no weight function declared"}, {"assignment", Json::object()}}}}}};
}

/// Classification of a baric file; when it is not Bernstein, `failure`
/// receives the exit-1 outcome carrying the witnesses.
Classification<Q> classify_bernstein(const AlgebraFile& f, const BaricAlgebra<Q>& b, std::optional<Outcome>& failure,
                                     const std::optional<Vec<Q>>& seed = std::nullopt) {
  Classification<Q> c;
  try {
    c = classify(b, seed);
  } catch (const AlgebraError& e) {
    throw InputError(e.what());
  }
  if (!c.is_bernstein()) {
    Outcome o{header(f), std::nullopt, 1};
    merge(o.report, flags_json(c, names_of(f)));
    o.report["error"] = "algebra is not a Bernstein algebra";
    failure = std::move(o);
  }
  return c;
}

Subspace<Q> working_space(const AlgebraFile& f) {
  return f.has_weight() ? f.baric().barideal() : Subspace<Q>::full(f.algebra.dim());
}

std::vector<Vec<Q>> elements(const AlgebraFile& f, const std::string& text, char separator) {
  try {
    return parse_elements(text, names_of(f), separator);
  } catch (const ParseError& e) {
    throw InputError("in element list: " + e.message() + " (column " + std::to_string(e.column()) + ")");
  }
}

Json chains_json(const AlgebraFile& f, const Options& opt) {
  const Subspace<Q> s = working_space(f);
  Json out = {{"of", f.has_weight() ? "N" : "A"}};
  for (PowerKind kind : {PowerKind::full, PowerKind::principal, PowerKind::plenary})
    out[std::string(to_string(kind))] = chain_json(power_chain(f.algebra, s, kind, opt.max_steps));
  return out;
}

}  // namespace

Outcome run_check(const AlgebraFile& f, const Options& opt) {
  Outcome o{header(f), std::nullopt, 0};
  const auto& a = f.algebra;
  std::optional<BaricAlgebra<Q>> b;
  if (f.has_weight()) {
    b = f.baric();
    const Classification<Q> c = classify(*b);
    merge(o.report, flags_json(c, names_of(f)));
    const bool ok = c.is_baric() && c.is_bernstein() && c.peirce_relations && c.peirce_relations->holds();
    if (!ok) o.exit_code = 1;
  } else {
    merge(o.report, non_baric_flags());
  }

  std::mt19937_64 rng(opt.rng_seed);
  Json ids = Json::object();
  for (IdentityId id : kAllIdentities) {
    if (identity_shape(id).needs_weight && !b) continue;
    std::optional<std::span<const Q>> w;
    if (b) w = b->weight_span();
    const Check<Q> exact = check_identity(a, id, w);
    const Check<Q> probe = random_identity_probe(a, id, w, opt.probe_trials, rng);
    if (exact.holds() && !probe.holds()) throw std::logic_error("random probe contradicts the exhaustive identity check");
    Json entry = check_json(exact, names_of(f));
    entry["probe"] = {{"trials", opt.probe_trials}, {"holds", probe.holds()}};
    ids[std::string(to_string(id))] = std::move(entry);
  }
  o.report["identities"] = std::move(ids);
  o.report["rng_seed"] = opt.rng_seed;
  return o;
}

Outcome run_classify(const AlgebraFile& f, const Options& opt) {
  Outcome o{header(f), std::nullopt, 0};
  if (!f.has_weight()) {
    merge(o.report, non_baric_flags());
    o.report["chains"] = chains_json(f, opt);
    return o;
  }
  const BaricAlgebra<Q> b = f.baric();
  const Classification<Q> c = classify(b);
  merge(o.report, flags_json(c, names_of(f)));
  o.report["weight"] = vector_json(b.weight);
  if (c.is_baric()) o.report["chains"] = chains_json(f, opt);
  if (c.is_bernstein()) {
    o.report["peirce"] = peirce_json(*c.peirce, names_of(f));
    o.report["jordan_conditions"] = {{"a_identity", c.jordan_identity->holds()},
                                     {"c_cube_weight", c.cube_weight->holds()},
                                     {"d_structural", c.jordan->holds()}};
    o.report["fixed_subspace"] = fixed_subspace_json(greatest_fixed_subspace(f.algebra, *c.peirce));
    o.report["mult_closure"] = mult_closure_json(mult_closure_nilpotent(f.algebra, *c.peirce));
  }
  return o;
}

Outcome run_peirce(const AlgebraFile& f, const std::optional<std::string>& seed, const Options&) {
  const BaricAlgebra<Q> b = require_baric(f);
  std::optional<Vec<Q>> x;
  if (seed) {
    const auto parsed = elements(f, *seed, ';');
    if (parsed.size() != 1) throw InputError("--seed expects a single element");
    x = parsed.front();
  }
  std::optional<Outcome> failure;
  const Classification<Q> c = classify_bernstein(f, b, failure, x);
  if (failure) return *failure;
  Outcome o{header(f), std::nullopt, 0};
  o.report["peirce"] = peirce_json(*c.peirce, names_of(f));
  o.report["relations"] = check_json(*c.peirce_relations, names_of(f));
  o.report["nuclear"] = check_json(*c.nuclear, names_of(f));
  if (!c.peirce_relations->holds()) o.exit_code = 1;
  return o;
}

Outcome run_powers(const AlgebraFile& f, PowerKind kind, const Options& opt) {
  Outcome o{header(f), std::nullopt, 0};
  const PowerChain<Q> chain = power_chain(f.algebra, working_space(f), kind, opt.max_steps);
  o.report["of"] = f.has_weight() ? "N" : "A";
  o.report["chain"] = chain_json(chain);
  Json terms = Json::array();
  for (const auto& t : chain.terms) terms.push_back(subspace_json(t));
  o.report["terms"] = std::move(terms);
  return o;
}

Outcome run_fixedspace(const AlgebraFile& f, const Options&) {
  const BaricAlgebra<Q> b = require_baric(f);
  std::optional<Outcome> failure;
  const Classification<Q> c = classify_bernstein(f, b, failure);
  if (failure) return *failure;
  const FixedSubspaceResult<Q> r = greatest_fixed_subspace(f.algebra, *c.peirce);
  Outcome o{header(f), std::nullopt, 0};
  o.report["fixed_subspace"] = fixed_subspace_json(r);
  Json chain = Json::array();
  for (const auto& s : r.chain) chain.push_back(subspace_json(s));
  o.report["chain"] = std::move(chain);
  return o;
}

Outcome run_multalg(const AlgebraFile& f, const Options&) {
  const BaricAlgebra<Q> b = require_baric(f);
  std::optional<Outcome> failure;
  const Classification<Q> c = classify_bernstein(f, b, failure);
  if (failure) return *failure;
  Outcome o{header(f), std::nullopt, 0};
  o.report["mult_closure"] = mult_closure_json(mult_closure_nilpotent(f.algebra, *c.peirce));
  return o;
}

Outcome run_lemma51(const AlgebraFile& f, const std::string& vectors, const Options&) {
  const BaricAlgebra<Q> b = require_baric(f);
  const Subspace<Q> s = Subspace<Q>::span(elements(f, vectors, ';'), f.algebra.dim());
  std::optional<Outcome> failure;
  const Classification<Q> c = classify_bernstein(f, b, failure);
  if (failure) return *failure;
  const Lemma51Result r = lemma51_check(f.algebra, *c.peirce, s);
  Outcome o{header(f), std::nullopt, r.conclusion_holds ? 0 : 1};
  o.report["subspace"] = subspace_json(s);
  o.report["lemma51"] = {{"NI_eq_I", r.NI_eq_I}, {"VI_eq_I", r.VI_eq_I}, {"conclusion_holds", r.conclusion_holds}};
  return o;
}

Outcome run_thm43(const AlgebraFile& f, const std::string& gens_text, const Options&) {
  const auto& a = f.algebra;
  const Subspace<Q> n = working_space(f);
  const std::vector<Vec<Q>> gens = elements(f, gens_text, ',');
  for (const auto& g : gens)
    if (!n.contains(g)) throw InputError("generator " + format_element(g, names_of(f)) + " does not lie in N");
  if (generated_ideal(a, gens, n) != n) throw InputError("generators do not generate N as an ideal");
  Outcome o{header(f), std::nullopt, 0};
  o.report["N"] = subspace_json(n);
  try {
    const Thm43Certificate<Q> cert = thm43_decompose(a, n, gens);
    o.report["certificate"] = certificate_json(cert);
    if (!cert.closes()) o.exit_code = 1;
  } catch (const AlgebraError& e) {
    o.report["error"] = e.what();
    o.exit_code = 1;
  }
  return o;
}

Outcome run_family(FamilyKind kind, std::optional<std::size_t> n) {
  if (kind != FamilyKind::jordan3 && (!n || *n < 1)) throw InputError("family requires --n at least 1");
  const AlgebraFile f = make_family<Q>(kind, n.value_or(0));
  return {header(f), serialize_algebra(f), 0};
}

Outcome run_quotient(const AlgebraFile& f, const std::string& by, const Options&) {
  const BaricAlgebra<Q> b = require_baric(f);
  Subspace<Q> ideal;
  if (by == "annU") {
    std::optional<Outcome> failure;
    const Classification<Q> c = classify_bernstein(f, b, failure);
    if (failure) return *failure;
    ideal = c.peirce->annU;
  } else {
    ideal = Subspace<Q>::span(elements(f, by, ';'), f.algebra.dim());
  }
  try {
    const BaricAlgebra<Q> q = quotient(b, ideal);
    const AlgebraFile out{q.algebra, q.weight};
    return {header(out), serialize_algebra(out), 0};
  } catch (const AlgebraError& e) {
    throw InputError(e.what());
  }
}

}  // namespace bernalg
