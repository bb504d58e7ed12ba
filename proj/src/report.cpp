#include "bernalg/report.hpp"

#include <sstream>

namespace bernalg {

Json vector_json(const Vec<Rational>& x) {
  Json out = Json::array();
  for (const auto& c : x) out.push_back(c.get_str());
  return out;
}

Json subspace_json(const Subspace<Rational>& s) {
  Json rows = Json::array();
  for (const auto& v : s.basis_vectors()) rows.push_back(vector_json(v));
  return {{"dim", s.dim()}, {"basis", std::move(rows)}};
}

Json witness_json(const Witness<Rational>& w, const Names& names) {
  Json assignment = Json::object();
  for (const auto& [var, value] : w.assignment) assignment[var] = format_element(value, names);
  Json out = {{"what", w.what}, {"assignment", std::move(assignment)}};
  if (w.residual.size() == names.size())
    out["residual"] = format_element(w.residual, names);
  else if (!w.residual.empty())
    out["residual"] = vector_json(w.residual);
  return out;
}

Json check_json(const Check<Rational>& c, const Names& names) {
  Json out = {{"holds", c.holds()}};
  if (c.witness) out["witness"] = witness_json(*c.witness, names);
  return out;
}

Json chain_json(const PowerChain<Rational>& chain) {
  Json dims = Json::array();
  for (const auto& t : chain.terms) dims.push_back(t.dim());
  Json out = {{"kind", to_string(chain.kind)}, {"dims", std::move(dims)}, {"stabilized", chain.stabilized}};
  out["nil_index"] = chain.nil_index ? Json(*chain.nil_index) : Json(nullptr);
  return out;
}

Json peirce_json(const PeirceData<Rational>& p, const Names& names) {
  return {{"idempotent", format_element(p.e, names)},
          {"dim_U", p.U.dim()},
          {"dim_V", p.V.dim()},
          {"dim_N", p.N.dim()},
          {"U", subspace_json(p.U)},
          {"V", subspace_json(p.V)},
          {"annU", subspace_json(p.annU)}};
}

Json fixed_subspace_json(const FixedSubspaceResult<Rational>& r) {
  Json dims = Json::array();
  for (const auto& s : r.chain) dims.push_back(s.dim());
  return {{"chain_dims", std::move(dims)}, {"steps", r.steps}, {"gfp", subspace_json(r.gfp)}};
}

Json mult_closure_json(const MultClosure<Rational>& m) {
  Json out = {{"generators", m.generators.size()}, {"closure_dim", m.span_closure.size()}, {"nilpotent", m.nilpotent}};
  out["nil_index"] = m.nil_index ? Json(*m.nil_index) : Json(nullptr);
  return out;
}

Json certificate_json(const Thm43Certificate<Rational>& c) {
  Json steps = Json::array();
  for (const auto& s : c.eq4)
    steps.push_back({{"i", s.i}, {"dim_N_i", s.dim_N_i}, {"dim_F_i_plus_N_i1", s.dim_rhs}, {"holds", s.holds}});
  return {{"F", subspace_json(c.subalgebra)},
          {"m", c.m},
          {"eq4", std::move(steps)},
          {"eq4_checked_up_to", c.eq4_checked_up_to},
          {"eq4_all_hold", c.eq4_all_hold},
          {"N_equals_F_plus_N_m", c.n_equals_F_plus_Nm},
          {"N_m_zero", c.N_nilpotent},
          {"closes", c.closes()}};
}

Json flags_json(const Classification<Rational>& c, const Names& names) {
  Json flags = Json::object();
  Json witnesses = Json::object();
  auto record = [&](const char* key, const Check<Rational>& check) {
    flags[key] = check.holds();
    if (check.witness) witnesses[key] = witness_json(*check.witness, names);
  };
  record("baric", c.baric);
  if (c.bernstein) record("bernstein", *c.bernstein);
  if (c.barideal_nilpotent) record("barideal_nilpotent", *c.barideal_nilpotent);
  if (c.peirce_relations) record("peirce_relations", *c.peirce_relations);
  if (c.jordan) record("jordan", *c.jordan);
  if (c.nuclear) record("nuclear", *c.nuclear);
  return {{"flags", std::move(flags)}, {"witnesses", std::move(witnesses)}};
}

namespace {

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

bool is_flat(const Json& j) {
  if (!j.is_array()) return !j.is_object();
  for (const auto& x : j)
    if (x.is_object() || (x.is_array() && !is_flat(x))) return false;
  return true;
}

std::string flat_text(const Json& j) {
  if (!j.is_array()) return scalar_text(j);
  std::string out = "[";
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (i) out += ", ";
    out += flat_text(j[i]);
  }
  return out + "]";
}

void render(const Json& j, int indent, std::ostringstream& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (is_flat(value)) {
        out << pad << key << ": " << flat_text(value) << "\n";
      } else if (value.empty()) {
        out << pad << key << ": " << (value.is_object() ? "{}" : "[]") << "\n";
      } else {
        out << pad << key << ":\n";
        render(value, indent + 2, out);
      }
    }
  } else if (j.is_array()) {
    for (const auto& item : j) {
      if (is_flat(item)) {
        out << pad << "- " << flat_text(item) << "\n";
      } else {
        out << pad << "-\n";
        render(item, indent + 2, out);
      }
    }
  } else {
    out << pad << scalar_text(j) << "\n";
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::ostringstream out;
  render(j, 0, out);
  return out.str();
}

}  // namespace bernalg
