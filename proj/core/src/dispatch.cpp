#include "loday/dispatch.hpp"

#include <sstream>

namespace loday {

namespace {

const NamedPackage& need_package(const DefinitionDocument& doc, const std::string& entity) {
  const NamedPackage* p = doc.find_package(entity);
  if (!p) throw usage_error("unknown entity \"" + entity + "\"");
  return *p;
}

template <typename T>
const T& need_payload(const DefinitionDocument& doc, const std::string& entity,
                      const std::string& kind) {
  const NamedPackage& p = need_package(doc, entity);
  const T* payload = std::get_if<T>(&p.payload);
  if (!payload)
    throw usage_error("entity \"" + entity + "\" has kind \"" + p.kind + "\", not \"" + kind +
                      "\"");
  return *payload;
}

const PkgBracket& need_bracket(const DefinitionDocument& doc, const std::string& entity) {
  const NamedPackage& p = need_package(doc, entity);
  const PkgBracket* payload = std::get_if<PkgBracket>(&p.payload);
  if (!payload)
    throw usage_error("entity \"" + entity + "\" has kind \"" + p.kind +
                      "\", expected a bracket package");
  return *payload;
}

const StructureTensor& need_tensor(const DefinitionDocument& doc, const std::string& name) {
  const TensorEntry* t = doc.find_tensor(name);
  if (!t) throw usage_error("unknown tensor \"" + name + "\"");
  return t->tensor;
}

CheckReport with_meta(CheckReport r, const std::string& entity, const std::string& kind) {
  r.entity = entity;
  r.kind = kind;
  return r;
}

}  // namespace

std::vector<std::string> check_kinds() {
  return {"comm-algebra",   "a-module",          "leibniz",
          "lie",            "leibniz-morphism",  "lm-morphism",
          "lm-algebra-object", "lm-lie-object",  "lm-module-algebra",
          "lm-module-lie",  "squares-annihilation", "algebra-morphism",
          "lie-morphism",   "derivation-action", "lie-rinehart",
          "lr-module",      "theorem1",          "leibniz-algebroid",
          "local",          "tensor-square-anchor"};
}

CheckReport run_check(const DefinitionDocument& doc, const std::string& entity,
                      const std::string& kind) {
  if (kind == "comm-algebra")
    return with_meta(check_comm_algebra(need_payload<PkgAlgebra>(doc, entity, kind).a), entity,
                     kind);
  if (kind == "a-module") {
    const PkgModule& p = need_payload<PkgModule>(doc, entity, kind);
    return with_meta(check_a_module(p.a, p.m), entity, kind);
  }
  if (kind == "leibniz") return with_meta(check_leibniz(need_bracket(doc, entity).g), entity, kind);
  if (kind == "lie") {
    const PkgBracket& p = need_bracket(doc, entity);
    return with_meta(check_lie({p.g.field, p.g.dim, p.g.bracket}), entity, kind);
  }
  if (kind == "leibniz-morphism") {
    const PkgLeibnizMorphism& p = need_payload<PkgLeibnizMorphism>(doc, entity, kind);
    return with_meta(check_leibniz_morphism(p.map, p.src, p.dst), entity, kind);
  }
  if (kind == "lm-morphism")
    return with_meta(check_lm_morphism(need_payload<PkgLMMorphism>(doc, entity, kind).mor),
                     entity, kind);
  if (kind == "lm-algebra-object")
    return with_meta(check_algebra_object(need_payload<PkgAlgebraObject>(doc, entity, kind).x),
                     entity, kind);
  if (kind == "lm-lie-object")
    return with_meta(check_lie_object(need_payload<PkgLieObject>(doc, entity, kind).x), entity,
                     kind);
  if (kind == "lm-module-algebra") {
    const PkgModuleOverAlgebra& p = need_payload<PkgModuleOverAlgebra>(doc, entity, kind);
    return with_meta(check_module_over_algebra_object(p.x, p.mod), entity, kind);
  }
  if (kind == "lm-module-lie") {
    const PkgModuleOverLie& p = need_payload<PkgModuleOverLie>(doc, entity, kind);
    return with_meta(check_module_over_lie_object(p.x, p.mod), entity, kind);
  }
  if (kind == "squares-annihilation") {
    const PkgSquaresAnnihilation& p = need_payload<PkgSquaresAnnihilation>(doc, entity, kind);
    return with_meta(check_squares_annihilation(p.x, p.a, p.a_on_n), entity, kind);
  }
  if (kind == "algebra-morphism") {
    const PkgAlgebraMorphism& p = need_payload<PkgAlgebraMorphism>(doc, entity, kind);
    return with_meta(check_algebra_morphism(p.src, p.dst, p.phi1, p.phi0), entity, kind);
  }
  if (kind == "lie-morphism") {
    const PkgLieObjectMorphism& p = need_payload<PkgLieObjectMorphism>(doc, entity, kind);
    return with_meta(check_lie_object_morphism(p.src, p.dst, p.phi1, p.phi0), entity, kind);
  }
  if (kind == "derivation-action") {
    const PkgDerivationAction& p = need_payload<PkgDerivationAction>(doc, entity, kind);
    return with_meta(check_action_by_derivations(p.alg, p.lie, p.rho0, p.rho1, p.rho2), entity,
                     kind);
  }
  if (kind == "lie-rinehart")
    return with_meta(check_lie_rinehart_pair(need_payload<PkgLieRinehart>(doc, entity, kind).p),
                     entity, kind);
  if (kind == "lr-module") {
    const PkgLRModule& p = need_payload<PkgLRModule>(doc, entity, kind);
    return with_meta(check_lr_module(p.p, p.m, p.rho2), entity, kind);
  }
  if (kind == "theorem1")
    return with_meta(check_theorem1_object(need_payload<PkgTheorem1>(doc, entity, kind).d),
                     entity, kind);
  if (kind == "leibniz-algebroid")
    return with_meta(check_leibniz_algebroid(need_payload<PkgAlgebroid>(doc, entity, kind).x),
                     entity, kind);
  if (kind == "local")
    return with_meta(check_local(need_payload<PkgAlgebroid>(doc, entity, "leibniz-algebroid").x),
                     entity, kind);
  if (kind == "tensor-square-anchor")
    return with_meta(
        attempt_tensor_square_anchor(need_payload<PkgLieRinehart>(doc, entity, "lie-rinehart").p),
        entity, kind);
  throw usage_error("unknown check kind \"" + kind + "\"");
}

std::vector<std::string> construct_recipes() {
  return {"reduced-lie",  "hemi-semi",     "tensor-square",        "lm-tensor",
          "square-zero",  "derivations",   "universal-derivations", "tautological",
          "theorem2",     "hemi-semi-algebroid", "reduce-algebroid"};
}

namespace {

void need_args(const std::vector<std::string>& entities, std::size_t lo, std::size_t hi,
               const std::string& recipe, const std::string& what) {
  if (entities.size() < lo || entities.size() > hi)
    throw usage_error("recipe \"" + recipe + "\" expects " + what);
}

}  // namespace

Value run_construct(const DefinitionDocument& doc, const std::string& recipe,
                    const std::vector<std::string>& entities) {
  DocBuilder out(doc.field);

  if (recipe == "reduced-lie") {
    need_args(entities, 1, 1, recipe, "one bracket entity");
    const PkgBracket& g = need_bracket(doc, entities[0]);
    CheckReport ok = check_leibniz(g.g);
    if (!ok.pass())
      throw precondition_error("reduced-lie: input fails check_leibniz",
                               with_meta(ok, entities[0], "leibniz"));
    ReducedLie red = reduced_lie(g.g);
    std::string src = out.add_bracket(entities[0], g.lie_kind, g.g);
    std::string dst = out.add_bracket(entities[0] + ".lie", true, as_leibniz(red.lie));
    out.add_map(entities[0] + ".pi", entities[0] + ".space", entities[0] + ".lie.space", red.pi);
    Value pkg = Value::object();
    pkg.set("kind", Value::string("leibniz-morphism"));
    pkg.set("source", Value::string(src));
    pkg.set("target", Value::string(dst));
    pkg.set("map", Value::string(entities[0] + ".pi"));
    out.add_raw_package(entities[0] + ".pi-morphism", std::move(pkg));
    out.set_provenance(recipe, entities);
    return out.build();
  }

  if (recipe == "hemi-semi") {
    need_args(entities, 2, 2, recipe, "a lie entity and an action tensor");
    const PkgBracket& l = need_bracket(doc, entities[0]);
    const StructureTensor& action = need_tensor(doc, entities[1]);
    LeibnizAlgebra h = hemi_semi_product({l.g.field, l.g.dim, l.g.bracket}, action);
    out.add_bracket(entities[0] + ".hemi", false, h);
    out.set_provenance(recipe, entities);
    return out.build();
  }

  if (recipe == "tensor-square") {
    need_args(entities, 1, 1, recipe, "one lie entity");
    const PkgBracket& l = need_bracket(doc, entities[0]);
    LieAlgebra lie{l.g.field, l.g.dim, l.g.bracket};
    CheckReport ok = check_lie(lie);
    if (!ok.pass())
      throw precondition_error("tensor-square: input fails check_lie",
                               with_meta(ok, entities[0], "lie"));
    out.add_bracket(entities[0] + ".sq", false, tensor_square(lie));
    out.set_provenance(recipe, entities);
    return out.build();
  }

  if (recipe == "lm-tensor") {
    need_args(entities, 2, 2, recipe, "two lm-object entities");
    const PkgLMObject& a = need_payload<PkgLMObject>(doc, entities[0], "lm-object");
    const PkgLMObject& b = need_payload<PkgLMObject>(doc, entities[1], "lm-object");
    out.add_lm_object(entities[0] + ".tensor." + entities[1], tensor_objects(a.obj, b.obj));
    out.set_provenance(recipe, entities);
    return out.build();
  }

  if (recipe == "square-zero") {
    need_args(entities, 2, 2, recipe, "a comm-algebra entity and an a-module entity");
    const PkgAlgebra& a = need_payload<PkgAlgebra>(doc, entities[0], "comm-algebra");
    const PkgModule& m = need_payload<PkgModule>(doc, entities[1], "a-module");
    if (!(m.a == a.a)) throw usage_error("square-zero: module is over a different algebra");
    out.add_comm_algebra(entities[0] + ".sqz", square_zero_extension(a.a, m.m));
    out.set_provenance(recipe, entities);
    return out.build();
  }

  if (recipe == "derivations") {
    need_args(entities, 1, 2, recipe, "a comm-algebra entity and optionally an a-module entity");
    const PkgAlgebra& a = need_payload<PkgAlgebra>(doc, entities[0], "comm-algebra");
    bool self = entities.size() == 1;
    DerivationSpace der =
        self ? derivation_space(a.a)
             : derivation_space(a.a, need_payload<PkgModule>(doc, entities[1], "a-module").m);
    std::string alg_pkg = out.add_comm_algebra(entities[0], a.a);
    std::string mspace = self ? entities[0] + ".space" : entities[1] + ".m.space";
    if (!self) out.add_space(mspace, der.m.dim);
    for (std::size_t i = 0; i < der.dim(); ++i)
      out.add_map(entities[0] + ".der." + std::to_string(i), entities[0] + ".space", mspace,
                  der.basis[i]);
    if (self) {
      // Der(A) is a Lie algebra and (A, Der A) the tautological pair;
      // emit the whole package so it can feed the later recipes.
      LieAlgebra der_lie = der_lie_algebra(der);
      const Field& f = a.a.field;
      std::string lie_pkg = out.add_bracket(entities[0] + ".der", true, as_leibniz(der_lie));
      StructureTensor a_on_l(f, a.a.dim, der.dim(), der.dim());
      std::vector<Vec> flat;
      for (const Matrix& mth : der.basis) flat.push_back(flatten(mth));
      for (std::size_t t = 0; t < a.a.dim; ++t)
        for (std::size_t i = 0; i < der.dim(); ++i) {
          Matrix scaled(f, a.a.dim, a.a.dim);
          for (std::size_t c = 0; c < a.a.dim; ++c)
            scaled.set_col(c, a.a.mult.eval(unit_vec(f, a.a.dim, t), der.basis[i].col(c)));
          std::optional<Vec> coords = coordinates_in_span(f, flat, flatten(scaled));
          if (!coords)
            throw structural_error("derivations: A-action left the derivation algebra");
          for (std::size_t k = 0; k < der.dim(); ++k) a_on_l.at(t, i, k) = (*coords)[k];
        }
      StructureTensor anchor(f, der.dim(), a.a.dim, a.a.dim);
      for (std::size_t i = 0; i < der.dim(); ++i)
        for (std::size_t c = 0; c < a.a.dim; ++c)
          for (std::size_t k = 0; k < a.a.dim; ++k) anchor.at(i, c, k) = der.basis[i].at(k, c);
      out.add_tensor(entities[0] + ".der.a_action",
                     {entities[0] + ".space", entities[0] + ".der.space",
                      entities[0] + ".der.space"},
                     a_on_l);
      out.add_tensor(entities[0] + ".der.anchor",
                     {entities[0] + ".der.space", entities[0] + ".space", entities[0] + ".space"},
                     anchor);
      Value pkg = Value::object();
      pkg.set("kind", Value::string("lie-rinehart"));
      pkg.set("algebra", Value::string(alg_pkg));
      pkg.set("lie", Value::string(lie_pkg));
      pkg.set("a_action", Value::string(entities[0] + ".der.a_action"));
      pkg.set("anchor", Value::string(entities[0] + ".der.anchor"));
      out.add_raw_package(entities[0] + ".der.pair", std::move(pkg));
    }
    out.set_provenance(recipe, entities);
    return out.build();
  }

  if (recipe == "universal-derivations") {
    need_args(entities, 1, 1, recipe, "one lm-algebra-object entity");
    const PkgAlgebraObject& x = need_payload<PkgAlgebraObject>(doc, entities[0],
                                                               "lm-algebra-object");
    DerivationsLMObject u = universal_derivations(x.x);
    out.add_theorem1(entities[0] + ".univ", build_universal_package(u));
    out.set_provenance(recipe, entities);
    return out.build();
  }

  if (recipe == "tautological") {
    need_args(entities, 1, 1, recipe, "one lie-rinehart entity");
    const PkgLieRinehart& p = need_payload<PkgLieRinehart>(doc, entities[0], "lie-rinehart");
    out.add_theorem1(entities[0] + ".taut", build_tautological(p.p));
    out.set_provenance(recipe, entities);
    return out.build();
  }

  if (recipe == "theorem2") {
    need_args(entities, 1, 1, recipe, "one theorem1 entity");
    const PkgTheorem1& d = need_payload<PkgTheorem1>(doc, entities[0], "theorem1");
    Theorem2Result t2 = theorem2_functor(d.d);
    out.add_algebroid(entities[0] + ".algebroid", t2.algebroid);
    out.set_provenance(recipe, entities);
    return out.build();
  }

  if (recipe == "hemi-semi-algebroid") {
    need_args(entities, 3, 3, recipe,
              "a lie-rinehart entity, an a-module entity, and a nabla tensor");
    const PkgLieRinehart& p = need_payload<PkgLieRinehart>(doc, entities[0], "lie-rinehart");
    const PkgModule& m = need_payload<PkgModule>(doc, entities[1], "a-module");
    if (!(m.a == p.p.a))
      throw usage_error("hemi-semi-algebroid: module is over a different algebra");
    const StructureTensor& nabla = need_tensor(doc, entities[2]);
    out.add_algebroid(entities[0] + ".algebroid",
                      hemi_semi_algebroid(p.p, m.m, nabla));
    out.set_provenance(recipe, entities);
    return out.build();
  }

  if (recipe == "reduce-algebroid") {
    need_args(entities, 1, 1, recipe, "one leibniz-algebroid entity");
    const PkgAlgebroid& x = need_payload<PkgAlgebroid>(doc, entities[0], "leibniz-algebroid");
    ReduceResult red = reduce_algebroid(x.x);
    if (!red.pair)
      throw precondition_error("reduce-algebroid: squares ideal is not an A-submodule",
                               with_meta(red.obstruction, entities[0], "reduce-algebroid"));
    std::string pair = out.add_lie_rinehart(entities[0] + ".reduced", *red.pair);
    out.add_space(entities[0] + ".space", x.x.e.dim);
    out.add_map(entities[0] + ".pi", entities[0] + ".space", pair + ".L.space", red.pi);
    out.set_provenance(recipe, entities);
    return out.build();
  }

  throw usage_error("unknown recipe \"" + recipe + "\"");
}

Value report_to_value(const CheckReport& r) {
  Value v = Value::object();
  v.set("format", Value::string("loday-report/1"));
  v.set("entity", Value::string(r.entity));
  v.set("kind", Value::string(r.kind));
  v.set("field", Value::string(r.field.name()));
  v.set("verdict", Value::string(r.pass() ? "pass" : "fail"));
  Value violations = Value::array();
  for (const Violation& viol : r.violations) {
    Value item = Value::object();
    item.set("axiom", Value::string(viol.axiom));
    Value witness = Value::array();
    for (long w : viol.witness) witness.push(Value::integer(w));
    item.set("witness", std::move(witness));
    Value residual = Value::array();
    for (const Scalar& s : viol.residual) residual.push(Value::string(r.field.to_string(s)));
    item.set("residual", std::move(residual));
    violations.push(std::move(item));
  }
  v.set("violations", std::move(violations));
  return v;
}

std::optional<CheckReport> report_from_value(const Value& v) {
  if (!v.is_object()) return std::nullopt;
  const Value* format = v.find("format");
  if (!format || !format->is_string() || format->as_string() != "loday-report/1")
    return std::nullopt;
  const Value* entity = v.find("entity");
  const Value* kind = v.find("kind");
  const Value* field = v.find("field");
  const Value* verdict = v.find("verdict");
  const Value* violations = v.find("violations");
  if (!entity || !entity->is_string() || !kind || !kind->is_string() || !field ||
      !field->is_string() || !verdict || !verdict->is_string() || !violations ||
      !violations->is_array())
    return std::nullopt;
  CheckReport r;
  r.entity = entity->as_string();
  r.kind = kind->as_string();
  const std::string& fname = field->as_string();
  if (fname == "Q") {
    r.field = Field::rationals();
  } else if (fname.size() > 1 && fname[0] == 'F') {
    try {
      r.field = Field::prime_field(std::stol(fname.substr(1)));
    } catch (...) {
      return std::nullopt;
    }
  } else {
    return std::nullopt;
  }
  for (const Value& item : violations->items()) {
    if (!item.is_object()) return std::nullopt;
    const Value* axiom = item.find("axiom");
    const Value* witness = item.find("witness");
    const Value* residual = item.find("residual");
    if (!axiom || !axiom->is_string() || !witness || !witness->is_array() || !residual ||
        !residual->is_array())
      return std::nullopt;
    Violation viol;
    viol.axiom = axiom->as_string();
    for (const Value& w : witness->items()) {
      if (!w.is_int()) return std::nullopt;
      viol.witness.push_back(w.as_int());
    }
    for (const Value& s : residual->items()) {
      if (!s.is_string()) return std::nullopt;
      std::optional<Scalar> sc = r.field.parse(s.as_string());
      if (!sc) return std::nullopt;
      viol.residual.push_back(*sc);
    }
    r.violations.push_back(std::move(viol));
  }
  if ((verdict->as_string() == "pass") != r.pass()) return std::nullopt;
  return r;
}

std::string emit_report_machine(const CheckReport& r) { return emit_value(report_to_value(r)); }

std::string axiom_description(const std::string& axiom_id) {
  // Strip recognizer prefixes like "T1-4:" / "w-" so every alias of a law
  // maps to the same description.
  std::string id = axiom_id;
  auto colon = id.rfind(':');
  if (colon != std::string::npos) id = id.substr(colon + 1);
  for (const char* prefix : {"w-", "v-", "e-", "l-", "m-", "n-", "alg:", "lie:"})
    if (id.rfind(prefix, 0) == 0) id = id.substr(std::string(prefix).size());

  static const std::pair<const char*, const char*> table[] = {
      {"RLJ", "right Leibniz identity"},
      {"antisym", "bracket antisymmetry"},
      {"jacobi", "Jacobi identity"},
      {"comm", "multiplication commutativity"},
      {"assoc", "multiplication associativity"},
      {"unit", "unit law"},
      {"module-unit", "module unit law"},
      {"module-assoc", "module associativity"},
      {"morphism", "bracket preservation"},
      {"lie-module-action", "Lie module action law"},
      {"square", "commuting square"},
      {"hgcomp-square", "commuting square of a composition"},
      {"hgtensor-square", "commuting square of a tensor product"},
      {"g-a-linear", "A-linearity of the structure map g"},
      {"right-module", "right Lie-module law"},
      {"f-equivariant", "equivariance of the vertical map f"},
      {"alpha-ell", "structure-map compatibility (alpha_ell)"},
      {"alpha-ell-descent", "structure map kills the tensor relators"},
      {"alpha-ell-a-linear", "A-linearity of the structure map"},
      {"u-a-linear", "A-linearity of the vertical map"},
      {"alpha0-action", "left action law on the base"},
      {"alpha2-action", "left action law on the top"},
      {"compat3", "three-map compatibility"},
      {"u-alpha1", "vertical compatibility of alpha1"},
      {"u-alpha2", "vertical compatibility of alpha2"},
      {"extra", "squares annihilation"},
      {"algebra-map-0", "multiplicativity of the base component"},
      {"algebra-map-1", "balance of the module component"},
      {"lie-map-0", "Lie map law of the base component"},
      {"lie-map-1", "action compatibility of the top component"},
      {"rho0-in-der", "rho0 lands in Der(A)"},
      {"rho0-lie-hom", "rho0 is a Lie algebra map"},
      {"rho2-lie-hom", "rho2 is a Lie algebra map"},
      {"rho2-a-linear", "A-linearity of rho2"},
      {"rho1-in-der", "rho1 lands in Der(A,M)"},
      {"rho1-a-linear", "A-linearity of rho1"},
      {"compDer1-a", "derivation action on the module (compDer1, first law)"},
      {"compDer1-b", "structure-map equivariance (compDer1, second law)"},
      {"compDer3-a", "rho1 equivariance (compDer3, first law)"},
      {"compDer3-b", "anchor compatibility of rho1 (compDer3, second law)"},
      {"anchor-in-der", "anchor lands in Der(A)"},
      {"anchor-a-linear", "A-linearity of the anchor"},
      {"anchor-lie-hom", "anchor is a Lie algebra map"},
      {"LR-leibniz", "Lie-Rinehart Leibniz rule"},
      {"LBrule", "Leibniz algebroid first-slot rule"},
      {"LBanchor-antihom", "anchor antihomomorphism law"},
      {"local", "second-slot locality rule"},
      {"tensor-anchor-a-linear", "A-linearity of the induced tensor-square anchor"},
      {"mixed-rule", "mixed A/L rule on N"},
      {"lambda-descent", "lambda kills the tensor relators"},
      {"lambda-a-linear", "A-linearity of lambda"},
      {"f-a-linear", "A-linearity of the vertical map f"},
      {"a-stable", "A-stability of the squares ideal"},
      {"balanced", "balance of the structure map"},
      {"reduced-lie-well-defined", "well-definedness of the quotient bracket"},
  };
  for (const auto& [key, desc] : table)
    if (id == key) return desc;
  return "structure law";
}

std::string emit_report_human(const CheckReport& r) {
  std::ostringstream os;
  os << "entity \"" << r.entity << "\" kind \"" << r.kind << "\" over " << r.field.name() << ": "
     << (r.pass() ? "PASS" : "FAIL") << "\n";
  for (const Violation& v : r.violations) {
    os << "  " << v.axiom << " (" << axiom_description(v.axiom) << ") at (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) {
      if (i) os << ",";
      os << v.witness[i];
    }
    os << "): residual [";
    for (std::size_t i = 0; i < v.residual.size(); ++i) {
      if (i) os << ", ";
      os << r.field.to_string(v.residual[i]);
    }
    os << "]\n";
  }
  return os.str();
}

}  // namespace loday
