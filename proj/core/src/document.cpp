#include "loday/document.hpp"

#include <sstream>

#include "loday/errors.hpp"

namespace loday {

const NamedPackage* DefinitionDocument::find_package(std::string_view name) const {
  for (const auto& [n, p] : packages)
    if (n == name) return &p;
  return nullptr;
}

const TensorEntry* DefinitionDocument::find_tensor(std::string_view name) const {
  auto it = tensors.find(std::string(name));
  return it == tensors.end() ? nullptr : &it->second;
}

const MapEntry* DefinitionDocument::find_map(std::string_view name) const {
  auto it = maps.find(std::string(name));
  return it == maps.end() ? nullptr : &it->second;
}

namespace {

constexpr const char* kFormatTag = "loday-def/1";

class Loader {
 public:
  explicit Loader(const Value& root) : root_(root) {}

  LoadResult run() {
    if (!load()) return {std::nullopt, diag_};
    return {std::move(doc_), std::nullopt};
  }

 private:
  const Value& root_;
  DefinitionDocument doc_;
  std::optional<Diagnostic> diag_;

  bool fail(const std::string& cls, const std::string& msg, const Value& at) {
    if (!diag_) diag_ = Diagnostic{cls, msg, at.line, at.col, {}};
    return false;
  }

  bool schema(const std::string& msg, const Value& at) { return fail("bad-schema", msg, at); }

  const Value* key(const Value& obj, const std::string& k) { return obj.find(k); }

  bool require_string(const Value& obj, const std::string& k, std::string& out) {
    const Value* v = obj.find(k);
    if (!v || !v->is_string()) return schema("missing or non-string field \"" + k + "\"", obj);
    out = v->as_string();
    return true;
  }

  bool require_int(const Value& obj, const std::string& k, std::int64_t& out) {
    const Value* v = obj.find(k);
    if (!v || !v->is_int()) return schema("missing or non-integer field \"" + k + "\"", obj);
    out = v->as_int();
    return true;
  }

  bool scalar(const Value& v, Scalar& out) {
    if (!v.is_string()) return schema("scalars are written as strings", v);
    std::optional<Scalar> s = doc_.field.parse(v.as_string());
    if (!s) return fail("invalid-scalar", "invalid scalar \"" + v.as_string() + "\"", v);
    out = *s;
    return true;
  }

  bool space_dim(const Value& ref, const std::string& name, std::size_t& out) {
    auto it = doc_.spaces.find(name);
    if (it == doc_.spaces.end())
      return fail("unresolved-reference", "unknown space \"" + name + "\"", ref);
    out = it->second;
    return true;
  }

  bool tensor_ref(const Value& obj, const std::string& k, std::size_t d1, std::size_t d2,
                  std::size_t d3, StructureTensor& out) {
    std::string name;
    if (!require_string(obj, k, name)) return false;
    const TensorEntry* t = doc_.find_tensor(name);
    if (!t)
      return fail("unresolved-reference", "unknown tensor \"" + name + "\"", *obj.find(k));
    if (t->tensor.d1() != d1 || t->tensor.d2() != d2 || t->tensor.d3() != d3) {
      std::ostringstream os;
      os << "tensor \"" << name << "\" has shape (" << t->tensor.d1() << "," << t->tensor.d2()
         << "," << t->tensor.d3() << "), expected (" << d1 << "," << d2 << "," << d3 << ")";
      return fail("dimension-clash", os.str(), *obj.find(k));
    }
    out = t->tensor;
    return true;
  }

  bool map_ref(const Value& obj, const std::string& k, std::size_t rows, std::size_t cols,
               Matrix& out) {
    std::string name;
    if (!require_string(obj, k, name)) return false;
    const MapEntry* m = doc_.find_map(name);
    if (!m) return fail("unresolved-reference", "unknown map \"" + name + "\"", *obj.find(k));
    if (m->matrix.rows() != rows || m->matrix.cols() != cols) {
      std::ostringstream os;
      os << "map \"" << name << "\" is " << m->matrix.rows() << "x" << m->matrix.cols()
         << ", expected " << rows << "x" << cols;
      return fail("dimension-clash", os.str(), *obj.find(k));
    }
    out = m->matrix;
    return true;
  }

  template <typename T>
  bool package_ref(const Value& obj, const std::string& k, const char* want_kind, T& out) {
    std::string name;
    if (!require_string(obj, k, name)) return false;
    const NamedPackage* p = doc_.find_package(name);
    if (!p)
      return fail("unresolved-reference", "unknown package \"" + name + "\"", *obj.find(k));
    const T* payload = std::get_if<T>(&p->payload);
    if (!payload)
      return schema("package \"" + name + "\" has kind \"" + p->kind + "\", expected \"" +
                        want_kind + "\"",
                    *obj.find(k));
    out = *payload;
    return true;
  }

  /// Brackets may be declared under either kind; both materialize to a
  /// PkgBracket.
  bool bracket_ref(const Value& obj, const std::string& k, PkgBracket& out) {
    std::string name;
    if (!require_string(obj, k, name)) return false;
    const NamedPackage* p = doc_.find_package(name);
    if (!p)
      return fail("unresolved-reference", "unknown package \"" + name + "\"", *obj.find(k));
    const PkgBracket* payload = std::get_if<PkgBracket>(&p->payload);
    if (!payload)
      return schema("package \"" + name + "\" has kind \"" + p->kind +
                        "\", expected a bracket package",
                    *obj.find(k));
    out = *payload;
    return true;
  }

  bool load() {
    if (!root_.is_object()) return schema("document root must be an object", root_);
    for (const auto& [k, v] : root_.members()) {
      if (k != "format" && k != "field" && k != "modules" && k != "tensors" && k != "maps" &&
          k != "packages" && k != "provenance")
        return schema("unknown section \"" + k + "\"", v);
    }
    const Value* format = root_.find("format");
    if (!format || !format->is_string() || format->as_string() != kFormatTag)
      return schema(std::string("missing or unsupported \"format\"; expected \"") + kFormatTag +
                        "\"",
                    root_);
    if (!load_field()) return false;
    if (!load_spaces()) return false;
    if (!load_tensors()) return false;
    if (!load_maps()) return false;
    if (!load_packages()) return false;
    return true;
  }

  bool load_field() {
    const Value* fv = root_.find("field");
    if (!fv) return schema("missing \"field\"", root_);
    if (fv->is_string()) {
      if (fv->as_string() == "Q") {
        doc_.field = Field::rationals();
        return true;
      }
      return schema("unknown field \"" + fv->as_string() + "\"; use \"Q\" or {\"p\": prime}",
                    *fv);
    }
    if (fv->is_object()) {
      std::int64_t p;
      if (!require_int(*fv, "p", p)) return false;
      if (p < 2 || p > (1L << 31))
        return schema("prime modulus out of range", *fv);
      try {
        doc_.field = Field::prime_field(static_cast<long>(p));
      } catch (const structural_error& e) {
        return schema(e.what(), *fv);
      }
      return true;
    }
    return schema("\"field\" must be \"Q\" or {\"p\": prime}", *fv);
  }

  bool load_spaces() {
    const Value* mv = root_.find("modules");
    if (!mv) return true;
    if (!mv->is_object()) return schema("\"modules\" must be an object", *mv);
    for (const auto& [name, decl] : mv->members()) {
      if (!decl.is_object()) return schema("module declaration must be an object", decl);
      std::int64_t dim;
      if (!require_int(decl, "dim", dim)) return false;
      if (dim < 0 || dim > 4096) return fail("dimension-clash", "dimension out of range", decl);
      doc_.spaces[name] = static_cast<std::size_t>(dim);
    }
    return true;
  }

  bool load_tensors() {
    const Value* tv = root_.find("tensors");
    if (!tv) return true;
    if (!tv->is_object()) return schema("\"tensors\" must be an object", *tv);
    for (const auto& [name, decl] : tv->members()) {
      if (!decl.is_object()) return schema("tensor declaration must be an object", decl);
      const Value* on = decl.find("on");
      if (!on || !on->is_array() || on->items().size() != 3)
        return schema("tensor \"on\" must list three spaces", decl);
      std::array<std::string, 3> labels;
      std::array<std::size_t, 3> dims{};
      for (int i = 0; i < 3; ++i) {
        if (!on->items()[i].is_string()) return schema("tensor \"on\" entries are space names",
                                                       on->items()[i]);
        labels[i] = on->items()[i].as_string();
        if (!space_dim(on->items()[i], labels[i], dims[i])) return false;
      }
      StructureTensor t(doc_.field, dims[0], dims[1], dims[2]);
      const Value* entries = decl.find("entries");
      if (entries) {
        if (!entries->is_array()) return schema("tensor \"entries\" must be an array", *entries);
        for (const Value& e : entries->items()) {
          if (!e.is_object()) return schema("tensor entry must be an object", e);
          std::int64_t i, j, k;
          if (!require_int(e, "i", i) || !require_int(e, "j", j) || !require_int(e, "k", k))
            return false;
          if (i < 0 || j < 0 || k < 0 || i >= static_cast<std::int64_t>(dims[0]) ||
              j >= static_cast<std::int64_t>(dims[1]) || k >= static_cast<std::int64_t>(dims[2]))
            return fail("dimension-clash", "tensor entry index out of range", e);
          const Value* val = e.find("v");
          if (!val) return schema("tensor entry missing \"v\"", e);
          Scalar s;
          if (!scalar(*val, s)) return false;
          if (!doc_.field.is_zero(t.at(i, j, k)))
            return fail("duplicate-name", "tensor entry repeated", e);
          t.at(i, j, k) = s;
        }
      }
      doc_.tensors.emplace(name, TensorEntry{labels, std::move(t)});
    }
    return true;
  }

  bool load_maps() {
    const Value* mv = root_.find("maps");
    if (!mv) return true;
    if (!mv->is_object()) return schema("\"maps\" must be an object", *mv);
    for (const auto& [name, decl] : mv->members()) {
      if (!decl.is_object()) return schema("map declaration must be an object", decl);
      std::string from, to;
      if (!require_string(decl, "from", from) || !require_string(decl, "to", to)) return false;
      std::size_t dfrom, dto;
      if (!space_dim(decl, from, dfrom) || !space_dim(decl, to, dto)) return false;
      const Value* rows = decl.find("rows");
      if (!rows || !rows->is_array()) return schema("map missing \"rows\" array", decl);
      if (rows->items().size() != dto)
        return fail("dimension-clash", "map row count != dim(to)", *rows);
      Matrix m(doc_.field, dto, dfrom);
      for (std::size_t r = 0; r < dto; ++r) {
        const Value& row = rows->items()[r];
        if (!row.is_array() || row.items().size() != dfrom)
          return fail("dimension-clash", "map row length != dim(from)", row);
        for (std::size_t c = 0; c < dfrom; ++c) {
          Scalar s;
          if (!scalar(row.items()[c], s)) return false;
          m.at(r, c) = s;
        }
      }
      doc_.maps.emplace(name, MapEntry{from, to, std::move(m)});
    }
    return true;
  }

  bool load_packages() {
    const Value* pv = root_.find("packages");
    if (!pv) return true;
    if (!pv->is_object()) return schema("\"packages\" must be an object", *pv);
    for (const auto& [name, decl] : pv->members()) {
      if (!decl.is_object()) return schema("package declaration must be an object", decl);
      std::string kind;
      if (!require_string(decl, "kind", kind)) return false;
      if (!load_package(name, kind, decl)) return false;
    }
    return true;
  }

  bool load_package(const std::string& name, const std::string& kind, const Value& decl) {
    const Field& f = doc_.field;
    if (kind == "comm-algebra") {
      std::string space;
      if (!require_string(decl, "space", space)) return false;
      std::size_t dim;
      if (!space_dim(decl, space, dim)) return false;
      StructureTensor mult;
      if (!tensor_ref(decl, "mult", dim, dim, dim, mult)) return false;
      const Value* unit = decl.find("unit");
      if (!unit || !unit->is_array() || unit->items().size() != dim)
        return fail("dimension-clash", "\"unit\" must be a vector of length dim", decl);
      Vec u(dim, f.zero());
      for (std::size_t i = 0; i < dim; ++i)
        if (!scalar(unit->items()[i], u[i])) return false;
      doc_.packages.emplace_back(name,
                                 NamedPackage{kind, PkgAlgebra{{f, dim, mult, std::move(u)}}});
      return true;
    }
    if (kind == "a-module") {
      PkgAlgebra alg;
      if (!package_ref(decl, "algebra", "comm-algebra", alg)) return false;
      std::string space;
      if (!require_string(decl, "space", space)) return false;
      std::size_t dim;
      if (!space_dim(decl, space, dim)) return false;
      StructureTensor action;
      if (!tensor_ref(decl, "action", alg.a.dim, dim, dim, action)) return false;
      doc_.packages.emplace_back(
          name, NamedPackage{kind, PkgModule{alg.a, {f, dim, std::move(action)}}});
      return true;
    }
    if (kind == "leibniz" || kind == "lie") {
      std::string space;
      if (!require_string(decl, "space", space)) return false;
      std::size_t dim;
      if (!space_dim(decl, space, dim)) return false;
      StructureTensor bracket;
      if (!tensor_ref(decl, "bracket", dim, dim, dim, bracket)) return false;
      doc_.packages.emplace_back(
          name, NamedPackage{kind, PkgBracket{kind == "lie", {f, dim, std::move(bracket)}}});
      return true;
    }
    if (kind == "leibniz-morphism") {
      PkgBracket src, dst;
      if (!bracket_ref(decl, "source", src) || !bracket_ref(decl, "target", dst)) return false;
      Matrix map;
      if (!map_ref(decl, "map", dst.g.dim, src.g.dim, map)) return false;
      doc_.packages.emplace_back(
          name, NamedPackage{kind, PkgLeibnizMorphism{src.g, dst.g, std::move(map)}});
      return true;
    }
    if (kind == "lm-object") {
      std::string from, to;
      if (!require_string(decl, "v", from) || !require_string(decl, "w", to)) return false;
      std::size_t dv, dw;
      if (!space_dim(decl, from, dv) || !space_dim(decl, to, dw)) return false;
      Matrix u;
      if (!map_ref(decl, "u", dw, dv, u)) return false;
      doc_.packages.emplace_back(name, NamedPackage{kind, PkgLMObject{{std::move(u)}}});
      return true;
    }
    if (kind == "lm-morphism") {
      PkgLMObject src, dst;
      if (!package_ref(decl, "source", "lm-object", src) ||
          !package_ref(decl, "target", "lm-object", dst))
        return false;
      Matrix h1, h0;
      if (!map_ref(decl, "h1", dst.obj.dim_v(), src.obj.dim_v(), h1)) return false;
      if (!map_ref(decl, "h0", dst.obj.dim_w(), src.obj.dim_w(), h0)) return false;
      doc_.packages.emplace_back(
          name,
          NamedPackage{kind, PkgLMMorphism{{src.obj, dst.obj, std::move(h1), std::move(h0)}}});
      return true;
    }
    if (kind == "lm-algebra-object") {
      PkgAlgebra alg;
      PkgModule mod;
      if (!package_ref(decl, "algebra", "comm-algebra", alg) ||
          !package_ref(decl, "module", "a-module", mod))
        return false;
      if (!(mod.a == alg.a))
        return schema("module package is over a different algebra", decl);
      Matrix g;
      if (!map_ref(decl, "g", alg.a.dim, mod.m.dim, g)) return false;
      doc_.packages.emplace_back(
          name, NamedPackage{kind, PkgAlgebraObject{{alg.a, mod.m, std::move(g)}}});
      return true;
    }
    if (kind == "lm-lie-object") {
      PkgBracket lie;
      if (!bracket_ref(decl, "lie", lie)) return false;
      std::string space;
      if (!require_string(decl, "space", space)) return false;
      std::size_t dn;
      if (!space_dim(decl, space, dn)) return false;
      StructureTensor action;
      if (!tensor_ref(decl, "action", dn, lie.g.dim, dn, action)) return false;
      Matrix fmap;
      if (!map_ref(decl, "f", lie.g.dim, dn, fmap)) return false;
      doc_.packages.emplace_back(
          name, NamedPackage{kind, PkgLieObject{{{f, lie.g.dim, lie.g.bracket}, dn,
                                                 std::move(action), std::move(fmap)}}});
      return true;
    }
    if (kind == "lm-module-algebra") {
      PkgAlgebraObject x;
      PkgLMObject v;
      if (!package_ref(decl, "object", "lm-algebra-object", x) ||
          !package_ref(decl, "v", "lm-object", v))
        return false;
      std::size_t dv = v.obj.dim_v(), dw = v.obj.dim_w();
      StructureTensor act_w, act_v;
      if (!tensor_ref(decl, "w_action", x.x.a.dim, dw, dw, act_w)) return false;
      if (!tensor_ref(decl, "v_action", x.x.a.dim, dv, dv, act_v)) return false;
      Matrix mu1;
      if (!map_ref(decl, "mu1", dv, x.x.m.dim * dw, mu1)) return false;
      doc_.packages.emplace_back(
          name, NamedPackage{kind, PkgModuleOverAlgebra{x.x,
                                                        {v.obj, std::move(act_w),
                                                         std::move(act_v), std::move(mu1)}}});
      return true;
    }
    if (kind == "lm-module-lie") {
      PkgLieObject x;
      PkgLMObject v;
      if (!package_ref(decl, "object", "lm-lie-object", x) ||
          !package_ref(decl, "v", "lm-object", v))
        return false;
      std::size_t dv = v.obj.dim_v(), dw = v.obj.dim_w();
      StructureTensor alpha0, alpha2;
      if (!tensor_ref(decl, "alpha0", x.x.l.dim, dw, dw, alpha0)) return false;
      if (!tensor_ref(decl, "alpha2", x.x.l.dim, dv, dv, alpha2)) return false;
      Matrix alpha1;
      if (!map_ref(decl, "alpha1", dv, x.x.n_dim * dw, alpha1)) return false;
      doc_.packages.emplace_back(
          name, NamedPackage{kind, PkgModuleOverLie{x.x,
                                                    {v.obj, std::move(alpha0), std::move(alpha2),
                                                     std::move(alpha1)}}});
      return true;
    }
    if (kind == "squares-annihilation") {
      PkgLieObject x;
      PkgAlgebra alg;
      if (!package_ref(decl, "object", "lm-lie-object", x) ||
          !package_ref(decl, "algebra", "comm-algebra", alg))
        return false;
      StructureTensor a_on_n;
      if (!tensor_ref(decl, "a_on_n", alg.a.dim, x.x.n_dim, x.x.n_dim, a_on_n)) return false;
      doc_.packages.emplace_back(
          name, NamedPackage{kind, PkgSquaresAnnihilation{x.x, alg.a, std::move(a_on_n)}});
      return true;
    }
    if (kind == "algebra-morphism") {
      PkgAlgebraObject src, dst;
      if (!package_ref(decl, "source", "lm-algebra-object", src) ||
          !package_ref(decl, "target", "lm-algebra-object", dst))
        return false;
      Matrix phi1, phi0;
      if (!map_ref(decl, "phi1", dst.x.m.dim, src.x.m.dim, phi1)) return false;
      if (!map_ref(decl, "phi0", dst.x.a.dim, src.x.a.dim, phi0)) return false;
      doc_.packages.emplace_back(
          name,
          NamedPackage{kind, PkgAlgebraMorphism{src.x, dst.x, std::move(phi1), std::move(phi0)}});
      return true;
    }
    if (kind == "lie-morphism") {
      PkgLieObject src, dst;
      if (!package_ref(decl, "source", "lm-lie-object", src) ||
          !package_ref(decl, "target", "lm-lie-object", dst))
        return false;
      Matrix phi1, phi0;
      if (!map_ref(decl, "phi1", dst.x.n_dim, src.x.n_dim, phi1)) return false;
      if (!map_ref(decl, "phi0", dst.x.l.dim, src.x.l.dim, phi0)) return false;
      doc_.packages.emplace_back(
          name, NamedPackage{kind, PkgLieObjectMorphism{src.x, dst.x, std::move(phi1),
                                                        std::move(phi0)}});
      return true;
    }
    if (kind == "derivation-action") {
      PkgAlgebraObject alg;
      PkgLieObject lie;
      if (!package_ref(decl, "algebra_object", "lm-algebra-object", alg) ||
          !package_ref(decl, "lie_object", "lm-lie-object", lie))
        return false;
      std::size_t da = alg.x.a.dim, dm = alg.x.m.dim, dl = lie.x.l.dim, dn = lie.x.n_dim;
      StructureTensor rho0, rho1, rho2;
      if (!tensor_ref(decl, "rho0", dl, da, da, rho0)) return false;
      if (!tensor_ref(decl, "rho1", dn, da, dm, rho1)) return false;
      if (!tensor_ref(decl, "rho2", dl, dm, dm, rho2)) return false;
      doc_.packages.emplace_back(
          name, NamedPackage{kind, PkgDerivationAction{alg.x, lie.x, std::move(rho0),
                                                       std::move(rho1), std::move(rho2)}});
      return true;
    }
    if (kind == "lie-rinehart") {
      PkgAlgebra alg;
      PkgBracket lie;
      if (!package_ref(decl, "algebra", "comm-algebra", alg) || !bracket_ref(decl, "lie", lie))
        return false;
      StructureTensor a_on_l, anchor;
      if (!tensor_ref(decl, "a_action", alg.a.dim, lie.g.dim, lie.g.dim, a_on_l)) return false;
      if (!tensor_ref(decl, "anchor", lie.g.dim, alg.a.dim, alg.a.dim, anchor)) return false;
      doc_.packages.emplace_back(
          name, NamedPackage{kind, PkgLieRinehart{{alg.a, {f, lie.g.dim, lie.g.bracket},
                                                   std::move(a_on_l), std::move(anchor)}}});
      return true;
    }
    if (kind == "lr-module") {
      PkgLieRinehart pair;
      PkgModule mod;
      if (!package_ref(decl, "pair", "lie-rinehart", pair) ||
          !package_ref(decl, "module", "a-module", mod))
        return false;
      if (!(mod.a == pair.p.a)) return schema("module package is over a different algebra", decl);
      StructureTensor rho2;
      if (!tensor_ref(decl, "rho2", pair.p.l.dim, mod.m.dim, mod.m.dim, rho2)) return false;
      doc_.packages.emplace_back(
          name, NamedPackage{kind, PkgLRModule{pair.p, mod.m, std::move(rho2)}});
      return true;
    }
    if (kind == "theorem1") {
      PkgAlgebraObject alg;
      PkgLieObject lie;
      if (!package_ref(decl, "algebra_object", "lm-algebra-object", alg) ||
          !package_ref(decl, "lie_object", "lm-lie-object", lie))
        return false;
      std::size_t da = alg.x.a.dim, dm = alg.x.m.dim, dl = lie.x.l.dim, dn = lie.x.n_dim;
      StructureTensor a_on_n, a_on_l, rho0, rho1, rho2, lambda;
      if (!tensor_ref(decl, "a_on_n", da, dn, dn, a_on_n)) return false;
      if (!tensor_ref(decl, "a_on_l", da, dl, dl, a_on_l)) return false;
      if (!tensor_ref(decl, "rho0", dl, da, da, rho0)) return false;
      if (!tensor_ref(decl, "rho1", dn, da, dm, rho1)) return false;
      if (!tensor_ref(decl, "rho2", dl, dm, dm, rho2)) return false;
      if (!tensor_ref(decl, "lambda", dm, dl, dn, lambda)) return false;
      doc_.packages.emplace_back(
          name, NamedPackage{kind, PkgTheorem1{{alg.x, lie.x, std::move(a_on_n),
                                                std::move(a_on_l), std::move(rho0),
                                                std::move(rho1), std::move(rho2),
                                                std::move(lambda)}}});
      return true;
    }
    if (kind == "leibniz-algebroid") {
      PkgAlgebra alg;
      PkgBracket e;
      if (!package_ref(decl, "algebra", "comm-algebra", alg) || !bracket_ref(decl, "leibniz", e))
        return false;
      StructureTensor a_on_e, anchor;
      if (!tensor_ref(decl, "a_action", alg.a.dim, e.g.dim, e.g.dim, a_on_e)) return false;
      if (!tensor_ref(decl, "anchor", e.g.dim, alg.a.dim, alg.a.dim, anchor)) return false;
      doc_.packages.emplace_back(
          name,
          NamedPackage{kind, PkgAlgebroid{{alg.a, e.g, std::move(a_on_e), std::move(anchor)}}});
      return true;
    }
    return schema("unknown package kind \"" + kind + "\"", decl);
  }
};

}  // namespace

LoadResult load_document_value(const Value& root) { return Loader(root).run(); }

LoadResult load_document(std::string_view text) {
  ParseResult parsed = parse_value(text);
  if (!parsed.ok()) return {std::nullopt, parsed.diagnostic};
  return load_document_value(*parsed.value);
}

Value tensor_to_value(const Field& f, const std::array<std::string, 3>& on,
                      const StructureTensor& t) {
  Value decl = Value::object();
  Value labels = Value::array();
  for (const std::string& s : on) labels.push(Value::string(s));
  decl.set("on", std::move(labels));
  Value entries = Value::array();
  for (std::size_t i = 0; i < t.d1(); ++i)
    for (std::size_t j = 0; j < t.d2(); ++j)
      for (std::size_t k = 0; k < t.d3(); ++k) {
        if (f.is_zero(t.at(i, j, k))) continue;
        Value e = Value::object();
        e.set("i", Value::integer(static_cast<std::int64_t>(i)));
        e.set("j", Value::integer(static_cast<std::int64_t>(j)));
        e.set("k", Value::integer(static_cast<std::int64_t>(k)));
        e.set("v", Value::string(f.to_string(t.at(i, j, k))));
        entries.push(std::move(e));
      }
  decl.set("entries", std::move(entries));
  return decl;
}

Value matrix_to_value(const Field& f, const std::string& from, const std::string& to,
                      const Matrix& m) {
  Value decl = Value::object();
  decl.set("from", Value::string(from));
  decl.set("to", Value::string(to));
  Value rows = Value::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Value row = Value::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push(Value::string(f.to_string(m.at(r, c))));
    rows.push(std::move(row));
  }
  decl.set("rows", std::move(rows));
  return decl;
}

void DocBuilder::add_space(const std::string& name, std::size_t dim) {
  if (!spaces_.find(name)) {
    Value d = Value::object();
    d.set("dim", Value::integer(static_cast<std::int64_t>(dim)));
    spaces_.set(name, std::move(d));
  }
}

void DocBuilder::add_tensor(const std::string& name, const std::array<std::string, 3>& on,
                            const StructureTensor& t) {
  if (!tensors_.find(name)) tensors_.set(name, tensor_to_value(field_, on, t));
}

void DocBuilder::add_map(const std::string& name, const std::string& from, const std::string& to,
                         const Matrix& m) {
  if (!maps_.find(name)) maps_.set(name, matrix_to_value(field_, from, to, m));
}

void DocBuilder::add_raw_package(const std::string& name, Value schema) {
  if (!packages_.find(name)) packages_.set(name, std::move(schema));
}

std::string DocBuilder::add_comm_algebra(const std::string& name, const CommAlgebra& a) {
  std::string space = name + ".space";
  add_space(space, a.dim);
  add_tensor(name + ".mult", {space, space, space}, a.mult);
  Value pkg = Value::object();
  pkg.set("kind", Value::string("comm-algebra"));
  pkg.set("space", Value::string(space));
  pkg.set("mult", Value::string(name + ".mult"));
  Value unit = Value::array();
  for (const Scalar& s : a.unit) unit.push(Value::string(field_.to_string(s)));
  pkg.set("unit", std::move(unit));
  add_raw_package(name, std::move(pkg));
  return name;
}

std::string DocBuilder::add_a_module(const std::string& name, const std::string& algebra_pkg,
                                     const AModule& m) {
  std::string space = name + ".space";
  add_space(space, m.dim);
  add_tensor(name + ".action", {algebra_pkg + ".space", space, space}, m.action);
  Value pkg = Value::object();
  pkg.set("kind", Value::string("a-module"));
  pkg.set("algebra", Value::string(algebra_pkg));
  pkg.set("space", Value::string(space));
  pkg.set("action", Value::string(name + ".action"));
  add_raw_package(name, std::move(pkg));
  return name;
}

std::string DocBuilder::add_bracket(const std::string& name, bool lie_kind,
                                    const LeibnizAlgebra& g) {
  std::string space = name + ".space";
  add_space(space, g.dim);
  add_tensor(name + ".bracket", {space, space, space}, g.bracket);
  Value pkg = Value::object();
  pkg.set("kind", Value::string(lie_kind ? "lie" : "leibniz"));
  pkg.set("space", Value::string(space));
  pkg.set("bracket", Value::string(name + ".bracket"));
  add_raw_package(name, std::move(pkg));
  return name;
}

std::string DocBuilder::add_lm_object(const std::string& name, const LMObject& o) {
  std::string vs = name + ".v", ws = name + ".w";
  add_space(vs, o.dim_v());
  add_space(ws, o.dim_w());
  add_map(name + ".u", vs, ws, o.u);
  Value pkg = Value::object();
  pkg.set("kind", Value::string("lm-object"));
  pkg.set("v", Value::string(vs));
  pkg.set("w", Value::string(ws));
  pkg.set("u", Value::string(name + ".u"));
  add_raw_package(name, std::move(pkg));
  return name;
}

std::string DocBuilder::add_algebra_object(const std::string& name, const LMAlgebraObject& x) {
  std::string alg = add_comm_algebra(name + ".A", x.a);
  std::string mod = add_a_module(name + ".M", alg, x.m);
  add_map(name + ".g", name + ".M.space", name + ".A.space", x.g);
  Value pkg = Value::object();
  pkg.set("kind", Value::string("lm-algebra-object"));
  pkg.set("algebra", Value::string(alg));
  pkg.set("module", Value::string(mod));
  pkg.set("g", Value::string(name + ".g"));
  add_raw_package(name, std::move(pkg));
  return name;
}

std::string DocBuilder::add_lie_object(const std::string& name, const LMLieObject& x) {
  std::string lie = add_bracket(name + ".L", true, as_leibniz(x.l));
  std::string nspace = name + ".N.space";
  add_space(nspace, x.n_dim);
  add_tensor(name + ".action", {nspace, name + ".L.space", nspace}, x.n_action);
  add_map(name + ".f", nspace, name + ".L.space", x.f);
  Value pkg = Value::object();
  pkg.set("kind", Value::string("lm-lie-object"));
  pkg.set("lie", Value::string(lie));
  pkg.set("space", Value::string(nspace));
  pkg.set("action", Value::string(name + ".action"));
  pkg.set("f", Value::string(name + ".f"));
  add_raw_package(name, std::move(pkg));
  return name;
}

std::string DocBuilder::add_lie_rinehart(const std::string& name, const LieRinehartPair& p) {
  std::string alg = add_comm_algebra(name + ".A", p.a);
  std::string lie = add_bracket(name + ".L", true, as_leibniz(p.l));
  add_tensor(name + ".a_action", {name + ".A.space", name + ".L.space", name + ".L.space"},
             p.a_on_l);
  add_tensor(name + ".anchor", {name + ".L.space", name + ".A.space", name + ".A.space"},
             p.anchor);
  Value pkg = Value::object();
  pkg.set("kind", Value::string("lie-rinehart"));
  pkg.set("algebra", Value::string(alg));
  pkg.set("lie", Value::string(lie));
  pkg.set("a_action", Value::string(name + ".a_action"));
  pkg.set("anchor", Value::string(name + ".anchor"));
  add_raw_package(name, std::move(pkg));
  return name;
}

std::string DocBuilder::add_theorem1(const std::string& name, const TheoremOneData& d) {
  std::string alg = add_algebra_object(name + ".alg", d.alg);
  std::string lie = add_lie_object(name + ".lie", d.lie);
  std::string a_space = name + ".alg.A.space";
  std::string m_space = name + ".alg.M.space";
  std::string l_space = name + ".lie.L.space";
  std::string n_space = name + ".lie.N.space";
  add_tensor(name + ".a_on_n", {a_space, n_space, n_space}, d.a_on_n);
  add_tensor(name + ".a_on_l", {a_space, l_space, l_space}, d.a_on_l);
  add_tensor(name + ".rho0", {l_space, a_space, a_space}, d.rho0);
  add_tensor(name + ".rho1", {n_space, a_space, m_space}, d.rho1);
  add_tensor(name + ".rho2", {l_space, m_space, m_space}, d.rho2);
  add_tensor(name + ".lambda", {m_space, l_space, n_space}, d.lambda);
  Value pkg = Value::object();
  pkg.set("kind", Value::string("theorem1"));
  pkg.set("algebra_object", Value::string(alg));
  pkg.set("lie_object", Value::string(lie));
  for (const char* t : {"a_on_n", "a_on_l", "rho0", "rho1", "rho2", "lambda"})
    pkg.set(t, Value::string(name + "." + t));
  add_raw_package(name, std::move(pkg));
  return name;
}

std::string DocBuilder::add_algebroid(const std::string& name, const LeibnizAlgebroid& x) {
  std::string alg = add_comm_algebra(name + ".A", x.a);
  std::string e = add_bracket(name + ".E", false, x.e);
  add_tensor(name + ".a_action", {name + ".A.space", name + ".E.space", name + ".E.space"},
             x.a_on_e);
  add_tensor(name + ".anchor", {name + ".E.space", name + ".A.space", name + ".A.space"},
             x.anchor);
  Value pkg = Value::object();
  pkg.set("kind", Value::string("leibniz-algebroid"));
  pkg.set("algebra", Value::string(alg));
  pkg.set("leibniz", Value::string(e));
  pkg.set("a_action", Value::string(name + ".a_action"));
  pkg.set("anchor", Value::string(name + ".anchor"));
  add_raw_package(name, std::move(pkg));
  return name;
}

void DocBuilder::set_provenance(const std::string& recipe, const std::vector<std::string>& inputs) {
  Value p = Value::object();
  p.set("recipe", Value::string(recipe));
  Value in = Value::array();
  for (const std::string& s : inputs) in.push(Value::string(s));
  p.set("inputs", std::move(in));
  p.set("artifact", Value::string("loday 0.1.0"));
  provenance_ = std::move(p);
}

Value DocBuilder::build() const {
  Value doc = Value::object();
  doc.set("format", Value::string("loday-def/1"));
  if (field_.is_rationals()) {
    doc.set("field", Value::string("Q"));
  } else {
    Value fp = Value::object();
    fp.set("p", Value::integer(field_.characteristic()));
    doc.set("field", std::move(fp));
  }
  if (provenance_) doc.set("provenance", *provenance_);
  doc.set("modules", spaces_);
  doc.set("tensors", tensors_);
  doc.set("maps", maps_);
  doc.set("packages", packages_);
  return doc;
}

}  // namespace loday
