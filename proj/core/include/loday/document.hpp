#pragma once

#include <array>
#include <map>
#include <variant>

#include "loday/algebroid.hpp"
#include "loday/value.hpp"

namespace loday {

/// Materialized packages. Dependencies are embedded by value: desk-scale
/// data, and it keeps checking free of name lookups.
struct PkgAlgebra { CommAlgebra a; };
struct PkgModule { CommAlgebra a; AModule m; };
struct PkgBracket { bool lie_kind; LeibnizAlgebra g; };
struct PkgLeibnizMorphism { LeibnizAlgebra src, dst; Matrix map; };
struct PkgLMObject { LMObject obj; };
struct PkgLMMorphism { LMMorphism mor; };
struct PkgAlgebraObject { LMAlgebraObject x; };
struct PkgLieObject { LMLieObject x; };
struct PkgModuleOverAlgebra { LMAlgebraObject x; LMModuleOverAlgebra mod; };
struct PkgModuleOverLie { LMLieObject x; LMModuleOverLie mod; };
struct PkgSquaresAnnihilation { LMLieObject x; CommAlgebra a; StructureTensor a_on_n; };
struct PkgAlgebraMorphism { LMAlgebraObject src, dst; Matrix phi1, phi0; };
struct PkgLieObjectMorphism { LMLieObject src, dst; Matrix phi1, phi0; };
struct PkgDerivationAction { LMAlgebraObject alg; LMLieObject lie; StructureTensor rho0, rho1, rho2; };
struct PkgLieRinehart { LieRinehartPair p; };
struct PkgLRModule { LieRinehartPair p; AModule m; StructureTensor rho2; };
struct PkgTheorem1 { TheoremOneData d; };
struct PkgAlgebroid { LeibnizAlgebroid x; };

using Package =
    std::variant<PkgAlgebra, PkgModule, PkgBracket, PkgLeibnizMorphism, PkgLMObject,
                 PkgLMMorphism, PkgAlgebraObject, PkgLieObject, PkgModuleOverAlgebra,
                 PkgModuleOverLie, PkgSquaresAnnihilation, PkgAlgebraMorphism,
                 PkgLieObjectMorphism, PkgDerivationAction, PkgLieRinehart, PkgLRModule,
                 PkgTheorem1, PkgAlgebroid>;

struct NamedPackage {
  std::string kind;
  Package payload;
};

struct TensorEntry {
  std::array<std::string, 3> on;
  StructureTensor tensor;
};

struct MapEntry {
  std::string from, to;
  Matrix matrix;
};

/// A fully resolved definition document: field, named spaces, tensors,
/// maps, and packages. Packages may only reference entities declared
/// earlier in the file.
struct DefinitionDocument {
  Field field = Field::rationals();
  std::map<std::string, std::size_t> spaces;
  std::map<std::string, TensorEntry> tensors;
  std::map<std::string, MapEntry> maps;
  std::vector<std::pair<std::string, NamedPackage>> packages;  // declaration order

  const NamedPackage* find_package(std::string_view name) const;
  const TensorEntry* find_tensor(std::string_view name) const;
  const MapEntry* find_map(std::string_view name) const;
};

struct LoadResult {
  std::optional<DefinitionDocument> doc;
  std::optional<Diagnostic> diagnostic;

  bool ok() const { return doc.has_value(); }
};

/// Parse + resolve + materialize. Total: every failure is a diagnostic.
LoadResult load_document(std::string_view text);
LoadResult load_document_value(const Value& root);

/// Assembles construct outputs: registers core structures under dotted
/// names and emits a complete re-loadable document.
class DocBuilder {
 public:
  explicit DocBuilder(Field f) : field_(f) {}

  void add_space(const std::string& name, std::size_t dim);
  void add_tensor(const std::string& name, const std::array<std::string, 3>& on,
                  const StructureTensor& t);
  void add_map(const std::string& name, const std::string& from, const std::string& to,
               const Matrix& m);
  void add_raw_package(const std::string& name, Value schema);

  /// Registers the structure under `name` (spaces/tensors get dotted
  /// suffixes) and returns the package name.
  std::string add_comm_algebra(const std::string& name, const CommAlgebra& a);
  std::string add_a_module(const std::string& name, const std::string& algebra_pkg,
                           const AModule& m);
  std::string add_bracket(const std::string& name, bool lie_kind, const LeibnizAlgebra& g);
  std::string add_lm_object(const std::string& name, const LMObject& o);
  std::string add_algebra_object(const std::string& name, const LMAlgebraObject& x);
  std::string add_lie_object(const std::string& name, const LMLieObject& x);
  std::string add_lie_rinehart(const std::string& name, const LieRinehartPair& p);
  std::string add_theorem1(const std::string& name, const TheoremOneData& d);
  std::string add_algebroid(const std::string& name, const LeibnizAlgebroid& x);

  void set_provenance(const std::string& recipe, const std::vector<std::string>& inputs);

  Value build() const;

 private:
  Field field_;
  Value spaces_ = Value::object();
  Value tensors_ = Value::object();
  Value maps_ = Value::object();
  Value packages_ = Value::object();
  std::optional<Value> provenance_;
};

Value tensor_to_value(const Field& f, const std::array<std::string, 3>& on,
                      const StructureTensor& t);
Value matrix_to_value(const Field& f, const std::string& from, const std::string& to,
                      const Matrix& m);

}  // namespace loday
