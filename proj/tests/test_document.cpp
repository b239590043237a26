#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "loday/dispatch.hpp"

using namespace loday;

namespace {

std::string minimal_doc() {
  return R"({
  "format": "loday-def/1",
  "field": "Q",
  "modules": {"A": {"dim": 1}},
  "tensors": {"mul": {"on": ["A", "A", "A"], "entries": [{"i": 0, "j": 0, "k": 0, "v": "1"}]}},
  "packages": {"alg": {"kind": "comm-algebra", "space": "A", "mult": "mul", "unit": ["1"]}}
})";
}

std::string dim2_square_doc() {
  return R"({
  "format": "loday-def/1",
  "field": "Q",
  "modules": {"E": {"dim": 2}},
  "tensors": {"br": {"on": ["E", "E", "E"], "entries": [{"i": 1, "j": 1, "k": 0, "v": "1"}]}},
  "packages": {"g": {"kind": "leibniz", "space": "E", "bracket": "br"}}
})";
}

}  // namespace

TEST_CASE("parser basics") {
  ParseResult ok = parse_value(minimal_doc());
  REQUIRE(ok.ok());
  // Emission round-trips structurally.
  ParseResult again = parse_value(emit_value(*ok.value));
  REQUIRE(again.ok());
  CHECK(again.value->equals(*ok.value));

  ParseResult bad = parse_value("{\"a\": ");
  REQUIRE(!bad.ok());
  CHECK(bad.diagnostic->cls == "syntax-error");
  CHECK(bad.diagnostic->line == 1);

  ParseResult dup = parse_value("{\"a\": 1, \"a\": 2}");
  REQUIRE(!dup.ok());
  CHECK(dup.diagnostic->cls == "duplicate-name");

  ParseResult deep = parse_value(std::string(5000, '[') + std::string(5000, ']'));
  CHECK(!deep.ok());

  ParseResult float_doc = parse_value("{\"a\": 1.5}");
  REQUIRE(!float_doc.ok());
  CHECK(float_doc.diagnostic->cls == "syntax-error");
}

TEST_CASE("loader diagnostics") {
  CHECK(load_document(minimal_doc()).ok());

  // Invalid scalar "1/0".
  std::string bad = minimal_doc();
  bad.replace(bad.find("\"1\"}]"), 5, "\"1/0\"}]");
  LoadResult r = load_document(bad);
  REQUIRE(!r.ok());
  CHECK(r.diagnostic->cls == "invalid-scalar");
  CHECK(r.diagnostic->line > 1);

  // Unresolved space reference.
  std::string unresolved = minimal_doc();
  unresolved.replace(unresolved.find("[\"A\", \"A\", \"A\"]"), 15, "[\"A\", \"B\", \"A\"]");
  LoadResult r2 = load_document(unresolved);
  REQUIRE(!r2.ok());
  CHECK(r2.diagnostic->cls == "unresolved-reference");

  // Unit vector of the wrong length is a dimension clash.
  std::string clash = minimal_doc();
  clash.replace(clash.find("[\"1\"]"), 5, "[\"1\", \"0\"]");
  LoadResult r3 = load_document(clash);
  REQUIRE(!r3.ok());
  CHECK(r3.diagnostic->cls == "dimension-clash");
}

TEST_CASE("run_check dispatch and kind interchange") {
  LoadResult doc = load_document(dim2_square_doc());
  REQUIRE(doc.ok());

  CheckReport leib = run_check(*doc.doc, "g", "leibniz");
  CHECK(leib.pass());

  // The same table checked as a Lie algebra fails antisymmetry at (1,1).
  CheckReport lie = run_check(*doc.doc, "g", "lie");
  REQUIRE(!lie.pass());
  CHECK(lie.violations[0].axiom == "antisym");
  CHECK(lie.violations[0].witness == std::vector<long>{1, 1});

  CHECK_THROWS_AS(run_check(*doc.doc, "g", "theorem1"), usage_error);
  CHECK_THROWS_AS(run_check(*doc.doc, "nope", "leibniz"), usage_error);
  CHECK_THROWS_AS(run_check(*doc.doc, "g", "bogus-kind"), usage_error);
}

TEST_CASE("machine reports are deterministic and round-trip") {
  LoadResult doc = load_document(dim2_square_doc());
  REQUIRE(doc.ok());
  CheckReport lie = run_check(*doc.doc, "g", "lie");

  std::string once = emit_report_machine(lie);
  std::string twice = emit_report_machine(run_check(*doc.doc, "g", "lie"));
  CHECK(once == twice);

  ParseResult parsed = parse_value(once);
  REQUIRE(parsed.ok());
  std::optional<CheckReport> back = report_from_value(*parsed.value);
  REQUIRE(back.has_value());
  CHECK(back->entity == lie.entity);
  CHECK(back->violations == lie.violations);
  CHECK(emit_report_machine(*back) == once);

  // Human format names the law.
  std::string human = emit_report_human(lie);
  CHECK(human.find("antisym") != std::string::npos);
  CHECK(human.find("FAIL") != std::string::npos);
}

TEST_CASE("construct recipes emit re-loadable documents") {
  LoadResult doc = load_document(dim2_square_doc());
  REQUIRE(doc.ok());

  Value out = run_construct(*doc.doc, "reduced-lie", {"g"});
  LoadResult reloaded = load_document(emit_value(out));
  REQUIRE(reloaded.ok());
  CHECK(run_check(*reloaded.doc, "g.lie", "lie").pass());
  CHECK(run_check(*reloaded.doc, "g.pi-morphism", "leibniz-morphism").pass());
  // Provenance is present.
  CHECK(out.find("provenance") != nullptr);

  // theorem2 on an invalid package carries the failure report.
  Field q = Field::rationals();
  DocBuilder builder(q);
  TheoremOneData bad = build_tautological(corpus::pair_truncated_der(q, 2));
  bad.rho0.at(0, 0, 0) = q.add(bad.rho0.at(0, 0, 0), q.one());
  builder.add_theorem1("t", bad);
  LoadResult bad_doc = load_document(emit_value(builder.build()));
  REQUIRE(bad_doc.ok());
  try {
    run_construct(*bad_doc.doc, "theorem2", {"t"});
    FAIL("expected precondition_error");
  } catch (const precondition_error& e) {
    CHECK(!e.report().pass());
  }
}

TEST_CASE("documents built from core structures re-load and re-check") {
  Field q = Field::rationals();
  DocBuilder builder(q);
  builder.add_lie_rinehart("pair", corpus::pair_truncated_der(q, 3));
  builder.add_theorem1("taut", build_tautological(corpus::pair_truncated_der(q, 3)));
  builder.add_algebroid("ob", corpus::obstructed_algebroid(q));
  std::string text = emit_value(builder.build());

  LoadResult doc = load_document(text);
  REQUIRE(doc.ok());
  CHECK(run_check(*doc.doc, "pair", "lie-rinehart").pass());
  CHECK(run_check(*doc.doc, "taut", "theorem1").pass());
  CHECK(run_check(*doc.doc, "ob", "leibniz-algebroid").pass());
  CHECK(!run_check(*doc.doc, "ob", "local").pass());
  CHECK(!run_check(*doc.doc, "pair", "tensor-square-anchor").pass());

  // Byte-identical emission across repeated loads.
  DocBuilder again(q);
  again.add_lie_rinehart("pair", corpus::pair_truncated_der(q, 3));
  again.add_theorem1("taut", build_tautological(corpus::pair_truncated_der(q, 3)));
  again.add_algebroid("ob", corpus::obstructed_algebroid(q));
  CHECK(emit_value(again.build()) == text);
}

TEST_CASE("parser is total on mutated documents") {
  std::mt19937_64 rng(7);
  std::string seed = dim2_square_doc();
  std::uniform_int_distribution<std::size_t> pos(0, seed.size() - 1);
  std::uniform_int_distribution<int> byte(0, 255);
  for (int i = 0; i < 500; ++i) {
    std::string mutated = seed;
    int mutations = 1 + (i % 4);
    for (int m = 0; m < mutations; ++m) {
      switch (i % 3) {
        case 0:
          mutated[pos(rng) % mutated.size()] = static_cast<char>(byte(rng));
          break;
        case 1:
          mutated.insert(pos(rng) % mutated.size(), 1, static_cast<char>(byte(rng)));
          break;
        case 2:
          mutated.erase(pos(rng) % mutated.size(), 1);
          break;
      }
    }
    // Must terminate with either a document or a diagnostic; never throw.
    LoadResult r = load_document(mutated);
    CHECK((r.ok() || r.diagnostic.has_value()));
  }
}
