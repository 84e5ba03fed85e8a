#include <doctest.h>

#include "hypervar/error.hpp"
#include "hypervar/io.hpp"
#include "support.hpp"

using namespace hypervar;
using test_support::ident;

namespace {
  std::string fixture(std::string const& name) {
    return std::string(HYPERVAR_FIXTURES) + "/" + name;
  }
}  // namespace

TEST_CASE("catalog names load first") {
  auto w2 = load_variety("W2");
  CHECK(w2.base() == BaseTheory::Band);
  REQUIRE(w2.extra_basis().size() == 1);
  CHECK(print_identity(w2.extra_basis()[0], band_signature(), true) == "zxyz = zyxz");
  auto v1 = load_variety("V1");
  CHECK(print_identity(v1.extra_basis()[0], band_signature(), true) == "zxy = zyx");
  CHECK_THROWS_AS(load_variety("w2"), InvalidArgument);
  CHECK_THROWS_AS(load_variety("/nonexistent/file.var"), InvalidArgument);
}

TEST_CASE("variety files") {
  auto rb = load_variety(fixture("rectangular_bands.var"));
  CHECK(rb.name() == "RectangularBands");
  CHECK(subvariety_of(rb, catalog_variety("W1")).value);
  CHECK(subvariety_of(catalog_variety("W1"), rb).value);
  CHECK(is_solid(rb).value);

  auto ln = load_variety(fixture("left_normal_bands.var"));
  CHECK(ln.signature() == band_signature());
  CHECK(subvariety_of(ln, catalog_variety("V1")).value);

  auto slg = load_variety(fixture("semilattices_by_generator.var"));
  CHECK(slg.base() == BaseTheory::None);
  CHECK(slg.generating_algebras().size() == 1);
  CHECK(free_algebra(slg, 3)->size() == 7);
  CHECK(is_fluid(slg).value);

  auto sample = load_variety(fixture("lattice_sample.var"));
  CHECK_FALSE(sample.generators_declared());
  auto fa = free_algebra(sample, 2);
  CHECK(fa->exactness == Exactness::SmallModelQuotient);
  // a sample can refute but never prove
  CHECK(decide(sample, parse_identity("meet(x, y) = meet(y, x)", sample.signature()))
            .unknown());
  CHECK(decide(sample, parse_identity("meet(x, y) = x", sample.signature())).invalid());
}

TEST_CASE("malformed variety files") {
  CHECK_THROWS_AS(load_variety(fixture("bad_identity.var")), ParseError);
  CHECK_THROWS_AS(load_variety(fixture("no_signature.var")), ParseError);
  CHECK_THROWS_AS(parse_variety("base lattice\n"), ParseError);
  CHECK_THROWS_AS(parse_variety("signature f\n"), ParseError);
  CHECK_THROWS_AS(parse_variety("base band\nwhatever\n"), ParseError);
  CHECK_THROWS_AS(parse_variety("signature meet 2 join 2\nbase band\n"), ParseError);
  CHECK_THROWS_AS(parse_variety("base band\nidentity xy = yx\nsize 2\n*: 0 0 1 1\n"),
                  InvalidArgument);
  try {
    parse_variety("base band\n\nidentity xy = (\n");
    FAIL("expected a parse error");
  } catch (ParseError const& e) {
    CHECK(std::string(e.what()).rfind("line 3:", 0) == 0);
  }
}

TEST_CASE("hypersubstitution arguments") {
  auto const& sig = band_signature();
  CHECK(load_hyp({"* := yx"}, sig) == band_hyp("rev"));
  CHECK(load_hyp({"rev"}, sig) == band_hyp("rev"));
  CHECK(load_hyp({"yxy"}, sig).image(0) == test_support::word("yxy"));
  CHECK(load_hyp({"@" + fixture("rev.hyp")}, sig) == band_hyp("rev"));
  CHECK(load_hyp({"meet := y", "join := x"}, lattice_signature()).image(0)
        == Term::variable(2));
  CHECK_THROWS_AS(load_hyp({"meet := y"}, lattice_signature()), ParseError);
  CHECK_THROWS_AS(load_hyp({"xyz"}, sig), InvalidArgument);
}

TEST_CASE("model files") {
  auto five = load_model(fixture("band5.model"));
  CHECK(five.size() == 5);
  CHECK(satisfies_all(five, band_axioms(band_signature())));
  CHECK(load_model(fixture("semilattice2.model")) == semilattice2());
  CHECK_THROWS_AS(load_model(fixture("missing.model")), InvalidArgument);
}
