#include <doctest.h>

#include "hypervar/error.hpp"
#include "support.hpp"

using namespace hypervar;
using test_support::ident;

TEST_CASE("decide in the variety of bands") {
  auto const& b = catalog_variety("B");
  CHECK(decide(b, ident("xyx = xyxyx")).valid());
  CHECK(decide(b, ident("xyzx = xyxzx")).invalid());
  CHECK(decide(b, ident("x = x")).valid());

  auto d = decide(b, ident("xy = yx"), DecideOptions{3, 4, true});
  REQUIRE(d.invalid());
  REQUIRE(d.free_witness.has_value());
  CHECK(d.free_witness->rank == 2);
  REQUIRE(d.countermodel.has_value());
  CHECK(d.countermodel->model.size() == 2);
  CHECK(describe_model(d.countermodel->model) == "left-zero");
}

TEST_CASE("the catalog identities relate as expected") {
  CHECK(decide(catalog_variety("V5"), ident("xy = yx")).valid());
  CHECK(decide(catalog_variety("W1"), ident("xyx = x")).valid());
  CHECK(decide(catalog_variety("W1"), ident("xyz = xz")).valid());
  CHECK(decide(catalog_variety("V1"), ident("xyx = xy")).valid());
  CHECK(decide(catalog_variety("V3"), ident("zxy = zyx")).invalid());
  CHECK(decide(catalog_variety("TRIV"), ident("x = y")).valid());
  CHECK(decide(catalog_variety("DL"),
               parse_identity("join(x, meet(y, z)) = meet(join(x, y), join(x, z))",
                              lattice_signature()))
            .valid());
  CHECK(decide(catalog_variety("BA"),
               parse_identity("comp(meet(x, y)) = join(comp(x), comp(y))",
                              boolean_signature()))
            .valid());
}

TEST_CASE("beyond the free rank only refutation is possible") {
  auto const& b = catalog_variety("B");
  // four variables exceed n_max = 3
  auto not_band = decide(b, ident("ayzx = azyx"));
  CHECK(not_band.invalid());
  CHECK(not_band.countermodel.has_value());
  auto holds = decide(b, ident("ayzxx = ayzx"));
  CHECK(holds.unknown());
  CHECK(holds.rank_bound == 3);
  CHECK(holds.model_bound == 4);
  CHECK_FALSE(holds.reason.empty());
}

TEST_CASE("countermodels re-validate") {
  auto const& b = catalog_variety("B");
  for (auto const& text : {"xy = yx", "xyz = xzy", "xyx = x", "xy = x", "zxy = zxzy"}) {
    auto id = ident(text);
    auto cm = find_countermodel(b, id, 4);
    REQUIRE(cm.has_value());
    CHECK(satisfies_all(cm->model, b.basis()));
    CHECK(evaluate(cm->model, id.lhs, cm->assignment)
          != evaluate(cm->model, id.rhs, cm->assignment));
  }
  CHECK_FALSE(find_countermodel(b, ident("xx = x"), 4).has_value());
}

TEST_CASE("a sampled presentation never answers Valid") {
  VarietyPresentation sampled("Bs", band_signature(), BaseTheory::None,
                              band_axioms(band_signature()),
                              {left_zero2(), right_zero2()}, false);
  // true in both samples, false in bands
  auto d = decide(sampled, ident("xyx = x"));
  CHECK_FALSE(d.valid());
  CHECK(d.invalid());
  // true in bands
  CHECK_FALSE(decide(sampled, ident("xyxy = xy")).valid());
  CHECK(decide(sampled, ident("xy = yx")).invalid());
}

TEST_CASE("presentation validation") {
  CHECK_THROWS_AS(VarietyPresentation("bad", lattice_signature(), BaseTheory::Band, {}),
                  InvalidArgument);
  CHECK_THROWS_AS(VarietyPresentation("bad", band_signature(), BaseTheory::Band,
                                      {ident("xy = yx")}, {left_zero2()}),
                  InvalidArgument);
}
