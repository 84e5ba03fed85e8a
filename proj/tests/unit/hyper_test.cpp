#include <doctest.h>

#include <random>

#include "hypervar/error.hpp"
#include "hypervar/hyp_classes.hpp"
#include "support.hpp"

using namespace hypervar;
using test_support::ident;
using test_support::random_term;
using test_support::word;

namespace {
  std::string flat(Identity const& id) {
    return print_identity(id, band_signature(), true);
  }
}  // namespace

TEST_CASE("reversal and xyx act on the band axioms") {
  auto rev = band_hyp("rev");
  CHECK(print_term(apply_hyp(rev, word("xyz")), band_signature(), true) == "zyx");
  CHECK(flat(apply_hyp(rev, ident("zxy = zyx"))) == "yxz = xyz");

  // (xy)z and x(yz) under f -> xyx.
  auto s = band_hyp("xyx");
  auto a = apply_hyp(s, ident("(xy)z = x(yz)"));
  CHECK(flat(a) == "xyxzxyx = xyzyx");
}

TEST_CASE("projections collapse terms to a variable") {
  CHECK(apply_hyp(band_hyp("proj1"), word("zxy")) == Term::variable(3));
  CHECK(apply_hyp(band_hyp("proj2"), word("zxy")) == Term::variable(2));
  CHECK(apply_hyp(band_hyp("id"), word("zxy")) == word("zxy"));
}

TEST_CASE("hypersubstitutions fix variables and add none") {
  std::mt19937 rng(5);
  auto const&  sig = lattice_signature();
  std::vector<Term> images{parse_term("join(y, meet(x, y))", sig),
                           parse_term("x", sig)};
  Hypersubstitution s(sig, images);
  for (VarIndex v = 1; v < 6; ++v)
    CHECK(apply_hyp(s, Term::variable(v)) == Term::variable(v));
  for (int i = 0; i < 200; ++i) {
    auto t    = random_term(rng, sig, 5, 4);
    auto vs   = variables_of(t);
    auto img  = variables_of(apply_hyp(s, t));
    CHECK(std::includes(vs.begin(), vs.end(), img.begin(), img.end()));
  }
}

TEST_CASE("composition is associative with the identity as unit") {
  auto const& b       = catalog_variety("B");
  auto        classes = enumerate_hyp_classes(b).reps;
  classes.push_back(Hypersubstitution(band_signature(), {word("xyyx")}));
  auto const  id = Hypersubstitution::identity(band_signature());
  CHECK(id.is_identity());
  for (auto const& a : classes) {
    CHECK(compose_hyps(a, id) == a);
    CHECK(compose_hyps(id, a) == a);
    for (auto const& b2 : classes)
      for (auto const& c : classes)
        CHECK(compose_hyps(compose_hyps(a, b2), c) == compose_hyps(a, compose_hyps(b2, c)));
  }
}

TEST_CASE("composition agrees with applying twice") {
  std::mt19937 rng(9);
  auto         outer = band_hyp("xyx");
  auto         inner = band_hyp("rev");
  auto         both  = compose_hyps(outer, inner);
  for (int i = 0; i < 100; ++i) {
    auto t = random_term(rng, band_signature(), 4, 3);
    CHECK(apply_hyp(both, t) == apply_hyp(outer, apply_hyp(inner, t)));
  }
}

TEST_CASE("parse_hyp requires exactly one binding per symbol") {
  auto const& sig = lattice_signature();
  auto        s   = parse_hyp("meet := join(x, y); join := x", sig);
  CHECK(s.image(0) == parse_term("join(x, y)", sig));
  CHECK(parse_hyp(std::vector<std::string>{"meet := y", "join := x"}, sig).image(1)
        == Term::variable(1));
  CHECK(print_hyp(s) == "meet := join(x, y)\njoin := x");
  CHECK(hyp_label(s) == "meet:=join(x, y), join:=x");
  CHECK(hyp_label(band_hyp("rev")) == "yx");
  CHECK(parse_hyp("* := yx", band_signature()) == band_hyp("rev"));

  CHECK_THROWS_AS(parse_hyp("meet := x", sig), ParseError);
  CHECK_THROWS_AS(parse_hyp("meet := x; meet := y; join := x", sig), ParseError);
  CHECK_THROWS_AS(parse_hyp("meet := z; join := x", sig), ParseError);
  CHECK_THROWS_AS(parse_hyp("meet = x; join := x", sig), ParseError);
  CHECK_THROWS_AS(parse_hyp("frob := x; meet := x; join := x", sig), ParseError);
  CHECK_THROWS_AS(Hypersubstitution(band_signature(), {word("xyz")}), InvalidArgument);
}
