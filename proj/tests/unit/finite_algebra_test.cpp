#include <doctest.h>

#include <random>

#include "hypervar/error.hpp"
#include "hypervar/hyp_classes.hpp"
#include "hypervar/models.hpp"
#include "support.hpp"

using namespace hypervar;
using test_support::ident;
using test_support::to_algebra;

namespace {
  std::vector<FiniteAlgebra> random_magmas(std::size_t count, std::uint32_t seed) {
    std::mt19937               rng(seed);
    std::vector<FiniteAlgebra> out;
    for (std::size_t i = 0; i < count; ++i) {
      std::size_t          n = 1 + rng() % 4;
      std::vector<Element> t(n * n);
      for (auto& e : t)
        e = rng() % n;
      out.emplace_back(band_signature(), n, std::vector<std::vector<Element>>{t});
    }
    return out;
  }
}  // namespace

TEST_CASE("two-element algebras satisfy what they should") {
  auto sl = semilattice2();
  auto lz = left_zero2();
  auto rz = right_zero2();
  CHECK(satisfies(sl, ident("xy = yx")));
  CHECK_FALSE(satisfies(lz, ident("xy = yx")));
  CHECK(satisfies(lz, ident("xy = x")));
  CHECK(satisfies(rz, ident("xy = y")));
  for (auto const* a : {&sl, &lz, &rz})
    CHECK(satisfies_all(*a, band_axioms(band_signature())));
  CHECK(describe_model(sl) == "semilattice");
  CHECK(describe_model(lz) == "left-zero");
  CHECK(describe_model(rz) == "right-zero");
  CHECK(satisfies(distributive_lattice2(),
                  parse_identity("meet(x, join(y, z)) = join(meet(x, y), meet(x, z))",
                                 lattice_signature())));
}

TEST_CASE("find_violation returns the first failing assignment") {
  auto bad = find_violation(left_zero2(), ident("xy = yx"));
  REQUIRE(bad.has_value());
  CHECK(bad->at(1) == 0);
  CHECK(bad->at(2) == 1);
  CHECK(evaluate(left_zero2(), test_support::word("xy"), *bad) == 0);
  CHECK_FALSE(find_violation(semilattice2(), ident("xy = yx")).has_value());
  CHECK_THROWS_AS(find_violation(semilattice2(), ident("xyzabcd = d"), 6),
                  LimitError);
}

TEST_CASE("table validation") {
  CHECK_THROWS_AS(FiniteAlgebra(band_signature(), 0, {{}}), InvalidArgument);
  CHECK_THROWS_AS(FiniteAlgebra(band_signature(), 2, {{0, 1, 2, 0}}), InvalidArgument);
  CHECK_THROWS_AS(FiniteAlgebra(band_signature(), 2, {{0, 1, 1}}), InvalidArgument);
}

TEST_CASE("derived algebra by projections and reversal") {
  auto sl = semilattice2();
  CHECK(derived_algebra(sl, band_hyp("proj1")) == left_zero2());
  CHECK(derived_algebra(left_zero2(), band_hyp("rev")) == right_zero2());
  CHECK(derived_algebra(sl, band_hyp("rev")) == sl);
  CHECK_FALSE(is_proper_derived_algebra(sl, band_hyp("rev")));
  CHECK(is_proper_derived_algebra(sl, band_hyp("proj2")));
  CHECK_FALSE(is_proper_derived_algebra(left_zero2(), band_hyp("proj1")));
}

TEST_CASE("deriving twice is deriving by the composite") {
  auto reps = enumerate_hyp_classes(catalog_variety("B")).reps;
  auto algs = catalog_variety("B").models(4);
  auto more = random_magmas(60, 17);
  algs.insert(algs.end(), more.begin(), more.end());
  for (auto const& a : algs)
    for (auto const& s1 : reps)
      for (auto const& s2 : reps)
        CHECK(derived_algebra(derived_algebra(a, s1), s2) == derived_algebra(a, compose_hyps(s1, s2)));
}

TEST_CASE("isomorphism is an equivalence and respects satisfaction") {
  auto models = catalog_variety("B").models(3);
  std::mt19937 rng(2);
  std::vector<Identity> probes{ident("xy = yx"), ident("xyx = x"), ident("zxy = zyx"),
                               ident("xy = yxy"), ident("xzy = zxyz")};
  for (auto const& a : models) {
    std::vector<Element> perm(a.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Element> t(a.size() * a.size());
    for (Element x = 0; x < a.size(); ++x)
      for (Element y = 0; y < a.size(); ++y)
        t[perm[x] * a.size() + perm[y]] = perm[a.apply(0, x, y)];
    FiniteAlgebra b(band_signature(), a.size(), {t});
    auto phi = find_isomorphism(a, b);
    REQUIRE(phi.has_value());
    for (Element x = 0; x < a.size(); ++x)
      for (Element y = 0; y < a.size(); ++y)
        CHECK((*phi)[a.apply(0, x, y)] == b.apply(0, (*phi)[x], (*phi)[y]));
    CHECK(are_isomorphic(b, a));
    for (auto const& id : probes)
      CHECK(satisfies(a, id) == satisfies(b, id));
  }
  for (std::size_t i = 0; i < models.size(); ++i)
    for (std::size_t j = 0; j < models.size(); ++j)
      CHECK(are_isomorphic(models[i], models[j]) == (i == j));
}

TEST_CASE("direct products multiply componentwise") {
  auto p = direct_product(std::vector<FiniteAlgebra>{left_zero2(), right_zero2()});
  CHECK(p.size() == 4);
  CHECK(satisfies(p, ident("y = yxy")));
  CHECK_FALSE(satisfies(p, ident("xy = x")));
  // (a, b)(c, d) = (a, d); element 0b10 is (1, 0).
  CHECK(p.apply(0, 2, 1) == 3);
  std::vector<FiniteAlgebra> many(24, semilattice2());
  CHECK_THROWS_AS(direct_product(many), LimitError);
}

TEST_CASE("generated subalgebras keep representative terms") {
  auto p   = direct_product(std::vector<FiniteAlgebra>{left_zero2(), right_zero2()});
  std::vector<Element> gens{0, 3};
  auto sub = generated_subalgebra(p, gens);
  CHECK(sub.algebra.size() == 4);
  CHECK(sub.generators == std::vector<Element>{0, 1});
  for (std::size_t e = 0; e < sub.repr.size(); ++e)
    CHECK(sub.algebra.evaluate(sub.repr[e], sub.generators) == e);
  CHECK(print_term(sub.repr[2], band_signature(), true) == "xy");

  std::vector<FiniteAlgebra> factors{semilattice2(), semilattice2()};
  auto in_product = generated_subalgebra(factors, {{0, 1}, {1, 0}});
  CHECK(in_product.algebra.size() == 3);
  CHECK(in_product.coordinates[2] == std::vector<Element>{0, 0});
}

TEST_CASE("models print and parse back") {
  for (auto const& a : catalog_variety("B").models(3)) {
    if (a.size() > 1)
      CHECK(parse_model(print_model(a)) == a);
    CHECK(parse_model(print_model(a), band_signature()) == a);
  }
  auto ba = boolean_algebra2();
  CHECK(parse_model(print_model(ba), boolean_signature()) == ba);
  CHECK(print_model(left_zero2()) == "size 2\n*: 0 0 1 1\n");
  auto text = "signature meet 2 join 2\nsize 2\nmeet: 0 0 0 1\njoin: 0 1 1 1\n";
  CHECK(parse_model(text) == distributive_lattice2());
  CHECK_THROWS_AS(parse_model("size 2\n*: 0 0 1\n"), Error);
  CHECK_THROWS_AS(parse_model("size 1\n*: 0\n"), ParseError);
  CHECK_THROWS_AS(parse_model("*: 0 0 1 1\n"), ParseError);
}
