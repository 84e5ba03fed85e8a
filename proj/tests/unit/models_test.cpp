#include <doctest.h>

#include "hypervar/error.hpp"
#include "hypervar/models.hpp"
#include "support.hpp"

using namespace hypervar;
using test_support::ident;

namespace {
  std::size_t automorphisms(FiniteAlgebra const& a) {
    std::vector<Element> p(a.size());
    std::iota(p.begin(), p.end(), 0);
    std::size_t count = 0;
    do {
      bool ok = true;
      for (Element x = 0; x < a.size() && ok; ++x)
        for (Element y = 0; y < a.size() && ok; ++y)
          ok = p[a.apply(0, x, y)] == a.apply(0, p[x], p[y]);
      count += ok;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
  }

  std::size_t factorial(std::size_t n) {
    return n <= 1 ? 1 : n * factorial(n - 1);
  }
}  // namespace

TEST_CASE("band counts agree with brute-force enumeration") {
  auto axioms = band_axioms(band_signature());
  for (int n = 1; n <= 4; ++n) {
    auto labelled = oracle::labelled_bands(n);
    auto iso      = oracle::up_to_isomorphism(labelled);
    auto ours     = enumerate_models_of_size(axioms, band_signature(), n);
    CHECK(ours.size() == iso.size());
    std::size_t orbit_total = 0;
    for (auto const& a : ours)
      orbit_total += factorial(n) / automorphisms(a);
    CHECK(orbit_total == labelled.size());
    // the oracle's canonical tables are least under relabelling too
    std::vector<oracle::Magma> as_magmas;
    for (auto const& a : ours)
      as_magmas.push_back({n, std::vector<int>(a.table(0).begin(), a.table(0).end())});
    CHECK(as_magmas == iso);
  }
}

TEST_CASE("semilattice and rectangular band counts match brute force") {
  auto count_with = [](int n, auto pred) {
    std::size_t c = 0;
    for (auto const& m : oracle::up_to_isomorphism(oracle::labelled_bands(n)))
      c += pred(m);
    return c;
  };
  auto commutative = [](oracle::Magma const& m) {
    for (int a = 0; a < m.n; ++a)
      for (int b = 0; b < m.n; ++b)
        if (m.op(a, b) != m.op(b, a))
          return false;
    return true;
  };
  auto rectangular = [](oracle::Magma const& m) {
    for (int a = 0; a < m.n; ++a)
      for (int b = 0; b < m.n; ++b)
        if (m.op(m.op(b, a), b) != b)
          return false;
    return true;
  };
  auto const& sl = catalog_variety("SL");
  auto const& w1 = catalog_variety("W1");
  for (int n = 1; n <= 4; ++n) {
    CHECK(enumerate_models_of_size(sl.basis(), band_signature(), n).size()
          == count_with(n, commutative));
    CHECK(enumerate_models_of_size(w1.basis(), band_signature(), n).size()
          == count_with(n, rectangular));
  }
}

TEST_CASE("enumeration is sorted, canonical and bounded") {
  auto models = enumerate_models(band_axioms(band_signature()), band_signature(), 4);
  CHECK(models.size() == 1 + 3 + 10 + 46);
  for (std::size_t i = 1; i < models.size(); ++i) {
    CHECK(models[i - 1].size() <= models[i].size());
    if (models[i - 1].size() == models[i].size())
      CHECK(models[i - 1].tables() < models[i].tables());
  }
  for (auto const& m : models)
    CHECK(canonical_form(m) == m);
  CHECK_THROWS_AS(enumerate_models(band_axioms(band_signature()), band_signature(),
                                   kMaxModelSize + 1),
                  LimitError);
}

TEST_CASE("models of other types") {
  auto const& dl = catalog_variety("DL");
  auto        m  = dl.models(3);
  // the 1-, 2- and 3-element chains
  CHECK(m.size() == 3);
  auto const& ba = catalog_variety("BA");
  auto        b  = ba.models(4);
  CHECK(b.size() == 3);
  CHECK(b[0].size() == 1);
  CHECK(b[1].size() == 2);
  CHECK(b[2].size() == 4);
}

TEST_CASE("canonical_form picks the least relabelling") {
  FiniteAlgebra lz_swapped(band_signature(), 2, {{0, 0, 1, 1}});
  CHECK(canonical_form(lz_swapped) == left_zero2());
  FiniteAlgebra sl_swapped(band_signature(), 2, {{0, 1, 1, 1}});
  CHECK(canonical_form(sl_swapped) == semilattice2());
}
