#pragma once

#include <numeric>
#include <random>
#include <vector>

#include "hypervar/analysis.hpp"
#include "hypervar/catalog.hpp"
#include "hypervar/term.hpp"
#include "oracles.hpp"

namespace test_support {

  using namespace hypervar;

  // Uniform-ish random term: leaves are variables x1..vars, inner nodes
  // pick a symbol of positive arity (or a constant when the signature has
  // one and a coin says so).
  inline Term random_term(std::mt19937& rng, Signature const& sig,
                          std::size_t depth, VarIndex vars) {
    std::uniform_int_distribution<int> coin(0, 2);
    if (depth == 0 || coin(rng) == 0) {
      std::vector<SymbolId> constants;
      for (SymbolId f = 0; f < sig.size(); ++f)
        if (sig.arity(f) == 0)
          constants.push_back(f);
      if (!constants.empty() && coin(rng) == 0)
        return Term::apply(constants[rng() % constants.size()], {});
      return Term::variable(1 + rng() % vars);
    }
    std::vector<SymbolId> ops;
    for (SymbolId f = 0; f < sig.size(); ++f)
      if (sig.arity(f) > 0)
        ops.push_back(f);
    SymbolId          f = ops[rng() % ops.size()];
    std::vector<Term> args;
    for (std::size_t i = 0; i < sig.arity(f); ++i)
      args.push_back(random_term(rng, sig, depth - 1, vars));
    return Term::apply(f, std::move(args));
  }

  inline FiniteAlgebra to_algebra(oracle::Magma const& m) {
    std::vector<Element> t(m.t.begin(), m.t.end());
    return FiniteAlgebra(band_signature(), m.n, {t});
  }

  inline std::vector<VarIndex> to_word(std::vector<int> const& w) {
    return {w.begin(), w.end()};
  }

  inline Term word(std::string_view text) {
    return parse_term(text, band_signature());
  }

  inline Identity ident(std::string_view text) {
    return parse_identity(text, band_signature());
  }

}  // namespace test_support
