#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hypervar/hyper.hpp"
#include "hypervar/term.hpp"

namespace hypervar {

  using Element    = std::uint32_t;
  using Assignment = std::map<VarIndex, Element>;

  //! An algebra on the carrier {0, ..., size - 1} with one operation table
  //! per symbol. A table for a k-ary symbol has size^k entries in row-major
  //! (odometer) order: the first argument is the most significant digit.
  class FiniteAlgebra {
   public:
    FiniteAlgebra(Signature                         sig,
                  std::size_t                       size,
                  std::vector<std::vector<Element>> tables);

    Signature const& signature() const noexcept {
      return _sig;
    }
    std::size_t size() const noexcept {
      return _size;
    }
    std::vector<Element> const& table(SymbolId f) const {
      return _tables.at(f);
    }
    std::vector<std::vector<Element>> const& tables() const noexcept {
      return _tables;
    }

    Element apply(SymbolId f, std::span<Element const> args) const;

    Element apply(SymbolId f, Element a, Element b) const {
      return _tables[f][a * _size + b];
    }

    //! Evaluates t with values[k - 1] the value of x_k. Throws
    //! InvalidArgument when a variable of t has no value.
    Element evaluate(Term const& t, std::span<Element const> values) const;

    friend bool operator==(FiniteAlgebra const&, FiniteAlgebra const&)
        = default;

   private:
    Signature                         _sig;
    std::size_t                       _size;
    std::vector<std::vector<Element>> _tables;
  };

  Element evaluate(FiniteAlgebra const& a, Term const& t, Assignment const& asg);

  //! Default bound on the number of distinct variables satisfies will
  //! enumerate assignments for.
  inline constexpr std::size_t kDefaultVariableLimit = 6;

  //! First assignment (odometer order over the identity's variables) under
  //! which the two sides differ. Throws LimitError beyond var_limit variables.
  std::optional<Assignment>
  find_violation(FiniteAlgebra const& a,
                 Identity const&      id,
                 std::size_t          var_limit = kDefaultVariableLimit);

  bool satisfies(FiniteAlgebra const& a,
                 Identity const&      id,
                 std::size_t          var_limit = kDefaultVariableLimit);

  bool satisfies_all(FiniteAlgebra const&         a,
                     std::span<Identity const>    ids,
                     std::size_t var_limit = kDefaultVariableLimit);

  //! Same carrier, the table of f replaced by the term function of
  //! sigma(f).
  FiniteAlgebra derived_algebra(FiniteAlgebra const&     a,
                                Hypersubstitution const& sigma);

  //! A bijection phi with phi(f_A(args)) = f_B(phi(args)) for every symbol,
  //! as phi[i] = image of i.
  std::optional<std::vector<Element>> find_isomorphism(FiniteAlgebra const& a,
                                                       FiniteAlgebra const& b);

  bool are_isomorphic(FiniteAlgebra const& a, FiniteAlgebra const& b);

  //! True iff the derived algebra is not isomorphic to a.
  bool is_proper_derived_algebra(FiniteAlgebra const&     a,
                                 Hypersubstitution const& sigma);

  inline constexpr std::size_t kDefaultProductBound = 10'000'000;

  //! Componentwise product; an element is the mixed-radix encoding of its
  //! coordinate tuple, first factor most significant.
  FiniteAlgebra direct_product(std::span<FiniteAlgebra const> factors,
                               std::size_t bound = kDefaultProductBound);

  struct Subalgebra {
    FiniteAlgebra algebra;
    //! Element of the subalgebra for each given generator.
    std::vector<Element> generators;
    //! Per element, a term over the generator variables x1..xn evaluating to
    //! it (nullary constants included).
    std::vector<Term> repr;
    //! Per element, its coordinates in the ambient (product) algebra.
    std::vector<std::vector<Element>> coordinates;
  };

  //! Closure of gens (and the nullary constants) under all operations.
  //! Elements are numbered in discovery order: constants, generators, then
  //! breadth-first by generation. Each element keeps the least term (size,
  //! then structure) met during closure.
  Subalgebra generated_subalgebra(FiniteAlgebra const&     a,
                                  std::span<Element const> gens);

  //! As above, inside the product of factors, without materialising the
  //! product: each generator is given by its coordinate tuple.
  Subalgebra
  generated_subalgebra(std::span<FiniteAlgebra const>           factors,
                       std::vector<std::vector<Element>> const& gens,
                       std::size_t element_bound = kDefaultProductBound);

  //! "size n" followed by one "f: t0 t1 ..." line per symbol.
  std::string print_model(FiniteAlgebra const& a);

  //! Reads the model format. Without sig the symbols are taken from the
  //! lines and their arities inferred from the table lengths; a leading
  //! "signature f 2 g 1 ..." line fixes them explicitly.
  FiniteAlgebra parse_model(std::string_view                text,
                            std::optional<Signature> const& sig = std::nullopt);

  //! Short human label for small binary algebras ("left-zero",
  //! "right-zero", "semilattice"), empty otherwise.
  std::string describe_model(FiniteAlgebra const& a);

}  // namespace hypervar
