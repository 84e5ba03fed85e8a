#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hypervar/finite_algebra.hpp"

namespace hypervar {

  enum class Exactness {
    //! The algebra is free for the variety: n-variable identities hold in
    //! the variety iff both sides agree at the generators.
    Exact,
    //! Free for the subvariety generated by some members only; equal images
    //! prove nothing.
    SmallModelQuotient
  };

  std::string to_string(Exactness e);

  //! A finite free algebra of rank n: a finite algebra, the images of
  //! x1..xn, and a representative term per element.
  struct FreeAlgebra {
    FiniteAlgebra        base;
    std::vector<Element> generators;
    std::vector<Term>    repr;
    Exactness            exactness;

    std::size_t rank() const noexcept {
      return generators.size();
    }
    std::size_t size() const noexcept {
      return base.size();
    }

    //! Value of t with x_k sent to generators[k - 1].
    Element evaluate(Term const& t) const {
      return base.evaluate(t, generators);
    }
  };

  //! Largest free band rank that is built (|F_B(3)| = 159; rank 4 has
  //! 332380 elements).
  inline constexpr std::size_t kMaxFreeBandRank = 3;

  //! The free band on x1..xn over the single binary symbol of sig. Elements
  //! are distinct Green-Rees signatures, numbered in the order their
  //! length-lexicographically least words appear; repr holds those words.
  FreeAlgebra free_band(std::size_t n, Signature const& sig);

  //! free_band over the signature with one binary symbol "*".
  FreeAlgebra free_band(std::size_t n);

}  // namespace hypervar
