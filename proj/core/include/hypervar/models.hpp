#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hypervar/finite_algebra.hpp"

namespace hypervar {

  inline constexpr std::size_t kMaxModelSize = 6;

  //! Lexicographically least table (symbols in signature order, each table in
  //! odometer order) over all relabelings of a.
  FiniteAlgebra canonical_form(FiniteAlgebra const& a);

  //! All models of ids with carrier size exactly n, one per isomorphism
  //! class, each in canonical form, sorted by table.
  std::vector<FiniteAlgebra> enumerate_models_of_size(std::span<Identity const> ids,
                                                      Signature const&          sig,
                                                      std::size_t               n);

  //! Models of sizes 1..max_size up to isomorphism, ordered by size and then
  //! by canonical table. Throws LimitError when max_size exceeds
  //! kMaxModelSize.
  std::vector<FiniteAlgebra> enumerate_models(std::span<Identity const> ids,
                                              Signature const&          sig,
                                              std::size_t               max_size);

}  // namespace hypervar
