#pragma once

#include <string_view>
#include <vector>

#include "hypervar/presentation.hpp"

namespace hypervar {

  //! One binary symbol "*".
  Signature const& band_signature();
  //! meet/2, join/2.
  Signature const& lattice_signature();
  //! meet/2, join/2, comp/1, zero/0, one/0.
  Signature const& boolean_signature();

  //! Built-in varieties, in order: B, SL, LZ, RZ, W1, V1..V6, W2, DL, BA,
  //! TRIV. Built once; copies share free-algebra caches.
  std::vector<VarietyPresentation> const& catalog();

  //! Case-sensitive lookup; throws InvalidArgument for unknown names.
  VarietyPresentation const& catalog_variety(std::string_view name);

  bool is_catalog_name(std::string_view name);

  //! The band-type members of catalog(), in catalog order.
  std::vector<VarietyPresentation> band_catalog();

  //! Two-element algebras used as generators and in examples.
  FiniteAlgebra semilattice2();
  FiniteAlgebra left_zero2();
  FiniteAlgebra right_zero2();
  FiniteAlgebra distributive_lattice2();
  FiniteAlgebra boolean_algebra2();

  //! Hypersubstitutions of the band type by name: "proj1" (x), "proj2" (y),
  //! "rev" (yx), "xyx", "id" (xy).
  Hypersubstitution band_hyp(std::string_view name);

}  // namespace hypervar
