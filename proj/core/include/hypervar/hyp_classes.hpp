#pragma once

#include <cstddef>
#include <vector>

#include "hypervar/decide.hpp"
#include "hypervar/hyper.hpp"

namespace hypervar {

  //! True iff sigma(f) = f(x1..xk) is an identity of v for every symbol.
  //! Throws Error when some decision is Unknown.
  bool is_trivial_mod(VarietyPresentation const& v,
                      Hypersubstitution const&   sigma,
                      DecideOptions const&       opts = {});

  //! Representatives of hypersubstitutions modulo v-equivalence.
  struct HypClasses {
    std::vector<Hypersubstitution> reps;
    //! Index of the class of the identity mapping.
    std::size_t trivial_index;
  };

  //! One representative per class: the image of a k-ary symbol ranges over
  //! the representative terms of F_V(k) in carrier order; the product over
  //! symbols is taken with the first symbol most significant. Throws
  //! LimitError when a needed free algebra cannot be built.
  HypClasses enumerate_hyp_classes(VarietyPresentation const& v,
                                   DecideOptions const&       opts = {});

}  // namespace hypervar
