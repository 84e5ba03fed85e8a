#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "hypervar/presentation.hpp"

namespace hypervar {

  enum class DecisionKind { Valid, Invalid, Unknown };

  std::string to_string(DecisionKind k);

  //! The two sides of an identity evaluated at the generators of F_V(rank)
  //! landed on different elements.
  struct FreeWitness {
    std::size_t rank;
    Element     lhs;
    Element     rhs;
    Term        lhs_repr;
    Term        rhs_repr;
  };

  //! A finite model of the variety's basis and an assignment falsifying the
  //! identity.
  struct Countermodel {
    FiniteAlgebra model;
    Assignment    assignment;
  };

  struct Decision {
    DecisionKind                kind;
    std::optional<FreeWitness>  free_witness;
    std::optional<Countermodel> countermodel;
    //! Bounds used: free rank limit and largest model size searched.
    std::size_t rank_bound  = 0;
    std::size_t model_bound = 0;
    std::string reason;

    bool valid() const noexcept {
      return kind == DecisionKind::Valid;
    }
    bool invalid() const noexcept {
      return kind == DecisionKind::Invalid;
    }
    bool unknown() const noexcept {
      return kind == DecisionKind::Unknown;
    }
  };

  struct DecideOptions {
    std::size_t n_max          = 3;
    std::size_t max_model_size = 4;
    //! Also look for a small countermodel when the free-algebra route
    //! already refuted the identity.
    bool want_countermodel = false;
  };

  //! Decides V |= id. With at most n_max variables and an exact free algebra
  //! the answer is Valid or Invalid. Otherwise models of V.basis() up to
  //! max_model_size are searched for a countermodel, and Unknown (carrying
  //! the bounds) is returned when none exists. Valid is only ever returned
  //! from an exact free algebra.
  Decision decide(VarietyPresentation const& v,
                  Identity const&            id,
                  DecideOptions const&       opts = {});

  //! First model of V.basis() with at most max_size elements violating id.
  std::optional<Countermodel> find_countermodel(VarietyPresentation const& v,
                                                Identity const&            id,
                                                std::size_t max_size);

}  // namespace hypervar
