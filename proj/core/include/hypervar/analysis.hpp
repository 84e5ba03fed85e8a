#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hypervar/decide.hpp"
#include "hypervar/hyp_classes.hpp"

namespace hypervar {

  enum class Certainty {
    //! Every sub-decision was exact.
    Exact,
    //! Some sub-decision only held up to the recorded bounds (free rank,
    //! model size).
    Bounded
  };

  std::string to_string(Certainty c);

  //! Evidence attached to a verdict. identity is the identity the role talks
  //! about; decision, when present, is its decision with free-algebra and
  //! countermodel witnesses.
  struct Witness {
    std::optional<Hypersubstitution> sigma;
    std::string                      role;
    std::optional<Identity>          identity;
    std::optional<Decision>          decision;
    std::string                      note;
  };

  struct Verdict {
    bool                 value     = true;
    Certainty            certainty = Certainty::Exact;
    std::size_t          rank_bound  = 0;
    std::size_t          model_bound = 0;
    std::vector<Witness> witnesses;
    //! Hypersubstitution classes examined, for fluid/solid.
    std::size_t classes_checked = 0;
    //! How the verdict was reached, e.g. "invertibility".
    std::string route;

    bool exact() const noexcept {
      return certainty == Certainty::Exact;
    }
  };

  struct AnalysisOptions {
    std::size_t n_max          = 3;
    std::size_t max_model_size = 4;
    //! Attach a small countermodel to refuting witnesses.
    bool countermodels = true;

    DecideOptions decide_options(bool want_countermodel = false) const {
      return {n_max, max_model_size, want_countermodel};
    }
  };

  //! V is a subvariety of W iff V satisfies every basis identity of W.
  Verdict subvariety_of(VarietyPresentation const& v,
                        VarietyPresentation const& w,
                        AnalysisOptions const&     opts = {});

  //! V_sigma is contained in W iff V satisfies sigma(p) = sigma(q) for every
  //! basis identity p = q of W.
  Verdict derived_included_in(VarietyPresentation const& v,
                              Hypersubstitution const&   sigma,
                              VarietyPresentation const& w,
                              AnalysisOptions const&     opts = {});

  //! V_sigma == W. Containment in W is decided as in derived_included_in. The
  //! reverse containment is tried, in order, by:
  //!  - sigma trivial modulo V: then V_sigma = V and W is compared to V;
  //!  - an inverse: a class sigma' of W with sigma'(sigma(f)) = f in W and
  //!    W_sigma' contained in V. Every B in W is then (B_sigma')_sigma, a
  //!    derived algebra of a member of V;
  //!  - every image a variable: V_sigma then only depends on V being
  //!    nontrivial, so V_sigma = W_sigma, which is W when sigma is trivial
  //!    modulo W;
  //!  - comparing free algebras of ranks 1..n_max: the generator-fixing map
  //!    F_{V_sigma}(n) -> F_W(n) must be a homomorphism. A failure is an
  //!    exact refutation, success only bounded.
  Verdict equals_derived(VarietyPresentation const& v,
                         Hypersubstitution const&   sigma,
                         VarietyPresentation const& w,
                         AnalysisOptions const&     opts = {});

  //! V_sigma != V. Trivial sigma is never proper.
  Verdict is_proper_derived_variety(VarietyPresentation const& v,
                                    Hypersubstitution const&   sigma,
                                    AnalysisOptions const&     opts = {});

  //! No class representative sigma has V_sigma contained in V and proper.
  Verdict is_fluid(VarietyPresentation const& v, AnalysisOptions const& opts = {});

  //! Every class representative sigma has V_sigma contained in V.
  Verdict is_solid(VarietyPresentation const& v, AnalysisOptions const& opts = {});

  //! V |= x = y.
  Verdict is_trivial_variety(VarietyPresentation const& v,
                             AnalysisOptions const&     opts = {});

  //! V is nontrivial and every catalog member of the same type contained in
  //! V is trivial or equal to V. Minimality is only relative to catalog.
  Verdict is_minimal_in_catalog(VarietyPresentation const&           v,
                                std::span<VarietyPresentation const> catalog,
                                AnalysisOptions const&               opts = {});

  //! Multi-line human rendering of a verdict's witnesses.
  std::string describe_witnesses(Verdict const&             verdict,
                                 Signature const&           sig);

}  // namespace hypervar
