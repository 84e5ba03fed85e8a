#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hypervar/free_algebra.hpp"

namespace hypervar {

  enum class BaseTheory { None, Band };

  //! Identities (x*y)*z = x*(y*z) and x*x = x over a single binary symbol.
  std::vector<Identity> band_axioms(Signature const& sig);

  struct FreeAlgebraLimits {
    //! Largest rank a free algebra is built for.
    std::size_t n_max = 3;
    //! Guard on identity instances fed to the congruence closure.
    std::size_t max_instances = 100'000'000;
    //! Guard on the elements of a generated free algebra.
    std::size_t max_elements = 10'000'000;
  };

  //! A finitely based variety: an optional implicit base theory, extra basis
  //! identities, and optionally finite members. When generators_declared is
  //! set those members are known to generate the variety; otherwise they are
  //! only a sample and free algebras built from them are SmallModelQuotient.
  //! Copies share a cache of computed free algebras and small models.
  class VarietyPresentation {
   public:
    VarietyPresentation(std::string                name,
                        Signature                  sig,
                        BaseTheory                 base,
                        std::vector<Identity>      extra_basis,
                        std::vector<FiniteAlgebra> generating_algebras = {},
                        bool                       generators_declared = true);

    std::string const& name() const noexcept {
      return _name;
    }
    Signature const& signature() const noexcept {
      return _sig;
    }
    BaseTheory base() const noexcept {
      return _base;
    }
    std::vector<Identity> const& extra_basis() const noexcept {
      return _extra;
    }
    std::vector<FiniteAlgebra> const& generating_algebras() const noexcept {
      return _generating;
    }
    bool generators_declared() const noexcept {
      return _generators_declared;
    }

    //! Implicit axioms followed by the extra basis.
    std::vector<Identity> const& basis() const noexcept {
      return _basis;
    }

    //! Whether some route can build free algebras at all.
    bool has_free_route() const noexcept {
      return _base == BaseTheory::Band || !_generating.empty();
    }

    //! Models of basis() of sizes 1..max_size, cached.
    std::vector<FiniteAlgebra> const& models(std::size_t max_size) const;

    //! Cached free algebra of rank n; see free_algebra().
    std::shared_ptr<FreeAlgebra const>
    free_algebra(std::size_t n, FreeAlgebraLimits const& limits = {}) const;

   private:
    struct Cache;

    std::string                _name;
    Signature                  _sig;
    BaseTheory                 _base;
    std::vector<Identity>      _extra;
    std::vector<FiniteAlgebra> _generating;
    bool                       _generators_declared;
    std::vector<Identity>      _basis;
    std::shared_ptr<Cache>     _cache;
  };

  //! Builds F_V(n) without consulting the cache.
  //!
  //! Band route: the free band of rank n quotiented by the least congruence
  //! containing every instance p(a) = q(a) of every extra basis identity, a
  //! ranging over the whole free band (so the congruence is fully invariant
  //! and the quotient is free for the subvariety).
  //!
  //! Generator route: the subalgebra of the product of one copy of each
  //! generating algebra per assignment of x1..xn, generated by the
  //! projection tuples. Exact when the algebras were declared generating.
  FreeAlgebra compute_free_algebra(VarietyPresentation const& v,
                                   std::size_t                n,
                                   FreeAlgebraLimits const&   limits = {});

  FreeAlgebra compute_free_algebra_from_generators(
      VarietyPresentation const& v,
      std::size_t                n,
      FreeAlgebraLimits const&   limits = {});

  //! F_V(n) through the cache of v.
  std::shared_ptr<FreeAlgebra const>
  free_algebra(VarietyPresentation const& v,
               std::size_t                n,
               FreeAlgebraLimits const&   limits = {});

  //! The free algebra of rank n of the derived variety V_sigma: the
  //! subalgebra of the derived algebra of F_V(n) generated by its
  //! generators. Representative terms are over the derived operations.
  FreeAlgebra derived_free_algebra(VarietyPresentation const& v,
                                   Hypersubstitution const&   sigma,
                                   std::size_t                n,
                                   FreeAlgebraLimits const&   limits = {});

}  // namespace hypervar
