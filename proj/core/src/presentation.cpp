#include "hypervar/presentation.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "hypervar/error.hpp"
#include "hypervar/models.hpp"

namespace hypervar {

  std::vector<Identity> band_axioms(Signature const& sig) {
    if (!sig.is_single_binary()) {
      throw InvalidArgument("band axioms need a single binary symbol");
    }
    auto x = Term::variable(1), y = Term::variable(2), z = Term::variable(3);
    auto mul = [](Term a, Term b) {
      return Term::apply(0, {std::move(a), std::move(b)});
    };
    return {Identity{mul(mul(x, y), z), mul(x, mul(y, z))},
            Identity{mul(x, x), x}};
  }

  struct VarietyPresentation::Cache {
    std::mutex                                                mutex;
    std::map<std::size_t, std::shared_ptr<FreeAlgebra const>> free;
    std::map<std::size_t, std::vector<FiniteAlgebra>>         models;
  };

  VarietyPresentation::VarietyPresentation(
      std::string                name,
      Signature                  sig,
      BaseTheory                 base,
      std::vector<Identity>      extra_basis,
      std::vector<FiniteAlgebra> generating_algebras,
      bool                       generators_declared)
      : _name(std::move(name)),
        _sig(std::move(sig)),
        _base(base),
        _extra(std::move(extra_basis)),
        _generating(std::move(generating_algebras)),
        _generators_declared(generators_declared),
        _cache(std::make_shared<Cache>()) {
    if (_base == BaseTheory::Band) {
      _basis = band_axioms(_sig);
    }
    for (auto const& id : _extra) {
      check_term(id.lhs, _sig);
      check_term(id.rhs, _sig);
      _basis.push_back(id);
    }
    for (auto const& a : _generating) {
      if (a.signature() != _sig) {
        throw InvalidArgument("generating algebra of " + _name
                              + " has a different signature");
      }
      for (auto const& id : _basis) {
        if (!satisfies(a, id, 8)) {
          throw InvalidArgument("generating algebra of " + _name
                                + " violates " + print_identity(id, _sig, true));
        }
      }
    }
  }

  std::vector<FiniteAlgebra> const&
  VarietyPresentation::models(std::size_t max_size) const {
    std::lock_guard lock(_cache->mutex);
    auto            it = _cache->models.find(max_size);
    if (it == _cache->models.end()) {
      it = _cache->models
               .emplace(max_size, enumerate_models(_basis, _sig, max_size))
               .first;
    }
    return it->second;
  }

  std::shared_ptr<FreeAlgebra const>
  VarietyPresentation::free_algebra(std::size_t              n,
                                    FreeAlgebraLimits const& limits) const {
    if (n > limits.n_max) {
      throw LimitError("free algebra rank " + std::to_string(n)
                       + " exceeds n_max = " + std::to_string(limits.n_max));
    }
    {
      std::lock_guard lock(_cache->mutex);
      if (auto it = _cache->free.find(n); it != _cache->free.end()) {
        return it->second;
      }
    }
    auto fa = std::make_shared<FreeAlgebra const>(
        compute_free_algebra(*this, n, limits));
    std::lock_guard lock(_cache->mutex);
    return _cache->free.emplace(n, std::move(fa)).first->second;
  }

  namespace {

    class UnionFind {
     public:
      explicit UnionFind(std::size_t n) : _parent(n) {
        std::iota(_parent.begin(), _parent.end(), Element(0));
      }
      Element find(Element a) {
        while (_parent[a] != a) {
          _parent[a] = _parent[_parent[a]];
          a          = _parent[a];
        }
        return a;
      }
      bool unite(Element a, Element b) {
        a = find(a);
        b = find(b);
        if (a == b) {
          return false;
        }
        if (b < a) {
          std::swap(a, b);
        }
        _parent[b] = a;
        return true;
      }

     private:
      std::vector<Element> _parent;
    };

    // Congruence closure on a finite semigroup given by its table: every
    // merged pair (a, b) enqueues (ca, cb) and (ac, bc) for all c.
    class SemigroupCongruence {
     public:
      explicit SemigroupCongruence(FiniteAlgebra const& s)
          : _s(s), _uf(s.size()) {}

      void merge(Element a, Element b) {
        _work.emplace_back(a, b);
        while (!_work.empty()) {
          auto [p, q] = _work.back();
          _work.pop_back();
          if (!_uf.unite(p, q)) {
            continue;
          }
          for (Element c = 0; c < _s.size(); ++c) {
            _work.emplace_back(_s.apply(0, c, p), _s.apply(0, c, q));
            _work.emplace_back(_s.apply(0, p, c), _s.apply(0, q, c));
          }
        }
      }

      Element find(Element a) {
        return _uf.find(a);
      }

     private:
      FiniteAlgebra const&                   _s;
      UnionFind                              _uf;
      std::vector<std::pair<Element, Element>> _work;
    };

    FreeAlgebra band_route(VarietyPresentation const& v,
                           std::size_t                n,
                           FreeAlgebraLimits const&   limits) {
      FreeAlgebra fb = free_band(n, v.signature());
      if (v.extra_basis().empty()) {
        return fb;
      }
      std::size_t const   size = fb.size();
      SemigroupCongruence cong(fb.base);
      for (auto const& id : v.extra_basis()) {
        auto        vars      = variables_of(id);
        std::size_t instances = 1;
        for (std::size_t i = 0; i < vars.size(); ++i) {
          if (instances > limits.max_instances / size) {
            throw LimitError("identity " + print_identity(id, v.signature(), true)
                             + " has more than "
                             + std::to_string(limits.max_instances)
                             + " instances at rank " + std::to_string(n));
          }
          instances *= size;
        }
        VarIndex top = std::max(id.lhs.max_var(), id.rhs.max_var());
        std::vector<Element> values(top, 0), odo(vars.size(), 0);
        while (true) {
          for (std::size_t i = 0; i < vars.size(); ++i) {
            values[vars[i] - 1] = odo[i];
          }
          Element l = fb.base.evaluate(id.lhs, values);
          Element r = fb.base.evaluate(id.rhs, values);
          if (cong.find(l) != cong.find(r)) {
            cong.merge(l, r);
          }
          std::size_t i = vars.size();
          while (i > 0 && ++odo[i - 1] == size) {
            odo[i - 1] = 0;
            --i;
          }
          if (i == 0) {
            break;
          }
        }
      }

      // Classes numbered by their least member, whose word is the least word
      // of the class.
      std::vector<Element> cls(size), first;
      std::vector<Element> index_of_root(size, ~Element(0));
      for (Element e = 0; e < size; ++e) {
        Element r = cong.find(e);
        if (index_of_root[r] == ~Element(0)) {
          index_of_root[r] = static_cast<Element>(first.size());
          first.push_back(e);
        }
        cls[e] = index_of_root[r];
      }
      std::size_t const    q = first.size();
      std::vector<Element> table(q * q);
      for (std::size_t a = 0; a < q; ++a) {
        for (std::size_t b = 0; b < q; ++b) {
          table[a * q + b] = cls[fb.base.apply(0, first[a], first[b])];
        }
      }
      std::vector<Element> gens;
      for (Element g : fb.generators) {
        gens.push_back(cls[g]);
      }
      std::vector<Term> repr;
      for (Element e : first) {
        repr.push_back(fb.repr[e]);
      }
      return FreeAlgebra{FiniteAlgebra(v.signature(), q, {std::move(table)}),
                         std::move(gens),
                         std::move(repr),
                         Exactness::Exact};
    }

  }  // namespace

  FreeAlgebra compute_free_algebra_from_generators(
      VarietyPresentation const& v,
      std::size_t                n,
      FreeAlgebraLimits const&   limits) {
    if (v.generating_algebras().empty()) {
      throw InvalidArgument(v.name() + " has no generating algebras");
    }
    std::vector<FiniteAlgebra>        factors;
    std::vector<std::vector<Element>> gens(n);
    for (auto const& a : v.generating_algebras()) {
      std::vector<Element> odo(n, 0);
      while (true) {
        if (factors.size() >= limits.max_elements) {
          throw LimitError("too many factors for the generator route");
        }
        factors.push_back(a);
        for (std::size_t i = 0; i < n; ++i) {
          gens[i].push_back(odo[i]);
        }
        std::size_t i = n;
        while (i > 0 && ++odo[i - 1] == a.size()) {
          odo[i - 1] = 0;
          --i;
        }
        if (i == 0) {
          break;
        }
      }
    }
    auto sub = generated_subalgebra(factors, gens, limits.max_elements);
    return FreeAlgebra{std::move(sub.algebra),
                       std::move(sub.generators),
                       std::move(sub.repr),
                       v.generators_declared() ? Exactness::Exact
                                               : Exactness::SmallModelQuotient};
  }

  FreeAlgebra compute_free_algebra(VarietyPresentation const& v,
                                   std::size_t                n,
                                   FreeAlgebraLimits const&   limits) {
    if (n > limits.n_max) {
      throw LimitError("free algebra rank " + std::to_string(n)
                       + " exceeds n_max = " + std::to_string(limits.n_max));
    }
    if (v.base() == BaseTheory::Band) {
      return band_route(v, n, limits);
    }
    if (!v.generating_algebras().empty()) {
      return compute_free_algebra_from_generators(v, n, limits);
    }
    throw InvalidArgument(v.name()
                          + " has neither a band base nor generating algebras");
  }

  std::shared_ptr<FreeAlgebra const> free_algebra(VarietyPresentation const& v,
                                                  std::size_t                n,
                                                  FreeAlgebraLimits const& limits) {
    return v.free_algebra(n, limits);
  }

  FreeAlgebra derived_free_algebra(VarietyPresentation const& v,
                                   Hypersubstitution const&   sigma,
                                   std::size_t                n,
                                   FreeAlgebraLimits const&   limits) {
    if (sigma.signature() != v.signature()) {
      throw InvalidArgument("derived_free_algebra: signatures differ");
    }
    auto fa = v.free_algebra(n, limits);
    if (fa->exactness != Exactness::Exact) {
      throw InvalidArgument("derived_free_algebra needs an exact free algebra");
    }
    auto derived = derived_algebra(fa->base, sigma);
    auto sub     = generated_subalgebra(derived, fa->generators);
    return FreeAlgebra{std::move(sub.algebra),
                       std::move(sub.generators),
                       std::move(sub.repr),
                       Exactness::Exact};
  }

}  // namespace hypervar
