#include "hypervar/hyp_classes.hpp"

#include "hypervar/error.hpp"

namespace hypervar {

  bool is_trivial_mod(VarietyPresentation const& v,
                      Hypersubstitution const&   sigma,
                      DecideOptions const&       opts) {
    auto const& sig = v.signature();
    if (sigma.signature() != sig) {
      throw InvalidArgument("is_trivial_mod: signatures differ");
    }
    for (SymbolId f = 0; f < sig.size(); ++f) {
      auto d = decide(v, Identity{sigma.image(f), generic_term(sig, f)}, opts);
      if (d.unknown()) {
        throw Error("cannot certify triviality of " + hyp_label(sigma)
                    + " modulo " + v.name() + ": " + d.reason);
      }
      if (d.invalid()) {
        return false;
      }
    }
    return true;
  }

  HypClasses enumerate_hyp_classes(VarietyPresentation const& v,
                                   DecideOptions const&       opts) {
    auto const& sig = v.signature();
    std::vector<std::shared_ptr<FreeAlgebra const>> per_symbol;
    std::vector<Element>                            trivial;
    for (SymbolId f = 0; f < sig.size(); ++f) {
      std::size_t k = sig.arity(f);
      if (k > opts.n_max) {
        throw LimitError("symbol '" + sig.name(f) + "' has arity "
                         + std::to_string(k) + " > n_max");
      }
      auto fa = v.free_algebra(k, FreeAlgebraLimits{opts.n_max});
      if (fa->exactness != Exactness::Exact) {
        throw LimitError("no exact free algebra of rank " + std::to_string(k)
                         + " for " + v.name());
      }
      trivial.push_back(fa->evaluate(generic_term(sig, f)));
      per_symbol.push_back(std::move(fa));
    }

    HypClasses           out{{}, 0};
    std::vector<Element> odo(sig.size(), 0);
    while (true) {
      std::vector<Term> images;
      bool              is_trivial = true;
      for (SymbolId f = 0; f < sig.size(); ++f) {
        images.push_back(per_symbol[f]->repr[odo[f]]);
        is_trivial = is_trivial && odo[f] == trivial[f];
      }
      if (is_trivial) {
        out.trivial_index = out.reps.size();
      }
      out.reps.emplace_back(sig, std::move(images));
      std::size_t i = sig.size();
      while (i > 0 && ++odo[i - 1] == per_symbol[i - 1]->size()) {
        odo[i - 1] = 0;
        --i;
      }
      if (i == 0) {
        break;
      }
    }
    return out;
  }

}  // namespace hypervar
