#include "hypervar/decide.hpp"

#include "hypervar/error.hpp"

namespace hypervar {

  std::string to_string(DecisionKind k) {
    switch (k) {
      case DecisionKind::Valid:
        return "Valid";
      case DecisionKind::Invalid:
        return "Invalid";
      default:
        return "Unknown";
    }
  }

  std::optional<Countermodel> find_countermodel(VarietyPresentation const& v,
                                                Identity const&            id,
                                                std::size_t max_size) {
    for (auto const& m : v.models(max_size)) {
      if (auto asg = find_violation(m, id, 16)) {
        return Countermodel{m, *asg};
      }
    }
    return std::nullopt;
  }

  Decision decide(VarietyPresentation const& v,
                  Identity const&            id,
                  DecideOptions const&       opts) {
    check_term(id.lhs, v.signature());
    check_term(id.rhs, v.signature());
    Decision out{DecisionKind::Unknown, {}, {}, opts.n_max, 0, {}};
    if (id.lhs == id.rhs) {
      out.kind = DecisionKind::Valid;
      return out;
    }
    auto const        vars = variables_of(id);
    std::size_t const v_count = vars.size();

    std::string why;
    if (v_count <= opts.n_max && v.has_free_route()) {
      try {
        auto fa = v.free_algebra(v_count, FreeAlgebraLimits{opts.n_max});
        VarIndex top = std::max(id.lhs.max_var(), id.rhs.max_var());
        std::vector<Element> values(top, 0);
        for (std::size_t i = 0; i < v_count; ++i) {
          values[vars[i] - 1] = fa->generators[i];
        }
        Element l = fa->base.evaluate(id.lhs, values);
        Element r = fa->base.evaluate(id.rhs, values);
        if (l != r) {
          out.kind         = DecisionKind::Invalid;
          out.free_witness = FreeWitness{v_count, l, r, fa->repr[l], fa->repr[r]};
          if (opts.want_countermodel) {
            out.countermodel = find_countermodel(v, id, opts.max_model_size);
            out.model_bound  = opts.max_model_size;
          }
          return out;
        }
        if (fa->exactness == Exactness::Exact) {
          out.kind = DecisionKind::Valid;
          return out;
        }
        why = "sides agree only in a small-model quotient";
      } catch (LimitError const& e) {
        why = e.what();
      }
    } else if (v_count > opts.n_max) {
      why = std::to_string(v_count) + " variables exceed n_max = "
            + std::to_string(opts.n_max);
    } else {
      why = "no free-algebra route for " + v.name();
    }

    out.model_bound = opts.max_model_size;
    if (auto cm = find_countermodel(v, id, opts.max_model_size)) {
      out.kind         = DecisionKind::Invalid;
      out.countermodel = std::move(cm);
      return out;
    }
    out.reason = why + "; no countermodel up to size "
                 + std::to_string(opts.max_model_size);
    return out;
  }

}  // namespace hypervar
