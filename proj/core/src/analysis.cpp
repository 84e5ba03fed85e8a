#include "hypervar/analysis.hpp"

#include <sstream>

#include "hypervar/error.hpp"

namespace hypervar {

  std::string to_string(Certainty c) {
    return c == Certainty::Exact ? "exact" : "bounded";
  }

  namespace {

    void require_same_type(VarietyPresentation const& v,
                           VarietyPresentation const& w) {
      if (v.signature() != w.signature()) {
        throw InvalidArgument(v.name() + " and " + w.name()
                              + " have different types");
      }
    }

    void require_same_type(VarietyPresentation const& v,
                           Hypersubstitution const&   sigma) {
      if (v.signature() != sigma.signature()) {
        throw InvalidArgument("hypersubstitution type differs from " + v.name());
      }
    }

    void mark_bounded(Verdict& out, AnalysisOptions const& opts) {
      out.certainty   = Certainty::Bounded;
      out.rank_bound  = opts.n_max;
      out.model_bound = opts.max_model_size;
    }

    void absorb(Verdict& out, Verdict const& sub, AnalysisOptions const& opts) {
      if (!sub.exact()) {
        mark_bounded(out, opts);
      }
    }

    Decision refutation(VarietyPresentation const& v,
                        Identity const&            id,
                        Decision                   d,
                        AnalysisOptions const&     opts) {
      if (opts.countermodels && !d.countermodel) {
        d.countermodel = find_countermodel(v, id, opts.max_model_size);
        d.model_bound  = opts.max_model_size;
      }
      return d;
    }

    // Checks V |= each identity; rewrite maps a basis identity to the one
    // actually decided.
    template <typename Rewrite>
    Verdict check_all(VarietyPresentation const& v,
                      std::vector<Identity> const& ids,
                      Rewrite&&                    rewrite,
                      std::string const&           role,
                      std::optional<Hypersubstitution> const& sigma,
                      AnalysisOptions const&       opts) {
      Verdict out;
      out.route = "decide";
      for (auto const& e : ids) {
        Identity target = rewrite(e);
        auto     d      = decide(v, target, opts.decide_options());
        if (d.invalid()) {
          Verdict no;
          no.value = false;
          no.route = "decide";
          no.witnesses.push_back(
              Witness{sigma,
                      role,
                      target,
                      refutation(v, target, std::move(d), opts),
                      sigma ? "from basis identity "
                                  + print_identity(e, v.signature(), true)
                            : ""});
          return no;
        }
        if (d.unknown()) {
          mark_bounded(out, opts);
          out.witnesses.push_back(
              Witness{sigma, "undecided", target, d, d.reason});
        }
      }
      return out;
    }

    // The generator-fixing map F_{V_sigma}(n) -> F_W(n) through
    // representative terms; returns an identity of V_sigma failing in W.
    std::optional<Identity> compare_free(FreeAlgebra const& derived,
                                         FreeAlgebra const& target) {
      auto const&          sig = derived.base.signature();
      std::vector<Element> h(derived.size());
      for (Element e = 0; e < derived.size(); ++e) {
        h[e] = target.evaluate(derived.repr[e]);
      }
      for (SymbolId f = 0; f < sig.size(); ++f) {
        std::size_t const    k = sig.arity(f);
        std::vector<Element> args(k, 0), mapped(k, 0);
        std::size_t const    cells = derived.base.table(f).size();
        std::size_t const    n     = derived.size();
        for (std::size_t idx = 0; idx < cells; ++idx) {
          std::size_t rest = idx;
          for (std::size_t i = k; i-- > 0;) {
            args[i] = static_cast<Element>(rest % n);
            rest /= n;
          }
          for (std::size_t i = 0; i < k; ++i) {
            mapped[i] = h[args[i]];
          }
          Element value = derived.base.table(f)[idx];
          if (h[value] != target.base.apply(f, mapped)) {
            std::vector<Term> targs;
            for (Element a : args) {
              targs.push_back(derived.repr[a]);
            }
            return Identity{Term::apply(f, std::move(targs)),
                            derived.repr[value]};
          }
        }
      }
      return std::nullopt;
    }

    std::optional<Hypersubstitution> find_inverse(VarietyPresentation const& v,
                                                  Hypersubstitution const& sigma,
                                                  VarietyPresentation const& w,
                                                  AnalysisOptions const& opts) {
      HypClasses classes;
      try {
        classes = enumerate_hyp_classes(w, opts.decide_options());
      } catch (Error const&) {
        return std::nullopt;
      }
      auto const& sig = w.signature();
      for (auto const& inv : classes.reps) {
        bool ok = true;
        for (SymbolId f = 0; f < sig.size() && ok; ++f) {
          auto d = decide(w,
                          Identity{apply_hyp(inv, sigma.image(f)),
                                   generic_term(sig, f)},
                          opts.decide_options());
          ok     = d.valid();
        }
        if (!ok) {
          continue;
        }
        auto inc = derived_included_in(w, inv, v, opts);
        if (inc.value && inc.exact()) {
          return inv;
        }
      }
      return std::nullopt;
    }

    bool trivial_mod(VarietyPresentation const& v,
                     Hypersubstitution const&   sigma,
                     AnalysisOptions const&     opts) {
      try {
        return is_trivial_mod(v, sigma, opts.decide_options());
      } catch (Error const&) {
        return false;
      }
    }

    bool variable_images(Hypersubstitution const& sigma) {
      for (auto const& t : sigma.images()) {
        if (!t.is_variable()) {
          return false;
        }
      }
      return true;
    }

  }  // namespace

  Verdict subvariety_of(VarietyPresentation const& v,
                        VarietyPresentation const& w,
                        AnalysisOptions const&     opts) {
    require_same_type(v, w);
    return check_all(
        v,
        w.basis(),
        [](Identity const& e) { return e; },
        "basis identity of " + w.name() + " fails in " + v.name(),
        std::nullopt,
        opts);
  }

  Verdict derived_included_in(VarietyPresentation const& v,
                              Hypersubstitution const&   sigma,
                              VarietyPresentation const& w,
                              AnalysisOptions const&     opts) {
    require_same_type(v, w);
    require_same_type(v, sigma);
    return check_all(
        v,
        w.basis(),
        [&](Identity const& e) { return apply_hyp(sigma, e); },
        "derived basis identity of " + w.name() + " fails in " + v.name(),
        sigma,
        opts);
  }

  Verdict equals_derived(VarietyPresentation const& v,
                         Hypersubstitution const&   sigma,
                         VarietyPresentation const& w,
                         AnalysisOptions const&     opts) {
    Verdict out = derived_included_in(v, sigma, w, opts);
    if (!out.value) {
      return out;
    }

    if (trivial_mod(v, sigma, opts)) {
      Verdict back = subvariety_of(w, v, opts);
      back.route   = "trivial-mod";
      absorb(back, out, opts);
      return back;
    }

    if (auto inv = find_inverse(v, sigma, w, opts)) {
      out.route = "invertibility";
      out.witnesses.push_back(
          Witness{*inv,
                  "inverse",
                  std::nullopt,
                  std::nullopt,
                  "every member B of " + w.name() + " is (B_s')_s with B_s' in "
                      + v.name()});
      return out;
    }

    if (variable_images(sigma) && trivial_mod(w, sigma, opts)) {
      auto tv = is_trivial_variety(v, opts);
      auto tw = is_trivial_variety(w, opts);
      if (!tv.value && tv.exact() && !tw.value && tw.exact()) {
        out.route = "projection";
        out.witnesses.push_back(
            Witness{sigma,
                    "variable images",
                    std::nullopt,
                    std::nullopt,
                    v.name() + "_s is the same for every nontrivial variety, so it equals "
                        + w.name() + "_s = " + w.name()});
        return out;
      }
    }

    out.route = "free-comparison";
    for (std::size_t n = 1; n <= opts.n_max; ++n) {
      std::optional<FreeAlgebra>         derived;
      std::shared_ptr<FreeAlgebra const> target;
      try {
        derived = derived_free_algebra(v, sigma, n, FreeAlgebraLimits{opts.n_max});
        target  = w.free_algebra(n, FreeAlgebraLimits{opts.n_max});
      } catch (Error const& e) {
        mark_bounded(out, opts);
        out.witnesses.push_back(Witness{sigma,
                                        "undecided",
                                        std::nullopt,
                                        std::nullopt,
                                        std::string("rank ") + std::to_string(n)
                                            + ": " + e.what()});
        return out;
      }
      if (auto bad = compare_free(*derived, *target)) {
        auto    d = decide(w, *bad, opts.decide_options());
        Verdict no;
        no.value = false;
        no.route = "free-comparison";
        no.witnesses.push_back(
            Witness{sigma,
                    "identity of " + v.name() + "_s fails in " + w.name(),
                    *bad,
                    refutation(w, *bad, std::move(d), opts),
                    "free algebras of rank " + std::to_string(n) + " differ ("
                        + std::to_string(derived->size()) + " vs "
                        + std::to_string(target->size()) + " elements)"});
        return no;
      }
    }
    mark_bounded(out, opts);
    out.witnesses.push_back(
        Witness{sigma,
                "free algebras agree",
                std::nullopt,
                std::nullopt,
                "checked ranks 1.." + std::to_string(opts.n_max)});
    return out;
  }

  Verdict is_proper_derived_variety(VarietyPresentation const& v,
                                    Hypersubstitution const&   sigma,
                                    AnalysisOptions const&     opts) {
    require_same_type(v, sigma);
    if (trivial_mod(v, sigma, opts)) {
      Verdict out;
      out.value = false;
      out.route = "trivial-mod";
      out.witnesses.push_back(Witness{
          sigma, "trivial modulo " + v.name(), std::nullopt, std::nullopt, ""});
      return out;
    }
    Verdict out = equals_derived(v, sigma, v, opts);
    out.value   = !out.value;
    return out;
  }

  Verdict is_fluid(VarietyPresentation const& v, AnalysisOptions const& opts) {
    auto    classes = enumerate_hyp_classes(v, opts.decide_options());
    Verdict out;
    out.route = "classes";
    for (std::size_t i = 0; i < classes.reps.size(); ++i) {
      ++out.classes_checked;
      if (i == classes.trivial_index) {
        continue;
      }
      auto const& sigma = classes.reps[i];
      AnalysisOptions quiet = opts;
      quiet.countermodels   = false;
      auto inc = derived_included_in(v, sigma, v, quiet);
      absorb(out, inc, opts);
      if (!inc.value) {
        continue;
      }
      auto proper = is_proper_derived_variety(v, sigma, opts);
      if (proper.value && proper.exact() && inc.exact()) {
        Verdict no;
        no.value           = false;
        no.route           = "classes";
        no.classes_checked = out.classes_checked;
        no.witnesses.push_back(Witness{sigma,
                                       "proper derived subvariety",
                                       std::nullopt,
                                       std::nullopt,
                                       v.name() + "_s is contained in "
                                           + v.name() + " and differs from it"});
        for (auto& w : proper.witnesses) {
          no.witnesses.push_back(std::move(w));
        }
        return no;
      }
      absorb(out, proper, opts);
    }
    out.classes_checked = classes.reps.size();
    return out;
  }

  Verdict is_solid(VarietyPresentation const& v, AnalysisOptions const& opts) {
    auto    classes = enumerate_hyp_classes(v, opts.decide_options());
    Verdict out;
    out.route = "classes";
    for (auto const& sigma : classes.reps) {
      ++out.classes_checked;
      auto inc = derived_included_in(v, sigma, v, opts);
      if (!inc.value) {
        inc.classes_checked = out.classes_checked;
        inc.route           = "classes";
        return inc;
      }
      absorb(out, inc, opts);
    }
    return out;
  }

  Verdict is_trivial_variety(VarietyPresentation const& v,
                             AnalysisOptions const&     opts) {
    Identity xy{Term::variable(1), Term::variable(2)};
    auto     d = decide(v, xy, opts.decide_options());
    Verdict  out;
    out.route = "decide";
    out.value = d.valid();
    if (d.unknown()) {
      out.value = false;
      mark_bounded(out, opts);
    }
    if (!d.valid()) {
      out.witnesses.push_back(
          Witness{std::nullopt, "x = y fails", xy, d, d.reason});
    }
    return out;
  }

  Verdict is_minimal_in_catalog(VarietyPresentation const&           v,
                                std::span<VarietyPresentation const> catalog,
                                AnalysisOptions const&               opts) {
    Verdict out;
    out.route = "catalog";
    auto t    = is_trivial_variety(v, opts);
    if (t.value) {
      out.value = false;
      out.witnesses.push_back(Witness{
          std::nullopt, "trivial variety", std::nullopt, std::nullopt, ""});
      return out;
    }
    absorb(out, t, opts);
    std::size_t compared = 0;
    for (auto const& w : catalog) {
      if (w.signature() != v.signature()) {
        continue;
      }
      ++compared;
      auto sub = subvariety_of(w, v, opts);
      if (!sub.value) {
        continue;
      }
      auto wt = is_trivial_variety(w, opts);
      if (wt.value) {
        continue;
      }
      auto back = subvariety_of(v, w, opts);
      if (back.value) {
        absorb(out, back, opts);
        continue;
      }
      out.value = false;
      out.witnesses.push_back(Witness{std::nullopt,
                                      "nontrivial proper subvariety",
                                      std::nullopt,
                                      std::nullopt,
                                      w.name() + " is strictly contained in "
                                          + v.name()});
      absorb(out, sub, opts);
      absorb(out, wt, opts);
      return out;
    }
    out.witnesses.push_back(Witness{std::nullopt,
                                    "catalog scope",
                                    std::nullopt,
                                    std::nullopt,
                                    "minimal among " + std::to_string(compared)
                                        + " catalog varieties of this type"});
    return out;
  }

  std::string describe_witnesses(Verdict const& verdict, Signature const& sig) {
    std::ostringstream os;
    for (auto const& w : verdict.witnesses) {
      os << "  - " << w.role;
      if (w.sigma) {
        os << " [s: " << hyp_label(*w.sigma) << "]";
      }
      if (w.identity) {
        os << ": " << print_identity(*w.identity, sig, true);
      }
      if (!w.note.empty()) {
        os << " (" << w.note << ")";
      }
      os << '\n';
      if (w.decision) {
        auto const& d = *w.decision;
        if (d.free_witness) {
          os << "    free-algebra witness at n=" << d.free_witness->rank
             << ": " << print_term(d.free_witness->lhs_repr, sig, true)
             << " != " << print_term(d.free_witness->rhs_repr, sig, true)
             << '\n';
        }
        if (d.countermodel) {
          auto label = describe_model(d.countermodel->model);
          os << "    countermodel: size " << d.countermodel->model.size();
          if (!label.empty()) {
            os << ' ' << label;
          }
          os << ';';
          for (auto const& [var, val] : d.countermodel->assignment) {
            os << ' ' << variable_name(var) << '=' << val;
          }
          os << '\n';
        }
      }
    }
    return os.str();
  }

}  // namespace hypervar
