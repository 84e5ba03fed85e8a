#include "hypervar/verify.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "hypervar/catalog.hpp"
#include "hypervar/models.hpp"

namespace hypervar {

  std::string to_string(ClaimStatus s) {
    switch (s) {
      case ClaimStatus::Pass:
        return "PASS";
      case ClaimStatus::Fail:
        return "FAIL";
      case ClaimStatus::Discrepancy:
        return "DISCREPANCY";
      case ClaimStatus::Inconclusive:
        return "INCONCLUSIVE";
    }
    return "?";
  }

  bool ClaimReport::contradiction() const {
    for (auto const& c : claims) {
      if (c.status == ClaimStatus::Fail) {
        return true;
      }
    }
    return false;
  }

  namespace {

    std::string yes_no(bool b) {
      return b ? "true" : "false";
    }

    struct Outcome {
      bool                     value     = true;
      Certainty                certainty = Certainty::Exact;
      std::vector<std::string> evidence;

      void note(std::string line) {
        evidence.push_back(std::move(line));
      }

      //! Records a sub-verdict; the caller combines the values.
      bool fold(std::string const& label, Verdict const& v, Signature const& sig) {
        std::string line = label + " = " + yes_no(v.value) + " ("
                           + to_string(v.certainty);
        if (!v.route.empty()) {
          line += ", " + v.route;
        }
        if (v.classes_checked != 0) {
          line += ", classes checked: " + std::to_string(v.classes_checked);
        }
        if (!v.exact()) {
          line += ", rank <= " + std::to_string(v.rank_bound)
                  + ", models <= " + std::to_string(v.model_bound);
          certainty = Certainty::Bounded;
        }
        note(line + ")");
        std::istringstream in(describe_witnesses(v, sig));
        std::string        w;
        while (std::getline(in, w)) {
          note(w);
        }
        return v.value;
      }
    };

    class Context {
     public:
      explicit Context(VerifyOptions const& opts) : _opts(opts) {}

      AnalysisOptions const& analysis() const {
        return _opts.analysis;
      }

      bool include(VarietyPresentation const& v) const {
        return _opts.include_boolean || v.name() != "BA";
      }

      Verdict const& fluid(VarietyPresentation const& v) {
        return memo(_fluid, v, [&] { return is_fluid(v, analysis()); });
      }
      Verdict const& solid(VarietyPresentation const& v) {
        return memo(_solid, v, [&] { return is_solid(v, analysis()); });
      }
      Verdict const& trivial(VarietyPresentation const& v) {
        return memo(_trivial, v, [&] { return is_trivial_variety(v, analysis()); });
      }
      Verdict const& minimal(VarietyPresentation const& v) {
        return memo(_minimal, v, [&] {
          auto const& all = catalog();
          return is_minimal_in_catalog(v, all, analysis());
        });
      }
      Verdict const& subvariety(VarietyPresentation const& v,
                                VarietyPresentation const& w) {
        return memo(_sub, v.name() + "<=" + w.name(), [&] {
          return subvariety_of(v, w, analysis());
        });
      }

     private:
      template <typename F>
      Verdict const& memo(std::map<std::string, Verdict>& m,
                          VarietyPresentation const&      v,
                          F&&                             f) {
        return memo(m, v.name(), std::forward<F>(f));
      }
      template <typename F>
      Verdict const& memo(std::map<std::string, Verdict>& m,
                          std::string const&              key,
                          F&&                             f) {
        auto it = m.find(key);
        if (it == m.end()) {
          it = m.emplace(key, f()).first;
        }
        return it->second;
      }

      VerifyOptions                  _opts;
      std::map<std::string, Verdict> _fluid, _solid, _trivial, _minimal, _sub;
    };

    VarietyPresentation const& cat(std::string_view name) {
      return catalog_variety(name);
    }

    std::string label_of(VarietyPresentation const& v) {
      return v.name();
    }

    std::string derived_label(VarietyPresentation const& v,
                              Hypersubstitution const&   s) {
      return v.name() + "[" + hyp_label(s) + "]";
    }

    Outcome single(std::string const& label, Verdict const& v,
                   Signature const& sig) {
      Outcome o;
      o.value = o.fold(label, v, sig);
      return o;
    }

    Outcome both_not(Context& ctx, std::string const& what,
                     VarietyPresentation const& a, VarietyPresentation const& b) {
      Outcome o;
      for (auto const* v : {&a, &b}) {
        auto const& r = what == "fluid" ? ctx.fluid(*v) : ctx.solid(*v);
        o.value       = !o.fold(what + "(" + label_of(*v) + ")", r, v->signature())
                  && o.value;
      }
      return o;
    }

    Outcome mutually_derived(Context& ctx, VarietyPresentation const& a,
                             VarietyPresentation const& b) {
      auto const rev = band_hyp("rev");
      Outcome    o;
      auto       ab = equals_derived(a, rev, b, ctx.analysis());
      auto       ba = equals_derived(b, rev, a, ctx.analysis());
      o.value = o.fold(derived_label(a, rev) + " == " + b.name(), ab, a.signature());
      o.value = o.fold(derived_label(b, rev) + " == " + a.name(), ba, a.signature())
                && o.value;
      return o;
    }

    Outcome derived_equals(Context& ctx, VarietyPresentation const& v,
                           std::string_view hyp, VarietyPresentation const& w) {
      auto const s = band_hyp(hyp);
      Outcome    o;
      o.value = o.fold(derived_label(v, s) + " == " + w.name(),
                       equals_derived(v, s, w, ctx.analysis()),
                       v.signature());
      return o;
    }

    Outcome derived_not_associative(std::size_t max_size) {
      auto const& b     = cat("B");
      auto const  assoc = band_axioms(b.signature()).front();
      auto        classes = enumerate_hyp_classes(b);
      Outcome     o;
      // models are sorted by size, so the first hit is a smallest witness
      for (auto const& model : b.models(max_size)) {
        for (auto const& s : classes.reps) {
          auto d   = derived_algebra(model, s);
          auto bad = find_violation(d, assoc);
          if (!bad) {
            continue;
          }
          o.value = true;
          o.note("band of size " + std::to_string(model.size()) + ", s = "
                 + hyp_label(s));
          std::istringstream in(print_model(model));
          std::string        line;
          while (std::getline(in, line)) {
            o.note("  " + line);
          }
          std::string asg = "associativity fails in the derived algebra at";
          for (auto const& [var, val] : *bad) {
            asg += " " + variable_name(var) + "=" + std::to_string(val);
          }
          o.note(asg);
          return o;
        }
      }
      o.value = false;
      o.note("no band of size <= " + std::to_string(max_size)
             + " has a non-associative derived algebra");
      return o;
    }

    bool is_basic_minimal(std::string const& name) {
      return name == "SL" || name == "LZ" || name == "RZ";
    }

    struct ClaimSpec {
      std::string                  id;
      std::string                  statement;
      bool                         expected;
      bool                         tolerant;
      std::function<Outcome()>     run;
    };

  }  // namespace

  ClaimReport verify_claims(VerifyOptions const& opts) {
    Context ctx(opts);
    auto const& bsig = band_signature();
    auto const& B    = cat("B");
    auto const& SL   = cat("SL");
    auto const& LZ   = cat("LZ");
    auto const& RZ   = cat("RZ");
    auto const& W1   = cat("W1");
    auto const& W2   = cat("W2");

    std::vector<ClaimSpec> specs;
    specs.push_back({"ex-1.1", "SL is fluid", true, false, [&] {
                       return single("fluid(SL)", ctx.fluid(SL), bsig);
                     }});
    specs.push_back({"ex-1.2", "DL is fluid", true, false, [&] {
                       auto const& dl = cat("DL");
                       return single("fluid(DL)", ctx.fluid(dl), dl.signature());
                     }});
    if (opts.include_boolean) {
      specs.push_back({"ex-1.3", "BA is fluid", true, false, [&] {
                         auto const& ba = cat("BA");
                         return single("fluid(BA)", ctx.fluid(ba), ba.signature());
                       }});
    }
    specs.push_back(
        {"thm-1.1", "every variety minimal in the catalog is fluid", true, false, [&] {
           Outcome o;
           for (auto const& v : catalog()) {
             if (!ctx.include(v)) {
               o.note(v.name() + " skipped");
               continue;
             }
             auto const& m = ctx.minimal(v);
             if (!m.exact()) {
               o.certainty = Certainty::Bounded;
             }
             if (!m.value) {
               continue;
             }
             o.value = o.fold("fluid(" + v.name() + ")", ctx.fluid(v), v.signature())
                       && o.value;
           }
           return o;
         }});
    specs.push_back(
        {"thm-1.2",
         "every nontrivial catalog band variety contains SL, LZ or RZ, each fluid",
         true,
         false,
         [&] {
           Outcome o;
           for (auto const* u : {&SL, &LZ, &RZ}) {
             o.value = o.fold("fluid(" + u->name() + ")", ctx.fluid(*u), bsig)
                       && o.value;
           }
           for (auto const& v : band_catalog()) {
             auto const& t = ctx.trivial(v);
             if (!t.exact()) {
               o.certainty = Certainty::Bounded;
             }
             if (t.value) {
               continue;
             }
             std::string found;
             for (auto const* u : {&SL, &LZ, &RZ}) {
               auto const& s = ctx.subvariety(*u, v);
               if (s.value && s.exact()) {
                 found += (found.empty() ? "" : ", ") + u->name();
               }
             }
             o.note(v.name() + " contains: " + (found.empty() ? "none" : found));
             o.value = o.value && !found.empty();
           }
           return o;
         }});
    specs.push_back({"thm-1.5", "B is neither fluid nor solid", true, false, [&] {
                       Outcome o;
                       o.value = !o.fold("fluid(B)", ctx.fluid(B), bsig);
                       o.value = !o.fold("solid(B)", ctx.solid(B), bsig) && o.value;
                       return o;
                     }});
    specs.push_back({"thm-1.5-proj",
                     "B derived by x is LZ and B derived by y is RZ",
                     true,
                     false,
                     [&] {
                       auto a = derived_equals(ctx, B, "proj1", LZ);
                       auto b = derived_equals(ctx, B, "proj2", RZ);
                       a.value = a.value && b.value;
                       if (b.certainty != Certainty::Exact) {
                         a.certainty = b.certainty;
                       }
                       a.evidence.insert(a.evidence.end(), b.evidence.begin(),
                                         b.evidence.end());
                       return a;
                     }});
    specs.push_back(
        {"thm-1.6",
         "a catalog band variety is fluid iff it is minimal iff it equals SL, LZ or RZ",
         true,
         false,
         [&] {
           Outcome     o;
           std::string fluid_names;
           for (auto const& v : band_catalog()) {
             if (v.name() == "TRIV") {
               continue;
             }
             auto const& f = ctx.fluid(v);
             auto const& m = ctx.minimal(v);
             bool        basic = false;
             std::string equal_to;
             for (auto const* u : {&SL, &LZ, &RZ}) {
               auto const& up   = ctx.subvariety(*u, v);
               auto const& down = ctx.subvariety(v, *u);
               if (!up.exact() || !down.exact()) {
                 o.certainty = Certainty::Bounded;
               }
               if (up.value && down.value) {
                 basic    = true;
                 equal_to = u->name();
               }
             }
             if (!f.exact() || !m.exact()) {
               o.certainty = Certainty::Bounded;
             }
             if (f.value) {
               fluid_names += (fluid_names.empty() ? "" : ", ") + v.name();
             }
             if (f.value != m.value || f.value != basic) {
               o.value = false;
               o.note(v.name() + ": fluid = " + yes_no(f.value) + ", minimal = "
                      + yes_no(m.value) + ", equal to SL/LZ/RZ = " + yes_no(basic));
             } else if (basic && !is_basic_minimal(v.name())) {
               o.note(v.name() + " equals " + equal_to);
             }
           }
           o.note("fluid: " + fluid_names);
           return o;
         }});
    specs.push_back(
        {"thm-1.7",
         "a solid catalog variety V is fluid iff V[s] = V for every class s",
         true,
         false,
         [&] {
           Outcome o;
           for (auto const& v : catalog()) {
             if (!ctx.include(v)) {
               continue;
             }
             auto const& s = ctx.solid(v);
             if (!s.value) {
               continue;
             }
             if (!s.exact()) {
               o.certainty = Certainty::Bounded;
               continue;
             }
             bool all_equal = true;
             for (auto const& sigma :
                  enumerate_hyp_classes(v, ctx.analysis().decide_options()).reps) {
               auto e = equals_derived(v, sigma, v, ctx.analysis());
               if (!e.exact()) {
                 o.certainty = Certainty::Bounded;
               }
               if (!e.value) {
                 all_equal = false;
                 break;
               }
             }
             auto const& f = ctx.fluid(v);
             if (!f.exact()) {
               o.certainty = Certainty::Bounded;
             }
             o.note(v.name() + ": fluid = " + yes_no(f.value)
                    + ", V[s] = V for all s = " + yes_no(all_equal));
             o.value = o.value && f.value == all_equal;
           }
           return o;
         }});
    specs.push_back({"prop-1.1",
                     "some band of size at most 5 has a non-associative derived algebra",
                     true,
                     false,
                     [&] { return derived_not_associative(5); }});
    specs.push_back({"prop-1.2-solid", "W1 is solid", true, false, [&] {
                       return single("solid(W1)", ctx.solid(W1), bsig);
                     }});
    specs.push_back({"prop-1.2-fluid", "W1 is not fluid", true, false, [&] {
                       Outcome o;
                       o.value = !o.fold("fluid(W1)", ctx.fluid(W1), bsig);
                       return o;
                     }});
    specs.push_back(
        {"prop-1.2-proper",
         "W1 derived by x is a proper derived subvariety of W1 equal to LZ",
         true,
         false,
         [&] {
           auto const s = band_hyp("proj1");
           Outcome    o;
           o.value = o.fold(derived_label(W1, s) + " <= W1",
                            derived_included_in(W1, s, W1, ctx.analysis()), bsig);
           o.value = o.fold(derived_label(W1, s) + " proper",
                            is_proper_derived_variety(W1, s, ctx.analysis()), bsig)
                     && o.value;
           o.value = o.fold(derived_label(W1, s) + " == LZ",
                            equals_derived(W1, s, LZ, ctx.analysis()), bsig)
                     && o.value;
           return o;
         }});

    auto pair_claims = [&](std::string const& prefix, std::string const& a,
                           std::string const& b, bool tolerant) {
      auto const& va = cat(a);
      auto const& vb = cat(b);
      specs.push_back({prefix + "-derived",
                       a + " derived by yx is " + b + " and vice versa",
                       true,
                       tolerant,
                       [&ctx, &va, &vb] { return mutually_derived(ctx, va, vb); }});
      specs.push_back({prefix + "-fluid",
                       "neither " + a + " nor " + b + " is fluid",
                       true,
                       tolerant,
                       [&ctx, &va, &vb] { return both_not(ctx, "fluid", va, vb); }});
      specs.push_back({prefix + "-solid",
                       "neither " + a + " nor " + b + " is solid",
                       true,
                       tolerant,
                       [&ctx, &va, &vb] { return both_not(ctx, "solid", va, vb); }});
    };
    pair_claims("prop-1.3", "V1", "V2", false);
    specs.push_back({"prop-1.3-proj", "V1 derived by x is LZ", true, false, [&] {
                       return derived_equals(ctx, cat("V1"), "proj1", LZ);
                     }});
    pair_claims("prop-1.4", "V3", "V4", false);
    specs.push_back({"prop-1.4-proj", "V3 derived by x is LZ", true, false, [&] {
                       return derived_equals(ctx, cat("V3"), "proj1", LZ);
                     }});
    pair_claims("prop-1.5", "V5", "V6", true);
    specs.push_back({"prop-1.6-solid", "W2 is solid", true, false, [&] {
                       return single("solid(W2)", ctx.solid(W2), bsig);
                     }});
    specs.push_back({"prop-1.6-fluid", "W2 is not fluid", true, false, [&] {
                       Outcome o;
                       o.value = !o.fold("fluid(W2)", ctx.fluid(W2), bsig);
                       return o;
                     }});
    specs.push_back({"prop-1.6-minimal", "W2 is not minimal in the catalog", true,
                     false, [&] {
                       Outcome o;
                       o.value = !o.fold("minimal(W2)", ctx.minimal(W2), bsig);
                       return o;
                     }});
    specs.push_back(
        {"rem-1.1", "some catalog variety is solid and not fluid", true, false, [&] {
           Outcome o;
           o.value = false;
           for (auto const& v : catalog()) {
             if (!ctx.include(v)) {
               continue;
             }
             auto const& s = ctx.solid(v);
             if (!(s.value && s.exact())) {
               continue;
             }
             auto const& f = ctx.fluid(v);
             if (!f.value && f.exact()) {
               o.value = true;
               o.note(v.name() + " is solid and not fluid");
             }
           }
           return o;
         }});
    specs.push_back(
        {"rem-1.2", "some catalog variety is neither solid nor fluid", true, false, [&] {
           Outcome o;
           o.value = false;
           for (auto const& v : catalog()) {
             if (!ctx.include(v)) {
               continue;
             }
             auto const& s = ctx.solid(v);
             auto const& f = ctx.fluid(v);
             if (!s.value && !f.value && s.exact() && f.exact()) {
               o.value = true;
               o.note(v.name() + " is neither solid nor fluid");
             }
           }
           return o;
         }});
    specs.push_back({"triv-fluid-solid", "TRIV is fluid and solid", true, false, [&] {
                       auto const& t = cat("TRIV");
                       Outcome     o;
                       o.value = o.fold("fluid(TRIV)", ctx.fluid(t), bsig);
                       o.value = o.fold("solid(TRIV)", ctx.solid(t), bsig) && o.value;
                       return o;
                     }});

    ClaimReport report;
    for (auto const& spec : specs) {
      Outcome     o = spec.run();
      ClaimRecord r;
      r.id        = spec.id;
      r.statement = spec.statement;
      r.expected  = spec.expected;
      r.computed  = o.value;
      r.certainty = o.certainty;
      r.tolerant  = spec.tolerant;
      r.evidence  = std::move(o.evidence);
      if (r.computed == r.expected) {
        r.status = ClaimStatus::Pass;
      } else if (r.certainty != Certainty::Exact) {
        r.status = ClaimStatus::Inconclusive;
      } else {
        r.status = r.tolerant ? ClaimStatus::Discrepancy : ClaimStatus::Fail;
      }
      report.claims.push_back(std::move(r));
    }
    return report;
  }

  std::string format_report(ClaimReport const& report) {
    std::ostringstream os;
    for (auto const& c : report.claims) {
      os << to_string(c.status) << ' ' << c.id << ": " << c.statement
         << " [computed " << yes_no(c.computed) << ", expected "
         << yes_no(c.expected) << ", " << to_string(c.certainty) << "]\n";
      for (auto const& e : c.evidence) {
        os << "    " << e << '\n';
      }
    }
    std::size_t pass = 0;
    for (auto const& c : report.claims) {
      pass += c.status == ClaimStatus::Pass;
    }
    os << pass << '/' << report.claims.size() << " claims pass\n";
    return os.str();
  }

}  // namespace hypervar
