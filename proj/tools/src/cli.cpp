#include "hypervar_cli/cli.hpp"

#include <CLI11.hpp>
#include <ostream>
#include <sstream>

#include "hypervar/catalog.hpp"
#include "hypervar/error.hpp"
#include "hypervar/io.hpp"
#include "hypervar/lattice.hpp"
#include "hypervar/models.hpp"
#include "json_report.hpp"

namespace hypervar::cli {

  namespace {

    struct Common {
      std::size_t free_rank      = 3;
      std::size_t max_model_size = 4;
      bool        json           = false;

      AnalysisOptions analysis() const {
        AnalysisOptions o;
        o.n_max          = free_rank;
        o.max_model_size = max_model_size;
        return o;
      }
    };

    void add_common(CLI::App* sub, Common& c) {
      sub->add_option("-n,--free-rank", c.free_rank, "largest free-algebra rank")
          ->check(CLI::Range(1, 6));
      sub->add_option("--max-model-size", c.max_model_size,
                      "largest countermodel searched")
          ->check(CLI::Range(1, static_cast<int>(kMaxModelSize)));
      sub->add_flag("--json", c.json, "structured output");
    }

    std::string yes_no(bool b) {
      return b ? "true" : "false";
    }

    std::string verdict_line(std::string const& what, Verdict const& v) {
      std::string s = what + ": " + yes_no(v.value) + " (" + to_string(v.certainty) + ")";
      if (v.classes_checked != 0) {
        s += "; classes checked: " + std::to_string(v.classes_checked);
      }
      if (!v.exact()) {
        s += "; bounds: free rank " + std::to_string(v.rank_bound)
             + ", model size " + std::to_string(v.model_bound);
      }
      return s;
    }

    void print_decision(std::ostream& out, Decision const& d, Signature const& sig) {
      out << to_string(d.kind);
      if (d.countermodel) {
        out << "; countermodel: size " << d.countermodel->model.size();
        auto label = describe_model(d.countermodel->model);
        if (!label.empty()) {
          out << ' ' << label;
        }
      }
      if (d.free_witness) {
        out << "; free-algebra witness at n=" << d.free_witness->rank;
      }
      if (d.unknown()) {
        out << "; " << d.reason;
      }
      out << '\n';
      if (d.free_witness) {
        out << "  " << print_term(d.free_witness->lhs_repr, sig, true) << " != "
            << print_term(d.free_witness->rhs_repr, sig, true) << " in F("
            << d.free_witness->rank << ")\n";
      }
      if (d.countermodel) {
        out << "  assignment:";
        for (auto const& [var, val] : d.countermodel->assignment) {
          out << ' ' << variable_name(var) << '=' << val;
        }
        out << '\n';
        std::istringstream in(print_model(d.countermodel->model));
        for (std::string line; std::getline(in, line);) {
          out << "  " << line << '\n';
        }
      }
    }

    std::vector<VarietyPresentation> lattice_varieties(std::string const& which,
                                                       std::vector<std::string> const& names) {
      std::vector<VarietyPresentation> out;
      if (!names.empty()) {
        for (auto const& n : names) {
          out.push_back(load_variety(n));
        }
        return out;
      }
      if (which == "bands") {
        return band_catalog();
      }
      if (which == "all") {
        return catalog();
      }
      throw InvalidArgument("--catalog must be 'bands' or 'all'");
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Derived, solid and fluid varieties of finite type", "hypervar"};
    app.require_subcommand(1);
    Common c;

    std::string              variety, identity, other, model_file, catalog_choice = "bands";
    std::vector<std::string> hyps, names;
    bool                     table = false, skip_boolean = false;

    auto* decide_cmd = app.add_subcommand("decide", "decide an identity in a variety");
    decide_cmd->add_option("variety", variety)->required();
    decide_cmd->add_option("identity", identity)->required();

    auto* free_cmd = app.add_subcommand("free", "free algebra of a given rank");
    free_cmd->add_option("variety", variety)->required();
    free_cmd->add_flag("--table", table, "print operation tables");

    auto* dalg_cmd = app.add_subcommand("derive-algebra", "derived algebra of a model");
    dalg_cmd->add_option("model", model_file)->required()->check(CLI::ExistingFile);
    dalg_cmd->add_option("--hyp", hyps, "f := term, or a band shorthand")->required();

    auto* dvar_cmd = app.add_subcommand("derive-variety", "derived variety V_s");
    dvar_cmd->add_option("variety", variety)->required();
    dvar_cmd->add_option("--hyp", hyps, "f := term, or a band shorthand")->required();
    dvar_cmd->add_option("--equals", other, "compare V_s with this variety");

    auto* classes_cmd = app.add_subcommand("hyp-classes", "hypersubstitution classes");
    classes_cmd->add_option("variety", variety)->required();

    auto* models_cmd = app.add_subcommand("models", "models of the basis up to isomorphism");
    models_cmd->add_option("variety", variety)->required();

    auto* fluid_cmd = app.add_subcommand("fluid", "is the variety fluid");
    fluid_cmd->add_option("variety", variety)->required();
    auto* solid_cmd = app.add_subcommand("solid", "is the variety solid");
    solid_cmd->add_option("variety", variety)->required();

    auto* dot_cmd = app.add_subcommand("lattice-dot", "inclusion diagram in DOT");
    dot_cmd->add_option("--catalog", catalog_choice, "bands or all");
    dot_cmd->add_option("varieties", names, "explicit list instead of --catalog");
    dot_cmd->add_option("--hyp", hyps, "band hypersubstitutions drawn as arrows");

    auto* verify_cmd = app.add_subcommand("verify-paper", "regression claims");
    verify_cmd->add_flag("--skip-boolean", skip_boolean, "omit the Boolean algebra claim");

    for (auto* sub : app.get_subcommands({})) {
      add_common(sub, c);
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::CallForHelp const& e) {
      out << app.help();
      return kExitOk;
    } catch (CLI::ParseError const& e) {
      std::ostringstream o, e2;
      int                rc = app.exit(e, o, e2);
      out << o.str();
      err << e2.str();
      return rc == 0 ? kExitOk : kExitUsage;
    }
    if (dot_cmd->parsed() && hyps.empty()) {
      hyps = {"proj1", "proj2", "rev"};
    }

    try {
      auto const opts = c.analysis();
      if (decide_cmd->parsed()) {
        auto v  = load_variety(variety);
        auto id = parse_identity(identity, v.signature());
        auto d  = decide(v, id, opts.decide_options(true));
        if (c.json) {
          out << Json{{"variety", v.name()},
                      {"identity", print_identity(id, v.signature(), true)},
                      {"decision", to_json(d, v.signature())}}
                     .dump(2)
              << '\n';
        } else {
          print_decision(out, d, v.signature());
        }
      } else if (free_cmd->parsed()) {
        auto v  = load_variety(variety);
        auto fa = v.free_algebra(c.free_rank, FreeAlgebraLimits{c.free_rank});
        if (c.json) {
          Json elems = Json::array();
          for (auto const& t : fa->repr) {
            elems.push_back(print_term(t, v.signature(), true));
          }
          Json j{{"variety", v.name()},
                 {"rank", fa->rank()},
                 {"size", fa->size()},
                 {"exactness", to_string(fa->exactness)},
                 {"elements", elems}};
          if (table) {
            j["algebra"] = to_json(fa->base);
          }
          out << j.dump(2) << '\n';
        } else {
          out << "F_" << v.name() << '(' << fa->rank() << "): size " << fa->size()
              << " (" << to_string(fa->exactness) << ")\n";
          for (std::size_t i = 0; i < fa->size(); ++i) {
            out << "  " << i << ": " << print_term(fa->repr[i], v.signature(), true)
                << '\n';
          }
          if (table) {
            out << print_model(fa->base);
          }
        }
      } else if (dalg_cmd->parsed()) {
        auto a = load_model(model_file);
        auto s = load_hyp(hyps, a.signature());
        auto d = derived_algebra(a, s);
        bool proper = is_proper_derived_algebra(a, s);
        if (c.json) {
          out << Json{{"sigma", hyp_label(s)},
                      {"derived", to_json(d)},
                      {"proper", proper}}
                     .dump(2)
              << '\n';
        } else {
          out << "# derived by " << hyp_label(s) << '\n'
              << print_model(d) << "proper: " << yes_no(proper) << '\n';
        }
      } else if (dvar_cmd->parsed()) {
        auto v      = load_variety(variety);
        auto s      = load_hyp(hyps, v.signature());
        auto inside = derived_included_in(v, s, v, opts);
        auto proper = is_proper_derived_variety(v, s, opts);
        std::optional<Verdict> eq;
        std::optional<VarietyPresentation> w;
        if (!other.empty()) {
          w  = load_variety(other);
          eq = equals_derived(v, s, *w, opts);
        }
        std::string const base = v.name() + "[" + hyp_label(s) + "]";
        if (c.json) {
          Json j{{"variety", v.name()},
                 {"sigma", hyp_label(s)},
                 {"contained_in_self", to_json(inside, v.signature())},
                 {"proper", to_json(proper, v.signature())}};
          if (eq) {
            j["equals"] = {{"variety", w->name()}, {"verdict", to_json(*eq, v.signature())}};
          }
          out << j.dump(2) << '\n';
        } else {
          out << verdict_line(base + " <= " + v.name(), inside) << '\n'
              << describe_witnesses(inside, v.signature())
              << verdict_line(base + " proper", proper) << '\n'
              << describe_witnesses(proper, v.signature());
          if (eq) {
            out << verdict_line(base + " == " + w->name(), *eq) << "; route: "
                << eq->route << '\n'
                << describe_witnesses(*eq, v.signature());
          }
        }
      } else if (classes_cmd->parsed()) {
        auto v       = load_variety(variety);
        auto classes = enumerate_hyp_classes(v, opts.decide_options());
        if (c.json) {
          Json reps = Json::array();
          for (auto const& s : classes.reps) {
            reps.push_back(hyp_label(s));
          }
          out << Json{{"variety", v.name()},
                      {"count", classes.reps.size()},
                      {"trivial_index", classes.trivial_index},
                      {"classes", reps}}
                     .dump(2)
              << '\n';
        } else {
          out << "classes: " << classes.reps.size() << '\n';
          for (std::size_t i = 0; i < classes.reps.size(); ++i) {
            out << "  " << i << ": " << hyp_label(classes.reps[i])
                << (i == classes.trivial_index ? "  (trivial)" : "") << '\n';
          }
        }
      } else if (models_cmd->parsed()) {
        auto        v      = load_variety(variety);
        auto const& models = v.models(c.max_model_size);
        if (c.json) {
          Json ms = Json::array();
          for (auto const& m : models) {
            ms.push_back(to_json(m));
          }
          out << Json{{"variety", v.name()},
                      {"max_size", c.max_model_size},
                      {"count", models.size()},
                      {"models", ms}}
                     .dump(2)
              << '\n';
        } else {
          out << "models up to size " << c.max_model_size << ": " << models.size()
              << '\n';
          for (auto const& m : models) {
            auto label = describe_model(m);
            out << '\n' << (label.empty() ? "" : "# " + label + "\n") << print_model(m);
          }
        }
      } else if (fluid_cmd->parsed() || solid_cmd->parsed()) {
        bool const  fluid = fluid_cmd->parsed();
        auto        v     = load_variety(variety);
        auto        r     = fluid ? is_fluid(v, opts) : is_solid(v, opts);
        std::string what  = fluid ? "fluid" : "solid";
        if (c.json) {
          out << Json{{"variety", v.name()}, {what, to_json(r, v.signature())}}.dump(2)
              << '\n';
        } else {
          out << verdict_line(what, r) << '\n' << describe_witnesses(r, v.signature());
        }
      } else if (dot_cmd->parsed()) {
        auto                    vs = lattice_varieties(catalog_choice, names);
        std::vector<LabeledHyp> lhs;
        for (auto const& h : hyps) {
          lhs.push_back({h, load_hyp({h}, band_signature())});
        }
        out << export_lattice_dot(vs, lhs, opts);
      } else if (verify_cmd->parsed()) {
        VerifyOptions vo;
        vo.analysis        = opts;
        vo.include_boolean = !skip_boolean;
        auto report        = verify_claims(vo);
        if (c.json) {
          out << to_json(report).dump(2) << '\n';
        } else {
          out << format_report(report);
        }
        return report.contradiction() ? kExitContradiction : kExitOk;
      }
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }
    return kExitOk;
  }

}  // namespace hypervar::cli
