// Acceptance run: one PASS/FAIL line per criterion. Exit status is 0 when
// every failure is a known unattainable item and the rest of its criterion
// holds.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hypervar/error.hpp"
#include "hypervar/green_rees.hpp"
#include "hypervar/models.hpp"
#include "hypervar/verify.hpp"
#include "hypervar_cli/cli.hpp"
#include "support.hpp"

using namespace hypervar;
using Clock = std::chrono::steady_clock;

namespace {

  struct Outcome {
    bool                     ok = true;
    std::vector<std::string> details;
    //! Set when the only failing part is a documented unattainable item.
    std::string unattainable;

    void require(bool cond, std::string const& what) {
      if (!cond)
        ok = false;
      details.push_back(std::string(cond ? "ok   " : "BAD  ") + what);
    }
  };

  struct Criterion {
    int                      number;
    std::string              title;
    double                   limit_seconds;
    std::function<Outcome()> run;
  };

  double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
  }

  template <typename F>
  double timed(F&& f) {
    auto start = Clock::now();
    f();
    return seconds_since(start);
  }

  std::string fmt(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", s);
    return buf;
  }

  std::vector<oracle::Magma> oracle_bands_up_to(int n) {
    std::vector<oracle::Magma> out;
    for (int k = 1; k <= n; ++k) {
      auto iso = oracle::up_to_isomorphism(oracle::labelled_bands(k));
      out.insert(out.end(), iso.begin(), iso.end());
    }
    return out;
  }

  std::vector<oracle::Magma> filter(
      std::vector<oracle::Magma> const&                           ms,
      std::function<bool(oracle::Magma const&, int, int)> const& holds) {
    std::vector<oracle::Magma> out;
    for (auto const& m : ms) {
      bool ok = true;
      for (int a = 0; ok && a < m.n; ++a)
        for (int b = 0; ok && b < m.n; ++b)
          ok = holds(m, a, b);
      if (ok)
        out.push_back(m);
    }
    return out;
  }



  Outcome bridge() {
    Outcome    out;
    auto const& b     = catalog_variety("B");
    auto        bands = b.models(3);
    auto        reps  = enumerate_hyp_classes(b).reps;
    std::mt19937          rng(1234);
    std::vector<Identity> ids;
    while (ids.size() < 200) {
      Identity id{test_support::random_term(rng, band_signature(), 3, 3),
                  test_support::random_term(rng, band_signature(), 3, 3)};
      if (id.lhs.depth() <= 3 && id.rhs.depth() <= 3)
        ids.push_back(id);
    }
    std::size_t checks = 0, bad = 0;
    for (auto const& a : bands)
      for (auto const& s : reps) {
        auto d = derived_algebra(a, s);
        for (auto const& id : ids) {
          ++checks;
          bad += satisfies(d, id) != satisfies(a, apply_hyp(s, id));
        }
      }
    out.require(bands.size() == 14, std::to_string(bands.size()) + " bands of size <= 3");
    out.require(reps.size() == 6, std::to_string(reps.size()) + " class representatives");
    out.require(bad == 0, std::to_string(checks - bad) + "/" + std::to_string(checks)
                              + " checks agree");
    return out;
  }

  Outcome free_sizes() {
    Outcome out;
    auto    bands4 = oracle_bands_up_to(4);
    auto    bands5 = oracle_bands_up_to(5);
    auto    sl     = filter(bands4, [](auto const& m, int a, int b) {
      return m.op(a, b) == m.op(b, a);
    });
    auto    w1     = filter(bands4, [](auto const& m, int a, int b) {
      return m.op(m.op(b, a), b) == b;
    });
    std::vector<oracle::MultiMagma> lattices;
    for (int n = 1; n <= 2; ++n) {
      auto ls = oracle::labelled_distributive_lattices(n);
      lattices.insert(lattices.end(), ls.begin(), ls.end());
    }

    struct Row {
      std::string                  name;
      std::size_t                  golden;
      std::size_t                  oracle;
      std::function<std::size_t()> compute;
      double                       limit;
    };
    std::vector<Row> rows{
        {"F_B(1)", 1, oracle::generated_semigroup_size(bands5, 1),
         [] { return free_band(1).size(); }, 1.0},
        {"F_B(2)", 6, oracle::generated_semigroup_size(bands5, 2),
         [] { return free_band(2).size(); }, 1.0},
        {"F_B(3)", 159, oracle::generated_semigroup_size(bands5, 3),
         [] { return compute_free_algebra(catalog_variety("B"), 3).size(); }, 60.0},
        {"F_SL(2)", 3, oracle::generated_semigroup_size(sl, 2),
         [] { return compute_free_algebra(catalog_variety("SL"), 2).size(); }, 1.0},
        {"F_W1(2)", 4, oracle::generated_semigroup_size(w1, 2),
         [] { return compute_free_algebra(catalog_variety("W1"), 2).size(); }, 1.0},
        {"F_DL(2)", 4, oracle::generated_clone_size(lattices, 2),
         [] { return compute_free_algebra(catalog_variety("DL"), 2).size(); }, 1.0},
    };
    for (auto const& r : rows) {
      std::size_t got = 0;
      double      t   = timed([&] { got = r.compute(); });
      out.require(r.oracle == r.golden && got == r.golden && t < r.limit,
                  r.name + " = " + std::to_string(got) + " (oracle "
                      + std::to_string(r.oracle) + ", expected " + std::to_string(r.golden)
                      + ", " + fmt(t) + " < " + fmt(r.limit) + ")");
    }
    return out;
  }

  Outcome green_rees() {
    Outcome           out;
    auto              bands = oracle_bands_up_to(4);
    auto              words = oracle::all_words(3, 6);
    GreenReesInterner interner;
    std::vector<std::uint32_t>    gr(words.size());
    std::vector<std::vector<int>> vec(words.size());
    for (std::size_t i = 0; i < words.size(); ++i) {
      gr[i]  = interner.id_of(test_support::to_word(words[i]));
      vec[i] = oracle::signature_vector(bands, words[i], 3);
    }
    // separated => signatures differ; equal signatures => never separated
    std::size_t violations = 0, pairs = 0, separated = 0;
    for (std::size_t i = 0; i < words.size(); ++i)
      for (std::size_t j = i + 1; j < words.size(); ++j) {
        ++pairs;
        bool sep = vec[i] != vec[j];
        separated += sep;
        violations += sep && gr[i] == gr[j];
      }
    out.require(violations == 0, std::to_string(pairs) + " word pairs, "
                                     + std::to_string(separated) + " separated, "
                                     + std::to_string(violations) + " violations");
    out.require(interner.size() <= 159,
                std::to_string(interner.size()) + " signature classes among the words");
    return out;
  }

  // Search every band of size <= max_size for a class representative whose
  // derived algebra is not associative.
  bool non_associative_derived_up_to(std::size_t max_size) {
    auto const& b     = catalog_variety("B");
    auto        reps  = enumerate_hyp_classes(b).reps;
    auto        assoc = test_support::ident("(xy)z = x(yz)");
    for (auto const& a : b.models(max_size))
      for (auto const& s : reps)
        if (!satisfies(derived_algebra(a, s), assoc))
          return true;
    return false;
  }

  Outcome claims() {
    Outcome     out;
    ClaimReport report;
    double      t = timed([&] { report = verify_claims(); });
    std::map<std::string, ClaimRecord const*> by_id;
    for (auto const& c : report.claims)
      by_id[c.id] = &c;
    for (auto const* id :
         {"ex-1.1", "thm-1.5", "prop-1.2-solid", "prop-1.2-fluid", "prop-1.2-proper",
          "prop-1.3-derived", "prop-1.3-fluid", "prop-1.3-solid", "prop-1.4-derived",
          "prop-1.4-fluid", "prop-1.4-solid", "prop-1.6-solid", "prop-1.6-fluid"}) {
      auto it = by_id.find(id);
      bool ok = it != by_id.end() && it->second->status == ClaimStatus::Pass
                && it->second->certainty == Certainty::Exact;
      out.require(ok, std::string(id) + " "
                          + (it == by_id.end() ? "missing" : to_string(it->second->status)));
    }
    out.require(t < 300.0, "full claim run " + fmt(t) + " < 300.00s");

    auto it5 = by_id.find("prop-1.1");
    bool five = it5 != by_id.end() && it5->second->status == ClaimStatus::Pass;
    out.require(five, "non-associative derived algebra found among bands of size <= 5");
    if (!out.ok)
      return out;
    if (!non_associative_derived_up_to(4)) {
      out.ok = false;
      out.details.push_back(
          "BAD  non-associative derived algebra among bands of size <= 4: none exist");
      out.unattainable =
          "every derived algebra of every band of size <= 4 is associative; the "
          "smallest witness has size 5";
    } else {
      out.details.push_back("ok   non-associative derived algebra among bands of size <= 4");
    }
    return out;
  }

  Outcome catalog_fluidity() {
    Outcome                          out;
    std::vector<VarietyPresentation> bands;
    for (auto const& v : band_catalog())
      if (v.name() != "TRIV")
        bands.push_back(v);
    std::vector<VarietyPresentation> targets{catalog_variety("SL"), catalog_variety("LZ"),
                                             catalog_variety("RZ")};
    std::string fluid_names, equal_notes;
    bool        exact = true, matches = true;
    for (auto const& v : bands) {
      auto f = is_fluid(v);
      exact  = exact && f.exact();
      std::string equal_to;
      for (auto const& w : targets) {
        auto a = subvariety_of(v, w), b = subvariety_of(w, v);
        exact  = exact && a.exact() && b.exact();
        if (a.value && b.value)
          equal_to = w.name();
      }
      if (f.value)
        fluid_names += " " + v.name();
      if (f.value && !equal_to.empty() && equal_to != v.name())
        equal_notes += " " + v.name() + "=" + equal_to;
      matches = matches && f.value == !equal_to.empty();
    }
    out.require(matches && exact,
                "fluid:" + fluid_names + "; each equal to SL, LZ or RZ"
                    + (equal_notes.empty() ? "" : " (" + equal_notes.substr(1) + ")"));

    auto const& all = catalog();
    std::string minimal_names;
    bool        thm11 = true;
    for (auto const& v : all) {
      auto m = is_minimal_in_catalog(v, all);
      if (!m.value)
        continue;
      minimal_names += " " + v.name();
      auto f = is_fluid(v);
      thm11  = thm11 && m.exact() && f.value && f.exact();
    }
    out.require(thm11, "minimal in catalog and fluid:" + minimal_names);

    for (auto const* name : {"W1", "W2"}) {
      auto const& v     = catalog_variety(name);
      auto        solid = is_solid(v), fluid = is_fluid(v);
      bool        all_equal = true, exact7 = solid.exact() && fluid.exact();
      for (auto const& s : enumerate_hyp_classes(v).reps) {
        auto e    = equals_derived(v, s, v);
        exact7    = exact7 && e.exact();
        all_equal = all_equal && e.value;
      }
      out.require(solid.value && exact7 && fluid.value == all_equal,
                  std::string(name) + " solid, fluid = " + (fluid.value ? "true" : "false")
                      + ", every derived variety equal = " + (all_equal ? "true" : "false"));
    }
    return out;
  }

  // Same presentation with an empty cache, so the timing covers building
  // the free algebras.
  VarietyPresentation fresh(std::string_view name) {
    auto const& v = catalog_variety(name);
    return {v.name(),          v.signature(),          v.base(),
            v.extra_basis(),   v.generating_algebras(), v.generators_declared()};
  }

  Outcome fluid_exact(std::string const& name, std::size_t classes) {
    Outcome out;
    auto    v = is_fluid(fresh(name));
    out.require(v.value && v.exact() && v.classes_checked == classes,
                name + " fluid: " + (v.value ? "true" : "false") + " (" + to_string(v.certainty)
                    + "); classes checked: " + std::to_string(v.classes_checked));
    return out;
  }

  Outcome v5_v6() {
    Outcome     out;
    auto const& v5 = catalog_variety("V5");
    auto const& v6 = catalog_variety("V6");
    auto        rev = band_hyp("rev");
    for (auto [from, to] : {std::pair{&v5, &v6}, std::pair{&v6, &v5}}) {
      auto        e     = equals_derived(*from, rev, *to);
      std::string label = from->name() + "[yx] == " + to->name();
      if (e.value) {
        out.require(e.exact(), label + ": true (PASS)");
        continue;
      }
      // a refutation must carry an identity refuted by a countermodel that
      // lies in one of the two varieties
      std::vector<std::string> seen;
      for (auto const& w : e.witnesses) {
        if (!w.identity || !w.decision || !w.decision->invalid()
            || !w.decision->countermodel)
          continue;
        auto const& cm     = w.decision->countermodel->model;
        bool        member = satisfies_all(cm, from->basis()) || satisfies_all(cm, to->basis());
        if (member && !satisfies(cm, *w.identity))
          seen.push_back("witness " + print_identity(*w.identity, band_signature(), true)
                         + ", countermodel of size " + std::to_string(cm.size()));
      }
      out.require(e.exact() && !seen.empty(), label + ": false (DISCREPANCY, exact witness)");
      for (auto const& line : seen)
        out.details.push_back("       " + line);
    }
    return out;
  }

  std::string capture(std::string const& command) {
    std::string out;
    FILE*       pipe = popen(command.c_str(), "r");
    if (pipe == nullptr)
      return out;
    char buf[4096];
    for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, pipe)) > 0;)
      out.append(buf, n);
    pclose(pipe);
    return out;
  }

  Outcome determinism() {
    Outcome     out;
    std::string command = std::string(HYPERVAR_EXECUTABLE) + " verify-paper --json";
    auto        first   = capture(command);
    auto        second  = capture(command);
    out.require(!first.empty() && first == second,
                "two processes, " + std::to_string(first.size()) + " bytes each, identical");
    std::ostringstream o, e;
    cli::run({"verify-paper", "--json"}, o, e);
    out.require(o.str() == first, "in-process run matches");
    return out;
  }

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "derived algebras satisfy exactly the hypersubstituted identities", 30.0, bridge},
      {2, "free algebra sizes agree with brute-force closures", 120.0, free_sizes},
      {3, "Green-Rees signatures agree with separation by bands of size <= 4", 60.0,
       green_rees},
      {4, "regression claims hold exactly", 300.0, claims},
      {5, "fluid band varieties, minimal varieties and solid varieties in the catalog", 300.0,
       catalog_fluidity},
      {6, "DL is fluid over 16 classes", 60.0, [] { return fluid_exact("DL", 16); }},
      {7, "BA is fluid over 4096 classes", 1800.0, [] { return fluid_exact("BA", 4096); }},
      {8, "V5 and V6 under yx, with evidence", 60.0, v5_v6},
      {9, "verify-paper --json is deterministic", 600.0, determinism},
  };

  int hard_failures = 0;
  for (auto const& c : criteria) {
    Outcome out;
    double  t = timed([&] {
      try {
        out = c.run();
      } catch (std::exception const& ex) {
        out.ok = false;
        out.details.push_back(std::string("BAD  exception: ") + ex.what());
      }
    });
    bool in_time = t < c.limit_seconds;
    bool pass    = out.ok && in_time;
    std::printf("%s criterion %d: %s [%s < %s]\n", pass ? "PASS" : "FAIL", c.number,
                c.title.c_str(), fmt(t).c_str(), fmt(c.limit_seconds).c_str());
    for (auto const& d : out.details)
      std::printf("    %s\n", d.c_str());
    if (!in_time)
      std::printf("    BAD  time limit exceeded\n");
    if (!pass && in_time && !out.unattainable.empty())
      std::printf("    known unattainable: %s\n", out.unattainable.c_str());
    else if (!pass)
      ++hard_failures;
    std::fflush(stdout);
  }
  return hard_failures == 0 ? 0 : 1;
}
