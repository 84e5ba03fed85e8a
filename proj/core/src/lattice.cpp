#include "hypervar/lattice.hpp"

#include <sstream>

#include "hypervar/catalog.hpp"
#include "hypervar/error.hpp"

namespace hypervar {

  std::vector<LabeledHyp> default_band_hyps() {
    return {{"proj1", band_hyp("proj1")},
            {"proj2", band_hyp("proj2")},
            {"rev", band_hyp("rev")}};
  }

  LatticeGraph compute_lattice(std::span<VarietyPresentation const> varieties,
                               std::span<LabeledHyp const>          hyps,
                               AnalysisOptions const&               opts) {
    AnalysisOptions quiet = opts;
    quiet.countermodels   = false;

    LatticeGraph      g;
    std::size_t const n = varieties.size();
    for (auto const& v : varieties) {
      g.nodes.push_back(v.name());
    }
    std::vector<std::vector<bool>> sub(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        sub[i][j] = i == j
                    || (varieties[i].signature() == varieties[j].signature()
                        && subvariety_of(varieties[i], varieties[j], quiet).value);
      }
    }
    auto strict = [&](std::size_t i, std::size_t j) {
      return sub[i][j] && !sub[j][i];
    };
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!strict(i, j)) {
          continue;
        }
        bool covered = true;
        for (std::size_t k = 0; k < n && covered; ++k) {
          covered = !(strict(i, k) && strict(k, j));
        }
        if (covered) {
          g.covers.emplace_back(i, j);
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (sub[i][j] && sub[j][i]) {
          g.equal.emplace_back(i, j);
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (auto const& h : hyps) {
        if (h.sigma.signature() != varieties[i].signature()) {
          continue;
        }
        bool trivial = false;
        try {
          trivial = is_trivial_mod(varieties[i], h.sigma, quiet.decide_options());
        } catch (Error const&) {
        }
        if (trivial) {
          continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
          if (varieties[j].signature() != varieties[i].signature()) {
            continue;
          }
          auto eq = equals_derived(varieties[i], h.sigma, varieties[j], quiet);
          if (eq.value) {
            g.arrows.push_back({i, j, h.label, eq.exact()});
          }
        }
      }
    }
    return g;
  }

  namespace {
    std::string quoted(std::string const& s) {
      std::string out = "\"";
      for (char c : s) {
        if (c == '"' || c == '\\') {
          out.push_back('\\');
        }
        out.push_back(c);
      }
      return out + "\"";
    }
  }  // namespace

  std::string to_dot(LatticeGraph const& g) {
    std::ostringstream os;
    os << "digraph varieties {\n";
    os << "  rankdir=BT;\n";
    os << "  node [shape=box];\n";
    for (auto const& name : g.nodes) {
      os << "  " << quoted(name) << ";\n";
    }
    for (auto [lo, hi] : g.covers) {
      os << "  " << quoted(g.nodes[lo]) << " -> " << quoted(g.nodes[hi])
         << ";\n";
    }
    for (auto [a, b] : g.equal) {
      os << "  " << quoted(g.nodes[a]) << " -> " << quoted(g.nodes[b])
         << " [dir=none, style=dotted, label=\"=\"];\n";
    }
    for (auto const& a : g.arrows) {
      os << "  " << quoted(g.nodes[a.from]) << " -> " << quoted(g.nodes[a.to])
         << " [style=dashed, constraint=false, label="
         << quoted(a.label + (a.exact ? "" : "?")) << "];\n";
    }
    os << "}\n";
    return os.str();
  }

  std::string export_lattice_dot(std::span<VarietyPresentation const> varieties,
                                 std::span<LabeledHyp const>          hyps,
                                 AnalysisOptions const&               opts) {
    return to_dot(compute_lattice(varieties, hyps, opts));
  }

}  // namespace hypervar
