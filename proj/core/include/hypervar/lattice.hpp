#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hypervar/analysis.hpp"

namespace hypervar {

  struct LabeledHyp {
    std::string       label;
    Hypersubstitution sigma;
  };

  //! Inclusion order among a set of varieties plus derived-variety arrows.
  struct LatticeGraph {
    struct Arrow {
      std::size_t from;
      std::size_t to;
      std::string label;
      bool        exact;
    };

    std::vector<std::string> nodes;
    //! (lower, upper) covering pairs of the strict inclusion order.
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    //! Distinct presentations of the same variety (i < j).
    std::vector<std::pair<std::size_t, std::size_t>> equal;
    //! V -> W whenever V_s = W for a listed s that is nontrivial modulo V.
    std::vector<Arrow> arrows;
  };

  //! Inclusions are computed with subvariety_of and transitively reduced;
  //! nothing is hard-coded. Node and edge order follow the input order.
  LatticeGraph compute_lattice(std::span<VarietyPresentation const> varieties,
                               std::span<LabeledHyp const>          hyps,
                               AnalysisOptions const&               opts = {});

  //! DOT text for a lattice graph: bottom-to-top covers, dotted undirected
  //! edges for equal presentations, dashed labelled arrows for derivations
  //! (bounded ones get a trailing '?').
  std::string to_dot(LatticeGraph const& g);

  std::string export_lattice_dot(std::span<VarietyPresentation const> varieties,
                                 std::span<LabeledHyp const>          hyps,
                                 AnalysisOptions const&               opts = {});

  //! proj1 (x), proj2 (y) and rev (yx), the hypersubstitutions drawn by
  //! default for band varieties.
  std::vector<LabeledHyp> default_band_hyps();

}  // namespace hypervar
