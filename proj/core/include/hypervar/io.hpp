#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypervar/presentation.hpp"

namespace hypervar {

  //! Line-oriented variety description; '#' starts a comment.
  //!
  //!   name NAME
  //!   signature f 2 g 1 ...        (defaults to "* 2" when base is band)
  //!   base band|none               (default none)
  //!   identity p = q               (repeatable)
  //!   generators exact|sample      (default exact)
  //!   size n                       (starts a generating algebra; followed
  //!   f: t0 t1 ...                  by one table line per symbol)
  VarietyPresentation parse_variety(std::string_view text);

  std::string read_file(std::string const& path);

  //! A catalog name, or else a path to a variety file.
  VarietyPresentation load_variety(std::string const& name_or_path);

  //! A model file in the print_model format, with sig fixing the symbols.
  FiniteAlgebra load_model(std::string const&              path,
                           std::optional<Signature> const& sig = std::nullopt);

  //! Bindings given inline ("f := t") or one of the named band
  //! hypersubstitutions (proj1, proj2, rev, xyx, id); "@path" reads a file.
  Hypersubstitution load_hyp(std::vector<std::string> const& bindings,
                             Signature const&                sig);

}  // namespace hypervar
