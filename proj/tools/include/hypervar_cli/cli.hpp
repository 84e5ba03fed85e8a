#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypervar::cli {

  inline constexpr int kExitOk            = 0;
  inline constexpr int kExitContradiction = 1;
  inline constexpr int kExitUsage         = 2;

  //! args excludes the program name.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace hypervar::cli
