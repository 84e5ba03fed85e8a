#pragma once

#include <string>
#include <vector>

#include "hypervar/analysis.hpp"

namespace hypervar {

  enum class ClaimStatus {
    Pass,
    //! Exact verdict differing from the expected one.
    Fail,
    //! Exact verdict differing from an expected value known to be doubtful.
    Discrepancy,
    //! The verdict only held up to the search bounds and differs.
    Inconclusive
  };

  std::string to_string(ClaimStatus s);

  struct ClaimRecord {
    std::string              id;
    std::string              statement;
    bool                     expected  = true;
    bool                     computed  = true;
    Certainty                certainty = Certainty::Exact;
    bool                     tolerant  = false;
    ClaimStatus              status    = ClaimStatus::Pass;
    std::vector<std::string> evidence;
  };

  struct ClaimReport {
    std::vector<ClaimRecord> claims;

    //! Some claim failed with an exact verdict.
    bool contradiction() const;
  };

  struct VerifyOptions {
    AnalysisOptions analysis;
    //! The Boolean-algebra fluidity claim walks 4096 classes.
    bool include_boolean = true;
  };

  //! Runs the fixed list of regression claims in order. Ids are stable.
  ClaimReport verify_claims(VerifyOptions const& opts = {});

  //! One "STATUS id: statement" line per claim followed by indented evidence.
  std::string format_report(ClaimReport const& report);

}  // namespace hypervar
