#include "json_report.hpp"

#include "hypervar/hyper.hpp"

namespace hypervar::cli {

  Json to_json(FiniteAlgebra const& a) {
    Json tables = Json::object();
    for (SymbolId f = 0; f < a.signature().size(); ++f) {
      tables[a.signature().name(f)] = a.table(f);
    }
    return Json{{"size", a.size()}, {"tables", tables}};
  }

  Json to_json(Decision const& d, Signature const& sig) {
    Json j{{"kind", to_string(d.kind)},
           {"rank_bound", d.rank_bound},
           {"model_bound", d.model_bound}};
    if (!d.reason.empty()) {
      j["reason"] = d.reason;
    }
    if (d.free_witness) {
      auto const& w = *d.free_witness;
      j["free_witness"] = {{"rank", w.rank},
                           {"lhs", print_term(w.lhs_repr, sig, true)},
                           {"rhs", print_term(w.rhs_repr, sig, true)}};
    }
    if (d.countermodel) {
      Json asg = Json::object();
      for (auto const& [var, val] : d.countermodel->assignment) {
        asg[variable_name(var)] = val;
      }
      j["countermodel"] = {{"model", to_json(d.countermodel->model)},
                           {"label", describe_model(d.countermodel->model)},
                           {"assignment", asg}};
    }
    return j;
  }

  Json to_json(Verdict const& v, Signature const& sig) {
    Json j{{"value", v.value},
           {"certainty", to_string(v.certainty)},
           {"route", v.route},
           {"classes_checked", v.classes_checked}};
    if (!v.exact()) {
      j["rank_bound"]  = v.rank_bound;
      j["model_bound"] = v.model_bound;
    }
    Json ws = Json::array();
    for (auto const& w : v.witnesses) {
      Json jw{{"role", w.role}};
      if (w.sigma) {
        jw["sigma"] = hyp_label(*w.sigma);
      }
      if (w.identity) {
        jw["identity"] = print_identity(*w.identity, sig, true);
      }
      if (!w.note.empty()) {
        jw["note"] = w.note;
      }
      if (w.decision) {
        jw["decision"] = to_json(*w.decision, sig);
      }
      ws.push_back(std::move(jw));
    }
    j["witnesses"] = std::move(ws);
    return j;
  }

  Json to_json(ClaimReport const& report) {
    Json claims = Json::array();
    std::size_t pass = 0;
    for (auto const& c : report.claims) {
      pass += c.status == ClaimStatus::Pass;
      claims.push_back({{"id", c.id},
                        {"statement", c.statement},
                        {"status", to_string(c.status)},
                        {"expected", c.expected},
                        {"computed", c.computed},
                        {"certainty", to_string(c.certainty)},
                        {"tolerant", c.tolerant},
                        {"evidence", c.evidence}});
    }
    return Json{{"claims", std::move(claims)},
                {"passed", pass},
                {"total", report.claims.size()},
                {"contradiction", report.contradiction()}};
  }

}  // namespace hypervar::cli
