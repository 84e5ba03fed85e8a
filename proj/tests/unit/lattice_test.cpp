#include <doctest.h>

#include "hypervar/lattice.hpp"
#include "support.hpp"

using namespace hypervar;

namespace {
  std::vector<VarietyPresentation> pick(std::vector<std::string> const& names) {
    std::vector<VarietyPresentation> out;
    for (auto const& n : names)
      out.push_back(catalog_variety(n));
    return out;
  }

  bool has_cover(LatticeGraph const& g, std::string const& lo, std::string const& hi) {
    for (auto [a, b] : g.covers)
      if (g.nodes[a] == lo && g.nodes[b] == hi)
        return true;
    return false;
  }

  bool has_arrow(LatticeGraph const& g, std::string const& from, std::string const& to,
                 std::string const& label) {
    for (auto const& a : g.arrows)
      if (g.nodes[a.from] == from && g.nodes[a.to] == to && a.label == label)
        return a.exact;
    return false;
  }
}  // namespace

TEST_CASE("bottom of the band lattice") {
  auto vs = pick({"TRIV", "SL", "LZ", "RZ", "W1", "B"});
  auto g  = compute_lattice(vs, default_band_hyps());
  CHECK(g.nodes == std::vector<std::string>{"TRIV", "SL", "LZ", "RZ", "W1", "B"});
  CHECK(has_cover(g, "TRIV", "SL"));
  CHECK(has_cover(g, "TRIV", "LZ"));
  CHECK(has_cover(g, "TRIV", "RZ"));
  CHECK(has_cover(g, "LZ", "W1"));
  CHECK(has_cover(g, "RZ", "W1"));
  CHECK(has_cover(g, "W1", "B"));
  CHECK(has_cover(g, "SL", "B"));
  CHECK_FALSE(has_cover(g, "LZ", "B"));
  CHECK(g.covers.size() == 7);
  CHECK(g.equal.empty());
  CHECK(has_arrow(g, "B", "LZ", "proj1"));
  CHECK(has_arrow(g, "B", "RZ", "proj2"));
}

TEST_CASE("full band catalog") {
  auto g = compute_lattice(band_catalog(), default_band_hyps());
  CHECK(has_arrow(g, "V1", "V2", "rev"));
  CHECK(has_arrow(g, "V2", "V1", "rev"));
  CHECK(has_arrow(g, "V3", "V4", "rev"));
  CHECK_FALSE(has_arrow(g, "V5", "V6", "rev"));
  CHECK(g.equal.size() == 1);
  CHECK(has_cover(g, "V1", "V3"));
  CHECK(has_cover(g, "W1", "W2"));
  for (auto const& a : g.arrows)
    CHECK(a.exact);
  // transitively reduced
  for (auto [a, b] : g.covers)
    for (auto [c, d] : g.covers)
      if (b == c)
        for (auto [e, f] : g.covers)
          CHECK_FALSE((e == a && f == d));
}

TEST_CASE("dot output is stable") {
  auto vs  = pick({"TRIV", "SL", "LZ"});
  auto dot = export_lattice_dot(vs, default_band_hyps());
  CHECK(dot == export_lattice_dot(vs, default_band_hyps()));
  CHECK(dot.rfind("digraph varieties {\n", 0) == 0);
  CHECK(dot.find("  \"TRIV\" -> \"SL\";\n") != std::string::npos);
  CHECK(dot.find("\"SL\" -> \"LZ\" [style=dashed, constraint=false, label=\"proj1\"];")
        != std::string::npos);
  CHECK(dot.back() == '\n');
}
