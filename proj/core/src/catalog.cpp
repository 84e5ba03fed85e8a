#include "hypervar/catalog.hpp"

#include "hypervar/error.hpp"

namespace hypervar {

  Signature const& band_signature() {
    static Signature const sig({{"*", 2}});
    return sig;
  }

  Signature const& lattice_signature() {
    static Signature const sig({{"meet", 2}, {"join", 2}});
    return sig;
  }

  Signature const& boolean_signature() {
    static Signature const sig(
        {{"meet", 2}, {"join", 2}, {"comp", 1}, {"zero", 0}, {"one", 0}});
    return sig;
  }

  FiniteAlgebra semilattice2() {
    return FiniteAlgebra(band_signature(), 2, {{0, 0, 0, 1}});
  }
  FiniteAlgebra left_zero2() {
    return FiniteAlgebra(band_signature(), 2, {{0, 0, 1, 1}});
  }
  FiniteAlgebra right_zero2() {
    return FiniteAlgebra(band_signature(), 2, {{0, 1, 0, 1}});
  }
  FiniteAlgebra distributive_lattice2() {
    return FiniteAlgebra(lattice_signature(), 2, {{0, 0, 0, 1}, {0, 1, 1, 1}});
  }
  FiniteAlgebra boolean_algebra2() {
    return FiniteAlgebra(boolean_signature(),
                         2,
                         {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0}, {0}, {1}});
  }

  namespace {

    std::vector<Identity> identities(Signature const&                     sig,
                                     std::initializer_list<char const*> texts) {
      std::vector<Identity> out;
      for (auto const* t : texts) {
        out.push_back(parse_identity(t, sig));
      }
      return out;
    }

    VarietyPresentation band_variety(char const*                 name,
                                     std::initializer_list<char const*> extra,
                                     std::vector<FiniteAlgebra>  gens = {}) {
      return VarietyPresentation(name,
                                 band_signature(),
                                 BaseTheory::Band,
                                 identities(band_signature(), extra),
                                 std::move(gens));
    }

    constexpr std::initializer_list<char const*> kLatticeAxioms = {
        "meet(meet(x, y), z) = meet(x, meet(y, z))",
        "join(join(x, y), z) = join(x, join(y, z))",
        "meet(x, y) = meet(y, x)",
        "join(x, y) = join(y, x)",
        "meet(x, join(x, y)) = x",
        "join(x, meet(x, y)) = x",
        "meet(x, join(y, z)) = join(meet(x, y), meet(x, z))"};

    std::vector<VarietyPresentation> build_catalog() {
      std::vector<VarietyPresentation> c;
      c.push_back(band_variety("B", {}));
      c.push_back(band_variety("SL", {"xy = yx"}, {semilattice2()}));
      c.push_back(band_variety("LZ", {"xy = x"}, {left_zero2()}));
      c.push_back(band_variety("RZ", {"xy = y"}, {right_zero2()}));
      c.push_back(band_variety("W1", {"y = yxy"}));
      c.push_back(band_variety("V1", {"zxy = zyx"}));
      c.push_back(band_variety("V2", {"yxz = xyz"}));
      c.push_back(band_variety("V3", {"yx = yxy"}));
      c.push_back(band_variety("V4", {"xy = yxy"}));
      c.push_back(band_variety("V5", {"xzy = zxyz"}));
      c.push_back(band_variety("V6", {"yxz = yzxz"}));
      c.push_back(band_variety("W2", {"zxyz = zyxz"}));

      c.emplace_back("DL",
                     lattice_signature(),
                     BaseTheory::None,
                     identities(lattice_signature(), kLatticeAxioms),
                     std::vector<FiniteAlgebra>{distributive_lattice2()});

      auto ba = identities(boolean_signature(), kLatticeAxioms);
      for (auto& id : identities(boolean_signature(),
                                 {"join(x, zero) = x",
                                  "meet(x, one) = x",
                                  "meet(x, comp(x)) = zero",
                                  "join(x, comp(x)) = one"})) {
        ba.push_back(std::move(id));
      }
      c.emplace_back("BA",
                     boolean_signature(),
                     BaseTheory::None,
                     std::move(ba),
                     std::vector<FiniteAlgebra>{boolean_algebra2()});

      c.push_back(band_variety("TRIV", {"x = y"}));
      return c;
    }

  }  // namespace

  std::vector<VarietyPresentation> const& catalog() {
    static std::vector<VarietyPresentation> const c = build_catalog();
    return c;
  }

  bool is_catalog_name(std::string_view name) {
    for (auto const& v : catalog()) {
      if (v.name() == name) {
        return true;
      }
    }
    return false;
  }

  VarietyPresentation const& catalog_variety(std::string_view name) {
    for (auto const& v : catalog()) {
      if (v.name() == name) {
        return v;
      }
    }
    throw InvalidArgument("unknown catalog variety '" + std::string(name)
                          + "'");
  }

  std::vector<VarietyPresentation> band_catalog() {
    std::vector<VarietyPresentation> out;
    for (auto const& v : catalog()) {
      if (v.signature() == band_signature()) {
        out.push_back(v);
      }
    }
    return out;
  }

  Hypersubstitution band_hyp(std::string_view name) {
    char const* image = nullptr;
    if (name == "proj1") {
      image = "x";
    } else if (name == "proj2") {
      image = "y";
    } else if (name == "rev") {
      image = "yx";
    } else if (name == "xyx") {
      image = "xyx";
    } else if (name == "id") {
      image = "xy";
    } else {
      throw InvalidArgument("unknown band hypersubstitution '"
                            + std::string(name) + "'");
    }
    return Hypersubstitution(band_signature(),
                             {parse_term(image, band_signature())});
  }

}  // namespace hypervar
