#include "hypervar/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include "hypervar/catalog.hpp"
#include "hypervar/error.hpp"
#include "hypervar/hyper.hpp"

namespace hypervar {

  namespace {
    std::string_view trim(std::string_view s) {
      auto const b = s.find_first_not_of(" \t\r");
      if (b == std::string_view::npos) {
        return {};
      }
      auto const e = s.find_last_not_of(" \t\r");
      return s.substr(b, e - b + 1);
    }

    std::pair<std::string_view, std::string_view> split_keyword(std::string_view line) {
      auto const sp = line.find_first_of(" \t");
      if (sp == std::string_view::npos) {
        return {line, {}};
      }
      return {line.substr(0, sp), trim(line.substr(sp))};
    }

    [[noreturn]] void fail(std::size_t line_no, std::string const& what) {
      throw ParseError("line " + std::to_string(line_no) + ": " + what);
    }
  }  // namespace

  VarietyPresentation parse_variety(std::string_view text) {
    std::string                  name = "unnamed";
    std::optional<Signature>     sig;
    BaseTheory                   base = BaseTheory::None;
    bool                         exact = true;
    std::vector<std::pair<std::size_t, std::string>> identity_lines;
    std::vector<std::string>     blocks;

    std::istringstream in{std::string(text)};
    std::string        raw;
    std::size_t        line_no = 0;
    while (std::getline(in, raw)) {
      ++line_no;
      std::string_view line = raw;
      if (auto const h = line.find('#'); h != std::string_view::npos) {
        line = line.substr(0, h);
      }
      line = trim(line);
      if (line.empty()) {
        continue;
      }
      auto [kw, rest] = split_keyword(line);
      if (kw == "name") {
        if (rest.empty()) {
          fail(line_no, "missing name");
        }
        name = std::string(rest);
      } else if (kw == "signature") {
        std::istringstream       ss{std::string(rest)};
        std::vector<OperationSymbol> syms;
        std::string              sym;
        std::size_t              arity = 0;
        while (ss >> sym) {
          if (!(ss >> arity)) {
            fail(line_no, "symbol '" + sym + "' needs an arity");
          }
          syms.push_back({sym, static_cast<std::uint32_t>(arity)});
        }
        sig = Signature(std::move(syms));
      } else if (kw == "base") {
        if (rest == "band") {
          base = BaseTheory::Band;
        } else if (rest == "none") {
          base = BaseTheory::None;
        } else {
          fail(line_no, "base must be 'band' or 'none'");
        }
      } else if (kw == "identity") {
        identity_lines.emplace_back(line_no, std::string(rest));
      } else if (kw == "generators") {
        if (rest == "exact") {
          exact = true;
        } else if (rest == "sample") {
          exact = false;
        } else {
          fail(line_no, "generators must be 'exact' or 'sample'");
        }
      } else if (kw == "size") {
        blocks.push_back(std::string(line) + "\n");
      } else if (line.find(':') != std::string_view::npos && !blocks.empty()) {
        blocks.back() += std::string(line) + "\n";
      } else {
        fail(line_no, "unrecognised line '" + std::string(line) + "'");
      }
    }
    if (!sig) {
      if (base != BaseTheory::Band) {
        throw ParseError("variety '" + name + "' has no signature line");
      }
      sig = band_signature();
    }
    if (base == BaseTheory::Band && !sig->is_single_binary()) {
      throw ParseError("base band needs a single binary symbol");
    }
    std::vector<Identity> ids;
    for (auto const& [no, t] : identity_lines) {
      try {
        ids.push_back(parse_identity(t, *sig));
      } catch (ParseError const& e) {
        fail(no, e.what());
      }
    }
    std::vector<FiniteAlgebra> gens;
    for (auto const& b : blocks) {
      gens.push_back(parse_model(b, *sig));
    }
    return VarietyPresentation(
        name, *sig, base, std::move(ids), std::move(gens), exact);
  }

  std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw InvalidArgument("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  VarietyPresentation load_variety(std::string const& name_or_path) {
    if (is_catalog_name(name_or_path)) {
      return catalog_variety(name_or_path);
    }
    std::ifstream probe(name_or_path);
    if (!probe) {
      throw InvalidArgument("'" + name_or_path
                            + "' is neither a catalog variety nor a readable file");
    }
    return parse_variety(read_file(name_or_path));
  }

  FiniteAlgebra load_model(std::string const&              path,
                           std::optional<Signature> const& sig) {
    return parse_model(read_file(path), sig);
  }

  Hypersubstitution load_hyp(std::vector<std::string> const& bindings,
                             Signature const&                sig) {
    if (bindings.size() == 1) {
      std::string const& b = bindings.front();
      if (!b.empty() && b.front() == '@') {
        return parse_hyp(read_file(b.substr(1)), sig);
      }
      if (b.find(":=") == std::string::npos && sig.is_single_binary()) {
        if (b == "proj1" || b == "proj2" || b == "rev" || b == "xyx" || b == "id") {
          return Hypersubstitution(sig, {band_hyp(b).image(0)});
        }
        return Hypersubstitution(sig, {parse_term(b, sig)});
      }
    }
    return parse_hyp(bindings, sig);
  }

}  // namespace hypervar
