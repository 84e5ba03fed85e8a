#include "hypervar/hyper.hpp"

#include <algorithm>
#include <sstream>

#include "hypervar/error.hpp"

namespace hypervar {

  Hypersubstitution::Hypersubstitution(Signature sig, std::vector<Term> images)
      : _sig(std::move(sig)), _images(std::move(images)) {
    if (_images.size() != _sig.size()) {
      throw InvalidArgument("hypersubstitution needs one image per symbol");
    }
    for (SymbolId f = 0; f < _sig.size(); ++f) {
      check_term(_images[f], _sig);
      if (_images[f].max_var() > _sig.arity(f)) {
        throw InvalidArgument("image of '" + _sig.name(f)
                              + "' uses a variable beyond its arity");
      }
    }
  }

  Hypersubstitution Hypersubstitution::identity(Signature const& sig) {
    std::vector<Term> images;
    for (SymbolId f = 0; f < sig.size(); ++f) {
      images.push_back(generic_term(sig, f));
    }
    return Hypersubstitution(sig, std::move(images));
  }

  bool Hypersubstitution::is_identity() const {
    for (SymbolId f = 0; f < _sig.size(); ++f) {
      if (_images[f] != generic_term(_sig, f)) {
        return false;
      }
    }
    return true;
  }

  Term apply_hyp(Hypersubstitution const& sigma, Term const& t) {
    if (t.is_variable()) {
      return t;
    }
    std::vector<Term> args;
    args.reserve(t.args().size());
    for (auto const& a : t.args()) {
      args.push_back(apply_hyp(sigma, a));
    }
    return substitute(sigma.image(t.symbol()), std::span<Term const>(args));
  }

  Identity apply_hyp(Hypersubstitution const& sigma, Identity const& id) {
    return {apply_hyp(sigma, id.lhs), apply_hyp(sigma, id.rhs)};
  }

  Hypersubstitution compose_hyps(Hypersubstitution const& outer,
                                 Hypersubstitution const& inner) {
    if (outer.signature() != inner.signature()) {
      throw InvalidArgument("composing hypersubstitutions of different types");
    }
    std::vector<Term> images;
    for (auto const& img : inner.images()) {
      images.push_back(apply_hyp(outer, img));
    }
    return Hypersubstitution(outer.signature(), std::move(images));
  }

  namespace {
    std::string_view trim(std::string_view s) {
      auto b = s.find_first_not_of(" \t\r\n");
      if (b == std::string_view::npos) {
        return {};
      }
      auto e = s.find_last_not_of(" \t\r\n");
      return s.substr(b, e - b + 1);
    }
  }  // namespace

  Hypersubstitution parse_hyp(std::vector<std::string> const& bindings,
                              Signature const&                sig) {
    std::vector<std::optional<Term>> images(sig.size());
    for (auto const& raw : bindings) {
      std::string_view b   = trim(raw);
      auto             sep = b.find(":=");
      if (sep == std::string_view::npos) {
        throw ParseError("binding needs ':=': \"" + std::string(b) + "\"");
      }
      std::string_view name = trim(b.substr(0, sep));
      auto             f    = sig.find(name);
      if (!f) {
        throw ParseError("unknown symbol '" + std::string(name)
                         + "' in binding");
      }
      if (images[*f]) {
        throw ParseError("symbol '" + std::string(name) + "' bound twice");
      }
      Term t = parse_term(b.substr(sep + 2), sig);
      if (t.max_var() > sig.arity(*f)) {
        throw ParseError("image of '" + std::string(name)
                         + "' uses a variable beyond x"
                         + std::to_string(sig.arity(*f)));
      }
      images[*f] = std::move(t);
    }
    std::vector<Term> out;
    for (SymbolId f = 0; f < sig.size(); ++f) {
      if (!images[f]) {
        throw ParseError("no binding for symbol '" + sig.name(f) + "'");
      }
      out.push_back(*images[f]);
    }
    return Hypersubstitution(sig, std::move(out));
  }

  Hypersubstitution parse_hyp(std::string_view text, Signature const& sig) {
    std::vector<std::string> bindings;
    std::size_t              start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
      if (i == text.size() || text[i] == ';' || text[i] == '\n') {
        auto piece = trim(text.substr(start, i - start));
        if (!piece.empty()) {
          bindings.emplace_back(piece);
        }
        start = i + 1;
      }
    }
    return parse_hyp(bindings, sig);
  }

  std::string print_hyp(Hypersubstitution const& sigma, bool flatten) {
    std::ostringstream os;
    auto const&        sig = sigma.signature();
    for (SymbolId f = 0; f < sig.size(); ++f) {
      if (f != 0) {
        os << '\n';
      }
      os << sig.name(f) << " := " << print_term(sigma.image(f), sig, flatten);
    }
    return os.str();
  }

  std::string hyp_label(Hypersubstitution const& sigma) {
    auto const& sig = sigma.signature();
    if (sig.is_single_binary()) {
      return print_term(sigma.image(0), sig, true);
    }
    std::string out;
    for (SymbolId f = 0; f < sig.size(); ++f) {
      if (f != 0) {
        out += ", ";
      }
      out += sig.name(f) + ":=" + print_term(sigma.image(f), sig, false);
    }
    return out;
  }

}  // namespace hypervar
