#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hypervar/term.hpp"

namespace hypervar {

  //! A choice of one term per operation symbol: the image of a k-ary symbol is
  //! a term over x1..xk. Through apply_hyp it acts on every term, fixing the
  //! variables.
  class Hypersubstitution {
   public:
    Hypersubstitution(Signature sig, std::vector<Term> images);

    //! The identity mapping f -> f(x1, ..., xk).
    static Hypersubstitution identity(Signature const& sig);

    Signature const& signature() const noexcept {
      return _sig;
    }
    Term const& image(SymbolId f) const {
      return _images.at(f);
    }
    std::vector<Term> const& images() const noexcept {
      return _images;
    }

    //! Structurally the identity mapping. Triviality modulo a variety is
    //! is_trivial_mod.
    bool is_identity() const;

    friend bool operator==(Hypersubstitution const&,
                           Hypersubstitution const&) = default;

   private:
    Signature         _sig;
    std::vector<Term> _images;
  };

  //! The extension of sigma to all terms: variables are fixed and
  //! f(t1..tk) becomes sigma(f)(apply_hyp(t1), ..., apply_hyp(tk)).
  Term     apply_hyp(Hypersubstitution const& sigma, Term const& t);
  Identity apply_hyp(Hypersubstitution const& sigma, Identity const& id);

  //! result(f) = apply_hyp(outer, inner(f)). Deriving A by outer and then by
  //! inner gives the algebra derived from A by compose_hyps(outer, inner).
  Hypersubstitution compose_hyps(Hypersubstitution const& outer,
                                 Hypersubstitution const& inner);

  //! Parses bindings "f := term", separated by ';' or newlines. Every symbol
  //! needs exactly one binding; an image may only use x1..x_arity.
  Hypersubstitution parse_hyp(std::string_view text, Signature const& sig);
  Hypersubstitution parse_hyp(std::vector<std::string> const& bindings,
                              Signature const&                sig);

  //! One "f := term" line per symbol, words in band context.
  std::string print_hyp(Hypersubstitution const& sigma, bool flatten = true);

  //! Compact form used in reports and graph labels: "yx" for a single binary
  //! symbol, otherwise "meet:=..., join:=...".
  std::string hyp_label(Hypersubstitution const& sigma);

}  // namespace hypervar
