#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hypervar {

  using SymbolId = std::uint32_t;
  using VarIndex = std::uint32_t;

  struct OperationSymbol {
    std::string   name;
    std::uint32_t arity;

    friend bool operator==(OperationSymbol const&, OperationSymbol const&)
        = default;
  };

  //! The type of an algebra: an ordered list of uniquely named operation
  //! symbols. Declaration order is the canonical order used by every
  //! enumeration in the library.
  class Signature {
   public:
    Signature() = default;
    explicit Signature(std::vector<OperationSymbol> symbols);

    std::size_t size() const noexcept {
      return _symbols.size();
    }
    OperationSymbol const& operator[](SymbolId f) const {
      return _symbols.at(f);
    }
    std::uint32_t arity(SymbolId f) const {
      return _symbols.at(f).arity;
    }
    std::string const& name(SymbolId f) const {
      return _symbols.at(f).name;
    }
    std::vector<OperationSymbol> const& symbols() const noexcept {
      return _symbols;
    }

    std::optional<SymbolId> find(std::string_view name) const;
    std::uint32_t           max_arity() const noexcept;

    //! True when the signature consists of exactly one binary symbol, the
    //! only case in which juxtaposition words are accepted and printed.
    bool is_single_binary() const noexcept {
      return _symbols.size() == 1 && _symbols[0].arity == 2;
    }

    friend bool operator==(Signature const&, Signature const&) = default;

   private:
    std::vector<OperationSymbol> _symbols;
  };

  //! An immutable term: either a variable x_k (k >= 1) or an operation symbol
  //! applied to arguments. Copies share structure; equality is structural.
  class Term {
   public:
    static Term variable(VarIndex index);
    static Term apply(SymbolId symbol, std::vector<Term> args);

    bool is_variable() const noexcept {
      return _node->symbol == kVariable;
    }
    VarIndex var_index() const noexcept {
      return _node->var;
    }
    SymbolId symbol() const noexcept {
      return _node->symbol;
    }
    std::span<Term const> args() const noexcept {
      return _node->args;
    }
    Term const& arg(std::size_t i) const {
      return _node->args.at(i);
    }

    //! Number of nodes.
    std::size_t size() const noexcept {
      return _node->size;
    }
    std::size_t depth() const noexcept {
      return _node->depth;
    }
    std::size_t hash() const noexcept {
      return _node->hash;
    }
    //! Largest variable index occurring in the term, 0 for ground terms.
    VarIndex max_var() const noexcept {
      return _node->max_var;
    }

    friend bool operator==(Term const& a, Term const& b) noexcept;

    //! Size first, then structure: variables before applications, smaller
    //! variable index first, smaller symbol id first, then arguments
    //! lexicographically.
    friend std::strong_ordering operator<=>(Term const& a, Term const& b);

   private:
    static constexpr SymbolId kVariable = ~SymbolId(0);

    struct Node {
      SymbolId          symbol;
      VarIndex          var;
      std::vector<Term> args;
      std::size_t       size;
      std::size_t       depth;
      std::size_t       hash;
      VarIndex          max_var;
    };

    explicit Term(std::shared_ptr<Node const> node) : _node(std::move(node)) {}

    std::shared_ptr<Node const> _node;
  };

  struct TermHash {
    std::size_t operator()(Term const& t) const noexcept {
      return t.hash();
    }
  };

  struct Identity {
    Term lhs;
    Term rhs;

    friend bool operator==(Identity const&, Identity const&) = default;
  };

  using Substitution = std::map<VarIndex, Term>;

  //! Throws InvalidArgument unless every application in t is arity-correct
  //! for sig.
  void check_term(Term const& t, Signature const& sig);

  //! Parses the term grammar: function syntax f(t, ...), nullary constants as
  //! a bare name (or name()), variables x, y, z, x4, ... and, for signatures
  //! with a single binary symbol, left-associated juxtaposition words such as
  //! "zxy" == (z*x)*y. Throws ParseError.
  Term parse_term(std::string_view text, Signature const& sig);

  //! Parses "term = term".
  Identity parse_identity(std::string_view text, Signature const& sig);

  //! With flatten and a single binary symbol the in-order leaf word is
  //! printed (e.g. "zyx"); otherwise function syntax.
  std::string print_term(Term const& t, Signature const& sig, bool flatten);
  std::string print_identity(Identity const& id,
                             Signature const& sig,
                             bool             flatten);

  //! Name of the variable x_k: x, y, z for k = 1, 2, 3 and "x<k>" beyond.
  std::string variable_name(VarIndex k);

  //! Simultaneous substitution. Throws InvalidArgument if env is missing a
  //! variable of t.
  Term substitute(Term const& t, Substitution const& env);

  //! Same as substitute with env[k - 1] the image of x_k.
  Term substitute(Term const& t, std::span<Term const> env);

  std::vector<VarIndex> variables_of(Term const& t);
  std::vector<VarIndex> variables_of(Identity const& id);

  //! f(x1, ..., xk) for the symbol f of arity k.
  Term generic_term(Signature const& sig, SymbolId f);

  //! Left-associated product of the variables in word (1-based indices).
  Term word_to_term(std::span<VarIndex const> word, SymbolId mult);

  //! In-order leaf sequence of a term whose inner nodes are all the given
  //! binary symbol.
  std::vector<VarIndex> term_to_word(Term const& t);

}  // namespace hypervar
