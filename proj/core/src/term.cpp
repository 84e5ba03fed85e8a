#include "hypervar/term.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>
#include <unordered_set>

#include "hypervar/error.hpp"

namespace hypervar {

  ////////////////////////////////////////////////////////////////////////
  // Signature
  ////////////////////////////////////////////////////////////////////////

  Signature::Signature(std::vector<OperationSymbol> symbols)
      : _symbols(std::move(symbols)) {
    if (_symbols.empty()) {
      throw InvalidArgument("a signature needs at least one symbol");
    }
    std::unordered_set<std::string> seen;
    for (auto const& s : _symbols) {
      if (s.name.empty()) {
        throw InvalidArgument("empty operation symbol name");
      }
      if (!seen.insert(s.name).second) {
        throw InvalidArgument("duplicate operation symbol '" + s.name + "'");
      }
    }
  }

  std::optional<SymbolId> Signature::find(std::string_view name) const {
    for (SymbolId f = 0; f < _symbols.size(); ++f) {
      if (_symbols[f].name == name) {
        return f;
      }
    }
    return std::nullopt;
  }

  std::uint32_t Signature::max_arity() const noexcept {
    std::uint32_t m = 0;
    for (auto const& s : _symbols) {
      m = std::max(m, s.arity);
    }
    return m;
  }

  ////////////////////////////////////////////////////////////////////////
  // Term
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::size_t mix(std::size_t seed, std::size_t v) {
      return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
    }
  }  // namespace

  Term Term::variable(VarIndex index) {
    if (index == 0) {
      throw InvalidArgument("variable indices start at 1");
    }
    return Term(std::make_shared<Node const>(
        Node{kVariable, index, {}, 1, 0, mix(0x51ed, index), index}));
  }

  Term Term::apply(SymbolId symbol, std::vector<Term> args) {
    std::size_t size = 1, depth = 0, hash = mix(0xa11, symbol);
    VarIndex    mv = 0;
    for (auto const& a : args) {
      size += a.size();
      depth = std::max(depth, a.depth() + 1);
      hash  = mix(hash, a.hash());
      mv    = std::max(mv, a.max_var());
    }
    return Term(std::make_shared<Node const>(
        Node{symbol, 0, std::move(args), size, depth, hash, mv}));
  }

  bool operator==(Term const& a, Term const& b) noexcept {
    if (a._node == b._node) {
      return true;
    }
    if (a.hash() != b.hash() || a.size() != b.size()
        || a._node->symbol != b._node->symbol || a._node->var != b._node->var) {
      return false;
    }
    return std::equal(a.args().begin(),
                      a.args().end(),
                      b.args().begin(),
                      b.args().end());
  }

  std::strong_ordering operator<=>(Term const& a, Term const& b) {
    if (a._node == b._node) {
      return std::strong_ordering::equal;
    }
    if (auto c = a.size() <=> b.size(); c != 0) {
      return c;
    }
    if (a.is_variable() != b.is_variable()) {
      return a.is_variable() ? std::strong_ordering::less
                             : std::strong_ordering::greater;
    }
    if (a.is_variable()) {
      return a.var_index() <=> b.var_index();
    }
    if (auto c = a.symbol() <=> b.symbol(); c != 0) {
      return c;
    }
    for (std::size_t i = 0; i < a.args().size() && i < b.args().size(); ++i) {
      if (auto c = a.args()[i] <=> b.args()[i]; c != 0) {
        return c;
      }
    }
    return a.args().size() <=> b.args().size();
  }

  void check_term(Term const& t, Signature const& sig) {
    if (t.is_variable()) {
      return;
    }
    if (t.symbol() >= sig.size()) {
      throw InvalidArgument("term uses a symbol outside the signature");
    }
    if (t.args().size() != sig.arity(t.symbol())) {
      throw InvalidArgument("arity mismatch for '" + sig.name(t.symbol())
                            + "'");
    }
    for (auto const& a : t.args()) {
      check_term(a, sig);
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Parsing
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // x, y, z are x1, x2, x3; in words the remaining letters a..w continue
    // the numbering at x4.
    std::optional<VarIndex> letter_variable(char c) {
      switch (c) {
        case 'x':
          return 1;
        case 'y':
          return 2;
        case 'z':
          return 3;
        default:
          if (c >= 'a' && c <= 'w') {
            return VarIndex(c - 'a') + 4;
          }
          return std::nullopt;
      }
    }

    std::optional<char> variable_letter(VarIndex k) {
      if (k >= 1 && k <= 3) {
        return "xyz"[k - 1];
      }
      if (k >= 4 && k <= 26) {
        return char('a' + (k - 4));
      }
      return std::nullopt;
    }

    std::optional<VarIndex> variable_from_name(std::string_view s) {
      if (s.size() == 1) {
        if (s[0] == 'x' || s[0] == 'y' || s[0] == 'z') {
          return letter_variable(s[0]);
        }
        return std::nullopt;
      }
      if (s[0] != 'x'
          || !std::all_of(s.begin() + 1, s.end(), [](char c) {
               return std::isdigit(static_cast<unsigned char>(c));
             })) {
        return std::nullopt;
      }
      if (s.size() > 10) {
        return std::nullopt;
      }
      VarIndex k = static_cast<VarIndex>(std::stoul(std::string(s.substr(1))));
      if (k == 0) {
        return std::nullopt;
      }
      return k;
    }

    bool is_ident_start(char c) {
      return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }
    bool is_ident_char(char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }
    bool is_punct(char c) {
      return c == '(' || c == ')' || c == ',' || c == '=';
    }
    bool is_op_char(char c) {
      return !std::isspace(static_cast<unsigned char>(c)) && !is_punct(c)
             && !is_ident_char(c);
    }

    class Parser {
     public:
      Parser(std::string_view text, Signature const& sig)
          : _text(text), _sig(sig), _sugar(sig.is_single_binary()) {}

      Term term() {
        Term t = primary();
        if (_sugar) {
          while (starts_primary()) {
            Term rhs = primary();
            t        = Term::apply(0, {std::move(t), std::move(rhs)});
          }
        }
        return t;
      }

      void expect_end() {
        skip_ws();
        if (_pos != _text.size()) {
          fail("unexpected '" + std::string(_text.substr(_pos, 1)) + "'");
        }
      }

      bool at(char c) {
        skip_ws();
        return _pos < _text.size() && _text[_pos] == c;
      }

      void expect(char c) {
        if (!at(c)) {
          fail(std::string("expected '") + c + "'");
        }
        ++_pos;
      }

     private:
      [[noreturn]] void fail(std::string const& msg) const {
        throw ParseError(msg + " at offset " + std::to_string(_pos) + " in \""
                         + std::string(_text) + "\"");
      }

      void skip_ws() {
        while (_pos < _text.size()
               && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }

      bool starts_primary() {
        skip_ws();
        if (_pos >= _text.size()) {
          return false;
        }
        char c = _text[_pos];
        return c == '(' || is_ident_start(c) || is_op_char(c);
      }

      std::string_view name_token() {
        skip_ws();
        std::size_t start = _pos;
        if (_pos < _text.size() && is_ident_start(_text[_pos])) {
          while (_pos < _text.size() && is_ident_char(_text[_pos])) {
            ++_pos;
          }
        } else {
          while (_pos < _text.size() && is_op_char(_text[_pos])) {
            ++_pos;
          }
        }
        return _text.substr(start, _pos - start);
      }

      Term application(SymbolId f) {
        std::vector<Term> args;
        expect('(');
        if (!at(')')) {
          args.push_back(term());
          while (at(',')) {
            ++_pos;
            args.push_back(term());
          }
        }
        expect(')');
        if (args.size() != _sig.arity(f)) {
          fail("arity mismatch for '" + _sig.name(f) + "': expected "
               + std::to_string(_sig.arity(f)) + " arguments, got "
               + std::to_string(args.size()));
        }
        return Term::apply(f, std::move(args));
      }

      Term primary() {
        skip_ws();
        if (_pos >= _text.size()) {
          fail(_text.empty() || _pos == 0 ? "empty term" : "unexpected end");
        }
        if (_text[_pos] == '(') {
          if (!_sugar) {
            fail("parenthesised grouping needs a single binary symbol");
          }
          ++_pos;
          Term t = term();
          expect(')');
          return t;
        }
        if (is_punct(_text[_pos])) {
          fail("unexpected '" + std::string(1, _text[_pos]) + "'");
        }
        std::string_view name = name_token();
        auto             f    = _sig.find(name);
        if (f) {
          if (at('(')) {
            return application(*f);
          }
          if (_sig.arity(*f) == 0) {
            return Term::apply(*f, {});
          }
          fail("symbol '" + std::string(name) + "' needs arguments");
        }
        if (auto v = variable_from_name(name)) {
          return Term::variable(*v);
        }
        bool letters = !name.empty()
                       && std::all_of(name.begin(), name.end(), [](char c) {
                            return letter_variable(c).has_value();
                          });
        if (letters) {
          if (!_sugar) {
            fail("word '" + std::string(name)
                 + "' needs a signature with a single binary symbol");
          }
          std::vector<VarIndex> word;
          for (char c : name) {
            word.push_back(*letter_variable(c));
          }
          return word_to_term(word, 0);
        }
        fail("unknown symbol '" + std::string(name) + "'");
      }

      std::string_view _text;
      Signature const& _sig;
      bool             _sugar;
      std::size_t      _pos = 0;
    };

  }  // namespace

  Term parse_term(std::string_view text, Signature const& sig) {
    Parser p(text, sig);
    Term   t = p.term();
    p.expect_end();
    return t;
  }

  Identity parse_identity(std::string_view text, Signature const& sig) {
    auto eq = text.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("identity needs '=': \"" + std::string(text) + "\"");
    }
    if (text.find('=', eq + 1) != std::string_view::npos) {
      throw ParseError("identity has more than one '=': \"" + std::string(text)
                       + "\"");
    }
    return Identity{parse_term(text.substr(0, eq), sig),
                    parse_term(text.substr(eq + 1), sig)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Printing
  ////////////////////////////////////////////////////////////////////////

  std::string variable_name(VarIndex k) {
    if (k >= 1 && k <= 3) {
      return std::string(1, "xyz"[k - 1]);
    }
    return "x" + std::to_string(k);
  }

  namespace {
    void print_function(std::ostream& os, Term const& t, Signature const& sig) {
      if (t.is_variable()) {
        os << variable_name(t.var_index());
        return;
      }
      os << sig.name(t.symbol());
      if (t.args().empty()) {
        return;
      }
      os << '(';
      for (std::size_t i = 0; i < t.args().size(); ++i) {
        if (i != 0) {
          os << ", ";
        }
        print_function(os, t.args()[i], sig);
      }
      os << ')';
    }
  }  // namespace

  std::string print_term(Term const& t, Signature const& sig, bool flatten) {
    if (flatten && sig.is_single_binary()) {
      std::string word;
      bool        ok = true;
      for (VarIndex k : term_to_word(t)) {
        auto c = variable_letter(k);
        if (!c) {
          ok = false;
          break;
        }
        word.push_back(*c);
      }
      // a lone variable beyond z has no single-token spelling
      if (ok && (word.size() > 1 || (t.is_variable() && t.var_index() <= 3))) {
        return word;
      }
    }
    std::ostringstream os;
    print_function(os, t, sig);
    return os.str();
  }

  std::string print_identity(Identity const& id,
                             Signature const& sig,
                             bool             flatten) {
    return print_term(id.lhs, sig, flatten) + " = "
           + print_term(id.rhs, sig, flatten);
  }

  ////////////////////////////////////////////////////////////////////////
  // Substitution and friends
  ////////////////////////////////////////////////////////////////////////

  Term substitute(Term const& t, Substitution const& env) {
    if (t.is_variable()) {
      auto it = env.find(t.var_index());
      if (it == env.end()) {
        throw InvalidArgument("substitution has no image for variable "
                              + variable_name(t.var_index()));
      }
      return it->second;
    }
    std::vector<Term> args;
    args.reserve(t.args().size());
    for (auto const& a : t.args()) {
      args.push_back(substitute(a, env));
    }
    return Term::apply(t.symbol(), std::move(args));
  }

  Term substitute(Term const& t, std::span<Term const> env) {
    if (t.is_variable()) {
      if (t.var_index() > env.size()) {
        throw InvalidArgument("substitution has no image for variable "
                              + variable_name(t.var_index()));
      }
      return env[t.var_index() - 1];
    }
    if (t.max_var() == 0) {
      return t;
    }
    std::vector<Term> args;
    args.reserve(t.args().size());
    for (auto const& a : t.args()) {
      args.push_back(substitute(a, env));
    }
    return Term::apply(t.symbol(), std::move(args));
  }

  namespace {
    void collect_vars(Term const& t, std::set<VarIndex>& out) {
      if (t.is_variable()) {
        out.insert(t.var_index());
        return;
      }
      for (auto const& a : t.args()) {
        collect_vars(a, out);
      }
    }
  }  // namespace

  std::vector<VarIndex> variables_of(Term const& t) {
    std::set<VarIndex> s;
    collect_vars(t, s);
    return {s.begin(), s.end()};
  }

  std::vector<VarIndex> variables_of(Identity const& id) {
    std::set<VarIndex> s;
    collect_vars(id.lhs, s);
    collect_vars(id.rhs, s);
    return {s.begin(), s.end()};
  }

  Term generic_term(Signature const& sig, SymbolId f) {
    std::vector<Term> args;
    for (VarIndex i = 1; i <= sig.arity(f); ++i) {
      args.push_back(Term::variable(i));
    }
    return Term::apply(f, std::move(args));
  }

  Term word_to_term(std::span<VarIndex const> word, SymbolId mult) {
    if (word.empty()) {
      throw InvalidArgument("empty word");
    }
    Term t = Term::variable(word[0]);
    for (std::size_t i = 1; i < word.size(); ++i) {
      t = Term::apply(mult, {std::move(t), Term::variable(word[i])});
    }
    return t;
  }

  std::vector<VarIndex> term_to_word(Term const& t) {
    std::vector<VarIndex>            out;
    std::function<void(Term const&)> walk = [&](Term const& s) {
      if (s.is_variable()) {
        out.push_back(s.var_index());
        return;
      }
      for (auto const& a : s.args()) {
        walk(a);
      }
    };
    walk(t);
    return out;
  }

}  // namespace hypervar
