#include "hypervar/finite_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "hypervar/error.hpp"

namespace hypervar {

  namespace {
    std::size_t power(std::size_t base, std::size_t exp) {
      std::size_t r = 1;
      while (exp-- > 0) {
        r *= base;
      }
      return r;
    }

    std::size_t cell_index(std::size_t n, std::span<Element const> args) {
      std::size_t idx = 0;
      for (Element a : args) {
        idx = idx * n + a;
      }
      return idx;
    }
  }  // namespace

  FiniteAlgebra::FiniteAlgebra(Signature                         sig,
                               std::size_t                       size,
                               std::vector<std::vector<Element>> tables)
      : _sig(std::move(sig)), _size(size), _tables(std::move(tables)) {
    if (_size == 0) {
      throw InvalidArgument("a finite algebra needs at least one element");
    }
    if (_tables.size() != _sig.size()) {
      throw InvalidArgument("one table per operation symbol is required");
    }
    for (SymbolId f = 0; f < _sig.size(); ++f) {
      if (_tables[f].size() != power(_size, _sig.arity(f))) {
        throw InvalidArgument("table of '" + _sig.name(f)
                              + "' has the wrong number of entries");
      }
      for (Element e : _tables[f]) {
        if (e >= _size) {
          throw InvalidArgument("table of '" + _sig.name(f)
                                + "' leaves the carrier");
        }
      }
    }
  }

  Element FiniteAlgebra::apply(SymbolId f, std::span<Element const> args) const {
    return _tables[f][cell_index(_size, args)];
  }

  Element FiniteAlgebra::evaluate(Term const&              t,
                                  std::span<Element const> values) const {
    if (t.is_variable()) {
      if (t.var_index() > values.size()) {
        throw InvalidArgument("no value for variable "
                              + variable_name(t.var_index()));
      }
      return values[t.var_index() - 1];
    }
    auto const&  table = _tables[t.symbol()];
    std::size_t  idx   = 0;
    for (auto const& a : t.args()) {
      idx = idx * _size + evaluate(a, values);
    }
    return table[idx];
  }

  Element evaluate(FiniteAlgebra const& a, Term const& t, Assignment const& asg) {
    std::vector<Element> values(t.max_var(), 0);
    for (VarIndex v : variables_of(t)) {
      auto it = asg.find(v);
      if (it == asg.end()) {
        throw InvalidArgument("no value for variable " + variable_name(v));
      }
      if (it->second >= a.size()) {
        throw InvalidArgument("assigned value outside the carrier");
      }
      values[v - 1] = it->second;
    }
    return a.evaluate(t, values);
  }

  std::optional<Assignment> find_violation(FiniteAlgebra const& a,
                                           Identity const&      id,
                                           std::size_t          var_limit) {
    auto vars = variables_of(id);
    if (vars.size() > var_limit) {
      throw LimitError("identity has " + std::to_string(vars.size())
                       + " variables; the limit is "
                       + std::to_string(var_limit));
    }
    VarIndex             top = std::max(id.lhs.max_var(), id.rhs.max_var());
    std::vector<Element> values(top, 0);
    std::vector<Element> odo(vars.size(), 0);
    std::size_t const    n = a.size();
    while (true) {
      for (std::size_t i = 0; i < vars.size(); ++i) {
        values[vars[i] - 1] = odo[i];
      }
      if (a.evaluate(id.lhs, values) != a.evaluate(id.rhs, values)) {
        Assignment asg;
        for (std::size_t i = 0; i < vars.size(); ++i) {
          asg[vars[i]] = odo[i];
        }
        return asg;
      }
      std::size_t i = vars.size();
      while (i > 0 && ++odo[i - 1] == n) {
        odo[i - 1] = 0;
        --i;
      }
      if (i == 0) {
        return std::nullopt;
      }
    }
  }

  bool satisfies(FiniteAlgebra const& a,
                 Identity const&      id,
                 std::size_t          var_limit) {
    return !find_violation(a, id, var_limit).has_value();
  }

  bool satisfies_all(FiniteAlgebra const&      a,
                     std::span<Identity const> ids,
                     std::size_t               var_limit) {
    return std::all_of(ids.begin(), ids.end(), [&](Identity const& id) {
      return satisfies(a, id, var_limit);
    });
  }

  FiniteAlgebra derived_algebra(FiniteAlgebra const&     a,
                                Hypersubstitution const& sigma) {
    if (a.signature() != sigma.signature()) {
      throw InvalidArgument("derived_algebra: signatures differ");
    }
    auto const&                       sig = a.signature();
    std::size_t const                 n   = a.size();
    std::vector<std::vector<Element>> tables;
    for (SymbolId f = 0; f < sig.size(); ++f) {
      std::size_t const    k = sig.arity(f);
      std::vector<Element> table(power(n, k));
      std::vector<Element> args(k, 0);
      for (std::size_t idx = 0; idx < table.size(); ++idx) {
        std::size_t rest = idx;
        for (std::size_t i = k; i-- > 0;) {
          args[i] = static_cast<Element>(rest % n);
          rest /= n;
        }
        table[idx] = a.evaluate(sigma.image(f), args);
      }
      tables.push_back(std::move(table));
    }
    return FiniteAlgebra(sig, n, std::move(tables));
  }

  ////////////////////////////////////////////////////////////////////////
  // Isomorphism
  ////////////////////////////////////////////////////////////////////////

  namespace {

    std::vector<std::vector<std::size_t>> invariants(FiniteAlgebra const& a) {
      std::size_t const                     n = a.size();
      std::vector<std::vector<std::size_t>> inv(n);
      auto const&                           sig = a.signature();
      for (SymbolId f = 0; f < sig.size(); ++f) {
        std::size_t const        k = sig.arity(f);
        std::vector<std::size_t> hits(n, 0), fixed(n, 0);
        for (Element e : a.table(f)) {
          ++hits[e];
        }
        if (k >= 1) {
          for (Element e = 0; e < n; ++e) {
            std::vector<Element> diag(k, e);
            fixed[e] = a.apply(f, diag) == e;
          }
        }
        std::vector<std::size_t> left_units(n, 0);
        if (k == 2) {
          for (Element e = 0; e < n; ++e) {
            for (Element b = 0; b < n; ++b) {
              left_units[e] += a.apply(f, e, b) == b;
              left_units[e] += 2 * n * (a.apply(f, b, e) == b);
            }
          }
        }
        for (Element e = 0; e < n; ++e) {
          inv[e].push_back(hits[e]);
          inv[e].push_back(fixed[e]);
          inv[e].push_back(left_units[e]);
        }
      }
      return inv;
    }

    class IsoSearch {
     public:
      IsoSearch(FiniteAlgebra const& a, FiniteAlgebra const& b)
          : _a(a),
            _b(b),
            _n(a.size()),
            _map(_n, kUnset),
            _used(_n, false),
            _inv_a(invariants(a)),
            _inv_b(invariants(b)) {}

      std::optional<std::vector<Element>> run() {
        auto sorted_a = _inv_a, sorted_b = _inv_b;
        std::sort(sorted_a.begin(), sorted_a.end());
        std::sort(sorted_b.begin(), sorted_b.end());
        if (sorted_a != sorted_b) {
          return std::nullopt;
        }
        if (search(0)) {
          return _map;
        }
        return std::nullopt;
      }

     private:
      static constexpr Element kUnset = ~Element(0);

      bool consistent(Element upto) const {
        auto const& sig = _a.signature();
        for (SymbolId f = 0; f < sig.size(); ++f) {
          std::size_t const    k = sig.arity(f);
          std::vector<Element> args(k, 0), mapped(k, 0);
          std::size_t const    cells = _a.table(f).size();
          for (std::size_t idx = 0; idx < cells; ++idx) {
            std::size_t rest    = idx;
            bool        all_set = true, touches = (k == 0);
            for (std::size_t i = k; i-- > 0;) {
              args[i] = static_cast<Element>(rest % _n);
              rest /= _n;
              if (args[i] > upto) {
                all_set = false;
              }
              touches = touches || args[i] == upto;
            }
            if (!all_set || !touches) {
              continue;
            }
            for (std::size_t i = 0; i < k; ++i) {
              mapped[i] = _map[args[i]];
            }
            Element target = _b.apply(f, mapped);
            Element value  = _a.table(f)[idx];
            if (_map[value] != kUnset) {
              if (_map[value] != target) {
                return false;
              }
            } else if (_used[target]) {
              return false;
            }
          }
        }
        return true;
      }

      bool search(Element i) {
        if (i == _n) {
          return true;
        }
        for (Element t = 0; t < _n; ++t) {
          if (_used[t] || _inv_a[i] != _inv_b[t]) {
            continue;
          }
          _map[i]  = t;
          _used[t] = true;
          if (consistent(i) && search(i + 1)) {
            return true;
          }
          _map[i]  = kUnset;
          _used[t] = false;
        }
        return false;
      }

      FiniteAlgebra const&                  _a;
      FiniteAlgebra const&                  _b;
      std::size_t                           _n;
      std::vector<Element>                  _map;
      std::vector<bool>                     _used;
      std::vector<std::vector<std::size_t>> _inv_a;
      std::vector<std::vector<std::size_t>> _inv_b;
    };

  }  // namespace

  std::optional<std::vector<Element>> find_isomorphism(FiniteAlgebra const& a,
                                                       FiniteAlgebra const& b) {
    if (a.signature() != b.signature()) {
      throw InvalidArgument("find_isomorphism: signatures differ");
    }
    if (a.size() != b.size()) {
      return std::nullopt;
    }
    return IsoSearch(a, b).run();
  }

  bool are_isomorphic(FiniteAlgebra const& a, FiniteAlgebra const& b) {
    return find_isomorphism(a, b).has_value();
  }

  bool is_proper_derived_algebra(FiniteAlgebra const&     a,
                                 Hypersubstitution const& sigma) {
    return !are_isomorphic(a, derived_algebra(a, sigma));
  }

  ////////////////////////////////////////////////////////////////////////
  // Products and subalgebras
  ////////////////////////////////////////////////////////////////////////

  FiniteAlgebra direct_product(std::span<FiniteAlgebra const> factors,
                               std::size_t                    bound) {
    if (factors.empty()) {
      throw InvalidArgument("direct_product needs at least one factor");
    }
    auto const& sig  = factors[0].signature();
    std::size_t size = 1;
    for (auto const& f : factors) {
      if (f.signature() != sig) {
        throw InvalidArgument("direct_product: factor signatures differ");
      }
      if (size > bound / f.size()) {
        throw LimitError("direct product exceeds "
                         + std::to_string(bound) + " elements");
      }
      size *= f.size();
    }
    std::size_t cells = 0;
    for (SymbolId s = 0; s < sig.size(); ++s) {
      std::size_t c = 1;
      for (std::size_t i = 0; i < sig.arity(s); ++i) {
        if (c > bound * 10 / size) {
          throw LimitError("direct product tables are too large");
        }
        c *= size;
      }
      cells += c;
    }
    if (cells > bound * 10) {
      throw LimitError("direct product tables are too large");
    }

    std::size_t const m = factors.size();
    auto decode = [&](std::size_t e, std::vector<Element>& out) {
      for (std::size_t i = m; i-- > 0;) {
        out[i] = static_cast<Element>(e % factors[i].size());
        e /= factors[i].size();
      }
    };
    std::vector<std::vector<Element>> tables;
    for (SymbolId s = 0; s < sig.size(); ++s) {
      std::size_t const                 k = sig.arity(s);
      std::vector<Element>              table(power(size, k));
      std::vector<std::vector<Element>> coords(k, std::vector<Element>(m));
      std::vector<Element>              args(k);
      for (std::size_t idx = 0; idx < table.size(); ++idx) {
        std::size_t rest = idx;
        for (std::size_t i = k; i-- > 0;) {
          decode(rest % size, coords[i]);
          rest /= size;
        }
        std::size_t value = 0;
        for (std::size_t j = 0; j < m; ++j) {
          for (std::size_t i = 0; i < k; ++i) {
            args[i] = coords[i][j];
          }
          value = value * factors[j].size() + factors[j].apply(s, args);
        }
        table[idx] = static_cast<Element>(value);
      }
      tables.push_back(std::move(table));
    }
    return FiniteAlgebra(sig, size, std::move(tables));
  }

  namespace {

    struct TupleHash {
      std::size_t operator()(std::vector<Element> const& v) const noexcept {
        std::size_t h = v.size();
        for (Element e : v) {
          h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
      }
    };

    // Shared closure engine. Elements are coordinate tuples; op computes a
    // symbol componentwise.
    template <typename Op>
    Subalgebra close(Signature const&                         sig,
                     std::vector<std::vector<Element>> const& gens,
                     std::size_t                              width,
                     Op&&                                     op,
                     std::size_t                              bound) {
      std::vector<std::vector<Element>> elems;
      std::vector<Term>                 repr;
      std::unordered_map<std::vector<Element>, Element, TupleHash> index;

      auto offer = [&](std::vector<Element> tuple, Term t) -> Element {
        auto it = index.find(tuple);
        if (it != index.end()) {
          if (t < repr[it->second]) {
            repr[it->second] = std::move(t);
          }
          return it->second;
        }
        if (elems.size() >= bound) {
          throw LimitError("generated subalgebra exceeds "
                           + std::to_string(bound) + " elements");
        }
        Element id = static_cast<Element>(elems.size());
        index.emplace(tuple, id);
        elems.push_back(std::move(tuple));
        repr.push_back(std::move(t));
        return id;
      };

      std::vector<std::vector<Element>> no_args;
      for (SymbolId f = 0; f < sig.size(); ++f) {
        if (sig.arity(f) == 0) {
          offer(op(f, no_args), Term::apply(f, {}));
        }
      }
      std::vector<Element> gen_ids;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].size() != width) {
          throw InvalidArgument("generator tuple has the wrong length");
        }
        gen_ids.push_back(
            offer(gens[i], Term::variable(static_cast<VarIndex>(i + 1))));
      }
      if (elems.empty()) {
        throw InvalidArgument(
            "generated_subalgebra needs a generator or a nullary symbol");
      }

      std::size_t prev_end = 0;
      while (prev_end < elems.size()) {
        std::size_t const cur_end = elems.size();
        for (SymbolId f = 0; f < sig.size(); ++f) {
          std::size_t const k = sig.arity(f);
          if (k == 0) {
            continue;
          }
          std::vector<Element> odo(k, 0);
          std::vector<std::vector<Element>> args(k);
          while (true) {
            if (*std::max_element(odo.begin(), odo.end()) >= prev_end) {
              for (std::size_t i = 0; i < k; ++i) {
                args[i] = elems[odo[i]];
              }
              std::vector<Term> targs;
              for (std::size_t i = 0; i < k; ++i) {
                targs.push_back(repr[odo[i]]);
              }
              offer(op(f, args), Term::apply(f, std::move(targs)));
            }
            std::size_t i = k;
            while (i > 0 && ++odo[i - 1] == cur_end) {
              odo[i - 1] = 0;
              --i;
            }
            if (i == 0) {
              break;
            }
          }
        }
        prev_end = cur_end;
      }

      std::size_t const                 n = elems.size();
      std::vector<std::vector<Element>> tables;
      for (SymbolId f = 0; f < sig.size(); ++f) {
        std::size_t const                 k = sig.arity(f);
        std::vector<Element>              table(power(n, k));
        std::vector<std::vector<Element>> args(k);
        for (std::size_t idx = 0; idx < table.size(); ++idx) {
          std::size_t rest = idx;
          for (std::size_t i = k; i-- > 0;) {
            args[i] = elems[rest % n];
            rest /= n;
          }
          table[idx] = index.at(op(f, args));
        }
        tables.push_back(std::move(table));
      }
      return Subalgebra{FiniteAlgebra(sig, n, std::move(tables)),
                        std::move(gen_ids),
                        std::move(repr),
                        std::move(elems)};
    }

  }  // namespace

  Subalgebra generated_subalgebra(FiniteAlgebra const&     a,
                                  std::span<Element const> gens) {
    std::vector<std::vector<Element>> tuples;
    for (Element g : gens) {
      if (g >= a.size()) {
        throw InvalidArgument("generator outside the carrier");
      }
      tuples.push_back({g});
    }
    std::vector<Element> scratch;
    auto op = [&](SymbolId f, std::vector<std::vector<Element>> const& args) {
      scratch.resize(args.size());
      for (std::size_t i = 0; i < args.size(); ++i) {
        scratch[i] = args[i][0];
      }
      return std::vector<Element>{a.apply(f, scratch)};
    };
    return close(a.signature(), tuples, 1, op, a.size());
  }

  Subalgebra
  generated_subalgebra(std::span<FiniteAlgebra const>           factors,
                       std::vector<std::vector<Element>> const& gens,
                       std::size_t                              element_bound) {
    if (factors.empty()) {
      throw InvalidArgument("generated_subalgebra needs at least one factor");
    }
    auto const& sig = factors[0].signature();
    for (auto const& f : factors) {
      if (f.signature() != sig) {
        throw InvalidArgument("generated_subalgebra: factor signatures differ");
      }
    }
    std::size_t const    m = factors.size();
    std::vector<Element> scratch;
    auto op = [&](SymbolId f, std::vector<std::vector<Element>> const& args) {
      std::vector<Element> out(m);
      scratch.resize(args.size());
      for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t i = 0; i < args.size(); ++i) {
          scratch[i] = args[i][j];
        }
        out[j] = factors[j].apply(f, scratch);
      }
      return out;
    };
    return close(sig, gens, m, op, element_bound);
  }

  ////////////////////////////////////////////////////////////////////////
  // Text format
  ////////////////////////////////////////////////////////////////////////

  std::string print_model(FiniteAlgebra const& a) {
    std::ostringstream os;
    os << "size " << a.size() << '\n';
    auto const& sig = a.signature();
    for (SymbolId f = 0; f < sig.size(); ++f) {
      os << sig.name(f) << ':';
      for (Element e : a.table(f)) {
        os << ' ' << e;
      }
      os << '\n';
    }
    return os.str();
  }

  FiniteAlgebra parse_model(std::string_view                text,
                            std::optional<Signature> const& sig_in) {
    std::istringstream                  in{std::string(text)};
    std::string                         line;
    std::optional<std::size_t>          size;
    std::optional<Signature>            sig = sig_in;
    std::vector<std::string>            names;
    std::vector<std::vector<Element>>   rows;
    while (std::getline(in, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
      }
      std::istringstream ls(line);
      std::string        head;
      if (!(ls >> head)) {
        continue;
      }
      if (head == "size") {
        std::size_t n;
        if (size || !(ls >> n) || n == 0) {
          throw ParseError("bad or repeated 'size' line in model");
        }
        size = n;
      } else if (head == "signature") {
        std::vector<OperationSymbol> syms;
        std::string                  name;
        std::uint32_t                ar;
        while (ls >> name >> ar) {
          syms.push_back({name, ar});
        }
        sig = Signature(std::move(syms));
      } else {
        if (!size) {
          throw ParseError("model table before 'size' line");
        }
        std::string name = head;
        if (name.back() == ':') {
          name.pop_back();
        } else {
          std::string colon;
          if (!(ls >> colon) || colon != ":") {
            throw ParseError("expected 'name:' in model line \"" + line + "\"");
          }
        }
        std::vector<Element> row;
        long long            v;
        while (ls >> v) {
          if (v < 0) {
            throw ParseError("negative table entry in model");
          }
          row.push_back(static_cast<Element>(v));
        }
        if (!ls.eof()) {
          throw ParseError("non-numeric table entry in model line \"" + line
                           + "\"");
        }
        names.push_back(name);
        rows.push_back(std::move(row));
      }
    }
    if (!size) {
      throw ParseError("model has no 'size' line");
    }
    if (!sig) {
      std::vector<OperationSymbol> syms;
      for (std::size_t i = 0; i < names.size(); ++i) {
        std::uint32_t k = 0;
        std::size_t   c = 1;
        if (*size == 1 && rows[i].size() == 1) {
          throw ParseError("cannot infer the arity of '" + names[i]
                           + "' in a one-element model; add a signature line");
        }
        while (c < rows[i].size()) {
          c *= *size;
          ++k;
        }
        if (c != rows[i].size()) {
          throw ParseError("table of '" + names[i]
                           + "' is not a power of the size");
        }
        syms.push_back({names[i], k});
      }
      sig = Signature(std::move(syms));
    }
    std::vector<std::vector<Element>> tables(sig->size());
    std::vector<bool>                 seen(sig->size(), false);
    for (std::size_t i = 0; i < names.size(); ++i) {
      auto f = sig->find(names[i]);
      if (!f) {
        throw ParseError("model table for unknown symbol '" + names[i] + "'");
      }
      if (seen[*f]) {
        throw ParseError("symbol '" + names[i] + "' has two tables");
      }
      seen[*f]   = true;
      tables[*f] = std::move(rows[i]);
    }
    for (SymbolId f = 0; f < sig->size(); ++f) {
      if (!seen[f]) {
        throw ParseError("model has no table for '" + sig->name(f) + "'");
      }
    }
    try {
      return FiniteAlgebra(*sig, *size, std::move(tables));
    } catch (InvalidArgument const& e) {
      throw ParseError(e.what());
    }
  }

  std::string describe_model(FiniteAlgebra const& a) {
    auto const& sig = a.signature();
    if (!sig.is_single_binary() || a.size() < 2) {
      return a.size() == 1 ? "trivial" : "";
    }
    std::size_t const n     = a.size();
    bool              left  = true, right = true, comm = true, idem = true;
    for (Element p = 0; p < n; ++p) {
      for (Element q = 0; q < n; ++q) {
        Element v = a.apply(0, p, q);
        left      = left && v == p;
        right     = right && v == q;
        comm      = comm && v == a.apply(0, q, p);
      }
      idem = idem && a.apply(0, p, p) == p;
    }
    if (left) {
      return "left-zero";
    }
    if (right) {
      return "right-zero";
    }
    bool assoc = true;
    for (Element p = 0; p < n && assoc; ++p) {
      for (Element q = 0; q < n && assoc; ++q) {
        for (Element r = 0; r < n && assoc; ++r) {
          assoc = a.apply(0, a.apply(0, p, q), r)
                  == a.apply(0, p, a.apply(0, q, r));
        }
      }
    }
    if (comm && idem && assoc) {
      return "semilattice";
    }
    if (idem && assoc) {
      return "band";
    }
    return "";
  }

}  // namespace hypervar
