#include "hypervar/models.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "hypervar/error.hpp"

namespace hypervar {

  namespace {

    constexpr Element kUndef = ~Element(0);

    // Postfix form of a term: non-negative entries push x_(entry+1), negative
    // entries -(f+1) apply symbol f to the top arity(f) stack values.
    struct Program {
      std::vector<std::int64_t> code;
    };

    void compile(Term const& t, Program& p) {
      if (t.is_variable()) {
        p.code.push_back(static_cast<std::int64_t>(t.var_index()) - 1);
        return;
      }
      for (auto const& a : t.args()) {
        compile(a, p);
      }
      p.code.push_back(-static_cast<std::int64_t>(t.symbol()) - 1);
    }

    struct CompiledIdentity {
      Program               lhs, rhs;
      std::vector<VarIndex> vars;
      VarIndex              top;
    };

    class ModelSearch {
     public:
      ModelSearch(std::span<Identity const> ids,
                  Signature const&          sig,
                  std::size_t               n)
          : _sig(sig), _n(n), _tables(sig.size()) {
        for (auto const& id : ids) {
          check_term(id.lhs, sig);
          check_term(id.rhs, sig);
          CompiledIdentity c;
          compile(id.lhs, c.lhs);
          compile(id.rhs, c.rhs);
          c.vars = variables_of(id);
          c.top  = std::max(id.lhs.max_var(), id.rhs.max_var());
          _ids.push_back(std::move(c));
        }
        for (SymbolId f = 0; f < sig.size(); ++f) {
          std::size_t cells = 1;
          for (std::size_t i = 0; i < sig.arity(f); ++i) {
            cells *= n;
          }
          _tables[f].assign(cells, kUndef);
          for (std::size_t c = 0; c < cells; ++c) {
            _cells.push_back({f, c});
          }
        }
      }

      std::vector<FiniteAlgebra> run() {
        search(0, 0);
        return {_found.begin(), _found.end()};
      }

     private:
      struct Cell {
        SymbolId    symbol;
        std::size_t index;
      };

      Element eval(Program const& p, std::vector<Element> const& values) {
        _stack.clear();
        for (std::int64_t op : p.code) {
          if (op >= 0) {
            _stack.push_back(values[op]);
            continue;
          }
          SymbolId          f   = static_cast<SymbolId>(-op - 1);
          std::size_t const k   = _sig.arity(f);
          std::size_t       idx = 0;
          for (std::size_t i = _stack.size() - k; i < _stack.size(); ++i) {
            idx = idx * _n + _stack[i];
          }
          _stack.resize(_stack.size() - k);
          Element v = _tables[f][idx];
          if (v == kUndef) {
            return kUndef;
          }
          _stack.push_back(v);
        }
        return _stack.back();
      }

      // False if some fully evaluable instance of an identity fails.
      bool consistent() {
        for (auto const& c : _ids) {
          std::vector<Element> values(c.top, 0);
          std::vector<Element> odo(c.vars.size(), 0);
          while (true) {
            for (std::size_t i = 0; i < c.vars.size(); ++i) {
              values[c.vars[i] - 1] = odo[i];
            }
            Element l = eval(c.lhs, values);
            if (l != kUndef) {
              Element r = eval(c.rhs, values);
              if (r != kUndef && l != r) {
                return false;
              }
            }
            std::size_t i = c.vars.size();
            while (i > 0 && ++odo[i - 1] == _n) {
              odo[i - 1] = 0;
              --i;
            }
            if (i == 0) {
              break;
            }
          }
        }
        return true;
      }

      // mentioned: elements 0..mentioned-1 occur in assigned cells (as an
      // argument or a value). Unmentioned elements are interchangeable, so
      // only the least of them is tried as a value.
      void search(std::size_t cell, std::size_t mentioned) {
        if (cell == _cells.size()) {
          std::vector<std::vector<Element>> tables(_tables.begin(),
                                                   _tables.end());
          _found.insert(canonical_form(FiniteAlgebra(_sig, _n, std::move(tables))));
          return;
        }
        auto [f, idx]           = _cells[cell];
        std::size_t const k     = _sig.arity(f);
        std::size_t       rest  = idx;
        std::size_t       m     = mentioned;
        for (std::size_t i = 0; i < k; ++i) {
          m = std::max<std::size_t>(m, rest % _n + 1);
          rest /= _n;
        }
        std::size_t const top = std::min(m + 1, _n);
        for (Element v = 0; v < top; ++v) {
          _tables[f][idx] = v;
          if (consistent()) {
            search(cell + 1, std::max<std::size_t>(m, v + 1));
          }
        }
        _tables[f][idx] = kUndef;
      }

      struct TableLess {
        bool operator()(FiniteAlgebra const& a, FiniteAlgebra const& b) const {
          return a.tables() < b.tables();
        }
      };

      Signature const&                       _sig;
      std::size_t                            _n;
      std::vector<CompiledIdentity>          _ids;
      std::vector<std::vector<Element>>      _tables;
      std::vector<Cell>                      _cells;
      std::vector<Element>                   _stack;
      std::set<FiniteAlgebra, TableLess>     _found;
    };

  }  // namespace

  FiniteAlgebra canonical_form(FiniteAlgebra const& a) {
    std::size_t const n = a.size();
    if (n > kMaxModelSize + 2) {
      throw LimitError("canonical_form is limited to small carriers");
    }
    auto const&          sig = a.signature();
    std::vector<Element> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<Element>> best;
    std::vector<std::vector<Element>> cur(sig.size());
    for (SymbolId f = 0; f < sig.size(); ++f) {
      cur[f].resize(a.table(f).size());
    }
    do {
      // perm maps old labels to new labels
      for (SymbolId f = 0; f < sig.size(); ++f) {
        std::size_t const k = sig.arity(f);
        auto const&       t = a.table(f);
        for (std::size_t idx = 0; idx < t.size(); ++idx) {
          std::size_t rest = idx, nidx = 0, mult = 1;
          for (std::size_t i = 0; i < k; ++i) {
            nidx += perm[rest % n] * mult;
            mult *= n;
            rest /= n;
          }
          cur[f][nidx] = perm[t[idx]];
        }
      }
      if (best.empty() || cur < best) {
        best = cur;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return FiniteAlgebra(sig, n, std::move(best));
  }

  std::vector<FiniteAlgebra> enumerate_models_of_size(std::span<Identity const> ids,
                                                      Signature const&          sig,
                                                      std::size_t               n) {
    if (n == 0) {
      return {};
    }
    if (n > kMaxModelSize) {
      throw LimitError("model size " + std::to_string(n) + " exceeds the guard "
                       + std::to_string(kMaxModelSize));
    }
    return ModelSearch(ids, sig, n).run();
  }

  std::vector<FiniteAlgebra> enumerate_models(std::span<Identity const> ids,
                                              Signature const&          sig,
                                              std::size_t               max_size) {
    if (max_size > kMaxModelSize) {
      throw LimitError("max model size " + std::to_string(max_size)
                       + " exceeds the guard " + std::to_string(kMaxModelSize));
    }
    std::vector<FiniteAlgebra> out;
    for (std::size_t n = 1; n <= max_size; ++n) {
      auto part = enumerate_models_of_size(ids, sig, n);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }

}  // namespace hypervar
