#include "hypervar/free_algebra.hpp"

#include <unordered_map>

#include "hypervar/error.hpp"
#include "hypervar/green_rees.hpp"

namespace hypervar {

  std::string to_string(Exactness e) {
    return e == Exactness::Exact ? "exact" : "small-model-quotient";
  }

  FreeAlgebra free_band(std::size_t n, Signature const& sig) {
    if (!sig.is_single_binary()) {
      throw InvalidArgument("free_band needs a single binary symbol");
    }
    if (n < 1 || n > kMaxFreeBandRank) {
      throw LimitError("free band rank " + std::to_string(n)
                       + " is outside 1.." + std::to_string(kMaxFreeBandRank));
    }
    GreenReesInterner                          gr;
    std::vector<Word>                          words;
    std::unordered_map<std::uint32_t, Element> element_of;

    auto offer = [&](Word w) {
      auto id = gr.id_of(w);
      if (element_of.try_emplace(id, Element(words.size())).second) {
        words.push_back(std::move(w));
      }
    };
    for (VarIndex k = 1; k <= n; ++k) {
      offer({k});
    }
    // Breadth-first right extension visits words in length-lex order, and
    // least words are prefix closed, so each element is first reached by its
    // least word.
    for (std::size_t e = 0; e < words.size(); ++e) {
      for (VarIndex k = 1; k <= n; ++k) {
        Word w = words[e];
        w.push_back(k);
        offer(std::move(w));
      }
    }

    std::size_t const    size = words.size();
    std::vector<Element> table(size * size);
    Word                 buf;
    for (std::size_t a = 0; a < size; ++a) {
      for (std::size_t b = 0; b < size; ++b) {
        buf = words[a];
        buf.insert(buf.end(), words[b].begin(), words[b].end());
        table[a * size + b] = element_of.at(gr.id_of(buf));
      }
    }

    std::vector<Element> gens;
    for (Element g = 0; g < n; ++g) {
      gens.push_back(g);
    }
    std::vector<Term> repr;
    for (auto const& w : words) {
      repr.push_back(word_to_term(w, 0));
    }
    return FreeAlgebra{FiniteAlgebra(sig, size, {std::move(table)}),
                       std::move(gens),
                       std::move(repr),
                       Exactness::Exact};
  }

  FreeAlgebra free_band(std::size_t n) {
    return free_band(n, Signature({{"*", 2}}));
  }

}  // namespace hypervar
