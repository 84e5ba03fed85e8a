#include "hypervar/green_rees.hpp"

#include <bit>

#include "hypervar/error.hpp"

namespace hypervar {

  namespace {
    std::uint64_t letter_bit(VarIndex k) {
      if (k == 0 || k > 64) {
        throw InvalidArgument("free band letters must be x1..x64");
      }
      return std::uint64_t(1) << (k - 1);
    }

    std::uint64_t content_of(std::span<VarIndex const> word) {
      std::uint64_t c = 0;
      for (VarIndex k : word) {
        c |= letter_bit(k);
      }
      return c;
    }

    // Length of the longest prefix missing one letter of the content; the
    // letter at that position completes the content.
    std::size_t prefix_cut(std::span<VarIndex const> word, std::uint64_t content) {
      std::uint64_t seen = 0;
      for (std::size_t i = 0; i < word.size(); ++i) {
        seen |= letter_bit(word[i]);
        if (seen == content) {
          return i;
        }
      }
      return word.size();
    }

    std::size_t suffix_cut(std::span<VarIndex const> word, std::uint64_t content) {
      std::uint64_t seen = 0;
      for (std::size_t i = word.size(); i-- > 0;) {
        seen |= letter_bit(word[i]);
        if (seen == content) {
          return i;
        }
      }
      return 0;
    }
  }  // namespace

  bool operator==(GreenReesSignature const& a,
                  GreenReesSignature const& b) noexcept {
    auto const* p = a._node.get();
    auto const* q = b._node.get();
    if (p == q) {
      return true;
    }
    if (p->content != q->content || p->prefix_pivot != q->prefix_pivot
        || p->suffix_pivot != q->suffix_pivot) {
      return false;
    }
    if (p->prefix == nullptr || q->prefix == nullptr) {
      return p->prefix == q->prefix;
    }
    return GreenReesSignature(p->prefix) == GreenReesSignature(q->prefix)
           && GreenReesSignature(p->suffix) == GreenReesSignature(q->suffix);
  }

  GreenReesSignature gr_signature(std::span<VarIndex const> word) {
    using Node = GreenReesSignature::Node;
    if (word.empty()) {
      throw InvalidArgument("gr_signature of the empty word");
    }
    std::uint64_t c = content_of(word);
    if (std::popcount(c) == 1) {
      return GreenReesSignature(
          std::make_shared<Node>(Node{c, nullptr, word[0], word[0], nullptr}));
    }
    std::size_t p = prefix_cut(word, c);
    std::size_t s = suffix_cut(word, c);
    auto prefix   = gr_signature(word.subspan(0, p));
    auto suffix   = gr_signature(word.subspan(s + 1));
    return GreenReesSignature(std::make_shared<Node>(
        Node{c, prefix._node, word[p], word[s], suffix._node}));
  }

  bool free_band_equal(std::span<VarIndex const> u, std::span<VarIndex const> v) {
    return gr_signature(u) == gr_signature(v);
  }

  std::size_t
  GreenReesInterner::KeyHash::operator()(Key const& k) const noexcept {
    std::size_t h = std::hash<std::uint64_t>()(k.content);
    for (std::size_t v : {std::size_t(k.prefix),
                          std::size_t(k.prefix_pivot),
                          std::size_t(k.suffix_pivot),
                          std::size_t(k.suffix)}) {
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

  std::uint32_t GreenReesInterner::intern(Key const& k) {
    auto [it, inserted] = _ids.try_emplace(k, std::uint32_t(_keys.size()));
    if (inserted) {
      _keys.push_back(k);
    }
    return it->second;
  }

  std::uint32_t GreenReesInterner::id_of(std::span<VarIndex const> word) {
    if (word.empty()) {
      throw InvalidArgument("gr_signature of the empty word");
    }
    std::string memo_key(word.size(), '\0');
    for (std::size_t i = 0; i < word.size(); ++i) {
      letter_bit(word[i]);
      memo_key[i] = static_cast<char>(word[i]);
    }
    if (auto it = _memo.find(memo_key); it != _memo.end()) {
      return it->second;
    }
    std::uint64_t c = content_of(word);
    std::uint32_t id;
    if (std::popcount(c) == 1) {
      id = intern({c, 0, word[0], word[0], 0});
    } else {
      std::size_t   p      = prefix_cut(word, c);
      std::size_t   s      = suffix_cut(word, c);
      std::uint32_t prefix = id_of(word.subspan(0, p));
      std::uint32_t suffix = id_of(word.subspan(s + 1));
      id                   = intern({c, prefix, word[p], word[s], suffix});
    }
    _memo.emplace(std::move(memo_key), id);
    return id;
  }

}  // namespace hypervar
