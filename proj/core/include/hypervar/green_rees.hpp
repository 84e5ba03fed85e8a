#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "hypervar/term.hpp"

namespace hypervar {

  //! Letters are variable indices (x = 1, y = 2, ...), at most 64 distinct.
  using Word = std::vector<VarIndex>;

  //! The recursive invariant deciding equality in free bands. For a word w
  //! with content C (|C| >= 2): the longest prefix whose content misses
  //! exactly one letter of C, the letter completing the content after it, and
  //! dually the longest such suffix with the letter before it. Two words are
  //! equal in every band iff their signatures are structurally equal.
  class GreenReesSignature {
   public:
    //! Bitmask of letters; bit (k - 1) stands for x_k.
    std::uint64_t content() const noexcept {
      return _node->content;
    }
    bool is_letter() const noexcept {
      return _node->prefix == nullptr;
    }
    //! Only meaningful for a single-letter signature.
    VarIndex letter() const noexcept {
      return _node->prefix_pivot;
    }
    GreenReesSignature prefix() const {
      return GreenReesSignature(_node->prefix);
    }
    VarIndex prefix_pivot() const noexcept {
      return _node->prefix_pivot;
    }
    VarIndex suffix_pivot() const noexcept {
      return _node->suffix_pivot;
    }
    GreenReesSignature suffix() const {
      return GreenReesSignature(_node->suffix);
    }

    friend bool operator==(GreenReesSignature const& a,
                           GreenReesSignature const& b) noexcept;

    friend GreenReesSignature gr_signature(std::span<VarIndex const> word);

   private:
    struct Node {
      std::uint64_t         content;
      std::shared_ptr<Node> prefix;
      VarIndex              prefix_pivot;
      VarIndex              suffix_pivot;
      std::shared_ptr<Node> suffix;
    };

    explicit GreenReesSignature(std::shared_ptr<Node> node)
        : _node(std::move(node)) {}

    std::shared_ptr<Node> _node;
  };

  //! Throws InvalidArgument on an empty word or a letter outside 1..64.
  GreenReesSignature gr_signature(std::span<VarIndex const> word);

  //! Equality of two words in the free band.
  bool free_band_equal(std::span<VarIndex const> u, std::span<VarIndex const> v);

  //! Hash-consed signatures: equal signatures get equal ids. Used to build
  //! free bands, where the same subwords recur many times.
  class GreenReesInterner {
   public:
    std::uint32_t id_of(std::span<VarIndex const> word);
    std::size_t   size() const noexcept {
      return _keys.size();
    }

   private:
    struct Key {
      std::uint64_t content;
      std::uint32_t prefix;
      VarIndex      prefix_pivot;
      VarIndex      suffix_pivot;
      std::uint32_t suffix;
      bool operator==(Key const&) const = default;
    };
    struct KeyHash {
      std::size_t operator()(Key const& k) const noexcept;
    };

    std::uint32_t intern(Key const& k);

    std::vector<Key>                                 _keys;
    std::unordered_map<Key, std::uint32_t, KeyHash>  _ids;
    std::unordered_map<std::string, std::uint32_t>   _memo;
  };

}  // namespace hypervar
