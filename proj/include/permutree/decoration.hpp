#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace permutree {

/// Vertex kind of a permutree: how many parent and child slots it carries.
enum class Kind : unsigned char {
  None,    // one parent, one child          (letter 'n')
  Down,    // one parent, two children       (letter 'd')
  Up,      // two parents, one child         (letter 'u')
  UpDown,  // two parents, two children      (letter 'b')
};

inline constexpr bool two_parents(Kind k) {
  return k == Kind::Up || k == Kind::UpDown;
}

inline constexpr bool two_children(Kind k) {
  return k == Kind::Down || k == Kind::UpDown;
}

inline constexpr char kind_letter(Kind k) {
  switch (k) {
    case Kind::None:   return 'n';
    case Kind::Down:   return 'd';
    case Kind::Up:     return 'u';
    case Kind::UpDown: return 'b';
  }
  return '?';
}

inline std::optional<Kind> kind_from_letter(char c) {
  switch (c) {
    case 'n': case 'N': return Kind::None;
    case 'd': case 'D': return Kind::Down;
    case 'u': case 'U': return Kind::Up;
    case 'b': case 'B': return Kind::UpDown;
    default: return std::nullopt;
  }
}

struct NormalizedDecoration;

// Decoration word delta over {none, down, up, updown}, 1-indexed access.
// The first and last letter never affect the tree structure, so most
// operations require the normalized form where both are None.
class Decoration {
 public:
  Decoration() = default;

  explicit Decoration(std::vector<Kind> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("decoration: empty word");
  }

  // Parses a word over {n,d,u,b} (case-insensitive) without normalizing.
  static Decoration parse(std::string_view word) {
    if (word.empty()) throw std::invalid_argument("decoration: empty word");
    std::vector<Kind> entries;
    entries.reserve(word.size());
    for (std::size_t p = 0; p < word.size(); ++p) {
      auto k = kind_from_letter(word[p]);
      if (!k) {
        throw std::invalid_argument("decoration: invalid letter '" +
                                    std::string(1, word[p]) + "' at position " +
                                    std::to_string(p + 1));
      }
      entries.push_back(*k);
    }
    return Decoration(std::move(entries));
  }

  // Forces the endpoint letters to None and reports whether anything changed.
  static NormalizedDecoration normalize(const Decoration& raw);
  static NormalizedDecoration normalize(std::string_view raw);

  int size() const { return static_cast<int>(entries_.size()); }

  Kind at(int i) const {
    if (i < 1 || i > size()) throw std::out_of_range("decoration index");
    return entries_[static_cast<std::size_t>(i - 1)];
  }

  bool is_normalized() const {
    return entries_.front() == Kind::None && entries_.back() == Kind::None;
  }

  std::string word() const {
    std::string w;
    w.reserve(entries_.size());
    for (Kind k : entries_) w.push_back(kind_letter(k));
    return w;
  }

  bool operator==(const Decoration&) const = default;

 private:
  std::vector<Kind> entries_;
};

struct NormalizedDecoration {
  Decoration decoration;
  bool changed = false;
};

inline NormalizedDecoration Decoration::normalize(const Decoration& raw) {
  std::vector<Kind> entries;
  entries.reserve(static_cast<std::size_t>(raw.size()));
  for (int i = 1; i <= raw.size(); ++i) entries.push_back(raw.at(i));
  bool changed = false;
  if (entries.front() != Kind::None) {
    entries.front() = Kind::None;
    changed = true;
  }
  if (entries.back() != Kind::None) {
    entries.back() = Kind::None;
    changed = true;
  }
  return {Decoration(std::move(entries)), changed};
}

inline NormalizedDecoration Decoration::normalize(std::string_view raw) {
  return normalize(parse(raw));
}

// Uniform-kind decoration of length n, already normalized.
inline Decoration uniform_decoration(Kind k, int n) {
  if (n < 1) throw std::invalid_argument("decoration: n must be positive");
  std::vector<Kind> e(static_cast<std::size_t>(n), k);
  e.front() = Kind::None;
  e.back() = Kind::None;
  return Decoration(std::move(e));
}

inline void require_normalized(const Decoration& delta) {
  if (!delta.is_normalized())
    throw std::invalid_argument("decoration must be normalized (endpoints none)");
}

}  // namespace permutree
