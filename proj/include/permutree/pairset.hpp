#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace permutree {

// Set of pairs (i,j) with 1 <= i < j <= n, stored as one bit row per i.
// This is the carrier for inversion sets, bracket sets and cubic sets.
// Canonical order between two sets of the same size is lexicographic on
// the pair sequence (1,2),(1,3),...,(1,n),(2,3),...,(n-1,n).
class PairSet {
 public:
  PairSet() : n_(1) {}

  explicit PairSet(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("pair set: n must be positive");
    if (n > 62) throw std::invalid_argument("pair set: n too large (max 62)");
    rows_.assign(static_cast<std::size_t>(n) + 1, 0);
  }

  static PairSet full(int n) {
    PairSet s(n);
    for (int i = 1; i < n; ++i) s.rows_[static_cast<std::size_t>(i)] = above_mask(i, n);
    return s;
  }

  int vertex_count() const { return n_; }

  bool contains(int i, int j) const {
    check_pair(i, j);
    return (rows_[static_cast<std::size_t>(i)] >> j) & 1u;
  }

  void insert(int i, int j) {
    check_pair(i, j);
    rows_[static_cast<std::size_t>(i)] |= (std::uint64_t{1} << j);
  }

  void erase(int i, int j) {
    check_pair(i, j);
    rows_[static_cast<std::size_t>(i)] &= ~(std::uint64_t{1} << j);
  }

  // Bit mask of {j : (i,j) in set}; bit j corresponds to vertex j.
  std::uint64_t row(int i) const { return rows_[static_cast<std::size_t>(i)]; }

  void set_row(int i, std::uint64_t bits) {
    if ((bits & ~above_mask(i, n_)) != 0)
      throw std::invalid_argument("pair set: row bits out of range");
    rows_[static_cast<std::size_t>(i)] = bits;
  }

  static std::uint64_t above_mask(int i, int n) {
    std::uint64_t all = (n >= 63) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (n + 1)) - 1);
    std::uint64_t upto_i = (std::uint64_t{1} << (i + 1)) - 1;
    return all & ~upto_i;  // bits i+1 .. n
  }

  int count() const {
    int c = 0;
    for (auto r : rows_) c += std::popcount(r);
    return c;
  }

  bool empty() const { return count() == 0; }

  bool subset_of(const PairSet& other) const {
    require_same_n(other);
    for (int i = 1; i <= n_; ++i)
      if (rows_[static_cast<std::size_t>(i)] & ~other.rows_[static_cast<std::size_t>(i)]) return false;
    return true;
  }

  PairSet intersect(const PairSet& other) const {
    require_same_n(other);
    PairSet out(n_);
    for (int i = 1; i <= n_; ++i)
      out.rows_[static_cast<std::size_t>(i)] =
          rows_[static_cast<std::size_t>(i)] & other.rows_[static_cast<std::size_t>(i)];
    return out;
  }

  PairSet unite(const PairSet& other) const {
    require_same_n(other);
    PairSet out(n_);
    for (int i = 1; i <= n_; ++i)
      out.rows_[static_cast<std::size_t>(i)] =
          rows_[static_cast<std::size_t>(i)] | other.rows_[static_cast<std::size_t>(i)];
    return out;
  }

  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i < n_; ++i) {
      std::uint64_t r = rows_[static_cast<std::size_t>(i)];
      while (r) {
        int j = std::countr_zero(r);
        out.emplace_back(i, j);
        r &= r - 1;
      }
    }
    return out;
  }

  // Component B_i as a sorted vertex list.
  std::vector<int> component(int i) const {
    std::vector<int> out;
    std::uint64_t r = rows_[static_cast<std::size_t>(i)];
    while (r) {
      out.push_back(std::countr_zero(r));
      r &= r - 1;
    }
    return out;
  }

  bool operator==(const PairSet&) const = default;

  // Lexicographic on the canonical pair sequence; only defined for equal n.
  bool canonical_less(const PairSet& other) const {
    require_same_n(other);
    for (int i = 1; i < n_; ++i) {
      std::uint64_t a = rows_[static_cast<std::size_t>(i)];
      std::uint64_t b = other.rows_[static_cast<std::size_t>(i)];
      if (a != b) {
        int j = std::countr_zero(a ^ b);
        return ((a >> j) & 1u) == 0;
      }
    }
    return false;
  }

  // "2-4,3-4" with pairs ascending; empty set renders as "".
  std::string to_string() const {
    std::string out;
    for (auto [i, j] : pairs()) {
      if (!out.empty()) out.push_back(',');
      out += std::to_string(i);
      out.push_back('-');
      out += std::to_string(j);
    }
    return out;
  }

  // Parses the grammar  pairs := pair ("," pair)* ,  pair := int "-" int.
  // An empty string is the empty set.
  static PairSet parse(int n, std::string_view text) {
    PairSet out(n);
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t comma = text.find(',', pos);
      std::string_view tok = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
      std::size_t dash = tok.find('-');
      if (dash == std::string_view::npos)
        throw std::invalid_argument("pair list: expected i-j in '" + std::string(tok) + "'");
      int i = parse_int(tok.substr(0, dash));
      int j = parse_int(tok.substr(dash + 1));
      if (i < 1 || j <= i || j > n)
        throw std::invalid_argument("pair list: pair " + std::to_string(i) + "-" +
                                    std::to_string(j) + " out of range for n=" + std::to_string(n));
      out.insert(i, j);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return out;
  }

 private:
  static int parse_int(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("pair list: missing integer");
    int v = 0;
    for (char c : s) {
      if (c < '0' || c > '9') throw std::invalid_argument("pair list: bad integer '" + std::string(s) + "'");
      v = v * 10 + (c - '0');
      if (v > 1000000) throw std::invalid_argument("pair list: integer too large");
    }
    return v;
  }

  void check_pair(int i, int j) const {
    if (i < 1 || j <= i || j > n_) throw std::out_of_range("pair set: pair out of range");
  }

  void require_same_n(const PairSet& other) const {
    if (n_ != other.n_) throw std::invalid_argument("pair set: size mismatch");
  }

  int n_;
  std::vector<std::uint64_t> rows_;
};

struct CanonicalLess {
  bool operator()(const PairSet& a, const PairSet& b) const { return a.canonical_less(b); }
};

// Smallest transitive superset.  Restricted to i<j pairs this is plain
// reachability, computed Floyd-Warshall style on the bit rows.
inline PairSet transitive_closure(const PairSet& s) {
  int n = s.vertex_count();
  PairSet out = s;
  for (int k = 2; k < n; ++k) {
    for (int i = 1; i < k; ++i) {
      if (out.contains(i, k)) out.set_row(i, out.row(i) | out.row(k));
    }
  }
  return out;
}

}  // namespace permutree
