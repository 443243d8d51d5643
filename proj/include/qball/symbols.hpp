#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace qball {

// Which coordinate algebra a symbol belongs to.
enum class AlgTag : uint8_t {
  mat,  // quantum matrix ball generators z_a^alpha, (z_a^alpha)^*
  sl    // quantum special unitary group generators t_{i,j}
};

// One generator symbol, packed into 16 bits.
// mat symbols: row = upper index alpha, col = lower index a.
// sl symbols:  row = i, col = j of t_{i,j}. Starred t symbols are only a
// surface form (parser/printer); reduced sl polynomials are star-expanded.
struct Gen {
  uint16_t code = 0;

  static Gen z(int a, int alpha, bool starred = false) {
    return pack(AlgTag::mat, starred, alpha, a);
  }
  static Gen t(int i, int j, bool starred = false) {
    return pack(AlgTag::sl, starred, i, j);
  }

  AlgTag tag() const { return static_cast<AlgTag>((code >> 15) & 1); }
  bool starred() const { return (code >> 14) & 1; }
  int row() const { return (code >> 7) & 0x7f; }
  int col() const { return code & 0x7f; }

  Gen with_star(bool s) const {
    Gen g = *this;
    g.code = static_cast<uint16_t>((code & ~(1u << 14)) | (uint16_t(s ? 1 : 0) << 14));
    return g;
  }

  // Total generator order: plain < starred, then (row, col) lexicographic.
  uint16_t order_key() const { return code & 0x7fff; }

  friend bool operator==(Gen a, Gen b) { return a.code == b.code; }
  friend bool operator!=(Gen a, Gen b) { return a.code != b.code; }
  friend bool operator<(Gen a, Gen b) { return a.order_key() < b.order_key(); }

  std::string str() const {
    if (tag() == AlgTag::mat) {
      return std::string(starred() ? "z*" : "z") + "[" + std::to_string(col()) + "," +
             std::to_string(row()) + "]";
    }
    return std::string(starred() ? "t*" : "t") + "[" + std::to_string(row()) + "," +
           std::to_string(col()) + "]";
  }

 private:
  static Gen pack(AlgTag tag, bool starred, int row, int col) {
    Gen g;
    g.code = static_cast<uint16_t>((uint16_t(tag) << 15) | (uint16_t(starred ? 1 : 0) << 14) |
                                   ((row & 0x7f) << 7) | (col & 0x7f));
    return g;
  }
};

using Word = std::vector<Gen>;

// Pairs (i < j) with letter i starred and letter j plain. Every mixed-relation
// rewrite removes exactly one such pair.
inline int star_inversions(const Word& w) {
  int stars = 0, inv = 0;
  for (const Gen& g : w) {
    if (g.starred()) {
      ++stars;
    } else {
      inv += stars;
    }
  }
  return inv;
}

// Misordering relative to the normal shape: plain letters descending,
// starred letters ascending (within their own class).
inline int class_misorder(const Word& w) {
  int m = 0;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j) {
      if (!w[i].starred() && !w[j].starred() && w[i].order_key() < w[j].order_key()) ++m;
      if (w[i].starred() && w[j].starred() && w[i].order_key() > w[j].order_key()) ++m;
    }
  return m;
}

// -1 / 0 / +1 comparison of letter multisets, by descending-sorted key
// sequences compared lexicographically. Compatible with multiset union, so it
// is stable under embedding a subword into a fixed context.
inline int multiset_cmp(const Word& a, const Word& b) {
  std::vector<uint16_t> ka, kb;
  ka.reserve(a.size());
  kb.reserve(b.size());
  for (const Gen& g : a) ka.push_back(g.order_key());
  for (const Gen& g : b) kb.push_back(g.order_key());
  std::sort(ka.rbegin(), ka.rend());
  std::sort(kb.rbegin(), kb.rend());
  if (ka < kb) return -1;
  if (kb < ka) return 1;
  return 0;
}

// The certified monomial order: a well-founded total order on words such that
// every rewrite rule strictly decreases it (checked in tests). Compared
// lexicographically: word length, star inversions, letter multiset, class
// misorder, then plain lexicographic tiebreak.
inline int word_order_cmp(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  int sa = star_inversions(a), sb = star_inversions(b);
  if (sa != sb) return sa < sb ? -1 : 1;
  if (int c = multiset_cmp(a, b); c != 0) return c;
  int ma = class_misorder(a), mb = class_misorder(b);
  if (ma != mb) return ma < mb ? -1 : 1;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i].order_key() != b[i].order_key())
      return a[i].order_key() < b[i].order_key() ? -1 : 1;
  return 0;
}

inline bool word_order_less(const Word& a, const Word& b) { return word_order_cmp(a, b) < 0; }

struct WordOrderGreater {
  bool operator()(const Word& a, const Word& b) const { return word_order_cmp(a, b) > 0; }
};

// Cheap deterministic key order for polynomial term maps (not the monomial
// order; canonical printing re-sorts by word_order_cmp).
struct WordKeyLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i].code != b[i].code) return a[i].code < b[i].code;
    return false;
  }
};

inline std::string word_str(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += " ";
    s += w[i].str();
  }
  return s;
}

}  // namespace qball
