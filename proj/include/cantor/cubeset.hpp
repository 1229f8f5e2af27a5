#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cantor/errors.hpp"
#include "cantor/rational.hpp"

namespace cantor {

/// Finite sign sequence over {-1,+1}; the prefix that defines a cylinder.
class SignSeq {
 public:
  SignSeq() = default;
  explicit SignSeq(std::vector<std::int8_t> signs);
  static SignSeq parse(const std::string& text);  // e.g. "+-+"
  /// Signs of the first `len` coordinates of atom `index` (bit b -> coord b+1).
  static SignSeq of_atom(std::uint64_t index, unsigned len);

  std::size_t size() const { return s_.size(); }
  bool empty() const { return s_.empty(); }
  int operator[](std::size_t i) const { return s_[i]; }
  void push_back(int sign);

  /// Index of the atom whose first size() coordinates match (low bits).
  std::uint64_t atom_bits() const;

  std::string str() const;
  friend bool operator==(const SignSeq&, const SignSeq&) = default;

 private:
  std::vector<std::int8_t> s_;
};

/// A clopen subset of the Cantor cube, exact at resolution N: one bit per
/// atom of the level-N coordinate algebra.  Bit b of an atom index encodes
/// coordinate b+1, with bit value 1 meaning sign +1.
///
/// Values are immutable in spirit: every operation returns a new set.  Set
/// operations on different resolutions refine both sides to the maximum.
class CubeSet {
 public:
  static constexpr unsigned kMaxResolution = 30;

  explicit CubeSet(unsigned resolution);  // empty set
  static CubeSet empty(unsigned resolution) { return CubeSet(resolution); }
  static CubeSet full(unsigned resolution);
  /// All atoms whose first |s| coordinates match s.  Requires |s| <= resolution.
  static CubeSet cylinder(const SignSeq& s, unsigned resolution);

  unsigned resolution() const { return resolution_; }
  std::uint64_t atom_count() const { return std::uint64_t(1) << resolution_; }

  bool test(std::uint64_t atom) const {
    return (words_[atom >> 6] >> (atom & 63)) & 1;
  }
  void set(std::uint64_t atom, bool value = true);

  std::uint64_t popcount() const;
  bool is_empty() const;
  bool is_full() const;

  CubeSet refined(unsigned new_resolution) const;
  CubeSet complement() const;
  friend CubeSet operator|(const CubeSet& a, const CubeSet& b);
  friend CubeSet operator&(const CubeSet& a, const CubeSet& b);
  friend CubeSet operator^(const CubeSet& a, const CubeSet& b);
  friend CubeSet operator-(const CubeSet& a, const CubeSet& b);

  bool intersects(const CubeSet& other) const;
  bool subset_of(const CubeSet& other) const;
  /// Semantic equality: equal after refining to a common resolution.
  friend bool operator==(const CubeSet& a, const CubeSet& b);

  Dyadic lambda() const;

  /// Signed imbalance of coordinate r over the set, times 2^N.
  /// Zero for r > resolution: every finite-resolution set splits evenly in
  /// deeper coordinates.
  std::int64_t phi_count(unsigned r) const;
  Dyadic phi(unsigned r) const;

  /// lambda-distance to the nearest union of level-n cylinders.
  Dyadic psi(unsigned level) const;

  /// Image under negating coordinates in (lo, hi].  Involution, lambda-preserving.
  CubeSet flip(unsigned lo, unsigned hi) const;

  std::uint64_t count_in_cylinder(const SignSeq& s) const;

  /// Smallest resolution at which this set is representable.
  unsigned canonical_resolution() const;

  template <class F>
  void for_each_atom(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        unsigned b = static_cast<unsigned>(__builtin_ctzll(bits));
        f(std::uint64_t(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

  /// "N:hex" with hex digit j encoding atoms 4j..4j+3 (atom 4j+b <-> bit b).
  std::string encode() const;
  std::string canonical_encode() const;  // encoded at canonical_resolution()
  static CubeSet decode(const std::string& text);

 private:
  void trim_tail();

  unsigned resolution_;
  std::vector<std::uint64_t> words_;
};

/// Per-cylinder tallies of a set at level m: for every s in {-1,+1}^m the
/// number of set atoms in <s>, and optionally the signed imbalance of each
/// coordinate r in (m, N] over the set restricted to <s>.
struct LevelStats {
  unsigned m = 0;
  unsigned resolution = 0;
  std::vector<std::int64_t> count;      // [2^m]
  std::vector<std::int64_t> imbalance;  // [2^m * (N - m)], row-major by cylinder

  std::int64_t imb(std::uint64_t cyl, unsigned r) const {
    return imbalance[cyl * (resolution - m) + (r - m - 1)];
  }
};

LevelStats tabulate(const CubeSet& set, unsigned m, bool with_imbalance = true);

}  // namespace cantor
