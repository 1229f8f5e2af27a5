#include "cantor/cubeset.hpp"

#include <algorithm>
#include <bit>

namespace cantor {

namespace {

constexpr std::uint64_t kIntraMask[6] = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0f0f0f0f0f0f0f0fULL,
    0x00ff00ff00ff00ffULL, 0x0000ffff0000ffffULL, 0x00000000ffffffffULL,
};

// Permutes the 64 bit positions of w by XOR-ing indices with low6 (< 64).
std::uint64_t xor_permute_word(std::uint64_t w, unsigned low6) {
  for (unsigned d = 0; d < 6; ++d) {
    if (low6 & (1u << d)) {
      unsigned sh = 1u << d;
      w = ((w & kIntraMask[d]) << sh) | ((w >> sh) & kIntraMask[d]);
    }
  }
  return w;
}

std::size_t words_for(unsigned resolution) {
  return resolution >= 6 ? (std::size_t(1) << (resolution - 6)) : 1;
}

void check_resolution(unsigned resolution) {
  if (resolution < 1 || resolution > CubeSet::kMaxResolution)
    throw ResolutionError("resolution out of range [1, " +
                          std::to_string(CubeSet::kMaxResolution) +
                          "]: " + std::to_string(resolution));
}

}  // namespace

SignSeq::SignSeq(std::vector<std::int8_t> signs) : s_(std::move(signs)) {
  for (auto v : s_)
    if (v != 1 && v != -1) throw ParameterError("sign sequence entries must be +1 or -1");
}

SignSeq SignSeq::parse(const std::string& text) {
  std::vector<std::int8_t> s;
  s.reserve(text.size());
  for (char c : text) {
    if (c == '+')
      s.push_back(1);
    else if (c == '-')
      s.push_back(-1);
    else
      throw ParameterError("sign sequence must use only '+' and '-': '" + text + "'");
  }
  return SignSeq(std::move(s));
}

SignSeq SignSeq::of_atom(std::uint64_t index, unsigned len) {
  std::vector<std::int8_t> s(len);
  for (unsigned b = 0; b < len; ++b) s[b] = ((index >> b) & 1) ? 1 : -1;
  return SignSeq(std::move(s));
}

void SignSeq::push_back(int sign) {
  if (sign != 1 && sign != -1) throw ParameterError("sign must be +1 or -1");
  s_.push_back(static_cast<std::int8_t>(sign));
}

std::uint64_t SignSeq::atom_bits() const {
  std::uint64_t bits = 0;
  for (std::size_t b = 0; b < s_.size(); ++b)
    if (s_[b] > 0) bits |= std::uint64_t(1) << b;
  return bits;
}

std::string SignSeq::str() const {
  std::string out;
  out.reserve(s_.size());
  for (auto v : s_) out.push_back(v > 0 ? '+' : '-');
  return out;
}

CubeSet::CubeSet(unsigned resolution) : resolution_(resolution) {
  check_resolution(resolution);
  words_.assign(words_for(resolution), 0);
}

CubeSet CubeSet::full(unsigned resolution) {
  CubeSet s(resolution);
  std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t(0));
  s.trim_tail();
  return s;
}

void CubeSet::trim_tail() {
  if (resolution_ < 6) {
    words_[0] &= (std::uint64_t(1) << (std::uint64_t(1) << resolution_)) - 1;
  }
}

CubeSet CubeSet::cylinder(const SignSeq& s, unsigned resolution) {
  check_resolution(resolution);
  if (s.size() > resolution)
    throw ResolutionError("cylinder prefix longer than resolution: " +
                          std::to_string(s.size()) + " > " + std::to_string(resolution));
  CubeSet out(resolution);
  const std::uint64_t bits = s.atom_bits();
  const unsigned len = static_cast<unsigned>(s.size());
  if (len >= 6) {
    // One fixed word pattern, repeated at stride 2^(len-6) in word space.
    const std::uint64_t word_bits = bits >> 6;
    const std::uint64_t word_stride = std::uint64_t(1) << (len - 6);
    const std::uint64_t word_pattern = std::uint64_t(1) << (bits & 63);
    for (std::uint64_t w = word_bits; w < out.words_.size(); w += word_stride)
      out.words_[w] = word_pattern;
  } else {
    std::uint64_t pattern = 0;
    for (unsigned a = 0; a < 64; ++a)
      if ((a & ((1u << len) - 1)) == bits) pattern |= std::uint64_t(1) << a;
    std::fill(out.words_.begin(), out.words_.end(), pattern);
    out.trim_tail();
  }
  return out;
}

void CubeSet::set(std::uint64_t atom, bool value) {
  if (value)
    words_[atom >> 6] |= std::uint64_t(1) << (atom & 63);
  else
    words_[atom >> 6] &= ~(std::uint64_t(1) << (atom & 63));
}

std::uint64_t CubeSet::popcount() const {
  std::uint64_t n = 0;
  for (auto w : words_) n += static_cast<std::uint64_t>(std::popcount(w));
  return n;
}

bool CubeSet::is_empty() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

bool CubeSet::is_full() const { return popcount() == atom_count(); }

CubeSet CubeSet::refined(unsigned new_resolution) const {
  if (new_resolution < resolution_)
    throw ResolutionError("refine cannot lower the resolution");
  if (new_resolution == resolution_) return *this;
  check_resolution(new_resolution);
  CubeSet out(new_resolution);
  std::uint64_t base = words_[0];
  if (resolution_ < 6) {
    // Replicate the low 2^N bits across the word first.
    for (unsigned width = resolution_; width < 6; ++width)
      base |= base << (std::uint64_t(1) << width);
  }
  if (new_resolution < 6) {
    out.words_[0] = base;
    out.trim_tail();
    return out;
  }
  const std::size_t src_words = resolution_ >= 6 ? words_.size() : 1;
  for (std::size_t w = 0; w < out.words_.size(); ++w)
    out.words_[w] = resolution_ >= 6 ? words_[w & (src_words - 1)] : base;
  return out;
}

CubeSet CubeSet::complement() const {
  CubeSet out(resolution_);
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] = ~words_[w];
  out.trim_tail();
  return out;
}

CubeSet operator|(const CubeSet& a, const CubeSet& b) {
  unsigned n = std::max(a.resolution_, b.resolution_);
  CubeSet x = a.refined(n), y = b.refined(n);
  for (std::size_t w = 0; w < x.words_.size(); ++w) x.words_[w] |= y.words_[w];
  return x;
}

CubeSet operator&(const CubeSet& a, const CubeSet& b) {
  unsigned n = std::max(a.resolution_, b.resolution_);
  CubeSet x = a.refined(n), y = b.refined(n);
  for (std::size_t w = 0; w < x.words_.size(); ++w) x.words_[w] &= y.words_[w];
  return x;
}

CubeSet operator^(const CubeSet& a, const CubeSet& b) {
  unsigned n = std::max(a.resolution_, b.resolution_);
  CubeSet x = a.refined(n), y = b.refined(n);
  for (std::size_t w = 0; w < x.words_.size(); ++w) x.words_[w] ^= y.words_[w];
  return x;
}

CubeSet operator-(const CubeSet& a, const CubeSet& b) {
  unsigned n = std::max(a.resolution_, b.resolution_);
  CubeSet x = a.refined(n), y = b.refined(n);
  for (std::size_t w = 0; w < x.words_.size(); ++w) x.words_[w] &= ~y.words_[w];
  return x;
}

bool CubeSet::intersects(const CubeSet& other) const {
  unsigned n = std::max(resolution_, other.resolution_);
  CubeSet x = refined(n), y = other.refined(n);
  for (std::size_t w = 0; w < x.words_.size(); ++w)
    if (x.words_[w] & y.words_[w]) return true;
  return false;
}

bool CubeSet::subset_of(const CubeSet& other) const {
  unsigned n = std::max(resolution_, other.resolution_);
  CubeSet x = refined(n), y = other.refined(n);
  for (std::size_t w = 0; w < x.words_.size(); ++w)
    if (x.words_[w] & ~y.words_[w]) return false;
  return true;
}

bool operator==(const CubeSet& a, const CubeSet& b) {
  unsigned n = std::max(a.resolution_, b.resolution_);
  CubeSet x = a.refined(n), y = b.refined(n);
  return x.words_ == y.words_;
}

Dyadic CubeSet::lambda() const { return Dyadic(Int(popcount()), resolution_); }

std::int64_t CubeSet::phi_count(unsigned r) const {
  if (r < 1) throw ParameterError("coordinate index must be >= 1");
  if (r > resolution_) return 0;
  const unsigned b = r - 1;
  std::int64_t plus = 0;
  if (b < 6) {
    const std::uint64_t pattern = ~kIntraMask[b];  // bits where coord r is +1
    for (auto w : words_) plus += std::popcount(w & pattern);
  } else {
    const std::size_t block = std::size_t(1) << (b - 6);
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (w & block) plus += std::popcount(words_[w]);
  }
  return 2 * plus - static_cast<std::int64_t>(popcount());
}

Dyadic CubeSet::phi(unsigned r) const { return Dyadic(Int(phi_count(r)), resolution_); }

Dyadic CubeSet::psi(unsigned level) const {
  if (level > resolution_)
    throw ResolutionError("psi level exceeds resolution");
  LevelStats st = tabulate(*this, level, /*with_imbalance=*/false);
  const std::int64_t per_cyl = std::int64_t(1) << (resolution_ - level);
  Int total = 0;
  for (auto c : st.count) total += std::min(c, per_cyl - c);
  return Dyadic(total, resolution_);
}

CubeSet CubeSet::flip(unsigned lo, unsigned hi) const {
  if (!(lo < hi)) throw ParameterError("flip requires lo < hi");
  if (hi > resolution_) throw ResolutionError("flip range exceeds resolution");
  const std::uint64_t xm = ((std::uint64_t(1) << hi) - 1) ^ ((std::uint64_t(1) << lo) - 1);
  const unsigned low6 = static_cast<unsigned>(xm & 63);
  const std::uint64_t high = xm >> 6;
  CubeSet out(resolution_);
  for (std::size_t w = 0; w < words_.size(); ++w)
    out.words_[w] = xor_permute_word(words_[w ^ high], low6);
  out.trim_tail();
  return out;
}

std::uint64_t CubeSet::count_in_cylinder(const SignSeq& s) const {
  if (s.size() > resolution_) throw ResolutionError("cylinder prefix longer than resolution");
  const std::uint64_t mask = (std::uint64_t(1) << s.size()) - 1;
  const std::uint64_t want = s.atom_bits();
  std::uint64_t n = 0;
  for_each_atom([&](std::uint64_t a) {
    if ((a & mask) == want) ++n;
  });
  return n;
}

unsigned CubeSet::canonical_resolution() const {
  CubeSet cur = *this;
  while (cur.resolution_ > 1) {
    // Representable one level down iff atoms pair up: bit(a) == bit(a ^ top).
    const unsigned n = cur.resolution_;
    CubeSet folded = cur.flip(n - 1, n);
    if (!(folded == cur)) break;
    CubeSet down(n - 1);
    for (std::size_t w = 0; w < down.words_.size(); ++w) down.words_[w] = cur.words_[w];
    if (n <= 6) {
      down.words_[0] = cur.words_[0] & ((std::uint64_t(1) << (std::uint64_t(1) << (n - 1))) - 1);
    }
    cur = down;
  }
  return cur.resolution_;
}

std::string CubeSet::encode() const {
  static const char* digits = "0123456789abcdef";
  const std::uint64_t atoms = atom_count();
  const std::uint64_t ndigits = atoms >= 4 ? atoms / 4 : 1;
  std::string out = std::to_string(resolution_) + ":";
  out.reserve(out.size() + ndigits);
  for (std::uint64_t j = 0; j < ndigits; ++j) {
    unsigned v = static_cast<unsigned>((words_[(4 * j) >> 6] >> ((4 * j) & 63)) & 0xF);
    if (atoms < 4) v &= (1u << atoms) - 1;
    out.push_back(digits[v]);
  }
  return out;
}

std::string CubeSet::canonical_encode() const {
  unsigned n = canonical_resolution();
  if (n == resolution_) return encode();
  CubeSet down(n);
  for (std::size_t w = 0; w < down.words_.size(); ++w) down.words_[w] = words_[w];
  if (n < 6) down.words_[0] &= (std::uint64_t(1) << (std::uint64_t(1) << n)) - 1;
  return down.encode();
}

CubeSet CubeSet::decode(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw ParameterError("cubeset encoding lacks ':'");
  unsigned resolution = 0;
  try {
    resolution = static_cast<unsigned>(std::stoul(text.substr(0, colon)));
  } catch (const std::exception&) {
    throw ParameterError("cubeset encoding has a malformed resolution");
  }
  check_resolution(resolution);
  CubeSet out(resolution);
  const std::uint64_t atoms = out.atom_count();
  const std::uint64_t ndigits = atoms >= 4 ? atoms / 4 : 1;
  const std::string hex = text.substr(colon + 1);
  if (hex.size() != ndigits)
    throw ParameterError("cubeset encoding has wrong digit count");
  for (std::uint64_t j = 0; j < ndigits; ++j) {
    char c = hex[j];
    unsigned v;
    if (c >= '0' && c <= '9')
      v = static_cast<unsigned>(c - '0');
    else if (c >= 'a' && c <= 'f')
      v = static_cast<unsigned>(c - 'a') + 10;
    else
      throw ParameterError("cubeset encoding has a non-hex digit");
    out.words_[(4 * j) >> 6] |= std::uint64_t(v) << ((4 * j) & 63);
  }
  out.trim_tail();
  return out;
}

LevelStats tabulate(const CubeSet& set, unsigned m, bool with_imbalance) {
  if (m > set.resolution()) throw ResolutionError("tabulation level exceeds resolution");
  LevelStats st;
  st.m = m;
  st.resolution = set.resolution();
  const std::uint64_t cyls = std::uint64_t(1) << m;
  const unsigned depth = set.resolution() - m;
  st.count.assign(cyls, 0);
  if (with_imbalance && depth > 0) st.imbalance.assign(cyls * depth, 0);
  const std::uint64_t mask = cyls - 1;
  set.for_each_atom([&](std::uint64_t a) {
    const std::uint64_t s = a & mask;
    ++st.count[s];
    if (with_imbalance && depth > 0) {
      std::int64_t* row = &st.imbalance[s * depth];
      std::uint64_t rest = a >> m;
      for (unsigned j = 0; j < depth; ++j) {
        row[j] += (rest & 1) ? 1 : -1;
        rest >>= 1;
      }
    }
  });
  return st;
}

}  // namespace cantor
