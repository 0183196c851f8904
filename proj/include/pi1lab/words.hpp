// Free group on generators g2, g3, ... in syllable (run-length) normal form.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pi1lab {

/// First generator index; there is no g0 or g1.
inline constexpr int kFirstGenerator = 2;

/// A single letter g_n^{+1} or g_n^{-1}.
struct Letter {
  int generator;
  int sign;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

struct Syllable {
  int generator;
  std::int64_t exponent;  // never 0 inside a reduced word

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Reduced word: adjacent syllables have distinct generators and no syllable
/// has exponent 0. The empty word is the identity.
class Word {
 public:
  Word() = default;

  static Word generator(int n, std::int64_t exponent = 1);
  /// Reduces an arbitrary syllable list (merging and cancelling).
  static Word from_syllables(std::span<const Syllable> syllables);
  /// Parses "g2 g3^-1 g2^4" or "1". Throws std::invalid_argument.
  static Word parse(std::string_view text);

  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool is_identity() const { return syllables_.empty(); }
  /// Total number of letters, i.e. the sum of |exponent|.
  std::int64_t letter_length() const;
  /// Expands into individual letters.
  std::vector<Letter> letters() const;
  /// "g2 g3^-1 g2^4"; the identity renders as "1".
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  friend Word reduce(std::span<const Letter> raw);
  friend Word multiply(const Word& u, const Word& v);

  void push(const Syllable& s);

  std::vector<Syllable> syllables_;
};

/// Stack-based free reduction. Throws std::invalid_argument on a generator
/// index below 2 or a sign other than +-1.
Word reduce(std::span<const Letter> raw);
Word multiply(const Word& u, const Word& v);
Word invert(const Word& u);

}  // namespace pi1lab
