#include "pi1lab/words.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace pi1lab {

namespace {

void check_generator(int n) {
  if (n < kFirstGenerator) {
    throw std::invalid_argument("generator index must be ≥ 2, got " + std::to_string(n));
  }
}

}  // namespace

void Word::push(const Syllable& s) {
  if (s.exponent == 0) {
    return;
  }
  if (!syllables_.empty() && syllables_.back().generator == s.generator) {
    syllables_.back().exponent += s.exponent;
    if (syllables_.back().exponent == 0) {
      syllables_.pop_back();
    }
    return;
  }
  syllables_.push_back(s);
}

Word Word::generator(int n, std::int64_t exponent) {
  check_generator(n);
  Word w;
  w.push({n, exponent});
  return w;
}

Word Word::from_syllables(std::span<const Syllable> syllables) {
  Word w;
  for (const auto& s : syllables) {
    check_generator(s.generator);
    w.push(s);
  }
  return w;
}

Word Word::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string token;
  std::vector<Syllable> syllables;
  bool saw_identity = false;
  while (in >> token) {
    if (token == "1") {
      saw_identity = true;
      continue;
    }
    if (token.size() < 2 || token[0] != 'g' || !std::isdigit(static_cast<unsigned char>(token[1]))) {
      throw std::invalid_argument("malformed word letter '" + token + "'");
    }
    std::size_t pos = 1;
    while (pos < token.size() && std::isdigit(static_cast<unsigned char>(token[pos]))) {
      ++pos;
    }
    int gen = std::stoi(token.substr(1, pos - 1));
    std::int64_t exponent = 1;
    if (pos < token.size()) {
      if (token[pos] != '^' || pos + 1 == token.size()) {
        throw std::invalid_argument("malformed word letter '" + token + "'");
      }
      std::string exp = token.substr(pos + 1);
      char* end = nullptr;
      exponent = std::strtoll(exp.c_str(), &end, 10);
      if (*end != '\0' || exp == "-" || exp == "+") {
        throw std::invalid_argument("malformed exponent in '" + token + "'");
      }
    }
    syllables.push_back({gen, exponent});
  }
  if (!saw_identity && syllables.empty()) {
    throw std::invalid_argument("empty word literal; write 1 for the identity");
  }
  if (saw_identity && !syllables.empty()) {
    throw std::invalid_argument("'1' may only appear alone in a word literal");
  }
  return from_syllables(syllables);
}

std::int64_t Word::letter_length() const {
  std::int64_t n = 0;
  for (const auto& s : syllables_) {
    n += s.exponent < 0 ? -s.exponent : s.exponent;
  }
  return n;
}

std::vector<Letter> Word::letters() const {
  std::vector<Letter> out;
  for (const auto& s : syllables_) {
    int sign = s.exponent < 0 ? -1 : 1;
    for (std::int64_t k = 0; k < s.exponent * sign; ++k) {
      out.push_back({s.generator, sign});
    }
  }
  return out;
}

std::string Word::to_string() const {
  if (syllables_.empty()) {
    return "1";
  }
  std::string out;
  for (const auto& s : syllables_) {
    if (!out.empty()) {
      out += ' ';
    }
    out += 'g' + std::to_string(s.generator);
    if (s.exponent != 1) {
      out += '^' + std::to_string(s.exponent);
    }
  }
  return out;
}

Word reduce(std::span<const Letter> raw) {
  Word w;
  for (const auto& letter : raw) {
    check_generator(letter.generator);
    if (letter.sign != 1 && letter.sign != -1) {
      throw std::invalid_argument("letter sign must be +1 or -1");
    }
    w.push({letter.generator, letter.sign});
  }
  return w;
}

Word multiply(const Word& u, const Word& v) {
  Word w = u;
  for (const auto& s : v.syllables_) {
    w.push(s);
  }
  return w;
}

Word invert(const Word& u) {
  std::vector<Syllable> rev(u.syllables().rbegin(), u.syllables().rend());
  for (auto& s : rev) {
    s.exponent = -s.exponent;
  }
  return Word::from_syllables(rev);
}

}  // namespace pi1lab
