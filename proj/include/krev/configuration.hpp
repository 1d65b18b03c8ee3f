#pragma once

#include "krev/error.hpp"
#include "krev/graph.hpp"

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace krev {

/// Vertex states packed one bit per vertex; bit set means state +1.
class Configuration {
public:
  Configuration() = default;

  /// All vertices in `state` (+1 or -1).
  explicit Configuration(int n, int state = -1) : n_(n), words_(words_for(n), 0) {
    if (n < 1)
      throw std::invalid_argument("configuration needs at least one vertex");
    if (state == 1)
      for (int i = 0; i < n; ++i) set(i, 1);
    else if (state != -1)
      throw std::invalid_argument("state must be -1 or +1");
  }

  static Configuration from_states(std::span<const int> states) {
    Configuration x(static_cast<int>(states.size()));
    for (int i = 0; i < x.n(); ++i) {
      if (states[i] != 1 && states[i] != -1)
        throw std::invalid_argument("state must be -1 or +1");
      x.set(i, states[i]);
    }
    return x;
  }
  static Configuration from_states(std::initializer_list<int> states) {
    return from_states(std::span<const int>(states.begin(), states.size()));
  }

  /// Low `n` bits of `bits` give the states of vertices 0..n-1 (n <= 64).
  static Configuration from_bits(int n, Word bits) {
    if (n > bits_per_word)
      throw std::invalid_argument("from_bits supports at most 64 vertices");
    Configuration x(n);
    x.words_[0] = n == bits_per_word ? bits : bits & ((Word{1} << n) - 1);
    return x;
  }

  int n() const noexcept { return n_; }
  int state(Vertex i) const { return bit(i) ? 1 : -1; }
  bool bit(Vertex i) const { return (words_[i / bits_per_word] >> (i % bits_per_word)) & 1U; }
  void set(Vertex i, int state) {
    const Word mask = Word{1} << (i % bits_per_word);
    if (state == 1)
      words_[i / bits_per_word] |= mask;
    else
      words_[i / bits_per_word] &= ~mask;
  }
  void flip(Vertex i) { words_[i / bits_per_word] ^= Word{1} << (i % bits_per_word); }

  std::span<const Word> words() const noexcept { return words_; }

  std::vector<int> states() const {
    std::vector<int> out(n_);
    for (int i = 0; i < n_; ++i) out[i] = state(i);
    return out;
  }

  bool monochromatic() const {
    for (int i = 1; i < n_; ++i)
      if (bit(i) != bit(0))
        return false;
    return true;
  }

  /// "+-+" form, vertex 1 first.
  std::string to_string() const {
    std::string out(n_, '-');
    for (int i = 0; i < n_; ++i)
      if (bit(i)) out[i] = '+';
    return out;
  }

  friend bool operator==(const Configuration &, const Configuration &) = default;

private:
  friend Configuration negate(const Configuration &x);

  int n_ = 0;
  std::vector<Word> words_;
};

inline Configuration negate(const Configuration &x) {
  Configuration out = x;
  for (auto &w : out.words_)
    w = ~w;
  if (const int tail = x.n_ % bits_per_word; tail != 0)
    out.words_.back() &= (Word{1} << tail) - 1;
  return out;
}

/**
 * Reads a configuration string of exactly n characters, either over
 * {'+','-'} or over {'1','0'} ('1' is +1). The two alphabets may not be
 * mixed.
 */
inline Configuration parse_config(std::string_view text, int n) {
  using K = ParseErrorKind;
  if (static_cast<int>(text.size()) != n)
    throw ParseError(K::WrongLength, 0,
                     "expected " + std::to_string(n) + " states, got " + std::to_string(text.size()));
  Configuration x(n);
  bool signs = false, digits = false;
  for (int i = 0; i < n; ++i) {
    const char c = text[i];
    if (c == '+' || c == '-')
      signs = true;
    else if (c == '1' || c == '0')
      digits = true;
    else
      throw ParseError(K::IllegalCharacter, 0, std::string("'") + c + "' at position " + std::to_string(i + 1));
    if (signs && digits)
      throw ParseError(K::IllegalCharacter, 0, "mixed '+/-' and '1/0' alphabets");
    x.set(i, (c == '+' || c == '1') ? 1 : -1);
  }
  return x;
}

struct ConfigurationHash {
  std::size_t operator()(const Configuration &x) const noexcept {
    std::size_t h = static_cast<std::size_t>(x.n());
    for (Word w : x.words())
      h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

} // namespace krev
