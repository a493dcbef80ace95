// Copyright 2026 The adidas-nfg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Gambit ".nfg" files in payoff format ("NFG 1 R"). Payoffs are listed per
// outcome with the first player's action varying fastest, which matches the
// GameTensor layout. Numbers are written in shortest round-trip form.

#ifndef ADIDAS_NFG_H_
#define ADIDAS_NFG_H_

#include <cctype>
#include <cmath>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "adidas/base.h"
#include "adidas/game.h"
#include "adidas/multiset.h"

namespace adidas {

// Parse failure at a byte offset of the input.
class NfgParseError : public ConfigError {
 public:
  NfgParseError(const std::string& what, std::size_t offset)
      : ConfigError("nfg: " + what + " at byte " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

struct NfgGame {
  std::string title;
  std::vector<std::string> players;
  // Empty when the file gives action counts only.
  std::vector<std::vector<std::string>> strategy_names;
  std::string comment;
  GameTensor game;
};

namespace internal {

class NfgLexer {
 public:
  explicit NfgLexer(std::string_view text) : text_(text) {}

  std::size_t offset() const { return pos_; }
  bool AtEnd() {
    SkipSpace();
    return pos_ >= text_.size();
  }
  char Peek() {
    SkipSpace();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void Expect(char c) {
    if (Peek() != c) {
      throw NfgParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  std::string Word() {
    SkipSpace();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(Byte(pos_)) &&
           text_[pos_] != '{' && text_[pos_] != '}' && text_[pos_] != '"') {
      ++pos_;
    }
    if (start == pos_) throw NfgParseError("expected a token", pos_);
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string Quoted() {
    SkipSpace();
    if (pos_ >= text_.size() || text_[pos_] != '"') {
      throw NfgParseError("expected a quoted string", pos_);
    }
    const std::size_t start = pos_++;
    std::string out;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) ++pos_;
      out += text_[pos_++];
    }
    if (pos_ >= text_.size()) {
      throw NfgParseError("unterminated string", start);
    }
    ++pos_;
    return out;
  }

  // Integer, decimal (with optional exponent) or rational a/b.
  double Number() {
    SkipSpace();
    const std::size_t start = pos_;
    const std::string tok = Word();
    const std::size_t slash = tok.find('/');
    if (slash == std::string::npos) return ParseDouble(tok, start);
    const double num = ParseDouble(tok.substr(0, slash), start);
    const double den = ParseDouble(tok.substr(slash + 1), start + slash + 1);
    if (den == 0.0) throw NfgParseError("zero denominator", start);
    return num / den;
  }

 private:
  unsigned char Byte(std::size_t i) const {
    return static_cast<unsigned char>(text_[i]);
  }
  void SkipSpace() {
    while (pos_ < text_.size() && std::isspace(Byte(pos_))) ++pos_;
  }
  static double ParseDouble(const std::string& s, std::size_t at) {
    double v = 0.0;
    const char* first = s.data();
    if (!s.empty() && s[0] == '+') ++first;
    const auto [end, ec] = std::from_chars(first, s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size()) {
      throw NfgParseError("malformed number '" + s + "'", at);
    }
    if (!std::isfinite(v)) throw NfgParseError("non-finite number", at);
    return v;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

inline std::string FormatNumber(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) throw NumericError("cannot format payoff");
  return std::string(buf, end);
}

inline std::string QuoteNfg(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace internal

inline NfgGame ParseNfg(std::string_view text) {
  internal::NfgLexer lex(text);
  NfgGame out;
  if (lex.Word() != "NFG") throw NfgParseError("expected 'NFG'", 0);
  std::size_t at = lex.offset();
  if (lex.Word() != "1") throw NfgParseError("unsupported version", at);
  at = lex.offset();
  if (lex.Word() != "R") {
    throw NfgParseError("only real-valued ('R') files are supported", at);
  }
  out.title = lex.Quoted();

  lex.Expect('{');
  while (lex.Peek() == '"') out.players.push_back(lex.Quoted());
  lex.Expect('}');
  if (out.players.empty()) throw NfgParseError("no players", lex.offset());

  std::vector<int> counts;
  lex.Expect('{');
  if (lex.Peek() == '{') {
    while (lex.Peek() == '{') {
      lex.Expect('{');
      std::vector<std::string> names;
      while (lex.Peek() == '"') names.push_back(lex.Quoted());
      lex.Expect('}');
      if (names.empty()) throw NfgParseError("player without strategies", lex.offset());
      counts.push_back(static_cast<int>(names.size()));
      out.strategy_names.push_back(std::move(names));
    }
  } else {
    while (lex.Peek() != '}' && !lex.AtEnd()) {
      at = lex.offset();
      const double m = lex.Number();
      if (!(m >= 1.0) || m != static_cast<int>(m)) {
        throw NfgParseError("action count must be a positive integer", at);
      }
      counts.push_back(static_cast<int>(m));
    }
  }
  lex.Expect('}');
  if (counts.size() != out.players.size()) {
    throw NfgParseError("expected " + std::to_string(out.players.size()) +
                            " action counts, got " + std::to_string(counts.size()),
                        lex.offset());
  }
  if (lex.Peek() == '"') out.comment = lex.Quoted();
  if (lex.Peek() == '{') {
    throw NfgParseError("outcome-format files are not supported", lex.offset());
  }

  std::uint64_t expected = counts.size();
  for (int m : counts) expected = CheckedMul(expected, m);
  std::vector<double> payoffs;
  while (!lex.AtEnd()) {
    if (payoffs.size() == expected) {
      throw NfgParseError("expected " + std::to_string(expected) +
                              " payoff values, found more",
                          lex.offset());
    }
    payoffs.push_back(lex.Number());
  }
  if (payoffs.size() != expected) {
    throw NfgParseError("expected " + std::to_string(expected) +
                            " payoff values, got " +
                            std::to_string(payoffs.size()),
                        lex.offset());
  }
  out.game = GameTensor(std::move(counts), std::move(payoffs));
  return out;
}

// Serializes a game. Players are named "Player 1", ... unless given.
inline std::string WriteNfg(const GameTensor& game,
                            const std::string& title = "",
                            const std::vector<std::string>& players = {},
                            const std::string& comment = "") {
  const int n = game.num_players();
  if (!players.empty() && static_cast<int>(players.size()) != n) {
    throw DimensionError("player name count does not match the game");
  }
  std::ostringstream os;
  os << "NFG 1 R " << internal::QuoteNfg(title) << " {";
  for (int i = 0; i < n; ++i) {
    os << ' '
       << internal::QuoteNfg(players.empty() ? "Player " + std::to_string(i + 1)
                                             : players[i]);
  }
  os << " } {";
  for (int m : game.action_counts()) os << ' ' << m;
  os << " }\n";
  if (!comment.empty()) os << internal::QuoteNfg(comment) << '\n';
  os << '\n';
  const auto& p = game.payoffs();
  for (std::uint64_t o = 0; o < game.num_outcomes(); ++o) {
    for (int i = 0; i < n; ++i) {
      if (o > 0 || i > 0) os << ' ';
      os << internal::FormatNumber(p[o * n + i]);
    }
  }
  os << '\n';
  return os.str();
}

inline NfgGame ReadNfgFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ParseNfg(ss.str());
}

inline void WriteNfgFile(const std::string& path, const GameTensor& game,
                         const std::string& title = "") {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  out << WriteNfg(game, title);
  if (!out) throw ConfigError("write to '" + path + "' failed");
}

}  // namespace adidas

#endif  // ADIDAS_NFG_H_
