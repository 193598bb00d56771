//
// Copyright 2026 The mtvaug Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef MTVAUG_TEXT_H_
#define MTVAUG_TEXT_H_

#include <cstddef>
#include <filesystem>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace mtvaug {

// A lowercase, non-empty, whitespace-free word or punctuation mark.
using Token = std::string;

// Characters the tokenizer splits into single-character tokens.
inline constexpr std::string_view kPunctuation = ".,!?;:'\"()";

bool IsPunctuation(char c);

// True for a string usable as a Token: non-empty and free of whitespace.
bool IsValidToken(std::string_view surface);

// Ordered, non-empty list of tokens. Immutable once built.
class TokenSequence {
 public:
  // Throws Error(kInvalidArgument) if `tokens` is empty or holds an invalid
  // token.
  explicit TokenSequence(std::vector<Token> tokens);
  TokenSequence(std::initializer_list<Token> tokens)
      : TokenSequence(std::vector<Token>(tokens)) {}

  size_t size() const { return tokens_.size(); }
  const Token& operator[](size_t i) const { return tokens_[i]; }
  std::span<const Token> tokens() const { return tokens_; }
  auto begin() const { return tokens_.begin(); }
  auto end() const { return tokens_.end(); }

  friend bool operator==(const TokenSequence&, const TokenSequence&) = default;

 private:
  std::vector<Token> tokens_;
};

// Lowercases (ASCII), splits on whitespace and isolates each character of
// kPunctuation as its own token. Throws Error(kEmptyInput) when `text` has
// no non-whitespace character.
TokenSequence Tokenize(std::string_view text);

// Joins tokens with single spaces.
std::string Detokenize(const TokenSequence& seq);

// Headword -> synonyms map. Every list is non-empty, deduplicated, lowercase
// and never contains its own headword.
class SynonymLexicon {
 public:
  SynonymLexicon() = default;

  // Adds `synonyms` under `headword`, merging with any existing entry.
  // Strings are lowercased; duplicates, self-synonyms and invalid tokens are
  // dropped. An entry left empty is not stored.
  void Add(std::string_view headword, std::span<const std::string> synonyms);
  void Add(std::string_view headword, std::initializer_list<std::string> synonyms) {
    std::vector<std::string> list(synonyms);
    Add(headword, std::span<const std::string>(list));
  }

  // Returns the synonym list of `token`, empty when absent.
  std::span<const Token> Synonyms(std::string_view token) const;
  bool HasSynonyms(std::string_view token) const {
    return !Synonyms(token).empty();
  }

  // Copy without the given headwords (stopword exclusion).
  SynonymLexicon WithoutHeadwords(
      const std::unordered_set<std::string>& excluded) const;

  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Headwords in sorted order.
  std::vector<std::string> Headwords() const;

 private:
  std::unordered_map<std::string, std::vector<Token>> entries_;
};

// Reads a lexicon TSV: `headword<TAB>syn1,syn2,...` per line, `#` lines and
// blank lines ignored. Throws Error(kMalformedLine) (with line number) for a
// line without exactly one tab and Error(kIo) on read failure.
SynonymLexicon LoadLexicon(const std::filesystem::path& path);
SynonymLexicon ParseLexicon(std::string_view contents);

// Writes `lexicon` in the TSV format read by LoadLexicon, headwords sorted.
void SaveLexicon(const SynonymLexicon& lexicon,
                 const std::filesystem::path& path);

// One lowercase word per line; blank lines skipped.
std::unordered_set<std::string> LoadStopwords(
    const std::filesystem::path& path);

// Whole-file read; throws Error(kIo).
std::string ReadFile(const std::filesystem::path& path);

}  // namespace mtvaug

#endif  // MTVAUG_TEXT_H_
