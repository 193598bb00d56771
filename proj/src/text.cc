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

#include "mtvaug/text.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "mtvaug/error.h"

namespace mtvaug {
namespace {

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

char ToLower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

std::string Lowercase(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = ToLower(c);
  return out;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && IsSpace(s.front())) s.remove_prefix(1);
  while (!s.empty() && IsSpace(s.back())) s.remove_suffix(1);
  return s;
}

// Calls `fn(line_number, line)` for every line, stripping a trailing '\r'.
template <typename Fn>
void ForEachLine(std::string_view contents, Fn&& fn) {
  int line_number = 0;
  while (!contents.empty()) {
    size_t eol = contents.find('\n');
    std::string_view line = contents.substr(0, eol);
    contents.remove_prefix(eol == std::string_view::npos ? contents.size()
                                                         : eol + 1);
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    fn(line_number, line);
  }
}

}  // namespace

bool IsPunctuation(char c) {
  return kPunctuation.find(c) != std::string_view::npos;
}

bool IsValidToken(std::string_view surface) {
  return !surface.empty() && std::none_of(surface.begin(), surface.end(), IsSpace);
}

TokenSequence::TokenSequence(std::vector<Token> tokens)
    : tokens_(std::move(tokens)) {
  if (tokens_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "token sequence must be non-empty");
  }
  for (const Token& t : tokens_) {
    if (!IsValidToken(t)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "invalid token '" + t + "' (empty or contains whitespace)");
    }
  }
}

TokenSequence Tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) tokens.push_back(std::move(current));
    current.clear();
  };
  for (char c : text) {
    if (IsSpace(c)) {
      flush();
    } else if (IsPunctuation(c)) {
      flush();
      tokens.emplace_back(1, c);
    } else {
      current.push_back(ToLower(c));
    }
  }
  flush();
  if (tokens.empty()) {
    throw Error(ErrorCode::kEmptyInput, "text has no non-whitespace characters");
  }
  return TokenSequence(std::move(tokens));
}

std::string Detokenize(const TokenSequence& seq) {
  std::string out;
  for (size_t i = 0; i < seq.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += seq[i];
  }
  return out;
}

void SynonymLexicon::Add(std::string_view headword,
                         std::span<const std::string> synonyms) {
  std::string head = Lowercase(Trim(headword));
  if (!IsValidToken(head)) return;
  auto it = entries_.find(head);
  std::vector<Token> merged = it == entries_.end() ? std::vector<Token>{}
                                                   : it->second;
  for (const std::string& raw : synonyms) {
    std::string syn = Lowercase(Trim(raw));
    if (!IsValidToken(syn) || syn == head) continue;
    if (std::find(merged.begin(), merged.end(), syn) != merged.end()) continue;
    merged.push_back(std::move(syn));
  }
  if (!merged.empty()) entries_[head] = std::move(merged);
}

std::span<const Token> SynonymLexicon::Synonyms(std::string_view token) const {
  auto it = entries_.find(std::string(token));
  if (it == entries_.end()) return {};
  return it->second;
}

SynonymLexicon SynonymLexicon::WithoutHeadwords(
    const std::unordered_set<std::string>& excluded) const {
  SynonymLexicon out;
  for (const auto& [head, list] : entries_) {
    if (!excluded.contains(head)) out.entries_.emplace(head, list);
  }
  return out;
}

std::vector<std::string> SynonymLexicon::Headwords() const {
  std::vector<std::string> heads;
  heads.reserve(entries_.size());
  for (const auto& entry : entries_) heads.push_back(entry.first);
  std::sort(heads.begin(), heads.end());
  return heads;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, "failed reading " + path.string());
  return buffer.str();
}

SynonymLexicon ParseLexicon(std::string_view contents) {
  SynonymLexicon lexicon;
  ForEachLine(contents, [&](int line_number, std::string_view line) {
    if (Trim(line).empty() || line.front() == '#') return;
    if (std::count(line.begin(), line.end(), '\t') != 1) {
      throw Error::AtLine(ErrorCode::kMalformedLine, line_number,
                          "expected exactly one tab in lexicon line");
    }
    size_t tab = line.find('\t');
    std::vector<std::string> synonyms;
    std::string_view rest = line.substr(tab + 1);
    while (true) {
      size_t comma = rest.find(',');
      synonyms.emplace_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    lexicon.Add(line.substr(0, tab), synonyms);
  });
  return lexicon;
}

SynonymLexicon LoadLexicon(const std::filesystem::path& path) {
  return ParseLexicon(ReadFile(path));
}

void SaveLexicon(const SynonymLexicon& lexicon,
                 const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  for (const std::string& head : lexicon.Headwords()) {
    out << head << '\t';
    auto synonyms = lexicon.Synonyms(head);
    for (size_t i = 0; i < synonyms.size(); ++i) {
      if (i > 0) out << ',';
      out << synonyms[i];
    }
    out << '\n';
  }
  if (!out) throw Error(ErrorCode::kIo, "failed writing " + path.string());
}

std::unordered_set<std::string> LoadStopwords(
    const std::filesystem::path& path) {
  std::unordered_set<std::string> words;
  ForEachLine(ReadFile(path), [&](int, std::string_view line) {
    std::string word = Lowercase(Trim(line));
    if (!word.empty()) words.insert(std::move(word));
  });
  return words;
}

}  // namespace mtvaug
