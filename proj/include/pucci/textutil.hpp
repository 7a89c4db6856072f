// textutil.hpp - UTF-8 codepoints, Latin letter classes, tokenizers
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pucci::text {

// Decodes a UTF-8 string into codepoints. Invalid bytes decode as U+FFFD.
std::vector<char32_t> decode_utf8(std::string_view s);
std::string encode_utf8(const std::vector<char32_t>& cps);
std::string encode_utf8(char32_t cp);

// Letter/digit classification for the Latin repertoire this project uses
// (ASCII, Latin-1 supplement, Œ/œ). Everything else counts as punctuation.
bool is_letter(char32_t cp);
bool is_digit(char32_t cp);

char32_t to_lower(char32_t cp);
char32_t to_upper(char32_t cp);
std::string lowercase(std::string_view s);

// Uppercases the first letter of the string (skipping leading non-letters).
std::string capitalize_first(std::string_view s);

// True when the word begins with a vowel or mute h (French elision trigger).
bool starts_with_vowel(std::string_view word);

// Splits into word tokens (maximal letter/digit runs) and punctuation
// tokens. Runs of '.' fuse into one token so "..." stays a single unit.
// With `lower`, word tokens are lowercased.
std::vector<std::string> word_tokens(std::string_view s, bool lower);

// Source-side tokenizer: like word_tokens but an apostrophe directly after
// letters sticks to them ("nell'ultimo" -> "nell'", "ultimo"). Case kept.
std::vector<std::string> source_tokens(std::string_view s);

// Joins source tokens back into text: no space before trailing-attachment
// punctuation, no space after a token that ends with an apostrophe.
std::string join_tokens(const std::vector<std::string>& toks);

// Splits text into paragraphs on blank lines.
std::vector<std::string> split_paragraphs(std::string_view s);

// Splits a paragraph into sentences after '.', '!' or '?' (runs of '.'
// bind to the sentence they terminate).
std::vector<std::string> split_sentences(std::string_view s);

bool is_punct_token(std::string_view tok);

} // namespace pucci::text
