#pragma once

#include <cstddef>
#include <string>

namespace abstain::text {

// Word characters: ASCII letters/digits, apostrophe, and any non-ASCII
// byte (multi-byte UTF-8 sequences count as word content). Boundaries are
// transitions between word and non-word characters.
bool is_word_byte(unsigned char c);

// True if position i in s sits at a word boundary (start side).
bool boundary_before(const std::string& s, size_t i);
// True if position i (one past the match) sits at a word boundary (end side).
bool boundary_after(const std::string& s, size_t i);

// ASCII lowercase; non-ASCII bytes pass through.
char lower(char c);
std::string to_lower(const std::string& s);

// Lowercase, collapse whitespace runs to single spaces, trim ends.
std::string normalize(const std::string& s);

// Boundary-aligned occurrence check: needle occurs in haystack with word
// boundaries at both ends. Both inputs are matched case-insensitively
// (ASCII). A space in needle matches a run of whitespace in haystack.
bool contains_bounded(const std::string& haystack, const std::string& needle);

// Length of the match when needle matches haystack at position pos under
// the rules above (case-insensitive, needle-space matches whitespace run),
// or 0 if no match. Does not check boundaries.
size_t match_at(const std::string& haystack, size_t pos, const std::string& needle);

}  // namespace abstain::text
