#include "abstain/text.hpp"

#include <cctype>

namespace abstain::text {

bool is_word_byte(unsigned char c) {
    if (c >= 0x80) return true;
    return std::isalnum(c) || c == '\'';
}

bool boundary_before(const std::string& s, size_t i) {
    if (i == 0) return true;
    return !is_word_byte(static_cast<unsigned char>(s[i - 1]));
}

bool boundary_after(const std::string& s, size_t i) {
    if (i >= s.size()) return true;
    return !is_word_byte(static_cast<unsigned char>(s[i]));
}

char lower(char c) {
    unsigned char u = static_cast<unsigned char>(c);
    if (u < 0x80) return static_cast<char>(std::tolower(u));
    return c;
}

std::string to_lower(const std::string& s) {
    std::string out = s;
    for (char& c : out) c = lower(c);
    return out;
}

std::string normalize(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    bool in_space = false;
    for (char c : s) {
        unsigned char u = static_cast<unsigned char>(c);
        if (u < 0x80 && std::isspace(u)) {
            in_space = true;
            continue;
        }
        if (in_space && !out.empty()) out.push_back(' ');
        in_space = false;
        out.push_back(lower(c));
    }
    return out;
}

size_t match_at(const std::string& haystack, size_t pos, const std::string& needle) {
    size_t h = pos;
    for (size_t n = 0; n < needle.size(); ++n) {
        if (needle[n] == ' ') {
            size_t start = h;
            while (h < haystack.size()) {
                unsigned char u = static_cast<unsigned char>(haystack[h]);
                if (u < 0x80 && std::isspace(u)) ++h; else break;
            }
            if (h == start) return 0;
        } else {
            if (h >= haystack.size() || lower(haystack[h]) != lower(needle[n])) return 0;
            ++h;
        }
    }
    return h - pos;
}

bool contains_bounded(const std::string& haystack, const std::string& needle) {
    if (needle.empty()) return false;
    for (size_t i = 0; i + 1 <= haystack.size(); ++i) {
        if (!boundary_before(haystack, i)) continue;
        size_t len = match_at(haystack, i, needle);
        if (len > 0 && boundary_after(haystack, i + len)) return true;
    }
    return false;
}

}  // namespace abstain::text
