#include "pucci/textutil.hpp"

namespace pucci::text {

std::vector<char32_t> decode_utf8(std::string_view s) {
    std::vector<char32_t> out;
    out.reserve(s.size());
    size_t i = 0;
    while (i < s.size()) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        char32_t cp = 0xFFFD;
        size_t len = 1;
        if (c < 0x80) {
            cp = c;
        } else if ((c >> 5) == 0x6 && i + 1 < s.size()) {
            cp = ((c & 0x1F) << 6) | (s[i + 1] & 0x3F);
            len = 2;
        } else if ((c >> 4) == 0xE && i + 2 < s.size()) {
            cp = ((c & 0x0F) << 12) | ((s[i + 1] & 0x3F) << 6) | (s[i + 2] & 0x3F);
            len = 3;
        } else if ((c >> 3) == 0x1E && i + 3 < s.size()) {
            cp = ((c & 0x07) << 18) | ((s[i + 1] & 0x3F) << 12) |
                 ((s[i + 2] & 0x3F) << 6) | (s[i + 3] & 0x3F);
            len = 4;
        }
        out.push_back(cp);
        i += len;
    }
    return out;
}

std::string encode_utf8(char32_t cp) {
    std::string out;
    if (cp < 0x80) {
        out += static_cast<char>(cp);
    } else if (cp < 0x800) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
        out += static_cast<char>(0xF0 | (cp >> 18));
        out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
    return out;
}

std::string encode_utf8(const std::vector<char32_t>& cps) {
    std::string out;
    for (char32_t cp : cps) out += encode_utf8(cp);
    return out;
}

bool is_letter(char32_t cp) {
    if ((cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z')) return true;
    if (cp >= 0xC0 && cp <= 0xFF && cp != 0xD7 && cp != 0xF7) return true; // Latin-1
    if (cp == 0x152 || cp == 0x153) return true;                           // Œ œ
    return false;
}

bool is_digit(char32_t cp) { return cp >= '0' && cp <= '9'; }

char32_t to_lower(char32_t cp) {
    if (cp >= 'A' && cp <= 'Z') return cp + 32;
    if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 32;
    if (cp == 0x152) return 0x153;
    return cp;
}

char32_t to_upper(char32_t cp) {
    if (cp >= 'a' && cp <= 'z') return cp - 32;
    if (cp >= 0xE0 && cp <= 0xFE && cp != 0xF7) return cp - 32;
    if (cp == 0x153) return 0x152;
    return cp;
}

std::string lowercase(std::string_view s) {
    auto cps = decode_utf8(s);
    for (auto& cp : cps) cp = to_lower(cp);
    return encode_utf8(cps);
}

std::string capitalize_first(std::string_view s) {
    auto cps = decode_utf8(s);
    for (auto& cp : cps) {
        if (is_letter(cp)) {
            cp = to_upper(cp);
            break;
        }
    }
    return encode_utf8(cps);
}

bool starts_with_vowel(std::string_view word) {
    auto cps = decode_utf8(word);
    if (cps.empty()) return false;
    char32_t c = to_lower(cps[0]);
    static const char32_t vowels[] = {'a', 'e', 'i', 'o', 'u', 'h', 0xE0, 0xE1, 0xE2,
                                      0xE4, 0xE8, 0xE9, 0xEA, 0xEB, 0xEC, 0xED, 0xEE,
                                      0xEF, 0xF2, 0xF3, 0xF4, 0xF6, 0xF9, 0xFA, 0xFB,
                                      0xFC, 0x153};
    for (char32_t v : vowels)
        if (c == v) return true;
    return false;
}

namespace {

bool is_space(char32_t cp) {
    return cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r' || cp == 0xA0;
}

} // namespace

std::vector<std::string> word_tokens(std::string_view s, bool lower) {
    auto cps = decode_utf8(s);
    std::vector<std::string> toks;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) {
            toks.push_back(cur);
            cur.clear();
        }
    };
    size_t i = 0;
    while (i < cps.size()) {
        char32_t cp = cps[i];
        if (is_letter(cp) || is_digit(cp)) {
            cur += encode_utf8(lower ? to_lower(cp) : cp);
            ++i;
        } else if (is_space(cp)) {
            flush();
            ++i;
        } else if (cp == '.') {
            flush();
            std::string run;
            while (i < cps.size() && cps[i] == '.') {
                run += '.';
                ++i;
            }
            toks.push_back(run);
        } else {
            flush();
            toks.push_back(encode_utf8(cp));
            ++i;
        }
    }
    flush();
    return toks;
}

std::vector<std::string> source_tokens(std::string_view s) {
    auto cps = decode_utf8(s);
    std::vector<std::string> toks;
    std::string cur;
    bool cur_is_word = false;
    auto flush = [&] {
        if (!cur.empty()) {
            toks.push_back(cur);
            cur.clear();
        }
        cur_is_word = false;
    };
    size_t i = 0;
    while (i < cps.size()) {
        char32_t cp = cps[i];
        if (is_letter(cp) || is_digit(cp)) {
            cur += encode_utf8(cp);
            cur_is_word = true;
            ++i;
        } else if ((cp == '\'' || cp == 0x2019) && cur_is_word) {
            cur += '\'';
            flush();
            ++i;
        } else if (is_space(cp)) {
            flush();
            ++i;
        } else {
            flush();
            toks.push_back(encode_utf8(cp));
            ++i;
        }
    }
    flush();
    return toks;
}

bool is_punct_token(std::string_view tok) {
    if (tok.empty()) return true;
    auto cps = decode_utf8(tok);
    return !is_letter(cps[0]) && !is_digit(cps[0]);
}

std::string join_tokens(const std::vector<std::string>& toks) {
    static const std::string_view attach_left = ",.;:!?)";
    std::string out;
    for (size_t i = 0; i < toks.size(); ++i) {
        const std::string& t = toks[i];
        if (!out.empty()) {
            bool prev_apos = out.back() == '\'';
            bool left = t.size() >= 1 && is_punct_token(t) &&
                        (attach_left.find(t[0]) != std::string_view::npos);
            if (!prev_apos && !left) out += ' ';
        }
        out += t;
    }
    return out;
}

std::vector<std::string> split_paragraphs(std::string_view s) {
    std::vector<std::string> out;
    std::string cur;
    size_t i = 0;
    while (i < s.size()) {
        if (s[i] == '\n') {
            size_t j = i;
            while (j < s.size() && (s[j] == '\n' || s[j] == '\r')) ++j;
            if (j - i >= 2) { // blank line
                if (!cur.empty()) out.push_back(cur);
                cur.clear();
                i = j;
                continue;
            }
            cur += ' ';
            ++i;
        } else {
            cur += s[i];
            ++i;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::vector<std::string> split_sentences(std::string_view s) {
    auto cps = decode_utf8(s);
    std::vector<std::string> out;
    std::string cur;
    size_t i = 0;
    while (i < cps.size()) {
        char32_t cp = cps[i];
        cur += encode_utf8(cp);
        ++i;
        if (cp == '.' || cp == '!' || cp == '?') {
            while (i < cps.size() && (cps[i] == '.' || cps[i] == '!' || cps[i] == '?')) {
                cur += encode_utf8(cps[i]);
                ++i;
            }
            while (!cur.empty() && cur.front() == ' ') cur.erase(cur.begin());
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        }
    }
    while (!cur.empty() && cur.front() == ' ') cur.erase(cur.begin());
    while (!cur.empty() && cur.back() == ' ') cur.pop_back();
    if (!cur.empty()) out.push_back(cur);
    return out;
}

} // namespace pucci::text
