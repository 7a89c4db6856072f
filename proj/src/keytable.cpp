#include "pucci/keytable.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "pucci/errors.hpp"
#include "pucci/textutil.hpp"

namespace pucci {

std::string tense_name(TenseIdeogram t) {
    return "ID" + std::to_string(static_cast<int>(t));
}

std::optional<TenseIdeogram> parse_tense(std::string_view s) {
    if (s.size() < 3 || s.substr(0, 2) != "ID") return std::nullopt;
    int n = 0;
    for (char c : s.substr(2)) {
        if (c < '0' || c > '9') return std::nullopt;
        n = n * 10 + (c - '0');
    }
    if (n < 1 || n > kTenseCount) return std::nullopt;
    return static_cast<TenseIdeogram>(n);
}

int possessive_case_index(CaseSlot slot, bool first_person_sg) {
    // The chart's first-person-singular row runs genitive/dative/base;
    // every other possessive row runs base/genitive/dative/object.
    if (first_person_sg) {
        switch (slot) {
            case CaseSlot::Genitive: return 1;
            case CaseSlot::Dative: return 2;
            case CaseSlot::Base: return 3;
            case CaseSlot::Object: return 4;
        }
    }
    switch (slot) {
        case CaseSlot::Base: return 1;
        case CaseSlot::Genitive: return 2;
        case CaseSlot::Dative: return 3;
        case CaseSlot::Object: return 4;
    }
    return 1;
}

namespace {

struct LetterPart {
    std::string letters;
    bool dotted{false};
    int index{-1}; // -1 when absent
};

LetterPart split_notation(std::string_view s) {
    LetterPart p;
    size_t i = 0;
    while (i < s.size() && ((s[i] >= 'a' && s[i] <= 'z') || (s[i] >= 'A' && s[i] <= 'Z') ||
                            s[i] == '&' || s[i] == '+')) {
        p.letters += s[i];
        ++i;
    }
    if (i < s.size() && s[i] == '.') {
        p.dotted = true;
        ++i;
    }
    if (i < s.size()) {
        int n = 0;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
            n = n * 10 + (s[i] - '0');
            ++i;
        }
        if (i != s.size()) throw ParseError("bad key notation: '" + std::string(s) + "'");
        p.index = n;
    }
    return p;
}

int base_case(std::string_view notation, int index, bool plural_allowed) {
    if (index >= 1 && index <= 4) return index;
    if (plural_allowed && index >= 11 && index <= 14) return index - 10;
    if (index >= 11 && index <= 14)
        throw ParseError("plural index on a non-pronoun key: '" + std::string(notation) + "'");
    throw ParseError("case index out of range in '" + std::string(notation) + "'");
}

} // namespace

GrammaticalKey parse_key_notation(std::string_view notation) {
    if (notation.empty()) throw ParseError("empty key notation");
    GrammaticalKey k;
    if (notation == "&") {
        k.category = KeyCategory::Conjunction;
        return k;
    }
    if (notation == "+") {
        k.category = KeyCategory::PluralMarker;
        return k;
    }
    if (notation == "m" || notation == "f") {
        k.category = KeyCategory::GenderMarker;
        k.gender = notation == "m" ? Gender::Masculine : Gender::Feminine;
        return k;
    }
    if (notation == "I.") {
        k.category = KeyCategory::PersonalRelativeIndicator;
        return k;
    }

    LetterPart p = split_notation(notation);
    if (p.letters.empty()) throw ParseError("bad key notation: '" + std::string(notation) + "'");
    if (p.index == 0) throw ParseError("case index out of range in '" + std::string(notation) + "'");

    auto idx_or = [&](int fallback) { return p.index == -1 ? fallback : p.index; };

    if (p.letters == "a") {
        k.category = KeyCategory::Article;
        k.case_index = base_case(notation, idx_or(1), false);
        return k;
    }
    if (p.letters == "D" || p.letters == "d") {
        k.category = p.letters == "D" ? KeyCategory::DemonstrativeNear
                                      : KeyCategory::DemonstrativeFar;
        k.case_index = base_case(notation, idx_or(1), false);
        return k;
    }
    if (p.letters == "R") {
        k.category = KeyCategory::Relative;
        k.case_index = base_case(notation, idx_or(1), false);
        return k;
    }
    if (p.letters == "I" || p.letters == "II" || p.letters == "III" ||
        p.letters == "IIIf" || p.letters == "IIIn") {
        k.category = KeyCategory::PersonalPronoun;
        int idx = idx_or(1);
        if (p.letters == "I" || p.letters == "II") {
            k.person = p.letters == "I" ? 1 : 2;
            k.number = (idx >= 11) ? Number::Plural : Number::Singular;
            k.case_index = base_case(notation, idx, true);
            return k;
        }
        k.person = 3;
        k.number = Number::Singular;
        if (p.letters == "IIIn") {
            k.gender = Gender::Neuter;
            k.case_index = base_case(notation, idx, false);
        } else if (p.letters == "IIIf") {
            k.gender = Gender::Feminine;
            k.case_index = base_case(notation, idx, false);
        } else {
            // Bare III: 1-4 masculine, 11-14 the chart's feminine series.
            k.gender = (idx >= 11) ? Gender::Feminine : Gender::Masculine;
            k.case_index = base_case(notation, idx, true);
        }
        return k;
    }
    static const std::string owners = "MTSNVL";
    auto pos = owners.find(p.letters.size() == 1 ? p.letters[0] : '\0');
    if (p.letters.size() == 1 && pos != std::string::npos) {
        k.category = KeyCategory::Possessive;
        k.person = static_cast<int>(pos % 3) + 1;
        k.number = pos < 3 ? Number::Singular : Number::Plural;
        int fallback = p.dotted || p.index == -1
                           ? possessive_case_index(CaseSlot::Base, pos == 0)
                           : 1;
        k.case_index = base_case(notation, idx_or(fallback), false);
        return k;
    }
    throw ParseError("unknown key letter in '" + std::string(notation) + "'");
}

std::string print_key(const GrammaticalKey& key) {
    switch (key.category) {
        case KeyCategory::Conjunction: return "&";
        case KeyCategory::PluralMarker: return "+";
        case KeyCategory::GenderMarker:
            return key.gender == Gender::Feminine ? "f" : "m";
        case KeyCategory::PersonalRelativeIndicator: return "I.";
        case KeyCategory::Article: return "a" + std::to_string(key.case_index.value_or(1));
        case KeyCategory::DemonstrativeNear:
            return "D" + std::to_string(key.case_index.value_or(1));
        case KeyCategory::DemonstrativeFar:
            return "d" + std::to_string(key.case_index.value_or(1));
        case KeyCategory::Relative: return "R" + std::to_string(key.case_index.value_or(1));
        case KeyCategory::PersonalPronoun: {
            int person = key.person.value_or(1);
            int idx = key.case_index.value_or(1);
            if (person == 1 || person == 2) {
                if (key.number == Number::Plural) idx += 10;
                return (person == 1 ? "I" : "II") + std::to_string(idx);
            }
            if (key.gender == Gender::Neuter) return "IIIn" + std::to_string(idx);
            if (key.gender == Gender::Feminine) return "III" + std::to_string(idx + 10);
            return "III" + std::to_string(idx);
        }
        case KeyCategory::Possessive: {
            static const char letters[] = "MTSNVL";
            int person = key.person.value_or(1);
            int slot = (key.number == Number::Plural ? 3 : 0) + person - 1;
            return std::string(1, letters[slot]) +
                   std::to_string(key.case_index.value_or(1));
        }
    }
    return "?";
}

std::vector<GrammaticalKey> canonical_key_inventory() {
    std::vector<GrammaticalKey> keys;
    auto add = [&](const std::string& notation) {
        keys.push_back(parse_key_notation(notation));
    };
    for (int c = 1; c <= 4; ++c) add("a" + std::to_string(c));
    for (int c = 1; c <= 4; ++c) add("D" + std::to_string(c));
    for (int c = 1; c <= 4; ++c) add("d" + std::to_string(c));
    for (int c = 1; c <= 4; ++c) add("R" + std::to_string(c));
    for (const std::string p : {"I", "II"}) {
        for (int c = 1; c <= 4; ++c) add(p + std::to_string(c));
        for (int c = 11; c <= 14; ++c) add(p + std::to_string(c));
    }
    for (int c = 1; c <= 4; ++c) add("III" + std::to_string(c));
    for (int c = 11; c <= 14; ++c) add("III" + std::to_string(c));
    for (int c = 1; c <= 4; ++c) add("IIIn" + std::to_string(c));
    for (const std::string p : {"M", "T", "S", "N", "V", "L"})
        for (int c = 1; c <= 4; ++c) add(p + std::to_string(c));
    add("&");
    add("+");
    add("m");
    add("f");
    add("I.");
    return keys;
}

KeyRealizationTable KeyRealizationTable::load(const std::string& path,
                                              const std::string& language) {
    std::ifstream in(path);
    if (!in) throw LoadError("cannot open key table: " + path);
    KeyRealizationTable table;
    table.language_ = language;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string f;
        while (std::getline(ss, f, '\t')) fields.push_back(f);
        if (fields.size() != 5)
            throw LoadError("key table " + path + ":" + std::to_string(lineno) +
                            ": expected 5 tab-separated fields");
        if (fields[1] != language) continue;
        GrammaticalKey key;
        try {
            key = parse_key_notation(fields[0]);
        } catch (const ParseError& e) {
            throw LoadError("key table " + path + ":" + std::to_string(lineno) + ": " +
                            e.what());
        }
        Row row;
        if (fields[2] == "m") row.gender = Gender::Masculine;
        else if (fields[2] == "f") row.gender = Gender::Feminine;
        else if (fields[2] == "n") row.gender = Gender::Neuter;
        else if (fields[2] != "-")
            throw LoadError("key table " + path + ":" + std::to_string(lineno) +
                            ": bad gender '" + fields[2] + "'");
        if (fields[3] == "sg") row.number = Number::Singular;
        else if (fields[3] == "pl") row.number = Number::Plural;
        else if (fields[3] != "-")
            throw LoadError("key table " + path + ":" + std::to_string(lineno) +
                            ": bad number '" + fields[3] + "'");
        row.surface = fields[4];
        table.cells_[print_key(key)].push_back(std::move(row));
        ++table.rows_;
    }
    return table;
}

bool KeyRealizationTable::covers(const GrammaticalKey& key) const {
    auto it = cells_.find(print_key(key));
    return it != cells_.end() && !it->second.empty();
}

const std::string& KeyRealizationTable::lookup(const GrammaticalKey& key,
                                               const AgreementContext& ctx) const {
    const std::string notation = print_key(key);
    auto it = cells_.find(notation);
    if (it == cells_.end())
        throw CoverageError("no " + language_ + " realization for key " + notation);
    const Row* best = nullptr;
    int best_score = -1;
    for (const Row& row : it->second) {
        if (row.gender && (!ctx.gender || *row.gender != *ctx.gender)) continue;
        if (row.number && (!ctx.number || *row.number != *ctx.number)) continue;
        int score = (row.gender ? 2 : 0) + (row.number ? 1 : 0);
        if (score > best_score) {
            best = &row;
            best_score = score;
        }
    }
    if (!best) {
        auto show = [](auto v, const char* names[]) {
            return v ? std::string(names[static_cast<int>(*v)]) : std::string("-");
        };
        static const char* genders[] = {"m", "f", "n"};
        static const char* numbers[] = {"sg", "pl"};
        throw CoverageError("no " + language_ + " realization for key " + notation +
                            " with gender=" + show(ctx.gender, genders) +
                            " number=" + show(ctx.number, numbers));
    }
    return best->surface;
}

} // namespace pucci
