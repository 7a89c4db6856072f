// keytable.hpp - international key inventory and per-language realizations
#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pucci {

// The eleven tense/mood ideograms. Numbering is fixed:
//   ID1 infinitive, ID2 present indicative, ID3 imperfect, ID4 remote past,
//   ID5 future, ID6 present subjunctive, ID7 past subjunctive,
//   ID8 present participle, ID9 past participle, ID10 imperative,
//   ID11 conditional.
enum class TenseIdeogram {
    ID1 = 1, ID2, ID3, ID4, ID5, ID6, ID7, ID8, ID9, ID10, ID11
};

constexpr int kTenseCount = 11;

std::string tense_name(TenseIdeogram t);                 // "ID4"
std::optional<TenseIdeogram> parse_tense(std::string_view s);

enum class Gender { Masculine, Feminine, Neuter };
enum class Number { Singular, Plural };

enum class KeyCategory {
    Article,
    DemonstrativeNear,
    DemonstrativeFar,
    PersonalPronoun,
    Possessive,
    Relative,
    Conjunction,
    PluralMarker,
    GenderMarker,
    PersonalRelativeIndicator,
};

// One entry of the key charts. caseIndex runs 1..4 (base, genitive-slot,
// dative-slot, direct object). For pronouns the letter row decides person
// and, in the third person, gender; the 11..14 notation covers the second
// series of each person row (plural for persons 1-2, feminine for 3).
// The first-person possessive row is numbered as the chart prints it:
// case 1 = "del mio", case 2 = "al mio", case 3 = bare, unlike the other
// possessive rows which run base/genitive/dative/object.
struct GrammaticalKey {
    KeyCategory category{};
    std::optional<int> person;      // 1..3 (pronouns, possessives)
    std::optional<Number> number;   // pronouns: own number; possessives: owner
    std::optional<Gender> gender;   // third-person pronouns; agreement channel
    std::optional<int> case_index;  // 1..4

    bool operator==(const GrammaticalKey&) const = default;
};

// Case slots in encoder terms. Family-dependent mapping to notation digits.
enum class CaseSlot { Base, Genitive, Dative, Object };

// Notation digit for a case slot of a possessive family. `first_person_sg`
// selects the shifted M row.
int possessive_case_index(CaseSlot slot, bool first_person_sg);

GrammaticalKey parse_key_notation(std::string_view notation);
std::string print_key(const GrammaticalKey& key);

// All keys the canonical charts define (used by round-trip tests and
// coverage checks).
std::vector<GrammaticalKey> canonical_key_inventory();

struct AgreementContext {
    std::optional<Gender> gender;
    std::optional<Number> number;
    bool elide{false}; // resolved downstream by the differential stage
};

// Per-language surface realizations, loaded from a TSV file:
//   key_notation <TAB> language <TAB> gender <TAB> number <TAB> surface
// with '-' as "any" and '#' comments.
class KeyRealizationTable {
  public:
    static KeyRealizationTable load(const std::string& path, const std::string& language);

    // Returns the single surface form for (key, ctx); most specific row
    // wins, '-' rows match anything. Throws CoverageError when no row fits.
    const std::string& lookup(const GrammaticalKey& key, const AgreementContext& ctx) const;

    bool covers(const GrammaticalKey& key) const;
    const std::string& language() const { return language_; }
    size_t size() const { return rows_; }

  private:
    struct Row {
        std::optional<Gender> gender;
        std::optional<Number> number;
        std::string surface;
    };
    std::map<std::string, std::vector<Row>> cells_; // by printed notation
    std::string language_;
    size_t rows_{0};
};

} // namespace pucci
