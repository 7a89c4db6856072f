// corpus.hpp - fixture registry for the validation corpus
#pragma once

#include <string>
#include <vector>

namespace pucci {

enum class FixtureRole { Source, Reference, Candidate, Encoding };

struct Fixture {
    std::string id;
    std::string language;
    FixtureRole role{};
    std::string text;
    std::string provenance;
};

class CorpusRegistry {
  public:
    // Reads the manifest (fixtures.tsv: id, path, language, role,
    // provenance) and every fixture file under the data directory.
    static CorpusRegistry load(const std::string& data_dir);

    // Exact stored text; throws LookupError listing known ids when missing.
    const Fixture& fixture(const std::string& id) const;
    bool has(const std::string& id) const;
    std::vector<std::string> ids() const;
    const std::vector<Fixture>& all() const { return fixtures_; }

  private:
    std::vector<Fixture> fixtures_;
};

// Published word-diff counts of the fifteen pairwise comparisons the study
// reports, grouped 1-3. Used as statistical input by the stats harness.
struct ComparisonCount {
    int item;            // 1..15
    int group;           // 1..3
    std::string a, b;    // fixture ids; empty when the text is not printed
    int removals, additions;
};

const std::vector<ComparisonCount>& published_comparisons();

} // namespace pucci
