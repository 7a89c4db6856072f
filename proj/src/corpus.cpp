#include "pucci/corpus.hpp"

#include <fstream>
#include <sstream>

#include "pucci/errors.hpp"

namespace pucci {

CorpusRegistry CorpusRegistry::load(const std::string& data_dir) {
    const std::string manifest = data_dir + "/fixtures.tsv";
    std::ifstream in(manifest);
    if (!in) throw LoadError("cannot open fixture manifest: " + manifest);
    CorpusRegistry reg;
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
            throw LoadError("fixture manifest " + manifest + ":" + std::to_string(lineno) +
                            ": expected 5 tab-separated fields");
        Fixture fx;
        fx.id = fields[0];
        fx.language = fields[2];
        if (fields[3] == "source") fx.role = FixtureRole::Source;
        else if (fields[3] == "reference") fx.role = FixtureRole::Reference;
        else if (fields[3] == "candidate") fx.role = FixtureRole::Candidate;
        else if (fields[3] == "encoding") fx.role = FixtureRole::Encoding;
        else
            throw LoadError("fixture manifest " + manifest + ":" + std::to_string(lineno) +
                            ": bad role '" + fields[3] + "'");
        fx.provenance = fields[4];
        if (fx.provenance.empty())
            throw LoadError("fixture manifest " + manifest + ":" + std::to_string(lineno) +
                            ": empty provenance for '" + fx.id + "'");
        const std::string path = data_dir + "/" + fields[1];
        std::ifstream tf(path, std::ios::binary);
        if (!tf)
            throw LoadError("fixture manifest " + manifest + ":" + std::to_string(lineno) +
                            ": cannot open " + path);
        std::stringstream buf;
        buf << tf.rdbuf();
        fx.text = buf.str();
        while (!fx.text.empty() && (fx.text.back() == '\n' || fx.text.back() == '\r'))
            fx.text.pop_back();
        for (const Fixture& existing : reg.fixtures_)
            if (existing.id == fx.id)
                throw LoadError("fixture manifest " + manifest + ":" +
                                std::to_string(lineno) + ": duplicate id '" + fx.id + "'");
        reg.fixtures_.push_back(std::move(fx));
    }
    return reg;
}

bool CorpusRegistry::has(const std::string& id) const {
    for (const Fixture& f : fixtures_)
        if (f.id == id) return true;
    return false;
}

const Fixture& CorpusRegistry::fixture(const std::string& id) const {
    for (const Fixture& f : fixtures_)
        if (f.id == id) return f;
    std::string known;
    for (const Fixture& f : fixtures_) {
        if (!known.empty()) known += ", ";
        known += f.id;
    }
    throw LookupError("unknown fixture '" + id + "'; available: " + known);
}

std::vector<std::string> CorpusRegistry::ids() const {
    std::vector<std::string> out;
    for (const Fixture& f : fixtures_) out.push_back(f.id);
    return out;
}

const std::vector<ComparisonCount>& published_comparisons() {
    static const std::vector<ComparisonCount> counts = {
        {1, 1, "", "", 23, 20},                              // ChatGPT NMT vs Claude NMT
        {2, 1, "", "", 21, 19},                              // ChatGPT NMT vs Grok NMT
        {3, 1, "", "", 22, 23},                              // Claude NMT vs Grok NMT
        {4, 2, "chatgpt_pucci", "claude_pucci", 30, 25},
        {5, 2, "chatgpt_pucci", "grok_pucci", 27, 23},
        {6, 2, "claude_pucci", "grok_pucci", 25, 21},
        {7, 2, "chatgpt_pucci", "", 20, 22},                 // vs ChatGPT NMT
        {8, 2, "claude_pucci", "", 20, 19},                  // vs Claude NMT
        {9, 2, "grok_pucci", "", 24, 28},                    // vs Grok NMT
        {10, 3, "pucci_fr_1931", "chatgpt_pucci", 20, 20},
        {11, 3, "pucci_fr_1931", "claude_pucci", 24, 23},
        {12, 3, "pucci_fr_1931", "grok_pucci", 24, 24},
        {13, 3, "pucci_fr_1931", "", 25, 27},                // vs ChatGPT NMT
        {14, 3, "pucci_fr_1931", "", 25, 26},                // vs Claude NMT
        {15, 3, "pucci_fr_1931", "", 24, 22},                // vs Grok NMT
    };
    return counts;
}

} // namespace pucci
