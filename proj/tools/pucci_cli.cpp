// pucci_cli.cpp - command line front end and reproduction pipeline
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pucci/corpus.hpp"
#include "pucci/decoder.hpp"
#include "pucci/diffalign.hpp"
#include "pucci/encoder.hpp"
#include "pucci/errors.hpp"
#include "pucci/evalmetrics.hpp"

namespace {

std::string default_data_dir() {
    if (const char* env = std::getenv("PUCCI_DATA_DIR")) return env;
#ifdef PUCCI_DEFAULT_DATA_DIR
    return PUCCI_DEFAULT_DATA_DIR;
#else
    return "data";
#endif
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw pucci::LookupError("cannot open file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    return text;
}

// A --in/--a/--candidate value is a fixture id first, then a file path.
std::string resolve_text(const pucci::CorpusRegistry& corpus, const std::string& ref) {
    if (corpus.has(ref)) return corpus.fixture(ref).text;
    return read_file(ref);
}

std::string fmt(double v, int prec = 2) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(prec) << v;
    return s.str();
}

void print_bleu(const pucci::BleuScore& b) {
    std::cout << "metric=bleu score=" << fmt(b.score) << " bp=" << fmt(b.brevity_penalty, 4)
              << " p1=" << fmt(100 * b.ngram_precisions[0])
              << " p2=" << fmt(100 * b.ngram_precisions[1])
              << " p3=" << fmt(100 * b.ngram_precisions[2])
              << " p4=" << fmt(100 * b.ngram_precisions[3])
              << " candidate_len=" << b.candidate_length
              << " reference_len=" << b.reference_length << "\n";
}

void print_chrf(const pucci::ChrfScore& c) {
    std::cout << "metric=chrf score=" << fmt(c.score);
    for (int n = 0; n < 6; ++n)
        std::cout << " p" << n + 1 << "=" << fmt(100 * c.precisions[n]);
    std::cout << "\n";
}

void print_meteor(const pucci::MeteorScore& m) {
    std::cout << "metric=meteor score=" << fmt(m.score) << " precision="
              << fmt(100 * m.precision) << " recall=" << fmt(100 * m.recall)
              << " fmean=" << fmt(m.fmean, 4) << " penalty=" << fmt(m.fragmentation_penalty, 4)
              << " matches=" << m.matches << " chunks=" << m.chunks << "\n";
}

struct Check {
    std::string name;
    bool pass;
    std::string detail;
};

int run_reproduce(const std::string& data_dir) {
    using namespace pucci;
    CorpusRegistry corpus = CorpusRegistry::load(data_dir);
    Engine engine = Engine::load(data_dir);
    std::vector<Check> checks;
    auto check = [&](const std::string& name, bool pass, const std::string& detail) {
        checks.push_back({name, pass, detail});
    };

    std::cout << "# (a) engine translation of dante_it vs pucci_fr_1931\n";
    const std::string& source = corpus.fixture("dante_it").text;
    const std::string& reference = corpus.fixture("pucci_fr_1931").text;
    std::string engine_fr = translate(source, engine);
    std::cout << engine_fr << "\n";
    ChrfScore engine_chrf = chrf(engine_fr, reference);
    DiffReport engine_diff = word_diff(engine_fr, reference);
    int engine_hunks = engine_diff.removals + engine_diff.additions;
    std::cout << "engine chrf=" << fmt(engine_chrf.score)
              << " removals=" << engine_diff.removals
              << " additions=" << engine_diff.additions << " total=" << engine_hunks
              << "\n";
    check("engine chrf >= 70", engine_chrf.score >= 70.0, fmt(engine_chrf.score));
    check("engine diff hunks <= 50", engine_hunks <= 50, std::to_string(engine_hunks));

    std::cout << "\n# (b) text-reproducible diff comparisons\n";
    for (const ComparisonCount& cmp : published_comparisons()) {
        if (cmp.a.empty() || cmp.b.empty()) continue;
        DiffReport d =
            word_diff(corpus.fixture(cmp.a).text, corpus.fixture(cmp.b).text);
        bool within = std::abs(d.removals - cmp.removals) <= 6 &&
                      std::abs(d.additions - cmp.additions) <= 6;
        std::cout << "diff item=" << cmp.item << " a=" << cmp.a << " b=" << cmp.b
                  << " removals=" << d.removals << " additions=" << d.additions
                  << " published=" << cmp.removals << "/" << cmp.additions
                  << " within=" << (within ? "yes" : "no") << "\n";
        check("diff item " + std::to_string(cmp.item) + " within +/-6", within,
              std::to_string(d.removals) + "/" + std::to_string(d.additions) + " vs " +
                  std::to_string(cmp.removals) + "/" + std::to_string(cmp.additions));
    }

    std::cout << "\n# (c) metric table vs pucci_fr_1931\n";
    struct Row {
        const char* id;
        double bleu_t, bleu_tol, chrf_t, meteor_t;
    };
    const Row rows[] = {
        {"godefroy_1901", 12.47, 6.0, 63.81, 56.76},
        {"fardel_1898", 17.34, 6.0, 66.87, 59.85},
        {"cochin_1905", 46.23, 8.0, 75.31, 78.43},
        {"gpt5_nmt", 67.45, 8.0, 85.60, 82.62},
    };
    std::vector<MetricScores> scores;
    for (const Row& row : rows) {
        MetricScores s = score_all(corpus.fixture(row.id).text, reference);
        scores.push_back(s);
        std::cout << "score candidate=" << row.id << " bleu=" << fmt(s.bleu.score)
                  << " chrf=" << fmt(s.chrf.score) << " meteor=" << fmt(s.meteor.score)
                  << " chrf_p1=" << fmt(100 * s.chrf.precisions[0])
                  << " chrf_p6=" << fmt(100 * s.chrf.precisions[5])
                  << " meteor_precision=" << fmt(100 * s.meteor.precision) << "\n";
        check(std::string(row.id) + " bleu band",
              std::abs(s.bleu.score - row.bleu_t) <= row.bleu_tol,
              fmt(s.bleu.score) + " vs " + fmt(row.bleu_t) + "+/-" + fmt(row.bleu_tol, 0));
        check(std::string(row.id) + " chrf band", std::abs(s.chrf.score - row.chrf_t) <= 6.0,
              fmt(s.chrf.score) + " vs " + fmt(row.chrf_t) + "+/-6");
        check(std::string(row.id) + " meteor band",
              std::abs(s.meteor.score - row.meteor_t) <= 8.0,
              fmt(s.meteor.score) + " vs " + fmt(row.meteor_t) + "+/-8");
    }
    const char* metric_names[] = {"bleu", "chrf", "meteor"};
    for (int m = 0; m < 3; ++m) {
        auto value = [&](size_t i) {
            return m == 0 ? scores[i].bleu.score
                          : m == 1 ? scores[i].chrf.score : scores[i].meteor.score;
        };
        bool ok = value(0) < value(1) && value(1) < value(2) && value(2) < value(3);
        check(std::string(metric_names[m]) + " ordering godefroy<fardel<cochin<gpt5", ok,
              fmt(value(0)) + " " + fmt(value(1)) + " " + fmt(value(2)) + " " +
                  fmt(value(3)));
    }

    std::cout << "\n# (d) group statistics and effect size\n";
    std::vector<std::vector<std::pair<int, int>>> groups(2);
    std::vector<std::vector<double>> value_groups(2);
    for (const ComparisonCount& cmp : published_comparisons()) {
        int g = cmp.group == 1 ? 0 : 1;
        groups[g].push_back({cmp.removals, cmp.additions});
        value_groups[g].push_back(cmp.removals);
        value_groups[g].push_back(cmp.additions);
    }
    std::vector<double> means = group_stats(groups);
    double f_identity = cohens_f_from_eta_squared(0.077);
    double f_expected = std::sqrt(0.077 / 0.923);
    EffectSize published_effect = effect_size(value_groups);
    std::cout << "stats group1_mean=" << fmt(means[0]) << " group23_mean=" << fmt(means[1])
              << " eta2_published_arrangement=" << fmt(published_effect.eta_squared, 4)
              << " cohens_f=" << fmt(published_effect.cohens_f, 4)
              << " f_from_eta_0.077=" << fmt(f_identity, 4) << "\n";
    check("group 1 mean = 21.33", fmt(means[0]) == "21.33", fmt(means[0]));
    check("groups 2-3 mean = 23.67", fmt(means[1]) == "23.67", fmt(means[1]));
    check("effect-size identity to 1e-4", std::abs(f_identity - f_expected) <= 1e-4,
          fmt(f_identity, 5));
    check("cohens f rounds to 0.29", fmt(f_identity) == "0.29", fmt(f_identity));

    std::cout << "\n# per-check results\n";
    int failures = 0;
    for (const Check& c : checks) {
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << " (" << c.detail << ")\n";
        if (!c.pass) ++failures;
    }
    std::cout << "checks=" << checks.size() << " failures=" << failures << "\n";
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rule-based Italian-French translator and evaluation harness"};
    app.require_subcommand(1);
    std::string data_dir = default_data_dir();
    app.add_option("--data-dir", data_dir, "data directory (keys, lexicon, rules, fixtures)");
    std::string lexicon_override, rules_override;
    app.add_option("--lexicon", lexicon_override, "override lexicon TSV path");
    app.add_option("--rules", rules_override, "override correction-rule TSV path");

    std::string in, a_ref, b_ref, candidate, reference, metric = "all", pair = "it-fr";
    bool show_hunks = false;

    CLI::App* cmd_encode = app.add_subcommand("encode", "source text to interlingua notation");
    cmd_encode->add_option("--in", in, "fixture id or file")->required();
    CLI::App* cmd_decode = app.add_subcommand("decode", "interlingua notation to French");
    cmd_decode->add_option("--in", in, "fixture id or file")->required();
    CLI::App* cmd_translate = app.add_subcommand("translate", "full pipeline");
    cmd_translate->add_option("--in", in, "fixture id or file")->required();
    cmd_translate->add_option("--pair", pair, "language pair (it-fr)");
    CLI::App* cmd_diff = app.add_subcommand("diff", "word-level diff hunk counts");
    cmd_diff->add_option("--a", a_ref, "fixture id or file")->required();
    cmd_diff->add_option("--b", b_ref, "fixture id or file")->required();
    cmd_diff->add_flag("--hunks", show_hunks, "list aligned hunks");
    CLI::App* cmd_score = app.add_subcommand("score", "BLEU/chrF/METEOR");
    cmd_score->add_option("--candidate", candidate, "fixture id or file")->required();
    cmd_score->add_option("--reference", reference, "fixture id or file")->required();
    cmd_score->add_option("--metric", metric, "bleu|chrf|meteor|all");
    CLI::App* cmd_stats =
        app.add_subcommand("stats", "group means and effect size of published counts");
    CLI::App* cmd_repro =
        app.add_subcommand("reproduce", "regenerate the quantitative tables");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        auto load_engine = [&] {
            pucci::Engine e = pucci::Engine::load(data_dir);
            if (!lexicon_override.empty()) e.lexicon = pucci::Lexicon::load(lexicon_override);
            if (!rules_override.empty())
                e.corrections = pucci::load_correction_rules(rules_override);
            return e;
        };
        if (*cmd_encode) {
            pucci::CorpusRegistry corpus = pucci::CorpusRegistry::load(data_dir);
            pucci::Engine engine = load_engine();
            std::string text = resolve_text(corpus, in);
            std::string simplified = pucci::simplify(text, engine.simplification);
            std::cout << pucci::render_stream(pucci::encode(simplified, engine.lexicon))
                      << "\n";
        } else if (*cmd_decode) {
            pucci::CorpusRegistry corpus = pucci::CorpusRegistry::load(data_dir);
            pucci::Engine engine = load_engine();
            pucci::EncodedStream stream = pucci::parse_stream(resolve_text(corpus, in));
            auto draft = pucci::realize(stream, engine.target_keys, engine.lexicon);
            draft = pucci::correct_syntax(std::move(draft), engine.corrections);
            draft = pucci::correct_morphology(std::move(draft), engine.corrections,
                                              engine.lexicon);
            std::cout << pucci::apply_differential(std::move(draft), engine.corrections)
                      << "\n";
        } else if (*cmd_translate) {
            if (pair != "it-fr") {
                std::cerr << "unsupported pair '" << pair << "'\n";
                return 2;
            }
            pucci::CorpusRegistry corpus = pucci::CorpusRegistry::load(data_dir);
            pucci::Engine engine = load_engine();
            std::cout << pucci::translate(resolve_text(corpus, in), engine) << "\n";
        } else if (*cmd_diff) {
            pucci::CorpusRegistry corpus = pucci::CorpusRegistry::load(data_dir);
            pucci::DiffReport d = pucci::word_diff(resolve_text(corpus, a_ref),
                                                   resolve_text(corpus, b_ref));
            std::cout << "removals=" << d.removals << " additions=" << d.additions << "\n";
            if (show_hunks) {
                for (const auto& [sa, sb] : d.hunks)
                    std::cout << "hunk a[" << sa.begin << "," << sa.end << ") b[" << sb.begin
                              << "," << sb.end << ")\n";
            }
        } else if (*cmd_score) {
            pucci::CorpusRegistry corpus = pucci::CorpusRegistry::load(data_dir);
            std::string cand = resolve_text(corpus, candidate);
            std::string ref = resolve_text(corpus, reference);
            if (metric == "bleu" || metric == "all") print_bleu(pucci::bleu(cand, ref));
            if (metric == "chrf" || metric == "all") print_chrf(pucci::chrf(cand, ref));
            if (metric == "meteor" || metric == "all") print_meteor(pucci::meteor(cand, ref));
            if (metric != "bleu" && metric != "chrf" && metric != "meteor" &&
                metric != "all") {
                std::cerr << "unknown metric '" << metric << "'\n";
                return 2;
            }
        } else if (*cmd_stats) {
            std::vector<std::vector<std::pair<int, int>>> groups(2);
            std::vector<std::vector<double>> by_group(3);
            for (const pucci::ComparisonCount& c : pucci::published_comparisons()) {
                groups[c.group == 1 ? 0 : 1].push_back({c.removals, c.additions});
                by_group[c.group - 1].push_back(c.removals);
                by_group[c.group - 1].push_back(c.additions);
            }
            std::vector<double> means = pucci::group_stats(groups);
            std::cout << "group1_mean=" << fmt(means[0]) << " group23_mean=" << fmt(means[1])
                      << "\n";
            pucci::EffectSize two = pucci::effect_size(
                {by_group[0],
                 [&] {
                     std::vector<double> merged = by_group[1];
                     merged.insert(merged.end(), by_group[2].begin(), by_group[2].end());
                     return merged;
                 }()});
            pucci::EffectSize three = pucci::effect_size(by_group);
            std::cout << "arrangement=two_groups eta2=" << fmt(two.eta_squared, 4)
                      << " cohens_f=" << fmt(two.cohens_f, 4) << "\n";
            std::cout << "arrangement=three_groups eta2=" << fmt(three.eta_squared, 4)
                      << " cohens_f=" << fmt(three.cohens_f, 4) << "\n";
            std::cout << "identity f(eta2=0.077)="
                      << fmt(pucci::cohens_f_from_eta_squared(0.077), 4) << "\n";
        } else if (*cmd_repro) {
            return run_reproduce(data_dir);
        }
    } catch (const pucci::LookupError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const pucci::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
