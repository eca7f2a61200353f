#include "abstain/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "abstain/record.hpp"
#include "abstain/text.hpp"

namespace abstain {

Lexicon make_lexicon(std::vector<std::string> phrases, bool longest_first) {
    Lexicon lex;
    std::set<std::string> seen;
    for (std::string& phrase : phrases) {
        std::string normalized = text::normalize(phrase);
        if (normalized.empty()) continue;
        if (seen.insert(normalized).second)
            lex.phrases.push_back(std::move(normalized));
    }
    if (longest_first) {
        std::stable_sort(lex.phrases.begin(), lex.phrases.end(),
                         [](const std::string& a, const std::string& b) { return a.size() > b.size(); });
    }
    return lex;
}

Lexicon load_lexicon(const std::string& path, bool longest_first) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("", "cannot open lexicon file: " + path);
    std::vector<std::string> phrases;
    std::string line;
    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        phrases.push_back(line);
    }
    Lexicon lex = make_lexicon(std::move(phrases), longest_first);
    lex.source_path = path;
    return lex;
}

const Lexicon& default_hedge_lexicon() {
    static const Lexicon lex = make_lexicon(
        {"perhaps", "maybe", "possibly", "might", "could", "likely", "unlikely", "probably",
         "apparently", "seemingly", "roughly", "approximately", "somewhat", "i think", "i believe",
         "not sure", "uncertain", "unclear", "it seems", "presumably", "arguably"},
        /*longest_first=*/true);
    return lex;
}

const Lexicon& default_refusal_lexicon() {
    static const Lexicon lex = make_lexicon(
        {"i'm sorry", "i am sorry", "i cannot", "i can't", "as an ai", "i apologize",
         "it is not appropriate", "i'm not able to", "cannot assist", "cannot provide"},
        /*longest_first=*/false);
    return lex;
}

}  // namespace abstain
