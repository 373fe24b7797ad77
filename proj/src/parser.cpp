#include "irth/parser.hpp"

#include "irth/arabic.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace irth {

namespace {

// Number words 1-10 in the agreement forms this corpus uses.
const std::map<std::string, long long>& number_words() {
    static const std::map<std::string, long long> words = {
        {"واحد", 1},  {"واحدة", 1},
        {"اثنان", 2}, {"اثنين", 2}, {"اثنتان", 2}, {"اثنتين", 2},
        {"ثلاثة", 3}, {"ثلاث", 3},
        {"أربعة", 4}, {"أربع", 4},  {"اربعة", 4},  {"اربع", 4},
        {"خمسة", 5},  {"خمس", 5},
        {"ستة", 6},   {"ست", 6},
        {"سبعة", 7},  {"سبع", 7},
        {"ثمانية", 8}, {"ثماني", 8}, {"ثمان", 8},
        {"تسعة", 9},  {"تسع", 9},
        {"عشرة", 10}, {"عشر", 10},
    };
    return words;
}

// Word-level plural -> singular, for number-noun constructions.
const std::map<std::string, std::string>& plural_words() {
    static const std::map<std::string, std::string> words = {
        {"أبناء", "ابن"},   {"ابناء", "ابن"},
        {"بنات", "بنت"},
        {"آباء", "أب"},     {"اباء", "أب"},
        {"أمهات", "أم"},    {"امهات", "أم"},
        {"إخوة", "أخ"},     {"اخوة", "أخ"},
        {"أخوات", "أخت"},   {"اخوات", "أخت"},
        {"أعمام", "عم"},    {"اعمام", "عم"},
        {"زوجات", "زوجة"},
        {"جدات", "جدة"},
        {"شقيقات", "شقيقة"}, {"أشقاء", "شقيق"}, {"اشقاء", "شقيق"},
        {"شقائق", "شقيقة"},
    };
    return words;
}

bool is_ascii_digits(const std::string& w) {
    if (w.empty()) return false;
    return std::all_of(w.begin(), w.end(),
                       [](unsigned char c) { return std::isdigit(c); });
}

bool starts_with(const std::string& s, const std::string& prefix) {
    return s.size() >= prefix.size() && s.compare(0, prefix.size(), prefix) == 0;
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Singular candidates for a word in dual form; empty when the word does
// not look dual.
std::vector<std::string> dual_candidates(const std::string& w) {
    std::vector<std::string> out;
    if (w == "أخوين" || w == "اخوين" || w == "أخوان" || w == "اخوان") {
        out.push_back("أخ");
        return out;
    }
    for (const std::string& suffix : {std::string("ين"), std::string("ان")}) {
        if (!ends_with(w, suffix)) continue;
        std::string base = w.substr(0, w.size() - suffix.size());
        if (base.size() < 2) continue;
        out.push_back(base);            // ابنين -> ابن, بنتين -> بنت
        out.push_back(base + "ة");      // rare, defensive for ta-less stems
        if (ends_with(base, "ت"))       // زوجتين -> زوجة, شقيقتين -> شقيقة
            out.push_back(base.substr(0, base.size() - std::string("ت").size()) + "ة");
        break;
    }
    return out;
}

std::string join(const std::vector<std::string>& words, size_t from) {
    std::string out;
    for (size_t i = from; i < words.size(); ++i) {
        if (!out.empty()) out += ' ';
        out += words[i];
    }
    return out;
}

// Tries the phrase as-is, then with plural words folded to singulars, then
// with dual morphology unfolded. Returns the category plus the count factor
// dual morphology contributes.
struct PhraseResolution {
    const HeirCategory* category = nullptr;
    bool dual = false;
};

std::optional<PhraseResolution> resolve_phrase(const std::vector<std::string>& words,
                                               size_t from, const Taxonomy& tax) {
    if (from >= words.size()) return std::nullopt;
    if (const HeirCategory* c = tax.find(join(words, from)))
        return PhraseResolution{c, false};

    std::vector<std::string> folded(words.begin() + from, words.end());
    bool changed = false;
    for (auto& w : folded) {
        auto it = plural_words().find(w);
        if (it != plural_words().end()) {
            w = it->second;
            changed = true;
        }
    }
    if (changed)
        if (const HeirCategory* c = tax.find(join(folded, 0)))
            return PhraseResolution{c, false};

    // Dual: unfold each word that admits a dual reading; the combination is
    // searched depth-first (phrases are at most a handful of words).
    std::vector<std::vector<std::string>> options;
    bool any_dual = false;
    for (size_t i = from; i < words.size(); ++i) {
        std::vector<std::string> opts = {words[i]};
        auto duals = dual_candidates(words[i]);
        if (i == from && !duals.empty()) {
            opts = duals;   // the head noun must be dual for a dual reading
            any_dual = true;
        } else {
            opts.insert(opts.end(), duals.begin(), duals.end());
        }
        options.push_back(std::move(opts));
    }
    if (!any_dual) return std::nullopt;
    std::vector<std::string> pick(options.size());
    const HeirCategory* found = nullptr;
    auto search = [&](auto&& self, size_t idx) -> void {
        if (found) return;
        if (idx == options.size()) {
            std::string phrase = join(pick, 0);
            if (const HeirCategory* c = tax.find(phrase)) found = c;
            return;
        }
        for (const auto& opt : options[idx]) {
            pick[idx] = opt;
            self(self, idx + 1);
            if (found) return;
        }
    };
    search(search, 0);
    if (found) return PhraseResolution{found, true};
    return std::nullopt;
}

struct Deceased {
    size_t end;   // offset just past the marker
    DeceasedGender gender;
};

std::optional<Deceased> find_marker(const std::string& t) {
    struct Marker {
        const char* text;
        DeceasedGender gender;
    };
    // Feminine forms first: "مات وترك" is a prefix of neither but keeps
    // the longest-match intent explicit.
    static const Marker markers[] = {
        {"ماتت وتركت", DeceasedGender::female},
        {"توفيت وتركت", DeceasedGender::female},
        {"مات وترك", DeceasedGender::male},
        {"توفي وترك", DeceasedGender::male},
    };
    for (const auto& m : markers) {
        size_t pos = t.find(m.text);
        if (pos != std::string::npos)
            return Deceased{pos + std::string(m.text).size(), m.gender};
    }
    return std::nullopt;
}

// Words that may start an enumeration item, for deciding whether a
// token like "وزوجة" is the conjunction glued to the next item.
const std::set<std::string>& item_start_words(const Taxonomy& tax) {
    static std::set<std::string> words = [&] {
        std::set<std::string> s;
        for (const auto& c : tax.all()) {
            auto toks = tokenize(match_key(c.label));
            if (!toks.empty()) s.insert(toks[0]);
        }
        for (const auto& [w, v] : number_words()) s.insert(match_key(w));
        for (const auto& [w, v] : plural_words()) s.insert(match_key(w));
        return s;
    }();
    return words;
}

}  // namespace

const HeirCategory& normalize_label(const std::string& raw, const Taxonomy& tax) {
    const HeirCategory* c = tax.find(raw);
    if (!c) throw ParseError("unresolvable heir label: " + trim(raw));
    return *c;
}

long long parse_count(const std::string& phrase, const Taxonomy& tax) {
    auto words = tokenize(match_key(phrase));
    if (words.empty()) throw ParseError("empty count expression");
    if (is_ascii_digits(words[0])) {
        long long n = std::stoll(words[0]);
        if (n < 1) throw ParseError("count must be positive: " + words[0]);
        return n;
    }
    auto it = number_words().find(words[0]);
    if (it != number_words().end()) return it->second;
    if (auto res = resolve_phrase(words, 0, tax); res && res->dual) return 2;
    return 1;
}

CaseScenario parse_case(const std::string& text, const Taxonomy& tax) {
    std::string t = match_key(text);
    auto marker = find_marker(t);
    if (!marker)
        throw ParseError("missing enumeration segment (no deceased marker)");

    std::string rest = t.substr(marker->end);
    // Enumeration runs until the sentence ends or the question begins.
    for (const std::string& stop : {std::string("."), std::string("؟"),
                                    std::string("?"), std::string("ما هو")}) {
        size_t pos = rest.find(stop);
        if (pos != std::string::npos) rest = rest.substr(0, pos);
    }
    rest = trim(rest);
    if (!rest.empty() && rest[0] == ':') rest = trim(rest.substr(1));
    if (rest.empty())
        throw ParseError("missing enumeration segment (nothing after the marker)");

    // Split into items on the conjunction.
    std::vector<std::vector<std::string>> items(1);
    for (const std::string& tok : tokenize(rest)) {
        if (tok == "و") {
            if (!items.back().empty()) items.emplace_back();
            continue;
        }
        if (starts_with(tok, "و") && !items.back().empty()) {
            std::string stripped = tok.substr(std::string("و").size());
            bool full_known = item_start_words(tax).count(tok) > 0;
            bool stripped_known =
                item_start_words(tax).count(stripped) > 0 || is_ascii_digits(stripped);
            if (!full_known && stripped_known) {
                items.emplace_back();
                items.back().push_back(stripped);
                continue;
            }
        }
        items.back().push_back(tok);
    }
    if (!items.empty() && items.back().empty()) items.pop_back();
    if (items.empty())
        throw ParseError("missing enumeration segment (no items)");

    CaseScenario scenario;
    scenario.source_text = text;
    scenario.deceased = marker->gender;
    for (const auto& item : items) {
        long long count = 1;
        size_t from = 0;
        if (is_ascii_digits(item[0])) {
            count = std::stoll(item[0]);
            from = 1;
        } else if (auto it = number_words().find(item[0]); it != number_words().end()) {
            count = it->second;
            from = 1;
        }
        auto res = resolve_phrase(item, from, tax);
        if (!res)
            throw ParseError("unresolvable noun phrase: " + join(item, from));
        if (res->dual) count *= 2;
        if (count < 1) throw ParseError("count must be positive in: " + join(item, 0));
        auto existing = std::find_if(
            scenario.mentions.begin(), scenario.mentions.end(),
            [&](const RelativeMention& m) { return m.label == res->category->label; });
        if (existing != scenario.mentions.end())
            existing->count += count;
        else
            scenario.mentions.push_back({res->category->label, count});
    }
    return scenario;
}

std::string render_enumeration(const CaseScenario& scenario) {
    std::ostringstream out;
    out << (scenario.deceased == DeceasedGender::female ? "ماتت وتركت: " : "مات وترك: ");
    for (size_t i = 0; i < scenario.mentions.size(); ++i) {
        if (i) out << " و ";
        const auto& m = scenario.mentions[i];
        if (m.count > 1) out << m.count << ' ';
        out << m.label;
    }
    out << ". ما هو نصيب كل وريث؟";
    return out.str();
}

}  // namespace irth
