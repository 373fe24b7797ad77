#include "irth/taxonomy.hpp"

#include "irth/arabic.hpp"
#include "irth/embedded_data.hpp"

#include <sstream>

namespace irth {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    size_t pos = 0;
    while (true) {
        size_t sep = line.find("::", pos);
        if (sep == std::string::npos) {
            out.push_back(trim(line.substr(pos)));
            break;
        }
        out.push_back(trim(line.substr(pos, sep - pos)));
        pos = sep + 2;
    }
    return out;
}

}  // namespace

Taxonomy Taxonomy::parse(const std::string& file_text) {
    Taxonomy t;
    std::istringstream in(file_text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        auto f = split_fields(line);
        auto bad = [&](const std::string& why) {
            throw TaxonomyError("heirs table line " + std::to_string(lineno) + ": " + why);
        };
        if (f[0] == "heir") {
            if (f.size() < 5) bad("expected heir :: label :: gender :: class :: rank [:: note]");
            HeirCategory c;
            c.id = static_cast<int>(t.categories_.size());
            c.label = f[1];
            if (f[2] == "male") c.gender = Gender::male;
            else if (f[2] == "female") c.gender = Gender::female;
            else bad("unknown gender " + f[2]);
            if (f[3] == "spouse") c.kinship = Kinship::spouse;
            else if (f[3] == "ascendant") c.kinship = Kinship::ascendant;
            else if (f[3] == "descendant") c.kinship = Kinship::descendant;
            else if (f[3] == "collateral") c.kinship = Kinship::collateral;
            else bad("unknown kinship class " + f[3]);
            if (f[4] != "-") {
                c.agnate_rank = std::stoi(f[4]);
                c.residuary_capable = true;
            }
            if (f.size() > 5) c.note = f[5];
            std::string key = match_key(c.label);
            if (t.index_.count(key)) bad("duplicate label " + c.label);
            t.index_[key] = c.id;
            t.categories_.push_back(std::move(c));
        } else if (f[0] == "alias") {
            if (f.size() < 3) bad("expected alias :: variant :: canonical [:: note]");
            std::string canon = match_key(f[2]);
            auto it = t.index_.find(canon);
            if (it == t.index_.end()) bad("alias target not declared yet: " + f[2]);
            std::string key = match_key(f[1]);
            if (t.index_.count(key)) bad("duplicate variant " + f[1]);
            t.index_[key] = it->second;
        } else {
            bad("unknown record kind " + f[0]);
        }
    }
    if (t.categories_.empty())
        throw TaxonomyError("heirs table: no categories");
    return t;
}

const Taxonomy& Taxonomy::standard() {
    static const Taxonomy t = parse(detail::kHeirsData);
    return t;
}

const HeirCategory* Taxonomy::find(const std::string& raw) const {
    auto it = index_.find(match_key(raw));
    if (it == index_.end()) return nullptr;
    return &categories_[it->second];
}

const HeirCategory& Taxonomy::resolve(const std::string& raw) const {
    const HeirCategory* c = find(raw);
    if (!c) throw TaxonomyError("unknown heir label: " + raw);
    return *c;
}

bool is_male_descendant(const HeirCategory& c) {
    return c.kinship == Kinship::descendant && c.gender == Gender::male;
}

bool is_inheriting_descendant(const HeirCategory& c) {
    return c.kinship == Kinship::descendant;
}

bool is_grandmother(const HeirCategory& c) {
    return c.kinship == Kinship::ascendant && c.gender == Gender::female && c.label != "أم";
}

int grandmother_generation(const HeirCategory& c) {
    if (!is_grandmother(c)) return 0;
    return (c.label == "أم الأم" || c.label == "أم الأب") ? 1 : 2;
}

bool is_paternal_line_grandmother(const HeirCategory& c) {
    return c.label == "أم الأب" || c.label == "أم أم الأب" || c.label == "أم أب الأب";
}

bool is_sibling(const HeirCategory& c) {
    return c.label == "أخ شقيق" || c.label == "أخت شقيقة" || c.label == "أخ لأب" ||
           c.label == "أخت لأب" || c.label == "أخ لأم" || c.label == "أخت لأم";
}

}  // namespace irth
