#include "irth/dataset.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace irth {

using nlohmann::json;

namespace {

const json* pick(const json& j, std::initializer_list<const char*> keys) {
    for (const char* k : keys)
        if (j.contains(k)) return &j.at(k);
    return nullptr;
}

DatasetEntry entry_from_json(const json& j, size_t line) {
    if (!j.is_object())
        throw DatasetError("record is not an object");
    DatasetEntry e;
    if (const json* id = pick(j, {"case_id", "id"})) {
        if (id->is_string()) e.case_id = id->get<std::string>();
        else e.case_id = id->dump();
    } else {
        e.case_id = "line-" + std::to_string(line);
    }
    if (const json* q = pick(j, {"question", "text"}); q && q->is_string())
        e.question = q->get<std::string>();
    if (const json* g = pick(j, {"answer", "gold"}); g && g->is_object())
        e.gold = record_from_json(*g);
    if (const json* p = pick(j, {"prediction", "output", "response"})) {
        if (p->is_string()) e.prediction = p->get<std::string>();
        else if (p->is_object()) e.prediction = p->dump();
    }
    return e;
}

}  // namespace

Dataset load_dataset(std::istream& in, const std::string& origin) {
    Dataset ds;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string stripped = line;
        if (!stripped.empty() && stripped.back() == '\r') stripped.pop_back();
        bool blank = stripped.find_first_not_of(" \t") == std::string::npos;
        if (blank) continue;
        try {
            ds.entries.push_back(entry_from_json(json::parse(stripped), lineno));
        } catch (const std::exception& e) {
            ds.errors.push_back({lineno, e.what()});
        }
    }
    if (ds.entries.empty()) {
        std::string detail = origin + ": no valid records";
        if (!ds.errors.empty())
            detail += " (" + std::to_string(ds.errors.size()) + " malformed lines)";
        throw DatasetError(detail);
    }
    return ds;
}

Dataset load_dataset(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DatasetError("cannot open " + path);
    return load_dataset(in, path);
}

std::string entry_to_line(const DatasetEntry& e) {
    json j;
    j["case_id"] = e.case_id;
    if (!e.question.empty()) j["question"] = e.question;
    if (e.gold) j["answer"] = to_json(*e.gold);
    if (e.prediction) j["prediction"] = *e.prediction;
    return j.dump();
}

}  // namespace irth
