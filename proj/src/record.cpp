#include "irth/record.hpp"

#include "irth/arabic.hpp"

#include <nlohmann/json.hpp>

namespace irth {

using nlohmann::json;

std::optional<Adjustment> parse_adjustment(const std::string& label) {
    std::string k = match_key(label);
    if (k == kAwlLabel) return Adjustment::awl;
    if (k == kRaddLabel) return Adjustment::radd;
    if (k == kNoneLabel) return Adjustment::none;
    return std::nullopt;
}

const std::string& adjustment_label(Adjustment a) {
    switch (a) {
        case Adjustment::awl: return kAwlLabel;
        case Adjustment::radd: return kRaddLabel;
        default: return kNoneLabel;
    }
}

ShareValue ShareValue::parse(const std::string& text) {
    std::string k = match_key(text);
    if (k == match_key(kResiduePhrase) || k == match_key(kResidueVariant))
        return residue();
    try {
        Fraction f = Fraction::parse(k);
        return of(std::move(f));
    } catch (const std::exception&) {
        return bad(text);
    }
}

std::string ShareValue::str() const {
    switch (kind) {
        case Kind::fraction: return fraction.str();
        case Kind::residue: return kResiduePhrase;
        default: return raw;
    }
}

std::optional<double> DistributionEntry::percent_value() const {
    std::string p = trim(percent);
    if (!p.empty() && p.back() == '%') p = trim(p.substr(0, p.size() - 1));
    if (!p.empty()) {
        try {
            size_t used = 0;
            double v = std::stod(p, &used);
            if (used == p.size()) return v;
        } catch (const std::exception&) {
        }
    }
    if (per_individual) return per_individual->to_double() * 100.0;
    return std::nullopt;
}

namespace {

const char* kHeirKey = "وريث";
const char* kCountKey = "عدد";
const char* kFractionKey = "كسر";
const char* kPercentKey = "نسبة";

json mention_to_json(const RelativeMention& m) {
    return json{{kHeirKey, m.label}, {kCountKey, m.count}};
}

long long read_count(const json& j) {
    if (j.is_number_integer()) return j.get<long long>();
    if (j.is_number()) return static_cast<long long>(j.get<double>());
    if (j.is_string()) {
        try {
            return std::stoll(j.get<std::string>());
        } catch (const std::exception&) {
        }
    }
    return 1;
}

RelativeMention mention_from_json(const json& j) {
    RelativeMention m;
    if (j.is_object()) {
        if (j.contains(kHeirKey) && j[kHeirKey].is_string())
            m.label = j[kHeirKey].get<std::string>();
        if (j.contains(kCountKey)) m.count = read_count(j[kCountKey]);
    } else if (j.is_string()) {
        m.label = j.get<std::string>();
    }
    return m;
}

std::string fraction_over_total(const Fraction& f, long long total) {
    // Render over the shared denominator when it divides evenly (4/27,
    // not 4/27 reduced away); fall back to the reduced form.
    if (total > 0 && f.denominator() != 0) {
        BigInt scaled = f.numerator() * total;
        if (scaled % f.denominator() == 0)
            return BigInt(scaled / f.denominator()).str() + "/" + std::to_string(total);
    }
    return f.str();
}

}  // namespace

json to_json(const SolutionRecord& r) {
    json j = json::object();
    if (!r.extra_json.empty()) {
        json extra = json::parse(r.extra_json, nullptr, false);
        if (extra.is_object()) j = extra;
    }
    j["heirs"] = json::array();
    for (const auto& m : r.heirs) j["heirs"].push_back(mention_to_json(m));
    j["blocked"] = json::array();
    for (const auto& m : r.blocked) j["blocked"].push_back(mention_to_json(m));
    j["shares"] = json::array();
    for (const auto& s : r.shares) {
        json e = mention_to_json(s.who);
        e[kFractionKey] = s.share.str();
        j["shares"].push_back(std::move(e));
    }
    j["awl_or_radd"] = r.awl_or_radd;
    json pt = json::object();
    pt["total_shares"] = r.post_tasil.total_shares;
    pt["distribution"] = json::array();
    for (const auto& d : r.post_tasil.distribution) {
        json e;
        e[kHeirKey] = d.label;
        e[kCountKey] = d.count;
        if (d.per_individual)
            e[kFractionKey] = fraction_over_total(*d.per_individual, r.post_tasil.total_shares);
        e[kPercentKey] = d.percent;
        pt["distribution"].push_back(std::move(e));
    }
    j["post_tasil"] = std::move(pt);
    return j;
}

SolutionRecord record_from_json(const json& j) {
    SolutionRecord r;
    if (!j.is_object()) return r;
    if (j.contains("heirs") && j["heirs"].is_array())
        for (const auto& e : j["heirs"]) r.heirs.push_back(mention_from_json(e));
    if (j.contains("blocked") && j["blocked"].is_array())
        for (const auto& e : j["blocked"]) r.blocked.push_back(mention_from_json(e));
    if (j.contains("shares") && j["shares"].is_array()) {
        for (const auto& e : j["shares"]) {
            ShareEntry s;
            s.who = mention_from_json(e);
            if (e.is_object() && e.contains(kFractionKey)) {
                const auto& f = e[kFractionKey];
                if (f.is_string())
                    s.share = ShareValue::parse(f.get<std::string>());
                else if (f.is_number())
                    s.share = ShareValue::bad(f.dump());
            } else {
                s.share = ShareValue::bad("");
            }
            r.shares.push_back(std::move(s));
        }
    }
    if (j.contains("awl_or_radd")) {
        const auto& a = j["awl_or_radd"];
        r.awl_or_radd = a.is_string() ? a.get<std::string>() : a.dump();
    }
    if (j.contains("post_tasil") && j["post_tasil"].is_object()) {
        const auto& pt = j["post_tasil"];
        if (pt.contains("total_shares"))
            r.post_tasil.total_shares = read_count(pt["total_shares"]);
        if (pt.contains("distribution") && pt["distribution"].is_array()) {
            for (const auto& e : pt["distribution"]) {
                DistributionEntry d;
                RelativeMention m = mention_from_json(e);
                d.label = m.label;
                d.count = m.count;
                if (e.is_object() && e.contains(kFractionKey) && e[kFractionKey].is_string()) {
                    ShareValue sv = ShareValue::parse(e[kFractionKey].get<std::string>());
                    if (sv.is_fraction()) d.per_individual = sv.fraction;
                }
                if (e.is_object() && e.contains(kPercentKey)) {
                    const auto& p = e[kPercentKey];
                    d.percent = p.is_string() ? p.get<std::string>() : p.dump();
                }
                r.post_tasil.distribution.push_back(std::move(d));
            }
        }
    }
    // Preserve unknown top-level keys.
    json extra = json::object();
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& k = it.key();
        if (k != "heirs" && k != "blocked" && k != "shares" && k != "awl_or_radd" &&
            k != "post_tasil")
            extra[k] = it.value();
    }
    if (!extra.empty()) r.extra_json = extra.dump();
    return r;
}

std::string to_json_string(const SolutionRecord& r) {
    return to_json(r).dump();
}

SolutionRecord record_from_json_string(const std::string& text) {
    return record_from_json(json::parse(text));
}

}  // namespace irth
