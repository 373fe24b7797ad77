#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace irth {

enum class Gender { male, female };
enum class Kinship { spouse, ascendant, descendant, collateral };

struct HeirCategory {
    int id = -1;
    std::string label;       // canonical Arabic label
    Gender gender = Gender::male;
    Kinship kinship = Kinship::spouse;
    bool residuary_capable = false;
    int agnate_rank = -1;    // position in the 'asaba precedence chain, -1 if none
    std::string note;        // provenance of the entry

    bool operator==(const HeirCategory& o) const { return id == o.id; }
};

class TaxonomyError : public std::runtime_error {
public:
    explicit TaxonomyError(const std::string& what) : std::runtime_error(what) {}
};

/// The closed heir-category table plus the lexical-variant map.
/// Loaded from the line-oriented data asset (see data/heirs.txt).
class Taxonomy {
public:
    static Taxonomy parse(const std::string& file_text);

    /// The built-in table compiled into the binary.
    static const Taxonomy& standard();

    const std::vector<HeirCategory>& all() const { return categories_; }

    /// Lookup by canonical label or known variant, after matcher-level
    /// normalization (tatweel strip, ya fold, whitespace squeeze).
    const HeirCategory* find(const std::string& raw) const;

    /// Same, but throws TaxonomyError naming the raw string.
    const HeirCategory& resolve(const std::string& raw) const;

    const HeirCategory& by_id(int id) const { return categories_.at(id); }

    /// All match keys (canonical labels and variants) with their targets.
    const std::map<std::string, int>& index() const { return index_; }

private:
    std::vector<HeirCategory> categories_;
    std::map<std::string, int> index_;  // match_key -> id (canonicals + variants)
};

// Classification helpers used by the share and blocking machinery.
bool is_male_descendant(const HeirCategory& c);
bool is_inheriting_descendant(const HeirCategory& c);
bool is_grandmother(const HeirCategory& c);
int grandmother_generation(const HeirCategory& c);   // 1 = parent's mother, 2 = deeper
bool is_paternal_line_grandmother(const HeirCategory& c);
bool is_sibling(const HeirCategory& c);              // any of the six sibling kinds

}  // namespace irth
