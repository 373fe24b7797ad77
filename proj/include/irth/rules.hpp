#pragma once

#include "irth/fraction.hpp"
#include "irth/taxonomy.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace irth {

class RuleError : public std::runtime_error {
public:
    explicit RuleError(const std::string& what) : std::runtime_error(what) {}
};

/// Evaluation context for rule conditions. `counts` is the heir set the
/// condition tests (effective heirs for share rules, raw mentions for
/// blocking); `raw_counts` always holds the full mention multiset, which
/// is what sibling counting uses (a blocked sibling still reduces the
/// mother to 1/6).
struct RuleEnv {
    const std::map<int, long long>& counts;
    const std::map<int, long long>& raw_counts;
    const Taxonomy& tax;
    int subject = -1;   // category the rule is about, for stronger_agnate

    long long count_of(int id) const {
        auto it = counts.find(id);
        return it == counts.end() ? 0 : it->second;
    }
};

/// Boolean condition over a heir set.
///
/// Grammar (see data/rules.txt for usage):
///   expr   := term ('|' term)*
///   term   := factor ('&' factor)*
///   factor := '!' factor | '(' expr ')' | atom
///   atom   := has(<label>) | n(<label>) (>=|<=|=) <int>
///           | desc | mdesc | fdesc | sibs (>=|<=|=) <int>
///           | stronger_agnate | true
///
/// desc/mdesc/fdesc test for an inheriting descendant (any / male / female)
/// in `counts`; sibs counts all sibling individuals in `raw_counts`;
/// stronger_agnate is true when a residuary with a smaller agnate rank than
/// the rule's subject category is present.
class Condition {
public:
    static Condition parse(const std::string& text, const Taxonomy& tax);

    bool eval(const RuleEnv& env) const;
    const std::string& text() const { return text_; }

    struct Node;   // implementation detail, defined in rules.cpp

private:
    std::shared_ptr<const Node> root_;
    std::string text_;
};

struct ShareOutcome {
    enum class Kind { fixed, residue, special };
    Kind kind = Kind::residue;
    Fraction fraction;     // when fixed
    std::string special;   // handler name when special
};

struct ShareRule {
    int category = -1;
    Condition condition;
    ShareOutcome outcome;
    std::string note;
};

struct BlockRule {
    int category = -1;     // the blocked category
    Condition condition;   // over the raw mention set
    std::string note;
};

/// The declarative rule tables, loaded from the versioned data file.
/// Share rules for a category apply first-match in file order and the file
/// guarantees a catch-all, so exactly one rule fires per eligible category.
class RuleTable {
public:
    static RuleTable parse(const std::string& file_text, const Taxonomy& tax);
    static const RuleTable& standard();

    /// Blocking condition for a category, or nullptr when it is never blocked.
    const BlockRule* block_rule(int category) const;

    const std::vector<ShareRule>& share_rules(int category) const;

    const Taxonomy& taxonomy() const { return *tax_; }

private:
    const Taxonomy* tax_ = nullptr;
    std::map<int, BlockRule> block_;
    std::map<int, std::vector<ShareRule>> share_;
    std::vector<ShareRule> empty_;
};

}  // namespace irth
