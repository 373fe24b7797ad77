#include "irth/rules.hpp"

#include "irth/arabic.hpp"
#include "irth/embedded_data.hpp"

#include <sstream>

namespace irth {

namespace {

enum class Cmp { ge, le, eq };

bool compare(long long lhs, Cmp cmp, long long rhs) {
    switch (cmp) {
        case Cmp::ge: return lhs >= rhs;
        case Cmp::le: return lhs <= rhs;
        default: return lhs == rhs;
    }
}

}  // namespace

struct Condition::Node {
    enum class Op {
        or_, and_, not_, has, count, desc, mdesc, fdesc, sibs, stronger_agnate, true_
    };
    Op op;
    std::vector<std::shared_ptr<const Node>> children;
    int category = -1;   // has / count
    Cmp cmp = Cmp::ge;   // count / sibs
    long long value = 0;

    bool eval(const RuleEnv& env) const {
        switch (op) {
            case Op::or_:
                for (const auto& c : children)
                    if (c->eval(env)) return true;
                return false;
            case Op::and_:
                for (const auto& c : children)
                    if (!c->eval(env)) return false;
                return true;
            case Op::not_:
                return !children[0]->eval(env);
            case Op::has:
                return env.count_of(category) > 0;
            case Op::count:
                return compare(env.count_of(category), cmp, value);
            case Op::desc:
            case Op::mdesc:
            case Op::fdesc:
                for (const auto& [id, n] : env.counts) {
                    if (n <= 0) continue;
                    const HeirCategory& c = env.tax.by_id(id);
                    if (!is_inheriting_descendant(c)) continue;
                    if (op == Op::desc) return true;
                    if (op == Op::mdesc && c.gender == Gender::male) return true;
                    if (op == Op::fdesc && c.gender == Gender::female) return true;
                }
                return false;
            case Op::sibs: {
                long long total = 0;
                for (const auto& [id, n] : env.raw_counts)
                    if (is_sibling(env.tax.by_id(id))) total += n;
                return compare(total, cmp, value);
            }
            case Op::stronger_agnate: {
                if (env.subject < 0) return false;
                int rank = env.tax.by_id(env.subject).agnate_rank;
                if (rank < 0) return false;
                for (const auto& [id, n] : env.raw_counts) {
                    if (n <= 0) continue;
                    int r = env.tax.by_id(id).agnate_rank;
                    if (r >= 0 && r < rank) return true;
                }
                return false;
            }
            default:
                return true;
        }
    }
};

namespace {

using Node = Condition::Node;
using NodePtr = std::shared_ptr<const Node>;

class CondParser {
public:
    CondParser(const std::string& text, const Taxonomy& tax) : s_(text), tax_(tax) {}

    NodePtr parse() {
        NodePtr e = expr();
        skip_ws();
        if (pos_ != s_.size())
            fail("trailing input");
        return e;
    }

private:
    const std::string& s_;
    const Taxonomy& tax_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& why) {
        throw RuleError("condition '" + s_ + "': " + why);
    }

    void skip_ws() {
        while (pos_ < s_.size() &&
               std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    NodePtr expr() {
        auto n = std::make_shared<Node>();
        n->op = Node::Op::or_;
        n->children.push_back(term());
        while (eat('|')) n->children.push_back(term());
        if (n->children.size() == 1) return n->children[0];
        return n;
    }

    NodePtr term() {
        auto n = std::make_shared<Node>();
        n->op = Node::Op::and_;
        n->children.push_back(factor());
        while (eat('&')) n->children.push_back(factor());
        if (n->children.size() == 1) return n->children[0];
        return n;
    }

    NodePtr factor() {
        if (eat('!')) {
            auto n = std::make_shared<Node>();
            n->op = Node::Op::not_;
            n->children.push_back(factor());
            return n;
        }
        if (eat('(')) {
            NodePtr e = expr();
            if (!eat(')')) fail("missing ')'");
            return e;
        }
        return atom();
    }

    std::string word() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
                ++pos_;
            else
                break;
        }
        if (start == pos_) fail("expected identifier");
        return s_.substr(start, pos_ - start);
    }

    std::string paren_label() {
        if (!eat('(')) fail("expected '('");
        size_t close = s_.find(')', pos_);
        if (close == std::string::npos) fail("missing ')'");
        std::string label = trim(s_.substr(pos_, close - pos_));
        pos_ = close + 1;
        return label;
    }

    Cmp comparator() {
        skip_ws();
        if (pos_ + 1 < s_.size() && s_[pos_] == '>' && s_[pos_ + 1] == '=') {
            pos_ += 2;
            return Cmp::ge;
        }
        if (pos_ + 1 < s_.size() && s_[pos_] == '<' && s_[pos_ + 1] == '=') {
            pos_ += 2;
            return Cmp::le;
        }
        if (pos_ < s_.size() && s_[pos_] == '=') {
            ++pos_;
            return Cmp::eq;
        }
        fail("expected comparator");
    }

    long long integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_) fail("expected integer");
        return std::stoll(s_.substr(start, pos_ - start));
    }

    int category_arg() {
        std::string label = paren_label();
        const HeirCategory* c = tax_.find(label);
        if (!c) fail("unknown heir label '" + label + "'");
        return c->id;
    }

    NodePtr atom() {
        std::string w = word();
        auto n = std::make_shared<Node>();
        if (w == "has") {
            n->op = Node::Op::has;
            n->category = category_arg();
        } else if (w == "n") {
            n->op = Node::Op::count;
            n->category = category_arg();
            n->cmp = comparator();
            n->value = integer();
        } else if (w == "desc") {
            n->op = Node::Op::desc;
        } else if (w == "mdesc") {
            n->op = Node::Op::mdesc;
        } else if (w == "fdesc") {
            n->op = Node::Op::fdesc;
        } else if (w == "sibs") {
            n->op = Node::Op::sibs;
            n->cmp = comparator();
            n->value = integer();
        } else if (w == "stronger_agnate") {
            n->op = Node::Op::stronger_agnate;
        } else if (w == "true") {
            n->op = Node::Op::true_;
        } else {
            fail("unknown atom '" + w + "'");
        }
        return n;
    }
};

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

ShareOutcome parse_outcome(const std::string& text) {
    ShareOutcome o;
    if (text == "residue") {
        o.kind = ShareOutcome::Kind::residue;
    } else if (text.rfind("special:", 0) == 0) {
        o.kind = ShareOutcome::Kind::special;
        o.special = text.substr(8);
    } else {
        o.kind = ShareOutcome::Kind::fixed;
        o.fraction = Fraction::parse(text);
    }
    return o;
}

}  // namespace

Condition Condition::parse(const std::string& text, const Taxonomy& tax) {
    Condition c;
    c.text_ = text;
    c.root_ = CondParser(text, tax).parse();
    return c;
}

bool Condition::eval(const RuleEnv& env) const {
    return root_->eval(env);
}

RuleTable RuleTable::parse(const std::string& file_text, const Taxonomy& tax) {
    RuleTable t;
    t.tax_ = &tax;
    std::istringstream in(file_text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        auto f = split_fields(line);
        auto where = [&] { return "rules line " + std::to_string(lineno) + ": "; };
        try {
            if (f[0] == "share") {
                if (f.size() < 4)
                    throw RuleError("expected share :: category :: condition :: outcome");
                ShareRule r;
                r.category = tax.resolve(f[1]).id;
                r.condition = Condition::parse(f[2], tax);
                r.outcome = parse_outcome(f[3]);
                if (f.size() > 4) r.note = f[4];
                t.share_[r.category].push_back(std::move(r));
            } else if (f[0] == "block") {
                if (f.size() < 3)
                    throw RuleError("expected block :: category :: condition");
                BlockRule r;
                r.category = tax.resolve(f[1]).id;
                r.condition = Condition::parse(f[2], tax);
                if (f.size() > 3) r.note = f[3];
                if (t.block_.count(r.category))
                    throw RuleError("duplicate block rule for " + f[1]);
                t.block_.emplace(r.category, std::move(r));
            } else {
                throw RuleError("unknown record kind " + f[0]);
            }
        } catch (const std::exception& e) {
            throw RuleError(where() + e.what());
        }
    }
    return t;
}

const RuleTable& RuleTable::standard() {
    static const RuleTable t = parse(detail::kRulesData, Taxonomy::standard());
    return t;
}

const BlockRule* RuleTable::block_rule(int category) const {
    auto it = block_.find(category);
    return it == block_.end() ? nullptr : &it->second;
}

const std::vector<ShareRule>& RuleTable::share_rules(int category) const {
    auto it = share_.find(category);
    return it == share_.end() ? empty_ : it->second;
}

}  // namespace irth
