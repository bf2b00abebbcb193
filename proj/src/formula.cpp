#include "imtl/formula.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace imtl {

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
    return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula Formula::make(Connective kind, std::string name, std::vector<Formula> children) {
    std::size_t depth = 1;
    std::size_t size = 1;
    std::size_t h = mix(std::hash<int>{}(static_cast<int>(kind)), std::hash<std::string>{}(name));
    for (const auto& c : children) {
        depth = std::max(depth, c.depth() + 1);
        size += c.size();
        h = mix(h, c.hash());
    }
    auto node = std::make_shared<const Node>(Node{kind, std::move(name), std::move(children), depth, size, h});
    return Formula(std::move(node));
}

Formula Formula::var(std::string name) {
    if (name.empty()) throw std::invalid_argument("variable name must be nonempty");
    return make(Connective::Var, std::move(name), {});
}

Formula Formula::bottom() {
    static const Formula b = make(Connective::Bottom, {}, {});
    return b;
}

Formula Formula::conj(Formula lhs, Formula rhs) { return make(Connective::And, {}, {std::move(lhs), std::move(rhs)}); }
Formula Formula::disj(Formula lhs, Formula rhs) { return make(Connective::Or, {}, {std::move(lhs), std::move(rhs)}); }
Formula Formula::implies(Formula lhs, Formula rhs) {
    return make(Connective::Implies, {}, {std::move(lhs), std::move(rhs)});
}
Formula Formula::box(Formula inner) { return make(Connective::Box, {}, {std::move(inner)}); }

const Formula& Formula::lhs() const {
    if (node_->children.size() != 2) throw std::logic_error("lhs() on a non-binary formula");
    return node_->children[0];
}

const Formula& Formula::rhs() const {
    if (node_->children.size() != 2) throw std::logic_error("rhs() on a non-binary formula");
    return node_->children[1];
}

const Formula& Formula::inner() const {
    if (node_->kind != Connective::Box) throw std::logic_error("inner() on a non-box formula");
    return node_->children[0];
}

bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.hash() != b.hash() || a.kind() != b.kind() || a.size() != b.size() || a.name() != b.name()) return false;
    return a.node_->children == b.node_->children;
}

bool operator<(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return false;
    if (a.kind() != b.kind()) return a.kind() < b.kind();
    if (a.name() != b.name()) return a.name() < b.name();
    return std::lexicographical_compare(a.node_->children.begin(), a.node_->children.end(),
                                        b.node_->children.begin(), b.node_->children.end());
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

enum class Tok { Var, Bottom, And, Or, Arrow, Not, Box, LParen, RParen, End };

struct Token {
    Tok kind;
    std::size_t offset;
    std::string text;
};

struct Alias {
    std::string_view spelling;
    Tok kind;
};

// Longest spellings first where prefixes overlap.
constexpr Alias kAliases[] = {
    {"_|_", Tok::Bottom},         {"->", Tok::Arrow},           {"[]", Tok::Box},
    {"&", Tok::And},              {"|", Tok::Or},               {"~", Tok::Not},
    {"(", Tok::LParen},           {")", Tok::RParen},           {"\xE2\x88\xA7", Tok::And},
    {"\xE2\x88\xA8", Tok::Or},    {"\xE2\x86\x92", Tok::Arrow}, {"\xC2\xAC", Tok::Not},
    {"\xE2\x96\xA1", Tok::Box},   {"\xE2\x8A\xA5", Tok::Bottom},
};

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const unsigned char c = static_cast<unsigned char>(text[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        if (c >= 'a' && c <= 'z') {
            std::size_t j = i + 1;
            while (j < text.size()) {
                const char d = text[j];
                if ((d >= 'a' && d <= 'z') || (d >= '0' && d <= '9') || d == '_') {
                    ++j;
                } else {
                    break;
                }
            }
            out.push_back({Tok::Var, i, std::string(text.substr(i, j - i))});
            i = j;
            continue;
        }
        bool matched = false;
        for (const auto& alias : kAliases) {
            if (text.substr(i, alias.spelling.size()) == alias.spelling) {
                out.push_back({alias.kind, i, std::string(alias.spelling)});
                i += alias.spelling.size();
                matched = true;
                break;
            }
        }
        if (!matched) throw ParseError("unrecognized token '" + std::string(1, text[i]) + "'", i);
    }
    out.push_back({Tok::End, text.size(), {}});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    Formula parse_all() {
        Formula f = implication();
        if (peek().kind != Tok::End) throw ParseError("unexpected '" + peek().text + "'", peek().offset);
        return f;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    bool accept(Tok kind) {
        if (peek().kind != kind) return false;
        ++pos_;
        return true;
    }

    Formula implication() {
        Formula lhs = disjunction();
        if (accept(Tok::Arrow)) return Formula::implies(std::move(lhs), implication());
        return lhs;
    }

    Formula disjunction() {
        Formula f = conjunction();
        while (accept(Tok::Or)) f = Formula::disj(std::move(f), conjunction());
        return f;
    }

    Formula conjunction() {
        Formula f = unary();
        while (accept(Tok::And)) f = Formula::conj(std::move(f), unary());
        return f;
    }

    Formula unary() {
        if (accept(Tok::Box)) return Formula::box(unary());
        if (accept(Tok::Not)) return Formula::neg(unary());
        return atom();
    }

    Formula atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Var:
                ++pos_;
                return Formula::var(t.text);
            case Tok::Bottom:
                ++pos_;
                return Formula::bottom();
            case Tok::LParen: {
                ++pos_;
                Formula f = implication();
                if (!accept(Tok::RParen)) throw ParseError("expected ')'", peek().offset);
                return f;
            }
            case Tok::End:
                throw ParseError("unexpected end of input", t.offset);
            default:
                throw ParseError("unexpected '" + t.text + "'", t.offset);
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

int precedence(const Formula& f) {
    switch (f.kind()) {
        case Connective::Var:
        case Connective::Bottom:
            return 5;
        case Connective::Box:
            return 4;
        case Connective::And:
            return 3;
        case Connective::Or:
            return 2;
        case Connective::Implies:
            return f.is_negation() ? 4 : 1;
    }
    return 0;
}

void print(const Formula& f, std::string& out);

void print_wrapped(const Formula& f, bool parens, std::string& out) {
    if (parens) out += '(';
    print(f, out);
    if (parens) out += ')';
}

void print(const Formula& f, std::string& out) {
    switch (f.kind()) {
        case Connective::Var:
            out += f.name();
            return;
        case Connective::Bottom:
            out += "_|_";
            return;
        case Connective::Box:
            out += "[]";
            print_wrapped(f.inner(), precedence(f.inner()) < 4, out);
            return;
        case Connective::And:
            print_wrapped(f.lhs(), precedence(f.lhs()) < 3, out);
            out += " & ";
            print_wrapped(f.rhs(), precedence(f.rhs()) <= 3, out);
            return;
        case Connective::Or:
            print_wrapped(f.lhs(), precedence(f.lhs()) < 2, out);
            out += " | ";
            print_wrapped(f.rhs(), precedence(f.rhs()) <= 2, out);
            return;
        case Connective::Implies:
            if (f.is_negation()) {
                out += '~';
                print_wrapped(f.lhs(), precedence(f.lhs()) < 4, out);
                return;
            }
            print_wrapped(f.lhs(), precedence(f.lhs()) <= 1, out);
            out += " -> ";
            print_wrapped(f.rhs(), precedence(f.rhs()) < 1, out);
            return;
    }
}

void collect(const Formula& f, std::vector<Formula>& out, std::unordered_set<Formula, FormulaHash>& seen) {
    if (seen.contains(f)) return;
    switch (f.kind()) {
        case Connective::And:
        case Connective::Or:
        case Connective::Implies:
            collect(f.lhs(), out, seen);
            collect(f.rhs(), out, seen);
            break;
        case Connective::Box:
            collect(f.inner(), out, seen);
            break;
        default:
            break;
    }
    seen.insert(f);
    out.push_back(f);
}

}  // namespace

Formula parse(std::string_view text) { return Parser(lex(text)).parse_all(); }

std::string to_string(const Formula& f) {
    std::string out;
    print(f, out);
    return out;
}

std::vector<Formula> subformulas(const Formula& f) {
    std::vector<Formula> out;
    std::unordered_set<Formula, FormulaHash> seen;
    collect(f, out, seen);
    return out;
}

std::set<std::string> atoms(const Formula& f) {
    std::set<std::string> out;
    for (const auto& sub : subformulas(f)) {
        if (sub.kind() == Connective::Var) out.insert(sub.name());
    }
    return out;
}

Formula substitute(const Formula& f, const std::map<std::string, Formula>& map) {
    switch (f.kind()) {
        case Connective::Var: {
            auto it = map.find(f.name());
            return it == map.end() ? f : it->second;
        }
        case Connective::Bottom:
            return f;
        case Connective::And:
            return Formula::conj(substitute(f.lhs(), map), substitute(f.rhs(), map));
        case Connective::Or:
            return Formula::disj(substitute(f.lhs(), map), substitute(f.rhs(), map));
        case Connective::Implies:
            return Formula::implies(substitute(f.lhs(), map), substitute(f.rhs(), map));
        case Connective::Box:
            return Formula::box(substitute(f.inner(), map));
    }
    return f;
}

std::vector<Formula> enumerate_formulas(const std::vector<std::string>& variables, std::size_t max_depth) {
    std::vector<Formula> all;
    if (max_depth == 0) return all;
    for (const auto& v : variables) all.push_back(Formula::var(v));
    all.push_back(Formula::bottom());

    std::size_t previous_end = 0;
    for (std::size_t depth = 2; depth <= max_depth; ++depth) {
        // Formulas of depth exactly depth-1 occupy [previous_end, current_end).
        const std::size_t current_end = all.size();
        std::vector<Formula> next;
        for (int op = 0; op < 3; ++op) {
            for (std::size_t i = 0; i < current_end; ++i) {
                for (std::size_t j = 0; j < current_end; ++j) {
                    if (i < previous_end && j < previous_end) continue;
                    const Formula& a = all[i];
                    const Formula& b = all[j];
                    if (op == 0) next.push_back(Formula::conj(a, b));
                    if (op == 1) next.push_back(Formula::disj(a, b));
                    if (op == 2) next.push_back(Formula::implies(a, b));
                }
            }
        }
        for (std::size_t i = previous_end; i < current_end; ++i) next.push_back(Formula::box(all[i]));
        previous_end = current_end;
        all.insert(all.end(), next.begin(), next.end());
    }
    return all;
}

}  // namespace imtl
