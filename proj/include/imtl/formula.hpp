#ifndef IMTL_FORMULA_HPP
#define IMTL_FORMULA_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace imtl {

enum class Connective { Var, Bottom, And, Or, Implies, Box };

/// Immutable formula over propositional variables with and, or, implies,
/// bottom and box. Negation is sugar for `phi -> bottom` and never a node.
///
/// Copies share structure; equality is structural.
class Formula {
public:
    static Formula var(std::string name);
    static Formula bottom();
    static Formula conj(Formula lhs, Formula rhs);
    static Formula disj(Formula lhs, Formula rhs);
    static Formula implies(Formula lhs, Formula rhs);
    static Formula box(Formula inner);
    static Formula neg(Formula inner) { return implies(std::move(inner), bottom()); }

    Connective kind() const { return node_->kind; }
    bool is_negation() const { return kind() == Connective::Implies && rhs().kind() == Connective::Bottom; }

    /// Variable name; empty for non-variables.
    const std::string& name() const { return node_->name; }
    const Formula& lhs() const;
    const Formula& rhs() const;
    const Formula& inner() const;

    /// Tree height: variables and bottom have depth 1.
    std::size_t depth() const { return node_->depth; }
    std::size_t size() const { return node_->size; }
    std::size_t hash() const { return node_->hash; }

    /// Identity of the shared node, usable as a memo key within one call.
    const void* identity() const { return node_.get(); }

    friend bool operator==(const Formula& a, const Formula& b);
    friend bool operator<(const Formula& a, const Formula& b);

private:
    struct Node {
        Connective kind;
        std::string name;
        std::vector<Formula> children;
        std::size_t depth;
        std::size_t size;
        std::size_t hash;
    };

    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    static Formula make(Connective kind, std::string name, std::vector<Formula> children);

    std::shared_ptr<const Node> node_;
};

struct FormulaHash {
    std::size_t operator()(const Formula& f) const { return f.hash(); }
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Parses the ASCII syntax (`&`, `|`, `->`, `~`, `[]`, `_|_`) or its Unicode
/// aliases. Box and negation bind tightest, then conjunction, disjunction,
/// and right-associative implication.
Formula parse(std::string_view text);

/// Prints with minimal parentheses; `phi -> _|_` is printed as `~phi`.
std::string to_string(const Formula& f);

/// Post-order, children before parents, structural duplicates removed.
std::vector<Formula> subformulas(const Formula& f);

/// Sorted set of variable names occurring in f.
std::set<std::string> atoms(const Formula& f);

/// Replaces each variable named in `map` by its image.
Formula substitute(const Formula& f, const std::map<std::string, Formula>& map);

/// Every formula of depth <= max_depth over `variables` and bottom, in
/// nondecreasing depth. Sub-formulas are shared nodes, so evaluating the
/// whole list with a per-call memo is linear in its length.
std::vector<Formula> enumerate_formulas(const std::vector<std::string>& variables, std::size_t max_depth);

}  // namespace imtl

template <>
struct std::hash<imtl::Formula> {
    std::size_t operator()(const imtl::Formula& f) const { return f.hash(); }
};

#endif  // IMTL_FORMULA_HPP
