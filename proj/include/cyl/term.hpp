#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace ca {

using Index = std::uint32_t;

enum class Op : std::uint8_t { Var, Zero, One, Sum, Product, SymDiff, Complement, Cyl, Diag };

struct Node;

// Immutable, structurally shared term tree.
class Term {
public:
    Term();  // Zero
    explicit Term(std::nullptr_t) {}
    explicit Term(std::shared_ptr<const Node> n) : n_(std::move(n)) {}

    Op op() const;
    const std::string& name() const;  // Var only
    Index i() const;                  // Cyl index, Diag first index
    Index j() const;                  // Diag second index
    const Term& left() const;         // binary ops; unary child for Complement/Cyl
    const Term& right() const;
    const Term& child() const { return left(); }

    bool is_var() const { return op() == Op::Var; }
    const Node* node() const { return n_.get(); }

    std::size_t size() const;
    std::size_t depth() const;
    std::size_t hash() const;

    bool operator==(const Term& o) const;
    bool operator!=(const Term& o) const { return !(*this == o); }
    // Total structural order: op tag first, then payload, then children.
    friend int compare(const Term& a, const Term& b);
    bool operator<(const Term& o) const { return compare(*this, o) < 0; }

private:
    std::shared_ptr<const Node> n_;
};

struct Node {
    Op op;
    std::string name;
    Index i = 0, j = 0;
    Term a{nullptr}, b{nullptr};
    std::size_t size = 1, depth = 1, hash = 0;
};

struct TermHash {
    std::size_t operator()(const Term& t) const { return t.hash(); }
};

Term var(const std::string& name);
Term zero();
Term one();
Term sum(const Term& a, const Term& b);
Term prod(const Term& a, const Term& b);
Term symdiff(const Term& a, const Term& b);
Term comp(const Term& a);
Term cyl(Index i, const Term& a);
Term diag(Index i, Index j);
Term minus(const Term& a, const Term& b);  // a·−b
// c_{i_0}c_{i_1}...(t), applied outermost-first
Term cyls(const std::vector<Index>& idx, const Term& t);
// c_0c_1...c_{m-1} t
Term cyl_prefix(Index m, const Term& t);
Term sum_all(const std::vector<Term>& ts);   // 0 when empty
Term prod_all(const std::vector<Term>& ts);  // 1 when empty

struct Equation {
    Term lhs, rhs;
    bool operator==(const Equation& o) const { return lhs == o.lhs && rhs == o.rhs; }
    bool operator!=(const Equation& o) const { return !(*this == o); }
    bool operator<(const Equation& o) const;
};

// x <= y  is shorthand for  x + y = y
Equation leq(const Term& l, const Term& r);

class Renaming {
public:
    Renaming() = default;
    explicit Renaming(std::map<Index, Index> m);  // throws if not injective
    static Renaming swap(Index i, Index j);
    static Renaming from_permutation(const std::vector<Index>& perm);

    Index operator()(Index i) const;
    const std::map<Index, Index>& map() const { return m_; }
    bool is_permutation_of(Index d) const;  // bijection of {0..d-1}, identity elsewhere
    // (this ∘ other)(i) = this(other(i))
    Renaming compose(const Renaming& other) const;
    Renaming inverse() const;  // requires permutation of its moved points

private:
    std::map<Index, Index> m_;
};

std::set<Index> indices(const Term& t);
std::set<Index> indices(const Equation& e);
std::optional<Index> max_index(const Term& t);
std::optional<Index> max_index(const Equation& e);
std::set<std::string> variables(const Term& t);
std::set<std::string> variables(const Equation& e);
std::vector<std::string> variables_in_order(const Equation& e);  // first occurrence, lhs then rhs

Term rename(const Term& t, const Renaming& r);
Equation rename(const Equation& e, const Renaming& r);

using Substitution = std::map<std::string, Term>;
Term substitute(const Term& t, const Substitution& s);
Equation substitute(const Equation& e, const Substitution& s);

std::string to_string(const Term& t);
std::string to_string(const Equation& e);

}  // namespace ca
