#ifndef QSERIES_EXPR_HPP
#define QSERIES_EXPR_HPP

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <qseries/builder.hpp>
#include <qseries/error.hpp>
#include <qseries/monomial.hpp>
#include <qseries/series.hpp>

namespace qseries::expr
{

struct Node;
using NodePtr = std::shared_ptr<const Node>;

enum class NodeKind {
    Number,   // non-negative integer literal
    Monomial, // q, q^e, q^(p/r), i*q^e, i*1
    Call,     // name(args; ...) or J[...] / Jbar[...]
    Binary,   // + - * /
    Power,    // base ^ integer
    Neg,      // unary minus
};

struct Node {
    NodeKind kind;
    Rational number;         // Number
    qseries::Monomial mono;  // Monomial
    std::string name;        // Call
    bool bracket = false;    // Call written with [ ]
    std::vector<std::vector<NodePtr>> groups; // Call arguments, ';' separated groups of ',' lists
    char op = 0;             // Binary
    NodePtr lhs, rhs;        // Binary; Power and Neg use lhs
    long exponent = 0;       // Power
    std::size_t position = 0; // byte offset of the node's first token
};

// Structural equality, ignoring positions.
bool equal(const Node &a, const Node &b);

class ParseError : public std::runtime_error
{
public:
    ParseError(std::size_t position, std::string expected, std::string found);

    std::size_t position() const noexcept
    {
        return m_position;
    }
    const std::string &expected() const noexcept
    {
        return m_expected;
    }
    const std::string &found() const noexcept
    {
        return m_found;
    }

private:
    std::size_t m_position;
    std::string m_expected;
    std::string m_found;
};

class UnknownFunction : public ParseError
{
public:
    UnknownFunction(std::size_t position, const std::string &name);

    const std::string &name() const noexcept
    {
        return m_name;
    }

private:
    std::string m_name;
};

// Library error raised while evaluating, tagged with the AST path of the
// innermost failing node ("root", "root.lhs.arg[2]", ...).
class EvalError : public std::runtime_error
{
public:
    EvalError(ErrorKind kind, std::string path, std::string subexpr, const std::string &detail);

    ErrorKind kind() const noexcept
    {
        return m_kind;
    }
    const std::string &path() const noexcept
    {
        return m_path;
    }
    const std::string &subexpression() const noexcept
    {
        return m_subexpr;
    }

private:
    ErrorKind m_kind;
    std::string m_path;
    std::string m_subexpr;
};

NodePtr parse(std::string_view input);

// Canonical text; parse(print(e)) is structurally equal to e.
std::string print(const Node &e);

Builder to_builder(const Node &e);
QSeries evaluate(const Node &e, const Exponent &order);

// One row per function: name and argument layout, as documented in docs/expr.md.
struct Signature {
    std::string_view name;
    std::string_view layout;
};
const std::vector<Signature> &signatures();

} // namespace qseries::expr

#endif
