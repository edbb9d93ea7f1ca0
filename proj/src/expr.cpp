#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include <qseries/appell.hpp>
#include <qseries/expr.hpp>
#include <qseries/hecke.hpp>
#include <qseries/strings.hpp>
#include <qseries/theta.hpp>

namespace qseries::expr
{

ParseError::ParseError(std::size_t position, std::string expected, std::string found)
    : std::runtime_error("parse error at offset " + std::to_string(position) + ": expected " + expected + ", found "
                         + found),
      m_position(position), m_expected(std::move(expected)), m_found(std::move(found))
{
}

UnknownFunction::UnknownFunction(std::size_t position, const std::string &name)
    : ParseError(position, "a known function name", "'" + name + "'"), m_name(name)
{
}

EvalError::EvalError(ErrorKind kind, std::string path, std::string subexpr, const std::string &detail)
    : std::runtime_error(std::string(to_string(kind)) + " at " + path + " [" + subexpr + "]: " + detail), m_kind(kind),
      m_path(std::move(path)), m_subexpr(std::move(subexpr))
{
}

const std::vector<Signature> &signatures()
{
    static const std::vector<Signature> table = {
        {"j", "(x; Q)"},
        {"jbar", "(x; Q)"},
        {"J", "(a, m) | (m) | [a, m] | [m]"},
        {"Jbar", "(a, m) | [a, m]"},
        {"Jm", "(m)"},
        {"eta", "(r)"},
        {"m", "(x, Q, z)"},
        {"f", "(a, b, c; x, y; base)"},
        {"g", "(b; x, y; base; z1, z0)"},
        {"h", "(n; x, y; base; z1, z0)"},
        {"C", "(N, l, m)"},
        {"calC", "(N, l, m)"},
        {"theta_side", "(N, l, m)"},
    };
    return table;
}

namespace
{

// Accepted argument shapes per function, as group sizes.
std::vector<std::vector<std::size_t>> shapes(std::string_view name)
{
    if (name == "j" || name == "jbar") {
        return {{1, 1}};
    }
    if (name == "J") {
        return {{2}, {1}};
    }
    if (name == "Jbar") {
        return {{2}};
    }
    if (name == "Jm" || name == "eta") {
        return {{1}};
    }
    if (name == "m" || name == "C" || name == "calC" || name == "theta_side") {
        return {{3}};
    }
    if (name == "f") {
        return {{3, 2, 1}};
    }
    if (name == "g" || name == "h") {
        return {{1, 2, 1, 2}};
    }
    return {};
}

bool known(std::string_view name)
{
    return !shapes(name).empty();
}

// ---------------------------------------------------------------- lexer

enum class Tok { Number, Ident, Punct, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

std::string describe(const Token &t)
{
    switch (t.kind) {
    case Tok::End:
        return "end of input";
    case Tok::Number:
        return "number " + t.text;
    case Tok::Ident:
        return "'" + t.text + "'";
    default:
        return "'" + t.text + "'";
    }
}

std::string describe_byte(unsigned char c)
{
    if (std::isprint(c)) {
        return std::string("'") + static_cast<char>(c) + "'";
    }
    static const char hex[] = "0123456789abcdef";
    return std::string("byte 0x") + hex[c >> 4] + hex[c & 15];
}

std::vector<Token> lex(std::string_view s)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const unsigned char c = static_cast<unsigned char>(s[i]);
        if (std::isspace(c)) {
            ++i;
        } else if (std::isdigit(c)) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
                ++j;
            }
            out.push_back({Tok::Number, std::string(s.substr(i, j - i)), i});
            i = j;
        } else if (std::isalpha(c) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) {
                ++j;
            }
            out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), i});
            i = j;
        } else if (std::string_view("+-*/^()[],;").find(static_cast<char>(c)) != std::string_view::npos) {
            out.push_back({Tok::Punct, std::string(1, static_cast<char>(c)), i});
            ++i;
        } else {
            throw ParseError(i, "a token", describe_byte(c));
        }
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

// ---------------------------------------------------------------- parser

constexpr int max_depth = 256; // nested '(' and unary minus

class Parser
{
public:
    explicit Parser(std::string_view s) : m_toks(lex(s)) {}

    NodePtr parse_all()
    {
        NodePtr e = expr();
        if (peek().kind != Tok::End) {
            fail("operator or end of input");
        }
        return e;
    }

private:
    std::vector<Token> m_toks;
    std::size_t m_i = 0;
    int m_depth = 0;

    struct DepthGuard {
        Parser &p;
        explicit DepthGuard(Parser &pp) : p(pp)
        {
            if (++p.m_depth > max_depth) {
                p.fail("shallower nesting");
            }
        }
        ~DepthGuard()
        {
            --p.m_depth;
        }
    };

    const Token &peek() const
    {
        return m_toks[m_i];
    }
    bool is_punct(char c) const
    {
        return peek().kind == Tok::Punct && peek().text[0] == c;
    }
    Token take()
    {
        return m_toks[m_i++];
    }
    [[noreturn]] void fail(const std::string &expected) const
    {
        throw ParseError(peek().pos, expected, describe(peek()));
    }
    Token expect(char c)
    {
        if (!is_punct(c)) {
            fail(std::string("'") + c + "'");
        }
        return take();
    }
    Rational number_value()
    {
        if (peek().kind != Tok::Number) {
            fail("number");
        }
        return Rational(mpz_class(take().text));
    }

    static NodePtr make(Node n)
    {
        return std::make_shared<const Node>(std::move(n));
    }

    NodePtr expr()
    {
        NodePtr lhs = term();
        while (is_punct('+') || is_punct('-')) {
            const Token op = take();
            NodePtr rhs = term();
            lhs = make(Node{NodeKind::Binary, {}, {}, {}, false, {}, op.text[0], lhs, rhs, 0, lhs->position});
        }
        return lhs;
    }

    NodePtr term()
    {
        NodePtr lhs = unary();
        while (is_punct('*') || is_punct('/')) {
            const Token op = take();
            NodePtr rhs = unary();
            lhs = make(Node{NodeKind::Binary, {}, {}, {}, false, {}, op.text[0], lhs, rhs, 0, lhs->position});
        }
        return lhs;
    }

    NodePtr unary()
    {
        DepthGuard g(*this);
        if (is_punct('-')) {
            const Token t = take();
            NodePtr operand = unary();
            return make(Node{NodeKind::Neg, {}, {}, {}, false, {}, 0, operand, nullptr, 0, t.pos});
        }
        return power();
    }

    // '^' followed by an integer, or a parenthesised signed integer/rational.
    Rational exponent(bool allow_fraction)
    {
        if (peek().kind == Tok::Number) {
            return number_value();
        }
        if (!is_punct('(')) {
            fail("exponent (integer or parenthesised)");
        }
        take();
        const bool negative = is_punct('-');
        if (negative) {
            take();
        }
        Rational e = number_value();
        if (is_punct('/')) {
            if (!allow_fraction) {
                fail("')' (only q takes a fractional exponent)");
            }
            take();
            const std::size_t at = peek().pos;
            Rational d = number_value();
            if (sgn(d) == 0) {
                throw ParseError(at, "nonzero denominator", "0");
            }
            e /= d;
            e.canonicalize();
        }
        expect(')');
        return negative ? Rational(-e) : e;
    }

    NodePtr q_power(std::size_t pos, int unit)
    {
        Rational e(1);
        if (is_punct('^')) {
            take();
            e = exponent(true);
        }
        return make(Node{NodeKind::Monomial, {}, qseries::Monomial(e, unit), {}, false, {}, 0, nullptr, nullptr, 0, pos});
    }

    NodePtr power()
    {
        const bool grouped = is_punct('(');
        NodePtr base = primary();
        // q^a^b is rejected; (q^a)^b is fine
        if ((base->kind == NodeKind::Monomial && !grouped) || !is_punct('^')) {
            return base;
        }
        take();
        const std::size_t at = peek().pos;
        Rational e = exponent(false);
        if (!fits_long(e)) {
            throw ParseError(at, "exponent of moderate size", e.get_str());
        }
        return make(Node{NodeKind::Power, {}, {}, {}, false, {}, 0, base, nullptr, e.get_num().get_si(),
                         base->position});
    }

    static bool fits_long(const Rational &e)
    {
        return e.get_num().fits_slong_p();
    }

    NodePtr primary()
    {
        const Token &t = peek();
        if (t.kind == Tok::Number) {
            const std::size_t pos = t.pos;
            Rational v = number_value();
            return make(Node{NodeKind::Number, v, {}, {}, false, {}, 0, nullptr, nullptr, 0, pos});
        }
        if (is_punct('(')) {
            take();
            NodePtr e = expr();
            expect(')');
            return e;
        }
        if (t.kind != Tok::Ident) {
            fail("number, q, i, function call or '('");
        }
        const Token id = take();
        if (id.text == "q") {
            return q_power(id.pos, 0);
        }
        if (id.text == "i") {
            expect('*');
            if (peek().kind == Tok::Ident && peek().text == "q") {
                take();
                return q_power(id.pos, 1);
            }
            if (peek().kind == Tok::Number && peek().text == "1") {
                take();
                return make(Node{NodeKind::Monomial, {}, qseries::Monomial(Rational(0), 1), {}, false, {}, 0, nullptr,
                                 nullptr, 0, id.pos});
            }
            fail("q-power or 1 after 'i*'");
        }
        if (!known(id.text)) {
            throw UnknownFunction(id.pos, id.text);
        }
        return call(id);
    }

    NodePtr call(const Token &id)
    {
        const bool bracket = is_punct('[') && (id.text == "J" || id.text == "Jbar");
        const char close = bracket ? ']' : ')';
        if (bracket) {
            take();
        } else {
            expect('(');
        }
        std::vector<std::vector<NodePtr>> groups(1);
        if (!is_punct(close)) {
            groups.back().push_back(expr());
            while (is_punct(',') || (!bracket && is_punct(';'))) {
                if (take().text[0] == ';') {
                    groups.emplace_back();
                }
                groups.back().push_back(expr());
            }
        }
        if (!is_punct(close)) {
            fail(bracket ? "',' or ']'" : "',', ';' or ')'");
        }
        const std::size_t close_pos = peek().pos;
        take();
        check_arity(id, groups, close_pos);
        return make(Node{NodeKind::Call, {}, {}, id.text, bracket, std::move(groups), 0, nullptr, nullptr, 0, id.pos});
    }

    static void check_arity(const Token &id, const std::vector<std::vector<NodePtr>> &groups, std::size_t close_pos)
    {
        std::vector<std::size_t> got;
        std::size_t total = 0;
        for (const auto &g : groups) {
            got.push_back(g.size());
            total += g.size();
        }
        for (const auto &shape : shapes(id.text)) {
            std::size_t want = 0;
            for (std::size_t n : shape) {
                want += n;
            }
            // exact grouping, or every argument in one comma list
            if (got == shape || (groups.size() == 1 && total == want)) {
                return;
            }
        }
        std::string sig;
        for (const auto &s : signatures()) {
            if (s.name == id.text) {
                sig = std::string(s.layout);
            }
        }
        std::ostringstream found;
        found << total << " argument" << (total == 1 ? "" : "s");
        if (groups.size() > 1) {
            found << " in " << groups.size() << " groups";
        }
        throw ParseError(close_pos, "arguments " + id.text + sig, found.str());
    }
};

// ---------------------------------------------------------------- printer

enum Prec { PAdd = 1, PMul = 2, PNeg = 3, PPow = 4, PAtom = 5 };

int precedence(const Node &e)
{
    switch (e.kind) {
    case NodeKind::Binary:
        return (e.op == '+' || e.op == '-') ? PAdd : PMul;
    case NodeKind::Neg:
        return PNeg;
    case NodeKind::Power:
        return PPow;
    case NodeKind::Monomial:
        // "q" alone is atomic; q^e and i*q are not valid power bases
        return (e.mono.unit() == 0 && e.mono.qexp() == 1) ? PAtom : PPow;
    default:
        return PAtom;
    }
}

std::string print_exponent(const Rational &e)
{
    if (is_integer(e) && sgn(e) >= 0) {
        return e.get_str();
    }
    return "(" + e.get_str() + ")";
}

std::string print_mono(const qseries::Monomial &m)
{
    std::string s = m.unit() == 1 ? "i*" : "";
    if (m.unit() == 1 && m.qexp() == 0) {
        return s + "1";
    }
    s += "q";
    if (m.qexp() != 1) {
        s += "^" + print_exponent(m.qexp());
    }
    return s;
}

std::string wrap(const Node &e, bool parens)
{
    return parens ? "(" + print(e) + ")" : print(e);
}

} // namespace

std::string print(const Node &e)
{
    switch (e.kind) {
    case NodeKind::Number:
        return e.number.get_str();
    case NodeKind::Monomial:
        return print_mono(e.mono);
    case NodeKind::Neg:
        return "-" + wrap(*e.lhs, precedence(*e.lhs) < PNeg);
    case NodeKind::Power:
        return wrap(*e.lhs, e.lhs->kind == NodeKind::Monomial || precedence(*e.lhs) < PAtom) + "^" + print_exponent(Rational(e.exponent));
    case NodeKind::Binary: {
        const int p = precedence(e);
        std::string sep = p == PAdd ? std::string(" ") + e.op + " " : std::string(1, e.op);
        return wrap(*e.lhs, precedence(*e.lhs) < p) + sep + wrap(*e.rhs, precedence(*e.rhs) <= p);
    }
    case NodeKind::Call:
    default: {
        std::string s = e.name + (e.bracket ? "[" : "(");
        for (std::size_t g = 0; g < e.groups.size(); ++g) {
            if (g) {
                s += "; ";
            }
            for (std::size_t k = 0; k < e.groups[g].size(); ++k) {
                if (k) {
                    s += ", ";
                }
                s += print(*e.groups[g][k]);
            }
        }
        return s + (e.bracket ? "]" : ")");
    }
    }
}

bool equal(const Node &a, const Node &b)
{
    if (a.kind != b.kind) {
        return false;
    }
    switch (a.kind) {
    case NodeKind::Number:
        return a.number == b.number;
    case NodeKind::Monomial:
        return a.mono == b.mono;
    case NodeKind::Neg:
        return equal(*a.lhs, *b.lhs);
    case NodeKind::Power:
        return a.exponent == b.exponent && equal(*a.lhs, *b.lhs);
    case NodeKind::Binary:
        return a.op == b.op && equal(*a.lhs, *b.lhs) && equal(*a.rhs, *b.rhs);
    case NodeKind::Call:
    default:
        if (a.name != b.name || a.bracket != b.bracket || a.groups.size() != b.groups.size()) {
            return false;
        }
        for (std::size_t g = 0; g < a.groups.size(); ++g) {
            if (a.groups[g].size() != b.groups[g].size()) {
                return false;
            }
            for (std::size_t k = 0; k < a.groups[g].size(); ++k) {
                if (!equal(*a.groups[g][k], *b.groups[g][k])) {
                    return false;
                }
            }
        }
        return true;
    }
}

NodePtr parse(std::string_view input)
{
    return Parser(input).parse_all();
}

// ---------------------------------------------------------------- evaluator

namespace
{

struct Ctx {
    const Node &node;
    std::string path;

    [[noreturn]] void fail(ErrorKind kind, const std::string &detail) const
    {
        throw EvalError(kind, path, print(node), detail);
    }
};

std::optional<Rational> fold_rational(const Node &e)
{
    switch (e.kind) {
    case NodeKind::Number:
        return e.number;
    case NodeKind::Neg: {
        auto v = fold_rational(*e.lhs);
        return v ? std::optional<Rational>(Rational(-*v)) : std::nullopt;
    }
    case NodeKind::Binary: {
        auto a = fold_rational(*e.lhs), b = fold_rational(*e.rhs);
        if (!a || !b) {
            return std::nullopt;
        }
        switch (e.op) {
        case '+':
            return Rational(*a + *b);
        case '-':
            return Rational(*a - *b);
        case '*':
            return Rational(*a * *b);
        default:
            if (sgn(*b) == 0) {
                return std::nullopt;
            }
            return Rational(*a / *b);
        }
    }
    case NodeKind::Power: {
        auto a = fold_rational(*e.lhs);
        if (!a || (sgn(*a) == 0 && e.exponent < 0) || std::labs(e.exponent) > 64) {
            return std::nullopt;
        }
        Rational r(1);
        for (long k = 0; k < std::labs(e.exponent); ++k) {
            r *= *a;
        }
        return e.exponent < 0 ? Rational(1 / r) : r;
    }
    default:
        return std::nullopt;
    }
}

std::optional<qseries::Monomial> fold_monomial(const Node &e)
{
    switch (e.kind) {
    case NodeKind::Monomial:
        return e.mono;
    case NodeKind::Number:
        if (e.number == 1) {
            return qseries::Monomial::one();
        }
        return std::nullopt;
    case NodeKind::Neg: {
        auto v = fold_monomial(*e.lhs);
        return v ? std::optional<qseries::Monomial>(-*v) : std::nullopt;
    }
    case NodeKind::Binary: {
        if (e.op != '*' && e.op != '/') {
            return std::nullopt;
        }
        auto a = fold_monomial(*e.lhs), b = fold_monomial(*e.rhs);
        if (!a || !b) {
            return std::nullopt;
        }
        return e.op == '*' ? *a * *b : *a / *b;
    }
    case NodeKind::Power: {
        auto a = fold_monomial(*e.lhs);
        return a ? std::optional<qseries::Monomial>(a->pow(e.exponent)) : std::nullopt;
    }
    default:
        return std::nullopt;
    }
}

Builder build(const Node &e, const std::string &path);

// Attach the path to errors raised when the lazy series is evaluated.
Builder tag(Builder b, const Node &e, const std::string &path)
{
    if (b.is_zero()) {
        return b;
    }
    auto fn = [b, text = print(e), path](const Exponent &order) {
        try {
            return b(order);
        } catch (const EvalError &) {
            throw;
        } catch (const Error &err) {
            throw EvalError(err.kind(), path, text, err.detail());
        }
    };
    return Builder(fn, b.valuation_bound(), b.has_exact_valuation());
}

class Args
{
public:
    Args(const Node &call, const std::string &path) : m_path(path)
    {
        for (const auto &g : call.groups) {
            for (const auto &a : g) {
                m_flat.push_back(a.get());
            }
        }
    }

    std::size_t size() const
    {
        return m_flat.size();
    }

    Rational rational(std::size_t k) const
    {
        auto v = fold_rational(*m_flat[k]);
        if (!v) {
            ctx(k).fail(ErrorKind::InvalidArgument, "expected a rational constant");
        }
        return *v;
    }
    long integer(std::size_t k) const
    {
        Rational v = rational(k);
        if (!is_integer(v) || !v.get_num().fits_slong_p()) {
            ctx(k).fail(ErrorKind::InvalidArgument, "expected an integer");
        }
        return v.get_num().get_si();
    }
    qseries::Monomial monomial(std::size_t k) const
    {
        auto v = fold_monomial(*m_flat[k]);
        if (!v) {
            ctx(k).fail(ErrorKind::InvalidArgument, "expected a monomial such as -q^2 or i*q^(1/2)");
        }
        return *v;
    }
    // a modulus written as q^b with b > 0
    Rational base(std::size_t k) const
    {
        qseries::Monomial m = monomial(k);
        if (m.unit() != 0 || sgn(m.qexp()) <= 0) {
            ctx(k).fail(ErrorKind::NonPositiveRatio, "modulus must be q^b with b > 0");
        }
        return m.qexp();
    }
    Ctx ctx(std::size_t k) const
    {
        return Ctx{*m_flat[k], m_path + ".arg[" + std::to_string(k) + "]"};
    }

private:
    std::string m_path;
    std::vector<const Node *> m_flat;
};

Builder build_call(const Node &e, const std::string &path)
{
    const Args a(e, path);
    const std::string &n = e.name;
    if (n == "j" || n == "jbar") {
        const qseries::Monomial x = a.monomial(0);
        return theta_b(n == "j" ? x : -x, a.base(1));
    }
    if (n == "J" && a.size() == 1) {
        return Jm_b(a.rational(0));
    }
    if (n == "J") {
        return J_b(a.rational(0), a.rational(1));
    }
    if (n == "Jbar") {
        return Jbar_b(a.rational(0), a.rational(1));
    }
    if (n == "Jm") {
        return Jm_b(a.rational(0));
    }
    if (n == "eta") {
        return eta_b(a.rational(0));
    }
    if (n == "m") {
        return appell_b(AppellArgs{a.monomial(0), a.base(1), a.monomial(2)});
    }
    if (n == "f") {
        return hecke_b(HeckeArgs{a.integer(0), a.integer(1), a.integer(2), a.monomial(3), a.rational(5), a.monomial(4)});
    }
    if (n == "g") {
        return g_1b1(a.monomial(1), a.monomial(2), a.rational(3), a.integer(0), a.monomial(4), a.monomial(5));
    }
    if (n == "h") {
        return h_nn1(a.monomial(1), a.monomial(2), a.rational(3), a.integer(0), a.monomial(4), a.monomial(5));
    }
    const StringLabel lbl{a.integer(0), a.integer(1), a.integer(2)};
    if (n == "C") {
        return C_full(lbl);
    }
    if (n == "calC") {
        return calC_hecke(lbl);
    }
    return level_theta_side(lbl);
}

Builder build_node(const Node &e, const std::string &path)
{
    switch (e.kind) {
    case NodeKind::Number:
        return Builder::constant(Coefficient(e.number));
    case NodeKind::Monomial:
        return Builder::monomial(e.mono);
    case NodeKind::Neg:
        return -build(*e.lhs, path + ".operand");
    case NodeKind::Power:
        return build(*e.lhs, path + ".base").pow(e.exponent);
    case NodeKind::Binary: {
        Builder l = build(*e.lhs, path + ".lhs"), r = build(*e.rhs, path + ".rhs");
        switch (e.op) {
        case '+':
            return l + r;
        case '-':
            return l - r;
        case '*':
            return l * r;
        default:
            return l / r;
        }
    }
    case NodeKind::Call:
    default:
        return build_call(e, path);
    }
}

Builder build(const Node &e, const std::string &path)
{
    try {
        return tag(build_node(e, path), e, path);
    } catch (const EvalError &) {
        throw;
    } catch (const Error &err) {
        throw EvalError(err.kind(), path, print(e), err.detail());
    }
}

} // namespace

Builder to_builder(const Node &e)
{
    return build(e, "root");
}

QSeries evaluate(const Node &e, const Exponent &order)
{
    return to_builder(e)(order);
}

} // namespace qseries::expr
