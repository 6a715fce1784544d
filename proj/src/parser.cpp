#include "cyl/parser.hpp"

#include <cctype>
#include <limits>

namespace ca {

ParseError::ParseError(const std::string& msg, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

namespace {

class Parser {
public:
    Parser(const std::string& s, const ParseOptions& o, std::size_t line) : s_(s), opt_(o), line_(line) {}

    std::variant<Term, Equation> top() {
        Term l = expr();
        skip();
        if (at_end()) return l;
        if (peek() == '=') {
            ++p_;
            Term r = expr();
            finish();
            return Equation{l, r};
        }
        if (peek() == '<' && p_ + 1 < s_.size() && s_[p_ + 1] == '=') {
            p_ += 2;
            Term r = expr();
            finish();
            return leq(l, r);
        }
        fail("unexpected '" + std::string(1, peek()) + "'");
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        if (p_ >= s_.size()) throw ParseError(msg == "" ? "unexpected end of input" : msg + " at end of input", line_, p_ + 1);
        throw ParseError(msg, line_, p_ + 1);
    }
    void skip() {
        while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
    }
    bool at_end() {
        skip();
        return p_ >= s_.size();
    }
    char peek() {
        skip();
        return p_ < s_.size() ? s_[p_] : '\0';
    }
    void expect(char c) {
        if (peek() != c) {
            if (at_end()) fail(std::string("expected '") + c + "'");
            fail(std::string("expected '") + c + "', found '" + s_[p_] + "'");
        }
        ++p_;
    }
    void finish() {
        if (!at_end()) fail("trailing input '" + std::string(1, s_[p_]) + "'");
    }

    Index index_value() {
        std::size_t start = p_;
        std::uint64_t v = 0;
        while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) {
            v = v * 10 + static_cast<unsigned>(s_[p_] - '0');
            if (v > std::numeric_limits<Index>::max()) fail("index too large");
            ++p_;
        }
        if (p_ == start) fail("expected index");
        if (opt_.dim_bound && v >= *opt_.dim_bound) {
            p_ = start;
            fail("index " + std::to_string(v) + " out of range (dimension " + std::to_string(*opt_.dim_bound) + ")");
        }
        return static_cast<Index>(v);
    }

    // sum := xor ('+' xor)*
    Term expr() {
        Term t = xor_();
        while (peek() == '+') {
            ++p_;
            t = sum(t, xor_());
        }
        return t;
    }
    Term xor_() {
        Term t = product();
        while (peek() == '^') {
            ++p_;
            t = symdiff(t, product());
        }
        return t;
    }
    Term product() {
        Term t = unary();
        while (peek() == '&') {
            ++p_;
            t = prod(t, unary());
        }
        return t;
    }
    Term unary() {
        char c = peek();
        if (c == '~') {
            ++p_;
            return comp(unary());
        }
        if (c == '(') {
            ++p_;
            Term t = expr();
            expect(')');
            return t;
        }
        if (c == '0' || c == '1') {
            ++p_;
            if (p_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[p_]))) fail("malformed constant");
            return c == '0' ? zero() : one();
        }
        if (c >= 'a' && c <= 'z') {
            std::size_t start = p_;
            while (p_ < s_.size() && (std::islower(static_cast<unsigned char>(s_[p_])) ||
                                      std::isdigit(static_cast<unsigned char>(s_[p_])) || s_[p_] == '_'))
                ++p_;
            std::string id = s_.substr(start, p_ - start);
            bool digits = id.size() > 1 && id.find_first_not_of("0123456789", 1) == std::string::npos;
            if (digits && id[0] == 'c') {
                p_ = start + 1;
                Index i = index_value();
                expect('(');
                Term t = expr();
                expect(')');
                return cyl(i, t);
            }
            if (digits && id[0] == 'd') {
                p_ = start + 1;
                Index i = index_value();
                expect(',');
                skip();
                Index j = index_value();
                return diag(i, j);
            }
            return var(id);
        }
        if (c == '\0') fail("");
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    const ParseOptions& opt_;
    std::size_t line_;
    std::size_t p_ = 0;
};

}  // namespace

std::variant<Term, Equation> parse(const std::string& text, const ParseOptions& opt) {
    Parser p(text, opt, 1);
    return p.top();
}

Term parse_term(const std::string& text, const ParseOptions& opt) {
    auto r = parse(text, opt);
    if (auto* t = std::get_if<Term>(&r)) return *t;
    throw ParseError("expected a term, found an equation", 1, 1);
}

Equation parse_equation(const std::string& text, const ParseOptions& opt) {
    auto r = parse(text, opt);
    if (auto* e = std::get_if<Equation>(&r)) return *e;
    throw ParseError("expected an equation", 1, text.size() + 1);
}

std::vector<Equation> parse_equation_file(const std::string& content, const ParseOptions& opt) {
    std::vector<Equation> out;
    std::size_t line = 0, pos = 0;
    while (pos <= content.size()) {
        std::size_t nl = content.find('\n', pos);
        if (nl == std::string::npos) nl = content.size();
        std::string ln = content.substr(pos, nl - pos);
        ++line;
        pos = nl + 1;
        if (auto h = ln.find('#'); h != std::string::npos) ln.resize(h);
        if (ln.find_first_not_of(" \t\r") == std::string::npos) continue;
        Parser p(ln, opt, line);
        auto r = p.top();
        auto* e = std::get_if<Equation>(&r);
        if (!e) throw ParseError("expected an equation", line, 1);
        out.push_back(*e);
    }
    return out;
}

}  // namespace ca
