#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "cyl/term.hpp"

namespace ca {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t line, std::size_t column);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_, column_;
};

struct ParseOptions {
    std::optional<Index> dim_bound;  // every index must be < dim_bound when set
};

std::variant<Term, Equation> parse(const std::string& text, const ParseOptions& opt = {});
Term parse_term(const std::string& text, const ParseOptions& opt = {});
Equation parse_equation(const std::string& text, const ParseOptions& opt = {});
// One equation per non-blank line; '#' starts a comment.
std::vector<Equation> parse_equation_file(const std::string& content, const ParseOptions& opt = {});

}  // namespace ca
