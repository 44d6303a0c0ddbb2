#ifndef FOLKIT_PARSER_HPP
#define FOLKIT_PARSER_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "folkit/mpoly.hpp"

namespace folkit {

// Polynomial expression grammar: integer/rational literals, the declared
// variable names, + - * ^ (non-negative integer exponents), parentheses, and
// unary minus. Whitespace insensitive.
MPoly parse_expression(const std::string& src, const std::vector<std::string>& vars);

struct SourceCase {
    std::string name;
    std::vector<std::string> variables;
    std::vector<std::string> field_components;      // expression strings
    std::vector<std::string> curves;                // optional
    std::vector<std::string> automorphism;          // optional, forward
    std::vector<std::string> automorphism_inverse;  // optional
    std::map<std::string, std::string> expected;    // invariant name -> literal

    std::vector<MPoly> parsed_components() const;
    std::vector<MPoly> parsed_curves() const;
    std::vector<MPoly> parsed_automorphism() const;
    std::vector<MPoly> parsed_automorphism_inverse() const;
};

SourceCase load_case_file(const std::string& path);
SourceCase parse_case_text(const std::string& text, const std::string& display_name);

} // namespace folkit

#endif
