#pragma once

// COPS / TPDB problem files, restricted to ground rules.
//
//   file  := block*
//   block := "(VAR" ident* ")" | "(RULES" rule ("," ? rule)* ")" | "(COMMENT" text ")"
//   rule  := term "->" term
//   term  := ident | ident "(" term ("," term)* ")"
//
// Comment text may nest balanced parentheses.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "gtrs/preprocess.hpp"
#include "gtrs/term.hpp"

namespace gtrs {

class ParseError : public Error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_, column_;
};

class IoError : public Error {
public:
  using Error::Error;
};

struct ProblemFile {
  Trs trs;
  std::optional<std::string> comment;
};

/// Throws ParseError on syntax errors, variables and arity conflicts.
ProblemFile parse_problem(std::string_view text);
inline Trs parse_trs(std::string_view text) { return parse_problem(text).trs; }

/// Reads and parses a file. Unreadable files throw IoError.
ProblemFile read_problem(const std::string& path);

/// COPS text that parses back to the same rules.
std::string print_problem(const Trs& trs, const std::optional<std::string>& comment = {});

/// Parses a single term into the curried store. Accepts the source syntax
/// f(t1,...,tn) and explicit application s ∘ t (left-associative, lowest
/// precedence, parentheses group).
TermId parse_curried_term(std::string_view text, CurriedTrs& ctrs);

} // namespace gtrs
