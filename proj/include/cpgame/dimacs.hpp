#pragma once

#include <string>
#include <string_view>

#include "cpgame/cnf.hpp"

namespace cpgame {

/// Parses DIMACS CNF: "c" comment lines, a "p cnf <vars> <clauses>" header,
/// then whitespace-separated literals with each clause terminated by 0.
/// Clauses narrower than three literals are padded by duplicating the last
/// literal (the original width is preserved); clauses wider than three are
/// rejected.  Throws ParseError with line/column for malformed input, and
/// without a position for end-of-input problems such as an unterminated
/// clause or a declared variable that occurs in no clause.
CnfFormula parse_dimacs(std::string_view text);

/// Renders DIMACS with one clause per line at its original width.
std::string write_dimacs(const CnfFormula& formula);

}  // namespace cpgame
