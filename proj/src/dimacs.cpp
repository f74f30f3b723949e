#include "cpgame/dimacs.hpp"

#include <cctype>
#include <cstdlib>
#include <limits>

#include "cpgame/errors.hpp"

namespace cpgame {

namespace {

struct Token {
  long value = 0;
  int line = 0;
  int column = 0;
};

class Scanner {
public:
  explicit Scanner(std::string_view text) : text_(text) {}

  // Splits the input into integer tokens, skipping comment lines.  The
  // header line is handled separately via next_header_line().
  bool next_line(std::string_view& line, int& line_number) {
    while (pos_ < text_.size()) {
      std::size_t end = text_.find('\n', pos_);
      if (end == std::string_view::npos) end = text_.size();
      line = text_.substr(pos_, end - pos_);
      pos_ = end + 1;
      line_number = ++line_number_;
      return true;
    }
    return false;
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_number_ = 0;
};

bool blank(std::string_view line) {
  for (char c : line) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

long parse_int(std::string_view token, int line, int column) {
  std::size_t k = 0;
  bool negative = false;
  if (k < token.size() && token[k] == '-') {
    negative = true;
    ++k;
  }
  if (k == token.size()) throw ParseError("expected an integer, got \"" + std::string(token) + "\"", line, column);
  long value = 0;
  for (; k < token.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(token[k]))) {
      throw ParseError("expected an integer, got \"" + std::string(token) + "\"", line, column);
    }
    value = value * 10 + (token[k] - '0');
    if (value > std::numeric_limits<int>::max()) {
      throw ParseError("integer out of range: \"" + std::string(token) + "\"", line, column);
    }
  }
  return negative ? -value : value;
}

void tokenize_line(std::string_view line, int line_number, std::vector<Token>& out) {
  std::size_t k = 0;
  while (k < line.size()) {
    while (k < line.size() && std::isspace(static_cast<unsigned char>(line[k]))) ++k;
    if (k >= line.size()) break;
    std::size_t start = k;
    while (k < line.size() && !std::isspace(static_cast<unsigned char>(line[k]))) ++k;
    std::string_view token = line.substr(start, k - start);
    out.push_back(Token{parse_int(token, line_number, static_cast<int>(start) + 1), line_number,
                        static_cast<int>(start) + 1});
  }
}

}  // namespace

CnfFormula parse_dimacs(std::string_view text) {
  Scanner scanner(text);
  std::string_view line;
  int line_number = 0;

  int declared_vars = -1;
  long declared_clauses = -1;
  std::vector<Token> tokens;

  while (scanner.next_line(line, line_number)) {
    if (blank(line)) continue;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (line[first] == 'c') continue;
    if (line[first] == 'p') {
      if (declared_vars >= 0) throw ParseError("duplicate header", line_number, static_cast<int>(first) + 1);
      // "p cnf <vars> <clauses>"
      std::size_t k = first + 1;
      while (k < line.size() && std::isspace(static_cast<unsigned char>(line[k]))) ++k;
      if (line.substr(k, 3) != "cnf") {
        throw ParseError("header must read \"p cnf <vars> <clauses>\"", line_number, static_cast<int>(k) + 1);
      }
      std::vector<Token> header;
      tokenize_line(line.substr(k + 3), line_number, header);
      if (header.size() != 2 || header[0].value < 0 || header[1].value < 0) {
        throw ParseError("header must read \"p cnf <vars> <clauses>\"", line_number, static_cast<int>(first) + 1);
      }
      declared_vars = static_cast<int>(header[0].value);
      declared_clauses = header[1].value;
      continue;
    }
    if (declared_vars < 0) {
      throw ParseError("clause data before the \"p cnf\" header", line_number, static_cast<int>(first) + 1);
    }
    tokenize_line(line, line_number, tokens);
  }
  if (declared_vars < 0) throw ParseError("missing \"p cnf\" header");

  CnfFormula formula;
  formula.variable_count = declared_vars;

  std::vector<Literal> current;
  Token last{};
  for (const Token& token : tokens) {
    last = token;
    if (token.value == 0) {
      if (current.empty()) {
        throw ParseError("empty clause", token.line, token.column);
      }
      if (current.size() > 3) {
        throw ParseError("clause has " + std::to_string(current.size()) + " literals; at most three are allowed",
                         token.line, token.column);
      }
      formula.clauses.push_back(make_clause(current));
      current.clear();
      continue;
    }
    const long variable = token.value < 0 ? -token.value : token.value;
    if (variable > declared_vars) {
      throw ParseError("variable " + std::to_string(variable) + " out of range 1.." +
                           std::to_string(declared_vars),
                       token.line, token.column);
    }
    current.push_back(Literal{static_cast<int>(variable), token.value < 0});
  }
  if (!current.empty()) {
    throw ParseError("unterminated clause at end of input", last.line, last.column);
  }
  if (static_cast<long>(formula.clauses.size()) != declared_clauses) {
    throw ParseError("header declares " + std::to_string(declared_clauses) + " clauses but " +
                     std::to_string(formula.clauses.size()) + " were given");
  }
  for (const std::string& violation : formula.validate()) {
    throw ParseError(violation);
  }
  return formula;
}

std::string write_dimacs(const CnfFormula& formula) {
  std::string out = "p cnf " + std::to_string(formula.variable_count) + " " +
                    std::to_string(formula.clauses.size()) + "\n";
  for (const Clause& clause : formula.clauses) {
    for (int j = 0; j < clause.original_width; ++j) {
      const Literal& lit = clause.literals[j];
      if (lit.negated) out += '-';
      out += std::to_string(lit.variable);
      out += ' ';
    }
    out += "0\n";
  }
  return out;
}

}  // namespace cpgame
