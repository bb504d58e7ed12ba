#include "bernalg/dsl.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <utility>

namespace bernalg {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '=' || c == '+' || c == ';' || c == ',') {
      tokens.push_back({std::string(1, c), i + 1});
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#' && line[i] != '=' &&
           line[i] != '+' && line[i] != ';' && line[i] != ',')
      ++i;
    tokens.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return tokens;
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '\'') return false;
  return true;
}

bool looks_numeric(std::string_view s) {
  return !s.empty() && (std::isdigit(static_cast<unsigned char>(s[0])) || s[0] == '-');
}

class Scope {
 public:
  explicit Scope(const std::vector<std::string>& names) {
    for (std::size_t i = 0; i < names.size(); ++i) index_.emplace(names[i], i);
  }

  std::size_t dim() const { return index_.size(); }

  std::size_t lookup(const Token& t, std::size_t line) const {
    auto it = index_.find(t.text);
    if (it == index_.end()) throw ParseError(line, t.column, "unknown identifier '" + t.text + "'");
    return it->second;
  }

 private:
  std::map<std::string, std::size_t, std::less<>> index_;
};

Rational expect_rational(const Token& t, std::size_t line) {
  auto r = parse_rational(t.text);
  if (!r) throw ParseError(line, t.column, "malformed rational '" + t.text + "'");
  return *r;
}

/// tokens[pos..] up to the end of the line form a linear combination.
Vec<Rational> parse_combination(const std::vector<Token>& tokens, std::size_t& pos, const Scope& scope, std::size_t line,
                                std::size_t end_column) {
  Vec<Rational> v(scope.dim());
  if (pos == tokens.size()) throw ParseError(line, end_column, "expected a linear combination");
  if (tokens[pos].text == "0" && (pos + 1 == tokens.size())) {
    ++pos;
    return v;
  }
  while (true) {
    if (pos == tokens.size()) throw ParseError(line, end_column, "expected a term");
    Rational coef(1);
    if (looks_numeric(tokens[pos].text)) {
      coef = expect_rational(tokens[pos], line);
      ++pos;
      if (pos == tokens.size()) throw ParseError(line, end_column, "expected an identifier after the coefficient");
    }
    const Token& id = tokens[pos];
    if (!is_identifier(id.text)) throw ParseError(line, id.column, "expected an identifier, got '" + id.text + "'");
    v[scope.lookup(id, line)] += coef;
    ++pos;
    if (pos == tokens.size()) return v;
    if (tokens[pos].text != "+") throw ParseError(line, tokens[pos].column, "expected '+' between terms");
    ++pos;
  }
}

std::size_t line_end_column(std::string_view line) { return line.size() + 1; }

}  // namespace

AlgebraFile parse_algebra(std::string_view text) {
  std::optional<std::string> name;
  std::optional<std::vector<std::string>> basis;
  std::map<std::size_t, Rational> weights;
  std::map<std::pair<std::size_t, std::size_t>, Vec<Rational>> products;
  std::optional<Scope> scope;

  std::size_t line_no = 0;
  std::istringstream stream{std::string(text)};
  std::string raw;
  while (std::getline(stream, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const std::vector<Token> tokens = tokenize(raw);
    if (tokens.empty()) continue;
    const Token& head = tokens[0];
    const std::size_t eol = line_end_column(raw);

    if (head.text == "algebra") {
      if (name) throw ParseError(line_no, head.column, "duplicate 'algebra' declaration");
      if (tokens.size() != 2) throw ParseError(line_no, eol, "expected 'algebra <name>'");
      if (!is_identifier(tokens[1].text)) throw ParseError(line_no, tokens[1].column, "invalid algebra name");
      name = tokens[1].text;
    } else if (head.text == "basis") {
      if (!name) throw ParseError(line_no, head.column, "'basis' before 'algebra'");
      if (basis) throw ParseError(line_no, head.column, "duplicate 'basis' declaration");
      if (tokens.size() < 2) throw ParseError(line_no, eol, "empty basis");
      std::vector<std::string> ids;
      for (std::size_t k = 1; k < tokens.size(); ++k) {
        const Token& t = tokens[k];
        if (!is_identifier(t.text)) throw ParseError(line_no, t.column, "invalid basis identifier '" + t.text + "'");
        for (const auto& prev : ids)
          if (prev == t.text) throw ParseError(line_no, t.column, "duplicate basis identifier '" + t.text + "'");
        ids.push_back(t.text);
      }
      basis = ids;
      scope.emplace(*basis);
    } else if (head.text == "weight") {
      if (!scope) throw ParseError(line_no, head.column, "'weight' before 'basis'");
      if (tokens.size() != 3) throw ParseError(line_no, eol, "expected 'weight <id> <p/q>'");
      const std::size_t i = scope->lookup(tokens[1], line_no);
      const Rational w = expect_rational(tokens[2], line_no);
      auto [it, inserted] = weights.emplace(i, w);
      if (!inserted && it->second != w)
        throw ParseError(line_no, tokens[1].column, "conflicting weight for '" + tokens[1].text + "'");
    } else if (head.text == "prod") {
      if (!scope) throw ParseError(line_no, head.column, "'prod' before 'basis'");
      if (tokens.size() < 4) throw ParseError(line_no, eol, "expected 'prod <id> <id> = <combination>'");
      std::size_t i = scope->lookup(tokens[1], line_no);
      std::size_t j = scope->lookup(tokens[2], line_no);
      if (tokens[3].text != "=") throw ParseError(line_no, tokens[3].column, "expected '='");
      std::size_t pos = 4;
      Vec<Rational> value = parse_combination(tokens, pos, *scope, line_no, eol);
      if (i > j) std::swap(i, j);
      auto [it, inserted] = products.emplace(std::make_pair(i, j), value);
      if (!inserted && it->second != value)
        throw ParseError(line_no, head.column,
                         "conflicting product for '" + tokens[1].text + "' and '" + tokens[2].text + "'");
    } else {
      throw ParseError(line_no, head.column, "unknown directive '" + head.text + "'");
    }
  }

  const std::size_t end_line = line_no + 1;
  if (!name) throw ParseError(end_line, 1, "missing 'algebra' declaration");
  if (!basis) throw ParseError(end_line, 1, "missing 'basis' declaration");

  AlgebraFile file{CommAlgebra<Rational>(*name, *basis), std::nullopt};
  for (auto& [ij, value] : products) file.algebra.set_product(ij.first, ij.second, std::move(value));
  if (!weights.empty()) {
    Vec<Rational> w(basis->size());
    for (const auto& [i, value] : weights) w[i] = value;
    file.weight = std::move(w);
  }
  return file;
}

std::string format_element(const Vec<Rational>& x, const std::vector<std::string>& basis_names) {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (is_zero(x[i])) continue;
    if (!out.empty()) out += " + ";
    out += x[i].get_str() + " " + basis_names.at(i);
  }
  return out.empty() ? "0" : out;
}

std::string serialize_algebra(const AlgebraFile& file) {
  const auto& a = file.algebra;
  std::ostringstream out;
  out << "algebra " << a.name() << "\n";
  out << "basis";
  for (const auto& id : a.basis_names()) out << " " << id;
  out << "\n";
  if (file.weight) {
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (!is_zero((*file.weight)[i])) out << "weight " << a.basis_names()[i] << " " << (*file.weight)[i].get_str() << "\n";
  }
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j) {
      const Vec<Rational>& p = a.stored_product(i, j);
      if (p.empty()) continue;
      out << "prod " << a.basis_names()[i] << " " << a.basis_names()[j] << " = " << format_element(p, a.basis_names())
          << "\n";
    }
  return out.str();
}

Vec<Rational> parse_element(std::string_view expr, const std::vector<std::string>& basis_names) {
  const Scope scope(basis_names);
  const std::vector<Token> tokens = tokenize(expr);
  std::size_t pos = 0;
  return parse_combination(tokens, pos, scope, 1, expr.size() + 1);
}

std::vector<Vec<Rational>> parse_elements(std::string_view text, const std::vector<std::string>& basis_names,
                                          char separator) {
  std::vector<Vec<Rational>> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find(separator, start);
    if (stop == std::string_view::npos) stop = text.size();
    const std::string_view piece = text.substr(start, stop - start);
    if (piece.find_first_not_of(" \t") != std::string_view::npos) out.push_back(parse_element(piece, basis_names));
    start = stop + 1;
  }
  return out;
}

}  // namespace bernalg
