#include "iwb/pi/statement.hpp"

#include "pi_parse.hpp"

namespace iwb::pi {

struct Term::Rep {
  Kind kind;
  std::string name;
  Natural value;
  std::unique_ptr<Term> lhs_term;
  std::unique_ptr<Term> rhs_term;
};

Term Term::variable(std::string name) {
  auto rep = std::make_shared<Rep>();
  rep->kind = Kind::Variable;
  rep->name = std::move(name);
  return Term(std::move(rep));
}

Term Term::numeral(Natural value) {
  if (value < 0) throw DomainError("numerals are natural numbers");
  auto rep = std::make_shared<Rep>();
  rep->kind = Kind::Numeral;
  rep->value = std::move(value);
  return Term(std::move(rep));
}

Term Term::sum(Term lhs, Term rhs) {
  auto rep = std::make_shared<Rep>();
  rep->kind = Kind::Sum;
  rep->lhs_term = std::make_unique<Term>(std::move(lhs));
  rep->rhs_term = std::make_unique<Term>(std::move(rhs));
  return Term(std::move(rep));
}

Term::Kind Term::kind() const noexcept { return rep_->kind; }

const std::string& Term::name() const {
  if (rep_->kind != Kind::Variable) throw DomainError("term is not a variable");
  return rep_->name;
}

const Natural& Term::value() const {
  if (rep_->kind != Kind::Numeral) throw DomainError("term is not a numeral");
  return rep_->value;
}

const Term& Term::lhs() const {
  if (rep_->kind != Kind::Sum) throw DomainError("term is not a sum");
  return *rep_->lhs_term;
}

const Term& Term::rhs() const {
  if (rep_->kind != Kind::Sum) throw DomainError("term is not a sum");
  return *rep_->rhs_term;
}

namespace {

void print_term(const Term& term, bool nested, std::string& out) {
  switch (term.kind()) {
    case Term::Kind::Variable: out += term.name(); break;
    case Term::Kind::Numeral: out += term.value().str(); break;
    case Term::Kind::Sum:
      if (nested) out += '(';
      print_term(term.lhs(), true, out);
      out += '+';
      print_term(term.rhs(), true, out);
      if (nested) out += ')';
      break;
  }
}

}  // namespace

std::string Term::print() const {
  std::string out;
  print_term(*this, false, out);
  return out;
}

void Term::collect_variables(std::set<std::string>& out) const {
  switch (kind()) {
    case Kind::Variable: out.insert(name()); break;
    case Kind::Numeral: break;
    case Kind::Sum:
      lhs().collect_variables(out);
      rhs().collect_variables(out);
      break;
  }
}

void Term::collect_subterms(std::set<std::string>& printed, std::vector<Term>& out) const {
  if (kind() == Kind::Sum) {
    lhs().collect_subterms(printed, out);
    rhs().collect_subterms(printed, out);
  }
  if (printed.insert(print()).second) out.push_back(*this);
}

bool operator==(const Term& a, const Term& b) {
  if (a.rep_ == b.rep_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Variable: return a.name() == b.name();
    case Term::Kind::Numeral: return a.value() == b.value();
    case Term::Kind::Sum: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
  return false;
}

std::string print(const Statement& statement) {
  struct Printer {
    std::string operator()(const FbarAtom& s) const {
      return "fbar(" + s.x.str() + ") is " + std::to_string(s.bit);
    }
    std::string operator()(const Greater& s) const {
      return s.lhs.print() + " > " + s.rhs.print();
    }
    std::string operator()(const IntTyping& s) const { return "int(" + s.term.print() + ")"; }
  };
  return std::visit(Printer{}, statement);
}

std::set<std::string> variables_of(const Statement& statement) {
  std::set<std::string> out;
  if (const auto* g = std::get_if<Greater>(&statement)) {
    g->lhs.collect_variables(out);
    g->rhs.collect_variables(out);
  } else if (const auto* t = std::get_if<IntTyping>(&statement)) {
    t->term.collect_variables(out);
  }
  return out;
}

bool is_identifier(std::string_view text) {
  if (text.empty() || !iwb::detail::is_lower(text[0])) return false;
  for (char c : text) {
    if (!iwb::detail::is_lower(c) && !iwb::detail::is_digit(c)) return false;
  }
  return text != "fbar" && text != "int" && text != "is";
}

namespace detail {

using iwb::detail::TextCursor;

std::optional<Natural> parse_numeral_at(TextCursor& cursor) {
  const std::size_t start = cursor.pos();
  if (!iwb::detail::is_digit(cursor.peek())) {
    cursor.fail("numeral");
    return std::nullopt;
  }
  std::string digits;
  while (iwb::detail::is_digit(cursor.peek())) {
    digits += cursor.peek();
    cursor.reset(cursor.pos() + 1);
  }
  if (digits.size() > 1 && digits[0] == '0') {
    cursor.reset(start);
    cursor.fail("", "numerals have no leading zeros");
    return std::nullopt;
  }
  return parse_natural(digits);
}

std::optional<std::string> parse_identifier_at(TextCursor& cursor) {
  const std::size_t start = cursor.pos();
  if (!iwb::detail::is_lower(cursor.peek())) {
    cursor.fail("identifier");
    return std::nullopt;
  }
  std::string name;
  while (iwb::detail::is_lower(cursor.peek()) || iwb::detail::is_digit(cursor.peek())) {
    name += cursor.peek();
    cursor.reset(cursor.pos() + 1);
  }
  if (!is_identifier(name)) {
    cursor.reset(start);
    cursor.fail("identifier", "'" + name + "' is reserved");
    return std::nullopt;
  }
  return name;
}

namespace {

// atom := identifier | numeral | '(' atom '+' atom ')'
std::optional<Term> parse_atom_at(TextCursor& cursor) {
  const char c = cursor.peek();
  if (iwb::detail::is_digit(c)) {
    auto n = parse_numeral_at(cursor);
    if (!n) return std::nullopt;
    return Term::numeral(std::move(*n));
  }
  if (iwb::detail::is_lower(c)) {
    auto name = parse_identifier_at(cursor);
    if (!name) return std::nullopt;
    return Term::variable(std::move(*name));
  }
  if (c != '(') {
    cursor.fail("identifier");
    cursor.fail("numeral");
    cursor.fail("(");
    return std::nullopt;
  }
  cursor.consume("(");
  cursor.skip_blanks();
  auto lhs = parse_atom_at(cursor);
  if (!lhs) return std::nullopt;
  cursor.skip_blanks();
  if (!cursor.expect("+")) return std::nullopt;
  cursor.skip_blanks();
  auto rhs = parse_atom_at(cursor);
  if (!rhs) return std::nullopt;
  cursor.skip_blanks();
  if (!cursor.expect(")")) return std::nullopt;
  return Term::sum(std::move(*lhs), std::move(*rhs));
}

}  // namespace

// term := atom ['+' atom]
std::optional<Term> parse_term_at(TextCursor& cursor) {
  auto lhs = parse_atom_at(cursor);
  if (!lhs) return std::nullopt;
  const std::size_t after = cursor.pos();
  cursor.skip_blanks();
  if (!cursor.consume("+")) {
    cursor.fail("+");
    cursor.reset(after);
    return lhs;
  }
  cursor.skip_blanks();
  auto rhs = parse_atom_at(cursor);
  if (!rhs) return std::nullopt;
  return Term::sum(std::move(*lhs), std::move(*rhs));
}

namespace {

bool consume_keyword(TextCursor& cursor, std::string_view keyword) {
  const std::size_t start = cursor.pos();
  if (!cursor.consume(keyword)) return false;
  const char next = cursor.peek();
  if (iwb::detail::is_lower(next) || iwb::detail::is_digit(next)) {
    cursor.reset(start);
    return false;
  }
  return true;
}

}  // namespace

std::optional<Statement> parse_statement_at(TextCursor& cursor) {
  if (consume_keyword(cursor, "fbar")) {
    cursor.skip_blanks();
    if (!cursor.expect("(")) return std::nullopt;
    cursor.skip_blanks();
    const std::size_t at = cursor.pos();
    auto x = parse_numeral_at(cursor);
    if (!x) return std::nullopt;
    if (*x == 0) {
      cursor.reset(at);
      cursor.fail("", "fbar is defined on positive integers; x must be positive");
      return std::nullopt;
    }
    cursor.skip_blanks();
    if (!cursor.expect(")")) return std::nullopt;
    cursor.skip_blanks();
    if (!cursor.expect("is")) return std::nullopt;
    cursor.skip_blanks();
    int bit;
    if (cursor.consume("0")) {
      bit = 0;
    } else if (cursor.consume("1")) {
      bit = 1;
    } else {
      cursor.fail("0");
      cursor.fail("1");
      return std::nullopt;
    }
    if (iwb::detail::is_digit(cursor.peek())) {
      cursor.fail("", "the value of fbar is a single bit");
      return std::nullopt;
    }
    return Statement{FbarAtom{std::move(*x), bit}};
  }
  if (consume_keyword(cursor, "int")) {
    cursor.skip_blanks();
    if (!cursor.expect("(")) return std::nullopt;
    cursor.skip_blanks();
    auto term = parse_term_at(cursor);
    if (!term) return std::nullopt;
    cursor.skip_blanks();
    if (!cursor.expect(")")) return std::nullopt;
    return Statement{IntTyping{std::move(*term)}};
  }
  auto lhs = parse_term_at(cursor);
  if (!lhs) {
    cursor.fail("fbar");
    cursor.fail("int");
    return std::nullopt;
  }
  cursor.skip_blanks();
  if (!cursor.expect(">")) return std::nullopt;
  cursor.skip_blanks();
  auto rhs = parse_term_at(cursor);
  if (!rhs) return std::nullopt;
  return Statement{Greater{std::move(*lhs), std::move(*rhs)}};
}

}  // namespace detail

namespace {

template <class T, class F>
ParseResult<T> parse_whole(std::string_view text, F&& parse_at) {
  iwb::detail::TextCursor cursor(text);
  cursor.skip_blanks();
  auto value = parse_at(cursor);
  if (!value) return cursor.error();
  cursor.skip_blanks();
  if (!cursor.at_end()) {
    cursor.fail("end of input");
    return cursor.error();
  }
  return std::move(*value);
}

}  // namespace

ParseResult<Term> parse_term(std::string_view text) {
  return parse_whole<Term>(text, detail::parse_term_at);
}

ParseResult<Statement> parse_statement(std::string_view text) {
  return parse_whole<Statement>(text, detail::parse_statement_at);
}

Statement parse_statement_or_throw(std::string_view text) {
  return value_or_throw(parse_statement(text));
}

bool can_form(const Statement& statement) {
  if (const auto* atom = std::get_if<FbarAtom>(&statement)) {
    return atom->x >= 1 && (atom->bit == 0 || atom->bit == 1);
  }
  return true;
}

FbarAtom negate_fbar(const Statement& statement) {
  const auto* atom = std::get_if<FbarAtom>(&statement);
  if (atom == nullptr) {
    throw DomainError("negation is defined only for fbar statements, not '" + print(statement) +
                      "'");
  }
  return FbarAtom{atom->x, 1 - atom->bit};
}

}  // namespace iwb::pi
