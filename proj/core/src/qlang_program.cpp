#include "iwb/qlang/program.hpp"

#include <algorithm>
#include <optional>

namespace iwb::qlang {

namespace {

constexpr std::string_view kSymbols = "x0123456789()+%=>!&|";

constexpr std::string_view kGrammarText = R"(# Q-lang, fully parenthesized
prog    ::= bexp
bexp    ::= '!' bexp
          | '(' bexp '&' bexp ')'
          | '(' bexp '|' bexp ')'
          | '(' aexp cmp aexp ')'
cmp     ::= '=' | '>'
aexp    ::= 'x' | numeral | '(' aexp '+' aexp ')' | '(' aexp '%' aexp ')'
numeral ::= '0' | nonzero | nonzero digits
digits  ::= digit | digit digits
digit   ::= '0' | nonzero
nonzero ::= '1' | '2' | '3' | '4' | '5' | '6' | '7' | '8' | '9'
)";

bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Parser {
 public:
  Parser(std::string_view text, bool build) : text_(text), build_(build) {}

  std::optional<std::size_t> run() {
    auto end = bexp(0);
    if (end && *end != text_.size()) {
      fail(*end, {"end of input"});
      return std::nullopt;
    }
    return end;
  }

  std::vector<Node> take_nodes() { return std::move(nodes_); }

  ParseError error() const {
    ParseError e;
    e.position = furthest_;
    e.expected.assign(expected_.begin(), expected_.end());
    std::sort(e.expected.begin(), e.expected.end());
    e.expected.erase(std::unique(e.expected.begin(), e.expected.end()), e.expected.end());
    e.message = furthest_ < text_.size()
                    ? "unexpected '" + std::string(1, text_[furthest_]) + "'"
                    : "unexpected end of input";
    return e;
  }

 private:
  char peek(std::size_t pos) const { return pos < text_.size() ? text_[pos] : '\0'; }

  // Only parse() reports errors; is_valid() skips the bookkeeping.
  void fail(std::size_t pos, std::initializer_list<const char*> expected) {
    if (!build_ || pos < furthest_) return;
    if (pos > furthest_) {
      furthest_ = pos;
      expected_.clear();
    }
    for (const char* e : expected) expected_.emplace_back(e);
  }

  void emit(NodeKind kind, std::uint32_t lhs = 0, std::uint32_t rhs = 0, Natural literal = 0) {
    if (!build_) return;
    nodes_.push_back(Node{kind, std::move(literal), lhs, rhs});
  }

  std::uint32_t last() const { return build_ ? static_cast<std::uint32_t>(nodes_.size() - 1) : 0; }

  std::optional<std::size_t> bexp(std::size_t pos) {
    const char c = peek(pos);
    if (c == '!') {
      auto end = bexp(pos + 1);
      if (!end) return std::nullopt;
      emit(NodeKind::Not, last());
      return end;
    }
    if (c != '(') {
      fail(pos, {"!", "("});
      return std::nullopt;
    }
    const std::size_t mark = nodes_.size();
    if (auto end = comparison(pos)) return end;
    nodes_.resize(mark);
    return connective(pos);
  }

  // '(' aexp cmp aexp ')'
  std::optional<std::size_t> comparison(std::size_t pos) {
    auto mid = aexp(pos + 1);
    if (!mid) return std::nullopt;
    const std::uint32_t lhs = last();
    NodeKind kind;
    if (peek(*mid) == '=') {
      kind = NodeKind::Equal;
    } else if (peek(*mid) == '>') {
      kind = NodeKind::Greater;
    } else {
      fail(*mid, {"=", ">"});
      return std::nullopt;
    }
    auto end = aexp(*mid + 1);
    if (!end) return std::nullopt;
    const std::uint32_t rhs = last();
    if (peek(*end) != ')') {
      fail(*end, {")"});
      return std::nullopt;
    }
    emit(kind, lhs, rhs);
    return *end + 1;
  }

  // '(' bexp ('&' | '|') bexp ')'
  std::optional<std::size_t> connective(std::size_t pos) {
    auto mid = bexp(pos + 1);
    if (!mid) return std::nullopt;
    const std::uint32_t lhs = last();
    NodeKind kind;
    if (peek(*mid) == '&') {
      kind = NodeKind::And;
    } else if (peek(*mid) == '|') {
      kind = NodeKind::Or;
    } else {
      fail(*mid, {"&", "|"});
      return std::nullopt;
    }
    auto end = bexp(*mid + 1);
    if (!end) return std::nullopt;
    const std::uint32_t rhs = last();
    if (peek(*end) != ')') {
      fail(*end, {")"});
      return std::nullopt;
    }
    emit(kind, lhs, rhs);
    return *end + 1;
  }

  std::optional<std::size_t> aexp(std::size_t pos) {
    const char c = peek(pos);
    if (c == 'x') {
      emit(NodeKind::Input);
      return pos + 1;
    }
    if (is_digit(c)) {
      std::size_t end = pos + 1;
      if (c != '0') {
        while (is_digit(peek(end))) ++end;
        fail(end, {"digit"});
      }
      if (build_) emit(NodeKind::Literal, 0, 0, parse_natural(text_.substr(pos, end - pos)));
      return end;
    }
    if (c != '(') {
      fail(pos, {"x", "digit", "("});
      return std::nullopt;
    }
    auto mid = aexp(pos + 1);
    if (!mid) return std::nullopt;
    const std::uint32_t lhs = last();
    NodeKind kind;
    if (peek(*mid) == '+') {
      kind = NodeKind::Add;
    } else if (peek(*mid) == '%') {
      kind = NodeKind::Mod;
    } else {
      fail(*mid, {"+", "%"});
      return std::nullopt;
    }
    auto end = aexp(*mid + 1);
    if (!end) return std::nullopt;
    const std::uint32_t rhs = last();
    if (peek(*end) != ')') {
      fail(*end, {")"});
      return std::nullopt;
    }
    emit(kind, lhs, rhs);
    return *end + 1;
  }

  std::string_view text_;
  bool build_;
  std::vector<Node> nodes_;
  std::size_t furthest_ = 0;
  std::vector<std::string> expected_;
};

void print_node(const std::vector<Node>& nodes, std::uint32_t index, std::string& out) {
  const Node& node = nodes[index];
  auto binary = [&](char op) {
    out += '(';
    print_node(nodes, node.lhs, out);
    out += op;
    print_node(nodes, node.rhs, out);
    out += ')';
  };
  switch (node.kind) {
    case NodeKind::Input: out += 'x'; break;
    case NodeKind::Literal: out += node.literal.str(); break;
    case NodeKind::Add: binary('+'); break;
    case NodeKind::Mod: binary('%'); break;
    case NodeKind::Equal: binary('='); break;
    case NodeKind::Greater: binary('>'); break;
    case NodeKind::And: binary('&'); break;
    case NodeKind::Or: binary('|'); break;
    case NodeKind::Not:
      out += '!';
      print_node(nodes, node.lhs, out);
      break;
  }
}

}  // namespace

const enumerator::Alphabet& alphabet() {
  static const enumerator::Alphabet instance = enumerator::Alphabet::from_chars(kSymbols);
  return instance;
}

const enumerator::Grammar& grammar() {
  static const enumerator::Grammar instance = enumerator::Grammar::parse(alphabet(), kGrammarText);
  return instance;
}

const enumerator::GrammarEnumerator& program_enumerator() {
  static const enumerator::GrammarEnumerator instance(grammar());
  return instance;
}

std::string Program::print() const {
  std::string out;
  out.reserve(source_.size());
  print_node(nodes_, root(), out);
  return out;
}

ParseResult<Program> parse(std::string_view text) {
  Parser parser(text, /*build=*/true);
  if (!parser.run()) return parser.error();
  Program program;
  program.source_ = std::string(text);
  program.nodes_ = parser.take_nodes();
  return program;
}

Program parse_or_throw(std::string_view text) { return value_or_throw(parse(text)); }

bool is_valid(std::string_view text) {
  Parser parser(text, /*build=*/false);
  return parser.run().has_value();
}

int eval(const Program& program, const Natural& x) {
  if (x < 1) throw DomainError("Q-lang programs are evaluated on positive integers only");
  const auto& nodes = program.nodes();
  // Post-order storage: operands always precede their parent.
  std::vector<Natural> value(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Node& n = nodes[i];
    switch (n.kind) {
      case NodeKind::Input: value[i] = x; break;
      case NodeKind::Literal: value[i] = n.literal; break;
      case NodeKind::Add: value[i] = value[n.lhs] + value[n.rhs]; break;
      case NodeKind::Mod:
        value[i] = value[n.rhs] == 0 ? Natural(0) : Natural(value[n.lhs] % value[n.rhs]);
        break;
      case NodeKind::Equal: value[i] = value[n.lhs] == value[n.rhs] ? 1 : 0; break;
      case NodeKind::Greater: value[i] = value[n.lhs] > value[n.rhs] ? 1 : 0; break;
      case NodeKind::Not: value[i] = value[n.lhs] == 0 ? 1 : 0; break;
      case NodeKind::And: value[i] = (value[n.lhs] != 0 && value[n.rhs] != 0) ? 1 : 0; break;
      case NodeKind::Or: value[i] = (value[n.lhs] != 0 || value[n.rhs] != 0) ? 1 : 0; break;
    }
  }
  return value.back() != 0 ? 1 : 0;
}

}  // namespace iwb::qlang
