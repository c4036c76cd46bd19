#include "iwb/enumerator/grammar.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <unordered_map>

#include "iwb/error.hpp"

namespace iwb::enumerator {

// ---------------------------------------------------------------------------
// Grammar

Grammar::Grammar(Alphabet terminals, std::vector<std::string> nonterminals,
                 std::vector<Production> productions, std::uint32_t start)
    : terminals_(std::move(terminals)),
      nonterminals_(std::move(nonterminals)),
      productions_(std::move(productions)),
      start_(start) {
  validate();
}

void Grammar::validate() {
  const std::size_t n = nonterminals_.size();
  if (start_ >= n) throw DomainError("grammar start symbol is undeclared");

  by_lhs_.assign(n, {});
  for (std::size_t p = 0; p < productions_.size(); ++p) {
    const auto& prod = productions_[p];
    if (prod.lhs >= n) throw DomainError("production for undeclared nonterminal");
    if (prod.rhs.empty()) {
      throw DomainError("empty production for '" + nonterminals_[prod.lhs] +
                        "' (epsilon rules are not supported)");
    }
    for (const auto& sym : prod.rhs) {
      if (sym.is_terminal() ? sym.id >= terminals_.size() : sym.id >= n) {
        throw DomainError("production for '" + nonterminals_[prod.lhs] +
                          "' uses an undeclared symbol");
      }
    }
    by_lhs_[prod.lhs].push_back(p);
  }

  // Unit-production graph must be acyclic; its reverse topological order lets
  // same-length counts be filled in one sweep.
  std::vector<std::vector<std::uint32_t>> unit_edges(n);
  for (const auto& prod : productions_) {
    if (prod.rhs.size() == 1 && !prod.rhs[0].is_terminal()) {
      unit_edges[prod.lhs].push_back(prod.rhs[0].id);
    }
  }
  std::vector<int> mark(n, 0);
  unit_order_.clear();
  std::function<void(std::uint32_t)> visit = [&](std::uint32_t v) {
    if (mark[v] == 2) return;
    if (mark[v] == 1) {
      throw DomainError("unit-production cycle through '" + nonterminals_[v] + "'");
    }
    mark[v] = 1;
    for (auto w : unit_edges[v]) visit(w);
    mark[v] = 2;
    unit_order_.push_back(v);
  };
  for (std::uint32_t v = 0; v < n; ++v) visit(v);

  // Productive nonterminals: fixpoint.
  std::vector<bool> productive(n, false);
  auto production_productive = [&](const Production& prod) {
    return std::all_of(prod.rhs.begin(), prod.rhs.end(), [&](const GrammarSymbol& s) {
      return s.is_terminal() || productive[s.id];
    });
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& prod : productions_) {
      if (!productive[prod.lhs] && production_productive(prod)) {
        productive[prod.lhs] = true;
        changed = true;
      }
    }
  }
  if (!productive[start_]) {
    throw DomainError("grammar generates no finite word from '" + nonterminals_[start_] + "'");
  }

  // Useful part: reachable from start through productive productions.
  std::vector<std::vector<std::uint32_t>> edges(n);
  for (const auto& prod : productions_) {
    if (!production_productive(prod)) continue;
    for (const auto& s : prod.rhs) {
      if (!s.is_terminal()) edges[prod.lhs].push_back(s.id);
    }
  }
  std::vector<bool> reachable(n, false);
  std::vector<std::uint32_t> work{start_};
  reachable[start_] = true;
  while (!work.empty()) {
    auto v = work.back();
    work.pop_back();
    for (auto w : edges[v]) {
      if (!reachable[w]) {
        reachable[w] = true;
        work.push_back(w);
      }
    }
  }

  // Any cycle among useful nonterminals pumps at least one terminal (no
  // epsilon rules, no unit cycles), so it makes the language infinite.
  std::fill(mark.begin(), mark.end(), 0);
  std::vector<std::uint32_t> topo;
  infinite_ = false;
  std::function<void(std::uint32_t)> dfs = [&](std::uint32_t v) {
    mark[v] = 1;
    for (auto w : edges[v]) {
      if (!reachable[w]) continue;
      if (mark[w] == 1) infinite_ = true;
      if (mark[w] == 0) dfs(w);
    }
    mark[v] = 2;
    topo.push_back(v);
  };
  dfs(start_);

  max_length_.reset();
  if (!infinite_) {
    std::vector<std::size_t> longest(n, 0);
    for (auto v : topo) {  // children first
      for (auto p : by_lhs_[v]) {
        const auto& prod = productions_[p];
        if (!production_productive(prod)) continue;
        std::size_t len = 0;
        for (const auto& s : prod.rhs) len += s.is_terminal() ? 1 : longest[s.id];
        longest[v] = std::max(longest[v], len);
      }
    }
    max_length_ = longest[start_];
  }
}

namespace {

struct GrammarTextParser {
  const Alphabet& alphabet;
  std::vector<std::string> names;
  std::unordered_map<std::string, std::uint32_t> ids;

  std::uint32_t intern(const std::string& name) {
    auto [it, inserted] = ids.emplace(name, static_cast<std::uint32_t>(names.size()));
    if (inserted) names.push_back(name);
    return it->second;
  }
};

[[noreturn]] void grammar_syntax(std::size_t line, const std::string& what) {
  throw DomainError("grammar text line " + std::to_string(line) + ": " + what);
}

}  // namespace

Grammar Grammar::parse(Alphabet terminals, std::string_view text) {
  GrammarTextParser parser{terminals, {}, {}};
  std::vector<Production> productions;
  std::vector<bool> defined;
  std::optional<std::uint32_t> current;
  std::optional<std::uint32_t> start;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    std::size_t i = 0;
    auto skip_space = [&] {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    };
    auto read_ident = [&] {
      const std::size_t begin = i;
      while (i < line.size() &&
             (std::isalnum(static_cast<unsigned char>(line[i])) || line[i] == '_')) {
        ++i;
      }
      return std::string(line.substr(begin, i - begin));
    };

    skip_space();
    if (i == line.size() || line[i] == '#') continue;

    if (line[i] != '|') {
      const std::string lhs = read_ident();
      if (lhs.empty()) grammar_syntax(line_no, "expected a nonterminal name");
      skip_space();
      if (line.substr(i, 3) != "::=") grammar_syntax(line_no, "expected '::='");
      i += 3;
      current = parser.intern(lhs);
      if (!start) start = current;
    } else if (!current) {
      grammar_syntax(line_no, "continuation before any rule");
    } else {
      ++i;
    }

    // Alternatives separated by unquoted '|'.
    std::vector<GrammarSymbol> rhs;
    auto flush = [&] {
      if (rhs.empty()) grammar_syntax(line_no, "empty alternative");
      productions.push_back(Production{*current, std::move(rhs)});
      rhs.clear();
    };
    while (true) {
      skip_space();
      if (i == line.size()) {
        flush();
        break;
      }
      if (line[i] == '|') {
        flush();
        ++i;
        continue;
      }
      if (line[i] == '\'') {
        const std::size_t close = line.find('\'', i + 1);
        if (close == std::string_view::npos || close == i + 1) {
          grammar_syntax(line_no, "bad terminal literal");
        }
        for (std::size_t idx : terminals.decompose(line.substr(i + 1, close - i - 1))) {
          rhs.push_back(GrammarSymbol::terminal(static_cast<std::uint32_t>(idx)));
        }
        i = close + 1;
        continue;
      }
      const std::string name = read_ident();
      if (name.empty()) grammar_syntax(line_no, std::string("unexpected '") + line[i] + "'");
      rhs.push_back(GrammarSymbol::nonterminal(parser.intern(name)));
    }
  }
  if (!start) throw DomainError("grammar text has no rules");

  defined.assign(parser.names.size(), false);
  for (const auto& prod : productions) defined[prod.lhs] = true;
  for (std::size_t v = 0; v < defined.size(); ++v) {
    if (!defined[v]) throw DomainError("nonterminal '" + parser.names[v] + "' has no rules");
  }
  return Grammar(std::move(terminals), std::move(parser.names), std::move(productions), *start);
}

// ---------------------------------------------------------------------------
// GrammarEnumerator

GrammarEnumerator::GrammarEnumerator(Grammar grammar, GrammarLimits limits)
    : grammar_(std::move(grammar)), limits_(limits) {
  counts_.assign(grammar_.nonterminal_count(), std::vector<Natural>{Natural(0)});
}

void GrammarEnumerator::ensure_counts(std::size_t length) const {
  if (length <= counted_upto_) return;
  const std::size_t n = grammar_.nonterminal_count();
  if (n * (length + 1) > limits_.max_count_cells) {
    throw ResourceLimitError("grammar count table for length " + std::to_string(length) +
                             " exceeds the budget of " +
                             std::to_string(limits_.max_count_cells) + " cells");
  }
  for (auto& row : counts_) row.resize(length + 1, Natural(0));

  auto symbol_count = [&](const GrammarSymbol& s, std::size_t len) -> Natural {
    if (s.is_terminal()) return len == 1 ? Natural(1) : Natural(0);
    return counts_[s.id][len];
  };

  std::vector<Natural> ways;
  std::vector<Natural> next;
  for (std::size_t len = counted_upto_ + 1; len <= length; ++len) {
    for (auto v : grammar_.unit_order()) {
      Natural total = 0;
      for (auto p : grammar_.productions_of(v)) {
        const auto& rhs = grammar_.productions()[p].rhs;
        const std::size_t r = rhs.size();
        if (r > len) continue;
        // ways[m]: derivations of m symbols from rhs[0..i)
        ways.assign(len + 1, Natural(0));
        ways[0] = 1;
        for (std::size_t i = 0; i < r; ++i) {
          next.assign(len + 1, Natural(0));
          const std::size_t later = r - 1 - i;  // each later symbol needs >= 1
          for (std::size_t m = i; m + later < len; ++m) {
            if (ways[m] == 0) continue;
            for (std::size_t j = 1; m + j + later <= len; ++j) {
              const Natural c = symbol_count(rhs[i], j);
              if (c != 0) next[m + j] += ways[m] * c;
            }
          }
          ways.swap(next);
        }
        total += ways[len];
      }
      counts_[v][len] = total;
    }
  }
  counted_upto_ = length;
}

const std::vector<Natural>& GrammarEnumerator::sequence_counts(const Stack& stack,
                                                               std::size_t length) const {
  // The number of words a symbol sequence derives does not depend on symbol
  // order, so the sorted multiset is the memo key.
  Stack key = stack;
  std::sort(key.begin(), key.end());
  auto it = sequence_memo_.find(key);
  if (it != sequence_memo_.end() && it->second.size() > length) return it->second;

  ensure_counts(length);
  std::vector<Natural> ways(length + 1, Natural(0));
  ways[0] = 1;
  std::vector<Natural> next;
  for (const auto& s : key) {
    next.assign(length + 1, Natural(0));
    for (std::size_t m = 0; m <= length; ++m) {
      if (ways[m] == 0) continue;
      for (std::size_t j = 1; m + j <= length; ++j) {
        if (s.is_terminal()) {
          if (j == 1) next[m + 1] += ways[m];
          continue;
        }
        const Natural& c = counts_[s.id][j];
        if (c != 0) next[m + j] += ways[m] * c;
      }
    }
    ways.swap(next);
  }
  if (sequence_memo_.size() > 200000) sequence_memo_.clear();
  return sequence_memo_.insert_or_assign(std::move(key), std::move(ways)).first->second;
}

Natural GrammarEnumerator::completions(const Stack& stack, std::size_t length) const {
  if (stack.size() > length) return 0;
  if (stack.empty()) return length == 0 ? 1 : 0;
  return sequence_counts(stack, length)[length];
}

std::vector<GrammarEnumerator::Configs> GrammarEnumerator::step(const Configs& configs,
                                                                std::size_t remaining) const {
  std::vector<Configs> grouped(grammar_.terminals().size());
  std::vector<std::pair<Stack, Natural>> work(configs.begin(), configs.end());
  while (!work.empty()) {
    auto [stack, mult] = std::move(work.back());
    work.pop_back();
    if (stack.empty()) continue;
    const GrammarSymbol top = stack.back();
    stack.pop_back();
    if (top.is_terminal()) {
      grouped[top.id][std::move(stack)] += mult;
      continue;
    }
    for (auto p : grammar_.productions_of(top.id)) {
      const auto& rhs = grammar_.productions()[p].rhs;
      if (stack.size() + rhs.size() > remaining) continue;
      Stack expanded = stack;
      expanded.insert(expanded.end(), rhs.rbegin(), rhs.rend());
      if (completions(expanded, remaining) == 0) continue;
      work.emplace_back(std::move(expanded), mult);
    }
  }
  return grouped;
}

std::vector<std::size_t> GrammarEnumerator::unrank_digits(Natural k) const {
  if (k < 0) throw DomainError("grammar rank must be non-negative");
  std::size_t length = 0;
  while (true) {
    if (auto max = grammar_.max_word_length(); max && length > *max) {
      throw DomainError("rank " + to_string(k) + " is beyond the last word of a finite language");
    }
    ensure_counts(length);
    const Natural& here = counts_[grammar_.start()][length];
    if (k < here) break;
    k -= here;
    ++length;
  }

  Configs configs{{Stack{GrammarSymbol::nonterminal(grammar_.start())}, Natural(1)}};
  std::vector<std::size_t> digits;
  digits.reserve(length);
  for (std::size_t pos = 0; pos < length; ++pos) {
    const std::size_t remaining = length - pos;
    auto grouped = step(configs, remaining);
    bool chosen = false;
    for (std::size_t c = 0; c < grouped.size() && !chosen; ++c) {
      Natural total = 0;
      for (const auto& [stack, mult] : grouped[c]) {
        total += mult * completions(stack, remaining - 1);
      }
      if (k < total) {
        digits.push_back(c);
        configs = std::move(grouped[c]);
        chosen = true;
      } else {
        k -= total;
      }
    }
    if (!chosen) throw Error("grammar unrank: count table inconsistent");
  }
  return digits;
}

Natural GrammarEnumerator::count(std::size_t length) const {
  std::lock_guard lock(mutex_);
  ensure_counts(length);
  return counts_[grammar_.start()][length];
}

std::string GrammarEnumerator::unrank(const Natural& k) const {
  std::lock_guard lock(mutex_);
  const auto digits = unrank_digits(k);
  return grammar_.terminals().compose(digits);
}

std::optional<Natural> GrammarEnumerator::rank(std::string_view word) const {
  std::lock_guard lock(mutex_);
  std::vector<std::size_t> digits;
  try {
    digits = grammar_.terminals().decompose(word);
  } catch (const SymbolNotInAlphabet&) {
    return std::nullopt;
  }
  const std::size_t length = digits.size();
  ensure_counts(length);

  Natural result = 0;
  for (std::size_t len = 0; len < length; ++len) result += counts_[grammar_.start()][len];

  Configs configs{{Stack{GrammarSymbol::nonterminal(grammar_.start())}, Natural(1)}};
  for (std::size_t pos = 0; pos < length; ++pos) {
    const std::size_t remaining = length - pos;
    auto grouped = step(configs, remaining);
    for (std::size_t c = 0; c < digits[pos]; ++c) {
      for (const auto& [stack, mult] : grouped[c]) {
        result += mult * completions(stack, remaining - 1);
      }
    }
    configs = std::move(grouped[digits[pos]]);
    if (configs.empty()) return std::nullopt;
  }
  if (configs.find(Stack{}) == configs.end()) return std::nullopt;
  return result;
}

bool GrammarEnumerator::recognizes(std::string_view word) const {
  return rank(word).has_value();
}

std::optional<std::string> GrammarEnumerator::first_ambiguity(std::size_t max_length) const {
  std::lock_guard lock(mutex_);
  // With derivation counting, a word with d derivations occupies d
  // consecutive ranks, so ambiguity shows up as adjacent duplicates.
  Natural total = 0;
  ensure_counts(max_length);
  for (std::size_t len = 0; len <= max_length; ++len) total += counts_[grammar_.start()][len];
  std::string previous;
  for (Natural k = 0; k < total; ++k) {
    std::string word = grammar_.terminals().compose(unrank_digits(k));
    if (k != 0 && word == previous) return word;
    previous = std::move(word);
  }
  return std::nullopt;
}

Natural grammar_count(const GrammarEnumerator& enumerator, std::size_t length) {
  return enumerator.count(length);
}

std::string grammar_unrank(const GrammarEnumerator& enumerator, const Natural& k) {
  return enumerator.unrank(k);
}

}  // namespace iwb::enumerator
