#include "iwb/search/search.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "iwb/enumerator/length_lex.hpp"
#include "iwb/error.hpp"
#include "iwb/pi/checker.hpp"
#include "iwb/search/lexicon.hpp"

namespace iwb::search {

void SearchBudget::validate() const {
  if (!max_candidates && !time_limit) throw DomainError("search budget needs a candidate or time limit");
}

std::string_view outcome_name(Outcome outcome) {
  switch (outcome) {
    case Outcome::DerivedTarget: return "derived-target";
    case Outcome::DerivedNegation: return "derived-negation";
    case Outcome::Exhausted: return "exhausted";
  }
  return "unknown";
}

std::string_view mode_name(SearchMode mode) {
  return mode == SearchMode::Literal ? "literal" : "structured";
}

namespace {

using Clock = std::chrono::steady_clock;

/// Budget accounting and the P'/P'' check shared by both modes.
class Driver {
 public:
  Driver(const pi::AxiomPack& pack, const pi::Statement& target, const SearchBudget& budget)
      : pack_(pack), target_(target), budget_(budget), start_(Clock::now()) {
    if (std::holds_alternative<pi::FbarAtom>(target)) negation_ = pi::negate_fbar(target);
  }

  /// False once the budget forbids generating another candidate.
  bool may_generate() {
    if (budget_.max_candidates && verdict_.candidates >= *budget_.max_candidates) return false;
    if (budget_.time_limit && (verdict_.candidates & 1023) == 0 &&
        Clock::now() - start_ >= *budget_.time_limit) {
      return false;
    }
    return true;
  }

  /// Counts the candidate and checks it. True on success.
  bool offer(const pi::Derivation& d) {
    ++verdict_.candidates;
    if (pi::accepted(pi::check_derivation(pack_, d, target_))) {
      verdict_.outcome = Outcome::DerivedTarget;
    } else if (negation_ && pi::accepted(pi::check_derivation(pack_, d, *negation_))) {
      verdict_.outcome = Outcome::DerivedNegation;
    } else {
      return false;
    }
    verdict_.derivation = d;
    return true;
  }

  /// Counts a candidate that failed to parse.
  void count_unparsable() { ++verdict_.candidates; }

  SearchVerdict& verdict() { return verdict_; }

 private:
  const pi::AxiomPack& pack_;
  const pi::Statement& target_;
  SearchBudget budget_;
  Clock::time_point start_;
  std::optional<pi::Statement> negation_;
  SearchVerdict verdict_;
};

SearchVerdict literal_search(Driver& driver, const Natural& from) {
  enumerator::ShortlexCursor cursor(lexicon().size(), from);
  while (driver.may_generate()) {
    const std::string text = render(cursor.digits());
    auto parsed = pi::parse_body(text);
    if (auto* d = std::get_if<pi::Derivation>(&parsed)) {
      if (driver.offer(*d)) return driver.verdict();
    } else {
      driver.count_unparsable();
    }
    cursor.advance();
  }
  return driver.verdict();
}

// Smallest possible line: "\n" "1" ". " "int(" "w" ")" " [premise]".
constexpr std::size_t kMinLineTokens = 7;

class StructuredSearch {
 public:
  StructuredSearch(Driver& driver, const pi::Statement& target) : driver_(driver) {
    for (const auto& v : pi::variables_of(target)) header_.push_back(v);
    std::set<std::string> seen;
    if (const auto* g = std::get_if<pi::Greater>(&target)) {
      g->lhs.collect_subterms(seen, subterms_);
      g->rhs.collect_subterms(seen, subterms_);
    } else if (const auto* t = std::get_if<pi::IntTyping>(&target)) {
      t->term.collect_subterms(seen, subterms_);
    } else {
      fbar_x_ = std::get<pi::FbarAtom>(target).x;
    }
    pi::Derivation probe{header_, {}};
    header_tokens_ = tokens_of(pi::print_body(probe)).size();
  }

  SearchVerdict run(const pi::AxiomPack& pack) {
    pack_ = &pack;
    for (std::size_t length = header_tokens_ + kMinLineTokens;; ++length) {
      cut_ = false;
      dfs(length - header_tokens_);
      if (done_) return driver_.verdict();
      if (!cut_) {
        driver_.verdict().space_exhausted = true;
        return driver_.verdict();
      }
    }
  }

 private:
  struct Option {
    pi::Statement statement;
    pi::Justification justification;
    std::vector<std::size_t> uses;  // 0-based lines consumed
    std::vector<std::size_t> tokens;
  };

  const std::vector<std::size_t>& tokens_of(const std::string& text) {
    auto it = token_cache_.find(text);
    if (it == token_cache_.end()) {
      auto tokens = first_tokenization(text);
      if (!tokens) throw DomainError("derivation text outside the lexicon: " + text);
      it = token_cache_.emplace(text, std::move(*tokens)).first;
    }
    return it->second;
  }

  std::optional<std::size_t> line_of(const std::string& printed) const {
    auto it = proved_.find(printed);
    if (it == proved_.end()) return std::nullopt;
    return it->second;
  }

  void add_option(std::vector<Option>& out, pi::Statement s, pi::Justification j,
                  std::vector<std::size_t> uses) {
    if (proved_.count(pi::print(s)) != 0) return;
    pi::DerivationLine line{lines_.size() + 1, s, j};
    Option o{std::move(s), std::move(j), std::move(uses), tokens_of("\n" + pi::print(line))};
    out.push_back(std::move(o));
  }

  std::vector<Option> options() {
    std::vector<Option> out;
    for (const auto& v : header_) {
      add_option(out, pi::IntTyping{pi::Term::variable(v)}, pi::Premise{}, {});
    }
    for (const auto& t : subterms_) {
      if (t.kind() == pi::Term::Kind::Numeral) {
        add_option(out, pi::IntTyping{t}, pi::AxiomInstance{"A3", {{"c", t}}, std::nullopt}, {});
      } else if (t.kind() == pi::Term::Kind::Sum) {
        auto a = line_of("int(" + t.lhs().print() + ")");
        auto b = line_of("int(" + t.rhs().print() + ")");
        if (a && b) {
          add_option(out, pi::IntTyping{t},
                     pi::AxiomInstance{"A2", {{"t1", t.lhs()}, {"t2", t.rhs()}}, std::nullopt},
                     {*a, *b});
        }
        const bool plus_one = t.rhs().kind() == pi::Term::Kind::Numeral && t.rhs().value() == 1;
        if (plus_one && a) {
          add_option(out, pi::Greater{t, t.lhs()},
                     pi::AxiomInstance{"A1", {{"t", t.lhs()}}, std::nullopt}, {*a});
        }
      }
    }
    for (std::size_t i = 0; i < lines_.size(); ++i) {
      const auto* first = std::get_if<pi::Greater>(&lines_[i].statement);
      if (first == nullptr) continue;
      for (std::size_t j = 0; j < lines_.size(); ++j) {
        const auto* second = std::get_if<pi::Greater>(&lines_[j].statement);
        if (second == nullptr || !(first->rhs == second->lhs)) continue;
        add_option(out, pi::Greater{first->lhs, second->rhs},
                   pi::RuleApplication{"R1", {i + 1, j + 1}}, {i, j});
      }
    }
    if (fbar_x_) {
      for (int bit = 0; bit <= 1; ++bit) {
        if (pack_->contains(*fbar_x_, bit)) {
          add_option(out, pi::FbarAtom{*fbar_x_, bit},
                     pi::AxiomInstance{"FBAR", {}, *fbar_x_}, {});
        }
      }
    }
    std::sort(out.begin(), out.end(),
              [](const Option& a, const Option& b) { return a.tokens < b.tokens; });
    return out;
  }

  void dfs(std::size_t remaining) {
    if (remaining == 0) {
      if (!lines_.empty() && unused_ <= 1) emit();
      if (!options().empty()) cut_ = true;
      return;
    }
    for (auto& o : options()) {
      if (done_) return;
      const std::size_t cost = o.tokens.size();
      if (cost > remaining) {
        cut_ = true;
        continue;
      }
      push(o);
      const std::size_t rest = remaining - cost;
      const bool feasible =
          rest == 0 ? unused_ <= 1 : rest >= kMinLineTokens * std::max<std::size_t>(1, unused_ - 1);
      if (feasible) {
        dfs(rest);
      } else {
        cut_ = true;
      }
      pop(o);
    }
  }

  void push(const Option& o) {
    for (std::size_t u : o.uses) {
      if (use_count_[u]++ == 0) --unused_;
    }
    proved_.emplace(pi::print(o.statement), lines_.size());
    lines_.push_back(pi::DerivationLine{lines_.size() + 1, o.statement, o.justification});
    use_count_.push_back(0);
    ++unused_;
  }

  void pop(const Option& o) {
    proved_.erase(pi::print(lines_.back().statement));
    lines_.pop_back();
    use_count_.pop_back();
    --unused_;
    for (std::size_t u : o.uses) {
      if (--use_count_[u] == 0) ++unused_;
    }
  }

  void emit() {
    if (!driver_.may_generate()) {
      done_ = true;
      return;
    }
    if (driver_.offer(pi::Derivation{header_, lines_})) done_ = true;
  }

  Driver& driver_;
  const pi::AxiomPack* pack_ = nullptr;
  std::vector<std::string> header_;
  std::vector<pi::Term> subterms_;
  std::optional<Natural> fbar_x_;
  std::size_t header_tokens_ = 0;
  std::unordered_map<std::string, std::vector<std::size_t>> token_cache_;

  std::vector<pi::DerivationLine> lines_;
  std::vector<std::size_t> use_count_;
  std::size_t unused_ = 0;
  std::unordered_map<std::string, std::size_t> proved_;
  bool cut_ = false;
  bool done_ = false;
};

}  // namespace

SearchVerdict search(const pi::AxiomPack& pack, const pi::Statement& target,
                     const SearchBudget& budget, SearchMode mode, const Natural& from) {
  budget.validate();
  if (from < 0) throw DomainError("search start rank must be non-negative");
  Driver driver(pack, target, budget);
  if (mode == SearchMode::Literal) return literal_search(driver, from);
  return StructuredSearch(driver, target).run(pack);
}

}  // namespace iwb::search
