#include "cli/dispatch.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "cli/config.hpp"
#include "cli/report.hpp"
#include "iwb/enumerator/grammar.hpp"
#include "iwb/enumerator/length_lex.hpp"
#include "iwb/error.hpp"
#include "iwb/pi/checker.hpp"
#include "iwb/qlang/program.hpp"
#include "iwb/qlang/table.hpp"
#include "iwb/search/audit.hpp"
#include "iwb/search/search.hpp"

namespace iwb::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Naturals beyond 64 bits are written as decimal strings.
Json natural_json(const Natural& n) {
  if (fits_u64(n)) return static_cast<std::uint64_t>(n);
  return n.str();
}

std::string read_text(const std::string& path, std::istream& in) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw DomainError("cannot read " + path);
    buffer << file.rdbuf();
  }
  return buffer.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw DomainError("cannot write " + path);
  file << text;
}

enumerator::Alphabet resolve_alphabet(const std::string& spec) {
  if (spec == "qlang") return qlang::alphabet();
  return enumerator::Alphabet::load(spec);
}

/// Parsed option values; CLI11 binds into these.
struct Options {
  std::string config_path;
  std::string format;

  std::string alphabet;
  std::string grammar;
  std::string from = "0";
  std::size_t count = 10;
  std::string word;
  std::string index;

  std::string program_file;
  std::string x;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t n = 0;

  std::string derivation_file;
  std::size_t pack = 0;

  std::string statement;
  std::uint64_t budget = 0;
  std::uint64_t time_limit_ms = 0;
  std::string mode = "structured";
  std::string emit_path;
  std::string xmax;
};

class Runner {
 public:
  Runner(const Options& options, const GlobalConfig& config, std::istream& in, std::ostream& out,
         std::ostream& err)
      : o_(options), config_(config), in_(in), out_(out), err_(err) {
    format_ = config.format;
    if (!o_.format.empty()) format_ = *parse_format(o_.format);
  }

  int enumerate() {
    Report report{"enumerate", {}};
    const Natural from = parse_natural(o_.from);
    if (!o_.grammar.empty()) {
      auto enumerator = load_grammar();
      for (std::size_t i = 0; i < o_.count; ++i) {
        const Natural k = from + i;
        report.records.push_back({{"rank", natural_json(k)}, {"word", enumerator->unrank(k)}});
      }
    } else {
      const auto alphabet = resolve_alphabet(alphabet_spec());
      const auto words = enumerator::stream(alphabet, {from}, o_.count);
      for (std::size_t i = 0; i < words.size(); ++i) {
        report.records.push_back({{"rank", natural_json(from + i)}, {"word", words[i]}});
      }
    }
    return emit(report);
  }

  int rank() {
    const auto alphabet = resolve_alphabet(alphabet_spec());
    const auto r = enumerator::rank(alphabet, o_.word);
    return emit({"rank", {{{"word", o_.word}, {"rank", natural_json(r.rank)}}}});
  }

  int unrank() {
    const auto alphabet = resolve_alphabet(alphabet_spec());
    const Natural k = parse_natural(o_.index);
    return emit({"unrank", {{{"rank", natural_json(k)}, {"word", enumerator::unrank(alphabet, {k})}}}});
  }

  int qlang_eval() {
    std::string source = read_text(o_.program_file, in_);
    if (!source.empty() && source.back() == '\n') source.pop_back();
    if (!source.empty() && source.back() == '\r') source.pop_back();
    const auto program = qlang::parse_or_throw(source);
    const Natural x = parse_natural(o_.x);
    return emit({"qlang-eval",
                 {{{"source", program.print()}, {"x", natural_json(x)}, {"value", qlang::eval(program, x)}}}});
  }

  int qlang_nth() {
    const Natural i = parse_natural(o_.index);
    return emit({"qlang-nth", {{{"index", natural_json(i)}, {"source", qlang::nth_program(i).print()}}}});
  }

  int qlang_table() {
    const auto t = qlang::table(o_.rows, o_.cols, table_limits());
    Report report{"qlang-table", {}};
    for (std::size_t i = 1; i <= t.rows(); ++i) {
      Json row = {{"i", i}};
      for (std::size_t x = 1; x <= t.cols(); ++x) row["x" + std::to_string(x)] = t.cell(i, x);
      report.records.push_back(std::move(row));
    }
    return emit(report);
  }

  int qlang_diagonal() {
    return emit({"qlang-diagonal",
                 {{{"n", o_.n}, {"diagonal", qlang::diagonal(o_.n, table_limits())}}}});
  }

  int qlang_fbar() {
    const auto bits = qlang::diagonal_flip(qlang::diagonal(o_.n, table_limits()));
    return emit({"qlang-fbar", {{{"n", o_.n}, {"fbar", bits}}}});
  }

  int check() {
    const auto file = pi::parse_file_or_throw(read_text(o_.derivation_file, in_));
    const auto pack = make_pack();
    const auto result = pi::check_derivation(pack, file.derivation, file.target);
    Json record = {{"file", o_.derivation_file}, {"pack", o_.pack}};
    if (pi::accepted(result)) {
      record["verdict"] = "accept";
      record["lines"] = file.derivation.lines.size();
      emit({"check", {record}});
      return kSuccess;
    }
    const auto& reject = std::get<pi::Reject>(result);
    record["verdict"] = "reject";
    record["line"] = reject.line;
    record["reason"] = std::string(pi::reason_code(reject.reason));
    record["detail"] = reject.detail;
    emit({"check", {record}});
    err_ << o_.derivation_file << ": line " << reject.line << ": " << pi::reason_code(reject.reason)
         << ": " << reject.detail << "\n";
    return kFailure;
  }

  int search() {
    const auto target = pi::parse_statement_or_throw(o_.statement);
    const auto pack = make_pack();
    const auto mode = o_.mode == "literal" ? search::SearchMode::Literal : search::SearchMode::Structured;
    const auto budget = search_budget();
    const auto verdict = search::search(pack, target, budget, mode, parse_natural(o_.from));

    Json record = {{"target", pi::print(target)},
                   {"mode", std::string(search::mode_name(mode))},
                   {"pack", o_.pack},
                   {"budget", *budget.max_candidates},
                   {"outcome", std::string(search::outcome_name(verdict.outcome))},
                   {"candidates", verdict.candidates},
                   {"space_exhausted", verdict.space_exhausted}};
    if (verdict.derivation) record["derivation"] = pi::print_body(*verdict.derivation);
    emit_with_derivation({"search", {record}});

    if (!verdict.derivation) return kExhausted;
    if (!o_.emit_path.empty()) {
      const pi::Statement proved = verdict.outcome == search::Outcome::DerivedNegation
                                       ? pi::Statement{pi::negate_fbar(target)}
                                       : target;
      write_text(o_.emit_path, pi::print_file({*verdict.derivation, proved}));
    }
    return kSuccess;
  }

  int decide() {
    const auto statement = pi::parse_statement_or_throw(o_.statement);
    const auto* atom = std::get_if<pi::FbarAtom>(&statement);
    if (atom == nullptr) throw DomainError("decide takes an fbar statement");
    const auto pack = make_pack();
    const auto d = search::decide_fbar(pack, *atom);
    return emit({"decide",
                 {{{"statement", pi::print(statement)},
                   {"pack", o_.pack},
                   {"decision", std::string(search::derivability_name(d))}}}});
  }

  int gap() {
    const auto pack = make_pack();
    const Natural x_max = parse_natural(o_.xmax);
    return emit(gap_report(pack, x_max));
  }

  int audit_soundness() {
    const auto pack = make_pack();
    const auto report = search::audit_soundness(pack);
    Json violating = Json::array();
    for (const auto& v : report.violations) violating.push_back("fbar(" + v.x.str() + ") is " + std::to_string(v.bit));
    return emit({"audit-soundness",
                 {{{"pack", o_.pack},
                   {"queries", report.queries},
                   {"derivable", report.derivable},
                   {"violations", report.violations.size()},
                   {"violating", violating}}}});
  }

  int audit_consistency() {
    const auto pack = make_pack();
    const Natural x_max = o_.xmax.empty() ? Natural(std::max<std::size_t>(o_.pack, 1)) : parse_natural(o_.xmax);
    const auto report = search::audit_consistency(pack, x_max);
    Json violating = Json::array();
    for (const auto& x : report.violations) violating.push_back(natural_json(x));
    return emit({"audit-consistency",
                 {{{"pack", o_.pack},
                   {"x_max", natural_json(x_max)},
                   {"checked", report.checked},
                   {"violations", report.violations.size()},
                   {"violating", violating}}}});
  }

  int demo_incompleteness() {
    const auto pack = make_pack();
    const Natural x_max = parse_natural(o_.xmax);
    const auto gap = search::completeness_gap(pack, x_max);

    Report statements{"gap-statement", {}};
    for (const auto& x : gap) {
      const int truth = qlang::fbar_truth(x);
      const pi::FbarAtom s{x, truth};
      statements.records.push_back(
          {{"x", natural_json(x)},
           {"statement", pi::print(s)},
           {"true", true},
           {"formable", pi::can_form(s)},
           {"derivable", search::decide_fbar(pack, s) == search::Derivability::Derivable},
           {"negation_derivable",
            search::decide_fbar(pack, pi::negate_fbar(s)) == search::Derivability::Derivable}});
    }

    std::optional<search::SearchVerdict> verdict;
    std::string target_text;
    const auto budget = search_budget();
    if (!gap.empty()) {
      const pi::FbarAtom target{gap.front(), qlang::fbar_truth(gap.front())};
      target_text = pi::print(target);
      verdict = search::search(pack, target, budget, search::SearchMode::Structured);
    }

    if (format_ != Format::Pretty) {
      out_ << emit_report(gap_report(pack, x_max), format_);
      out_ << emit_report(statements, format_);
      if (verdict) {
        out_ << emit_report({"search",
                             {{{"target", target_text},
                               {"mode", "structured"},
                               {"pack", o_.pack},
                               {"budget", *budget.max_candidates},
                               {"outcome", std::string(search::outcome_name(verdict->outcome))},
                               {"candidates", verdict->candidates},
                               {"space_exhausted", verdict->space_exhausted}}}},
                            format_);
      }
      return kSuccess;
    }

    out_ << "Axiom pack: the true value of fbar(x) for x = 1.." << o_.pack << ".\n";
    out_ << "Completeness gap up to x = " << x_max << ": " << pretty_list(gap) << "\n";
    if (gap.empty()) {
      out_ << "Every fbar statement in range is decided by the pack.\n";
      return kSuccess;
    }
    out_ << "\nAt each gap index neither fbar(x) is 0 nor fbar(x) is 1 is derivable,\n"
            "although exactly one of them is true:\n";
    for (const auto& r : statements.records) {
      out_ << "  " << r["statement"].get<std::string>() << "  true (oracle), formable, not derivable\n";
    }
    out_ << "\nSearch for " << target_text << " (structured mode, budget " << *budget.max_candidates
         << " candidates): " << search::outcome_name(verdict->outcome) << " after "
         << verdict->candidates << " candidates";
    if (verdict->space_exhausted) out_ << "; no candidate can introduce this atom";
    out_ << ".\n";
    return kSuccess;
  }

 private:
  std::string alphabet_spec() const { return o_.alphabet.empty() ? config_.alphabet : o_.alphabet; }

  qlang::TableLimits table_limits() const { return {config_.table_max_cells}; }

  pi::AxiomPack make_pack() const { return pi::make_axiom_pack(o_.pack, table_limits()); }

  search::SearchBudget search_budget() const {
    search::SearchBudget budget;
    budget.max_candidates = o_.budget != 0 ? o_.budget : config_.search_max_candidates;
    const std::uint64_t ms = o_.time_limit_ms != 0 ? o_.time_limit_ms : config_.search_time_limit_ms.value_or(0);
    if (ms != 0) budget.time_limit = std::chrono::milliseconds(ms);
    return budget;
  }

  std::unique_ptr<enumerator::GrammarEnumerator> load_grammar() const {
    enumerator::GrammarLimits limits{config_.grammar_max_count_cells};
    if (o_.grammar == "qlang") {
      return std::make_unique<enumerator::GrammarEnumerator>(qlang::grammar(), limits);
    }
    auto alphabet = resolve_alphabet(alphabet_spec());
    std::ifstream file(o_.grammar, std::ios::binary);
    if (!file) throw DomainError("cannot read " + o_.grammar);
    std::stringstream text;
    text << file.rdbuf();
    return std::make_unique<enumerator::GrammarEnumerator>(
        enumerator::Grammar::parse(std::move(alphabet), text.str()), limits);
  }

  Report gap_report(const pi::AxiomPack& pack, const Natural& x_max) const {
    const auto gap = search::completeness_gap(pack, x_max);
    Json list = Json::array();
    for (const auto& x : gap) list.push_back(natural_json(x));
    return {"gap", {{{"pack", o_.pack}, {"x_max", natural_json(x_max)}, {"gap", list}}}};
  }

  static std::string pretty_list(const std::vector<Natural>& xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + xs[i].str();
    return out + "]";
  }

  int emit(const Report& report) {
    out_ << emit_report(report, format_);
    return kSuccess;
  }

  /// Pretty output prints a carried derivation as text after the record.
  void emit_with_derivation(Report report) {
    if (format_ != Format::Pretty) {
      out_ << emit_report(report, format_);
      return;
    }
    std::string body;
    auto& record = report.records.front();
    if (record.contains("derivation")) {
      body = record["derivation"].get<std::string>();
      record.erase("derivation");
    }
    out_ << emit_report(report, format_);
    if (!body.empty()) out_ << "\n" << body << "\n";
  }

  const Options& o_;
  const GlobalConfig& config_;
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
  Format format_;
};

}  // namespace

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err) {
  Options o;
  CLI::App app{"Incompleteness workbench: enumeration, Q-lang, derivation checking and proof search",
               "iwb"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--config", o.config_path, "key = value settings file")->check(CLI::ExistingFile);
  app.add_option("--format", o.format, "pretty | csv | json-lines")
      ->check(CLI::IsMember({"pretty", "csv", "json-lines"}));

  std::function<int(Runner&)> action;
  auto on = [&](CLI::App* sub, int (Runner::*fn)()) {
    sub->callback([&action, fn] { action = [fn](Runner& r) { return (r.*fn)(); }; });
  };

  auto* enumerate = app.add_subcommand("enumerate", "List strings in length-then-lex order");
  enumerate->add_option("--alphabet", o.alphabet, "binary, abc, qlang, or a symbol file");
  enumerate->add_option("--grammar", o.grammar, "list grammar words instead: qlang or a BNF file");
  enumerate->add_option("--from", o.from, "first rank")->capture_default_str();
  enumerate->add_option("--count", o.count, "number of strings")->capture_default_str();
  on(enumerate, &Runner::enumerate);

  auto* rank = app.add_subcommand("rank", "Position of a string in length-then-lex order");
  rank->add_option("--alphabet", o.alphabet, "binary, abc, qlang, or a symbol file");
  rank->add_option("string", o.word, "the string")->required();
  on(rank, &Runner::rank);

  auto* unrank = app.add_subcommand("unrank", "String at a length-then-lex position");
  unrank->add_option("--alphabet", o.alphabet, "binary, abc, qlang, or a symbol file");
  unrank->add_option("rank", o.index, "0-based rank")->required();
  on(unrank, &Runner::unrank);

  auto* qlang = app.add_subcommand("qlang", "Q-lang programs, the table T and the diagonal");
  qlang->require_subcommand(1);
  auto* eval = qlang->add_subcommand("eval", "Evaluate a program at x");
  eval->add_option("file", o.program_file, "program file, - for stdin")->required();
  eval->add_option("--x", o.x, "input, at least 1")->required();
  on(eval, &Runner::qlang_eval);
  auto* nth = qlang->add_subcommand("nth", "The i-th valid program (1-based)");
  nth->add_option("index", o.index, "program index")->required();
  on(nth, &Runner::qlang_nth);
  auto* table = qlang->add_subcommand("table", "T(i, x) for i <= rows, x <= cols");
  table->add_option("--rows", o.rows)->required();
  table->add_option("--cols", o.cols)->required();
  on(table, &Runner::qlang_table);
  auto* diagonal = qlang->add_subcommand("diagonal", "T(1,1) .. T(n,n)");
  diagonal->add_option("--n", o.n)->required();
  on(diagonal, &Runner::qlang_diagonal);
  auto* fbar = qlang->add_subcommand("fbar", "fbar(1) .. fbar(n)");
  fbar->add_option("--n", o.n)->required();
  on(fbar, &Runner::qlang_fbar);

  auto* check = app.add_subcommand("check", "Check a derivation file");
  check->add_option("file", o.derivation_file, "derivation file, - for stdin")->required();
  check->add_option("--pack", o.pack, "axiom pack size")->capture_default_str();
  on(check, &Runner::check);

  auto* search = app.add_subcommand("search", "Search for a derivation of a statement or its negation");
  search->add_option("statement", o.statement)->required();
  search->add_option("--pack", o.pack, "axiom pack size")->capture_default_str();
  search->add_option("--budget", o.budget, "maximum candidates (default from config)");
  search->add_option("--time-limit-ms", o.time_limit_ms, "wall-clock limit");
  search->add_option("--mode", o.mode)->check(CLI::IsMember({"literal", "structured"}))->capture_default_str();
  search->add_option("--from", o.from, "first candidate rank (literal mode)")->capture_default_str();
  search->add_option("--emit-derivation", o.emit_path, "write the found derivation file here");
  on(search, &Runner::search);

  auto* decide = app.add_subcommand("decide", "Is an fbar statement derivable from the pack?");
  decide->add_option("statement", o.statement)->required();
  decide->add_option("--pack", o.pack, "axiom pack size")->capture_default_str();
  on(decide, &Runner::decide);

  auto* gap = app.add_subcommand("gap", "x <= xmax where neither fbar(x) statement is derivable");
  gap->add_option("--pack", o.pack, "axiom pack size")->capture_default_str();
  gap->add_option("--xmax", o.xmax)->required();
  on(gap, &Runner::gap);

  auto* audit = app.add_subcommand("audit", "Soundness and consistency audits of a pack");
  audit->require_subcommand(1);
  auto* soundness = audit->add_subcommand("soundness", "Derivable fbar atoms against the oracle");
  soundness->add_option("--pack", o.pack, "axiom pack size")->capture_default_str();
  on(soundness, &Runner::audit_soundness);
  auto* consistency = audit->add_subcommand("consistency", "No x with both bits derivable");
  consistency->add_option("--pack", o.pack, "axiom pack size")->capture_default_str();
  consistency->add_option("--xmax", o.xmax, "upper end of the sweep (default: pack size)");
  on(consistency, &Runner::audit_consistency);

  auto* demo = app.add_subcommand("demo", "Narrated demonstrations");
  demo->require_subcommand(1);
  auto* incompleteness = demo->add_subcommand("incompleteness", "Gap, true-but-underivable statements, search");
  incompleteness->add_option("--pack", o.pack, "axiom pack size")->capture_default_str();
  incompleteness->add_option("--xmax", o.xmax)->required();
  incompleteness->add_option("--budget", o.budget, "maximum search candidates");
  on(incompleteness, &Runner::demo_incompleteness);

  if (!args.empty() && !args.front().empty() && args.front().front() != '-' &&
      app.get_subcommand_no_throw(args.front()) == nullptr) {
    err << "error: unknown subcommand '" << args.front() << "'\n"
        << "Run with --help for more information.\n";
    return kUsage;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  GlobalConfig config;
  try {
    if (!o.config_path.empty()) config = load_config(o.config_path);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    Runner runner(o, config, in, out, err);
    return action(runner);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kFailure;
}

}  // namespace iwb::cli
