#include "csc/cli/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "csc/cli/corpus.hpp"
#include "csc/cycles/report.hpp"
#include "csc/io/problem.hpp"
#include "csc/nclause/nclause.hpp"
#include "csc/triangular/triangular.hpp"

namespace csc::cli {

namespace {

struct InputError : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

struct Options
{
  std::size_t max_clauses = sat::Budget().max_generated_clauses;
  std::uint32_t max_depth = sat::Budget().max_clause_depth;
  std::optional<std::int64_t> timeout_ms;
  std::string format = "text";

  sat::Budget budget() const
  {
    sat::Budget b;
    b.max_generated_clauses = max_clauses;
    b.max_clause_depth = max_depth;
    if (timeout_ms) b.timeout = std::chrono::milliseconds(*timeout_ms);
    sat::validate(b);
    return b;
  }
};

std::string read_file(const std::string& path)
{
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

io::ProblemFile load(const std::string& path, const Signature* base = nullptr)
{
  std::string text = read_file(path);
  try {
    return io::parse_problem(text, base);
  } catch (const io::ParseError& e) {
    throw InputError(path + ":" + e.what());
  }
}

nlohmann::json lines_of(const std::string& text)
{
  nlohmann::json out = nlohmann::json::array();
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

io::Report check_cycle(const std::string& file, const Options& o)
{
  io::ProblemFile s = load(file);
  return cycles::cycle_report(cycles::check_clause_set_cycle(s.clauses(), o.budget(), s.signature), s.clauses(),
                              s.signature);
}

io::Report check_offset_cycle(const std::string& file, unsigned offset, unsigned step, const Options& o)
{
  io::ProblemFile s = load(file);
  if (step == 0) throw InputError("--step must be at least 1");
  auto result = cycles::check_offset_step_cycle(s.clauses(), offset, step, o.budget(), s.signature);
  io::Report r = cycles::cycle_report(result, s.clauses(), s.signature);
  r.subject = "offset/step cycle";
  r.result["offset"] = offset;
  r.result["step"] = step;
  return r;
}

io::Report check_refutation(const std::string& file, const std::string& cycle_file, std::optional<unsigned> n,
                            std::optional<unsigned> search, const Options& o)
{
  if (n.has_value() == search.has_value()) throw InputError("give exactly one of --n and --search-n");
  io::ProblemFile r = load(file);
  io::ProblemFile s = load(cycle_file, &r.signature);
  auto result = n ? cycles::check_refutation(r.clauses(), s.clauses(), *n, o.budget(), s.signature)
                  : cycles::search_refutation(r.clauses(), s.clauses(), *search, o.budget(), s.signature);
  io::Report report = cycles::refutation_report(result, r.clauses(), s.clauses(), s.signature);
  if (search) report.notes.push_back("searched n = 0.." + std::to_string(*search));
  return report;
}

io::Report normalize_cycle(const std::string& file, unsigned offset, unsigned step)
{
  io::ProblemFile s = load(file);
  if (step == 0) throw InputError("--step must be at least 1");
  ClauseSet u = cycles::normalize_offset_step(s.clauses(), offset, step);
  io::Report r;
  r.verdict = io::Verdict::Done;
  r.subject = "normalized offset/step cycle";
  r.artifact["cycle"] = cycles::clause_set_json(s.clauses(), s.signature);
  r.result["offset"] = offset;
  r.result["step"] = step;
  r.result["count"] = u.size();
  r.result["problem"] = lines_of(io::print_clause_set(u, s.signature, s.name ? *s.name + "-normalized" : "normalized"));
  return r;
}

std::vector<nclause::NClause> load_nclauses(const io::ProblemFile& p)
{
  try {
    return nclause::validate_nclause_set(p.clauses(), p.signature);
  } catch (const nclause::NClauseError& e) {
    throw InputError(e.what());
  }
}

nlohmann::json detection_json(const nclause::Detection& d, const Signature& sig)
{
  nlohmann::json out;
  out["saturation"] = sat::status_name(d.saturation);
  out["derived"] = d.derived.size();
  nlohmann::json attempts = nlohmann::json::array();
  for (const nclause::Attempt& a : d.attempts) {
    std::string line = "(" + std::to_string(a.offset) + ", " + std::to_string(a.step) + ") ";
    attempts.push_back(line + (a.reason.empty() ? "cycle" : a.reason));
  }
  out["attempts"] = attempts;
  out["fixpoint"] = cycles::clause_set_json(d.fixpoint, sig);
  nlohmann::json trace = nlohmann::json::array();
  for (const nclause::FixpointRound& round : d.trace) trace.push_back(cycles::clause_set_json(round.removed, sig));
  out["fixpoint_removed"] = trace;
  return out;
}

void describe_cycle(io::Report& r, const nclause::NCycle& c, const Signature& sig)
{
  r.result["offset"] = c.offset;
  r.result["step"] = c.step;
  r.result["cycle"] = cycles::clause_set_json(c.clauses, sig);
  nlohmann::json descent = nlohmann::json::array();
  for (const nclause::DescentEvidence& e : c.descent) {
    std::string how = e.subsumer ? "subsumed by " + io::to_string(*e.subsumer, sig) : "entailed (engine)";
    descent.push_back(io::to_string(e.image, sig) + ": " + how);
    if (e.check) r.conditions.push_back(cycles::transcript(*e.check));
  }
  r.result["descent"] = descent;
  for (const cycles::ConditionCheck& b : c.base) r.conditions.push_back(cycles::transcript(b));
}

io::Verdict missing_cycle_verdict(const nclause::Detection& d)
{
  for (const nclause::Attempt& a : d.attempts) {
    if (a.undecided) return io::Verdict::Unknown;
  }
  return io::Verdict::Refuted;
}

io::Report detect_ncycle(const std::string& file, unsigned max_i, unsigned max_j, const Options& o)
{
  io::ProblemFile p = load(file);
  auto r = load_nclauses(p);
  nclause::Detection d = nclause::detect_cycle(r, max_i, max_j, o.budget(), p.signature);
  io::Report report;
  report.subject = "n-clause cycle";
  report.artifact["nclauses"] = cycles::clause_set_json(p.clauses(), p.signature);
  report.result["search"] = detection_json(d, p.signature);
  if (d.cycle) {
    report.verdict = io::Verdict::Certified;
    describe_cycle(report, *d.cycle, p.signature);
  } else {
    report.verdict = missing_cycle_verdict(d);
    report.notes.push_back("no cycle with offset <= " + std::to_string(max_i) + " and step <= " +
                           std::to_string(max_j));
  }
  return report;
}

io::Report translate_ncycle(const std::string& file, unsigned max_i, unsigned max_j, const Options& o)
{
  io::ProblemFile p = load(file);
  auto r = load_nclauses(p);
  nclause::Detection d = nclause::detect_cycle(r, max_i, max_j, o.budget(), p.signature);
  if (!d.cycle) {
    io::Report report;
    report.subject = "translated n-clause cycle";
    report.verdict = missing_cycle_verdict(d);
    report.result["search"] = detection_json(d, p.signature);
    report.notes.push_back("no cycle to translate");
    return report;
  }
  nclause::Translation t = nclause::translate_cycle(*d.cycle);
  auto ref = cycles::check_refutation(p.clauses(), t.cycle, t.n, o.budget(), p.signature);
  io::Report report = cycles::refutation_report(ref, p.clauses(), t.cycle, p.signature);
  report.subject = "refutation by a translated n-clause cycle";
  report.result["offset"] = d.cycle->offset;
  report.result["step"] = d.cycle->step;
  report.result["n"] = t.n;
  report.result["translated"] = cycles::clause_set_json(t.cycle, p.signature);
  return report;
}

io::Report emit_induction(const std::string& file, const std::string& cycle_file, unsigned n, const Options& o)
{
  io::ProblemFile r = load(file);
  io::ProblemFile s = load(cycle_file, &r.signature);
  auto ref = cycles::check_refutation(r.clauses(), s.clauses(), n, o.budget(), s.signature);
  if (!cycles::certified(ref)) {
    io::Report report = cycles::refutation_report(ref, r.clauses(), s.clauses(), s.signature);
    report.notes.push_back("induction obligations are only emitted for certified refutations");
    return report;
  }
  cycles::InductionObligation ind =
    cycles::emit_induction(std::get<cycles::RefutationCertificate>(ref), o.budget(), s.signature);
  io::Report report = cycles::induction_report(ind, s.signature);
  report.artifact["refuted"] = cycles::clause_set_json(r.clauses(), s.signature);
  report.artifact["cycle"] = cycles::clause_set_json(s.clauses(), s.signature);
  nlohmann::json items = nlohmann::json::array();
  items.push_back("formula " + io::to_string(ind.induction_axiom, s.signature) + ".");
  items.push_back("formula " + io::to_string(ind.case_distinction, s.signature) + ".");
  for (const auto& ob : ind.obligations) items.push_back("formula " + io::to_string(ob.formula, s.signature) + ".");
  report.result["items"] = items;
  return report;
}

io::Report normalize(const std::optional<std::string>& file, const std::vector<std::string>& formulas)
{
  tri::TriangularSignature ts = tri::full_signature();
  std::vector<Formula> inputs;
  if (file) {
    io::ProblemFile p = load(*file);
    try {
      ts = tri::symbols_of(p.signature);
    } catch (const std::invalid_argument& e) {
      throw InputError(*file + ": " + e.what());
    }
    inputs = p.formulas();
  }
  for (const std::string& text : formulas) {
    try {
      inputs.push_back(io::parse_formula(text, ts.sig));
    } catch (const io::ParseError& e) {
      throw InputError(std::string("--formula: ") + e.what());
    }
  }
  if (inputs.empty()) throw InputError("nothing to normalize");
  io::Report r;
  r.verdict = io::Verdict::Done;
  r.subject = "p-free normal form";
  nlohmann::json out = nlohmann::json::array();
  for (const Formula& f : inputs) {
    tri::Normalization n = tri::normalize_traced(f, ts);
    out.push_back({{"input", io::to_string(f, ts.sig)},
                   {"output", io::to_string(n.result, ts.sig)},
                   {"steps", n.steps.size()}});
  }
  r.result["formulas"] = out;
  return r;
}

io::Report herbrand_gap(const std::string& list)
{
  tri::TriangularSignature ts = tri::full_signature();
  std::vector<Term> terms;
  std::istringstream in(list);
  for (std::string part; std::getline(in, part, ';');) {
    if (part.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      terms.push_back(io::parse_term(part, ts.sig));
    } catch (const io::ParseError& e) {
      throw InputError(std::string("--terms: ") + e.what());
    }
  }
  tri::HerbrandGap g;
  try {
    g = tri::herbrand_gap(terms, ts);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("--terms: ") + e.what());
  }
  io::Report r;
  r.verdict = io::Verdict::Done;
  r.subject = "herbrand gap";
  nlohmann::json echo = nlohmann::json::array();
  for (const Term& t : terms) echo.push_back(io::to_string(t, ts.sig));
  r.artifact["terms"] = echo;
  r.result["m"] = g.m;
  r.result["stop_bound"] = g.stop_bound;
  r.notes.push_back("m is the least value with tri(m, t(m)) false in the standard model for every given term t");
  return r;
}

io::Report write_corpus(const std::string& dir)
{
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw InputError("cannot create " + dir + ": " + ec.message());
  io::Report r;
  r.verdict = io::Verdict::Done;
  r.subject = "problem corpus";
  nlohmann::json written = nlohmann::json::array();
  for (const CorpusFile& f : corpus()) {
    std::filesystem::path path = std::filesystem::path(dir) / f.name;
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path.string());
    out << f.text;
    written.push_back(f.name);
  }
  r.result["written"] = written;
  return r;
}

int exit_code(io::Verdict v)
{
  switch (v) {
  case io::Verdict::Certified:
  case io::Verdict::Done: return kCertified;
  case io::Verdict::Refuted: return kRefuted;
  case io::Verdict::Unknown: return kUnknown;
  }
  return kUnknown;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app("Certify clause set cycles and refutations by induction", "csc");
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--max-clauses", o.max_clauses, "Generated clauses before a check gives up")
    ->envname("CSC_MAX_CLAUSES")
    ->check(CLI::PositiveNumber);
  app.add_option("--max-depth", o.max_depth, "Term depth above which conclusions are discarded")
    ->check(CLI::PositiveNumber);
  app.add_option("--timeout", o.timeout_ms, "Milliseconds per engine run")->check(CLI::PositiveNumber);
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "structured"}));

  std::string file;
  std::string cycle_file;
  unsigned offset = 0;
  unsigned step = 1;
  unsigned max_offset = 2;
  unsigned max_step = 2;
  std::optional<unsigned> n;
  std::optional<unsigned> search_n;
  std::optional<std::string> opt_file;
  std::vector<std::string> formulas;
  std::string terms;
  std::string corpus_action;
  std::string dir;

  auto* cycle = app.add_subcommand("check-cycle", "Check S(s eta) |= S(eta) and S(0) |= false");
  cycle->add_option("FILE", file, "Clause set S")->required();

  auto* refutation = app.add_subcommand("check-refutation", "Check that a cycle refutes a clause set");
  refutation->add_option("FILE", file, "Refuted clause set R")->required();
  refutation->add_option("--cycle", cycle_file, "Cycle S")->required();
  auto* n_opt = refutation->add_option("--n", n, "The shift n");
  refutation->add_option("--search-n", search_n, "Try n = 0..K")->excludes(n_opt);

  auto* offset_cycle = app.add_subcommand("check-offset-cycle", "Check a cycle with offset i and step j");
  offset_cycle->add_option("FILE", file, "Clause set S")->required();
  offset_cycle->add_option("--offset", offset, "Offset i");
  offset_cycle->add_option("--step", step, "Step j")->check(CLI::PositiveNumber);

  auto* normalize_cmd = app.add_subcommand("normalize-cycle", "Turn an offset/step cycle into a plain one");
  normalize_cmd->add_option("FILE", file, "Clause set S")->required();
  normalize_cmd->add_option("--offset", offset, "Offset i");
  normalize_cmd->add_option("--step", step, "Step j")->check(CLI::PositiveNumber);

  auto* detect = app.add_subcommand("detect-ncycle", "Search for a cycle in a saturated n-clause set");
  detect->add_option("FILE", file, "n-clause set R")->required();
  detect->add_option("--max-offset", max_offset, "Largest offset tried");
  detect->add_option("--max-step", max_step, "Largest step tried")->check(CLI::PositiveNumber);

  auto* translate = app.add_subcommand("translate-ncycle", "Detect an n-clause cycle and certify its translation");
  translate->add_option("FILE", file, "n-clause set R")->required();
  translate->add_option("--max-offset", max_offset, "Largest offset tried");
  translate->add_option("--max-step", max_step, "Largest step tried")->check(CLI::PositiveNumber);

  auto* induction = app.add_subcommand("emit-induction", "Print the induction argument behind a refutation");
  induction->add_option("FILE", file, "Refuted clause set R")->required();
  induction->add_option("--cycle", cycle_file, "Cycle S")->required();
  induction->add_option("--n", n, "The shift n")->required();

  auto* normal_form = app.add_subcommand("normalize", "Eliminate p from triangular-number formulas");
  normal_form->add_option("FILE", opt_file, "File with formula items");
  normal_form->add_option("--formula", formulas, "A formula over 0, s, p, plus and tri");

  auto* gap = app.add_subcommand("herbrand-gap", "Smallest m with tri(m, t(m)) false for all given terms");
  gap->add_option("--terms", terms, "Terms in the variable x separated by ';'")->required();

  auto* corpus_cmd = app.add_subcommand("corpus", "Write the shipped problem files");
  corpus_cmd->add_option("ACTION", corpus_action, "Only 'write'")->required()->check(CLI::IsMember({"write"}));
  corpus_cmd->add_option("DIR", dir, "Target directory")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kCertified;
  } catch (const CLI::ParseError& e) {
    err << "csc: " << e.what() << '\n';
    if (!app.get_subcommands().empty()) err << "run 'csc " << app.get_subcommands()[0]->get_name() << " --help'\n";
    return kInputError;
  }

  try {
    io::Report report;
    if (cycle->parsed()) {
      report = check_cycle(file, o);
    } else if (refutation->parsed()) {
      report = check_refutation(file, cycle_file, n, search_n, o);
    } else if (offset_cycle->parsed()) {
      report = check_offset_cycle(file, offset, step, o);
    } else if (normalize_cmd->parsed()) {
      report = normalize_cycle(file, offset, step);
    } else if (detect->parsed()) {
      report = detect_ncycle(file, max_offset, max_step, o);
    } else if (translate->parsed()) {
      report = translate_ncycle(file, max_offset, max_step, o);
    } else if (induction->parsed()) {
      report = emit_induction(file, cycle_file, *n, o);
    } else if (normal_form->parsed()) {
      report = normalize(opt_file, formulas);
    } else if (gap->parsed()) {
      report = herbrand_gap(terms);
    } else {
      report = write_corpus(dir);
    }
    out << io::render_report(report, o.format == "structured" ? io::ReportFormat::Structured : io::ReportFormat::Text);
    return exit_code(report.verdict);
  } catch (const InputError& e) {
    err << "csc: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "csc: " << e.what() << '\n';
  } catch (const SortError& e) {
    err << "csc: " << e.what() << '\n';
  }
  return kInputError;
}

int run(int argc, char** argv)
{
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

} // namespace csc::cli
