#include "lrc/cli.hpp"

#include <chrono>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lrc/json_io.hpp"
#include "lrc/verify.hpp"

namespace lrc {

namespace {

using nlohmann::json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Output {
  RunReport report;
  json result = json::object();
  std::vector<std::string> lines;  // text-mode body
};

ChiWord parse_chi(const std::string& text) {
  try {
    return ChiWord::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string("malformed ") + what + " \"" + text + "\"");
    }
  }
  if (out.empty()) throw UsageError(std::string(what) + " is empty");
  return out;
}

// ---------------------------------------------------------------------------

Output cmd_enumerate(const std::string& kind, int n, const std::optional<std::string>& chi_text) {
  if (n < 1 || n > kMaxEnumerationSize)
    throw UsageError("--n must be in 1.." + std::to_string(kMaxEnumerationSize));
  Output o;
  o.report.command = "enumerate " + kind;
  o.report.parameters.emplace_back("n", std::to_string(n));
  json items = json::array();
  BigInt expected;
  if (kind == "partitions") {
    for (const auto& p : enumerate_partitions(n)) items.push_back(to_json(p));
    expected = bell_number(n);
  } else if (kind == "noncrossing") {
    for (const auto& p : enumerate_noncrossing(n)) items.push_back(to_json(p));
    expected = catalan_number(n);
  } else if (kind == "luk") {
    for (const auto& l : enumerate_luk(n)) items.push_back(to_json(l));
    expected = catalan_number(n);
  } else if (kind == "pchi") {
    if (!chi_text) throw UsageError("enumerate pchi requires --chi");
    const ChiWord chi = parse_chi(*chi_text);
    if (chi.size() != n) throw UsageError("--chi must have length --n");
    o.report.parameters.emplace_back("chi", chi.to_string());
    for (const auto& p : pchi_by_enumeration(chi)) items.push_back(to_json(p));
    expected = catalan_number(n);
  } else {
    throw UsageError("unknown kind \"" + kind + "\"; use partitions, noncrossing, luk or pchi");
  }
  for (const auto& item : items) o.lines.push_back(item.dump());
  o.report.instances = items.size();
  o.report.checks.push_back({"count", expected.get_str(), std::to_string(items.size()),
                             BigInt(items.size()) == expected});
  o.result["count"] = items.size();
  o.result["items"] = std::move(items);
  return o;
}

Output cmd_simulate(const std::string& rise_text, const std::string& chi_text) {
  const std::vector<int> rise = parse_int_list(rise_text, "rise-vector");
  const LukPath path = validate_rise(rise);  // NotAPathError is a usage error
  const ChiWord chi = parse_chi(chi_text);
  if (chi.size() != path.size()) throw UsageError("--rise and --chi differ in length");

  Output o;
  o.report.command = "simulate";
  o.report.parameters.emplace_back("rise", path.to_string());
  o.report.parameters.emplace_back("chi", chi.to_string());
  const ScenarioTrace trace = simulate(DequeScenario(path, chi));
  const auto standings = standings_partitions(path, chi);
  const Partition rho = combined_standings(path, chi);
  const Permutation sigma = sigma_chi(chi);

  auto opt = [](const std::optional<Partition>& p) { return p ? to_json(*p) : json(nullptr); };
  o.result = {{"exit_order", trace.exit_order},
              {"insertion_times", trace.insertion_times},
              {"output_partition", to_json(trace.output_partition)},
              {"left_standings", opt(standings.left)},
              {"right_standings", opt(standings.right)},
              {"combined_standings", to_json(rho)},
              {"sigma_chi", to_json(sigma)}};
  for (const char* key : {"exit_order", "output_partition", "left_standings", "right_standings",
                          "combined_standings", "sigma_chi"})
    o.lines.push_back(std::string(key) + ": " + o.result[key].dump());

  const Partition image = act(sigma, rho);
  o.report.instances = 1;
  o.report.checks.push_back({"combined standings is non-crossing", "true",
                             is_noncrossing(rho) ? "true" : "false", is_noncrossing(rho)});
  o.report.checks.push_back({"sigma_chi . combined standings = output partition",
                             trace.output_partition.to_string(), image.to_string(),
                             image == trace.output_partition});
  const LukPath back = psi(trace.output_partition);
  o.report.checks.push_back(
      {"psi(output partition) = path", path.to_string(), back.to_string(), back == path});
  return o;
}

struct FockInputs {
  ChiWord chi;
  std::vector<int> omega;
  CoefficientTable table;
};

FockInputs fock_inputs(const std::string& chi_text, const std::string& omega_text,
                       const std::optional<std::string>& table_path, Output& o) {
  ChiWord chi = parse_chi(chi_text);
  std::vector<int> omega = parse_int_list(omega_text, "index word");
  if (static_cast<int>(omega.size()) != chi.size())
    throw UsageError("--chi and --omega differ in length");
  for (int i : omega)
    if (i < 1) throw UsageError("indices must be positive");
  o.report.parameters.emplace_back("chi", chi.to_string());
  o.report.parameters.emplace_back("omega", index_word_key(omega));
  if (table_path) {
    CoefficientTable table = load_table(*table_path);
    o.report.parameters.emplace_back("table", *table_path);
    for (int i : omega)
      if (i > table.d()) throw UsageError("index " + std::to_string(i) + " exceeds table d");
    return {std::move(chi), std::move(omega), std::move(table)};
  }
  const int d = *std::max_element(omega.begin(), omega.end());
  o.report.parameters.emplace_back("table", "symbolic");
  CoefficientTable table = CoefficientTable::symbolic(d, chi.size());
  return {std::move(chi), std::move(omega), std::move(table)};
}

template <ExactRing S>
json scalar_json(const S& s) {
  if constexpr (std::is_same_v<S, PolyScalar>)
    return to_json(s);
  else
    return to_string(s);
}

template <ExactRing S>
std::string scalar_text(const S& s) {
  if constexpr (std::is_same_v<S, PolyScalar>)
    return s.to_string();
  else
    return to_string(s);
}

template <ExactRing S>
void fock_compute(bool cumulant, const FockInputs& in, Output& o) {
  auto model = std::make_shared<const FockModel<S>>(in.table);
  CanonicalMomentOracle<S> oracle(model);
  std::vector<int> elements;
  for (int m = 1; m <= in.chi.size(); ++m)
    elements.push_back(element_id(in.omega[m - 1], in.chi[m]));
  S fock_route, partition_route;
  std::string fock_name, partition_name;
  if (cumulant) {
    const auto phi = oracle.functional(in.chi.size());
    fock_route = lr_cumulant(in.chi, elements, phi);
    partition_route = in.table.coefficient<S>(bimixture_symbol(in.omega, in.chi));
    fock_name = "cumulant recursion over Fock moments";
    partition_name = "bi-mixture";
    o.result["bimixture_symbol"] = bimixture_symbol(in.omega, in.chi).to_string();
  } else {
    fock_route = oracle.moment(in.omega, in.chi);
    partition_route = moment_via_pchi<S>(in.omega, in.chi, in.table);
    fock_name = "Fock vacuum moment";
    partition_name = "sum over P^(chi)";
  }
  o.result["value"] = scalar_json(fock_route);
  o.result["routes"] = {{fock_name, scalar_json(fock_route)},
                        {partition_name, scalar_json(partition_route)}};
  if constexpr (std::is_same_v<S, PolyScalar>) o.result["terms"] = fock_route.term_count();
  o.lines.push_back("value: " + scalar_text(fock_route));
  o.lines.push_back(fock_name + ": " + scalar_text(fock_route));
  o.lines.push_back(partition_name + ": " + scalar_text(partition_route));
  o.report.instances = 1;
  o.report.checks.push_back({"routes agree", scalar_text(partition_route),
                             scalar_text(fock_route), fock_route == partition_route});
}

Output cmd_fock(bool cumulant, const std::string& chi_text, const std::string& omega_text,
                const std::optional<std::string>& table_path) {
  Output o;
  o.report.command = cumulant ? "cumulant" : "moment";
  FockInputs in = fock_inputs(chi_text, omega_text, table_path, o);
  if (in.table.mode() == CoefficientTable::Mode::symbolic)
    fock_compute<PolyScalar>(cumulant, in, o);
  else
    fock_compute<Rational>(cumulant, in, o);
  return o;
}

Output cmd_verify(const std::string& suite, std::optional<int> max_n, std::optional<int> d,
                  std::optional<std::uint64_t> seed, const std::optional<std::string>& table_path) {
  SuiteOptions options{suite, max_n, d, {}};
  if (seed && table_path) throw UsageError("--seed and --table are mutually exclusive");
  if (seed) {
    options.source.kind = TableSource::Kind::random;
    options.source.seed = *seed;
  } else if (table_path) {
    options.source.kind = TableSource::Kind::file;
    options.source.table = load_table(*table_path);
  }
  Output o;
  try {
    o.report = run_suite(options);
  } catch (const InvariantViolation&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (table_path) o.report.parameters.emplace_back("table", *table_path);
  return o;
}

// ---------------------------------------------------------------------------

void emit(const Output& o, bool as_json, std::optional<double> elapsed, std::ostream& out) {
  const RunReport& r = o.report;
  const bool pass = r.passed();
  if (as_json) {
    json params = json::object();
    for (const auto& [k, v] : r.parameters) params[k] = v;
    json checks = json::array();
    for (const auto& c : r.checks)
      checks.push_back(
          {{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"ok", c.ok}});
    json doc{{"command", r.command},       {"parameters", std::move(params)},
             {"status", pass ? "pass" : "fail"}, {"instances", r.instances},
             {"checks", std::move(checks)}};
    if (!o.result.empty()) doc["result"] = o.result;
    if (elapsed) doc["elapsed"] = *elapsed;
    out << doc.dump(2) << "\n";
    return;
  }
  out << "command: " << r.command << "\n";
  if (!r.parameters.empty()) {
    out << "parameters:";
    for (const auto& [k, v] : r.parameters) out << " " << k << "=" << v;
    out << "\n";
  }
  for (const auto& line : o.lines) out << line << "\n";
  for (const auto& c : r.checks) {
    out << (c.ok ? "  [ok]   " : "  [FAIL] ") << c.name;
    if (c.ok)
      out << ": " << c.actual << "\n";
    else
      out << "\n         expected: " << c.expected << "\n         actual:   " << c.actual << "\n";
  }
  out << "instances checked: " << r.instances << "\n";
  if (elapsed) out << "elapsed: " << std::fixed << std::setprecision(3) << *elapsed << " s\n";
  out << "status: " << (pass ? "pass" : "fail") << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Deque-scenario partitions, (l,r)-cumulants and Fock-space moments"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  bool timing = false;
  app.add_flag("--json", as_json, "Print the report as JSON");
  app.add_flag("--timing", timing, "Include elapsed wall time in the report");

  std::string kind;
  int n = 0;
  std::optional<std::string> chi_opt;
  auto* enumerate = app.add_subcommand("enumerate", "List partitions, paths or P^(chi)(n)");
  enumerate->add_option("kind", kind, "partitions | noncrossing | luk | pchi")->required();
  enumerate->add_option("--n", n, "Ground-set size")->required();
  enumerate->add_option("--chi", chi_opt, "Word over {l, r} (kind pchi)");

  std::string rise, chi;
  auto* sim = app.add_subcommand("simulate", "Run one deque scenario");
  sim->add_option("--rise", rise, "Rise-vector, e.g. 2,-1,1,-1,-1")->required();
  sim->add_option("--chi", chi, "Word over {l, r}")->required();

  std::string omega;
  std::optional<std::string> table;
  bool symbolic = false;
  CLI::App* fock_cmds[2];
  const char* fock_names[2] = {"moment", "cumulant"};
  const char* fock_help[2] = {"Vacuum moment of a word in the canonical operators",
                              "(l,r)-cumulant of a word in the canonical operators"};
  for (int k = 0; k < 2; ++k) {
    fock_cmds[k] = app.add_subcommand(fock_names[k], fock_help[k]);
    fock_cmds[k]->add_option("--chi", chi, "Word over {l, r}")->required();
    fock_cmds[k]->add_option("--omega", omega, "Index word, e.g. 1,2,1,2")->required();
    auto* t = fock_cmds[k]->add_option("--table", table, "Coefficient table JSON file");
    fock_cmds[k]->add_flag("--symbolic", symbolic, "Use formal symbols (default)")->excludes(t);
  }

  std::string suite;
  std::optional<int> max_n, d;
  std::optional<std::uint64_t> seed;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suites_help;
  for (const auto& s : suite_names()) suites_help += (suites_help.empty() ? "" : " | ") + s;
  verify->add_option("suite", suite, suites_help)->required();
  verify->add_option("--max-n", max_n, "Largest word length");
  verify->add_option("--d", d, "Number of indices");
  verify->add_option("--seed", seed, "Use seeded random rational tables");
  verify->add_option("--table", table, "Use a coefficient table JSON file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    Output o;
    if (*enumerate)
      o = cmd_enumerate(kind, n, chi_opt);
    else if (*sim)
      o = cmd_simulate(rise, chi);
    else if (*fock_cmds[0] || *fock_cmds[1])
      o = cmd_fock(static_cast<bool>(*fock_cmds[1]), chi, omega, table);
    else
      o = cmd_verify(suite, max_n, d, seed, table);
    std::optional<double> elapsed;
    if (timing)
      elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    emit(o, as_json, elapsed, out);
    return o.report.passed() ? kExitPass : kExitFail;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return kExitFail;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace lrc
