// Command-line front end: recognition, ideals, Betti tables, verification sweeps.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bei/betti_table.hpp"
#include "bei/edge_list.hpp"
#include "bei/errors.hpp"
#include "bei/groebner.hpp"
#include "bei/hochster.hpp"
#include "bei/ideal.hpp"
#include "bei/koszul.hpp"
#include "bei/pigraph.hpp"
#include "bei/verify.hpp"

namespace {

using namespace bei;
using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNegative = 2;
constexpr int kExitInconclusive = 3;

struct GraphInput {
  std::string path;
  std::string inline_spec;

  void attach(CLI::App* cmd) {
    cmd->add_option("input", path, "edge-list file");
    cmd->add_option("--graph", inline_spec, "inline graph, e.g. 4:1-2,1-3,1-4");
  }
  SimpleGraph load() const {
    if (!path.empty() && !inline_spec.empty())
      throw InputError("give either an input file or --graph, not both");
    if (!inline_spec.empty()) return parse_inline_graph(inline_spec);
    if (path.empty()) throw InputError("no graph given (input file or --graph)");
    return read_edge_list_file(path);
  }
};

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? " " : "") + std::to_string(v[k]);
  return out;
}

int cmd_recognize(const SimpleGraph& g, bool json) {
  auto lab = find_closed_labeling(g);
  if (json) {
    Json out = {{"pi", lab.has_value()}};
    if (lab) {
      out["labeling"] = lab->perm;
      out["facets"] = to_string(facet_intervals(g, *lab));
    }
    std::cout << out.dump(2) << '\n';
  } else if (lab) {
    std::cout << "PI; labeling " << join(lab->perm) << "; facets "
              << to_string(facet_intervals(g, *lab)) << '\n';
  } else {
    std::cout << "not PI\n";
  }
  return lab ? kExitOk : kExitNegative;
}

int cmd_classify(const SimpleGraph& g) {
  auto lab = find_closed_labeling(g);
  if (!lab) {
    std::cout << "not PI\n";
    return kExitNegative;
  }
  const SimpleGraph closed = g.relabeled(lab->perm);
  std::cout << to_string(classify_reg2(closed)) << "; labeling " << join(lab->perm) << '\n';
  return kExitOk;
}

int cmd_enumerate(int n) {
  const auto graphs = enumerate_pi_graphs(n);
  for (std::size_t k = 0; k < graphs.size(); ++k) {
    const auto& g = graphs[k];
    std::vector<int> identity;
    for (int v = 1; v <= g.n(); ++v) identity.push_back(v);
    std::cout << "# graph " << k + 1 << ": " << format_inline_graph(g) << '\n'
              << "# closed labeling " << join(identity) << "; facets "
              << to_string(facet_intervals(g, ClosedLabeling{identity})) << '\n'
              << format_edge_list(g) << '\n';
  }
  std::cout << "count " << graphs.size() << '\n';
  return kExitOk;
}

IdealBasis initial_of(const SimpleGraph& g, const PrimeField& field, std::string* how) {
  if (is_closed_as_labeled(g)) {
    if (how) *how = "edge monomials (closed labeling)";
    return initial_edge_monomials(g, field);
  }
  if (how) *how = "leading terms of the reduced Groebner basis (labeling not closed)";
  return initial_ideal(buchberger(edge_binomials(g, field)));
}

struct IdealOptions {
  std::string kind = "binomial";
  bool groebner = false;
  bool check = false;
  std::optional<int> hilbert;
  std::string pq;
};

void print_ideal_block(const std::string& title, const IdealBasis& ideal, const IdealOptions& o) {
  std::cout << "# " << title << '\n' << format_ideal(ideal);
  if (o.check) std::cout << "# is_groebner: " << (is_groebner(ideal) ? "true" : "false") << '\n';
  if (o.groebner || o.hilbert) {
    const GroebnerBasis gb = buchberger(ideal);
    if (o.groebner) std::cout << "# reduced Groebner basis\n" << format_ideal(gb.as_ideal());
    if (o.hilbert) {
      std::cout << "# Hilbert function 0.." << *o.hilbert << ':';
      for (auto h : hilbert_function(gb, *o.hilbert)) std::cout << ' ' << h;
      std::cout << '\n';
    }
  }
}

int cmd_ideal(const GraphInput& in, const IdealOptions& o, const PrimeField& field) {
  if (!o.pq.empty()) {
    int n = 0, a = 0, b = 0;
    char c1 = 0, c2 = 0;
    std::istringstream ss(o.pq);
    if (!(ss >> n >> c1 >> a >> c2 >> b) || c1 != ',' || c2 != ',')
      throw InputError("--pq expects n,a,b");
    const PQDecomposition d = construct_P_Q(n, a, b, field);
    print_ideal_block("P", d.p, o);
    print_ideal_block("Q", d.q, o);
    print_ideal_block("P+Q", d.p_plus_q, o);
    return kExitOk;
  }
  const SimpleGraph g = in.load();
  if (o.kind == "binomial" || o.kind == "both")
    print_ideal_block("binomial edge ideal", edge_binomials(g, field), o);
  if (o.kind == "initial" || o.kind == "both") {
    std::string how;
    IdealBasis ini = initial_of(g, field, &how);
    print_ideal_block("initial ideal: " + how, ini, o);
  }
  return kExitOk;
}

struct BettiOptions {
  std::string ideal = "binomial";
  std::string engine = "koszul";
  std::string format = "text";
  std::optional<int> max_i;
  std::optional<int> max_j;
  bool allow_truncated = false;
};

int cmd_betti(const SimpleGraph& g, const BettiOptions& o, const PrimeField& field,
              unsigned threads) {
  KoszulConfig cfg;
  cfg.max_homological_degree = o.max_i;
  cfg.max_internal_degree = o.max_j;
  cfg.threads = threads;

  std::optional<BettiTable> tj, ti;
  if (o.ideal == "binomial" || o.ideal == "both")
    tj = koszul_betti(buchberger(edge_binomials(g, field)), cfg);
  std::string how;
  if (o.ideal == "initial" || o.ideal == "both") {
    IdealBasis ini = initial_of(g, field, &how);
    if (o.engine == "hochster")
      ti = hochster_betti(ini, cfg);
    else
      ti = koszul_betti(buchberger(ini), cfg);
  }

  if (o.format == "json") {
    Json out;
    out["graph"] = format_inline_graph(g);
    if (tj) out["binomial"] = betti_json(*tj);
    if (ti) out["initial"] = betti_json(*ti);
    if (tj && ti) {
      Json gap = Json::array();
      for (const auto& [k, v] : betti_gap(*tj, *ti))
        gap.push_back({{"i", k.first}, {"j", k.second}, {"gap", v}});
      out["gap"] = gap;
    }
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "graph " << format_inline_graph(g) << ", char " << field.p() << '\n';
    if (tj) std::cout << "\nS/J_G" << (tj->truncated ? " (truncated)" : "") << '\n' << betti_diagram(*tj);
    if (ti)
      std::cout << "\nS/in(J_G) [" << how << "]" << (ti->truncated ? " (truncated)" : "") << '\n'
                << betti_diagram(*ti);
    if (tj && ti) std::cout << "\ngap in - J\n" << gap_diagram(betti_gap(*tj, *ti));
  }
  const bool truncated = (tj && tj->truncated) || (ti && ti->truncated);
  if (truncated && !o.allow_truncated) {
    std::cerr << "result truncated by --max-i/--max-j; pass --allow-truncated to accept it\n";
    return kExitInconclusive;
  }
  return kExitOk;
}

struct VerifyOptions {
  std::string suite = "all";
  std::optional<int> max_n;
  std::optional<std::uint32_t> char2;
  std::string out;
  std::string format = "text";
};

int cmd_verify(const VerifyOptions& o, std::uint32_t prime, unsigned threads) {
  SuiteOptions opts;
  opts.max_n = o.max_n;
  opts.prime = prime;
  opts.second_prime = o.char2;
  opts.threads = threads;
  const auto reports = run_suite(o.suite, opts);

  Json doc = {{"suite", o.suite}, {"reports", Json::array()}};
  bool clean = true;
  for (const auto& r : reports) {
    doc["reports"].push_back(r.to_json());
    clean = clean && r.clean();
  }
  doc["clean"] = clean;
  if (!o.out.empty()) {
    std::ofstream f(o.out);
    if (!f) throw InputError("cannot write " + o.out);
    f << doc.dump(2) << '\n';
  }
  if (o.format == "json") {
    std::cout << doc.dump(2) << '\n';
  } else {
    for (const auto& r : reports) std::cout << r.summary();
    std::cout << (clean ? "clean\n" : "FAILURES\n");
  }
  return clean ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Binomial edge ideals of proper interval graphs: recognition, Betti tables, verification"};
  app.require_subcommand(1);
  unsigned threads = 0;
  std::uint32_t prime = PrimeField::kDefaultPrime;
  app.add_option("--threads", threads, "worker threads (0 = available parallelism)");

  GraphInput recognize_in, classify_in, ideal_in, betti_in;
  bool recognize_json = false;
  auto* recognize = app.add_subcommand("recognize", "decide whether a graph is PI");
  recognize_in.attach(recognize);
  recognize->add_flag("--json", recognize_json, "structured output");

  auto* classify = app.add_subcommand("classify-reg2", "regularity-2 classification of a PI graph");
  classify_in.attach(classify);

  int enum_n = 0;
  auto* enumerate = app.add_subcommand("enumerate", "PI graphs up to isomorphism");
  enumerate->add_option("--n", enum_n, "vertex count (1..8)")->required();

  IdealOptions ideal_opts;
  auto* ideal = app.add_subcommand("ideal", "print generators of J_G or its initial ideal");
  ideal_in.attach(ideal);
  ideal->add_option("--kind", ideal_opts.kind, "binomial|initial|both")
      ->check(CLI::IsMember({"binomial", "initial", "both"}));
  ideal->add_flag("--groebner", ideal_opts.groebner, "also print the reduced Groebner basis");
  ideal->add_flag("--check-groebner", ideal_opts.check, "report whether the generators are a Groebner basis");
  ideal->add_option("--hilbert", ideal_opts.hilbert, "print the Hilbert function up to this degree");
  ideal->add_option("--pq", ideal_opts.pq, "print P, Q, P+Q for n,a,b instead of a graph ideal");
  ideal->add_option("--char", prime, "field characteristic");

  BettiOptions betti_opts;
  auto* betti = app.add_subcommand("betti", "graded Betti numbers");
  betti_in.attach(betti);
  betti->add_option("--ideal", betti_opts.ideal, "binomial|initial|both")
      ->check(CLI::IsMember({"binomial", "initial", "both"}));
  betti->add_option("--engine", betti_opts.engine, "engine for the initial ideal: koszul|hochster")
      ->check(CLI::IsMember({"koszul", "hochster"}));
  betti->add_option("--char", prime, "field characteristic");
  betti->add_option("--max-i", betti_opts.max_i, "cap on the homological degree");
  betti->add_option("--max-j", betti_opts.max_j, "cap on the internal degree");
  betti->add_option("--format", betti_opts.format, "text|json")->check(CLI::IsMember({"text", "json"}));
  betti->add_flag("--allow-truncated", betti_opts.allow_truncated, "accept capped tables");

  VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "run a verification sweep");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("--suite", verify_opts.suite, "suite name")->check(CLI::IsMember(suites));
  verify->add_option("--max-n", verify_opts.max_n, "largest vertex count");
  verify->add_option("--char", prime, "field characteristic");
  verify->add_option("--char2", verify_opts.char2, "second characteristic for the comparison");
  verify->add_option("--out", verify_opts.out, "write the structured report here");
  verify->add_option("--format", verify_opts.format, "text|json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    const PrimeField field(prime);
    if (*recognize) return cmd_recognize(recognize_in.load(), recognize_json);
    if (*classify) return cmd_classify(classify_in.load());
    if (*enumerate) return cmd_enumerate(enum_n);
    if (*ideal) return cmd_ideal(ideal_in, ideal_opts, field);
    if (*betti) return cmd_betti(betti_in.load(), betti_opts, field, threads);
    if (*verify) return cmd_verify(verify_opts, prime, threads);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InconclusiveError& e) {
    std::cerr << "inconclusive: " << e.what() << '\n';
    return kExitInconclusive;
  }
  return kExitInput;
}
