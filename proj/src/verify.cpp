#include "bei/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "bei/betti_table.hpp"
#include "bei/edge_list.hpp"
#include "bei/errors.hpp"
#include "bei/groebner.hpp"
#include "bei/hochster.hpp"
#include "bei/ideal.hpp"
#include "bei/koszul.hpp"
#include "bei/pigraph.hpp"
#include "bei/strands.hpp"

namespace bei {

using Json = nlohmann::ordered_json;

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::ExpectedFail: return "expected-fail";
  }
  return "unknown";
}

std::size_t VerificationReport::count(Outcome o) const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [&](const auto& r) { return r.outcome == o; }));
}

Json VerificationReport::to_json() const {
  Json out;
  out["scenario"] = scenario;
  out["parameters"] = parameters;
  out["summary"] = {{"records", records.size()},
                    {"pass", count(Outcome::Pass)},
                    {"fail", count(Outcome::Fail)},
                    {"expected_fail", count(Outcome::ExpectedFail)}};
  Json recs = Json::array();
  for (const auto& r : records) {
    recs.push_back({{"subject", r.subject},
                    {"outcome", to_string(r.outcome)},
                    {"detail", r.detail},
                    {"data", r.data},
                    {"reproduce", r.reproduce}});
  }
  out["records"] = std::move(recs);
  return out;
}

std::string VerificationReport::summary() const {
  std::ostringstream out;
  out << scenario << ": " << records.size() << " records, " << count(Outcome::Pass) << " pass, "
      << count(Outcome::Fail) << " fail, " << count(Outcome::ExpectedFail) << " expected-fail"
      << (clean() ? "  [clean]" : "  [FAILURES]") << '\n';
  for (const auto& r : records) {
    if (r.outcome == Outcome::Pass) continue;
    out << "  " << to_string(r.outcome) << "  " << r.subject << "  " << r.detail << '\n';
    if (!r.reproduce.empty()) out << "    reproduce: " << r.reproduce << '\n';
  }
  return out.str();
}

namespace {

KoszulConfig config(unsigned threads) {
  KoszulConfig c;
  c.threads = threads;
  return c;
}

BettiTable binomial_table(const SimpleGraph& g, const PrimeField& field, unsigned threads) {
  return koszul_betti(buchberger(edge_binomials(g, field)), config(threads));
}

BettiTable koszul_of(const IdealBasis& ideal, unsigned threads) {
  return koszul_betti(buchberger(ideal), config(threads));
}

Json strand_json(const Strand& s) { return Json(s); }

std::string reproduce_betti(const SimpleGraph& g, const PrimeField& field) {
  return "bei betti --graph " + format_inline_graph(g) + " --ideal both --char " +
         std::to_string(field.p());
}

Json labeling_json(const SimpleGraph& g) {
  if (!is_closed_as_labeled(g)) return nullptr;
  Json perm = Json::array();
  for (int v = 1; v <= g.n(); ++v) perm.push_back(v);
  return perm;
}

std::vector<SimpleGraph> pi_corpus(int n_max) {
  std::vector<SimpleGraph> out;
  for (int n = 2; n <= n_max; ++n)
    for (auto& g : enumerate_pi_graphs(n)) out.push_back(std::move(g));
  return out;
}

std::vector<SimpleGraph> full_corpus(int n_max) {
  std::vector<SimpleGraph> out;
  for (int n = 2; n <= n_max; ++n)
    for (auto& g : enumerate_graphs(n)) out.push_back(std::move(g));
  return out;
}

void require_range(const char* what, int n_max, int lo, int hi) {
  if (n_max < lo || n_max > hi) {
    throw InputError(std::string(what) + ": max n must lie in [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "], got " + std::to_string(n_max));
  }
}

Json base_parameters(int n_max, const PrimeField& field) {
  return {{"max_n", n_max}, {"char", field.p()}};
}

bool entrywise_le(const BettiTable& a, const BettiTable& b) {
  for (const auto& [k, v] : a.entries)
    if (v > b.at(k.first, k.second)) return false;
  return true;
}

Json gap_json(const BettiTable& a, const BettiTable& b) {
  Json out = Json::array();
  for (const auto& [k, v] : betti_gap(a, b)) out.push_back({{"i", k.first}, {"j", k.second}, {"gap", v}});
  return out;
}

// The star K_{1,3}: not PI, and its tables are the known counterexample.
VerificationRecord star_control(const PrimeField& field, unsigned threads) {
  const SimpleGraph star = star_graph(3);
  VerificationRecord r;
  r.subject = format_inline_graph(star) + " (negative control)";
  r.reproduce = reproduce_betti(star, field);

  const bool pi = find_closed_labeling(star).has_value();
  const BettiTable tj = binomial_table(star, field, threads);
  const IdealBasis ini = initial_ideal(buchberger(edge_binomials(star, field)));
  const BettiTable ti = hochster_betti(ini);
  const Strand clique = linear_strand_clique(star);
  const Strand ini_strand = strand_from_table(ti);

  const bool numbers = tj.at(2, 3) == 0 && tj.at(3, 4) == 0 && ti.at(2, 3) == 3 && ti.at(3, 4) == 1;
  r.data = {{"is_pi", pi},
            {"binomial", betti_json(tj)},
            {"initial", betti_json(ti)},
            {"clique_strand", strand_json(clique)},
            {"initial_strand", strand_json(ini_strand)}};
  if (!pi && numbers && clique != ini_strand) {
    r.outcome = Outcome::ExpectedFail;
    r.detail = "not PI; strand of in(J) differs from the clique formula; beta_{2,3}, beta_{3,4} = 0, 0 vs 3, 1";
  } else {
    r.outcome = Outcome::Fail;
    r.detail = "negative control did not behave as the counterexample";
  }
  return r;
}

}  // namespace

VerificationReport check_theorem_main(int n_max, const PrimeField& field, unsigned threads) {
  require_range("main", n_max, 2, 7);
  VerificationReport rep;
  rep.scenario = "main";
  rep.parameters = base_parameters(n_max, field);
  for (const auto& g : pi_corpus(n_max)) {
    VerificationRecord r;
    r.subject = format_inline_graph(g);
    r.reproduce = reproduce_betti(g, field);
    const BipartiteGraph h = bipartite_initial_graph(g);
    const Strand clique = linear_strand_clique(g);
    const Strand rvt = linear_strand_rvt(h.graph);
    const Strand bip = linear_strand_bipartite(h);
    const BettiTable tj = binomial_table(g, field, threads);
    const Strand koszul = strand_from_table(tj);
    const bool ok = clique == rvt && rvt == bip && bip == koszul;
    r.outcome = ok ? Outcome::Pass : Outcome::Fail;
    r.detail = ok ? "strands agree" : "strand mismatch";
    r.data = {{"labeling", labeling_json(g)},
              {"clique", strand_json(clique)},
              {"rvt", strand_json(rvt)},
              {"bipartite", strand_json(bip)},
              {"koszul", strand_json(koszul)}};
    if (!ok) r.data["binomial"] = betti_json(tj);
    rep.records.push_back(std::move(r));
  }
  rep.records.push_back(star_control(field, threads));
  return rep;
}

VerificationReport check_theorem_main2(int n_max, const PrimeField& field, unsigned threads) {
  require_range("main2", n_max, 2, 6);
  VerificationReport rep;
  rep.scenario = "main2";
  rep.parameters = base_parameters(n_max, field);
  for (const auto& g : pi_corpus(n_max)) {
    const Reg2Class cls = classify_reg2(g);
    if (!is_reg_two(cls)) continue;
    VerificationRecord r;
    r.subject = format_inline_graph(g);
    r.reproduce = reproduce_betti(g, field);
    const BettiTable tj = binomial_table(g, field, threads);
    const IdealBasis ini = initial_edge_monomials(g, field);
    const BettiTable th = hochster_betti(ini);
    const BettiTable tk = koszul_of(ini, threads);
    bool ok = same_entries(tj, th) && same_entries(th, tk);
    r.data = {{"labeling", labeling_json(g)},
              {"class", to_string(cls)},
              {"binomial", betti_json(tj)},
              {"initial_hochster", betti_json(th)},
              {"initial_koszul", betti_json(tk)}};
    if (const auto* two = std::get_if<DisjointTwoCliques>(&cls)) {
      const BettiTable tensor =
          betti_tensor(binomial_table(complete_graph(two->m), field, threads),
                       binomial_table(complete_graph(two->p), field, threads));
      r.data["tensor"] = betti_json(tensor);
      ok = ok && same_entries(tj, tensor);
    }
    r.outcome = ok ? Outcome::Pass : Outcome::Fail;
    r.detail = ok ? "tables agree" : "tables differ";
    rep.records.push_back(std::move(r));
  }
  return rep;
}

VerificationReport check_prop_reg2(int n_max, const PrimeField& field, unsigned threads) {
  require_range("reg2", n_max, 2, 6);
  VerificationReport rep;
  rep.scenario = "reg2";
  rep.parameters = base_parameters(n_max, field);
  for (const auto& g : pi_corpus(n_max)) {
    VerificationRecord r;
    r.subject = format_inline_graph(g);
    r.reproduce = reproduce_betti(g, field);
    const Reg2Class cls = classify_reg2(g);
    const int reg = regularity(binomial_table(g, field, threads));
    int paths = 0;
    for (const auto& comp : connected_components(g))
      paths += longest_induced_path_length(induced_subgraph(g, comp).graph);
    const bool ok = is_reg_two(cls) == (reg == 2) && reg == paths;
    r.outcome = ok ? Outcome::Pass : Outcome::Fail;
    r.detail = "class " + to_string(cls) + ", regularity " + std::to_string(reg) +
               ", induced-path sum " + std::to_string(paths);
    r.data = {{"labeling", labeling_json(g)},
              {"class", to_string(cls)},
              {"regularity", reg},
              {"induced_path_sum", paths}};
    rep.records.push_back(std::move(r));
  }
  return rep;
}

namespace {

SimpleGraph two_interval_graph(int n, int a, int b) {
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (v <= b || u >= a) edges.emplace_back(u, v);
  return SimpleGraph(n, edges);
}

std::vector<Monomial> leads_of(const IdealBasis& ideal) {
  return buchberger(ideal).leading_monomials();
}

// Alternating sum from the long exact Tor sequence, internal degree i + 2.
long long exact_sequence_sum(const BettiTable& j, const BettiTable& p, const BettiTable& q,
                             const BettiTable& pq, int i) {
  auto b = [](const BettiTable& t, int a, int c) { return static_cast<long long>(t.at(a, c)); };
  return b(q, i + 2, i + 2) - b(pq, i + 2, i + 2) + b(j, i + 1, i + 2) - b(p, i + 1, i + 2) -
         b(q, i + 1, i + 2) + b(pq, i + 1, i + 2) - b(j, i, i + 2) + b(q, i, i + 2);
}

}  // namespace

VerificationReport check_exact_sequence_identities(int n, int a, int b, const PrimeField& field,
                                                   unsigned threads) {
  if (n > 6) throw InputError("exact-seq: n must be at most 6");
  PQDecomposition pq = construct_P_Q(n, a, b, field);  // validates 1 < a <= b < n
  const SimpleGraph g = two_interval_graph(n, a, b);

  VerificationReport rep;
  rep.scenario = "exact-seq";
  rep.parameters = {{"n", n}, {"a", a}, {"b", b}, {"char", field.p()}};
  const std::string subject = "n=" + std::to_string(n) + " a=" + std::to_string(a) +
                              " b=" + std::to_string(b);
  const std::string reproduce = "bei ideal --pq " + std::to_string(n) + "," + std::to_string(a) +
                                "," + std::to_string(b) + " --char " + std::to_string(field.p());

  const IdealBasis jg = edge_binomials(g, field);
  const BettiTable tj = koszul_of(jg, threads);
  const BettiTable tp = koszul_of(pq.p, threads);
  const BettiTable tq = koszul_of(pq.q, threads);
  const BettiTable tpq = koszul_of(pq.p_plus_q, threads);

  const IdealBasis ini_j = initial_ideal(buchberger(jg));
  const IdealBasis ini_p = initial_ideal(buchberger(pq.p));
  const IdealBasis ini_q = initial_ideal(buchberger(pq.q));
  const IdealBasis ini_pq = initial_ideal(buchberger(pq.p_plus_q));
  const BettiTable hj = hochster_betti(ini_j);
  const BettiTable hp = hochster_betti(ini_p);
  const BettiTable hq = hochster_betti(ini_q);
  const BettiTable hpq = hochster_betti(ini_pq);

  auto add = [&](std::string name, bool ok, std::string detail, Json data) {
    VerificationRecord r;
    r.subject = subject + " " + name;
    r.outcome = ok ? Outcome::Pass : Outcome::Fail;
    r.detail = std::move(detail);
    r.data = std::move(data);
    r.reproduce = reproduce;
    rep.records.push_back(std::move(r));
  };

  const Json tables = {{"J", betti_json(tj)},   {"P", betti_json(tp)},
                       {"Q", betti_json(tq)},   {"P+Q", betti_json(tpq)},
                       {"inJ", betti_json(hj)}, {"inP", betti_json(hp)},
                       {"inQ", betti_json(hq)}, {"inP+Q", betti_json(hpq)}};

  Json sums = Json::array(), ini_sums = Json::array();
  bool ok5 = true, ok7 = true;
  for (int i = 0; i <= 2 * n; ++i) {
    long long s = exact_sequence_sum(tj, tp, tq, tpq, i);
    long long t = exact_sequence_sum(hj, hp, hq, hpq, i);
    sums.push_back(s);
    ini_sums.push_back(t);
    ok5 = ok5 && s == 0;
    ok7 = ok7 && t == 0;
  }
  add("identity", ok5, "alternating sums for S/J, S/P, S/Q, S/(P+Q)",
      {{"sums", sums}, {"tables", tables}});
  add("initial-identity", ok7, "alternating sums for the initial ideals",
      {{"sums", ini_sums}, {"tables", tables}});

  const int reg_pq = regularity(tpq);
  add("reg-P+Q", reg_pq == 1, "reg S/(P+Q) = " + std::to_string(reg_pq),
      {{"regularity", reg_pq}, {"P+Q", betti_json(tpq)}});

  std::vector<Monomial> sum_leads = leads_of(pq.p);
  for (const auto& m : leads_of(pq.q)) sum_leads.push_back(m);
  const auto lhs = minimal_monomial_generators(sum_leads);
  const auto rhs = minimal_monomial_generators(leads_of(pq.p_plus_q));
  auto names = [&](const std::vector<Monomial>& ms) {
    Json arr = Json::array();
    for (const auto& m : ms) arr.push_back(to_string(m, n));
    return arr;
  };
  add("initial-sum", lhs == rhs, "in(P) + in(Q) against in(P+Q)",
      {{"in(P)+in(Q)", names(lhs)}, {"in(P+Q)", names(rhs)}});

  const bool q_ok = same_entries(tq, hq);
  const bool pq_ok = same_entries(tpq, hpq);
  add("Q-vs-initial", q_ok, "beta(S/Q) against beta(S/in Q)",
      {{"Q", betti_json(tq)}, {"inQ", betti_json(hq)}});
  add("P+Q-vs-initial", pq_ok, "beta(S/(P+Q)) against beta(S/in(P+Q))",
      {{"P+Q", betti_json(tpq)}, {"inP+Q", betti_json(hpq)}});
  return rep;
}

VerificationReport check_semicontinuity(int n_max, const PrimeField& field, unsigned threads) {
  require_range("semicontinuity", n_max, 2, 5);
  VerificationReport rep;
  rep.scenario = "semicontinuity";
  rep.parameters = base_parameters(n_max, field);
  const SimpleGraph star_code = canonical_form(star_graph(3));
  for (const auto& g : full_corpus(n_max)) {
    VerificationRecord r;
    r.subject = format_inline_graph(g);
    r.reproduce = reproduce_betti(g, field);
    const bool pi = find_closed_labeling(g).has_value();
    const GroebnerBasis gb = buchberger(edge_binomials(g, field));
    const BettiTable tj = koszul_betti(gb, config(threads));
    const IdealBasis ini = initial_ideal(gb);
    const BettiTable ti = ini.all_squarefree_monomial() ? hochster_betti(ini) : koszul_of(ini, threads);
    const bool le = entrywise_le(tj, ti);
    const bool eq = same_entries(tj, ti);
    bool ok = le && (!pi || eq);
    std::string detail = pi ? (eq ? "PI, equal tables" : "PI, tables differ")
                            : (eq ? "not PI, equal tables" : "not PI, strict inequality");
    if (n_max >= 4 && g.n() == 4 && canonical_form(g) == star_code) {
      const bool star_gaps = ti.at(2, 3) - tj.at(2, 3) == 3 && ti.at(3, 4) - tj.at(3, 4) == 1 &&
                             tj.at(2, 3) == 0 && tj.at(3, 4) == 0;
      ok = ok && star_gaps;
      detail += star_gaps ? "; star gaps (2,3): 0 < 3, (3,4): 0 < 1" : "; star gaps wrong";
    }
    if (!le) detail += "; entrywise bound violated";
    r.outcome = ok ? Outcome::Pass : Outcome::Fail;
    r.detail = detail;
    r.data = {{"is_pi", pi},
              {"labeling", labeling_json(g)},
              {"binomial", betti_json(tj)},
              {"initial", betti_json(ti)},
              {"gap", gap_json(tj, ti)}};
    rep.records.push_back(std::move(r));
  }
  return rep;
}

VerificationReport check_engines(int n_max, const PrimeField& field, unsigned threads) {
  require_range("engines", n_max, 2, 5);
  VerificationReport rep;
  rep.scenario = "engines";
  rep.parameters = base_parameters(n_max, field);
  auto compare = [&](const std::string& subject, const IdealBasis& ideal, const std::string& repro) {
    VerificationRecord r;
    r.subject = subject;
    r.reproduce = repro;
    const BettiTable h = hochster_betti(ideal);
    const BettiTable k = koszul_of(ideal, threads);
    const bool ok = same_entries(h, k);
    r.outcome = ok ? Outcome::Pass : Outcome::Fail;
    r.detail = ok ? "engines agree" : "engines disagree";
    r.data = {{"ideal", format_ideal(ideal)}, {"hochster", betti_json(h)}, {"koszul", betti_json(k)}};
    rep.records.push_back(std::move(r));
  };
  for (const auto& g : full_corpus(n_max)) {
    compare(format_inline_graph(g) + " in(J)", initial_ideal(buchberger(edge_binomials(g, field))),
            "bei ideal --graph " + format_inline_graph(g) + " --kind initial --char " +
                std::to_string(field.p()));
  }
  for (int n = 3; n <= n_max; ++n) {
    for (int a = 2; a < n; ++a) {
      for (int b = a; b < n; ++b) {
        const PQDecomposition pq = construct_P_Q(n, a, b, field);
        const std::string tag = "n=" + std::to_string(n) + " a=" + std::to_string(a) +
                                " b=" + std::to_string(b);
        const std::string repro = "bei ideal --pq " + std::to_string(n) + "," +
                                  std::to_string(a) + "," + std::to_string(b);
        compare(tag + " in(P)", initial_ideal(buchberger(pq.p)), repro);
        compare(tag + " in(Q)", initial_ideal(buchberger(pq.q)), repro);
        compare(tag + " in(P+Q)", initial_ideal(buchberger(pq.p_plus_q)), repro);
      }
    }
  }
  return rep;
}

VerificationReport check_groebner_iff_closed(int n_max, const PrimeField& field) {
  require_range("gb-closed", n_max, 2, 5);
  VerificationReport rep;
  rep.scenario = "gb-closed";
  rep.parameters = base_parameters(n_max, field);
  rep.parameters["corpus"] = "all labeled graphs without isolated vertices";
  std::size_t checked = 0, connected_checked = 0, connected_violations = 0;
  for (int n = 2; n <= n_max; ++n) {
    std::vector<Edge> all;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v) all.emplace_back(u, v);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t e = 0; e < all.size(); ++e)
        if (mask >> e & 1) edges.push_back(all[e]);
      const SimpleGraph g(n, edges);
      if (g.has_isolated_vertex()) continue;
      ++checked;
      const bool gb = is_groebner(edge_binomials(g, field));
      const bool closed = is_closed_as_labeled(g);
      const bool connected = connected_components(g).size() == 1;
      if (connected) ++connected_checked;
      if (gb == closed) continue;
      if (connected) ++connected_violations;
      VerificationRecord r;
      r.subject = format_inline_graph(g);
      r.outcome = Outcome::Fail;
      r.detail = std::string("is_groebner = ") + (gb ? "true" : "false") +
                 ", triple criterion = " + (closed ? "true" : "false") +
                 (connected ? "" : " (disconnected)");
      r.data = {{"is_groebner", gb}, {"closed", closed}, {"connected", connected}};
      r.reproduce = "bei ideal --graph " + format_inline_graph(g) + " --kind binomial --check-groebner";
      rep.records.push_back(std::move(r));
    }
  }
  VerificationRecord total;
  total.subject = "all labeled graphs";
  total.outcome = Outcome::Pass;
  total.detail = std::to_string(checked) + " graphs checked, " +
                 std::to_string(rep.records.size()) + " violations; connected: " +
                 std::to_string(connected_checked) + " checked, " +
                 std::to_string(connected_violations) + " violations";
  total.data = {{"checked", checked},
                {"violations", rep.records.size()},
                {"connected_checked", connected_checked},
                {"connected_violations", connected_violations}};
  rep.records.insert(rep.records.begin(), std::move(total));
  return rep;
}

VerificationReport check_hilbert(int n_max, int max_degree, const PrimeField& field) {
  require_range("hilbert", n_max, 2, 5);
  VerificationReport rep;
  rep.scenario = "hilbert";
  rep.parameters = base_parameters(n_max, field);
  rep.parameters["max_degree"] = max_degree;
  for (const auto& g : full_corpus(n_max)) {
    VerificationRecord r;
    r.subject = format_inline_graph(g);
    r.reproduce = "bei ideal --graph " + format_inline_graph(g) + " --kind both --hilbert " +
                  std::to_string(max_degree);
    const IdealBasis j = edge_binomials(g, field);
    const GroebnerBasis gb = buchberger(j);
    const IdealBasis ini = initial_ideal(gb);
    const auto from_gb = hilbert_function(gb, max_degree);
    const auto direct_j = hilbert_function_by_linear_algebra(j, max_degree);
    const auto direct_ini = hilbert_function_by_linear_algebra(ini, max_degree);
    const bool ok = from_gb == direct_j && direct_j == direct_ini;
    r.outcome = ok ? Outcome::Pass : Outcome::Fail;
    r.detail = ok ? "graded dimensions agree" : "graded dimensions differ";
    r.data = {{"standard_monomials", from_gb},
              {"binomial_direct", direct_j},
              {"initial_direct", direct_ini}};
    rep.records.push_back(std::move(r));
  }
  return rep;
}

VerificationReport check_characteristic(int n_max, const PrimeField& p1, const PrimeField& p2,
                                        unsigned threads) {
  require_range("characteristic", n_max, 2, 5);
  VerificationReport rep;
  rep.scenario = "characteristic";
  rep.parameters = {{"max_n", n_max}, {"char", p1.p()}, {"char2", p2.p()}};
  for (const auto& g : full_corpus(n_max)) {
    VerificationRecord r;
    r.subject = format_inline_graph(g);
    r.reproduce = reproduce_betti(g, p1) + " ; " + reproduce_betti(g, p2);
    const GroebnerBasis g1 = buchberger(edge_binomials(g, p1));
    const GroebnerBasis g2 = buchberger(edge_binomials(g, p2));
    const BettiTable j1 = koszul_betti(g1, config(threads));
    const BettiTable j2 = koszul_betti(g2, config(threads));
    const BettiTable i1 = koszul_of(initial_ideal(g1), threads);
    const BettiTable i2 = koszul_of(initial_ideal(g2), threads);
    const bool ok = same_entries(j1, j2) && same_entries(i1, i2);
    r.outcome = ok ? Outcome::Pass : Outcome::Fail;
    r.detail = ok ? "tables agree" : "tables depend on the characteristic";
    r.data = {{"binomial", {betti_json(j1), betti_json(j2)}},
              {"initial", {betti_json(i1), betti_json(i2)}}};
    rep.records.push_back(std::move(r));
  }
  return rep;
}

VerificationReport check_tensor_law(int n_max, const PrimeField& field, unsigned threads) {
  require_range("tensor", n_max, 2, 6);
  VerificationReport rep;
  rep.scenario = "tensor";
  rep.parameters = base_parameters(n_max, field);
  for (int m = 2; m <= n_max; ++m) {
    for (int p = m; m + p <= n_max; ++p) {
      const SimpleGraph g = disjoint_union(complete_graph(m), complete_graph(p));
      VerificationRecord r;
      r.subject = format_inline_graph(g);
      r.reproduce = reproduce_betti(g, field);
      const BettiTable whole = binomial_table(g, field, threads);
      const BettiTable tensor = betti_tensor(binomial_table(complete_graph(m), field, threads),
                                             binomial_table(complete_graph(p), field, threads));
      const bool ok = same_entries(whole, tensor);
      r.outcome = ok ? Outcome::Pass : Outcome::Fail;
      r.detail = "K_" + std::to_string(m) + " u K_" + std::to_string(p) +
                 (ok ? ": tensor law holds" : ": tensor law fails");
      r.data = {{"union", betti_json(whole)}, {"tensor", betti_json(tensor)}};
      rep.records.push_back(std::move(r));
    }
  }
  return rep;
}

std::vector<std::string> suite_names() {
  return {"main",    "main2",     "reg2",  "exact-seq",      "semicontinuity",
          "engines", "gb-closed", "hilbert", "characteristic", "tensor"};
}

std::vector<VerificationReport> run_suite(const std::string& name, const SuiteOptions& options) {
  const PrimeField field(options.prime);
  const bool all = name == "all";
  auto known = suite_names();
  if (!all && std::find(known.begin(), known.end(), name) == known.end())
    throw InputError("unknown suite '" + name + "'");

  // Default and largest supported max n per suite.
  const std::map<std::string, std::pair<int, int>> limits = {
      {"main", {6, 7}},          {"main2", {6, 6}},   {"reg2", {6, 6}},
      {"exact-seq", {6, 6}},     {"semicontinuity", {5, 5}}, {"engines", {5, 5}},
      {"gb-closed", {5, 5}},     {"hilbert", {5, 5}}, {"characteristic", {5, 5}},
      {"tensor", {6, 6}}};
  auto max_n_for = [&](const std::string& suite) {
    auto [def, hi] = limits.at(suite);
    if (!options.max_n) return def;
    return all ? std::min(*options.max_n, hi) : *options.max_n;
  };

  std::vector<VerificationReport> out;
  // "all" covers the theorem suites; the cross-check suites run by name only.
  auto wants = [&](const std::string& s) { return all || name == s; };
  auto named = [&](const std::string& s) { return name == s; };
  const unsigned t = options.threads;
  if (wants("main")) out.push_back(check_theorem_main(max_n_for("main"), field, t));
  if (wants("main2")) out.push_back(check_theorem_main2(max_n_for("main2"), field, t));
  if (wants("reg2")) out.push_back(check_prop_reg2(max_n_for("reg2"), field, t));
  if (wants("exact-seq")) {
    const int n_max = max_n_for("exact-seq");
    require_range("exact-seq", n_max, 2, 6);
    VerificationReport merged;
    merged.scenario = "exact-seq";
    merged.parameters = base_parameters(n_max, field);
    for (int n = 3; n <= n_max; ++n)
      for (int a = 2; a < n; ++a)
        for (int b = a; b < n; ++b)
          for (auto& r : check_exact_sequence_identities(n, a, b, field, t).records)
            merged.records.push_back(std::move(r));
    out.push_back(std::move(merged));
  }
  if (wants("semicontinuity"))
    out.push_back(check_semicontinuity(max_n_for("semicontinuity"), field, t));
  if (named("engines")) out.push_back(check_engines(max_n_for("engines"), field, t));
  if (named("gb-closed")) out.push_back(check_groebner_iff_closed(max_n_for("gb-closed"), field));
  if (named("hilbert")) out.push_back(check_hilbert(max_n_for("hilbert"), 6, field));
  if (name == "characteristic" || (all && options.second_prime)) {
    const PrimeField second(options.second_prime.value_or(101));
    out.push_back(check_characteristic(max_n_for("characteristic"), field, second, t));
  }
  if (named("tensor")) out.push_back(check_tensor_law(max_n_for("tensor"), field, t));
  return out;
}

}  // namespace bei
