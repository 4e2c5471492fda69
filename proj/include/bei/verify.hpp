#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bei/field.hpp"

namespace bei {

enum class Outcome { Pass, Fail, ExpectedFail };
std::string to_string(Outcome o);

struct VerificationRecord {
  std::string subject;  // inline graph or parameter tuple
  Outcome outcome = Outcome::Pass;
  std::string detail;
  nlohmann::ordered_json data = nlohmann::ordered_json::object();
  /// A CLI invocation that recomputes the data behind this record.
  std::string reproduce;
};

struct VerificationReport {
  std::string scenario;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  std::vector<VerificationRecord> records;

  std::size_t count(Outcome o) const;
  bool clean() const { return count(Outcome::Fail) == 0; }
  /// Deterministic for fixed inputs: no timings, stable ordering.
  nlohmann::ordered_json to_json() const;
  /// One header line plus one line per failing or expected-fail record.
  std::string summary() const;
};

// Strand equality (clique formula, RVT, bipartite count, Koszul row 1) over
// all PI graphs with n <= n_max, plus the star as a negative control.
VerificationReport check_theorem_main(int n_max, const PrimeField& field, unsigned threads = 0);
// Full-table equality of S/J_G and S/in(J_G) for reg-2 PI graphs.
VerificationReport check_theorem_main2(int n_max, const PrimeField& field, unsigned threads = 0);
// Reg-2 classification against the computed regularity and induced paths.
VerificationReport check_prop_reg2(int n_max, const PrimeField& field, unsigned threads = 0);
// The long-exact-sequence identities for the graph with facets [1,b], [a,n].
VerificationReport check_exact_sequence_identities(int n, int a, int b, const PrimeField& field,
                                                   unsigned threads = 0);
// beta(S/J_G) <= beta(S/in J_G) for all graphs, with equality on PI graphs.
VerificationReport check_semicontinuity(int n_max, const PrimeField& field, unsigned threads = 0);
// Koszul vs Hochster on every squarefree initial ideal of the corpus.
VerificationReport check_engines(int n_max, const PrimeField& field, unsigned threads = 0);
// is_groebner(edge binomials) against the triple criterion, all labeled graphs.
VerificationReport check_groebner_iff_closed(int n_max, const PrimeField& field);
// Hilbert functions of S/J_G and S/in(J_G) up to max_degree.
VerificationReport check_hilbert(int n_max, int max_degree, const PrimeField& field);
// Tables over two primes.
VerificationReport check_characteristic(int n_max, const PrimeField& p1, const PrimeField& p2,
                                        unsigned threads = 0);
// J of K_m u K_p against the tensor of the factor tables, m, p >= 2.
VerificationReport check_tensor_law(int n_max, const PrimeField& field, unsigned threads = 0);

struct SuiteOptions {
  std::optional<int> max_n;
  std::uint32_t prime = PrimeField::kDefaultPrime;
  std::optional<std::uint32_t> second_prime;
  unsigned threads = 0;
};

/// Suite names: main, main2, reg2, exact-seq, semicontinuity, engines,
/// gb-closed, hilbert, characteristic, tensor, all. Throws InputError on an
/// unknown name or out-of-range max_n. "all" runs main, main2, reg2, exact-seq
/// and semicontinuity, plus characteristic when a second prime is given; max_n
/// is then clamped to each suite's own limit.
std::vector<VerificationReport> run_suite(const std::string& name, const SuiteOptions& options);
std::vector<std::string> suite_names();

}  // namespace bei
