#include "quizzy/reports.hpp"

#include <algorithm>
#include <stdexcept>

#include "quizzy/categories.hpp"
#include "quizzy/elimination.hpp"
#include "quizzy/finite_action.hpp"
#include "quizzy/fourier.hpp"
#include "quizzy/group_duals.hpp"
#include "quizzy/intertwiner.hpp"
#include "quizzy/magic_character.hpp"
#include "quizzy/nc_polynomial.hpp"
#include "quizzy/signed_permutation.hpp"

namespace quizzy {

bool SuiteResult::all_passed() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

CheckResult check(const std::string& name, bool pass, const std::string& detail = "") {
  return CheckResult{name, pass, detail};
}

std::vector<std::string> all_words(int k) {
  std::vector<std::string> words;
  for (int mask = 0; mask < (1 << k); ++mask) {
    std::string w;
    for (int pos = 0; pos < k; ++pos) w += (mask >> pos) & 1 ? 'p' : 'u';
    words.push_back(w);
  }
  std::sort(words.begin(), words.end());
  return words;
}

// ---- section 3: Fourier pair, magic unitary, character chain ----

bool fourier_inversion_holds(int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    const std::uint32_t size = 1u << n;
    for (std::uint32_t p = 0; p < size; ++p) {
      // beta(alpha(delta_p)) must be delta_p.
      std::vector<Rational> recovered(size, Rational(0));
      for (const auto& [exps, coeff] : fourier_alpha(p, n).terms) {
        const std::vector<Rational> beta = fourier_beta(exps, n);
        for (std::uint32_t q = 0; q < size; ++q) recovered[q] += coeff * beta[q];
      }
      for (std::uint32_t q = 0; q < size; ++q)
        if (recovered[q] != (q == p ? 1 : 0)) return false;
    }
    for (std::uint32_t e = 0; e < size; ++e) {
      // alpha(beta(g^e)) must be g^e.
      GroupAlgElement recovered;
      recovered.N = n;
      const std::vector<Rational> beta = fourier_beta(e, n);
      for (std::uint32_t q = 0; q < size; ++q) {
        for (const auto& [exps, coeff] : fourier_alpha(q, n).terms)
          recovered.add(exps, beta[q] * coeff);
      }
      GroupAlgElement expected;
      expected.N = n;
      expected.add(e, 1);
      if (!(recovered == expected)) return false;
    }
  }
  return true;
}

bool magic_unitary_matches_cube(int max_n, const Budget& budget, std::string& detail) {
  for (int n = 1; n <= max_n; ++n) {
    const auto w = magic_unitary(n, budget);
    const std::uint32_t size = 1u << n;
    const NCPolynomial chi = magic_character(n, CharacterForm::Final, budget);
    for (const SignedPermutation& g : enumerate_hyperoctahedral(n, budget)) {
      const auto gm = matrix_of(g);
      const std::vector<int> cube = action_cube(g);
      Rational trace = 0;
      for (std::uint32_t i = 0; i < size; ++i) {
        Rational row_sum = 0;
        for (std::uint32_t k = 0; k < size; ++k) {
          const Rational v = evaluate(w[i][k], gm);
          if (v != 0 && v != 1) {
            detail = "entry not 0/1 at N=" + std::to_string(n);
            return false;
          }
          const bool expected = cube[k] == static_cast<int>(i);
          if ((v == 1) != expected) {
            detail = "permutation matrix differs from the cube action at N=" + std::to_string(n);
            return false;
          }
          row_sum += v;
          if (i == k) trace += v;
        }
        if (row_sum != 1) {
          detail = "row sum differs from 1 at N=" + std::to_string(n);
          return false;
        }
      }
      if (trace != evaluate(chi, gm)) {
        detail = "trace differs from the character value at N=" + std::to_string(n);
        return false;
      }
    }
  }
  return true;
}

bool character_chain_holds(int max_n, const Budget& budget) {
  for (int n = 1; n <= max_n; ++n) {
    const NCPolynomial raw = magic_character(n, CharacterForm::Raw, budget);
    const NCPolynomial grouped = magic_character(n, CharacterForm::Grouped, budget);
    const NCPolynomial final_form = magic_character(n, CharacterForm::Final, budget);
    if (!(raw == grouped) || !(grouped == final_form)) return false;
    // Sign stripping turns the antisymmetric characters into the graded
    // character pieces, term by term.
    const std::vector<NCPolynomial> parts = magic_character_parts(n, budget);
    for (int r = 0; r <= n; ++r) {
      NCPolynomial stripped;
      const NCPolynomial antisym = antisym_character(n, r, budget);
      for (const auto& [mono, coeff] : antisym.terms()) {
        if (coeff != 1 && coeff != -1) return false;
        stripped.add_term(mono, 1);
      }
      if (!(stripped == parts[static_cast<size_t>(r)])) return false;
    }
  }
  return true;
}

bool trace_form_matches(int max_n, const Budget& budget) {
  for (int n = 1; n <= max_n; ++n) {
    NCPolynomial trace;
    for (std::uint32_t i = 0; i < (1u << n); ++i) trace += magic_unitary_entry(n, i, i);
    if (!(trace == magic_character(n, CharacterForm::Raw, budget))) return false;
  }
  return true;
}

bool character_n2_verbatim(const Budget& budget) {
  // 1 + u11 + u22 + u11 u22 + u12 u21
  NCPolynomial expected = NCPolynomial::unit();
  expected += NCPolynomial::generator(1, 1);
  expected += NCPolynomial::generator(2, 2);
  expected += NCPolynomial::generator(1, 1) * NCPolynomial::generator(2, 2);
  expected += NCPolynomial::generator(1, 2) * NCPolynomial::generator(2, 1);
  return magic_character(2, CharacterForm::Final, budget) == expected;
}

// ---- theorem55 suite machinery ----

bool twist_identity_holds(int max_m, long max_n) {
  for (int m = 2; m <= max_m; m += 2)
    for (const SetPartition& pi : enumerate_category(CategoryId::Peven, m))
      for (long n = 1; n <= max_n; ++n)
        if (!(twist_via_mobius(pi, n) == xi_twisted(pi, n))) return false;
  return true;
}

bool crossing_expansion_exact(long n) {
  // The crossing pairing expands to -xi_crossing + 2 xi_oneblock.
  const SetPartition crossing(4, {{1, 3}, {2, 4}});
  SparseTensorVector expected;
  expected.N = n;
  expected.legs = 4;
  add_scaled(expected, Rational(-1), xi_vector(crossing, n));
  add_scaled(expected, Rational(2), xi_vector(SetPartition::one_block(4), n));
  return twist_via_mobius(crossing, n) == expected;
}

int span_identity_dim(long n, CategoryId twisted_cat, CategoryId plain_cat, int m) {
  std::vector<SparseTensorVector> twisted, plain;
  for (const SetPartition& pi : enumerate_category(twisted_cat, m)) twisted.push_back(xi_twisted(pi, n));
  for (const SetPartition& pi : enumerate_category(plain_cat, m)) plain.push_back(xi_vector(pi, n));
  return span_intersection_dim(twisted, plain);
}

}  // namespace

DiscrepancyReport reconcile_theorem86(long n_small, long n_large, const Budget& budget) {
  DiscrepancyReport report;
  report.claim = "theorem86: 4-orbital count of the liberated sudoku action = 43";
  report.claimed = 43;
  const std::vector<std::string> words = all_words(4);

  Rational totals[2][2];  // [N index][method: 0 rank, 1 weingarten]
  const long dims[2] = {n_small, n_large};
  bool breakdown_consistent = true;
  for (int d = 0; d < 2; ++d) {
    const QuizzySpec spec{CategoryId::NCeven, false, dims[d]};
    for (const std::string& word : words) {
      const Rational via_rank(static_cast<long>(word_moment(word, spec, budget)));
      const Rational via_wg = word_moment_weingarten(word, spec);
      totals[d][0] += via_rank;
      totals[d][1] += via_wg;
      if (via_rank != via_wg) breakdown_consistent = false;
      if (d == 0) report.breakdown.push_back({word, via_rank, via_wg});
    }
    report.methods.emplace_back("constrained-rank N=" + std::to_string(dims[d]), totals[d][0]);
    report.methods.emplace_back("weingarten N=" + std::to_string(dims[d]), totals[d][1]);
  }
  report.computed = totals[0][0];
  const bool methods_agree = breakdown_consistent && totals[0][0] == totals[0][1] &&
                             totals[0][0] == totals[1][0] && totals[1][0] == totals[1][1];
  if (methods_agree && report.computed == report.claimed)
    report.status = "confirmed";
  else if (methods_agree)
    report.status = "refuted-by-two-independent-methods";
  else
    report.status = "inconclusive";
  return report;
}

DiscrepancyReport reconcile_free_dual_classes(const std::vector<long>& orders,
                                              const Budget& budget) {
  (void)budget;
  DualSpec spec{orders, DualSpec::Mode::Free};
  DiscrepancyReport report;
  report.claim = "free-product dual: algebraic 3-orbital class total equals the 3-loop count";
  report.claimed = Rational(static_cast<long>(loop_count(spec, 3)));
  const long long structural = orbital_classes(spec, 3).total;
  const long long brute = orbital_classes_bruteforce(spec, 3);
  report.computed = Rational(static_cast<long>(structural));
  report.methods.emplace_back("structural-count", Rational(static_cast<long>(structural)));
  report.methods.emplace_back("bruteforce-closure", Rational(static_cast<long>(brute)));
  if (structural != brute)
    report.status = "inconclusive";
  else if (report.computed == report.claimed)
    report.status = "confirmed";
  else
    report.status = "refuted-by-two-independent-methods";
  return report;
}

std::vector<std::string> suite_names() {
  return {"section3", "section5", "section6", "section8", "theorem55", "theorem86", "all"};
}

namespace {

void run_section3(SuiteResult& out, const Budget& budget) {
  out.checks.push_back(check("fourier-inversion", fourier_inversion_holds(6)));
  std::string detail;
  const bool magic_ok = magic_unitary_matches_cube(3, budget, detail);
  out.checks.push_back(check("magic-unitary-classical-points", magic_ok, detail));
  out.checks.push_back(check("character-chain", character_chain_holds(4, budget)));
  out.checks.push_back(check("character-trace-form", trace_form_matches(3, budget)));
  out.checks.push_back(check("character-N2-verbatim", character_n2_verbatim(budget)));
}

void run_section5(SuiteResult& out, const Budget& budget) {
  const long n = 5;
  struct Item {
    const char* name;
    QuizzySpec inner, outer;
  };
  const Item items[] = {
      {"level-HN-in-HNplus", {CategoryId::Peven, false, n}, {CategoryId::NCeven, false, n}},
      {"level-HN-in-ObarN", {CategoryId::Peven, false, n}, {CategoryId::P2, true, n}},
      {"level-ON-in-ONplus", {CategoryId::P2, false, n}, {CategoryId::NC2, false, n}},
  };
  for (const Item& item : items) {
    const LiberationResult r = liberation_level(item.inner, item.outer, 6, budget);
    std::string seq = "inner:";
    for (int d : r.inner_dims) seq += " " + std::to_string(d);
    seq += "  outer:";
    for (int d : r.outer_dims) seq += " " + std::to_string(d);
    out.checks.push_back(check(item.name, r.level.has_value() && *r.level == 4, seq));
  }
}

void run_section6(SuiteResult& out, const Budget& budget) {
  bool cyclic_ok = true;
  for (long n = 2; n <= 5 && cyclic_ok; ++n)
    for (int k = 1; k <= 5 && cyclic_ok; ++k) {
      DualSpec spec{{n}, DualSpec::Mode::Direct};
      long long expected = 1;
      for (int i = 1; i < k; ++i) expected *= n;
      cyclic_ok = loop_count(spec, k) == expected;
    }
  out.checks.push_back(check("cyclic-loop-counts", cyclic_ok));

  bool modes_ok = true;
  std::string mode_detail;
  for (const std::vector<long>& orders : {std::vector<long>{2, 2}, std::vector<long>{2, 3}}) {
    DualSpec direct{orders, DualSpec::Mode::Direct};
    DualSpec free_spec{orders, DualSpec::Mode::Free};
    for (int k = 1; k <= 2; ++k)
      if (loop_count(direct, k) != loop_count(free_spec, k)) modes_ok = false;
    bool differ = false;
    for (int k = 3; k <= 4; ++k)
      if (loop_count(direct, k) != loop_count(free_spec, k)) differ = true;
    if (!differ) modes_ok = false;
  }
  out.checks.push_back(check("free-vs-direct-loop-counts", modes_ok, mode_detail));

  bool classes_ok = true;
  std::string class_detail;
  for (const std::vector<long>& orders : {std::vector<long>{2, 2}, std::vector<long>{2, 3}}) {
    for (int k = 1; k <= 3; ++k) {
      DualSpec direct{orders, DualSpec::Mode::Direct};
      if (orbital_classes(direct, k).total != loop_count(direct, k)) classes_ok = false;
      if (orbital_classes(direct, k).total != orbital_classes_bruteforce(direct, k))
        classes_ok = false;
    }
    for (int k = 1; k <= 2; ++k) {
      DualSpec free_spec{orders, DualSpec::Mode::Free};
      if (orbital_classes(free_spec, k).total != loop_count(free_spec, k)) classes_ok = false;
      if (orbital_classes(free_spec, k).total != orbital_classes_bruteforce(free_spec, k))
        classes_ok = false;
    }
  }
  out.checks.push_back(check("orbital-classes-match-loops", classes_ok,
                             "direct mode k<=3 and free mode k<=2, structural and brute force"));

  // Free mode at k=3: the class total provably undercounts the analytic
  // orbital count; reported as a discrepancy, not asserted away.
  const DiscrepancyReport free_classes = reconcile_free_dual_classes({2, 2}, budget);
  out.checks.push_back(check("free-dual-3-orbital-reconciliation",
                             free_classes.status != "inconclusive",
                             "classes " + to_string(free_classes.computed) + " vs loops " +
                                 to_string(free_classes.claimed) + " [" + free_classes.status + "]"));
  out.discrepancies.push_back(free_classes);

  bool snplus_ok = true;
  for (int k = 1; k <= 5; ++k)
    if (snplus_count(k) != snplus_class_count_bruteforce(k, k + 1)) snplus_ok = false;
  const QuizzySpec snplus{CategoryId::NC, false, 5};
  const int fix3 = fix_dim(snplus, 3, budget);
  snplus_ok = snplus_ok && snplus_class_count_bruteforce(3, 5) == 4 && fix3 == 5;
  out.checks.push_back(check("snplus-orbital-rule", snplus_ok, "F_3 dim 4 < 5 = fix dim"));
}

void run_section8(SuiteResult& out, const Budget& budget) {
  bool cube_ok = true;
  for (int n = 1; n <= 4; ++n)
    if (burnside_orbital_count(hyperoctahedral_on_cube(n, budget), 2) != Int(n + 1))
      cube_ok = false;
  out.checks.push_back(check("cube-2-orbitals", cube_ok, "N+1 for N<=4"));

  bool obar_ok = true;
  for (long n = 1; n <= 3; ++n)
    if (hypercube_orbital_count(2, n, budget) != n + 1) obar_ok = false;
  out.checks.push_back(check("twisted-cube-2-orbitals", obar_ok, "N+1 for N<=3"));

  bool segment_ok = true;
  const long expected_counts[4] = {1, 3, 11, 49};
  for (int n = 4; n <= 5; ++n) {
    const FiniteAction segments = hyperoctahedral_on_segments(n, budget);
    for (int k = 1; k <= 4; ++k)
      if (burnside_orbital_count(segments, k) != Int(expected_counts[k - 1])) segment_ok = false;
  }
  out.checks.push_back(check("segment-orbitals", segment_ok, "1,3,11,49 at N=4,5"));

  const std::vector<long long> mult = segment_configuration_multiplicities(4, 3, budget);
  out.checks.push_back(check("segment-3-configurations", mult == std::vector<long long>{1, 1, 3, 3, 3},
                             "multiplicities 1,3,3,3,1"));

  bool sudoku_ok = true;
  const long long liberated[3] = {1, 3, 11};
  // Claims verified at N=5 with the neighbor dimensions printed alongside,
  // to expose stabilization.
  std::string stab = "values at N=4,5,6:";
  for (int k = 1; k <= 3; ++k) {
    if (sudoku_moment(k, 5, true, budget) != liberated[k - 1]) sudoku_ok = false;
    stab += " k=" + std::to_string(k) + ":";
    for (long n = 4; n <= 6; ++n) stab += " " + std::to_string(sudoku_moment(k, n, true, budget));
  }
  out.checks.push_back(check("liberated-sudoku-moments", sudoku_ok, "1,3,11 at N=5; " + stab));

  bool classical_ok = true;
  for (int n = 4; n <= 5; ++n) {
    const FiniteAction segments = hyperoctahedral_on_segments(n, budget);
    for (int k = 1; k <= 4; ++k)
      if (Int(static_cast<long>(sudoku_moment(k, n, false, budget))) != burnside_orbital_count(segments, k))
        classical_ok = false;
  }
  out.checks.push_back(
      check("classical-sudoku-vs-burnside", classical_ok, "two independent paths, k<=4, N=4,5"));

  const ConjectureReport conj = explore_conjecture82(3, 3, budget);
  out.checks.push_back(check("conjecture82-exploration", conj.gate_passed,
                             "exploratory: classical " + to_string(conj.classical_side) +
                                 ", twisted " + std::to_string(conj.quantum_side) +
                                 " (no assertion)"));
}

void run_theorem55(SuiteResult& out, const Budget& budget, bool experimental) {
  out.checks.push_back(check("twist-mobius-identity", twist_identity_holds(6, 3),
                             "all even partitions, m<=6, N<=3"));
  out.checks.push_back(check("crossing-expansion", crossing_expansion_exact(3),
                             "-xi_crossing + 2 xi_oneblock"));
  const int dim = span_identity_dim(5, CategoryId::P2, CategoryId::NCeven, 4);
  const int nc2 = static_cast<int>(enumerate_category(CategoryId::NC2, 4).size());
  out.checks.push_back(check("span-intersection", dim == 2 && nc2 == 2,
                             "dim " + std::to_string(dim) + " = |NC2(4)| = " + std::to_string(nc2)));
  if (experimental) {
    const int dim2 = span_identity_dim(5, CategoryId::P2, CategoryId::Pevenstar, 4);
    const int p2star = static_cast<int>(enumerate_category(CategoryId::P2star, 4).size());
    out.checks.push_back(check("span-intersection-balanced(experimental)", true,
                               "reported without assertion: dim " + std::to_string(dim2) +
                                   ", |P2star(4)| = " + std::to_string(p2star)));
  }
  (void)budget;
}

void run_theorem86(SuiteResult& out, const Budget& budget) {
  const FiniteAction segments = hyperoctahedral_on_segments(5, budget);
  const bool classical_ok = burnside_orbital_count(segments, 4) == Int(49) &&
                            sudoku_moment(4, 5, false, budget) == 49;
  out.checks.push_back(check("classical-4-orbitals", classical_ok, "49 by Burnside and by ranks"));

  const DiscrepancyReport report = reconcile_theorem86(5, 6, budget);
  const bool complete = report.breakdown.size() == 16 && report.methods.size() == 4;
  const bool pass =
      complete && (report.status == "confirmed" ||
                   report.status == "refuted-by-two-independent-methods");
  out.checks.push_back(check("liberated-4-orbital-reconciliation", pass,
                             "computed " + to_string(report.computed) + " vs published " +
                                 to_string(report.claimed) + " [" + report.status + "]"));
  out.discrepancies.push_back(report);
}

}  // namespace

SuiteResult verify_suite(const std::string& name, const Budget& budget, bool experimental) {
  SuiteResult out;
  out.suite = name;
  if (name == "section3")
    run_section3(out, budget);
  else if (name == "section5")
    run_section5(out, budget);
  else if (name == "section6")
    run_section6(out, budget);
  else if (name == "section8")
    run_section8(out, budget);
  else if (name == "theorem55")
    run_theorem55(out, budget, experimental);
  else if (name == "theorem86")
    run_theorem86(out, budget);
  else if (name == "all") {
    for (const std::string& sub : suite_names()) {
      if (sub == "all") continue;
      SuiteResult part = verify_suite(sub, budget, experimental);
      for (auto& c : part.checks) {
        c.name = sub + "/" + c.name;
        out.checks.push_back(std::move(c));
      }
      for (auto& d : part.discrepancies) out.discrepancies.push_back(std::move(d));
    }
  } else {
    throw std::invalid_argument("unknown suite: " + name);
  }
  return out;
}

ConjectureReport explore_conjecture82(long N, int k, const Budget& budget) {
  if (N < 1 || N > 3) throw std::invalid_argument("conjecture exploration is budgeted for N <= 3");
  ConjectureReport report;
  report.N = N;
  report.k = k;
  const FiniteAction cube = hyperoctahedral_on_cube(static_cast<int>(N), budget);
  report.gate_passed = burnside_orbital_count(cube, 2) == Int(N + 1) &&
                       hypercube_orbital_count(2, N, budget) == N + 1;
  report.classical_side = burnside_orbital_count(cube, k);
  report.quantum_side = hypercube_orbital_count(k, N, budget);
  return report;
}

}  // namespace quizzy
