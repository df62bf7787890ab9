// Acceptance gate: one pass/fail line per criterion. Exit code = number of
// failed criteria.

#include "sj/catalog.hpp"
#include "sj/families.hpp"
#include "sj/generation.hpp"
#include "sj/osp.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace sj;

namespace {

int failures = 0;

void criterion(int n, const std::string& what, const std::function<bool()>& run) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string error;
  try {
    ok = run();
  } catch (const std::exception& ex) {
    error = ex.what();
  }
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  std::printf("criterion %d: %s  (%.1fs)  %s%s%s\n", n, ok ? "PASS" : "FAIL",
              secs, what.c_str(), error.empty() ? "" : " -- ",
              error.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::vector<Superalgebra<Rational>> axiom_suite() {
  std::vector<Superalgebra<Rational>> all;
  all.push_back(kaplansky());
  for (const Rational& t : {Rational(2), Rational(-1), Rational(-2),
                            Rational(-2, 3), Rational(-3, 2), Rational(1)})
    all.push_back(d_t(t));
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 2; ++q)
      if (p + q >= 1) all.push_back(superform_algebra(p, q));
  for (int p = 0; p <= 5; ++p)
    for (int q = 0; q <= 5 - p; ++q)
      if (p + q >= 1) all.push_back(plus_algebra(matrix_superalgebra(p, q)));
  for (int n = 1; n <= 3; ++n) all.push_back(plus_algebra(q_n(n)));
  for (int n = 1; n <= 3; ++n) all.push_back(p_jordan(n).algebra);
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; n + 2 * m <= 6; ++m)
      all.push_back(osp_jordan(n, m).algebra);
  for (int n = 1; n <= 3; ++n) all.push_back(kantor_double(n));
  return all;
}

bool c1_axioms() {
  for (const auto& j : axiom_suite()) {
    auto rep = check_jordan_super(j);
    if (!rep.pass) {
      std::printf("  [%s] %s\n", j.name.c_str(), rep.detail.c_str());
      return false;
    }
  }
  return true;
}

bool c2_envelope() {
  for (const auto& j : axiom_suite())
    if (!grassmann_envelope_check(j).pass) {
      std::printf("  envelope failed on %s\n", j.name.c_str());
      return false;
    }
  auto bad = corrupted_fixtures();
  if (bad.size() != 3) return false;
  for (const auto& j : bad)
    if (grassmann_envelope_check(j).pass) {
      std::printf("  envelope missed the corruption in %s\n", j.name.c_str());
      return false;
    }
  return true;
}

bool c3_fixtures() {
  for (const auto& f : all_iso_fixtures()) {
    if (!check_graded_hom(f.src, f.tgt, f.map, false).pass ||
        rank(f.map.mat) != f.src.dim() || f.src.dim() != f.tgt.dim()) {
      std::printf("  fixture %s failed\n", f.name.c_str());
      return false;
    }
  }
  for (const Rational& t : {Rational(2), Rational(-2), Rational(3)}) {
    auto f = fixture_dt_dinv(t);
    if (!check_graded_hom(f.src, f.tgt, f.map, true).pass ||
        rank(f.map.mat) != 4) {
      std::printf("  fixture %s failed\n", f.name.c_str());
      return false;
    }
  }
  return true;
}

bool c4_representations() {
  for (int m = 0; m <= 8; ++m)
    if (!check_rep(vm_module(m)).pass) return false;
  for (int m = 0; m <= 8; ++m) {
    auto mod = vm_module(m);
    std::vector<bool> seen(2 * m + 1, false);
    for (int i = 0; i < mod.dim(); ++i) {
      Rational d = mod.rho_h(i, i);
      long long v = static_cast<long long>(numerator(d));
      if (denominator(d) != 1 || v < -m || v > m || seen[v + m]) return false;
      seen[v + m] = true;
    }
  }
  for (int m = 1; m <= 8; ++m) {
    auto mp = minimal_poly_xyyx(vm_module(m));
    if (mp != std::vector<Rational>{Rational(-m * (m + 1)), 1, 1}) return false;
  }
  for (int m = 1; m <= 6; ++m)
    if (form_solution_space_dim(vm_module(m, m % 2 == 1)) != 1) return false;
  for (int m = 1; m <= 5; ++m)
    for (int which : {0, 1}) {
      auto emb = embed_dt(m, which);
      if (!check_graded_hom(d_t(emb.t), emb.target, emb.map, true).pass)
        return false;
      auto claims = verify_embedding_claims(m, which);
      if (!claims.report.pass || claims.closure_dim != (2 * m + 1) * (2 * m + 1))
        return false;
    }
  return true;
}

bool c5_exhaustive_proofs() {
  std::vector<MaximalFamily> fams;
  for (auto& f : easy_maximals_k3(0)) fams.push_back(std::move(f));
  for (const Rational& t : {Rational(2), Rational(-2), Rational(-2, 3)})
    for (auto& f : easy_maximals_dt(t, 0)) fams.push_back(std::move(f));
  for (int kind : {0, 1}) {
    for (auto& f : easy_maximals_superform(1, 1, kind, 0))
      fams.push_back(std::move(f));
    for (auto& f : easy_maximals_superform(2, 1, kind, 0))
      fams.push_back(std::move(f));
  }
  for (const auto& fam : fams) {
    for (long long p : {5LL, 7LL}) {
      // the proof is only meaningful when the family survives reduction:
      // skip (t, p) pairs where t = 0, 1, -1 mod p
      if (fam.id.rfind("thm2.1.ii.Dt", 0) == 0) {
        Rational t = parse_rational(fam.id.substr(fam.id.rfind(':') + 1));
        long long tp = reduce_mod_p(t, p).value();
        if (tp == 0 || tp == 1 || tp == p - 1) continue;
      }
      MaximalityOptions opt;
      opt.mode = MaximalityMode::ExhaustiveModP;
      opt.p = p;
      auto rep = maximality_check(fam.ambient, fam.sub, opt);
      if (rep.verdict != Verdict::AllGenerate || !rep.proof) {
        std::printf("  %s not proven maximal mod %lld\n", fam.id.c_str(), p);
        return false;
      }
      auto jp = reduce_mod_p(fam.ambient, p);
      auto bp = reduce_mod_p(fam.sub, p);
      if (!exhaustive_subalgebra_scan_mod_p(jp, bp, p).empty()) {
        std::printf("  scan found an intermediate subalgebra in %s mod %lld\n",
                    fam.id.c_str(), p);
        return false;
      }
    }
  }
  return true;
}

bool c6_evidence_modes() {
  std::vector<MaximalFamily> fams;
  fams.push_back(hermitian_maximal_in_plus_transpose(2));
  fams.push_back(hermitian_maximal_in_plus_osp(1, 1));
  fams.push_back(assoc_family_1a(1, 1, 1, 0));
  fams.push_back(assoc_family_1a(2, 1, 1, 0));
  fams.push_back(assoc_family_1b(2));
  fams.push_back(assoc_family_2a(2, 1));
  fams.push_back(assoc_family_2b(2));
  fams.push_back(assoc_family_2c(2, 1));
  fams.push_back(herm_family_i1(4, 2));
  fams.push_back(herm_family_ii1(3));
  fams.push_back(herm_family_i2());
  fams.push_back(herm_family_ii2());
  for (const auto& fam : fams) {
    auto basis =
        maximality_check(fam.ambient, fam.sub, {MaximalityMode::ComplementBasis});
    if (basis.verdict != Verdict::AllGenerate) {
      std::printf("  %s: complement-basis found a counterexample\n",
                  fam.id.c_str());
      return false;
    }
    MaximalityOptions ropt;
    ropt.mode = MaximalityMode::Randomized;
    ropt.trials = 200;
    auto rnd = maximality_check(fam.ambient, fam.sub, ropt);
    if (rnd.verdict != Verdict::AllGenerate) {
      std::printf("  %s: randomized found a counterexample\n", fam.id.c_str());
      return false;
    }
    if (fam.ambient.dim() - fam.sub.dim() <= 6) {
      MaximalityOptions eopt;
      eopt.mode = MaximalityMode::ExhaustiveModP;
      eopt.p = 5;
      auto ex = maximality_check(fam.ambient, fam.sub, eopt);
      if (ex.verdict != Verdict::AllGenerate || !ex.proof) {
        std::printf("  %s: exhaustive mod 5 failed\n", fam.id.c_str());
        return false;
      }
    }
  }
  return true;
}

bool c7_non_semisimple() {
  for (auto fam : {nonss_example_m11(), nonss_example_osp12()}) {
    if (fam.sub.dim() + 1 != fam.ambient.dim()) return false;
    auto rep =
        maximality_check(fam.ambient, fam.sub, {MaximalityMode::ComplementBasis});
    if (rep.verdict != Verdict::AllGenerate || !rep.proof) return false;
  }
  return true;
}

bool c8_trace_facts() {
  if (!trace_obstruction(matrix_superalgebra(2, 2), 100).pass) return false;
  if (!trace_obstruction(q_n(2), 100).pass) return false;
  if (!peirce_obstruction_qn(2, 1).pass) return false;
  if (!peirce_obstruction_qn(3, 1).pass) return false;
  if (!peirce_obstruction_qn(3, 2).pass) return false;
  return true;
}

bool c9_wrong_families() {
  // three deliberately wrong "maximal" candidates must be refuted with
  // verifiable witnesses
  struct Wrong {
    Superalgebra<Rational> ambient;
    std::vector<Vec<Rational>> gens;
    MaximalityOptions opt;
  };
  std::vector<Wrong> wrong;
  {
    auto d = d_t(1);
    Vec<Rational> e = zero_vec<Rational>(4);
    e[0] = 1;
    wrong.push_back({d, {e}, {MaximalityMode::ComplementBasis}});
  }
  {
    auto j = plus_algebra(matrix_superalgebra(1, 1));
    Vec<Rational> a = zero_vec<Rational>(4), b = zero_vec<Rational>(4);
    a[0] = 1;
    b[3] = 1;
    MaximalityOptions ropt;
    ropt.mode = MaximalityMode::Randomized;
    ropt.trials = 100;
    wrong.push_back({j, {a, b}, ropt});
  }
  {
    auto s = superform_algebra(2, 1);
    Vec<Rational> e = zero_vec<Rational>(5);
    e[0] = 1;
    MaximalityOptions eopt;
    eopt.mode = MaximalityMode::ExhaustiveModP;
    eopt.p = 5;
    wrong.push_back({s, {e}, eopt});
  }
  for (auto& w : wrong) {
    auto b = span_of_homogeneous(w.gens, w.ambient.parities);
    auto rep = maximality_check(w.ambient, b, w.opt);
    if (rep.verdict != Verdict::CounterexampleFound || rep.witnesses.empty())
      return false;
    const auto& wit = rep.witnesses.front();
    if (wit.generated || wit.closure_dim >= w.ambient.dim()) return false;
    // the witness is verifiable: some homogeneous complement vector fails to
    // generate; re-derive one independently and confirm
    auto comp = graded_complement(b, Rational(1));
    bool refound = false;
    for (const auto& v : comp.basis()) {
      auto [gen, cl] = generates(w.ambient, b, v);
      if (!gen && cl.dim() < w.ambient.dim()) {
        refound = true;
        break;
      }
    }
    if (!refound && w.opt.mode == MaximalityMode::ComplementBasis) return false;
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "axiom suite across the catalog (exact arithmetic)", c1_axioms);
  criterion(2, "Grassmann envelope agrees with the axiom checks", c2_envelope);
  criterion(3, "isomorphism fixtures verified exactly", c3_fixtures);
  criterion(4, "osp(1,2) representation suite (m <= 8)", c4_representations);
  criterion(5, "exhaustive F_p maximality proofs for the small families",
            c5_exhaustive_proofs);
  criterion(6, "evidence modes for the matrix/hermitian families",
            c6_evidence_modes);
  criterion(7, "non-semisimple codimension-1 examples", c7_non_semisimple);
  criterion(8, "trace and Peirce obstruction facts", c8_trace_facts);
  criterion(9, "wrong families are refuted with witnesses", c9_wrong_families);
  if (failures == 0) std::printf("all acceptance criteria passed\n");
  return failures;
}
