#ifndef SJ_FAMILIES_HPP
#define SJ_FAMILIES_HPP

#include "sj/catalog.hpp"
#include "sj/generation.hpp"

#include <functional>
#include <string>
#include <vector>

namespace sj {

struct bad_blocks : algebra_error {
  using algebra_error::algebra_error;
};
struct side_condition_violated : algebra_error {
  using algebra_error::algebra_error;
};

// A candidate maximal subalgebra: proper, product-closed, graded; checked
// at construction.
struct MaximalFamily {
  std::string id;
  Superalgebra<Rational> ambient;
  GradedSubspace<Rational> sub;
  bool open = false;  // true: recorded as an open question, evidence only
  std::string note;
};

MaximalFamily make_family(std::string id, Superalgebra<Rational> ambient,
                          GradedSubspace<Rational> sub, bool open = false,
                          std::string note = "");

// J0 (+) line / one-even-codim families of K3, D_t and the superform
// algebras: the canonical first-coordinate choice plus seeded random ones.
std::vector<MaximalFamily> easy_maximals_k3(int random_variants,
                                            std::uint64_t seed = kDefaultSeed);
std::vector<MaximalFamily> easy_maximals_dt(const Rational& t,
                                            int random_variants,
                                            std::uint64_t seed = kDefaultSeed);
MaximalFamily d1_unit_family();  // F1 + J_odd inside D_1
// kind 0: J0 (+) (codim-1 odd subspace); kind 1: (F1 + codim-1 even) (+) J1
std::vector<MaximalFamily> easy_maximals_superform(
    int p, int q, int kind, int random_variants,
    std::uint64_t seed = kDefaultSeed);

// H(A,*) inside A^+ for the two hermitian flavors
MaximalFamily hermitian_maximal_in_plus_transpose(int n);
MaximalFamily hermitian_maximal_in_plus_osp(int n, int m);

// C^+ inside A^+, the five associative cases
MaximalFamily assoc_family_1a(int p, int q, int k1, int k2);  // eAe+eAf+fAf in M_{p,q}
MaximalFamily assoc_family_1b(int p);                          // C_A(u) = Q_p in M_{p,p}
MaximalFamily assoc_family_2a(int n, int r);                   // C0 + C0 u in Q_n
MaximalFamily assoc_family_2b(int n);                          // A0 in Q_n
MaximalFamily assoc_family_2c(int n, int r);                   // D0 + D1 u in Q_n

// H(C,*) inside H(A,*), the four hermitian cases at their minimal sizes
MaximalFamily herm_family_i1(int n, int k);   // eAe+fAf in p(n), rank-k e
MaximalFamily herm_family_ii1(int n);         // eA+Ae*+ff*Aff* in p(n), e = e_11
MaximalFamily herm_family_i2();               // eAe+fAf in osp_{2,2}
MaximalFamily herm_family_ii2();              // eA+Ae*+ff*Aff* in osp_{2,2}

// the two non-semisimple codimension-1 examples
MaximalFamily nonss_example_m11();
MaximalFamily nonss_example_osp12();

// evidence families for the open questions: the D_t image inside
// H(End(V(m)), *)
MaximalFamily dt_image_family(int m, int which);

// trace facts behind the K3-exclusion argument: diagonal idempotents have
// nonzero trace; u o v is traceless for random seeded odd pairs
VerificationReport trace_obstruction(const Superalgebra<Rational>& assoc,
                                     int pairs,
                                     std::uint64_t seed = kDefaultSeed);

// --- claims registry ---

struct Claim {
  std::string id;
  bool open = false;
  bool scan_hunter = false;  // run the mod-5 one-generator subalgebra scan
  std::function<MaximalFamily()> build;
};

struct ClaimResult {
  std::string id;
  bool open = false;
  std::string mode;
  Verdict verdict = Verdict::Inconclusive;
  bool ok = true;  // false only when an expected-maximal claim failed
  bool proof = false;
  long long tested = 0;
  int ambient_dim = 0, sub_even = 0, sub_odd = 0;
  std::string detail;
};

std::vector<Claim> claims_registry();

bool glob_match(const std::string& pattern, const std::string& s);

struct RegistryRun {
  std::vector<ClaimResult> results;
  int failed = 0;  // expected-maximal claims that failed
};

// exhaustive mode is skipped (with a note) when the complement is too large
RegistryRun run_registry(const std::string& filter,
                         const std::vector<MaximalityOptions>& modes);

}  // namespace sj

#endif
