#ifndef SJ_GENERATION_HPP
#define SJ_GENERATION_HPP

#include "sj/superalgebra.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace sj {

struct not_a_subalgebra : algebra_error {
  using algebra_error::algebra_error;
};
struct too_large : algebra_error {
  using algebra_error::algebra_error;
};

// seed spells "JORDAN"
constexpr std::uint64_t kDefaultSeed = 0x4A4F5244414EULL;

template <class K>
struct ClosureResult {
  RowSpan<K> span;
  std::optional<GradedSubspace<K>> graded;  // set when the closure is graded
  int rounds = 0;
  long long products_computed = 0;

  int dim() const { return span.dim(); }
  bool is_graded() const { return graded.has_value(); }
};

// Least product-closed subspace containing span(S): echelonize, then each
// round multiply the newly found rows against the whole current basis (both
// orders) and adjoin.
template <class K>
ClosureResult<K> subalgebra_closure(const Superalgebra<K>& J,
                                    const std::vector<Vec<K>>& gens) {
  ClosureResult<K> res;
  res.span = RowSpan<K>(J.dim());
  std::vector<Vec<K>> frontier;
  for (const auto& g : gens)
    if (res.span.add(g)) frontier.push_back(g);
  while (!frontier.empty()) {
    ++res.rounds;
    std::vector<Vec<K>> snapshot = res.span.rows();
    std::vector<Vec<K>> next;
    for (const auto& f : frontier)
      for (const auto& b : snapshot) {
        Vec<K> p1 = J.multiply(f, b);
        ++res.products_computed;
        if (res.span.add(p1)) next.push_back(std::move(p1));
        Vec<K> p2 = J.multiply(b, f);
        ++res.products_computed;
        if (res.span.add(p2)) next.push_back(std::move(p2));
      }
    frontier = std::move(next);
  }
  res.graded = graded_split(res.span, J.parities);
  return res;
}

template <class K>
ClosureResult<K> jordan_closure(const Superalgebra<K>& J,
                                const std::vector<Vec<K>>& gens) {
  return subalgebra_closure(J, gens);
}
template <class K>
ClosureResult<K> assoc_closure(const Superalgebra<K>& A,
                               const std::vector<Vec<K>>& gens) {
  return subalgebra_closure(A, gens);
}

template <class K>
ClosureResult<K> subalgebra_closure(const Superalgebra<K>& J,
                                    const GradedSubspace<K>& S) {
  return subalgebra_closure(J, S.basis());
}
template <class K>
ClosureResult<K> jordan_closure(const Superalgebra<K>& J,
                                const GradedSubspace<K>& S) {
  return subalgebra_closure(J, S.basis());
}
template <class K>
ClosureResult<K> assoc_closure(const Superalgebra<K>& A,
                               const GradedSubspace<K>& S) {
  return subalgebra_closure(A, S.basis());
}

template <class K>
std::pair<bool, ClosureResult<K>> generates(const Superalgebra<K>& J,
                                            const GradedSubspace<K>& B,
                                            const Vec<K>& x) {
  std::vector<Vec<K>> gens = B.basis();
  gens.push_back(x);
  auto res = subalgebra_closure(J, gens);
  return {res.dim() == J.dim(), std::move(res)};
}

enum class Verdict { AllGenerate, CounterexampleFound, Inconclusive };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::AllGenerate: return "AllGenerate";
    case Verdict::CounterexampleFound: return "CounterexampleFound";
    default: return "Inconclusive";
  }
}

struct MaximalityReport {
  std::string algebra;
  int b_even = 0, b_odd = 0;
  std::string mode;
  Verdict verdict = Verdict::Inconclusive;
  bool proof = false;  // codim-1 argument, or exhaustive over F_p
  long long tested = 0;
  // printed witness vector, whether it generated, and the closure dimension
  struct Witness {
    std::string vec;
    bool generated = false;
    int closure_dim = 0;
  };
  std::vector<Witness> witnesses;
  std::string detail;
};

enum class MaximalityMode { ComplementBasis, Randomized, ExhaustiveModP };

struct MaximalityOptions {
  MaximalityMode mode = MaximalityMode::ComplementBasis;
  int trials = 200;                   // randomized mode
  std::uint64_t seed = kDefaultSeed;  // randomized mode
  long long p = 5;                    // exhaustive mode
};

template <class K>
void require_proper_subalgebra(const Superalgebra<K>& J,
                               const GradedSubspace<K>& B) {
  if (B.dim() >= J.dim())
    throw not_a_subalgebra("subalgebra is not proper in " + J.name);
  auto cl = subalgebra_closure(J, B.basis());
  if (cl.dim() != B.dim())
    throw not_a_subalgebra("input span is not product-closed in " + J.name);
}

namespace detail {

template <class K>
void record(MaximalityReport& rep, const Superalgebra<K>& J,
            const GradedSubspace<K>& B, const Vec<K>& x, bool keep_positive) {
  auto [ok, cl] = generates(J, B, x);
  ++rep.tested;
  if (!ok) {
    rep.verdict = Verdict::CounterexampleFound;
    rep.witnesses.push_back({vec_str(x), false, cl.dim()});
  } else if (keep_positive) {
    rep.witnesses.push_back({vec_str(x), true, cl.dim()});
  }
}

// projective enumeration of F_p^d, first nonzero coordinate = 1
inline bool next_projective(std::vector<long long>& c, long long p) {
  // c encodes lead position implicitly: c[lead]=1, zeros before
  int d = static_cast<int>(c.size());
  int lead = 0;
  while (lead < d && c[lead] == 0) ++lead;
  for (int i = d - 1; i > lead; --i) {
    if (++c[i] < p) return true;
    c[i] = 0;
  }
  // advance lead
  if (lead + 1 >= d) return false;
  for (int i = 0; i < d; ++i) c[i] = 0;
  c[lead + 1] = 1;
  return true;
}

}  // namespace detail

// Exhaustive maximality proof over F_p: every homogeneous vector of the
// complement (projectively, using the b+w reduction) must generate J with B.
inline MaximalityReport exhaustive_all_generate(const Superalgebra<Fp>& J,
                                                const GradedSubspace<Fp>& B,
                                                long long p,
                                                bool stop_at_first = true) {
  MaximalityReport rep;
  rep.algebra = J.name;
  rep.b_even = B.even_dim();
  rep.b_odd = B.odd_dim();
  rep.mode = "exhaustive-mod-" + std::to_string(p);
  rep.verdict = Verdict::AllGenerate;
  auto comp = graded_complement(B, Fp(1, p));
  for (int parity = 0; parity < 2; ++parity) {
    std::vector<Vec<Fp>> basis;
    for (const auto& w : comp.basis())
      if (vector_parity(w, J.parities) == parity) basis.push_back(w);
    const int d = static_cast<int>(basis.size());
    if (d == 0) continue;
    std::vector<long long> coords(d, 0);
    coords[0] = 1;
    do {
      Vec<Fp> x = zero_vec<Fp>(J.dim());
      for (int i = 0; i < d; ++i)
        if (coords[i]) vec_axpy(x, Fp(coords[i], p), basis[i]);
      detail::record(rep, J, B, x, false);
      if (rep.verdict == Verdict::CounterexampleFound && stop_at_first)
        return rep;
    } while (detail::next_projective(coords, p));
  }
  if (rep.verdict == Verdict::AllGenerate) rep.proof = true;
  return rep;
}

inline MaximalityReport maximality_check(const Superalgebra<Rational>& J,
                                         const GradedSubspace<Rational>& B,
                                         const MaximalityOptions& opt = {}) {
  require_proper_subalgebra(J, B);
  if (opt.mode == MaximalityMode::ExhaustiveModP) {
    require_odd_prime_gt3(opt.p);
    auto Jp = reduce_mod_p(J, opt.p);
    auto Bp = reduce_mod_p(B, opt.p);
    if (Bp.dim() != B.dim())
      throw bad_prime("subalgebra degenerates mod " + std::to_string(opt.p));
    require_proper_subalgebra(Jp, Bp);
    return exhaustive_all_generate(Jp, Bp, opt.p);
  }

  MaximalityReport rep;
  rep.algebra = J.name;
  rep.b_even = B.even_dim();
  rep.b_odd = B.odd_dim();
  rep.verdict = Verdict::AllGenerate;
  auto comp = graded_complement(B, J.one);
  if (opt.mode == MaximalityMode::ComplementBasis) {
    rep.mode = "complement-basis";
    for (const auto& w : comp.basis()) {
      detail::record(rep, J, B, w, true);
      if (rep.verdict == Verdict::CounterexampleFound) return rep;
    }
    if (J.dim() - B.dim() == 1) {
      rep.proof = true;
      rep.detail = "codimension 1: a proper subalgebra above B equals B";
    } else {
      rep.detail = "necessary evidence only, not a maximality proof";
    }
    return rep;
  }

  rep.mode = "randomized(trials=" + std::to_string(opt.trials) +
             ",seed=" + std::to_string(opt.seed) + ")";
  for (const auto& w : comp.basis()) {
    detail::record(rep, J, B, w, false);
    if (rep.verdict == Verdict::CounterexampleFound) return rep;
  }
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int parity = 0; parity < 2; ++parity) {
    std::vector<Vec<Rational>> basis;
    for (const auto& w : comp.basis())
      if (vector_parity(w, J.parities) == parity) basis.push_back(w);
    if (basis.empty()) continue;
    int done = 0;
    while (done < opt.trials) {
      Vec<Rational> x = zero_vec<Rational>(J.dim());
      bool nz = false;
      for (const auto& b : basis) {
        int c = coeff(rng);
        if (c) {
          vec_axpy(x, Rational(c), b);
          nz = true;
        }
      }
      if (!nz) continue;
      ++done;
      detail::record(rep, J, B, x, false);
      if (rep.verdict == Verdict::CounterexampleFound) return rep;
    }
  }
  rep.detail = "randomized evidence, not a maximality proof";
  return rep;
}

// All product-closed graded subspaces strictly between B and J, found by
// closing B with every homogeneous complement vector (projective, mod p).
inline std::vector<GradedSubspace<Fp>> exhaustive_subalgebra_scan_mod_p(
    const Superalgebra<Fp>& J, const GradedSubspace<Fp>& B, long long p) {
  if (J.dim() - B.dim() > 6 || p > 7)
    throw too_large("scan guard: codim <= 6 and p <= 7 required");
  require_proper_subalgebra(J, B);
  std::vector<GradedSubspace<Fp>> found;
  auto comp = graded_complement(B, Fp(1, p));
  for (int parity = 0; parity < 2; ++parity) {
    std::vector<Vec<Fp>> basis;
    for (const auto& w : comp.basis())
      if (vector_parity(w, J.parities) == parity) basis.push_back(w);
    const int d = static_cast<int>(basis.size());
    if (d == 0) continue;
    std::vector<long long> coords(d, 0);
    coords[0] = 1;
    do {
      Vec<Fp> x = zero_vec<Fp>(J.dim());
      for (int i = 0; i < d; ++i)
        if (coords[i]) vec_axpy(x, Fp(coords[i], p), basis[i]);
      std::vector<Vec<Fp>> gens = B.basis();
      gens.push_back(x);
      auto cl = subalgebra_closure(J, gens);
      if (cl.dim() == J.dim() || !cl.is_graded()) continue;
      bool dup = false;
      for (const auto& g : found)
        if (g.dim() == cl.graded->dim() && g == *cl.graded) {
          dup = true;
          break;
        }
      if (!dup) found.push_back(*cl.graded);
    } while (detail::next_projective(coords, p));
  }
  return found;
}

}  // namespace sj

#endif
