// sj: exact-arithmetic Jordan superalgebra toolkit, command-line front end.
//
// Exit codes: 0 = pass / evidence gathered, 1 = a mathematical check failed,
// 2 = usage, parse, or parameter error.

#include "CLI11.hpp"

#include "sj/catalog.hpp"
#include "sj/families.hpp"
#include "sj/generation.hpp"
#include "sj/io.hpp"
#include "sj/osp.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>

namespace {

constexpr int kPass = 0, kMathFail = 1, kUsage = 2;

// an --algebra argument is either a JSON file on disk or a catalog spec
sj::Superalgebra<sj::Rational> load_algebra(const std::string& arg) {
  if (std::filesystem::exists(arg)) return sj::read_algebra_file(arg);
  return sj::build_catalog(arg);
}

sj::Vec<sj::Rational> parse_vector(const std::string& s, int dim) {
  sj::Vec<sj::Rational> v = sj::zero_vec<sj::Rational>(dim);
  std::size_t pos = 0;
  int i = 0;
  while (pos <= s.size()) {
    auto comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos
                                        ? std::string::npos
                                        : comma - pos);
    if (i >= dim) throw sj::io_error("vector longer than dim");
    v[i++] = sj::parse_rational(tok);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (i != dim)
    throw sj::io_error("vector has " + std::to_string(i) +
                       " entries, expected " + std::to_string(dim));
  return v;
}

sj::MaximalityOptions parse_mode(const std::string& s) {
  sj::MaximalityOptions opt;
  if (s == "basis") {
    opt.mode = sj::MaximalityMode::ComplementBasis;
  } else if (s.rfind("random", 0) == 0) {
    opt.mode = sj::MaximalityMode::Randomized;
    if (s.size() > 6) {
      unsigned long long trials = 0, seed = sj::kDefaultSeed;
      if (std::sscanf(s.c_str(), "random:%llu:%llu", &trials, &seed) < 1)
        throw sj::io_error("bad mode: " + s);
      opt.trials = static_cast<int>(trials);
      opt.seed = seed;
    }
  } else if (s.rfind("modp:", 0) == 0) {
    opt.mode = sj::MaximalityMode::ExhaustiveModP;
    opt.p = std::stoll(s.substr(5));
    if (opt.p <= 3) throw sj::bad_prime("BadPrime: need a prime > 3");
  } else {
    throw sj::io_error("bad mode: " + s);
  }
  return opt;
}

void print_matrix(const sj::Matrix<sj::Rational>& m) {
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j)
      std::cout << (j ? " " : "  ") << sj::to_string(m(i, j));
    std::cout << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sj: exact Jordan superalgebra toolkit"};
  app.require_subcommand(1);

  // --- catalog ---
  auto* catalog = app.add_subcommand("catalog", "list or build catalog algebras");
  catalog->require_subcommand(1);
  catalog->add_subcommand("list", "print the catalog grammar");
  auto* build = catalog->add_subcommand("build", "build an algebra");
  std::string build_spec, build_out;
  build->add_option("spec", build_spec, "catalog spec, e.g. Dt:-2")->required();
  build->add_option("--out", build_out, "write JSON algebra file");

  // --- check ---
  auto* check = app.add_subcommand("check", "verify identities");
  std::string check_kind, check_input, check_star;
  check->add_option("kind", check_kind, "jordan | associative | superinvolution")
      ->required()
      ->check(CLI::IsMember({"jordan", "associative", "superinvolution"}));
  check->add_option("input", check_input, "algebra file or catalog spec")
      ->required();
  check->add_option("--star", check_star,
                    "superinvolution: transpose | osp (matrix algebras)");

  // --- closure ---
  auto* closure = app.add_subcommand("closure", "subalgebra generated by a span");
  std::string cl_algebra;
  std::vector<std::string> cl_span;
  bool cl_assoc = false, cl_dump = false;
  closure->add_option("--algebra", cl_algebra, "algebra file or spec")->required();
  closure->add_option("--span", cl_span, "comma-separated coordinate vectors")
      ->required();
  closure->add_flag("--assoc", cl_assoc, "use the associative product table as-is");
  closure->add_flag("--dump", cl_dump, "print a basis of the closure");

  // --- maximal ---
  auto* maximal = app.add_subcommand("maximal", "maximality check for a subalgebra");
  std::string mx_algebra, mx_mode = "basis";
  std::vector<std::string> mx_sub;
  maximal->add_option("--algebra", mx_algebra)->required();
  maximal->add_option("--sub", mx_sub, "comma-separated coordinate vectors")
      ->required();
  maximal->add_option("--mode", mx_mode, "basis | random:<trials>:<seed> | modp:<p>");

  // --- registry ---
  auto* registry = app.add_subcommand("registry", "run the claims registry");
  registry->require_subcommand(1);
  auto* reg_run = registry->add_subcommand("run", "run claims");
  std::string reg_filter, reg_json;
  std::vector<std::string> reg_modes;
  reg_run->add_option("--filter", reg_filter, "glob on claim ids, e.g. 'thm2.1.*'");
  reg_run->add_option("--mode", reg_modes, "modes to run (default: basis)");
  reg_run->add_option("--json", reg_json, "write results as JSON");

  // --- osp ---
  auto* osp = app.add_subcommand("osp", "osp(1,2) representation tools");
  osp->require_subcommand(1);
  auto* vm = osp->add_subcommand("vm", "the (2m+1)-dimensional module V(m)");
  int vm_m = 1;
  bool vm_form = false;
  std::string vm_embed;
  vm->add_option("--m", vm_m, "highest weight")->required();
  vm->add_flag("--form", vm_form, "print the invariant form");
  vm->add_option("--embed", vm_embed, "verify the D_t embedding for t");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  try {
    if (catalog->parsed()) {
      if (catalog->got_subcommand("list")) {
        for (const auto& n : sj::catalog_names()) std::cout << n << "\n";
        return kPass;
      }
      auto J = sj::build_catalog(build_spec);
      if (!build_out.empty()) {
        sj::write_algebra_file(J, build_out);
        std::cout << "wrote " << build_out << " (dim " << J.dim() << ")\n";
      } else {
        std::cout << sj::algebra_to_json(J) << "\n";
      }
      return kPass;
    }

    if (check->parsed()) {
      auto J = load_algebra(check_input);
      sj::VerificationReport rep;
      if (check_kind == "jordan") {
        rep = sj::check_jordan_super(J);
      } else if (check_kind == "associative") {
        rep = sj::check_associative(J);
      } else {
        if (check_star.empty())
          throw sj::io_error("--star required for superinvolution check");
        sj::Superinvolution<sj::Rational> star =
            check_star == "transpose"
                ? sj::transpose_superinvolution(J.realization
                                                    ? J.realization->block_p
                                                    : J.dim())
                : sj::orthosymplectic_superinvolution(
                      J.realization ? J.realization->block_p : 0,
                      J.realization ? J.realization->block_q / 2 : 0);
        rep = sj::check_superinvolution(J, star);
      }
      std::cout << rep.check << ": " << (rep.pass ? "pass" : "FAIL") << "\n";
      if (!rep.pass) std::cout << rep.detail << "\n";
      return rep.pass ? kPass : kMathFail;
    }

    if (closure->parsed()) {
      auto J = load_algebra(cl_algebra);
      std::vector<sj::Vec<sj::Rational>> gens;
      for (const auto& s : cl_span) gens.push_back(parse_vector(s, J.dim()));
      auto res = cl_assoc ? sj::assoc_closure(J, gens)
                          : sj::subalgebra_closure(J, gens);
      std::cout << "closure dim " << res.dim();
      if (res.is_graded())
        std::cout << " (" << res.graded->even_dim() << "|"
                  << res.graded->odd_dim() << ")";
      std::cout << " in " << J.name << " (dim " << J.dim() << "), rounds "
                << res.rounds << ", products " << res.products_computed << "\n";
      if (cl_dump)
        for (const auto& row : res.span.rows())
          std::cout << "  " << sj::detail::vec_str(row) << "\n";
      return kPass;
    }

    if (maximal->parsed()) {
      auto J = load_algebra(mx_algebra);
      std::vector<sj::Vec<sj::Rational>> gens;
      for (const auto& s : mx_sub) gens.push_back(parse_vector(s, J.dim()));
      auto graded = sj::span_of_homogeneous(gens, J.parities);
      auto opt = parse_mode(mx_mode);
      auto start = std::chrono::steady_clock::now();
      auto rep = sj::maximality_check(J, graded, opt);
      double secs = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - start)
                        .count();
      std::cout << sj::report_to_json(rep, opt, secs) << "\n";
      return rep.verdict == sj::Verdict::CounterexampleFound ? kMathFail : kPass;
    }

    if (registry->parsed()) {
      std::vector<sj::MaximalityOptions> modes;
      for (const auto& m : reg_modes) modes.push_back(parse_mode(m));
      if (modes.empty()) modes.push_back({});  // complement-basis default
      auto run = sj::run_registry(reg_filter, modes);
      std::printf("%-36s %-20s %-19s %-6s %s\n", "claim", "mode", "verdict",
                  "dims", "detail");
      for (const auto& r : run.results) {
        std::string dims = std::to_string(r.sub_even) + "|" +
                           std::to_string(r.sub_odd) + "/" +
                           std::to_string(r.ambient_dim);
        std::string verdict = r.mode.rfind("scan", 0) == 0 || r.open
                                  ? "EVIDENCE:" + sj::to_string(r.verdict)
                                  : sj::to_string(r.verdict);
        if (!r.ok) verdict = "FAILED:" + sj::to_string(r.verdict);
        std::printf("%-36s %-20s %-19s %-6s %s\n", r.id.c_str(),
                    r.mode.c_str(), verdict.c_str(), dims.c_str(),
                    r.detail.c_str());
      }
      std::cout << run.results.size() << " results, " << run.failed
                << " failed\n";
      if (!reg_json.empty()) {
        std::ofstream out(reg_json);
        out << "[";
        for (std::size_t i = 0; i < run.results.size(); ++i) {
          const auto& r = run.results[i];
          out << (i ? ",\n" : "\n") << "  {\"id\":\"" << r.id
              << "\",\"mode\":\"" << r.mode << "\",\"verdict\":\""
              << sj::to_string(r.verdict) << "\",\"open\":"
              << (r.open ? "true" : "false")
              << ",\"ok\":" << (r.ok ? "true" : "false") << "}";
        }
        out << "\n]\n";
      }
      return run.failed == 0 ? kPass : kMathFail;
    }

    if (osp->parsed()) {
      sj::VmModule mod = sj::vm_module(vm_m);
      const char* names[5] = {"h", "e", "f", "x", "y"};
      for (int z = 0; z < 5; ++z) {
        std::cout << "rho_" << names[z] << ":\n";
        print_matrix(mod.rho(z));
      }
      if (vm_form) {
        std::cout << "invariant form:\n";
        print_matrix(sj::vm_form(mod).gram);
        std::cout << "solution space dim "
                  << sj::form_solution_space_dim(mod) << "\n";
      }
      if (!vm_embed.empty()) {
        sj::Rational t = sj::parse_rational(vm_embed);
        int which = -1;
        for (int w = 0; w < 2; ++w)
          if (sj::embed_dt(vm_m, w).t == t) which = w;
        if (which < 0)
          throw sj::bad_parameter("t must be -m/(m+1) or -(m+1)/m for m=" +
                                  std::to_string(vm_m));
        auto claims = sj::verify_embedding_claims(vm_m, which);
        std::cout << "embedding: "
                  << (claims.report.pass ? "verified" : "FAILED") << ", "
                  << claims.report.detail
                  << (claims.report.detail.empty() ? "" : "; ")
                  << "closure dim " << claims.closure_dim << "\n";
        return claims.report.pass ? kPass : kMathFail;
      }
      return kPass;
    }
  } catch (const sj::catalog_error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kUsage;
  } catch (const sj::io_error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kUsage;
  } catch (const sj::parse_error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kUsage;
  } catch (const sj::bad_prime& ex) {
    std::cerr << "error: BadPrime: " << ex.what() << "\n";
    return kUsage;
  } catch (const sj::bad_parameter& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kUsage;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kMathFail;
  }
  return kUsage;
}
