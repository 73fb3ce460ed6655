// nchodge: exact invariants of isolated homogeneous hypersurface
// singularities — Milnor algebra data, Hodge-type filtration profiles, the
// cycle map, matrix factorization Chern characters, and diagonal character
// sets.  All arithmetic is exact; output is byte-stable across runs.

#include <cstdio>
#include <memory>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nchodge/verify.hpp"

namespace {

using namespace nchodge;

struct GlobalOptions {
  std::string format = "json";
  long max_degree = -1;
};

void print_out(const GlobalOptions& g, const OrderedJson& json,
               const std::string& table) {
  if (parse_format(g.format) == EmitFormat::json)
    std::fputs(dump_json(json).c_str(), stdout);
  else
    std::fputs(table.c_str(), stdout);
}

std::unique_ptr<Hypersurface> make_hypersurface(const std::string& f_text,
                                                int n,
                                                const GlobalOptions& g) {
  if (n < 0 || n % 2 != 0)
    throw input_error("dimension n must be even and nonnegative");
  unsigned nvars = static_cast<unsigned>(n) + 2;
  auto h = std::make_unique<Hypersurface>(parse_polynomial(f_text, nvars), n);
  if (g.max_degree >= 0) h->set_max_degree(g.max_degree);
  return h;
}

} // namespace

int main(int argc, char** argv) {
  using namespace nchodge;

  CLI::App app{
      "Exact noncommutative Hodge invariants of isolated homogeneous "
      "hypersurface singularities"};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--format", g.format, "Output format (default json)")
      ->check(CLI::IsMember({"json", "table"}));
  app.add_option("--max-degree", g.max_degree,
                 "Cap on the reduction degree; exceeding it is a resource "
                 "error (default: socle bound)");

  int exit_code = 0;

  std::string f_text;
  int n = 0;
  std::string q_text;
  long j_step = 0;
  long m_step = 0;
  bool check_cycle = false;
  std::string mf_path;
  std::vector<std::string> mf_paths;
  std::string mf1_path, mf2_path, out_path;
  long fermat_m = 0;
  bool count_only = false;
  bool prime_shortcut = false;
  std::string scope_name_arg = "all";

  CLI::App* milnor = app.add_subcommand(
      "milnor", "Graded dimension data of the Milnor algebra");
  milnor->add_option("--f", f_text, "Defining polynomial")->required();
  milnor->add_option("--n", n, "Even dimension of the projective hypersurface")
      ->required();
  milnor->callback([&] {
    auto h = make_hypersurface(f_text, n, g);
    print_out(g, milnor_json(*h), milnor_table(*h));
  });

  CLI::App* hodge = app.add_subcommand(
      "hodge", "Hodge-type filtration dimensions of the singularity category");
  hodge->add_option("--f", f_text, "Defining polynomial")->required();
  hodge->add_option("--n", n, "Even dimension of the projective hypersurface")
      ->required();
  hodge->callback([&] {
    auto h = make_hypersurface(f_text, n, g);
    FiltrationProfile p = filtration_profile(*h);
    print_out(g, hodge_json(p), hodge_table(p));
  });

  CLI::App* psi = app.add_subcommand(
      "psi", "Image of a Milnor class under the cycle map");
  psi->add_option("--f", f_text, "Defining polynomial")->required();
  psi->add_option("--n", n, "Even dimension of the projective hypersurface")
      ->required();
  psi->add_option("--q", q_text, "Numerator polynomial, degree j*e-(n+2)")
      ->required();
  psi->add_option("--j", j_step, "Pole order")->required();
  psi->add_option("--m", m_step, "Filtration step")->required();
  psi->add_flag("--check", check_cycle, "Also verify the image is a cycle");
  psi->callback([&] {
    auto h = make_hypersurface(f_text, n, g);
    Polynomial q = parse_polynomial(q_text, h->nvars());
    MixedElement x = nchodge::psi(*h, q, j_step, m_step);
    std::optional<bool> verdict;
    if (check_cycle) verdict = cycle_check(x, *h);
    print_out(g, psi_json(x, verdict), psi_table(x, verdict));
    if (verdict.has_value() && !*verdict) exit_code = 1;
  });

  CLI::App* chern = app.add_subcommand(
      "chern", "Chern character of a matrix factorization");
  chern->add_option("--f", f_text, "Defining polynomial")->required();
  chern->add_option("--n", n, "Even dimension of the projective hypersurface")
      ->required();
  chern->add_option("--mf", mf_path, "Matrix factorization JSON file")
      ->required();
  chern->callback([&] {
    auto h = make_hypersurface(f_text, n, g);
    MatrixFactorization m = mf_read_file(mf_path, h->nvars());
    ChernClass c = nchodge::chern(m, *h);
    print_out(g, chern_json(c, *h), chern_table(c, *h));
  });

  CLI::App* tensor = app.add_subcommand(
      "tensor", "Tensor product of two matrix factorizations");
  tensor->add_option("--mf1", mf1_path, "First factor (JSON file)")->required();
  tensor->add_option("--mf2", mf2_path, "Second factor (JSON file)")
      ->required();
  tensor->add_option("--out", out_path, "Output JSON file for the product")
      ->required();
  tensor->callback([&] {
    OrderedJson j1 = read_json_file(mf1_path);
    OrderedJson j2 = read_json_file(mf2_path);
    unsigned a1 = mf_json_nvars(j1);
    unsigned a2 = mf_json_nvars(j2);
    unsigned ambient = a1 + a2;
    std::vector<unsigned> left(a1), right(a2);
    for (unsigned i = 0; i < a1; ++i) left[i] = i;
    for (unsigned i = 0; i < a2; ++i) right[i] = a1 + i;
    MatrixFactorization t =
        mf_tensor(mf_rename(mf_from_json(j1, a1), left, ambient),
                  mf_rename(mf_from_json(j2, a2), right, ambient));
    std::ofstream out(out_path);
    if (!out) throw input_error("cannot write " + out_path);
    out << dump_json(mf_to_json(t));
    print_out(g, tensor_summary_json(t), tensor_summary_table(t));
  });

  CLI::App* qrank = app.add_subcommand(
      "qrank", "Rational rank spanned by Chern character classes");
  qrank->add_option("--f", f_text, "Defining polynomial")->required();
  qrank->add_option("--n", n, "Even dimension of the projective hypersurface")
      ->required();
  qrank->add_option("--mf", mf_paths, "Matrix factorization JSON files")
      ->required();
  qrank->callback([&] {
    auto h = make_hypersurface(f_text, n, g);
    std::vector<ChernClass> classes;
    for (const std::string& path : mf_paths)
      classes.push_back(nchodge::chern(mf_read_file(path, h->nvars()), *h));
    long rank = q_rank(classes);
    print_out(g, qrank_json(rank), qrank_table(rank));
  });

  CLI::App* fermat = app.add_subcommand(
      "fermat", "Diagonal character set of a Fermat hypersurface");
  fermat->add_option("--m", fermat_m, "Degree of the Fermat hypersurface")
      ->required();
  fermat->add_option("--n", n, "Even dimension of the projective hypersurface")
      ->required();
  fermat->add_flag("--count-only", count_only, "Emit only the cardinality");
  fermat->add_flag("--prime-shortcut", prime_shortcut,
                   "Scale-test only units up to (m-1)/2 (prime degree only)");
  fermat->callback([&] {
    if (fermat_m < 2) throw input_error("fermat degree must be at least 2");
    std::vector<ShiodaCharacter> b =
        b_set(static_cast<unsigned>(fermat_m), n, prime_shortcut);
    print_out(g, fermat_json(b, count_only), fermat_table(b, count_only));
  });

  CLI::App* verify = app.add_subcommand(
      "verify", "Run the built-in example suite and report each check");
  verify->add_option("--scope", scope_name_arg,
                     "all, milnor, hodge, chern, fermat, or psi");
  verify->callback([&] {
    RunReport rep = run_verify(parse_scope(scope_name_arg));
    print_out(g, verify_json(rep), verify_table(rep));
    if (!rep.pass) exit_code = 1;
  });

  for (CLI::App* sub :
       {milnor, hodge, psi, chern, tensor, qrank, fermat, verify})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const bound_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const input_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return exit_code;
}
