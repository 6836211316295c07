// qrep: quiver representations, Gabriel classification and deformation verdicts.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "qrep/commands.hpp"
#include "qrep/errors.hpp"

namespace {

qrep::CommandInput read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw qrep::ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return {path, ss.str()};
}

int emit(const qrep::CommandResult& r) {
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with quiver representations over Q and F_p"};
  app.set_version_flag("--version", std::string(qrep::qrep_version));
  app.require_subcommand(1);

  qrep::CommandOptions opts;
  std::map<std::string, qrep::OutputFormat> formats{{"table", qrep::OutputFormat::table},
                                                    {"json", qrep::OutputFormat::json}};
  app.add_option("--format", opts.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->option_text("table|json [table]");
  app.add_option("--seed", opts.seed, "Seed for randomized constructions")->default_str("0");

  std::string quiver_path;
  auto* classify = app.add_subcommand("classify", "Finite/infinite representation type (Dynkin components)");
  classify->add_option("quiver", quiver_path, "Quiver file")->required();

  auto* roots = app.add_subcommand("roots", "Positive roots of a finite-type quiver");
  roots->add_option("quiver", quiver_path, "Quiver file")->required();

  std::string dim;
  std::string field = "Q";
  qrep::IndecMethod method = qrep::IndecMethod::reflection;
  std::map<std::string, qrep::IndecMethod> methods{{"reflection", qrep::IndecMethod::reflection},
                                                   {"generic", qrep::IndecMethod::generic}};
  auto* indec = app.add_subcommand("indec", "Representation file of the indecomposable with a given dimension vector");
  indec->add_option("quiver", quiver_path, "Quiver file")->required();
  indec->add_option("--dim", dim, "Dimension vector, comma-separated in vertex order")->required();
  indec->add_option("--field", field, "Q or F<p>")->default_str("Q");
  indec->add_option("--method", method, "reflection (BGP functors) or generic (random Schur draw)")
      ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case))
      ->option_text("reflection|generic [reflection]");

  std::string from_path, to_path;
  auto* ext = app.add_subcommand("ext", "dim Hom, dim Ext^1 and the Euler form for two representations");
  ext->add_option("quiver", quiver_path, "Quiver file")->required();
  ext->add_option("--from", from_path, "Representation file M")->required();
  ext->add_option("--to", to_path, "Representation file N")->required();

  std::optional<std::string> udr_dim;
  auto* verify = app.add_subcommand("verify-udr", "Check R(kQ,M) = k for every indecomposable M");
  verify->add_option("quiver", quiver_path, "Quiver file")->required();
  verify->add_option("--field", field, "Q or F<p>")->default_str("Q");
  verify->add_option("--dim", udr_dim, "Check only the indecomposable of this dimension vector");

  std::string rep_path;
  auto* udr = app.add_subcommand("udr", "Deformation ring verdict for one representation file");
  udr->add_option("quiver", quiver_path, "Quiver file")->required();
  udr->add_option("--rep", rep_path, "Representation file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(qrep::ExitCode::parse_error);
  }

  try {
    const auto quiver = read_file(quiver_path);
    if (*classify) return emit(qrep::cmd_classify(quiver, opts));
    if (*roots) return emit(qrep::cmd_roots(quiver, opts));
    if (*indec) return emit(qrep::cmd_indec(quiver, dim, field, method, opts));
    if (*ext) return emit(qrep::cmd_ext(quiver, read_file(from_path), read_file(to_path), opts));
    if (*verify) return emit(qrep::cmd_verify_udr(quiver, field, udr_dim, opts));
    if (*udr) return emit(qrep::cmd_udr(quiver, read_file(rep_path), opts));
  } catch (const qrep::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.exit_code());
  }
  return static_cast<int>(qrep::ExitCode::internal);
}
