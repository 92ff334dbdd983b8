// Command-line front end for the field-descent toolkit.
//
// Exit codes: 0 ok, 1 usage/parse error, 2 Brent violation,
// 3 no equivalent rational scheme, 4 inconclusive, 5 no obstruction found.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mmdescend/obstruct.hpp"
#include "mmdescend/rationalize.hpp"
#include "mmdescend/scheme_io.hpp"

namespace {

using namespace mmdescend;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBrent = 2;
constexpr int kExitNoSolution = 3;
constexpr int kExitInconclusive = 4;
constexpr int kExitNoObstruction = 5;

std::size_t memo_cap_from_env() {
  if (const char* v = std::getenv("MMDESCEND_MEMO_CAP")) {
    char* end = nullptr;
    unsigned long long cap = std::strtoull(v, &end, 10);
    if (end && *end == '\0' && cap > 0) return static_cast<std::size_t>(cap);
    std::cerr << "warning: ignoring malformed MMDESCEND_MEMO_CAP\n";
  }
  return kDefaultMemoCap;
}

int cmd_verify(const std::string& path) {
  LoadedScheme ls = load_scheme(path, /*skip_verify=*/true);
  BrentReport rep = brent_verify(ls.scheme);
  if (rep.ok) {
    std::cout << "ok: <" << ls.scheme.m() << "," << ls.scheme.n() << ","
              << ls.scheme.p() << "," << ls.scheme.rank()
              << "> satisfies the Brent equations\n";
    return kExitOk;
  }
  std::cout << rep.to_string() << "\n";
  return kExitBrent;
}

int cmd_info(const std::string& path, bool skip_verify) {
  LoadedScheme ls = load_scheme(path, skip_verify);
  const Scheme& s = ls.scheme;
  std::cout << "dims: <" << s.m() << "," << s.n() << "," << s.p() << ","
            << s.rank() << ">\n";
  std::cout << "field: Q[sqrt(" << s.field().d << ")]"
            << (s.field().d == -1 ? " (= Q[i])" : "") << "\n";
  std::cout << "ring: " << detect_ring(s).to_string() << "\n";
  std::cout << "traces:";
  for (const auto& M : products(s, Variant::OPQ))
    std::cout << " " << entry_to_string(M.trace());
  std::cout << "\n";
  return kExitOk;
}

ExactMat matrix_arg(const std::string& arg, FieldDesc f, int size,
                    const char* name) {
  std::string text = arg;
  if (!arg.empty() && arg[0] != '[') {  // treat as a file of one literal
    std::ifstream in(arg);
    if (!in) throw parse_error(std::string(name) + ": cannot open '" + arg + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  ExactMat M = parse_matrix_literal(text, f);
  if (M.rows() != size || M.cols() != size)
    throw parse_error(std::string(name) + " must be " + std::to_string(size) +
                      "x" + std::to_string(size));
  return M;
}

int cmd_transform(const std::string& path, const std::string& xs,
                  const std::string& ys, const std::string& zs,
                  const std::string& out_path, bool skip_verify) {
  LoadedScheme ls = load_scheme(path, skip_verify);
  const Scheme& s = ls.scheme;
  FieldDesc f = s.field();
  ExactMat X = xs.empty() ? ExactMat::identity(s.m(), f)
                          : matrix_arg(xs, f, s.m(), "--x");
  ExactMat Y = ys.empty() ? ExactMat::identity(s.n(), f)
                          : matrix_arg(ys, f, s.n(), "--y");
  ExactMat Z = zs.empty() ? ExactMat::identity(s.p(), f)
                          : matrix_arg(zs, f, s.p(), "--z");
  for (auto [M, name] : {std::pair{&X, "X"}, {&Y, "Y"}, {&Z, "Z"}}) {
    try {
      matinv(*M);
    } catch (const singular_matrix_error&) {
      std::cerr << "error: " << name << " is singular\n";
      return kExitUsage;
    }
  }
  Scheme t = apply_transform(s, TransformTriple(X, Y, Z));
  BrentReport rep = brent_verify(t);
  if (!rep.ok) {
    std::cerr << "internal error: transformed scheme fails Brent: "
              << rep.to_string() << "\n";
    return kExitUsage;
  }
  std::string doc = serialize_scheme(t, ls.form);
  if (out_path.empty()) {
    std::cout << doc;
  } else {
    std::ofstream out(out_path);
    out << doc;
  }
  return kExitOk;
}

int cmd_rationalize(const std::string& path, const std::string& out_path,
                    int height, int comb, bool skip_verify) {
  LoadedScheme ls = load_scheme(path, skip_verify);
  DescendOptions opt;
  opt.height = height;
  opt.comb = comb;
  DescentOutcome o = descend(ls.scheme, opt);
  std::cout << outcome_to_json(o);
  switch (o.status) {
    case DescentOutcome::Status::Success:
      if (!out_path.empty()) save_scheme(*o.result_scheme, out_path, ls.form);
      return kExitOk;
    case DescentOutcome::Status::NoSolution:
      return kExitNoSolution;
    case DescentOutcome::Status::Inconclusive:
      return kExitInconclusive;
  }
  return kExitUsage;
}

int cmd_obstruct(const std::string& path, int depth,
                 const std::string& variant_str, bool skip_verify) {
  LoadedScheme ls = load_scheme(path, skip_verify);
  auto v = variant_from_name(variant_str);
  if (!v) {
    std::cerr << "error: unknown variant '" << variant_str << "'\n";
    return kExitUsage;
  }
  ObstructionReport rep;
  try {
    rep = integer_obstruction(ls.scheme, *v, depth, memo_cap_from_env());
  } catch (const unsupported_field_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  nlohmann::ordered_json j;
  j["found"] = rep.found;
  if (rep.found) {
    j["witness"] = rep.witness;
    j["trace"] = rat_to_string(rep.trace_value);
  }
  j["depth_searched"] = rep.depth_searched;
  j["products_examined"] = rep.products_examined;
  std::cout << j.dump(2) << "\n";
  if (rep.found) {
    std::cout << "obstruction found: no integer-equivalent scheme exists\n";
    return kExitOk;
  }
  std::cout << "no obstruction up to depth " << depth << "\n";
  return kExitNoObstruction;
}

int cmd_convert(const std::string& path, const std::string& out_path,
                bool skip_verify) {
  LoadedScheme ls = load_scheme(path, skip_verify);
  SchemeFileForm target = ls.form == SchemeFileForm::Triples
                              ? SchemeFileForm::Encoding
                              : SchemeFileForm::Triples;
  std::string doc = serialize_scheme(ls.scheme, target);
  if (out_path.empty()) {
    std::cout << doc;
  } else {
    std::ofstream out(out_path);
    out << doc;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mmdescend: exact field-descent toolkit for fast "
               "matrix-multiplication schemes"};
  app.require_subcommand(1);

  std::string path, out_path, xs, ys, zs, variant_str = "OPQ";
  int depth = 3, height = 50, comb = 2;
  long seed = 0;  // reserved; randomized behavior lives in the test suites
  bool skip_verify = false;

  auto add_common = [&](CLI::App* c, bool with_out) {
    c->add_option("file", path, "scheme file")->required();
    c->add_flag("--skip-verify", skip_verify,
                "do not verify the Brent equations on load");
    c->add_option("--seed", seed, "seed (reserved)");
    if (with_out) c->add_option("--out", out_path, "output file");
    return c;
  };

  auto* verify = add_common(app.add_subcommand("verify",
      "check the Brent equations"), false);
  auto* info = add_common(app.add_subcommand("info",
      "print dims, field, detected ring and per-triple traces"), false);
  auto* transform = add_common(app.add_subcommand("transform",
      "apply an invertible X/Y/Z sandwich transform"), true);
  transform->add_option("--x", xs, "X matrix literal or file");
  transform->add_option("--y", ys, "Y matrix literal or file");
  transform->add_option("--z", zs, "Z matrix literal or file");
  auto* rationalize = add_common(app.add_subcommand("rationalize",
      "find an equivalent rational scheme or a certificate"), true);
  rationalize->add_option("--height", height,
                          "height bound for the norm-equation search");
  rationalize->add_option("--comb", comb,
                          "coefficient bound for basis combinations");
  auto* obstruct = add_common(app.add_subcommand("obstruct",
      "search for integer-equivalence trace obstructions"), false);
  obstruct->add_option("--depth", depth, "maximum product depth");
  obstruct->add_option("--variant", variant_str, "OPQ, PQO or QOP");
  auto* convert = add_common(app.add_subcommand("convert",
      "convert between triple form and encoding-matrix form"), true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(path);
    if (info->parsed()) return cmd_info(path, skip_verify);
    if (transform->parsed())
      return cmd_transform(path, xs, ys, zs, out_path, skip_verify);
    if (rationalize->parsed())
      return cmd_rationalize(path, out_path, height, comb, skip_verify);
    if (obstruct->parsed())
      return cmd_obstruct(path, depth, variant_str, skip_verify);
    if (convert->parsed()) return cmd_convert(path, out_path, skip_verify);
  } catch (const brent_violation_error& e) {
    std::cerr << e.what() << "\n";
    return kExitBrent;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
