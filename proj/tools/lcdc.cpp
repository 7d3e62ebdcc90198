// lcdc: exact analysis and construction of LCD codes over GF(r^2).
//
// Subcommands:
//   check          LCD verdict under an inner product, with criterion matrix
//   dual           dual code under an inner product
//   project        orthogonal projection of a vector onto the code
//   mindist        exact minimum distance by codeword enumeration
//   standard-form  equivalence transformation to standard form
//   construct      length-extending LCD constructions on standard-form input
//   field-info     field parameters and canonical alpha/lambda choices
//
// Exit codes: 0 on success (a "not LCD" verdict is a successful run), 64 on
// usage errors, otherwise the stable per-error code printed with the error
// identifier on stderr.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lcdc/lcdc.hpp"

using namespace lcdc;

namespace {

CodeFile load_code(const std::string& path) {
  if (path == "-") return parse_code_file(std::cin);
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open " + path);
  return parse_code_file(in);
}

// Default inner product follows the declared category.
Inner choose_inner(const CodeFile& cf, const std::string& name) {
  if (name.empty())
    return cf.category == CodeCategory::subfield_linear ? Inner::trace_hermitian
                                                        : Inner::hermitian;
  if (name == "euclidean") return Inner::euclidean;
  if (name == "hermitian") return Inner::hermitian;
  return Inner::trace_hermitian;
}

InnerProduct resolve_trace_hermitian(const FieldSpec& f,
                                     const std::string& alpha_token) {
  if (alpha_token.empty()) return InnerProduct::trace_hermitian(f);
  return InnerProduct::trace_hermitian_alpha(parse_element(f, alpha_token));
}

void echo_alpha(Report& rep, const InnerProduct& ip) {
  if (ip.alpha) rep.set_element("alpha", *ip.alpha);
}

void set_permutation(Report& rep, const std::vector<size_t>& perm) {
  std::vector<uint64_t> p(perm.begin(), perm.end());
  rep.set_parameters("column_permutation", p);
}

bool fits(uint64_t base, size_t exp, uint64_t limit) {
  uint64_t size = 1;
  for (size_t i = 0; i < exp; ++i) {
    if (size > limit / base) return false;
    size *= base;
  }
  return size <= limit;
}

void emit(const Report& rep, const std::string& format) {
  std::cout << (format == "json" ? rep.to_json() : rep.to_text());
}

void emit_code_file(Report& rep, const CodeFile& out, const std::string& out_path) {
  std::string text = write_code_file(out);
  rep.set("output_code_file", text);
  if (out_path.empty()) return;
  std::ofstream f(out_path);
  if (!f) fail(errc::parse_error, "cannot write " + out_path);
  f << text;
  rep.set("output_path", out_path);
}

struct CommonArgs {
  std::string path;
  std::string inner;
  std::string alpha;
  std::string format = "text";
  std::string out;
  bool oracle = false;
  uint64_t limit = kDefaultEnumerationLimit;
};

void add_format(CLI::App* sub, CommonArgs& a) {
  sub->add_option("--format", a.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

void add_inner(CLI::App* sub, CommonArgs& a) {
  sub->add_option("--inner", a.inner,
                  "inner product (default: hermitian for linear files, "
                  "trace-hermitian for subfield-linear files)")
      ->check(CLI::IsMember({"euclidean", "hermitian", "trace-hermitian"}));
  sub->add_option("--alpha", a.alpha,
                  "element with conj(alpha) = -alpha for the trace-hermitian "
                  "form over odd q (default: canonical choice)");
}

int cmd_check(const CommonArgs& a) {
  CodeFile cf = load_code(a.path);
  const FieldSpec& f = *cf.field;
  Inner kind = choose_inner(cf, a.inner);

  Report rep;
  rep.set("command", "check");
  rep.set("field", format_field(f));
  rep.set("category", category_name(cf.category));
  rep.set("inner", inner_name(kind));

  bool lcd = false;
  if (kind == Inner::trace_hermitian) {
    SubfieldLinearCode c = cf.as_subfield_linear_widened();
    if (cf.category == CodeCategory::linear) rep.set("widened", true);
    rep.set("n", c.n());
    rep.set("ell", c.ell());
    InnerProduct ip = resolve_trace_hermitian(f, a.alpha);
    echo_alpha(rep, ip);
    TraceHermitianLcdResult res = is_trace_hermitian_lcd(c);
    lcd = res.lcd;
    rep.set_matrix("delta", res.delta);
    rep.set("delta_rank", rank(res.delta));
    rep.set("hull_dimension", c.ell() - rank(res.delta));
    rep.set("lcd", lcd);
    if (a.oracle) {
      Matrix hull = hull_enumeration(c, ip, a.limit);
      rep.set("oracle_hull_dimension", hull.rows());
      rep.set_matrix("oracle_hull_basis", hull);
      rep.set("oracle_agrees", (hull.rows() == 0) == lcd);
    }
  } else if (kind == Inner::hermitian) {
    LinearCode c = cf.as_linear();
    rep.set("n", c.n());
    rep.set("k", c.k());
    HermitianLcdResult res = is_hermitian_lcd(c);
    lcd = res.lcd;
    rep.set_matrix("gram", res.gram);
    rep.set_element("gram_determinant", det(res.gram));
    rep.set("hull_dimension", c.k() - rank(res.gram));
    rep.set("lcd", lcd);
    if (a.oracle) {
      Matrix hull = hull_enumeration(c, InnerProduct::hermitian(), a.limit);
      rep.set("oracle_hull_dimension", hull.rows());
      rep.set_matrix("oracle_hull_basis", hull);
      rep.set("oracle_agrees", (hull.rows() == 0) == lcd);
    }
  } else {
    // No criterion matrix for the euclidean form; the verdict comes from the
    // hull itself.
    LinearCode c = cf.as_linear();
    rep.set("n", c.n());
    rep.set("k", c.k());
    Matrix hull = hull_oracle(c, Inner::euclidean);
    lcd = hull.rows() == 0;
    rep.set("hull_dimension", hull.rows());
    if (hull.rows() > 0) rep.set_matrix("hull_basis", hull);
    rep.set("lcd", lcd);
    if (a.oracle) {
      Matrix slow = hull_enumeration(c, InnerProduct::euclidean(), a.limit);
      rep.set("oracle_hull_dimension", slow.rows());
      rep.set("oracle_agrees", slow.rows() == hull.rows());
    }
  }
  rep.set("verdict", lcd ? "LCD" : "not LCD");
  emit(rep, a.format);
  return 0;
}

int cmd_dual(const CommonArgs& a) {
  CodeFile cf = load_code(a.path);
  const FieldSpec& f = *cf.field;
  Inner kind = choose_inner(cf, a.inner);

  Report rep;
  rep.set("command", "dual");
  rep.set("field", format_field(f));
  rep.set("category", category_name(cf.category));
  rep.set("inner", inner_name(kind));

  if (kind == Inner::trace_hermitian) {
    SubfieldLinearCode c = cf.as_subfield_linear_widened();
    if (cf.category == CodeCategory::linear) rep.set("widened", true);
    InnerProduct ip = resolve_trace_hermitian(f, a.alpha);
    echo_alpha(rep, ip);
    SubfieldLinearCode d = dual_trace_hermitian(c, ip);
    rep.set("n", c.n());
    rep.set("ell", c.ell());
    rep.set("dual_ell", d.ell());
    rep.set_matrix("dual_generator", d.generator());
    emit_code_file(rep, CodeFile(f, CodeCategory::subfield_linear, d.generator()),
                   a.out);
  } else {
    LinearCode c = cf.as_linear();
    LinearCode d = dual(c, kind);
    rep.set("n", c.n());
    rep.set("k", c.k());
    rep.set("dual_k", d.k());
    rep.set_matrix("dual_generator", d.generator());
    emit_code_file(rep, CodeFile(f, CodeCategory::linear, d.generator()), a.out);
  }
  emit(rep, a.format);
  return 0;
}

int cmd_project(const CommonArgs& a, const std::vector<std::string>& tokens) {
  CodeFile cf = load_code(a.path);
  const FieldSpec& f = *cf.field;
  Inner kind = choose_inner(cf, a.inner);
  if (kind == Inner::euclidean) {
    std::cerr << "project supports --inner hermitian or trace-hermitian\n";
    return 64;
  }

  Vec v;
  v.reserve(tokens.size());
  for (const std::string& t : tokens) v.push_back(parse_element(f, t));
  if (v.size() != cf.generator.cols())
    fail(errc::length_mismatch, "vector length does not match the code length");

  Report rep;
  rep.set("command", "project");
  rep.set("field", format_field(f));
  rep.set("category", category_name(cf.category));
  rep.set("inner", inner_name(kind));
  rep.set_vector("vector", v);

  if (kind == Inner::hermitian) {
    LinearCode c = cf.as_linear();
    rep.set("n", c.n());
    rep.set("k", c.k());
    Matrix p = hermitian_projection(c);
    Vec out = (row_matrix(f, v) * p).row(0);
    rep.set_matrix("projection_matrix", p);
    rep.set_vector("projection", out);
    rep.set("input_in_code", contains(c, v));
  } else {
    SubfieldLinearCode c = cf.as_subfield_linear_widened();
    if (cf.category == CodeCategory::linear) rep.set("widened", true);
    rep.set("n", c.n());
    rep.set("ell", c.ell());
    InnerProduct ip = resolve_trace_hermitian(f, a.alpha);
    echo_alpha(rep, ip);
    TraceHermitianProjector proj(c, ip);
    rep.set_vector("projection", proj(v));
    rep.set("input_in_code", contains(c, v));
  }
  emit(rep, a.format);
  return 0;
}

int cmd_mindist(const CommonArgs& a) {
  CodeFile cf = load_code(a.path);

  Report rep;
  rep.set("command", "mindist");
  rep.set("field", format_field(*cf.field));
  rep.set("category", category_name(cf.category));

  if (cf.category == CodeCategory::linear) {
    LinearCode c = cf.as_linear();
    uint64_t size = code_size(c, a.limit);
    size_t d = min_distance(c, a.limit);
    rep.set("n", c.n());
    rep.set("k", c.k());
    rep.set("codewords", size);
    rep.set("distance", d);
    rep.set_parameters("parameters", {c.n(), c.k(), d});
  } else {
    SubfieldLinearCode c = cf.as_subfield_linear();
    uint64_t size = code_size(c, a.limit);
    size_t d = min_distance(c, a.limit);
    rep.set("n", c.n());
    rep.set("ell", c.ell());
    rep.set("codewords", size);
    rep.set("distance", d);
    rep.set_parameters("parameters", {c.n(), c.ell(), d});
  }
  emit(rep, a.format);
  return 0;
}

int cmd_standard_form(const CommonArgs& a) {
  CodeFile cf = load_code(a.path);
  const FieldSpec& f = *cf.field;

  Report rep;
  rep.set("command", "standard-form");
  rep.set("field", format_field(f));
  rep.set("category", category_name(cf.category));

  if (cf.category == CodeCategory::linear) {
    StandardFormLinear sf = standard_form_linear(cf.as_linear());
    rep.set("n", sf.code.n());
    rep.set("k", sf.code.k());
    set_permutation(rep, sf.column_permutation);
    rep.set_matrix("P", sf.P);
    rep.set_matrix("generator", sf.code.generator());
    emit_code_file(rep, CodeFile(f, CodeCategory::linear, sf.code.generator()),
                   a.out);
  } else {
    StandardFormSubfield sf = standard_form_subfield(cf.as_subfield_linear());
    rep.set("n", sf.code.n());
    rep.set("ell", sf.code.ell());
    rep.set("k", sf.k);
    rep.set("input_was_in_block_form", sf.input_was_in_block_form);
    set_permutation(rep, sf.column_permutation);
    rep.set_matrix("A", sf.A);
    rep.set_matrix("B", sf.B);
    rep.set_matrix("generator", sf.code.generator());
    emit_code_file(rep,
                   CodeFile(f, CodeCategory::subfield_linear, sf.code.generator()),
                   a.out);
  }
  emit(rep, a.format);
  return 0;
}

int cmd_construct(const CommonArgs& a, const std::string& theorem) {
  CodeFile cf = load_code(a.path);
  const FieldSpec& f = *cf.field;
  bool hermitian_family = theorem == "4.2i" || theorem == "4.2ii";
  bool odd_variant = theorem == "4.2ii" || theorem == "4.5ii";

  Report rep;
  rep.set("command", "construct");
  rep.set("theorem", theorem);
  rep.set("field", format_field(f));

  if (hermitian_family) {
    LinearCode c = cf.as_linear();
    std::optional<size_t> din;
    if (c.k() > 0 && fits(f.q(), c.k(), a.limit)) din = min_distance(c, a.limit);
    Report in;
    in.set("n", c.n());
    in.set("k", c.k());
    if (din) in.set("distance", *din);
    rep.set_subtree("input", in);

    StandardFormLinear sf = standard_form_linear(c);
    Report sfr;
    set_permutation(sfr, sf.column_permutation);
    sfr.set_matrix("P", sf.P);
    rep.set_subtree("standard_form", sfr);

    if (odd_variant) rep.set_element("lambda", sqrt_minus_one(f));
    LinearCode out = odd_variant ? construct_hermitian_odd(sf)
                                 : construct_hermitian_even(sf);

    HermitianLcdResult res = is_hermitian_lcd(out);
    rep.set("n", out.n());
    rep.set("k", out.k());
    rep.set_matrix("gram", res.gram);
    rep.set("lcd", res.lcd);
    // Guaranteed parameters: length, dimension, the input distance as the
    // lower bound on the output distance.
    std::vector<uint64_t> params{out.n(), out.k()};
    if (din) params.push_back(*din);
    rep.set_parameters("parameters", params);
    if (out.k() > 0 && fits(f.q(), out.k(), a.limit))
      rep.set("distance", min_distance(out, a.limit));
    rep.set_matrix("generator", out.generator());
    emit_code_file(rep, CodeFile(f, CodeCategory::linear, out.generator()), a.out);
  } else {
    SubfieldLinearCode c = cf.as_subfield_linear_widened();
    if (cf.category == CodeCategory::linear) rep.set("widened", true);
    std::optional<size_t> din;
    if (c.ell() > 0 && fits(f.r(), c.ell(), a.limit)) din = min_distance(c, a.limit);
    Report in;
    in.set("n", c.n());
    in.set("ell", c.ell());
    if (din) in.set("distance", *din);
    rep.set_subtree("input", in);

    StandardFormSubfield sf = standard_form_subfield(c);
    Report sfr;
    sfr.set("k", sf.k);
    sfr.set("input_was_in_block_form", sf.input_was_in_block_form);
    set_permutation(sfr, sf.column_permutation);
    sfr.set_matrix("A", sf.A);
    sfr.set_matrix("B", sf.B);
    rep.set_subtree("standard_form", sfr);

    if (odd_variant) rep.set_element("lambda", sqrt_minus_one(f));
    SubfieldLinearCode out = odd_variant ? construct_trace_hermitian_odd(sf)
                                         : construct_trace_hermitian_even(sf);

    TraceHermitianLcdResult res = is_trace_hermitian_lcd(out);
    rep.set("n", out.n());
    rep.set("ell", out.ell());
    rep.set_matrix("delta", res.delta);
    rep.set("lcd", res.lcd);
    std::vector<uint64_t> params{out.n(), out.ell()};
    if (din) params.push_back(*din);
    rep.set_parameters("parameters", params);
    if (out.ell() > 0 && fits(f.r(), out.ell(), a.limit))
      rep.set("distance", min_distance(out, a.limit));
    rep.set_matrix("generator", out.generator());
    emit_code_file(rep,
                   CodeFile(f, CodeCategory::subfield_linear, out.generator()),
                   a.out);
  }
  emit(rep, a.format);
  return 0;
}

int cmd_field_info(const std::string& field_text, const std::string& format) {
  const FieldSpec& f = parse_field(field_text);

  Report rep;
  rep.set("command", "field-info");
  rep.set("field", format_field(f));
  rep.set("p", f.p());
  rep.set("s", f.s());
  rep.set("r", f.r());
  rep.set("q", f.q());
  rep.set_parameters("modulus",
                     std::vector<uint64_t>(f.modulus().begin(), f.modulus().end()));
  rep.set_element("omega", f.omega());
  rep.set_element("omega_conjugate", f.omega().conj());
  rep.set_element("trace_of_omega", f.omega().trace());
  if (f.p() == 2)
    rep.set("alpha", "not needed for even q");
  else
    rep.set_element("alpha", find_alpha(f));
  if (f.r() % 4 == 1)
    rep.set_element("lambda", sqrt_minus_one(f));
  else
    rep.set("lambda", "no square root of -1 in F_r");
  rep.set("subfield_size", f.r());
  emit(rep, format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact LCD-code analysis and construction over GF(r^2)"};
  app.require_subcommand(1);

  CommonArgs check_a, dual_a, project_a, mindist_a, sform_a, construct_a;
  std::vector<std::string> project_tokens;
  std::string theorem, field_text, field_format = "text";

  CLI::App* check = app.add_subcommand("check", "LCD verdict for a code file");
  check->add_option("file", check_a.path, "code file, or - for stdin")->required();
  add_inner(check, check_a);
  check->add_flag("--oracle", check_a.oracle, "cross-check with the brute-force hull");
  check->add_option("--limit", check_a.limit, "enumeration guard for --oracle")
      ->capture_default_str();
  add_format(check, check_a);

  CLI::App* dual_c = app.add_subcommand("dual", "dual code under an inner product");
  dual_c->add_option("file", dual_a.path, "code file, or - for stdin")->required();
  add_inner(dual_c, dual_a);
  dual_c->add_option("--out", dual_a.out, "write the dual as a code file");
  add_format(dual_c, dual_a);

  CLI::App* project = app.add_subcommand("project", "project a vector onto the code");
  project->add_option("file", project_a.path, "code file, or - for stdin")->required();
  project->add_option("vector", project_tokens, "element tokens, one per coordinate")
      ->required()
      ->expected(-1);
  add_inner(project, project_a);
  add_format(project, project_a);

  CLI::App* mindist = app.add_subcommand("mindist", "exact minimum distance");
  mindist->add_option("file", mindist_a.path, "code file, or - for stdin")->required();
  mindist->add_option("--limit", mindist_a.limit, "enumeration guard")
      ->capture_default_str();
  add_format(mindist, mindist_a);

  CLI::App* sform = app.add_subcommand("standard-form", "standard form of a code");
  sform->add_option("file", sform_a.path, "code file, or - for stdin")->required();
  sform->add_option("--out", sform_a.out, "write the standard form as a code file");
  add_format(sform, sform_a);

  CLI::App* construct = app.add_subcommand("construct", "length-extending LCD construction");
  construct->add_option("file", construct_a.path, "code file, or - for stdin")->required();
  construct->add_option("--theorem", theorem, "construction variant")
      ->check(CLI::IsMember({"4.2i", "4.2ii", "4.5i", "4.5ii"}))
      ->required();
  construct->add_option("--out", construct_a.out, "write the output as a code file");
  construct->add_option("--limit", construct_a.limit, "enumeration guard for distances")
      ->capture_default_str();
  add_format(construct, construct_a);

  CLI::App* finfo = app.add_subcommand("field-info", "field parameters and canonical choices");
  finfo->add_option("field", field_text, "field text, e.g. \"GF(9) mod 2,2,1\"")
      ->required();
  finfo->add_option("--format", field_format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
    if (app.got_subcommand(check)) return cmd_check(check_a);
    if (app.got_subcommand(dual_c)) return cmd_dual(dual_a);
    if (app.got_subcommand(project)) return cmd_project(project_a, project_tokens);
    if (app.got_subcommand(mindist)) return cmd_mindist(mindist_a);
    if (app.got_subcommand(sform)) return cmd_standard_form(sform_a);
    if (app.got_subcommand(construct)) return cmd_construct(construct_a, theorem);
    if (app.got_subcommand(finfo)) return cmd_field_info(field_text, field_format);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 64;
  } catch (const error& e) {
    std::cerr << "error [" << e.identifier() << "]: " << e.what() << "\n";
    return e.exit_code();
  }
  return 64;
}
