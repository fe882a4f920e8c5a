#include "qhad_cli/commands.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "qhad/families.hpp"
#include "qhad_cli/document.hpp"

namespace qhad::cli {

namespace {

constexpr const char* kVersion = "qhad 0.1.0";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) {
    throw UsageError("cannot open '" + path + "'");
  }
  buf << file.rdbuf();
  return buf.str();
}

double parse_double(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw UsageError("invalid number '" + text + "' for " + what);
  }
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream ss(text);
  while (std::getline(ss, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

std::pair<std::string, std::string> split_param(const std::string& kv) {
  const auto eq = kv.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw UsageError("--param expects key=value, got '" + kv + "'");
  }
  return {kv.substr(0, eq), kv.substr(eq + 1)};
}

Sign parse_sign(const std::string& s) {
  if (s == "+") return Sign::plus;
  if (s == "-") return Sign::minus;
  throw UsageError("sign must be + or -, got '" + s + "'");
}

FamilyId parse_family(const std::string& name) {
  const auto id = family_from_name(name);
  if (!id) {
    throw UsageError("unknown family '" + name + "'");
  }
  return *id;
}

// 1-based comma-separated permutation, e.g. "2,1,3".
std::vector<std::size_t> parse_permutation(const std::string& text) {
  std::vector<std::size_t> sigma;
  for (const auto& part : split(text, ',')) {
    const double v = parse_double(part, "permutation");
    if (v < 1 || v != std::floor(v)) {
      throw UsageError("permutation entries must be positive integers (1-based)");
    }
    sigma.push_back(static_cast<std::size_t>(v) - 1);
  }
  return sigma;
}

Quaternion parse_quaternion(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 4) {
    throw UsageError("--conjugate expects w,x,y,z");
  }
  return {parse_double(parts[0], "w"), parse_double(parts[1], "x"), parse_double(parts[2], "y"),
          parse_double(parts[3], "z")};
}

Json point_metadata(const FamilyPoint& p) {
  Json params = Json::object();
  for (const auto& [k, v] : p.params) params[k] = v;
  Json meta{{"family", std::string(family_name(p.family))}, {"params", params}, {"generator", kVersion}};
  if (p.family == FamilyId::order5_sphere) meta["sign_a"] = p.sign_a == Sign::plus ? "+" : "-";
  if (p.family == FamilyId::order5_oneparam) {
    meta["sign_d"] = p.sign_d == Sign::plus ? "+" : "-";
    meta["root"] = p.root == RootChoice::principal ? "principal" : "degenerate";
  }
  return meta;
}

struct Options {
  // gen / scan
  std::string family;
  std::vector<std::string> params;
  std::string sign_a = "+";
  std::string sign_d = "+";
  std::string root = "principal";
  // file commands
  std::string file;
  double tol = kDefaultTol;
  // move
  bool dephase = false;
  std::string permute_rows;
  std::string permute_cols;
  std::string conjugate;
  // adjoint / lift
  bool complex = false;
  bool real = false;
  // butson
  int rmax = 24;
  // solve
  int order = 0;
  std::size_t restarts = 0;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  double classify_tol = 1e-6;
};

FamilyPoint family_point(const Options& o, FamilyId id) {
  FamilyPoint p;
  p.family = id;
  for (const auto& kv : o.params) {
    auto [k, v] = split_param(kv);
    p.params[k] = parse_double(v, k);
  }
  p.sign_a = parse_sign(o.sign_a);
  p.sign_d = parse_sign(o.sign_d);
  if (o.root == "principal") {
    p.root = RootChoice::principal;
  } else if (o.root == "degenerate") {
    p.root = RootChoice::degenerate;
  } else {
    throw UsageError("--root must be principal or degenerate");
  }
  return p;
}

int cmd_gen(const Options& o, std::ostream& out) {
  const FamilyPoint p = family_point(o, parse_family(o.family));
  const QMatrix h = generate(p);
  out << emit_matrix(h, point_metadata(p));
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::istream& in) {
  const QMatrix h = parse_matrix(read_input(o.file, in));
  const auto report = hadamard_check(h, o.tol);
  out << emit_report(report);
  return report.pass ? kOk : kFailed;
}

int cmd_move(const Options& o, std::ostream& out, std::istream& in) {
  const int chosen = int{o.dephase} + int{!o.permute_rows.empty()} + int{!o.permute_cols.empty()} +
                     int{!o.conjugate.empty()};
  if (chosen != 1) {
    throw UsageError("move needs exactly one of --dephase, --permute-rows, --permute-cols, --conjugate");
  }
  const QMatrix h = parse_matrix(read_input(o.file, in));
  QMatrix result = h;
  if (o.dephase) {
    result = dephase(h).matrix;
  } else if (!o.permute_rows.empty()) {
    result = apply_move(h, RowPermutation{parse_permutation(o.permute_rows)});
  } else if (!o.permute_cols.empty()) {
    result = apply_move(h, ColumnPermutation{parse_permutation(o.permute_cols)});
  } else {
    result = apply_move(h, GlobalConjugation{parse_quaternion(o.conjugate)});
  }
  out << emit_matrix(result);
  return kOk;
}

void require_one_kind(const Options& o, const char* cmd) {
  if (o.complex == o.real) {
    throw UsageError(std::string(cmd) + " needs exactly one of --complex, --real");
  }
}

int cmd_adjoint(const Options& o, std::ostream& out, std::istream& in) {
  require_one_kind(o, "adjoint");
  const QMatrix h = parse_matrix(read_input(o.file, in));
  out << dump(o.complex ? complex_to_json(complex_adjoint(h)) : real_to_json(real_adjoint(h)));
  return kOk;
}

int cmd_lift(const Options& o, std::ostream& out, std::istream& in) {
  require_one_kind(o, "lift");
  const Json doc = parse_document(read_input(o.file, in));
  const QMatrix h = o.complex ? lift_from_complex(complex_from_json(doc), o.tol)
                              : lift_from_real(real_from_json(doc), o.tol);
  out << emit_matrix(h);
  return kOk;
}

int cmd_butson(const Options& o, std::ostream& out, std::istream& in) {
  const QMatrix h = parse_matrix(read_input(o.file, in));
  out << dump(profile_to_json(butson_profile(h, o.rmax, o.tol)));
  return kOk;
}

int cmd_bh45(std::ostream& out) {
  const auto report = bh45_emptiness();
  out << dump(Json{{"r", report.enumeration.r},
                   {"order", report.enumeration.order},
                   {"candidates", report.enumeration.candidates},
                   {"valid", report.enumeration.valid},
                   {"empty", report.empty},
                   {"explanation", report.explanation}});
  return kOk;
}

int cmd_solve(const Options& o, std::ostream& out) {
  SolveOptions so;
  so.threads = o.threads;
  so.classify_tol = o.classify_tol;
  const auto result = solve_circulant(o.order, o.restarts, o.seed, so);
  Json counts = Json::object();
  for (const auto& [label, n] : result.diagnostics.label_counts) counts[std::string(label_name(label))] = n;
  Json solutions = Json::array();
  std::size_t unclassified = 0;
  for (const auto& s : result.solutions) {
    solutions.push_back(solution_to_json(s));
    if (s.label() == Label::unclassified) ++unclassified;
  }
  out << dump(Json{{"order", o.order},
                   {"restarts", o.restarts},
                   {"seed", o.seed},
                   {"diagnostics",
                    {{"converged", result.diagnostics.converged},
                     {"dropped", result.diagnostics.dropped},
                     {"distinct", result.diagnostics.distinct},
                     {"label_counts", counts},
                     {"unclassified", unclassified}}},
                   {"solutions", solutions}});
  return unclassified == 0 ? kOk : kFailed;
}

int cmd_classify(const Options& o, std::ostream& out, std::istream& in) {
  const QMatrix h = parse_matrix(read_input(o.file, in));
  const int order = static_cast<int>(h.order());
  Json doc{{"order", order}};
  auto fail = [&](const std::string& why) {
    doc["label"] = std::string(label_name(Label::unclassified));
    doc["detail"] = why;
    out << dump(doc);
    return kFailed;
  };
  if (order < 3 || order > 5) return fail("classify handles orders 3, 4 and 5");
  const QMatrix d = is_dephased(h, o.tol) ? h : dephase(h).matrix;
  if (!is_circulant_core(d, o.classify_tol)) return fail("core is not circulant");
  const auto core = core_row(d);
  const double residual = circulant_residual_norm(order, core);
  doc["residual"] = residual;
  if (residual > 1e-6) return fail("circulant residual exceeds 1e-6");
  const Classification c = classify_circulant(order, core, o.classify_tol);
  doc.update(classification_to_json(c));
  out << dump(doc);
  return c.label == Label::unclassified ? kFailed : kOk;
}

// Range syntax lo:hi:steps for exactly one parameter; others are fixed.
int cmd_scan(const Options& o, std::ostream& out) {
  const FamilyId id = parse_family(o.family);
  std::string key;
  std::vector<double> grid;
  Options fixed = o;
  fixed.params.clear();
  for (const auto& kv : o.params) {
    auto [k, v] = split_param(kv);
    const auto parts = split(v, ':');
    if (parts.size() == 3) {
      if (!key.empty()) throw UsageError("scan supports one ranged parameter");
      const double steps = parse_double(parts[2], "steps");
      if (steps < 1 || steps != std::floor(steps)) throw UsageError("steps must be a positive integer");
      key = k;
      grid = parameter_grid(parse_double(parts[0], "lo"), parse_double(parts[1], "hi"),
                            static_cast<std::size_t>(steps));
    } else {
      fixed.params.push_back(kv);
    }
  }
  if (key.empty()) throw UsageError("scan needs --param key=lo:hi:steps");
  const FamilyPoint base = family_point(fixed, id);

  std::vector<Json> rows(grid.size());
  std::vector<int> ok(grid.size(), 0);
  auto work = [&](std::size_t i) {
    FamilyPoint p = base;
    p.params[key] = grid[i];
    Json row{{key, grid[i]}};
    try {
      const auto report = hadamard_check(generate(p), o.tol);
      row["pass"] = report.pass;
      row["max_deviation"] = report.max_dev();
      ok[i] = report.pass ? 1 : 0;
    } catch (const std::exception& e) {
      row["pass"] = false;
      row["error"] = e.what();
    }
    rows[i] = std::move(row);
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(o.threads, static_cast<unsigned>(grid.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < grid.size(); i += workers) work(i);
    });
  }
  for (auto& t : pool) t.join();

  const bool all = std::all_of(ok.begin(), ok.end(), [](int v) { return v == 1; });
  out << dump(Json{{"family", o.family},
                   {"parameter", key},
                   {"tolerance", o.tol},
                   {"all_pass", all},
                   {"points", rows}});
  return all ? kOk : kFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Quaternionic Hadamard matrices: generate, verify, transform and classify", "qhad"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  Options o;

  auto* gen = app.add_subcommand("gen", "Generate a family member");
  gen->add_option("family", o.family, "fourier, order3, order4-generic, order5-sphere, order5-oneparam, order5-noncirc")
      ->required();
  gen->add_option("--param", o.params, "Parameter key=value (repeatable)");
  gen->add_option("--sign-a", o.sign_a, "Sign s_a for order5-sphere (+ or -)");
  gen->add_option("--sign-d", o.sign_d, "Sign s_d for order5-oneparam (+ or -)");
  gen->add_option("--root", o.root, "principal or degenerate (order5-oneparam)");

  auto* verify = app.add_subcommand("verify", "Check the Hadamard conditions");
  verify->add_option("--tol", o.tol, "Tolerance");
  verify->add_option("file", o.file, "Matrix document or - for stdin")->required();

  auto* move = app.add_subcommand("move", "Apply one equivalence move");
  move->add_flag("--dephase", o.dephase, "Dephase rows then columns");
  move->add_option("--permute-rows", o.permute_rows, "1-based permutation, e.g. 2,1,3");
  move->add_option("--permute-cols", o.permute_cols, "1-based permutation");
  move->add_option("--conjugate", o.conjugate, "Global conjugation by w,x,y,z");
  move->add_option("file", o.file)->required();

  auto* adjoint = app.add_subcommand("adjoint", "Complex or real adjoint matrix");
  adjoint->add_flag("--complex", o.complex);
  adjoint->add_flag("--real", o.real);
  adjoint->add_option("file", o.file)->required();

  auto* lift = app.add_subcommand("lift", "Lift a compliant complex or real Hadamard matrix");
  lift->add_flag("--complex", o.complex);
  lift->add_flag("--real", o.real);
  lift->add_option("--tol", o.tol);
  lift->add_option("file", o.file)->required();

  auto* butson = app.add_subcommand("butson", "Butson-type profile");
  butson->add_option("--rmax", o.rmax, "Largest root order tried")->check(CLI::PositiveNumber);
  butson->add_option("--tol", o.tol);
  butson->add_option("file", o.file)->required();

  app.add_subcommand("bh45", "Exhaustive BH(4,5) row enumeration");

  auto* solve = app.add_subcommand("solve", "Numerically solve circulant-core systems");
  solve->add_option("--order", o.order)->required()->check(CLI::IsMember({3, 4, 5}));
  solve->add_option("--restarts", o.restarts)->required()->check(CLI::PositiveNumber);
  solve->add_option("--seed", o.seed)->required();
  solve->add_option("--threads", o.threads)->check(CLI::PositiveNumber);
  solve->add_option("--classify-tol", o.classify_tol);

  auto* classify = app.add_subcommand("classify", "Classify a circulant-core matrix");
  classify->add_option("--tol", o.tol, "Dephasing check tolerance");
  classify->add_option("--classify-tol", o.classify_tol);
  classify->add_option("file", o.file)->required();

  auto* scan = app.add_subcommand("scan", "Verify a family over a parameter grid");
  scan->add_option("family", o.family)->required();
  scan->add_option("--param", o.params, "key=lo:hi:steps for the scanned parameter, key=value otherwise")
      ->required();
  scan->add_option("--sign-a", o.sign_a);
  scan->add_option("--sign-d", o.sign_d);
  scan->add_option("--root", o.root);
  scan->add_option("--tol", o.tol);
  scan->add_option("--threads", o.threads)->check(CLI::PositiveNumber);

  std::vector<const char*> argv{"qhad"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(o, out);
    if (verify->parsed()) return cmd_verify(o, out, in);
    if (move->parsed()) return cmd_move(o, out, in);
    if (adjoint->parsed()) return cmd_adjoint(o, out, in);
    if (lift->parsed()) return cmd_lift(o, out, in);
    if (butson->parsed()) return cmd_butson(o, out, in);
    if (solve->parsed()) return cmd_solve(o, out);
    if (classify->parsed()) return cmd_classify(o, out, in);
    if (scan->parsed()) return cmd_scan(o, out);
    return cmd_bh45(out);
  } catch (const ParseError& e) {
    err << "qhad: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "qhad: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "qhad: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "qhad: " << e.what() << "\n";
    return kFailed;
  }
}

}  // namespace qhad::cli
