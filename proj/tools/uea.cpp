// uea: command-line front end for presentations, PBW arithmetic and center verification.

#include <charconv>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "uea/catalog.hpp"
#include "uea/center.hpp"
#include "uea/io.hpp"
#include "uea/pbw.hpp"
#include "uea/sym.hpp"

using namespace uea;

namespace {

struct Options {
  std::string catalog;
  std::string file;
  std::string variant = "current";
  std::optional<std::uint32_t> characteristic;
  std::string xdeg;
  std::optional<int> filt;
  int len = 3;
  std::string rrange;
  std::optional<int> smax;
  std::string smax_policy = "default";
  std::string out = "table";
  std::string output;
  bool adapt = false;
  bool serial = false;
  std::string lhs, rhs;
  std::string key;
};

int parse_int(const std::string& s, const std::string& flag) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw Error(Errc::ParseError, flag + ": '" + s + "' is not an integer");
  return v;
}

std::pair<int, int> parse_range(const std::string& s, const std::string& flag) {
  static const std::regex re{R"(^\s*(-?\d+)\s*(?:\.\.\s*(-?\d+)\s*)?$)"};
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw Error(Errc::ParseError, flag + ": expected A..B, got '" + s + "'");
  int a = parse_int(m[1], flag);
  int b = m[2].matched ? parse_int(m[2], flag) : a;
  if (b < a) throw Error(Errc::ParseError, flag + ": empty range '" + s + "'");
  return {a, b};
}

AlgebraPresentation load(const Options& o) {
  if (o.catalog.empty() == o.file.empty()) throw Error(Errc::MalformedInput, "give exactly one of --catalog or --file");
  if (!o.catalog.empty()) {
    auto pres = catalog_get(o.catalog, o.characteristic.value_or(0));
    return o.adapt ? adapt_basis(pres).presentation : pres;
  }
  return load_presentation(o.file, {o.characteristic, o.adapt});
}

WindowFamily family(const Options& o, const AlgebraPresentation& pres) {
  WindowFamily f;
  f.variant = parse_variant(o.variant);
  if (!o.rrange.empty()) {
    if (f.variant != Variant::Loop) throw Error(Errc::MalformedInput, "--rrange applies to the loop variant only");
    f.r_range = parse_range(o.rrange, "--rrange");
  }
  auto [lo, hi] = o.xdeg.empty() ? std::pair{0, 2} : parse_range(o.xdeg, "--xdeg");
  f.xdeg_lo = lo;
  f.xdeg_hi = hi;
  const auto p = pres.characteristic();
  f.filt_max = o.filt.value_or(p > 0 ? static_cast<int>(p) : 3);
  f.len_max = o.len;
  if (f.filt_max < 0 || f.len_max < 0) throw Error(Errc::MalformedInput, "window bounds must be non-negative");
  if (f.variant == Variant::Loop && !f.r_range)
    throw Error(Errc::InfiniteWindow, "loop windows need --rrange");
  return f;
}

Exec exec_of(const Options& o) { return o.serial ? Exec::Serial : Exec::Parallel; }

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.output);
  if (!f) throw Error(Errc::MalformedInput, "cannot write " + o.output);
  f << text;
}

bool json_out(const Options& o) {
  if (o.out != "json" && o.out != "table") throw Error(Errc::ParseError, "--out must be json or table");
  return o.out == "json";
}

int cmd_validate(const Options& o) {
  AlgebraPresentation pres = [&] {
    if (!o.file.empty() && o.catalog.empty()) {
      std::ifstream in(o.file);
      if (!in) throw Error(Errc::ParseError, "cannot read " + o.file);
      std::stringstream buf;
      buf << in.rdbuf();
      return parse_presentation(buf.str(), o.characteristic);
    }
    return load(o);
  }();
  ValidationReport report = validate_presentation(pres);
  if (pres.characteristic() > 0 && pres.has_pmap())
    for (auto& v : validate_p_map(pres).violations) report.violations.push_back(std::move(v));
  emit(o, json_out(o) ? report_json(report, pres) : report_table(report, pres));
  return report.passed() ? 0 : 1;
}

int cmd_center(const Options& o) {
  const auto pres = load(o);
  const auto basis = center_basis(pres);
  std::ostringstream s;
  s << "C(" << pres.name() << ") over " << pres.field().to_string() << ": dim " << basis.size() << "\n";
  for (const auto& v : basis) {
    std::string t;
    for (const auto& [k, c] : v) t += (t.empty() ? "" : " + ") + c.to_string() + " * " + pres.basis_name(k);
    s << "  " << t << "\n";
  }
  emit(o, s.str());
  return 0;
}

int cmd_mul(const Options& o) {
  const auto pres = load(o);
  Envelope env{CurrentAlgebra{pres, parse_variant(o.variant)}};
  const auto product = env.multiply(env.parse(o.lhs), env.parse(o.rhs));
  emit(o, env.format(product) + "\n");
  return 0;
}

int cmd_invariants(const Options& o) {
  const auto pres = load(o);
  const auto fam = family(o, pres);
  SymAlgebra sym{CurrentAlgebra{pres, fam.variant}};
  const auto policy = o.smax ? SmaxPolicy::Fixed : parse_smax_policy(o.smax_policy);
  std::string text;
  bool ok = true;
  for (const auto& w : fam.windows()) {
    const auto r = compare_invariants(w, choose_smax(w, policy, o.smax.value_or(0)), sym, exec_of(o));
    ok = ok && r.pass;
    text += json_out(o) ? report_json(r, pres) : report_table(r);
  }
  emit(o, text);
  return ok ? 0 : 1;
}

int cmd_verify(const Options& o) {
  const auto pres = load(o);
  const auto fam = family(o, pres);
  const auto policy = o.smax ? SmaxPolicy::Fixed : parse_smax_policy(o.smax_policy);
  const auto reports = verify_theorem(pres, fam, policy, o.smax.value_or(0), exec_of(o));
  emit(o, json_out(o) ? reports_json(reports, pres) : reports_table(reports, pres));
  return exit_status(reports);
}

int cmd_predict(const Options& o) {
  const auto pres = load(o);
  const auto fam = family(o, pres);
  Envelope env{CurrentAlgebra{pres, fam.variant}};
  GradedWindow w = fam.windows().back();
  std::ostringstream s;
  bool ok = true;
  for (const auto& g : predicted_center_generators(env, w)) {
    s << describe(g, env.algebra()) << "\n    = " << env.format(g.element) << "\n";
    try {
      s << "    certified: " << certify_central(g, env).statement << "\n";
    } catch (const Error& e) {
      if (e.code() != Errc::NotCertifiable) throw;
      s << "    NOT certified: " << e.what() << "\n";
      ok = false;
    }
  }
  emit(o, s.str());
  return ok ? 0 : 1;
}

int cmd_catalog(const Options& o) {
  if (o.key.empty()) {
    std::ostringstream s;
    for (const auto& k : catalog_keys()) s << k << "  " << catalog_entry(k, k == "sl2" || k == "gl11" || k == "osp12" ? 3 : 0).notes << "\n";
    emit(o, s.str());
    return 0;
  }
  emit(o, serialize_presentation(catalog_get(o.key, o.characteristic.value_or(0))));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Centers of enveloping algebras of current and loop (super)algebras"};
  app.require_subcommand(1);
  Options o;

  auto source = [&](CLI::App* c) {
    c->add_option("--catalog", o.catalog, "Built-in presentation key");
    c->add_option("--file", o.file, "Presentation file (JSON)");
    c->add_option("--char", o.characteristic, "Characteristic (0 or a prime)");
    c->add_flag("--adapt-basis", o.adapt, "Move to a basis adapted to the center of L");
    c->add_option("--out", o.out, "json or table");
    c->add_option("-o,--output", o.output, "Write the report to a file");
  };
  auto windows = [&](CLI::App* c) {
    c->add_option("--variant", o.variant, "current or loop");
    c->add_option("--xdeg", o.xdeg, "x-degree range A..B");
    c->add_option("--filt", o.filt, "Filtration bound (current)");
    c->add_option("--len", o.len, "Monomial length bound (loop)");
    c->add_option("--rrange", o.rrange, "Range of r for loop windows, A..B");
    auto* s = c->add_option("--smax", o.smax, "Test degree bound");
    c->add_option("--smax-policy", o.smax_policy, "default or paranoid")->excludes(s);
    c->add_flag("--serial", o.serial, "Use the serial kernels");
  };

  std::function<int()> run;
  auto* validate = app.add_subcommand("validate", "Check the Lie (super)algebra axioms and the p-map");
  source(validate);
  validate->callback([&] { run = [&] { return cmd_validate(o); }; });

  auto* center = app.add_subcommand("center", "Basis of the center C(L)");
  source(center);
  center->callback([&] { run = [&] { return cmd_center(o); }; });

  auto* mul = app.add_subcommand("mul", "Multiply two elements of U in PBW normal form");
  source(mul);
  mul->add_option("--variant", o.variant, "current or loop");
  mul->add_option("lhs", o.lhs)->required();
  mul->add_option("rhs", o.rhs)->required();
  mul->callback([&] { run = [&] { return cmd_mul(o); }; });

  auto* inv = app.add_subcommand("invariants", "Compare S(g)^g with the predicted generators");
  source(inv);
  windows(inv);
  inv->callback([&] { run = [&] { return cmd_invariants(o); }; });

  auto* verify = app.add_subcommand("verify", "Verify the center description window by window");
  source(verify);
  windows(verify);
  verify->callback([&] { run = [&] { return cmd_verify(o); }; });

  auto* predict = app.add_subcommand("predict", "List and certify the predicted center generators");
  source(predict);
  windows(predict);
  predict->callback([&] { run = [&] { return cmd_predict(o); }; });

  auto* catalog = app.add_subcommand("catalog", "List catalog entries or print one as JSON");
  catalog->add_option("key", o.key);
  catalog->add_option("--char", o.characteristic, "Characteristic (0 or a prime)");
  catalog->add_option("-o,--output", o.output, "Write to a file");
  catalog->callback([&] { run = [&] { return cmd_catalog(o); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    return run();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
