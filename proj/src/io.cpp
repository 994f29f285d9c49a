#include "uea/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace uea {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw Error(Errc::ParseError, "field '" + where + "': " + what);
}

void only_keys(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) bad(where, "expected an object");
  for (const auto& [key, v] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) bad(where.empty() ? key : where + "." + key, "unknown field");
  }
}

const json& need(const json& obj, const std::string& where, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) bad(where.empty() ? key : where + "." + key, "missing");
  return *it;
}

Index index_field(const json& v, const std::string& where, std::size_t n) {
  if (!v.is_number_integer()) bad(where, "expected an integer index");
  const auto k = v.get<std::int64_t>();
  if (k < 1 || static_cast<std::size_t>(k) > n) bad(where, "index " + std::to_string(k) + " outside 1.." + std::to_string(n));
  return static_cast<Index>(k - 1);
}

LVector terms_field(const json& v, const std::string& where, std::size_t n, Field f) {
  if (!v.is_array()) bad(where, "expected a list of {k, c}");
  LVector out;
  std::set<Index> seen;
  for (std::size_t t = 0; t < v.size(); ++t) {
    const std::string w = where + "[" + std::to_string(t) + "]";
    only_keys(v[t], w, {"k", "c"});
    const Index k = index_field(need(v[t], w, "k"), w + ".k", n);
    const json& c = need(v[t], w, "c");
    if (!c.is_string()) bad(w + ".c", "coefficients are written as strings");
    if (!seen.insert(k).second) bad(w + ".k", "repeated basis index");
    try {
      out.add(k, Scalar::parse(f, c.get<std::string>()));
    } catch (const Error& e) {
      bad(w + ".c", e.what());
    }
  }
  return out;
}

json terms_json(const LVector& v) {
  json a = json::array();
  for (const auto& [k, c] : v) a.push_back({{"k", k + 1}, {"c", c.to_string()}});
  return a;
}

std::string line_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return std::to_string(line);
}

}  // namespace

AlgebraPresentation parse_presentation(std::string_view text, std::optional<std::uint32_t> characteristic) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, "line " + line_of(text, e.byte) + ": malformed JSON");
  }
  only_keys(doc, "", {"name", "char", "basis", "parity", "brackets", "pmap", "center_ids"});

  PresentationData d;
  const json& name = need(doc, "", "name");
  if (!name.is_string()) bad("name", "expected a string");
  d.name = name.get<std::string>();

  const json& ch = need(doc, "", "char");
  if (!ch.is_number_integer() || ch.get<std::int64_t>() < 0) bad("char", "expected 0 or a prime");
  std::uint64_t p = characteristic ? *characteristic : ch.get<std::uint64_t>();
  try {
    if (p > 0xffffffffull) throw Error(Errc::MalformedInput, "characteristic too large");
    d.field = Field::of_characteristic(static_cast<std::uint32_t>(p));
  } catch (const Error& e) {
    bad("char", e.what());
  }

  const json& basis = need(doc, "", "basis");
  if (!basis.is_array()) bad("basis", "expected a list of names");
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!basis[i].is_string()) bad("basis[" + std::to_string(i) + "]", "expected a string");
    d.basis.push_back(basis[i].get<std::string>());
  }
  const std::size_t n = d.basis.size();

  const json& parity = need(doc, "", "parity");
  if (!parity.is_array()) bad("parity", "expected a list of \"even\"/\"odd\"");
  for (std::size_t i = 0; i < parity.size(); ++i) {
    const std::string w = "parity[" + std::to_string(i) + "]";
    if (parity[i] == "even") {
      d.parity.push_back(Parity::Even);
    } else if (parity[i] == "odd") {
      d.parity.push_back(Parity::Odd);
    } else {
      bad(w, "expected \"even\" or \"odd\"");
    }
  }

  const json& brackets = need(doc, "", "brackets");
  if (!brackets.is_array()) bad("brackets", "expected a list");
  for (std::size_t b = 0; b < brackets.size(); ++b) {
    const std::string w = "brackets[" + std::to_string(b) + "]";
    only_keys(brackets[b], w, {"i", "j", "terms"});
    const Index i = index_field(need(brackets[b], w, "i"), w + ".i", n);
    const Index j = index_field(need(brackets[b], w, "j"), w + ".j", n);
    d.brackets.push_back({i, j, terms_field(need(brackets[b], w, "terms"), w + ".terms", n, d.field)});
  }

  if (auto it = doc.find("pmap"); it != doc.end()) {
    if (!it->is_array()) bad("pmap", "expected a list");
    std::vector<PMapRecord> pm;
    for (std::size_t r = 0; r < it->size(); ++r) {
      const std::string w = "pmap[" + std::to_string(r) + "]";
      only_keys((*it)[r], w, {"i", "terms"});
      const Index i = index_field(need((*it)[r], w, "i"), w + ".i", n);
      pm.push_back({i, terms_field(need((*it)[r], w, "terms"), w + ".terms", n, d.field)});
    }
    d.pmap = std::move(pm);
  }
  if (auto it = doc.find("center_ids"); it != doc.end()) {
    if (!it->is_array()) bad("center_ids", "expected a list of indices");
    std::vector<Index> ids;
    for (std::size_t r = 0; r < it->size(); ++r)
      ids.push_back(index_field((*it)[r], "center_ids[" + std::to_string(r) + "]", n));
    d.center_ids = std::move(ids);
  }
  return AlgebraPresentation{std::move(d)};
}

std::string serialize_presentation(const AlgebraPresentation& pres) {
  const auto canon = pres.canonical();
  json doc;
  doc["name"] = canon.name();
  doc["char"] = canon.characteristic();
  json basis = json::array(), parity = json::array();
  for (Index i = 0; i < canon.dim(); ++i) {
    basis.push_back(canon.basis_name(i));
    parity.push_back(is_odd(canon.parity(i)) ? "odd" : "even");
  }
  doc["basis"] = basis;
  doc["parity"] = parity;
  json br = json::array();
  for (const auto& b : canon.data().brackets) br.push_back({{"i", b.i + 1}, {"j", b.j + 1}, {"terms", terms_json(b.terms)}});
  doc["brackets"] = br;
  if (canon.data().pmap) {
    json pm = json::array();
    for (const auto& r : *canon.data().pmap) pm.push_back({{"i", r.i + 1}, {"terms", terms_json(r.value)}});
    doc["pmap"] = pm;
  }
  if (canon.center_ids()) {
    json ids = json::array();
    for (Index j : *canon.center_ids()) ids.push_back(j + 1);
    doc["center_ids"] = ids;
  }
  return doc.dump(2) + "\n";
}

AlgebraPresentation load_presentation(const std::filesystem::path& path, const LoadOptions& opts) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  AlgebraPresentation pres = parse_presentation(buf.str(), opts.characteristic);
  const auto report = validate_presentation(pres);
  if (!report.passed()) {
    std::string msg = path.string() + " failed validation:";
    for (const auto& v : report.violations) msg += "\n  " + v.message;
    throw Error(Errc::ValidationFailed, msg);
  }
  if (opts.adapt) return adapt_basis(pres).presentation;
  return pres;
}

namespace {

json window_json(const GradedWindow& w) {
  json j;
  j["variant"] = std::string(variant_name(w.variant));
  j["xdeg"] = w.xdeg;
  if (w.variant == Variant::Current) {
    j["filt_max"] = w.filt_max;
  } else {
    j["len_max"] = w.len_max;
    if (w.r_range) j["r_range"] = {w.r_range->first, w.r_range->second};
  }
  return j;
}

std::string pad(std::string s, std::size_t n) {
  if (s.size() < n) s.append(n - s.size(), ' ');
  return s;
}

}  // namespace

std::string report_json(const ValidationReport& r, const AlgebraPresentation& pres) {
  json doc;
  doc["presentation"] = pres.name();
  doc["field"] = pres.field().to_string();
  doc["passed"] = r.passed();
  json vs = json::array();
  for (const auto& v : r.violations) {
    json w = json::array();
    for (Index i : v.witness) w.push_back(i + 1);
    vs.push_back({{"axiom", std::string(axiom_name(v.axiom))}, {"witness", w}, {"message", v.message}});
  }
  doc["violations"] = vs;
  return doc.dump(2) + "\n";
}

std::string report_table(const ValidationReport& r, const AlgebraPresentation& pres) {
  std::ostringstream s;
  s << pres.name() << " over " << pres.field().to_string() << ": " << (r.passed() ? "PASS" : "FAIL") << "\n";
  for (const auto& v : r.violations) s << "  " << v.message << "\n";
  return s.str();
}

std::string report_json(const InvariantReport& r, const AlgebraPresentation& pres) {
  json doc;
  doc["presentation"] = pres.name();
  doc["field"] = pres.field().to_string();
  doc["window"] = window_json(r.window);
  doc["smax"] = r.smax;
  doc["pattern_count"] = r.pattern_count;
  doc["predicted_dim"] = r.predicted_dim;
  doc["computed_dim"] = r.computed_dim;
  doc["containment"] = r.containment;
  doc["verdict"] = r.pass ? "PASS" : "FAIL";
  doc["predicted_basis"] = r.predicted_basis;
  doc["computed_basis"] = r.computed_basis;
  return doc.dump(2) + "\n";
}

std::string report_table(const InvariantReport& r) {
  std::ostringstream s;
  s << pad(r.window.describe(), 36) << " smax=" << r.smax << "  predicted " << r.predicted_dim << "  computed "
    << r.computed_dim << "  " << (r.pass ? "PASS" : "FAIL") << "\n";
  for (const auto& b : r.computed_basis) s << "    " << b << "\n";
  return s.str();
}

std::string reports_json(const std::vector<VerificationReport>& rs, const AlgebraPresentation& pres) {
  json doc;
  doc["presentation"] = pres.name();
  doc["field"] = pres.field().to_string();
  doc["monomial_order"] = "generators ascending by (basis index, r)";
  doc["field_note"] = "computed over the prime field; no step uses algebraic closure";
  json arr = json::array();
  for (const auto& r : rs) {
    json j;
    j["window"] = window_json(r.window);
    j["smax"] = r.smax;
    j["pattern_count"] = r.pattern_count;
    j["predicted_dim"] = r.predicted_dim;
    j["computed_dim"] = r.computed_dim;
    j["verdict"] = std::string(verdict_name(r.verdict));
    j["containment"] = r.containment;
    j["gr_check"] = r.gr_check;
    j["free_generation"] = r.free_generation;
    json certs = json::array();
    for (const auto& c : r.certificates)
      certs.push_back({{"generator", c.generator}, {"kind", c.kind}, {"valid", c.valid}, {"statement", c.statement}});
    j["certificates"] = certs;
    j["notes"] = r.notes;
    j["predicted_generators"] = r.predicted_generators;
    j["predicted_basis"] = r.predicted_basis;
    j["computed_basis"] = r.computed_basis;
    j["gr_leading"] = r.gr_leading;
    j["config_hash"] = r.config_hash;
    arr.push_back(j);
  }
  doc["reports"] = arr;
  return doc.dump(2) + "\n";
}

std::string reports_table(const std::vector<VerificationReport>& rs, const AlgebraPresentation& pres) {
  std::ostringstream s;
  s << pres.name() << " over " << pres.field().to_string() << "\n";
  s << pad("window", 36) << pad("smax", 6) << pad("predicted", 11) << pad("computed", 10) << pad("certs", 7) << "gr   verdict\n";
  for (const auto& r : rs) {
    std::size_t ok = 0;
    for (const auto& c : r.certificates) ok += c.valid;
    s << pad(r.window.describe(), 36) << pad(std::to_string(r.smax), 6) << pad(std::to_string(r.predicted_dim), 11)
      << pad(std::to_string(r.computed_dim), 10) << pad(std::to_string(ok) + "/" + std::to_string(r.certificates.size()), 7)
      << pad(r.window.variant == Variant::Loop ? "-" : r.gr_check ? "ok" : "no", 5) << verdict_name(r.verdict) << "\n";
    for (const auto& n : r.notes) s << "    note: " << n << "\n";
  }
  return s.str();
}

}  // namespace uea
