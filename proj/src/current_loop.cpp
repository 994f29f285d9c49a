#include "uea/current_loop.hpp"

#include <cctype>
#include <charconv>

namespace uea {

std::string_view variant_name(Variant v) noexcept { return v == Variant::Current ? "current" : "loop"; }

Variant parse_variant(std::string_view s) {
  if (s == "current") return Variant::Current;
  if (s == "loop") return Variant::Loop;
  throw Error(Errc::ParseError, "unknown variant '" + std::string(s) + "'");
}

void GradedWindow::require_finite() const {
  if (variant == Variant::Loop && !r_range) throw Error(Errc::InfiniteWindow, "loop window needs an r_range");
  if (r_range && r_range->first > r_range->second) throw Error(Errc::MalformedInput, "empty r_range");
}

std::string GradedWindow::describe() const {
  if (variant == Variant::Current) return "current xdeg=" + std::to_string(xdeg) + " filt<=" + std::to_string(filt_max);
  std::string s = "loop xdeg=" + std::to_string(xdeg) + " len<=" + std::to_string(len_max);
  if (r_range) s += " r in [" + std::to_string(r_range->first) + "," + std::to_string(r_range->second) + "]";
  return s;
}

bool GradedWindow::contains_degree(int r) const {
  if (variant == Variant::Current) return r >= 0;
  return r_range && r >= r_range->first && r <= r_range->second;
}

CurrentAlgebra::CurrentAlgebra(std::shared_ptr<const AlgebraPresentation> pres, Variant variant)
    : pres_{std::move(pres)}, variant_{variant} {
  if (!pres_) throw Error(Errc::MalformedInput, "null presentation");
}

void CurrentAlgebra::check(const GeneratorId& a) const {
  if (a.i >= pres_->dim()) throw Error(Errc::MalformedInput, "basis index " + std::to_string(a.i + 1) + " out of range");
  if (variant_ == Variant::Current && a.r < 0)
    throw Error(Errc::VariantMismatch, "negative x-degree " + std::to_string(a.r) + " in the current algebra");
}

GVector CurrentAlgebra::gen_bracket(const GeneratorId& a, const GeneratorId& b) const {
  check(a);
  check(b);
  return lift(pres_->bracket(a.i, b.i), a.r + b.r);
}

GVector CurrentAlgebra::bracket(const GVector& x, const GVector& y) const {
  GVector out;
  for (const auto& [a, c] : x)
    for (const auto& [b, d] : y) out.add_scaled(gen_bracket(a, b), c * d);
  return out;
}

GVector CurrentAlgebra::lift(const LVector& v, int r) const {
  GVector out;
  for (const auto& [k, c] : v) out.add(GeneratorId{k, r}, c);
  return out;
}

GVector CurrentAlgebra::p_power_gen(const GeneratorId& a) const {
  check(a);
  if (field().is_rational()) throw Error(Errc::MalformedInput, "p-th power map needs prime characteristic");
  if (is_odd(parity(a))) throw Error(Errc::OddGenerator, format(a) + " is odd");
  const LVector* value = pres_->pmap(a.i);
  if (!value) throw Error(Errc::MissingPMap, "no p-map value for " + pres_->basis_name(a.i));
  return lift(*value, a.r * static_cast<int>(pres_->characteristic()));
}

std::string CurrentAlgebra::format(const GeneratorId& a) const {
  return pres_->basis_name(a.i) + "[" + std::to_string(a.r) + "]";
}

std::string CurrentAlgebra::format(const GVector& v) const {
  if (v.is_zero()) return "0";
  std::string s;
  for (const auto& [a, c] : v) {
    if (!s.empty()) s += " + ";
    s += c.to_string() + " * " + format(a);
  }
  return s;
}

GeneratorId CurrentAlgebra::parse_generator(std::string_view text) const {
  auto open = text.find('[');
  if (open == std::string_view::npos || text.empty() || text.back() != ']')
    throw Error(Errc::ParseError, "generator '" + std::string(text) + "' is not of the form name[r]");
  auto name = text.substr(0, open);
  auto num = text.substr(open + 1, text.size() - open - 2);
  auto idx = pres_->index_of(name);
  if (!idx) throw Error(Errc::ParseError, "unknown basis name '" + std::string(name) + "'");
  int r = 0;
  auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), r);
  if (ec != std::errc{} || ptr != num.data() + num.size())
    throw Error(Errc::ParseError, "bad x-degree in '" + std::string(text) + "'");
  GeneratorId id{*idx, r};
  check(id);
  return id;
}

std::vector<GeneratorId> enumerate_generators(const GradedWindow& w, const CurrentAlgebra& g) {
  w.require_finite();
  if (w.variant != g.variant()) throw Error(Errc::VariantMismatch, "window variant differs from the algebra");
  std::vector<GeneratorId> out;
  const std::size_t n = g.presentation().dim();
  for (Index i = 0; i < n; ++i) {
    if (w.variant == Variant::Current) {
      for (int r = 0; r <= w.xdeg && r + 1 <= w.filt_max; ++r) out.push_back({i, r});
    } else if (w.len_max > 0) {
      for (int r = w.r_range->first; r <= w.r_range->second; ++r) out.push_back({i, r});
    }
  }
  return out;
}

std::vector<int> test_degrees(Variant v, int smax) {
  std::vector<int> out;
  for (int s = v == Variant::Current ? 0 : -smax; s <= smax; ++s) out.push_back(s);
  return out;
}

}  // namespace uea
