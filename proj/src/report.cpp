#include "bsgkit/report.hpp"

#include "bsgkit/caps.hpp"
#include "bsgkit/error.hpp"

#include <algorithm>
#include <charconv>
#include <string>

namespace bsg {

const Inequality& BoundReport::check(std::string name, const Rational& lhs, Relation rel, const Rational& rhs,
                                     std::string anchor, std::string detail) {
  bool pass = false;
  switch (rel) {
    case Relation::LessEq: pass = lhs <= rhs; break;
    case Relation::GreaterEq: pass = lhs >= rhs; break;
    case Relation::Equal: pass = lhs == rhs; break;
  }
  items_.push_back(Inequality{std::move(name), to_string(lhs), to_string(rhs), rel, pass, std::move(anchor),
                              std::move(detail)});
  return items_.back();
}

void BoundReport::append(const BoundReport& other) {
  items_.insert(items_.end(), other.items_.begin(), other.items_.end());
}

bool BoundReport::overall() const noexcept {
  return std::all_of(items_.begin(), items_.end(), [](const Inequality& i) { return i.pass; });
}

const Inequality* BoundReport::find(std::string_view name) const {
  for (const auto& i : items_)
    if (i.name == name) return &i;
  return nullptr;
}

std::string_view relation_symbol(Relation rel) noexcept {
  switch (rel) {
    case Relation::LessEq: return "<=";
    case Relation::GreaterEq: return ">=";
    case Relation::Equal: return "==";
  }
  return "?";
}

Caps apply_caps_overrides(Caps caps, std::string_view spec) {
  while (!spec.empty()) {
    auto comma = spec.find(',');
    std::string_view item = spec.substr(0, comma);
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos) throw Error(Errc::ConfigInvalid, "cap override without '=': " + std::string(item));
    std::string_view key = item.substr(0, eq);
    std::string_view text = item.substr(eq + 1);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || (value == 0 && key != "seed"))
      throw Error(Errc::ConfigInvalid, "bad cap value: " + std::string(item));
    if (key == "enum") caps.enumeration_budget = value;
    else if (key == "conv") caps.convolution_cells = static_cast<std::size_t>(value);
    else if (key == "exhaust") caps.exhaustive_supports = value;
    else if (key == "samples") caps.support_samples = value;
    else if (key == "seed") caps.sample_seed = value;
    else throw Error(Errc::ConfigInvalid, "unknown cap: " + std::string(key));
  }
  return caps;
}

}  // namespace bsg
