#pragma once

#include "bsgkit/numeric.hpp"

#include <string>
#include <vector>

namespace bsg {

enum class Relation { LessEq, GreaterEq, Equal };

struct Inequality {
  std::string name;
  std::string lhs;
  std::string rhs;
  Relation relation = Relation::LessEq;
  bool pass = false;
  std::string anchor;
  std::string detail;
};

/// Exact evaluation of a list of inequalities. lhs/rhs are rendered as
/// integers or reduced fractions; nothing is rounded.
class BoundReport {
 public:
  const Inequality& check(std::string name, const Rational& lhs, Relation rel, const Rational& rhs,
                          std::string anchor, std::string detail = {});
  void append(const BoundReport& other);

  const std::vector<Inequality>& items() const noexcept { return items_; }
  bool overall() const noexcept;
  const Inequality* find(std::string_view name) const;

 private:
  std::vector<Inequality> items_;
};

std::string_view relation_symbol(Relation rel) noexcept;

}  // namespace bsg
