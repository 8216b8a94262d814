#include "lpfd/axioms.hpp"

namespace lpfd::axioms {

namespace {

// Registers every maximal subformula that is not built from ~, & or falsum.
void collectUnits(const Formula& f, std::vector<Formula>& units) {
  switch (f.kind()) {
    case Formula::Kind::Falsum:
      return;
    case Formula::Kind::Not:
      collectUnits(f.child(), units);
      return;
    case Formula::Kind::And:
      collectUnits(f.left(), units);
      collectUnits(f.right(), units);
      return;
    default:
      for (const Formula& seen : units) {
        if (seen == f) return;
      }
      units.push_back(f);
  }
}

bool evalBoolean(const Formula& f, const std::vector<Formula>& units, unsigned long long mask) {
  switch (f.kind()) {
    case Formula::Kind::Falsum:
      return false;
    case Formula::Kind::Not:
      return !evalBoolean(f.child(), units, mask);
    case Formula::Kind::And:
      return evalBoolean(f.left(), units, mask) && evalBoolean(f.right(), units, mask);
    default:
      for (std::size_t i = 0; i < units.size(); ++i) {
        if (units[i] == f) return (mask >> i) & 1u;
      }
      return false;  // unreachable: every unit was collected
  }
}

}  // namespace

bool isTautologyInstance(const Formula& f, int maxAtoms) {
  std::vector<Formula> units;
  collectUnits(f, units);
  if (static_cast<int>(units.size()) > maxAtoms) {
    throw ResourceError("tautology check over " + std::to_string(maxAtoms) +
                        " distinct subformulas");
  }
  const unsigned long long rows = 1ULL << units.size();
  for (unsigned long long mask = 0; mask < rows; ++mask) {
    if (!evalBoolean(f, units, mask)) return false;
  }
  return true;
}

}  // namespace lpfd::axioms
