#include "lpfd/conformance.hpp"

#include "lpfd/analysis.hpp"
#include "lpfd/bind.hpp"
#include "lpfd/semantics.hpp"
#include "lpfd/testgen.hpp"

namespace lpfd::conformance {

namespace {

std::string maskText(const PDModel& m, const std::vector<bool>& mask) {
  std::string out = "{";
  bool first = true;
  for (int s = 0; s < m.profileCount(); ++s) {
    if (!mask[static_cast<std::size_t>(s)]) continue;
    if (!first) out += ",";
    out += m.profileId(s);
    first = false;
  }
  return out + "}";
}

std::vector<bool> maskOf(const PDModel& m, const std::vector<int>& solutions) {
  std::vector<bool> mask(static_cast<std::size_t>(m.profileCount()), false);
  for (int s : solutions) mask[static_cast<std::size_t>(s)] = true;
  return mask;
}

class Comparer {
 public:
  Comparer(const PDModel& model, Report& report, int modelIndex, std::uint64_t modelSeed)
      : m_(model), report_(report), modelIndex_(modelIndex), modelSeed_(modelSeed) {}

  void compare(const std::string& label, PlayerSet group, const char* nameA,
               const std::vector<bool>& a, const char* nameB, const std::vector<bool>& b) {
    ++report_.comparisons;
    if (a == b) return;
    Mismatch mismatch;
    mismatch.modelIndex = modelIndex_;
    mismatch.modelSeed = modelSeed_;
    mismatch.label = label;
    mismatch.group = m_.vocab().describeSet(group);
    mismatch.routeA = nameA;
    mismatch.routeB = nameB;
    mismatch.detail = maskText(m_, a) + " vs " + maskText(m_, b);
    report_.mismatches.push_back(std::move(mismatch));
  }

 private:
  const PDModel& m_;
  Report& report_;
  int modelIndex_;
  std::uint64_t modelSeed_;
};

}  // namespace

Report runOnModel(const PDModel& m, const Config& config, int modelIndex, std::uint64_t modelSeed) {
  Report report;
  Comparer cmp(m, report, modelIndex, modelSeed);
  const int n = m.profileCount();

  for (PlayerSet group : m.vocab().allPlayers().subsets()) {
    {
      const auto direct = analysis::nash(m, group).solutionMask(n);
      cmp.compare("nash", group, "direct", direct, "formula",
                  analysis::viaFormula(m, analysis::Concept::Nash, group));
      cmp.compare("nash", group, "direct", direct, "oracle",
                  maskOf(m, testgen::oracleNash(m, group)));
    }
    {
      const auto direct = analysis::weakPareto(m, group).solutionMask(n);
      cmp.compare("wpareto", group, "direct", direct, "formula",
                  analysis::viaFormula(m, analysis::Concept::WeakPareto, group));
      cmp.compare("wpareto", group, "direct", direct, "oracle",
                  maskOf(m, testgen::oracleWeakPareto(m, group)));
    }
    {
      const auto direct = analysis::strongPareto(m, group).solutionMask(n);
      cmp.compare("spareto", group, "direct", direct, "formula",
                  analysis::viaFormula(m, analysis::Concept::StrongPareto, group));
      cmp.compare("spareto", group, "direct", direct, "oracle",
                  maskOf(m, testgen::oracleStrongPareto(m, group)));
    }
    {
      const auto direct = analysis::ca(m, group).solutionMask(n);
      cmp.compare("ca", group, "native", direct, "oracle",
                  maskOf(m, testgen::oracleCa(m, group).solutions));
      if (group.size() <= config.caExpansionLimit) {
        cmp.compare("ca", group, "native", direct, "expansion",
                    analysis::viaFormula(m, analysis::Concept::Ca, group));
      }
    }
    {
      const auto direct = analysis::ca1(m, group).solutionMask(n);
      cmp.compare("ca1", group, "direct", direct, "formula",
                  analysis::viaFormula(m, analysis::Concept::Ca1, group));
      cmp.compare("ca1", group, "direct", direct, "oracle",
                  maskOf(m, testgen::oracleCa1(m, group)));
    }
    {
      const auto direct = analysis::ca2(m, group).solutionMask(n);
      cmp.compare("ca2", group, "direct", direct, "formula",
                  analysis::viaFormula(m, analysis::Concept::Ca2, group));
      cmp.compare("ca2", group, "direct", direct, "oracle",
                  maskOf(m, testgen::oracleCa2(m, group)));
    }
    // paY over every fixed group; direct vs formula.
    for (PlayerSet fixed : m.vocab().allPlayers().subsets()) {
      cmp.compare("pay", group, "direct", analysis::paY(m, fixed, group).solutionMask(n), "formula",
                  analysis::paYViaFormula(m, fixed, group));
    }
  }

  ++report.modelsRun;
  return report;
}

Report run(const Config& config) {
  Report total;
  for (int i = 0; i < config.models; ++i) {
    const testgen::GenConfig gc =
        testgen::fuzzModelConfig(config.seed, i, config.maxPlayers, config.maxActions);
    const PDModel model = testgen::generate(gc);
    Report one = runOnModel(model, config, i, gc.seed);
    total.modelsRun += one.modelsRun;
    total.comparisons += one.comparisons;
    for (auto& mismatch : one.mismatches) total.mismatches.push_back(std::move(mismatch));
  }
  return total;
}

}  // namespace lpfd::conformance
