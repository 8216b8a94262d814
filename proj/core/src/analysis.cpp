#include "lpfd/analysis.hpp"

#include <algorithm>

#include "lpfd/bind.hpp"
#include "lpfd/semantics.hpp"

namespace lpfd::analysis {

const char* conceptName(Concept c) {
  switch (c) {
    case Concept::Nash: return "nash";
    case Concept::WeakPareto: return "wpareto";
    case Concept::StrongPareto: return "spareto";
    case Concept::PaY: return "pay";
    case Concept::Ca: return "ca";
    case Concept::Ca1: return "ca1";
    case Concept::Ca2: return "ca2";
  }
  return "?";
}

std::optional<Concept> conceptFromName(const std::string& name) {
  if (name == "nash") return Concept::Nash;
  if (name == "wpareto") return Concept::WeakPareto;
  if (name == "spareto") return Concept::StrongPareto;
  if (name == "pay") return Concept::PaY;
  if (name == "ca") return Concept::Ca;
  if (name == "ca1") return Concept::Ca1;
  if (name == "ca2") return Concept::Ca2;
  return std::nullopt;
}

bool AnalysisReport::isSolution(int profile) const {
  return std::binary_search(solutions.begin(), solutions.end(), profile);
}

std::vector<bool> AnalysisReport::solutionMask(int profileCount) const {
  std::vector<bool> mask(static_cast<std::size_t>(profileCount), false);
  for (int s : solutions) mask[static_cast<std::size_t>(s)] = true;
  return mask;
}

namespace {

void checkGroup(const PDModel& m, PlayerSet group) {
  if (!group.subsetOf(m.vocab().allPlayers())) {
    throw VocabularyError("group mentions a player outside the vocabulary");
  }
}

// First (t, x) such that t deviates only in x and x strictly gains.
std::optional<std::pair<int, int>> unilateralImprovement(const PDModel& m, int s, PlayerSet group) {
  for (int x : group) {
    const PlayerSet others = m.vocab().allPlayers().without(x);
    for (int t = 0; t < m.profileCount(); ++t) {
      if (m.agree(s, t, others) && m.strictPref(x, s, t)) return std::make_pair(t, x);
    }
  }
  return std::nullopt;
}

// First (t, x) such that t fixes `fixed`, weakly improves all of X and
// strictly improves x.
std::optional<std::pair<int, int>> groupImprovement(const PDModel& m, int s, PlayerSet fixed,
                                                    PlayerSet group) {
  for (int t = 0; t < m.profileCount(); ++t) {
    if (!m.agree(s, t, fixed) || !m.weakPrefAll(s, t, group)) continue;
    for (int x : group) {
      if (m.strictPref(x, s, t)) return std::make_pair(t, x);
    }
  }
  return std::nullopt;
}

}  // namespace

AnalysisReport nash(const PDModel& m, PlayerSet group) {
  checkGroup(m, group);
  AnalysisReport report;
  report.kind = Concept::Nash;
  report.group = group;
  report.fixedGroup = m.vocab().allPlayers() - group;
  for (int s = 0; s < m.profileCount(); ++s) {
    if (auto hit = unilateralImprovement(m, s, group)) {
      ProfileEvidence ev;
      ev.dominator = hit->first;
      ev.gainer = hit->second;
      report.evidence.emplace(s, ev);
    } else {
      report.solutions.push_back(s);
    }
  }
  return report;
}

AnalysisReport weakPareto(const PDModel& m, PlayerSet group) {
  checkGroup(m, group);
  AnalysisReport report;
  report.kind = Concept::WeakPareto;
  report.group = group;
  report.fixedGroup = m.vocab().allPlayers() - group;
  for (int s = 0; s < m.profileCount(); ++s) {
    std::optional<int> dominator;
    for (int t = 0; t < m.profileCount(); ++t) {
      if (m.agree(s, t, report.fixedGroup) && m.strictPrefAll(s, t, group)) {
        dominator = t;
        break;
      }
    }
    if (dominator) {
      ProfileEvidence ev;
      ev.dominator = dominator;
      report.evidence.emplace(s, ev);
    } else {
      report.solutions.push_back(s);
    }
  }
  return report;
}

AnalysisReport paY(const PDModel& m, PlayerSet fixed, PlayerSet group) {
  checkGroup(m, fixed);
  checkGroup(m, group);
  AnalysisReport report;
  report.kind = Concept::PaY;
  report.group = group;
  report.fixedGroup = fixed;
  for (int s = 0; s < m.profileCount(); ++s) {
    if (auto hit = groupImprovement(m, s, fixed, group)) {
      ProfileEvidence ev;
      ev.dominator = hit->first;
      ev.gainer = hit->second;
      report.evidence.emplace(s, ev);
    } else {
      report.solutions.push_back(s);
    }
  }
  return report;
}

AnalysisReport strongPareto(const PDModel& m, PlayerSet group) {
  checkGroup(m, group);
  AnalysisReport report = paY(m, m.vocab().allPlayers() - group, group);
  report.kind = Concept::StrongPareto;
  return report;
}

AnalysisReport ca(const PDModel& m, PlayerSet group, const AnalysisOptions& options) {
  checkGroup(m, group);
  if (group.size() > options.caGroupLimit) {
    throw ResourceError("ca limited to groups of at most " + std::to_string(options.caGroupLimit) +
                        " players");
  }
  AnalysisReport report;
  report.kind = Concept::Ca;
  report.group = group;
  report.fixedGroup = m.vocab().allPlayers() - group;

  // Satisfying proper subgroups per profile, computed subset-by-subset.
  // A cover of satisfying subgroups exists iff their union is the whole
  // group, so no cover family enumeration is needed here.
  std::vector<PlayerSet> properSubsets;
  for (PlayerSet sub : group.subsets()) {
    if (sub != group) properSubsets.push_back(sub);
  }
  std::vector<std::vector<bool>> subgroupOk;
  subgroupOk.reserve(properSubsets.size());
  for (PlayerSet sub : properSubsets) {
    std::vector<bool> ok(static_cast<std::size_t>(m.profileCount()), false);
    for (int s = 0; s < m.profileCount(); ++s) {
      ok[static_cast<std::size_t>(s)] = !groupImprovement(m, s, report.fixedGroup, sub).has_value();
    }
    subgroupOk.push_back(std::move(ok));
  }

  for (int s = 0; s < m.profileCount(); ++s) {
    if (auto hit = unilateralImprovement(m, s, group)) {
      ProfileEvidence ev;
      ev.dominator = hit->first;
      ev.gainer = hit->second;
      report.evidence.emplace(s, ev);
      continue;
    }
    PlayerSet covered;
    std::vector<PlayerSet> satisfying;
    for (std::size_t i = 0; i < properSubsets.size(); ++i) {
      if (subgroupOk[i][static_cast<std::size_t>(s)]) {
        satisfying.push_back(properSubsets[i]);
        covered = covered | properSubsets[i];
      }
    }
    if (covered != group) {
      report.evidence.emplace(s, ProfileEvidence{});
      continue;
    }

    // Witness cover: maximal satisfying subgroups, then greedy pruning in
    // canonical (ascending mask) order.
    std::vector<PlayerSet> cover;
    for (PlayerSet a : satisfying) {
      bool maximal = true;
      for (PlayerSet b : satisfying) {
        if (a != b && a.subsetOf(b)) {
          maximal = false;
          break;
        }
      }
      if (maximal) cover.push_back(a);
    }
    for (std::size_t i = 0; i < cover.size();) {
      PlayerSet rest;
      for (std::size_t j = 0; j < cover.size(); ++j) {
        if (j != i) rest = rest | cover[j];
      }
      if (rest == group) {
        cover.erase(cover.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        ++i;
      }
    }
    ProfileEvidence ev;
    ev.cover = std::move(cover);
    report.evidence.emplace(s, ev);
    report.solutions.push_back(s);
  }
  return report;
}

AnalysisReport ca1(const PDModel& m, PlayerSet group) {
  checkGroup(m, group);
  AnalysisReport pareto = strongPareto(m, group);
  AnalysisReport equilibrium = nash(m, group);
  AnalysisReport report;
  report.kind = Concept::Ca1;
  report.group = group;
  report.fixedGroup = m.vocab().allPlayers() - group;
  for (int s = 0; s < m.profileCount(); ++s) {
    if (pareto.isSolution(s) && equilibrium.isSolution(s)) {
      report.solutions.push_back(s);
    } else {
      auto it = equilibrium.evidence.find(s);
      if (it == equilibrium.evidence.end()) it = pareto.evidence.find(s);
      report.evidence.emplace(s, it->second);
    }
  }
  return report;
}

AnalysisReport ca2(const PDModel& m, PlayerSet group, const AnalysisOptions& options) {
  checkGroup(m, group);
  if (group.size() > options.caGroupLimit) {
    throw ResourceError("ca2 limited to groups of at most " + std::to_string(options.caGroupLimit) +
                        " players");
  }
  AnalysisReport report;
  report.kind = Concept::Ca2;
  report.group = group;
  report.fixedGroup = m.vocab().allPlayers() - group;

  std::vector<bool> solution(static_cast<std::size_t>(m.profileCount()), true);
  for (PlayerSet sub : group.subsets()) {
    const PlayerSet fixed = m.vocab().allPlayers() - sub;
    for (int s = 0; s < m.profileCount(); ++s) {
      if (!solution[static_cast<std::size_t>(s)]) continue;
      if (auto hit = groupImprovement(m, s, fixed, sub)) {
        solution[static_cast<std::size_t>(s)] = false;
        ProfileEvidence ev;
        ev.dominator = hit->first;
        ev.gainer = hit->second;
        ev.failedSubgroup = sub;
        report.evidence.emplace(s, ev);
      }
    }
  }
  for (int s = 0; s < m.profileCount(); ++s) {
    if (solution[static_cast<std::size_t>(s)]) report.solutions.push_back(s);
  }
  return report;
}

std::vector<bool> viaFormula(const PDModel& m, Concept kind, PlayerSet group) {
  checkGroup(m, group);
  const Vocabulary& vocab = m.vocab();
  Formula f;
  switch (kind) {
    case Concept::Nash:
      f = naFormula(vocab, group);
      break;
    case Concept::WeakPareto:
      f = weakParetoFormula(vocab, group);
      break;
    case Concept::StrongPareto:
      f = paFormula(vocab, group);
      break;
    case Concept::PaY:
      throw DomainError("paY needs an explicit fixed group; use paYViaFormula");
    case Concept::Ca:
      f = caCoverFormula(vocab, group);
      break;
    case Concept::Ca1:
      f = ca1Formula(vocab, group);
      break;
    case Concept::Ca2:
      f = ca2Formula(vocab, group);
      break;
  }
  return evalAll(m, f);
}

std::vector<bool> paYViaFormula(const PDModel& m, PlayerSet fixed, PlayerSet group) {
  checkGroup(m, fixed);
  checkGroup(m, group);
  return evalAll(m, paYFormula(m.vocab(), fixed, group));
}

std::vector<bool> nashJointComplementViaFormula(const PDModel& m, PlayerSet group) {
  checkGroup(m, group);
  return evalAll(m, naJointComplementFormula(m.vocab(), group));
}

}  // namespace lpfd::analysis
