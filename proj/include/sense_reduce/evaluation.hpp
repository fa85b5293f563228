#pragma once
// Scoring and reporting: accuracy with abstention-aware coverage, the
// expected accuracy of random back-off, binomial confidence intervals,
// and an instrumented WiC runner that classifies reduction errors
// instead of letting one bad instance abort a run.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "sense_reduce/errors.hpp"
#include "sense_reduce/matcher.hpp"
#include "sense_reduce/reductions.hpp"
#include "sense_reduce/task_model.hpp"

namespace sense_reduce {

// Fixed three-decimal display form, half away from zero.
inline std::string format_fixed3(double x) {
  long long m = std::llround(x * 1000.0);
  bool neg = m < 0;
  if (neg) m = -m;
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%s%lld.%03lld", neg ? "-" : "", m / 1000,
                m % 1000);
  return buf;
}

// (accuracy over scored instances, coverage). Abstentions reduce
// coverage only.
inline std::pair<double, double> accuracy(
    const std::vector<std::optional<bool>>& predictions,
    const std::vector<bool>& gold) {
  if (predictions.size() != gold.size())
    throw LengthMismatch("predictions vs gold", predictions.size(), gold.size());
  size_t scored = 0, correct = 0;
  for (size_t i = 0; i < predictions.size(); ++i) {
    if (!predictions[i]) continue;
    ++scored;
    if (*predictions[i] == gold[i]) ++correct;
  }
  if (scored == 0) throw NoScored();
  return {static_cast<double>(correct) / static_cast<double>(scored),
          static_cast<double>(scored) / static_cast<double>(predictions.size())};
}

// Accuracy of answering matched instances perfectly and guessing the
// rest at chance on a balanced binary task: p + (1 - p) / 2.
inline double expected_accuracy_with_backoff(double match_fraction) {
  if (!(match_fraction >= 0.0 && match_fraction <= 1.0))
    throw OutOfRange("match fraction " + std::to_string(match_fraction));
  return match_fraction + (1.0 - match_fraction) / 2.0;
}

struct BinomialCi {
  double estimate = 0.0;
  double margin = 0.0;
};

// Wald interval: p-hat +/- z * sqrt(p-hat (1 - p-hat) / n).
inline BinomialCi binomial_ci(uint64_t successes, uint64_t n, double z = 1.96) {
  if (n == 0 || successes > n)
    throw InvalidCounts(std::to_string(successes) + " successes of n=" + std::to_string(n));
  if (!(z > 0.0)) throw InvalidParameter("z must be positive");
  double p = static_cast<double>(successes) / static_cast<double>(n);
  return {p, z * std::sqrt(p * (1.0 - p) / static_cast<double>(n))};
}

// Wilson score interval, for comparison with the Wald default.
inline BinomialCi wilson_ci(uint64_t successes, uint64_t n, double z = 1.96) {
  if (n == 0 || successes > n)
    throw InvalidCounts(std::to_string(successes) + " successes of n=" + std::to_string(n));
  if (!(z > 0.0)) throw InvalidParameter("z must be positive");
  double s = static_cast<double>(successes);
  double nn = static_cast<double>(n);
  double z2 = z * z;
  double denom = nn + z2;
  double estimate = (s + z2 / 2.0) / denom;
  double margin = z / denom * std::sqrt(s * (nn - s) / nn + z2 / 4.0);
  return {estimate, margin};
}

inline std::string format_ci(const BinomialCi& ci) {
  return format_fixed3(ci.estimate) + " ± " + format_fixed3(ci.margin);
}

struct ErrorCounts {
  uint64_t abstained = 0;
  uint64_t zero_true = 0;
  uint64_t multi_true = 0;
  uint64_t no_example = 0;
  uint64_t unknown_lemma = 0;
  uint64_t unresolved_definition = 0;
  uint64_t unknown_context = 0;
  uint64_t other = 0;

  uint64_t total() const {
    return abstained + zero_true + multi_true + no_example + unknown_lemma +
           unresolved_definition + unknown_context + other;
  }

  void add(const std::string& label) {
    if (label == "abstained") ++abstained;
    else if (label == "zero_true") ++zero_true;
    else if (label == "multi_true") ++multi_true;
    else if (label == "no_example") ++no_example;
    else if (label == "unknown_lemma") ++unknown_lemma;
    else if (label == "unresolved_definition") ++unresolved_definition;
    else if (label == "unknown_context") ++unknown_context;
    else ++other;
  }
};

inline std::string error_label(const ReductionError& e) {
  if (dynamic_cast<const AbstainedUpstream*>(&e)) return "abstained";
  if (dynamic_cast<const ZeroTrue*>(&e)) return "zero_true";
  if (dynamic_cast<const MultiTrue*>(&e)) return "multi_true";
  if (dynamic_cast<const NoExample*>(&e)) return "no_example";
  if (dynamic_cast<const UnknownLemma*>(&e)) return "unknown_lemma";
  if (dynamic_cast<const UnresolvedDefinition*>(&e)) return "unresolved_definition";
  if (dynamic_cast<const UnknownContext*>(&e)) return "unknown_context";
  return "other";
}

struct EvaluationReport {
  std::string dataset;
  size_t n = 0;
  size_t n_scored = 0;
  double accuracy = 0.0;
  double coverage = 0.0;
  std::optional<double> match_fraction;
  std::optional<double> expected_accuracy;
  double ci_estimate = 0.0;
  double ci_margin = 0.0;
  ErrorCounts errors;
};

struct WicVerdict {
  std::string id;
  std::optional<bool> prediction;
  std::optional<bool> gold;
  std::optional<bool> matched1;
  std::optional<bool> matched2;
  std::string sense1;  // empty when unknown
  std::string sense2;
  std::string error;  // empty when the instance was answered
};

// May throw ReductionError; the runner converts that into a classified
// unanswered verdict.
using WicVerdictFn = std::function<WicVerdict(const WicInstance&)>;

inline WicVerdictFn verdict_wic_solver(WicSolver solver) {
  return [solver = std::move(solver)](const WicInstance& inst) {
    WicVerdict v;
    v.id = inst.id;
    v.gold = inst.gold;
    v.prediction = solver(inst);
    return v;
  };
}

// The matching pipeline with instrumentation: which sides matched and
// which senses were used, so verdict dumps expose the back-off split.
inline WicVerdictFn verdict_matching_wic(const ExampleIndex& idx,
                                         const SenseInventory& inv,
                                         BackoffPolicy policy) {
  const ExampleIndex* xp = &idx;
  const SenseInventory* ip = &inv;
  return [xp, ip, policy](const WicInstance& inst) {
    WicVerdict v;
    v.id = inst.id;
    v.gold = inst.gold;
    auto [a, b] = wsd_instances_of(inst);
    WsdSolver backoff = matching_wsd_solver(*xp, *ip, policy);
    auto side = [&](const WsdInstance& w, std::optional<bool>& matched,
                    std::string& sense) -> std::optional<SenseKey> {
      if (auto m = xp->match(w.context.text, w.target)) {
        matched = true;
        sense = *m;
        return m;
      }
      matched = false;
      std::optional<SenseKey> r = backoff(w);
      if (r) sense = *r;
      return r;
    };
    std::optional<SenseKey> s1 = side(a, v.matched1, v.sense1);
    std::optional<SenseKey> s2 = side(b, v.matched2, v.sense2);
    if (s1 && s2) v.prediction = (*s1 == *s2);
    return v;
  };
}

// Scores a WiC dataset. Every instance must carry gold; reduction
// errors are classified and leave the instance unscored.
inline EvaluationReport evaluate_wic_verdicts(
    const WicVerdictFn& fn, const std::vector<WicInstance>& data,
    std::string dataset, std::vector<WicVerdict>* dump = nullptr) {
  if (data.empty()) throw EmptyDataset();
  EvaluationReport rep;
  rep.dataset = std::move(dataset);
  rep.n = data.size();
  size_t correct = 0;
  for (const WicInstance& inst : data) {
    if (!inst.gold) throw MissingGold(inst.id);
    WicVerdict v;
    try {
      v = fn(inst);
      v.id = inst.id;
      v.gold = inst.gold;
    } catch (const ReductionError& e) {
      v = WicVerdict{};
      v.id = inst.id;
      v.gold = inst.gold;
      v.error = error_label(e);
    }
    if (!v.error.empty()) v.prediction = std::nullopt;
    if (!v.prediction && v.error.empty()) v.error = "abstained";
    if (v.prediction) {
      ++rep.n_scored;
      if (*v.prediction == *inst.gold) ++correct;
    } else {
      rep.errors.add(v.error);
    }
    if (dump) dump->push_back(std::move(v));
  }
  if (rep.n_scored == 0) throw NoScored();
  rep.accuracy = static_cast<double>(correct) / static_cast<double>(rep.n_scored);
  rep.coverage = static_cast<double>(rep.n_scored) / static_cast<double>(rep.n);
  BinomialCi ci = binomial_ci(correct, rep.n_scored);
  rep.ci_estimate = ci.estimate;
  rep.ci_margin = ci.margin;
  return rep;
}

inline EvaluationReport evaluate_wic(const WicSolver& solver,
                                     const std::vector<WicInstance>& data,
                                     std::string dataset = "wic",
                                     std::vector<WicVerdict>* dump = nullptr) {
  return evaluate_wic_verdicts(verdict_wic_solver(solver), data,
                               std::move(dataset), dump);
}

struct TsvVerdict {
  std::string id;
  std::optional<bool> prediction;
  std::optional<bool> gold;
  std::string error;
};

inline EvaluationReport evaluate_tsv(const TsvSolver& solver,
                                     const std::vector<TsvInstance>& data,
                                     std::string dataset = "tsv",
                                     std::vector<TsvVerdict>* dump = nullptr) {
  if (data.empty()) throw EmptyDataset();
  EvaluationReport rep;
  rep.dataset = std::move(dataset);
  rep.n = data.size();
  size_t correct = 0;
  for (const TsvInstance& inst : data) {
    if (!inst.gold) throw MissingGold(inst.id);
    TsvVerdict v;
    v.id = inst.id;
    v.gold = inst.gold;
    try {
      v.prediction = solver(inst);
    } catch (const ReductionError& e) {
      v.error = error_label(e);
    }
    if (v.prediction) {
      ++rep.n_scored;
      if (*v.prediction == *inst.gold) ++correct;
    } else {
      rep.errors.add(v.error.empty() ? "abstained" : v.error);
    }
    if (dump) dump->push_back(std::move(v));
  }
  if (rep.n_scored == 0) throw NoScored();
  rep.accuracy = static_cast<double>(correct) / static_cast<double>(rep.n_scored);
  rep.coverage = static_cast<double>(rep.n_scored) / static_cast<double>(rep.n);
  BinomialCi ci = binomial_ci(correct, rep.n_scored);
  rep.ci_estimate = ci.estimate;
  rep.ci_margin = ci.margin;
  return rep;
}

// WSD accuracy against gold sense keys, for synthetic checks.
inline EvaluationReport evaluate_wsd(const WsdSolver& solver,
                                     const std::vector<WsdInstance>& data,
                                     std::string dataset = "wsd") {
  if (data.empty()) throw EmptyDataset();
  EvaluationReport rep;
  rep.dataset = std::move(dataset);
  rep.n = data.size();
  size_t correct = 0;
  for (const WsdInstance& inst : data) {
    if (!inst.gold) throw MissingGold(inst.id);
    std::optional<SenseKey> pred;
    std::string err;
    try {
      pred = solver(inst);
    } catch (const ReductionError& e) {
      err = error_label(e);
    }
    if (pred) {
      ++rep.n_scored;
      if (*pred == *inst.gold) ++correct;
    } else {
      rep.errors.add(err.empty() ? "abstained" : err);
    }
  }
  if (rep.n_scored == 0) throw NoScored();
  rep.accuracy = static_cast<double>(correct) / static_cast<double>(rep.n_scored);
  rep.coverage = static_cast<double>(rep.n_scored) / static_cast<double>(rep.n);
  BinomialCi ci = binomial_ci(correct, rep.n_scored);
  rep.ci_estimate = ci.estimate;
  rep.ci_margin = ci.margin;
  return rep;
}

// Plain-text report, one `key<TAB>value` line per field, proportions
// shown at three decimals. Stable across runs.
inline void write_report_text(std::ostream& os, const EvaluationReport& r) {
  os << "dataset\t" << r.dataset << "\n";
  os << "n\t" << r.n << "\n";
  os << "n_scored\t" << r.n_scored << "\n";
  os << "accuracy\t" << format_fixed3(r.accuracy) << "\n";
  os << "coverage\t" << format_fixed3(r.coverage) << "\n";
  if (r.match_fraction)
    os << "match_fraction\t" << format_fixed3(*r.match_fraction) << "\n";
  if (r.expected_accuracy)
    os << "expected_accuracy\t" << format_fixed3(*r.expected_accuracy) << "\n";
  os << "ci_estimate\t" << format_fixed3(r.ci_estimate) << "\n";
  os << "ci_margin\t" << format_fixed3(r.ci_margin) << "\n";
  os << "errors.abstained\t" << r.errors.abstained << "\n";
  os << "errors.zero_true\t" << r.errors.zero_true << "\n";
  os << "errors.multi_true\t" << r.errors.multi_true << "\n";
  os << "errors.no_example\t" << r.errors.no_example << "\n";
  os << "errors.unknown_lemma\t" << r.errors.unknown_lemma << "\n";
  os << "errors.unresolved_definition\t" << r.errors.unresolved_definition << "\n";
  os << "errors.unknown_context\t" << r.errors.unknown_context << "\n";
  os << "errors.other\t" << r.errors.other << "\n";
}

inline std::string verdict_flag(const std::optional<bool>& b,
                                const char* t = "T", const char* f = "F") {
  if (!b) return "-";
  return *b ? t : f;
}

// Tab-separated verdict dump, sorted by instance id.
inline void write_wic_verdicts(std::ostream& os,
                               std::vector<WicVerdict> verdicts) {
  std::sort(verdicts.begin(), verdicts.end(),
            [](const WicVerdict& a, const WicVerdict& b) { return a.id < b.id; });
  os << "# id\tprediction\tgold\tmatched1\tmatched2\tsense1\tsense2\terror\n";
  for (const WicVerdict& v : verdicts) {
    os << v.id << '\t' << verdict_flag(v.prediction) << '\t'
       << verdict_flag(v.gold) << '\t' << verdict_flag(v.matched1, "1", "0")
       << '\t' << verdict_flag(v.matched2, "1", "0") << '\t'
       << (v.sense1.empty() ? "-" : v.sense1) << '\t'
       << (v.sense2.empty() ? "-" : v.sense2) << '\t'
       << (v.error.empty() ? "-" : v.error) << "\n";
  }
}

}  // namespace sense_reduce
