#pragma once

/// The decision tree over exact quantities (curve class, group verdict,
/// orbit-sum zero test), the guesser cross-validation harness, the
/// 255-model unweighted scan, and the per-model invariant suite.

#include <optional>

#include "quadwalk/elliptic.hpp"
#include "quadwalk/group.hpp"
#include "quadwalk/guess.hpp"
#include "quadwalk/kernel.hpp"
#include "quadwalk/series.hpp"

namespace quadwalk {

enum class ClassTag {
    DegenerateAlgebraic,
    GenusZeroUndecided,
    Algebraic,
    DFiniteTranscendental,
    NotDFinite,
};

const char* to_string(ClassTag tag);

struct Classification {
    ClassTag tag;
    CurveClass curve;
    std::optional<GroupResult> group;
    std::optional<bool> orbit_sum_zero;
    std::string orbit_sum_text;   // term list, when finite
};

/// Exact decision table: Degenerate -> DegenerateAlgebraic; GenusZero ->
/// GenusZeroUndecided; Elliptic + finite group + zero orbit-sum ->
/// Algebraic; nonzero -> DFiniteTranscendental; infinite -> NotDFinite.
Classification classify(const WalkModel& m);

struct Budget {
    int series_terms = 100;
    int ode_max_order = 6;
    int ode_max_degree = 12;
    int alg_max_deg_f = 8;
    int alg_max_deg_t = 12;
    int guard = 10;
    int infinite_series_terms = 120;   // series length used for NotDFinite checks
};

enum class Consistency { Consistent, Inconsistent, NoPrediction };

struct CrossReport {
    Classification classification;
    Consistency verdict = Consistency::NoPrediction;
    // guesser outcomes on the specialized series
    Rat spec_x{0}, spec_y{0};
    GuessResult ode;
    GuessResult algebraic;
    std::string note;
};

/// Runs enumerate + specialize + guess in the modes the classification
/// predicts, and reports CONSISTENT / INCONSISTENT.
CrossReport crossvalidate(const WalkModel& m, const Budget& budget = {});

struct AtlasEntry {
    unsigned step_mask = 0;   // bit k set = step present, k indexes the 8 steps
    std::string steps;
    ClassTag tag;
    int group_order = 0;      // 0 when infinite or not computed
    bool orbit_sum_zero = false;
};

struct Atlas {
    std::vector<AtlasEntry> entries;
    std::map<std::string, int> curve_counts;
    std::map<int, int> order_histogram;    // key 0 = infinite
    std::vector<std::string> orbit_sum_zero_models;
};

/// Classifies all 255 nonempty unweighted step sets. Parallel across
/// models; assembly is deterministic.
Atlas scan_unweighted(int workers = 0);

/// The eight small steps in a fixed order, for the scan's bit masks.
extern const Step kAllSteps[8];
WalkModel model_from_mask(unsigned mask);

struct CheckItem {
    std::string name;
    bool pass;
    double value;   // residual or measured quantity (0 for exact checks)
};

struct CheckReport {
    std::vector<CheckItem> items;
    bool all_pass = true;
    void add(const std::string& name, bool pass, double value = 0.0);
};

/// Per-model invariant suite: functional equation, involution and
/// orbit-sum identities, and (for elliptic models) the elliptic identity
/// battery at the three standard t samples.
CheckReport run_checks(const WalkModel& m, int series_order = 15);

} // namespace quadwalk
