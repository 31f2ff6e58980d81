#pragma once

#include <map>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "permcf/paths.hpp"
#include "permcf/perm.hpp"

namespace permcf {

// p_a = #{b < a : x_b > x_a}
std::vector<int> ltr_inv_table(const std::vector<int>& x);
// q_a = #{b > a : x_b < x_a}
std::vector<int> rtl_inv_table(const std::vector<int>& x);
// Rebuild a listing of the set `values` from its table; throws
// std::invalid_argument on an out-of-bound entry.
std::vector<int> reconstruct_ltr(std::vector<int> values, const std::vector<int>& p);
std::vector<int> reconstruct_rtl(std::vector<int> values, const std::vector<int>& q);

// The same tables attached to values: result[x_a] = p_a.
std::map<int, int> value_ltr_inv_table(const std::vector<int>& x);
std::map<int, int> value_rtl_inv_table(const std::vector<int>& x);
// Rebuilds working from largest to smallest value (ltr) or smallest to largest (rtl).
std::vector<int> reconstruct_value_ltr(const std::map<int, int>& table);
std::vector<int> reconstruct_value_rtl(const std::map<int, int>& table);

enum class Bijection { FZ, DS, DSVariant };
std::string_view to_string(Bijection b);
Bijection bijection_from_string(std::string_view s);
Ruleset ruleset_of(Bijection b);

LabelledPath fz_forward(const Permutation& sigma);
Permutation fz_inverse(const LabelledPath& lp);
// Order in which vertices are processed: fixed points up, anti-excedances up,
// excedances down. Depends only on the coloured path.
std::vector<int> fz_order(const StepSeq& coloured_path);

LabelledPath ds_forward(const Permutation& sigma);
Permutation ds_inverse(const LabelledPath& lp);
std::vector<int> ds_order(int two_n);

LabelledPath ds_variant_forward(const Permutation& sigma);
Permutation ds_variant_inverse(const LabelledPath& lp);
// Values in G' increasing, then values in F' decreasing.
std::vector<int> ds_variant_order(const StepSeq& almost_dyck);

LabelledPath forward(Bijection b, const Permutation& sigma);
Permutation inverse(Bijection b, const LabelledPath& lp);

struct HistoryStep {
    int vertex = 0;  // source vertex (FZ, DS) or target value (variant DS)
    char stage = 'A';
    std::pair<int, int> edge;
    bool closes_cycle = false;
    // At steps that process a cycle valley in the final stage: how many of the
    // admissible labels at this step would have closed a cycle. -1 elsewhere.
    int closing_choices = -1;
    LaguerreDigraph snapshot;
};

// Builds the digraph one edge at a time, choosing each edge from the labels
// alone. Internal counting identities are checked and throw std::logic_error.
std::vector<HistoryStep> fz_history(const LabelledPath& lp);
std::vector<HistoryStep> ds_history(const LabelledPath& lp);
std::vector<HistoryStep> ds_variant_history(const LabelledPath& lp);
std::vector<HistoryStep> history(Bijection b, const LabelledPath& lp);

nlohmann::ordered_json history_to_json(const std::vector<HistoryStep>& h);

}  // namespace permcf
