#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace permcf {

// Level1..Level3 are the coloured level steps; Level is the plain Motzkin one.
enum class Step { Rise, Fall, Level, Level1, Level2, Level3, LongLevel };

enum class PathKind { Dyck, Motzkin, ColouredMotzkin, Schroder, ZeroSchroder, AlmostDyck };

std::string_view to_string(Step s);
Step step_from_string(std::string_view tok);
std::string_view to_string(PathKind k);
PathKind path_kind_from_string(std::string_view s);
int height_change(Step s);
bool is_level(Step s);

struct StepSeq {
    PathKind kind = PathKind::Motzkin;
    std::vector<Step> steps;

    // Abscissa length; a long level counts twice.
    int length() const;
    std::string to_string() const;
    friend bool operator==(const StepSeq&, const StepSeq&) = default;
};

// Heights h_0 .. h_m after each step; throws std::invalid_argument on a path
// that breaks the rules of its kind.
std::vector<int> heights(const StepSeq& p);
void validate(const StepSeq& p);
bool is_valid(const StepSeq& p);

// Replaces each (0,-1,0) dip by a long level at height 0, and back.
StepSeq psi(const StepSeq& almost_dyck);
StepSeq psi_inv(const StepSeq& zero_schroder);

// ceil(h/2) for any integer h, including negative ones.
int ceil_half(int h);

struct LabelledPath {
    StepSeq path;
    std::vector<int> labels;  // one per step

    // "U:0 U:1 L2:1"
    std::string to_string() const;
    static LabelledPath parse(std::string_view text, PathKind kind);
    nlohmann::ordered_json to_json() const;
    friend bool operator==(const LabelledPath&, const LabelledPath&) = default;
};

enum class Ruleset { Permutation, DPermutation };

// Largest admissible label for a step starting at height h; -1 when no label
// is allowed (the step is forbidden there).
int label_bound(Ruleset r, Step s, int h);

struct LabelCheck {
    bool ok = true;
    int index = 0;  // 1-based step index of the first problem
    std::string reason;
};
LabelCheck check_labelled(const LabelledPath& lp, Ruleset r);

PathKind ruleset_kind(Ruleset r);

// All paths of the given abscissa length, in a fixed order.
void enumerate_paths(PathKind kind, int length, const std::function<void(const StepSeq&)>& fn);
// All labelled paths of the given length admissible under the ruleset.
void enumerate_labelled(Ruleset r, int length, const std::function<void(const LabelledPath&)>& fn);

}  // namespace permcf
