#include "permcf/paths.hpp"

#include <sstream>
#include <stdexcept>

namespace permcf {

std::string_view to_string(Step s) {
    switch (s) {
        case Step::Rise: return "U";
        case Step::Fall: return "D";
        case Step::Level: return "L";
        case Step::Level1: return "L1";
        case Step::Level2: return "L2";
        case Step::Level3: return "L3";
        case Step::LongLevel: return "LL";
    }
    return "?";
}

Step step_from_string(std::string_view tok) {
    for (auto s : {Step::Rise, Step::Fall, Step::Level, Step::Level1, Step::Level2, Step::Level3, Step::LongLevel})
        if (to_string(s) == tok) return s;
    throw std::invalid_argument("unknown step '" + std::string(tok) + "'");
}

std::string_view to_string(PathKind k) {
    switch (k) {
        case PathKind::Dyck: return "dyck";
        case PathKind::Motzkin: return "motzkin";
        case PathKind::ColouredMotzkin: return "coloured-motzkin";
        case PathKind::Schroder: return "schroder";
        case PathKind::ZeroSchroder: return "0-schroder";
        case PathKind::AlmostDyck: return "almost-dyck";
    }
    return "?";
}

PathKind path_kind_from_string(std::string_view s) {
    for (auto k : {PathKind::Dyck, PathKind::Motzkin, PathKind::ColouredMotzkin, PathKind::Schroder,
                   PathKind::ZeroSchroder, PathKind::AlmostDyck})
        if (to_string(k) == s) return k;
    throw std::invalid_argument("unknown path kind '" + std::string(s) + "'");
}

int height_change(Step s) {
    if (s == Step::Rise) return 1;
    if (s == Step::Fall) return -1;
    return 0;
}

bool is_level(Step s) { return s == Step::Level || s == Step::Level1 || s == Step::Level2 || s == Step::Level3; }

int StepSeq::length() const {
    int len = 0;
    for (auto s : steps) len += s == Step::LongLevel ? 2 : 1;
    return len;
}

std::string StepSeq::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (i) out += ' ';
        out += permcf::to_string(steps[i]);
    }
    return out;
}

namespace {

bool step_allowed(PathKind k, Step s) {
    switch (k) {
        case PathKind::Dyck:
        case PathKind::AlmostDyck: return s == Step::Rise || s == Step::Fall;
        case PathKind::Motzkin: return s == Step::Rise || s == Step::Fall || s == Step::Level;
        case PathKind::ColouredMotzkin:
            return s == Step::Rise || s == Step::Fall || s == Step::Level1 || s == Step::Level2 || s == Step::Level3;
        case PathKind::Schroder:
        case PathKind::ZeroSchroder: return s == Step::Rise || s == Step::Fall || s == Step::LongLevel;
    }
    return false;
}

[[noreturn]] void bad_path(std::size_t i, const std::string& why) {
    throw std::invalid_argument("invalid path at step " + std::to_string(i + 1) + ": " + why);
}

}  // namespace

std::vector<int> heights(const StepSeq& p) {
    std::vector<int> h{0};
    const bool almost = p.kind == PathKind::AlmostDyck;
    for (std::size_t i = 0; i < p.steps.size(); ++i) {
        Step s = p.steps[i];
        if (!step_allowed(p.kind, s)) bad_path(i, "step " + std::string(to_string(s)) + " not allowed");
        if (s == Step::LongLevel && p.kind == PathKind::ZeroSchroder && h.back() != 0)
            bad_path(i, "long level away from height 0");
        int next = h.back() + height_change(s);
        if (next < (almost ? -1 : 0)) bad_path(i, "path goes too low");
        if (almost && h.back() == -1 && s != Step::Rise) bad_path(i, "dip below 0 not recovered at once");
        h.push_back(next);
    }
    if (h.back() != 0) throw std::invalid_argument("invalid path: does not end at height 0");
    return h;
}

void validate(const StepSeq& p) { (void)heights(p); }

bool is_valid(const StepSeq& p) {
    try {
        validate(p);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

StepSeq psi(const StepSeq& p) {
    if (p.kind != PathKind::AlmostDyck) throw std::invalid_argument("psi needs an almost-Dyck path");
    auto h = heights(p);
    StepSeq out{PathKind::ZeroSchroder, {}};
    for (std::size_t i = 0; i < p.steps.size(); ++i) {
        if (p.steps[i] == Step::Fall && h[i] == 0) {
            out.steps.push_back(Step::LongLevel);
            ++i;  // the following rise back to 0 is absorbed
        } else {
            out.steps.push_back(p.steps[i]);
        }
    }
    return out;
}

StepSeq psi_inv(const StepSeq& p) {
    if (p.kind != PathKind::ZeroSchroder) throw std::invalid_argument("psi_inv needs a 0-Schroder path");
    validate(p);
    StepSeq out{PathKind::AlmostDyck, {}};
    for (auto s : p.steps) {
        if (s == Step::LongLevel) {
            out.steps.push_back(Step::Fall);
            out.steps.push_back(Step::Rise);
        } else {
            out.steps.push_back(s);
        }
    }
    return out;
}

int ceil_half(int h) { return h >= 0 ? (h + 1) / 2 : -((-h) / 2); }

std::string LabelledPath::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < path.steps.size(); ++i) {
        if (i) out += ' ';
        out += permcf::to_string(path.steps[i]);
        out += ':';
        out += std::to_string(labels.at(i));
    }
    return out;
}

LabelledPath LabelledPath::parse(std::string_view text, PathKind kind) {
    LabelledPath lp;
    lp.path.kind = kind;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
        auto colon = tok.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("labelled step needs STEP:LABEL, got '" + tok + "'");
        lp.path.steps.push_back(step_from_string(tok.substr(0, colon)));
        try {
            std::size_t used = 0;
            lp.labels.push_back(std::stoi(tok.substr(colon + 1), &used));
            if (used != tok.size() - colon - 1) throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            throw std::invalid_argument("bad label in '" + tok + "'");
        }
    }
    return lp;
}

nlohmann::ordered_json LabelledPath::to_json() const {
    nlohmann::ordered_json j;
    j["kind"] = std::string(permcf::to_string(path.kind));
    j["steps"] = path.to_string();
    j["labels"] = labels;
    j["heights"] = heights(path);
    j["text"] = to_string();
    return j;
}

int label_bound(Ruleset r, Step s, int h) {
    if (r == Ruleset::Permutation) {
        switch (s) {
            case Step::Rise: return h;
            case Step::Fall: return h - 1;
            case Step::Level1:
            case Step::Level2: return h - 1;
            case Step::Level3: return 0;
            default: return -1;
        }
    }
    switch (s) {
        case Step::Rise: return ceil_half(h);
        case Step::Fall: return ceil_half(h - 1);
        default: return -1;
    }
}

PathKind ruleset_kind(Ruleset r) {
    return r == Ruleset::Permutation ? PathKind::ColouredMotzkin : PathKind::AlmostDyck;
}

LabelCheck check_labelled(const LabelledPath& lp, Ruleset r) {
    if (lp.path.kind != ruleset_kind(r)) return {false, 0, "wrong path kind"};
    if (lp.labels.size() != lp.path.steps.size()) return {false, 0, "label count differs from step count"};
    std::vector<int> h;
    try {
        h = heights(lp.path);
    } catch (const std::invalid_argument& e) {
        return {false, 0, e.what()};
    }
    for (std::size_t i = 0; i < lp.labels.size(); ++i) {
        int bound = label_bound(r, lp.path.steps[i], h[i]);
        int xi = lp.labels[i];
        if (xi < 0 || xi > bound)
            return {false, static_cast<int>(i) + 1,
                    "label " + std::to_string(xi) + " outside 0.." + std::to_string(bound)};
    }
    return {};
}

namespace {

std::vector<Step> alphabet(PathKind k) {
    switch (k) {
        case PathKind::Dyck:
        case PathKind::AlmostDyck: return {Step::Rise, Step::Fall};
        case PathKind::Motzkin: return {Step::Rise, Step::Fall, Step::Level};
        case PathKind::ColouredMotzkin: return {Step::Rise, Step::Fall, Step::Level1, Step::Level2, Step::Level3};
        case PathKind::Schroder:
        case PathKind::ZeroSchroder: return {Step::Rise, Step::Fall, Step::LongLevel};
    }
    return {};
}

}  // namespace

void enumerate_paths(PathKind kind, int length, const std::function<void(const StepSeq&)>& fn) {
    const auto steps = alphabet(kind);
    const int floor = kind == PathKind::AlmostDyck ? -1 : 0;
    StepSeq cur{kind, {}};
    std::function<void(int, int)> rec = [&](int used, int h) {
        if (used == length) {
            if (h == 0) fn(cur);
            return;
        }
        for (auto s : steps) {
            int w = s == Step::LongLevel ? 2 : 1;
            int next = h + height_change(s);
            if (used + w > length || next < floor) continue;
            if (h == -1 && s != Step::Rise) continue;
            if (s == Step::LongLevel && kind == PathKind::ZeroSchroder && h != 0) continue;
            if (next > length - used - w) continue;  // cannot return to 0
            cur.steps.push_back(s);
            rec(used + w, next);
            cur.steps.pop_back();
        }
    };
    rec(0, 0);
}

void enumerate_labelled(Ruleset r, int length, const std::function<void(const LabelledPath&)>& fn) {
    enumerate_paths(ruleset_kind(r), length, [&](const StepSeq& p) {
        auto h = heights(p);
        LabelledPath lp{p, std::vector<int>(p.steps.size(), 0)};
        std::vector<int> bound(p.steps.size());
        for (std::size_t i = 0; i < p.steps.size(); ++i) {
            bound[i] = label_bound(r, p.steps[i], h[i]);
            if (bound[i] < 0) return;
        }
        // Odometer over the label boxes.
        while (true) {
            fn(lp);
            std::size_t i = 0;
            while (i < bound.size() && lp.labels[i] == bound[i]) lp.labels[i++] = 0;
            if (i == bound.size()) return;
            ++lp.labels[i];
        }
    });
}

}  // namespace permcf
