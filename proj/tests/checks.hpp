// Per-permutation property checks for the bijections, shared by the unit
// tests and the acceptance runner. Each returns an empty string on success
// and a short description of the first failure otherwise.
#pragma once

#include <set>
#include <sstream>
#include <string>

#include "permcf/bijections.hpp"
#include "permcf/stats.hpp"

namespace checks {

using namespace permcf;

inline std::string describe(Bijection b, const Permutation& s, const std::string& what) {
    return std::string(to_string(b)) + " " + s.to_string() + ": " + what;
}

inline std::string roundtrip_from_perm(Bijection b, const Permutation& s) {
    LabelledPath lp = forward(b, s);
    LabelCheck c = check_labelled(lp, ruleset_of(b));
    if (!c.ok) return describe(b, s, "forward image violates label bounds at step " + std::to_string(c.index));
    if (!(inverse(b, lp) == s)) return describe(b, s, "inverse(forward) differs");
    return {};
}

inline std::string roundtrip_from_path(Bijection b, const LabelledPath& lp) {
    Permutation s = inverse(b, lp);
    if (ruleset_of(b) == Ruleset::DPermutation && !is_dpermutation(s))
        return describe(b, s, "inverse image is not a D-permutation");
    if (!(forward(b, s) == lp)) return describe(b, s, "forward(inverse) differs from " + lp.to_string());
    return {};
}

// Vertex whose step carries the label: the source for FZ and DS, the target
// value for the variant.
inline int step_vertex(const HistoryStep& h) { return h.vertex; }

// Expected component structure at the end of the first stages.
inline std::string stage_structure(Bijection b, const Permutation& s, const LaguerreDigraph& g) {
    auto comp = g.components();
    if (!comp.cycles.empty()) return "directed cycle before the final stage";
    auto cls = [&](int i) { return cycle_class(s, i); };
    using C = CycleClass;
    C initial = C::Cpeak, final_ = C::Cval, interior = C::Cdfall;
    if (b == Bijection::DSVariant) {
        initial = C::Cval;
        final_ = C::Cpeak;
        interior = C::Cdrise;
    }
    std::set<int> seen;
    for (int v : comp.loops) {
        seen.insert(v);
        if (cls(v) != C::Fix) return "loop at a non-fixed point";
        if (b == Bijection::DS && v % 2 != 0) return "loop at an odd fixed point";
        if (b == Bijection::DSVariant && v % 2 != 1) return "loop at an even fixed point";
    }
    for (const auto& p : comp.paths) {
        if (cls(p.initial) != initial) return "path starts at the wrong class";
        if (cls(p.final) != final_) return "path ends at the wrong class";
        seen.insert(p.initial);
        seen.insert(p.final);
        for (int v : p.interior) {
            seen.insert(v);
            if (cls(v) != interior) return "path interior has the wrong class";
        }
    }
    for (int v : comp.isolated) {
        seen.insert(v);
        C c = cls(v);
        bool ok = false;
        switch (b) {
            case Bijection::FZ: ok = c == C::Cdrise; break;
            case Bijection::DS: ok = c == C::Cdrise || (c == C::Fix && v % 2 == 1); break;
            case Bijection::DSVariant: ok = c == C::Cdfall || (c == C::Fix && v % 2 == 0); break;
        }
        if (!ok) return "unexpected isolated vertex " + std::to_string(v);
    }
    if (static_cast<int>(seen.size()) != s.size()) return "components do not cover the vertex set";
    return {};
}

// Cycle closers, closure count, stage structure and one-closing-label replay.
inline std::string history_properties(Bijection b, const Permutation& s, bool replay = true) {
    LabelledPath lp = forward(b, s);
    auto hist = history(b, lp);
    const int n = s.size();
    if (static_cast<int>(hist.size()) != n) return describe(b, s, "history length");
    for (std::size_t k = 0; k < hist.size(); ++k)
        if (hist[k].snapshot.edge_count() != static_cast<int>(k) + 1) return describe(b, s, "snapshot edge count");
    if (!(hist.back().snapshot == laguerre_of(s))) return describe(b, s, "final snapshot differs from the digraph");

    std::set<int> closers, minima;
    for (const auto& h : hist)
        if (h.closes_cycle) closers.insert(step_vertex(h));
    for (int i = 1; i <= n; ++i)
        if (is_minval(s, i)) minima.insert(i);
    if (closers != minima) return describe(b, s, "cycle closers differ from cycle-valley minima");
    int nonsingleton = 0;
    for (const auto& c : cycles(s))
        if (c.size() > 1) ++nonsingleton;
    if (static_cast<int>(closers.size()) != nonsingleton) return describe(b, s, "closure count");

    const char last_early = b == Bijection::FZ ? 'B' : 'A';
    LaguerreDigraph early(n);
    for (const auto& h : hist)
        if (h.stage <= last_early) early = h.snapshot;
    if (auto why = stage_structure(b, s, early); !why.empty()) return describe(b, s, why);

    if (!replay) return {};
    // Vary the label of each cycle-valley step over its admissible range and
    // rebuild the history; exactly one value must make that step close a cycle.
    auto h0 = heights(lp.path);
    for (int i = 1; i <= n; ++i) {
        if (cycle_class(s, i) != CycleClass::Cval) continue;
        const std::size_t idx = static_cast<std::size_t>(i - 1);
        const int bound = label_bound(ruleset_of(b), lp.path.steps[idx], h0[idx]);
        int closing = 0;
        for (int xi = 0; xi <= bound; ++xi) {
            LabelledPath alt = lp;
            alt.labels[idx] = xi;
            for (const auto& h : history(b, alt))
                if (step_vertex(h) == i && h.closes_cycle) ++closing;
        }
        if (closing != 1) return describe(b, s, "step " + std::to_string(i) + " has " + std::to_string(closing) + " closing labels");
    }
    return {};
}

// Labels equal the nesting statistics and the crossing complements hold.
inline std::string label_identities(Bijection b, const Permutation& s) {
    LabelledPath lp = forward(b, s);
    auto h = heights(lp.path);
    const int n = s.size();
    for (int i = 1; i <= n; ++i) {
        const std::size_t idx = static_cast<std::size_t>(i - 1);
        const int xi = lp.labels[idx];
        const int before = h[idx], after = h[idx + 1];
        const bool fixed = s(i) == i;
        const Step st = lp.path.steps[idx];
        auto fail = [&](const std::string& what) { return describe(b, s, what + " at " + std::to_string(i)); };
        switch (b) {
            case Bijection::FZ: {
                const int want = s(i) > i ? unest(s, i) : s(i) < i ? lnest(s, i) : 0;
                if (xi != want) return fail("label is not the nesting count");
                switch (cycle_class(s, i)) {
                    case CycleClass::Cval:
                        if (before - xi != ucross(s, i)) return fail("ucross complement");
                        break;
                    case CycleClass::Cdrise:
                        if (before - 1 - xi != ucross(s, i)) return fail("ucross complement");
                        break;
                    case CycleClass::Cpeak:
                    case CycleClass::Cdfall:
                        if (before - 1 - xi != lcross(s, i)) return fail("lcross complement");
                        break;
                    case CycleClass::Fix:
                        if (before != psnest(s, i) || after != before) return fail("fixed-point height");
                        break;
                }
                break;
            }
            case Bijection::DS: {
                const int want = fixed ? psnest(s, i) : i % 2 == 0 ? lnest(s, i) : unest(s, i);
                if (xi != want) return fail("label is not the nesting count");
                const int moved = fixed ? 0 : 1;
                if (st == Step::Rise) {
                    const int lhs = ceil_half(after - 1) - xi;
                    if (i % 2 == 1 && lhs != ucross(s, i)) return fail("odd rise complement");
                    if (i % 2 == 0 && lhs != lcross(s, i) + moved) return fail("even rise complement");
                } else {
                    const int lhs = ceil_half(after) - xi;
                    if (i % 2 == 1 && lhs != ucross(s, i) + moved) return fail("odd fall complement");
                    if (i % 2 == 0 && lhs != lcross(s, i)) return fail("even fall complement");
                }
                break;
            }
            case Bijection::DSVariant: {
                const bool pre_even = s.inv(i) % 2 == 0;
                const int want = fixed ? psnest(s, i) : pre_even ? lnest_p(s, i) : unest_p(s, i);
                if (xi != want) return fail("label is not the variant nesting count");
                if ((st == Step::Rise) != pre_even) return fail("step direction");
                if (pre_even) {
                    if (ceil_half(after - 1) - xi != lcross_p(s, i) + (i % 2 == 0 && !fixed ? 1 : 0))
                        return fail("rise complement");
                } else {
                    if (ceil_half(after) - xi != ucross_p(s, i) + (i % 2 == 1 && !fixed ? 1 : 0))
                        return fail("fall complement");
                }
                break;
            }
        }
    }
    return {};
}

}  // namespace checks
