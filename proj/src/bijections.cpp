#include "permcf/bijections.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "permcf/stats.hpp"

namespace permcf {

std::vector<int> ltr_inv_table(const std::vector<int>& x) {
    std::vector<int> p(x.size(), 0);
    for (std::size_t a = 0; a < x.size(); ++a)
        for (std::size_t b = 0; b < a; ++b)
            if (x[b] > x[a]) ++p[a];
    return p;
}

std::vector<int> rtl_inv_table(const std::vector<int>& x) {
    std::vector<int> q(x.size(), 0);
    for (std::size_t a = 0; a < x.size(); ++a)
        for (std::size_t b = a + 1; b < x.size(); ++b)
            if (x[b] < x[a]) ++q[a];
    return q;
}

namespace {

// Removes and returns the (k+1)-th smallest element of the sorted vector.
int take_smallest(std::vector<int>& sorted, int k) {
    if (k < 0 || k >= static_cast<int>(sorted.size()))
        throw std::invalid_argument("inversion-table entry " + std::to_string(k) + " out of bounds");
    int v = sorted[static_cast<std::size_t>(k)];
    sorted.erase(sorted.begin() + k);
    return v;
}

int take_largest(std::vector<int>& sorted, int k) {
    return take_smallest(sorted, static_cast<int>(sorted.size()) - 1 - k);
}

void check_table_length(const std::vector<int>& values, const std::vector<int>& t) {
    if (values.size() != t.size()) throw std::invalid_argument("table length differs from set size");
}

}  // namespace

std::vector<int> reconstruct_ltr(std::vector<int> values, const std::vector<int>& p) {
    check_table_length(values, p);
    std::sort(values.begin(), values.end());
    std::vector<int> x(p.size());
    for (std::size_t a = p.size(); a-- > 0;) {
        if (p[a] > static_cast<int>(a)) throw std::invalid_argument("ltr table entry exceeds its position");
        x[a] = take_largest(values, p[a]);
    }
    return x;
}

std::vector<int> reconstruct_rtl(std::vector<int> values, const std::vector<int>& q) {
    check_table_length(values, q);
    std::sort(values.begin(), values.end());
    std::vector<int> x(q.size());
    for (std::size_t a = 0; a < q.size(); ++a) x[a] = take_smallest(values, q[a]);
    return x;
}

std::map<int, int> value_ltr_inv_table(const std::vector<int>& x) {
    auto p = ltr_inv_table(x);
    std::map<int, int> t;
    for (std::size_t a = 0; a < x.size(); ++a) t[x[a]] = p[a];
    return t;
}

std::map<int, int> value_rtl_inv_table(const std::vector<int>& x) {
    auto q = rtl_inv_table(x);
    std::map<int, int> t;
    for (std::size_t a = 0; a < x.size(); ++a) t[x[a]] = q[a];
    return t;
}

std::vector<int> reconstruct_value_ltr(const std::map<int, int>& table) {
    // Largest value first: value v sits after exactly table[v] of the larger ones.
    std::vector<int> x;
    for (auto it = table.rbegin(); it != table.rend(); ++it) {
        if (it->second < 0 || it->second > static_cast<int>(x.size()))
            throw std::invalid_argument("value table entry out of bounds at value " + std::to_string(it->first));
        x.insert(x.begin() + it->second, it->first);
    }
    return x;
}

std::vector<int> reconstruct_value_rtl(const std::map<int, int>& table) {
    // Smallest value first: value v sits before exactly table[v] of the smaller ones.
    std::vector<int> x;
    for (const auto& [v, q] : table) {
        if (q < 0 || q > static_cast<int>(x.size()))
            throw std::invalid_argument("value table entry out of bounds at value " + std::to_string(v));
        x.insert(x.end() - q, v);
    }
    return x;
}

std::string_view to_string(Bijection b) {
    switch (b) {
        case Bijection::FZ: return "fz";
        case Bijection::DS: return "ds";
        case Bijection::DSVariant: return "dsv";
    }
    return "?";
}

Bijection bijection_from_string(std::string_view s) {
    for (auto b : {Bijection::FZ, Bijection::DS, Bijection::DSVariant})
        if (to_string(b) == s) return b;
    throw std::invalid_argument("unknown bijection '" + std::string(s) + "'");
}

Ruleset ruleset_of(Bijection b) { return b == Bijection::FZ ? Ruleset::Permutation : Ruleset::DPermutation; }

namespace {

void require_valid(const LabelledPath& lp, Ruleset r) {
    auto chk = check_labelled(lp, r);
    if (!chk.ok) {
        std::string where = chk.index ? " at step " + std::to_string(chk.index) : "";
        throw std::invalid_argument("invalid labelled path" + where + ": " + chk.reason);
    }
}

void require_dperm(const Permutation& sigma) {
    if (sigma.size() % 2 != 0 || !is_dpermutation(sigma)) throw std::domain_error("not a D-permutation");
}

int step_index(int i) { return i - 1; }

}  // namespace

LabelledPath fz_forward(const Permutation& sigma) {
    const int n = sigma.size();
    LabelledPath lp{{PathKind::ColouredMotzkin, {}}, {}};
    for (int i = 1; i <= n; ++i) {
        switch (cycle_class(sigma, i)) {
            case CycleClass::Cval: lp.path.steps.push_back(Step::Rise); break;
            case CycleClass::Cpeak: lp.path.steps.push_back(Step::Fall); break;
            case CycleClass::Cdfall: lp.path.steps.push_back(Step::Level1); break;
            case CycleClass::Cdrise: lp.path.steps.push_back(Step::Level2); break;
            case CycleClass::Fix: lp.path.steps.push_back(Step::Level3); break;
        }
        int xi = 0;
        if (sigma(i) > i)
            xi = unest(sigma, i);
        else if (sigma(i) < i)
            xi = lnest(sigma, i);
        lp.labels.push_back(xi);
    }
    return lp;
}

Permutation fz_inverse(const LabelledPath& lp) {
    require_valid(lp, Ruleset::Permutation);
    const auto& st = lp.path.steps;
    const int n = static_cast<int>(st.size());
    std::vector<int> F, Fv, G, Gv, F_labels, G_labels;
    std::vector<int> w(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
        Step s = st[static_cast<std::size_t>(step_index(i))];
        int xi = lp.labels[static_cast<std::size_t>(step_index(i))];
        if (s == Step::Rise || s == Step::Level2) {
            F.push_back(i);
            F_labels.push_back(xi);
        }
        if (s == Step::Fall || s == Step::Level1) {
            G.push_back(i);
            G_labels.push_back(xi);
        }
        if (s == Step::Fall || s == Step::Level2) Fv.push_back(i);
        if (s == Step::Rise || s == Step::Level1) Gv.push_back(i);
        if (s == Step::Level3) w[static_cast<std::size_t>(i - 1)] = i;
    }
    auto xf = reconstruct_ltr(Fv, F_labels);
    auto xg = reconstruct_rtl(Gv, G_labels);
    for (std::size_t a = 0; a < F.size(); ++a) w[static_cast<std::size_t>(F[a] - 1)] = xf[a];
    for (std::size_t a = 0; a < G.size(); ++a) w[static_cast<std::size_t>(G[a] - 1)] = xg[a];
    return Permutation(std::move(w));
}

std::vector<int> fz_order(const StepSeq& p) {
    std::vector<int> H, G, F;
    for (int i = 1; i <= static_cast<int>(p.steps.size()); ++i) {
        Step s = p.steps[static_cast<std::size_t>(i - 1)];
        if (s == Step::Level3) H.push_back(i);
        if (s == Step::Fall || s == Step::Level1) G.push_back(i);
        if (s == Step::Rise || s == Step::Level2) F.push_back(i);
    }
    std::vector<int> order = H;
    order.insert(order.end(), G.begin(), G.end());
    order.insert(order.end(), F.rbegin(), F.rend());
    return order;
}

LabelledPath ds_forward(const Permutation& sigma) {
    require_dperm(sigma);
    const int n = sigma.size();
    LabelledPath lp{{PathKind::AlmostDyck, {}}, {}};
    for (int i = 1; i <= n; ++i) {
        lp.path.steps.push_back(sigma.inv(i) % 2 == 0 ? Step::Rise : Step::Fall);
        int xi;
        if (sigma(i) == i)
            xi = psnest(sigma, i);
        else if (i % 2 == 0)
            xi = lnest(sigma, i);
        else
            xi = unest(sigma, i);
        lp.labels.push_back(xi);
    }
    return lp;
}

namespace {

struct DsSets {
    std::vector<int> rise_values, fall_values;  // F', G'
};

DsSets ds_sets(const StepSeq& p) {
    DsSets s;
    for (int i = 1; i <= static_cast<int>(p.steps.size()); ++i)
        (p.steps[static_cast<std::size_t>(i - 1)] == Step::Rise ? s.rise_values : s.fall_values).push_back(i);
    return s;
}

void require_even_length(const LabelledPath& lp) {
    if (lp.path.steps.size() % 2 != 0) throw std::invalid_argument("D-permutation paths have even length");
}

}  // namespace

Permutation ds_inverse(const LabelledPath& lp) {
    require_valid(lp, Ruleset::DPermutation);
    require_even_length(lp);
    const int two_n = static_cast<int>(lp.path.steps.size());
    auto sets = ds_sets(lp.path);
    if (static_cast<int>(sets.rise_values.size()) * 2 != two_n)
        throw std::invalid_argument("path does not have n rises");
    std::vector<int> q, p;
    for (int a = 1; 2 * a <= two_n; ++a) {
        q.push_back(lp.labels[static_cast<std::size_t>(2 * a - 1)]);
        p.push_back(lp.labels[static_cast<std::size_t>(2 * a - 2)]);
    }
    auto even = reconstruct_rtl(sets.rise_values, q);
    auto odd = reconstruct_ltr(sets.fall_values, p);
    std::vector<int> w(static_cast<std::size_t>(two_n));
    for (std::size_t a = 0; a < even.size(); ++a) {
        w[2 * a + 1] = even[a];
        w[2 * a] = odd[a];
    }
    return Permutation(std::move(w));
}

std::vector<int> ds_order(int two_n) {
    std::vector<int> order;
    for (int u = 2; u <= two_n; u += 2) order.push_back(u);
    for (int u = two_n - (two_n % 2 == 0 ? 1 : 0); u >= 1; u -= 2) order.push_back(u);
    return order;
}

LabelledPath ds_variant_forward(const Permutation& sigma) {
    require_dperm(sigma);
    const int n = sigma.size();
    LabelledPath lp{{PathKind::AlmostDyck, {}}, {}};
    for (int i = 1; i <= n; ++i) {
        bool even_pre = sigma.inv(i) % 2 == 0;
        lp.path.steps.push_back(even_pre ? Step::Rise : Step::Fall);
        int xi;
        if (sigma(i) == i)
            xi = psnest(sigma, i);
        else if (even_pre)
            xi = lnest_p(sigma, i);
        else
            xi = unest_p(sigma, i);
        lp.labels.push_back(xi);
    }
    return lp;
}

Permutation ds_variant_inverse(const LabelledPath& lp) {
    require_valid(lp, Ruleset::DPermutation);
    require_even_length(lp);
    const int two_n = static_cast<int>(lp.path.steps.size());
    auto sets = ds_sets(lp.path);
    if (static_cast<int>(sets.rise_values.size()) * 2 != two_n)
        throw std::invalid_argument("path does not have n rises");
    std::map<int, int> even_table, odd_table;
    for (int v : sets.rise_values) even_table[v] = lp.labels[static_cast<std::size_t>(v - 1)];
    for (int v : sets.fall_values) odd_table[v] = lp.labels[static_cast<std::size_t>(v - 1)];
    auto even = reconstruct_value_rtl(even_table);
    auto odd = reconstruct_value_ltr(odd_table);
    std::vector<int> w(static_cast<std::size_t>(two_n));
    for (std::size_t a = 0; a < even.size(); ++a) {
        w[2 * a + 1] = even[a];
        w[2 * a] = odd[a];
    }
    return Permutation(std::move(w));
}

std::vector<int> ds_variant_order(const StepSeq& p) {
    auto sets = ds_sets(p);
    std::vector<int> order = sets.fall_values;
    order.insert(order.end(), sets.rise_values.rbegin(), sets.rise_values.rend());
    return order;
}

LabelledPath forward(Bijection b, const Permutation& sigma) {
    switch (b) {
        case Bijection::FZ: return fz_forward(sigma);
        case Bijection::DS: return ds_forward(sigma);
        case Bijection::DSVariant: return ds_variant_forward(sigma);
    }
    throw std::logic_error("unreachable");
}

Permutation inverse(Bijection b, const LabelledPath& lp) {
    switch (b) {
        case Bijection::FZ: return fz_inverse(lp);
        case Bijection::DS: return ds_inverse(lp);
        case Bijection::DSVariant: return ds_variant_inverse(lp);
    }
    throw std::logic_error("unreachable");
}

namespace {

class HistoryBuilder {
public:
    explicit HistoryBuilder(int n) : g_(n) {}

    void insert(int vertex, char stage, int from, int to, int closing_choices = -1) {
        HistoryStep s;
        s.vertex = vertex;
        s.stage = stage;
        s.edge = {from, to};
        s.closes_cycle = from != to && g_.would_close_cycle(from, to);
        s.closing_choices = closing_choices;
        g_.add_edge(from, to);
        s.snapshot = g_;
        steps_.push_back(std::move(s));
    }

    const LaguerreDigraph& graph() const { return g_; }
    std::vector<HistoryStep> take() { return std::move(steps_); }

private:
    LaguerreDigraph g_;
    std::vector<HistoryStep> steps_;
};

[[noreturn]] void invariant_failure(const std::string& what, int vertex) {
    throw std::logic_error(what + " at vertex " + std::to_string(vertex));
}

int count_above(const std::vector<int>& sorted, int y) {
    return static_cast<int>(sorted.end() - std::upper_bound(sorted.begin(), sorted.end(), y));
}

}  // namespace

std::vector<HistoryStep> fz_history(const LabelledPath& lp) {
    require_valid(lp, Ruleset::Permutation);
    const auto& st = lp.path.steps;
    const int n = static_cast<int>(st.size());
    const auto h = heights(lp.path);
    auto label = [&](int i) { return lp.labels[static_cast<std::size_t>(i - 1)]; };
    auto step = [&](int i) { return st[static_cast<std::size_t>(i - 1)]; };

    std::vector<int> Fv, Gv;
    for (int i = 1; i <= n; ++i) {
        if (step(i) == Step::Fall || step(i) == Step::Level2) Fv.push_back(i);
        if (step(i) == Step::Rise || step(i) == Step::Level1) Gv.push_back(i);
    }
    HistoryBuilder hb(n);
    for (int u : fz_order(lp.path)) {
        Step s = step(u);
        if (s == Step::Level3) {
            hb.insert(u, 'A', u, u);
        } else if (s == Step::Fall || s == Step::Level1) {
            int target = take_smallest(Gv, label(u));
            if (target >= u) invariant_failure("anti-excedance mapped upward", u);
            hb.insert(u, 'B', u, target);
        } else {
            int closing = -1;
            if (s == Step::Rise) {
                int hprev = h[static_cast<std::size_t>(u - 1)];
                if (count_above(Fv, u) != hprev + 1) invariant_failure("large-target count differs from h+1", u);
                closing = 0;
                for (int xi = 0; xi <= hprev; ++xi) {
                    int cand = Fv[Fv.size() - 1 - static_cast<std::size_t>(xi)];
                    if (hb.graph().would_close_cycle(u, cand)) ++closing;
                }
            }
            int target = take_largest(Fv, label(u));
            if (target <= u) invariant_failure("excedance mapped downward", u);
            hb.insert(u, 'C', u, target, closing);
        }
    }
    return hb.take();
}

std::vector<HistoryStep> ds_history(const LabelledPath& lp) {
    require_valid(lp, Ruleset::DPermutation);
    require_even_length(lp);
    const int two_n = static_cast<int>(lp.path.steps.size());
    const auto h = heights(lp.path);
    auto label = [&](int i) { return lp.labels[static_cast<std::size_t>(i - 1)]; };
    auto sets = ds_sets(lp.path);
    auto& Fv = sets.rise_values;
    auto& Gv = sets.fall_values;
    if (static_cast<int>(Fv.size()) * 2 != two_n) throw std::invalid_argument("path does not have n rises");

    HistoryBuilder hb(two_n);
    for (int u : ds_order(two_n)) {
        if (u % 2 == 0) {
            int target = take_smallest(Fv, label(u));
            if (target > u) invariant_failure("even position mapped upward", u);
            hb.insert(u, 'A', u, target);
            continue;
        }
        int closing = -1;
        if (lp.path.steps[static_cast<std::size_t>(u - 1)] == Step::Rise) {
            int bound = ceil_half(h[static_cast<std::size_t>(u - 1)]);
            if (count_above(Gv, u) != bound + 1) invariant_failure("large-target count differs from f_y", u);
            closing = 0;
            for (int xi = 0; xi <= bound; ++xi) {
                int cand = Gv[Gv.size() - 1 - static_cast<std::size_t>(xi)];
                if (hb.graph().would_close_cycle(u, cand)) ++closing;
            }
        }
        int target = take_largest(Gv, label(u));
        if (target < u) invariant_failure("odd position mapped downward", u);
        hb.insert(u, 'B', u, target, closing);
    }
    return hb.take();
}

std::vector<HistoryStep> ds_variant_history(const LabelledPath& lp) {
    require_valid(lp, Ruleset::DPermutation);
    require_even_length(lp);
    const int two_n = static_cast<int>(lp.path.steps.size());
    const auto h = heights(lp.path);
    auto label = [&](int i) { return lp.labels[static_cast<std::size_t>(i - 1)]; };
    std::vector<int> odd_pos, even_pos;
    for (int i = 1; i <= two_n; ++i) (i % 2 == 0 ? even_pos : odd_pos).push_back(i);

    HistoryBuilder hb(two_n);
    for (int v : ds_variant_order(lp.path)) {
        if (lp.path.steps[static_cast<std::size_t>(v - 1)] == Step::Fall) {
            int pre = take_smallest(odd_pos, label(v));
            if (pre > v) invariant_failure("odd preimage above its value", v);
            hb.insert(v, 'A', pre, v);
            continue;
        }
        int closing = -1;
        if (v % 2 == 1) {
            int bound = ceil_half(h[static_cast<std::size_t>(v - 1)]);
            if (count_above(even_pos, v) != bound + 1) invariant_failure("large-preimage count differs from f_y", v);
            closing = 0;
            for (int xi = 0; xi <= bound; ++xi) {
                int cand = even_pos[even_pos.size() - 1 - static_cast<std::size_t>(xi)];
                if (hb.graph().would_close_cycle(cand, v)) ++closing;
            }
        }
        int pre = take_largest(even_pos, label(v));
        if (pre < v) invariant_failure("even preimage below its value", v);
        hb.insert(v, 'B', pre, v, closing);
    }
    return hb.take();
}

std::vector<HistoryStep> history(Bijection b, const LabelledPath& lp) {
    switch (b) {
        case Bijection::FZ: return fz_history(lp);
        case Bijection::DS: return ds_history(lp);
        case Bijection::DSVariant: return ds_variant_history(lp);
    }
    throw std::logic_error("unreachable");
}

nlohmann::ordered_json history_to_json(const std::vector<HistoryStep>& h) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& s : h) {
        nlohmann::ordered_json j;
        j["vertex"] = s.vertex;
        j["stage"] = std::string(1, s.stage);
        j["edge"] = {s.edge.first, s.edge.second};
        j["closes_cycle"] = s.closes_cycle;
        arr.push_back(std::move(j));
    }
    return arr;
}

}  // namespace permcf
