#include "permcf/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace permcf {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)), inv_(word_.size(), 0) {
    const int n = size();
    for (int i = 1; i <= n; ++i) {
        int v = word_[static_cast<std::size_t>(i - 1)];
        if (v < 1 || v > n || inv_[static_cast<std::size_t>(v - 1)] != 0)
            throw std::invalid_argument("not a permutation word");
        inv_[static_cast<std::size_t>(v - 1)] = i;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::inverse() const { return Permutation(inv_); }

std::string Permutation::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < word_.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(word_[i]);
    }
    return s;
}

std::string Permutation::to_cycle_string() const {
    std::string s;
    for (const auto& c : cycles(*this)) {
        s += '(';
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(c[i]);
        }
        s += ')';
    }
    return s;
}

Permutation Permutation::parse(std::string_view text) {
    std::string t(text);
    auto first = t.find_first_not_of(" \t\n");
    if (first != std::string::npos && t[first] == '(') {
        std::vector<std::vector<int>> cyc_list;
        std::size_t pos = first;
        int n = 0;
        while (pos < t.size()) {
            if (std::isspace(static_cast<unsigned char>(t[pos]))) {
                ++pos;
                continue;
            }
            if (t[pos] != '(') throw std::invalid_argument("malformed cycle notation");
            auto close = t.find(')', pos);
            if (close == std::string::npos) throw std::invalid_argument("unbalanced cycle notation");
            std::string body = t.substr(pos + 1, close - pos - 1);
            std::replace(body.begin(), body.end(), ',', ' ');
            std::istringstream in(body);
            std::vector<int> c;
            for (int v; in >> v;) {
                c.push_back(v);
                n = std::max(n, v);
            }
            if (!in.eof() || c.empty()) throw std::invalid_argument("malformed cycle");
            cyc_list.push_back(std::move(c));
            pos = close + 1;
        }
        std::vector<int> w(static_cast<std::size_t>(n), 0);
        for (const auto& c : cyc_list) {
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (c[i] < 1) throw std::invalid_argument("cycle entry out of range");
                auto& slot = w[static_cast<std::size_t>(c[i] - 1)];
                if (slot != 0) throw std::invalid_argument("repeated point in cycle notation");
                slot = c[(i + 1) % c.size()];
            }
        }
        if (std::find(w.begin(), w.end(), 0) != w.end())
            throw std::invalid_argument("cycle notation must list every point");
        return Permutation(std::move(w));
    }
    std::replace(t.begin(), t.end(), ',', ' ');
    std::istringstream in(t);
    std::vector<int> w;
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad permutation entry '" + tok + "'");
        }
        if (used != tok.size()) throw std::invalid_argument("bad permutation entry '" + tok + "'");
        w.push_back(v);
    }
    return Permutation(std::move(w));
}

std::string_view to_string(DPermClass c) {
    switch (c) {
        case DPermClass::All: return "all";
        case DPermClass::ESemiderangement: return "e";
        case DPermClass::OSemiderangement: return "o";
        case DPermClass::Derangement: return "eo";
        case DPermClass::Cycle: return "cycle";
    }
    return "?";
}

DPermClass dperm_class_from_string(std::string_view s) {
    for (auto c : {DPermClass::All, DPermClass::ESemiderangement, DPermClass::OSemiderangement,
                   DPermClass::Derangement, DPermClass::Cycle})
        if (to_string(c) == s) return c;
    throw std::invalid_argument("unknown D-permutation class '" + std::string(s) + "'");
}

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
    return f;
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
    if (n < 0) throw std::invalid_argument("negative size");
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    do {
        fn(Permutation(w));
    } while (std::next_permutation(w.begin(), w.end()));
}

std::vector<Permutation> permutations(int n) {
    std::vector<Permutation> out;
    for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); });
    return out;
}

Permutation unrank_permutation(int n, std::uint64_t rank) {
    if (rank >= factorial(n)) throw std::out_of_range("rank out of range");
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> w;
    for (int k = n; k >= 1; --k) {
        std::uint64_t f = factorial(k - 1);
        auto idx = static_cast<std::size_t>(rank / f);
        rank %= f;
        w.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return Permutation(std::move(w));
}

void for_each_permutation_in_range(int n, std::uint64_t first, std::uint64_t last,
                                   const std::function<void(const Permutation&)>& fn) {
    last = std::min(last, factorial(n));
    if (first >= last) return;
    std::vector<int> w = unrank_permutation(n, first).word();
    for (std::uint64_t r = first; r < last; ++r) {
        fn(Permutation(w));
        std::next_permutation(w.begin(), w.end());
    }
}

bool is_dpermutation(const Permutation& sigma) {
    const int n = sigma.size();
    if (n % 2 != 0) throw std::domain_error("D-permutations have even size");
    for (int i = 1; i <= n; ++i) {
        if (i % 2 == 1 && sigma(i) < i) return false;
        if (i % 2 == 0 && sigma(i) > i) return false;
    }
    return true;
}

bool in_dperm_class(const Permutation& sigma, DPermClass cls) {
    if (!is_dpermutation(sigma)) return false;
    const int n = sigma.size();
    bool even_fix = false, odd_fix = false;
    for (int i = 1; i <= n; ++i) {
        if (sigma(i) != i) continue;
        (i % 2 == 0 ? even_fix : odd_fix) = true;
    }
    switch (cls) {
        case DPermClass::All: return true;
        case DPermClass::ESemiderangement: return !even_fix;
        case DPermClass::OSemiderangement: return !odd_fix;
        case DPermClass::Derangement: return !even_fix && !odd_fix;
        case DPermClass::Cycle: return cyc(sigma) == 1;
    }
    return false;
}

void for_each_dpermutation(int two_n, DPermClass cls, const std::function<void(const Permutation&)>& fn) {
    if (two_n < 0 || two_n % 2 != 0) throw std::domain_error("D-permutations have even size");
    const bool no_even_fix = cls == DPermClass::ESemiderangement || cls == DPermClass::Derangement ||
                             (cls == DPermClass::Cycle && two_n > 1);
    const bool no_odd_fix = cls == DPermClass::OSemiderangement || cls == DPermClass::Derangement ||
                            (cls == DPermClass::Cycle && two_n > 1);
    std::vector<int> w(static_cast<std::size_t>(two_n), 0);
    std::vector<char> used(static_cast<std::size_t>(two_n) + 1, 0);
    std::function<void(int)> rec = [&](int i) {
        if (i > two_n) {
            Permutation p(w);
            if (cls != DPermClass::Cycle || cyc(p) == 1) fn(p);
            return;
        }
        int lo = i % 2 == 1 ? i : 1;
        int hi = i % 2 == 1 ? two_n : i;
        for (int v = lo; v <= hi; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            if (v == i && ((i % 2 == 0 && no_even_fix) || (i % 2 == 1 && no_odd_fix))) continue;
            used[static_cast<std::size_t>(v)] = 1;
            w[static_cast<std::size_t>(i - 1)] = v;
            rec(i + 1);
            used[static_cast<std::size_t>(v)] = 0;
        }
    };
    rec(1);
}

std::vector<Permutation> d_permutations(int two_n, DPermClass cls) {
    std::vector<Permutation> out;
    for_each_dpermutation(two_n, cls, [&](const Permutation& p) { out.push_back(p); });
    return out;
}

std::vector<std::vector<int>> cycles(const Permutation& sigma) {
    const int n = sigma.size();
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::vector<int>> out;
    for (int s = 1; s <= n; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<int> c;
        for (int u = s; !seen[static_cast<std::size_t>(u)]; u = sigma(u)) {
            seen[static_cast<std::size_t>(u)] = 1;
            c.push_back(u);
        }
        out.push_back(std::move(c));
    }
    return out;
}

int cyc(const Permutation& sigma) { return static_cast<int>(cycles(sigma).size()); }

LaguerreDigraph::LaguerreDigraph(int n)
    : n_(n), succ_(static_cast<std::size_t>(n) + 1, 0), pred_(static_cast<std::size_t>(n) + 1, 0) {}

void LaguerreDigraph::add_edge(int u, int v) {
    if (u < 1 || u > n_ || v < 1 || v > n_) throw std::out_of_range("edge endpoint out of range");
    if (succ(u) != 0) throw std::logic_error("vertex already has an out-edge");
    if (pred(v) != 0) throw std::logic_error("vertex already has an in-edge");
    succ_[static_cast<std::size_t>(u)] = v;
    pred_[static_cast<std::size_t>(v)] = u;
    ++edges_;
}

bool LaguerreDigraph::would_close_cycle(int u, int v) const {
    if (u == v) return true;
    int start = u;
    while (pred(start) != 0) {
        start = pred(start);
        if (start == u) return false;  // u already on a cycle
    }
    return start == v;
}

LaguerreDigraph::Components LaguerreDigraph::components() const {
    Components out;
    std::vector<char> seen(static_cast<std::size_t>(n_) + 1, 0);
    // Paths and isolated vertices are found from their initial vertex.
    for (int v = 1; v <= n_; ++v) {
        if (pred(v) != 0) continue;
        seen[static_cast<std::size_t>(v)] = 1;
        if (succ(v) == 0) {
            out.isolated.push_back(v);
            continue;
        }
        PathComponent p{v, v, {}};
        int u = succ(v);
        while (true) {
            seen[static_cast<std::size_t>(u)] = 1;
            if (succ(u) == 0) break;
            p.interior.push_back(u);
            u = succ(u);
        }
        p.final = u;
        out.paths.push_back(std::move(p));
    }
    // Whatever is left lies on cycles; scanning upward starts each cycle at its minimum.
    for (int v = 1; v <= n_; ++v) {
        if (seen[static_cast<std::size_t>(v)]) continue;
        if (succ(v) == v) {
            seen[static_cast<std::size_t>(v)] = 1;
            out.loops.push_back(v);
            continue;
        }
        std::vector<int> c;
        for (int u = v; !seen[static_cast<std::size_t>(u)]; u = succ(u)) {
            seen[static_cast<std::size_t>(u)] = 1;
            c.push_back(u);
        }
        out.cycles.push_back(std::move(c));
    }
    return out;
}

LaguerreDigraph laguerre_of(const Permutation& sigma) {
    LaguerreDigraph g(sigma.size());
    for (int u = 1; u <= sigma.size(); ++u) g.add_edge(u, sigma(u));
    return g;
}

LaguerreDigraph restrict_by_source(const Permutation& sigma, const std::vector<int>& sources) {
    LaguerreDigraph g(sigma.size());
    for (int u : sources) g.add_edge(u, sigma(u));
    return g;
}

LaguerreDigraph restrict_by_target(const Permutation& sigma, const std::vector<int>& targets) {
    LaguerreDigraph g(sigma.size());
    for (int v : targets) g.add_edge(sigma.inv(v), v);
    return g;
}

}  // namespace permcf
