#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace permcf {

// A permutation of [n] in one-line form. Indices and values are 1-based at the API.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> word);
    static Permutation identity(int n);

    int size() const { return static_cast<int>(word_.size()); }
    int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }
    int inv(int i) const { return inv_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& word() const { return word_; }
    Permutation inverse() const;

    // "9 3 7 4 6 11 5 8 10 1 2"
    std::string to_string() const;
    // "(1,9,10)(2,3,7,5,6,11)(4)(8)"
    std::string to_cycle_string() const;
    // Accepts word form, or cycle form when the text starts with '('. Cycle form
    // needs every point listed, since the size is otherwise ambiguous.
    static Permutation parse(std::string_view text);

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.word_ == b.word_; }
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.word_ < b.word_; }

private:
    std::vector<int> word_;
    std::vector<int> inv_;
};

enum class DPermClass { All, ESemiderangement, OSemiderangement, Derangement, Cycle };

std::string_view to_string(DPermClass c);
DPermClass dperm_class_from_string(std::string_view s);

std::uint64_t factorial(int n);

// Visits S_n in lexicographic order of the word.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn);
std::vector<Permutation> permutations(int n);
// The rank-th permutation in lexicographic order (0-based).
Permutation unrank_permutation(int n, std::uint64_t rank);
// Visits ranks [first, last) of the lexicographic order, for splitting work.
void for_each_permutation_in_range(int n, std::uint64_t first, std::uint64_t last,
                                   const std::function<void(const Permutation&)>& fn);

bool is_dpermutation(const Permutation& sigma);
bool in_dperm_class(const Permutation& sigma, DPermClass cls);
// Lexicographic order; pruned backtracking over admissible values at each position.
void for_each_dpermutation(int two_n, DPermClass cls, const std::function<void(const Permutation&)>& fn);
std::vector<Permutation> d_permutations(int two_n, DPermClass cls = DPermClass::All);

// Cycles, each starting at its minimum, sorted by minimum.
std::vector<std::vector<int>> cycles(const Permutation& sigma);
int cyc(const Permutation& sigma);

class LaguerreDigraph {
public:
    explicit LaguerreDigraph(int n = 0);

    int size() const { return n_; }
    // 0 means no successor / predecessor.
    int succ(int u) const { return succ_.at(static_cast<std::size_t>(u)); }
    int pred(int v) const { return pred_.at(static_cast<std::size_t>(v)); }
    int edge_count() const { return edges_; }

    // Throws if u already has an out-edge or v an in-edge.
    void add_edge(int u, int v);
    // True iff adding u -> v would turn a path into a cycle (v is the start of u's path).
    bool would_close_cycle(int u, int v) const;

    struct PathComponent {
        int initial;
        int final;
        std::vector<int> interior;
        friend bool operator==(const PathComponent&, const PathComponent&) = default;
    };
    struct Components {
        std::vector<int> loops;
        std::vector<std::vector<int>> cycles;  // length >= 2, starting at minimum
        std::vector<PathComponent> paths;      // at least one edge
        std::vector<int> isolated;
    };
    Components components() const;

    friend bool operator==(const LaguerreDigraph& a, const LaguerreDigraph& b) {
        return a.n_ == b.n_ && a.succ_ == b.succ_;
    }

private:
    int n_;
    std::vector<int> succ_, pred_;
    int edges_ = 0;
};

LaguerreDigraph laguerre_of(const Permutation& sigma);
LaguerreDigraph restrict_by_source(const Permutation& sigma, const std::vector<int>& sources);
LaguerreDigraph restrict_by_target(const Permutation& sigma, const std::vector<int>& targets);

}  // namespace permcf
