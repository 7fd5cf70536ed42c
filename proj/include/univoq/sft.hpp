#pragma once

#include <univoq/expansion.hpp>

#include <iosfwd>
#include <optional>

namespace univoq {

enum class SftMode { StrictU, ClosedV, ClosedW };

// Window subshift specification: length-n windows are compared against a
// digit-prefix bound b (alpha-prefix for StrictU/ClosedV, beta-prefix for
// ClosedW). StrictU keeps windows w with reflect(b) < w < b, the closed modes
// keep reflect(b) <= w <= b.
struct ForbiddenSpec {
    size_t window;
    SftMode mode;
    Word bound;  // length == window
    Alphabet alphabet;

    bool allows(const Word& w) const;
    // predicate on a window given by digit accessor (0-based within window)
    bool allows_window(const int* w) const;
    std::string to_json() const;
};

ForbiddenSpec build_spec(const AlgebraicNumber& q, const Alphabet& alphabet, size_t n,
                         SftMode mode);
ForbiddenSpec spec_from_bound(Word bound, SftMode mode);

// Labeled directed multigraph with SCC data.
class EdgeGraph {
public:
    struct Edge {
        int label;
        size_t to;
    };

    size_t vertex_count() const { return adj_.size(); }
    size_t edge_count() const;
    const std::vector<Edge>& out_edges(size_t v) const { return adj_[v]; }
    const std::optional<Word>& vertex_word(size_t v) const { return words_[v]; }

    size_t add_vertex(std::optional<Word> w = std::nullopt);
    void add_edge(size_t from, size_t to, int label);

    // SCC ids (computed lazily); vertices on biinfinite walks are those that
    // can reach and be reached from a cycle.
    const std::vector<int>& scc_ids() const;
    size_t scc_count() const;
    size_t nontrivial_scc_count() const;
    const std::vector<bool>& walk_supporting() const;
    bool has_biinfinite_walk() const;

    void write_dot(std::ostream& os) const;

private:
    void compute_sccs() const;
    std::vector<std::vector<Edge>> adj_;
    std::vector<std::optional<Word>> words_;
    mutable std::vector<int> scc_;
    mutable std::vector<bool> support_;
    mutable size_t scc_count_ = 0;
    mutable size_t nontrivial_ = 0;
    mutable bool scc_done_ = false;
};

struct BlockCount {
    size_t length;
    Int count;
};

// De Bruijn realization: vertices are (n-1)-words incident to an allowed
// n-word, edges are the allowed n-words.
EdgeGraph build_graph_naive(const ForbiddenSpec& spec, size_t vertex_cap = size_t(1) << 22);

// Suffix-tracking automaton over the bound word and its reflection; state
// count at most 2n+1, same biinfinite language as the naive graph.
EdgeGraph build_graph_automaton(const ForbiddenSpec& spec);

// Number of distinct length-k words on biinfinite walks. Works for both
// graph realizations; the automaton is deduplicated by determinization.
BlockCount count_blocks(const EdgeGraph& g, size_t k);

// Independent enumeration oracle: fixed-point pruning of (n-1)-word states,
// then direct word enumeration.
BlockCount brute_force_blocks(const ForbiddenSpec& spec, size_t k,
                              size_t word_cap = size_t(1) << 24);

// language(a) subseteq language(b)
bool sft_includes(const ForbiddenSpec& a, const ForbiddenSpec& b,
                  size_t word_cap = size_t(1) << 24);

// Smallest n <= cap with alpha-prefix(p) lexicographically above
// beta-prefix(q); requires q < p.
std::optional<size_t> find_separating_depth(const AlgebraicNumber& q, const AlgebraicNumber& p,
                                            const Alphabet& alphabet, size_t cap);

}  // namespace univoq
