#include <univoq/sft.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace univoq {

namespace {

// lexicographic comparison of a window against a bound word, -1/0/+1
int cmp_window(const int* w, const Word& bound) {
    for (size_t i = 0; i < bound.size(); ++i) {
        if (w[i] < bound[i]) return -1;
        if (w[i] > bound[i]) return 1;
    }
    return 0;
}

}  // namespace

bool ForbiddenSpec::allows_window(const int* w) const {
    Word refl = bound.reflected();
    int cu = cmp_window(w, bound);
    int cl = cmp_window(w, refl);
    if (mode == SftMode::StrictU) return cl > 0 && cu < 0;
    return cl >= 0 && cu <= 0;
}

bool ForbiddenSpec::allows(const Word& w) const {
    if (w.size() != window) throw std::invalid_argument("window length mismatch");
    return allows_window(w.digits.data());
}

std::string ForbiddenSpec::to_json() const {
    std::ostringstream os;
    os << "{\"window\":" << window << ",\"mode\":\""
       << (mode == SftMode::StrictU ? "strict_U" : mode == SftMode::ClosedV ? "closed_V"
                                                                            : "closed_W")
       << "\",\"bound\":[";
    for (size_t i = 0; i < bound.size(); ++i) {
        if (i) os << ",";
        os << bound[i];
    }
    os << "],\"M\":" << alphabet.M << "}";
    return os.str();
}

ForbiddenSpec build_spec(const AlgebraicNumber& q, const Alphabet& alphabet, size_t n,
                         SftMode mode) {
    if (n < 1) throw std::invalid_argument("window must be >= 1");
    Word bound = mode == SftMode::ClosedW ? beta_of(q, alphabet, std::max<size_t>(n, 64)).prefix(n)
                                          : quasi_greedy_expansion(q, alphabet).prefix(n);
    return ForbiddenSpec{n, mode, std::move(bound), alphabet};
}

ForbiddenSpec spec_from_bound(Word bound, SftMode mode) {
    Alphabet a(bound.M);
    size_t n = bound.size();
    return ForbiddenSpec{n, mode, std::move(bound), a};
}

size_t EdgeGraph::edge_count() const {
    size_t e = 0;
    for (const auto& v : adj_) e += v.size();
    return e;
}

size_t EdgeGraph::add_vertex(std::optional<Word> w) {
    adj_.emplace_back();
    words_.push_back(std::move(w));
    scc_done_ = false;
    return adj_.size() - 1;
}

void EdgeGraph::add_edge(size_t from, size_t to, int label) {
    adj_[from].push_back({label, to});
    scc_done_ = false;
}

void EdgeGraph::compute_sccs() const {
    if (scc_done_) return;
    size_t n = adj_.size();
    scc_.assign(n, -1);
    scc_count_ = 0;
    // iterative Tarjan
    std::vector<int> index(n, -1), lowlink(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<size_t> stack;
    int next_index = 0;
    struct Frame {
        size_t v;
        size_t edge;
    };
    for (size_t start = 0; start < n; ++start) {
        if (index[start] != -1) continue;
        std::vector<Frame> frames{{start, 0}};
        index[start] = lowlink[start] = next_index++;
        stack.push_back(start);
        on_stack[start] = true;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.edge < adj_[f.v].size()) {
                size_t w = adj_[f.v][f.edge].to;
                ++f.edge;
                if (index[w] == -1) {
                    index[w] = lowlink[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    lowlink[f.v] = std::min(lowlink[f.v], index[w]);
                }
            } else {
                if (lowlink[f.v] == index[f.v]) {
                    for (;;) {
                        size_t w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        scc_[w] = static_cast<int>(scc_count_);
                        if (w == f.v) break;
                    }
                    ++scc_count_;
                }
                size_t child = f.v;
                frames.pop_back();
                if (!frames.empty())
                    lowlink[frames.back().v] = std::min(lowlink[frames.back().v], lowlink[child]);
            }
        }
    }
    // nontrivial = contains a cycle (size >= 2 or a self-loop)
    std::vector<size_t> scc_size(scc_count_, 0);
    std::vector<bool> has_loop(scc_count_, false);
    for (size_t v = 0; v < n; ++v) {
        ++scc_size[scc_[v]];
        for (const auto& e : adj_[v])
            if (e.to == v) has_loop[scc_[v]] = true;
    }
    std::vector<bool> nontrivial(scc_count_, false);
    nontrivial_ = 0;
    for (size_t c = 0; c < scc_count_; ++c)
        if (scc_size[c] >= 2 || has_loop[c]) {
            nontrivial[c] = true;
            ++nontrivial_;
        }
    // forward reachability from cycle vertices
    std::vector<bool> fwd(n, false), bwd(n, false);
    std::vector<size_t> queue;
    for (size_t v = 0; v < n; ++v)
        if (nontrivial[scc_[v]]) {
            fwd[v] = bwd[v] = true;
            queue.push_back(v);
        }
    std::vector<size_t> q = queue;
    while (!q.empty()) {
        size_t v = q.back();
        q.pop_back();
        for (const auto& e : adj_[v])
            if (!fwd[e.to]) {
                fwd[e.to] = true;
                q.push_back(e.to);
            }
    }
    // backward reachability needs the reverse adjacency
    std::vector<std::vector<size_t>> radj(n);
    for (size_t v = 0; v < n; ++v)
        for (const auto& e : adj_[v]) radj[e.to].push_back(v);
    q = queue;
    while (!q.empty()) {
        size_t v = q.back();
        q.pop_back();
        for (size_t u : radj[v])
            if (!bwd[u]) {
                bwd[u] = true;
                q.push_back(u);
            }
    }
    support_.assign(n, false);
    for (size_t v = 0; v < n; ++v) support_[v] = fwd[v] && bwd[v];
    scc_done_ = true;
}

const std::vector<int>& EdgeGraph::scc_ids() const {
    compute_sccs();
    return scc_;
}

size_t EdgeGraph::scc_count() const {
    compute_sccs();
    return scc_count_;
}

size_t EdgeGraph::nontrivial_scc_count() const {
    compute_sccs();
    return nontrivial_;
}

const std::vector<bool>& EdgeGraph::walk_supporting() const {
    compute_sccs();
    return support_;
}

bool EdgeGraph::has_biinfinite_walk() const {
    compute_sccs();
    return nontrivial_ > 0;
}

void EdgeGraph::write_dot(std::ostream& os) const {
    os << "digraph sft {\n";
    for (size_t v = 0; v < adj_.size(); ++v) {
        os << "  v" << v;
        if (words_[v]) os << " [label=\"" << words_[v]->to_string() << "\"]";
        os << ";\n";
    }
    for (size_t v = 0; v < adj_.size(); ++v)
        for (const auto& e : adj_[v])
            os << "  v" << v << " -> v" << e.to << " [label=\"" << e.label << "\"];\n";
    os << "}\n";
}

namespace {

size_t ipow(size_t base, size_t e) {
    if (e > 0 && std::log2(static_cast<double>(base)) * static_cast<double>(e) > 58.0)
        throw CapExceeded(SIZE_MAX);
    size_t r = 1;
    while (e--) r *= base;
    return r;
}

void index_to_word(size_t idx, size_t len, int base, std::vector<int>& out) {
    out.assign(len, 0);
    for (size_t i = len; i-- > 0;) {
        out[i] = static_cast<int>(idx % base);
        idx /= base;
    }
}

}  // namespace

EdgeGraph build_graph_naive(const ForbiddenSpec& spec, size_t vertex_cap) {
    size_t n = spec.window;
    int A = spec.alphabet.size();
    size_t nverts = ipow(A, n - 1);
    if (nverts > vertex_cap) throw CapExceeded(nverts);
    EdgeGraph g;
    if (n == 1) {
        size_t v = g.add_vertex(Word({}, spec.alphabet.M));
        std::vector<int> w(1);
        bool any = false;
        for (int d = 0; d < A; ++d) {
            w[0] = d;
            if (spec.allows_window(w.data())) {
                g.add_edge(v, v, d);
                any = true;
            }
        }
        if (!any) return EdgeGraph{};  // empty language: no vertices at all
        return g;
    }
    // find allowed n-words; vertex ids for incident (n-1)-words only
    std::vector<long> vid(nverts, -1);
    EdgeGraph out;
    std::vector<int> w(n);
    size_t nwords = nverts * A;
    auto get_vertex = [&](size_t idx) {
        if (vid[idx] == -1) {
            std::vector<int> digits;
            index_to_word(idx, n - 1, A, digits);
            vid[idx] = static_cast<long>(out.add_vertex(Word(digits, spec.alphabet.M)));
        }
        return static_cast<size_t>(vid[idx]);
    };
    for (size_t idx = 0; idx < nwords; ++idx) {
        index_to_word(idx, n, A, w);
        if (!spec.allows_window(w.data())) continue;
        size_t u = idx / A;            // first n-1 digits
        size_t v = idx % ipow(A, n - 1);  // last n-1 digits
        out.add_edge(get_vertex(u), get_vertex(v), w[n - 1]);
    }
    return out;
}

EdgeGraph build_graph_automaton(const ForbiddenSpec& spec) {
    const size_t n = spec.window;
    const int A = spec.alphabet.size();
    const Word& U = spec.bound;
    Word L = spec.bound.reflected();
    const bool strict = spec.mode == SftMode::StrictU;

    // Trie of proper prefixes of U and L (depth <= n-1), shared while the two
    // words agree. Node 0 is the root (empty prefix).
    size_t shared = 0;
    while (shared < n - 1 && U[shared] == L[shared]) ++shared;

    struct Node {
        size_t depth;
        bool on_u, on_l;
        long fail = 0;
    };
    std::vector<Node> nodes;
    nodes.push_back({0, true, true});
    std::vector<long> u_node(n, -1), l_node(n, -1);  // node id per prefix depth 1..n-1
    u_node[0] = l_node[0] = 0;
    for (size_t d = 1; d <= n - 1; ++d) {
        nodes.push_back({d, true, d <= shared});
        u_node[d] = static_cast<long>(nodes.size() - 1);
        if (d <= shared) l_node[d] = u_node[d];
    }
    for (size_t d = shared + 1; d <= n - 1; ++d) {
        nodes.push_back({d, false, true});
        l_node[d] = static_cast<long>(nodes.size() - 1);
    }
    const size_t S = nodes.size();

    // goto edges: from prefix of depth d to depth d+1 along the pattern digit
    auto goto_edge = [&](size_t s, int c) -> long {
        const Node& nd = nodes[s];
        if (nd.depth + 1 <= n - 1) {
            if (nd.on_u && U[nd.depth] == c) return u_node[nd.depth + 1];
            if (nd.on_l && L[nd.depth] == c) return l_node[nd.depth + 1];
        }
        return -1;
    };

    // full transition and kill tables via BFS over depths
    std::vector<std::vector<long>> delta(S, std::vector<long>(A, 0));
    std::vector<std::vector<char>> kill(S, std::vector<char>(A, 0));
    std::vector<size_t> order(S);
    // nodes were pushed in depth order per chain; a stable sort by depth gives BFS order
    for (size_t i = 0; i < S; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t a, size_t b) { return nodes[a].depth < nodes[b].depth; });
    auto local_kill = [&](size_t s, int c) -> bool {
        const Node& nd = nodes[s];
        if (nd.depth + 1 <= n) {
            if (nd.on_u) {
                int next = U[nd.depth];
                if (c > next) return true;
                if (strict && nd.depth == n - 1 && c == next) return true;
            }
            if (nd.on_l) {
                int next = L[nd.depth];
                if (c < next) return true;
                if (strict && nd.depth == n - 1 && c == next) return true;
            }
        }
        return false;
    };
    for (size_t oi = 0; oi < S; ++oi) {
        size_t s = order[oi];
        const Node& nd = nodes[s];
        for (int c = 0; c < A; ++c) {
            long g = goto_edge(s, c);
            long via_fail = nd.depth == 0 ? 0 : delta[nodes[s].fail][c];
            kill[s][c] = (local_kill(s, c) || (nd.depth > 0 && kill[nodes[s].fail][c])) ? 1 : 0;
            if (g != -1) {
                delta[s][c] = g;
                nodes[g].fail = via_fail;
            } else {
                delta[s][c] = via_fail;
            }
        }
    }

    EdgeGraph g;
    for (size_t s = 0; s < S; ++s) g.add_vertex();
    for (size_t s = 0; s < S; ++s)
        for (int c = 0; c < A; ++c)
            if (!kill[s][c]) g.add_edge(s, static_cast<size_t>(delta[s][c]), c);
    return g;
}

namespace {

// distinct word count by on-the-fly determinization over supported vertices
Int count_words_subset(const EdgeGraph& g, size_t k) {
    const auto& sup = g.walk_supporting();
    std::vector<size_t> start;
    for (size_t v = 0; v < g.vertex_count(); ++v)
        if (sup[v]) start.push_back(v);
    if (start.empty()) return Int(0);
    std::map<std::vector<size_t>, size_t> subset_id;
    std::vector<std::vector<size_t>> subsets;
    std::vector<std::vector<long>> trans;  // subset x digit -> subset id or -1
    auto intern = [&](std::vector<size_t> s) {
        auto [it, inserted] = subset_id.try_emplace(std::move(s), subsets.size());
        if (inserted) {
            subsets.push_back(it->first);
            trans.emplace_back();
        }
        return it->second;
    };
    size_t s0 = intern(std::move(start));
    int A = 0;
    for (size_t v = 0; v < g.vertex_count(); ++v)
        for (const auto& e : g.out_edges(v)) A = std::max(A, e.label + 1);
    // memo[id] holds counts by remaining length
    std::vector<std::vector<Int>> memo;
    auto ensure_trans = [&](size_t id) {
        if (!trans[id].empty()) return;
        trans[id].assign(A, -1);
        for (int c = 0; c < A; ++c) {
            std::set<size_t> nxt;
            for (size_t v : subsets[id])
                for (const auto& e : g.out_edges(v))
                    if (e.label == c && sup[e.to]) nxt.insert(e.to);
            if (!nxt.empty())
                trans[id][c] =
                    static_cast<long>(intern(std::vector<size_t>(nxt.begin(), nxt.end())));
        }
    };
    std::function<Int(size_t, size_t)> count = [&](size_t id, size_t rem) -> Int {
        if (rem == 0) return Int(1);
        if (memo.size() < subsets.size()) memo.resize(subsets.size());
        if (memo[id].size() >= rem + 1 && memo[id][rem] >= 0) return memo[id][rem];
        ensure_trans(id);
        Int total = 0;
        for (int c = 0; c < A; ++c)
            if (trans[id][c] != -1) total += count(static_cast<size_t>(trans[id][c]), rem - 1);
        if (memo.size() < subsets.size()) memo.resize(subsets.size());
        if (memo[id].size() < rem + 1) memo[id].resize(rem + 1, Int(-1));
        memo[id][rem] = total;
        return total;
    };
    return count(s0, k);
}

}  // namespace

BlockCount count_blocks(const EdgeGraph& g, size_t k) {
    if (k < 1) throw std::invalid_argument("block length must be >= 1");
    const auto& sup = g.walk_supporting();
    bool have_words = g.vertex_count() > 0;
    for (size_t v = 0; v < g.vertex_count() && have_words; ++v)
        if (sup[v] && !g.vertex_word(v)) have_words = false;
    if (!g.has_biinfinite_walk()) return {k, Int(0)};
    if (!have_words) return {k, count_words_subset(g, k)};
    // de Bruijn graph: words biject with paths once k >= |vertex word|
    size_t L = 0;
    for (size_t v = 0; v < g.vertex_count(); ++v)
        if (sup[v]) {
            L = g.vertex_word(v)->size();
            break;
        }
    if (k >= L && L > 0) {
        size_t steps = k - L;
        std::vector<Int> f(g.vertex_count(), Int(0));
        for (size_t v = 0; v < g.vertex_count(); ++v)
            if (sup[v]) f[v] = 1;
        for (size_t s = 0; s < steps; ++s) {
            std::vector<Int> nf(g.vertex_count(), Int(0));
            for (size_t v = 0; v < g.vertex_count(); ++v) {
                if (f[v] == 0) continue;
                for (const auto& e : g.out_edges(v))
                    if (sup[e.to]) nf[e.to] += f[v];
            }
            f = std::move(nf);
        }
        Int total = 0;
        for (size_t v = 0; v < g.vertex_count(); ++v)
            if (sup[v]) total += f[v];
        return {k, total};
    }
    if (L == 0) {
        // single empty-word vertex with labeled self-loops
        return {k, count_words_subset(g, k)};
    }
    // k < L: distinct k-prefixes of supported vertex words
    std::set<std::vector<int>> prefixes;
    for (size_t v = 0; v < g.vertex_count(); ++v)
        if (sup[v]) {
            const Word& w = *g.vertex_word(v);
            prefixes.insert(std::vector<int>(w.digits.begin(), w.digits.begin() + k));
        }
    return {k, Int(prefixes.size())};
}

namespace {

struct StateSpace {
    size_t n;        // window
    int A;           // alphabet size
    size_t nstates;  // (A)^(n-1)
    std::vector<char> left_inf, right_inf;
};

// fixed-point pruning of (n-1)-word states, independent of EdgeGraph
StateSpace prune_states(const ForbiddenSpec& spec, size_t cap) {
    StateSpace st;
    st.n = spec.window;
    st.A = spec.alphabet.size();
    st.nstates = ipow(st.A, st.n - 1);
    if (st.nstates > cap) throw CapExceeded(st.nstates);
    std::vector<int> w(st.n);
    auto window_allowed = [&](size_t state, int d, bool append) {
        // append: state digits then d; otherwise d then state digits
        size_t idx = state;
        for (size_t i = st.n - 1; i-- > 0;) {
            w[(append ? i : i + 1)] = static_cast<int>(idx % st.A);
            idx /= st.A;
        }
        w[append ? st.n - 1 : 0] = d;
        return spec.allows_window(w.data());
    };
    st.right_inf.assign(st.nstates, 1);
    st.left_inf.assign(st.nstates, 1);
    size_t base = ipow(st.A, st.n - 2 < st.n ? st.n - 2 : 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t s = 0; s < st.nstates; ++s) {
            if (st.right_inf[s]) {
                bool ok = false;
                for (int d = 0; d < st.A && !ok; ++d) {
                    if (!window_allowed(s, d, true)) continue;
                    size_t succ = (s % base) * st.A + d;
                    if (st.n == 1) succ = 0;
                    ok = st.right_inf[succ];
                }
                if (!ok) {
                    st.right_inf[s] = 0;
                    changed = true;
                }
            }
            if (st.left_inf[s]) {
                bool ok = false;
                for (int d = 0; d < st.A && !ok; ++d) {
                    if (!window_allowed(s, d, false)) continue;
                    size_t pred = static_cast<size_t>(d) * base + s / st.A;
                    if (st.n == 1) pred = 0;
                    ok = st.left_inf[pred];
                }
                if (!ok) {
                    st.left_inf[s] = 0;
                    changed = true;
                }
            }
        }
    }
    return st;
}

}  // namespace

BlockCount brute_force_blocks(const ForbiddenSpec& spec, size_t k, size_t word_cap) {
    const size_t n = spec.window;
    const int A = spec.alphabet.size();
    if (n == 1) {
        int allowed = 0;
        int w[1];
        for (int d = 0; d < A; ++d) {
            w[0] = d;
            if (spec.allows_window(w)) ++allowed;
        }
        return {k, allowed == 0 ? Int(0) : pow_int(Int(allowed), k)};
    }
    StateSpace st = prune_states(spec, word_cap);
    size_t nwords = ipow(A, k);
    if (nwords > word_cap) throw CapExceeded(nwords);
    std::vector<int> w(k);
    Int total = 0;
    size_t state_mod = ipow(A, n - 1);
    for (size_t idx = 0; idx < nwords; ++idx) {
        index_to_word(idx, k, A, w);
        bool ok = true;
        if (k >= n) {
            for (size_t m = 0; m + n <= k && ok; ++m) ok = spec.allows_window(w.data() + m);
        }
        if (!ok) continue;
        if (k >= n - 1) {
            size_t pre = 0, suf = 0;
            for (size_t i = 0; i < n - 1; ++i) pre = pre * A + w[i];
            for (size_t i = k - (n - 1); i < k; ++i) suf = suf * A + w[i];
            if (st.left_inf[pre] && st.right_inf[suf]) ++total;
        } else {
            // w occurs iff it is a prefix of a biinfinite-supported state
            bool found = false;
            for (size_t s = 0; s < state_mod && !found; ++s) {
                if (!st.left_inf[s] || !st.right_inf[s]) continue;
                size_t top = s / ipow(A, n - 1 - k);
                size_t widx = 0;
                for (size_t i = 0; i < k; ++i) widx = widx * A + w[i];
                found = top == widx;
            }
            if (found) ++total;
        }
    }
    return {k, total};
}

bool sft_includes(const ForbiddenSpec& a, const ForbiddenSpec& b, size_t word_cap) {
    if (a.alphabet.M != b.alphabet.M) throw std::invalid_argument("alphabets differ");
    const size_t N = std::max(a.window, b.window);
    const int A = a.alphabet.size();
    size_t nwords = ipow(A, N);
    if (nwords > word_cap) throw CapExceeded(nwords);
    StateSpace st = prune_states(a, word_cap);
    std::vector<int> w(N);
    for (size_t idx = 0; idx < nwords; ++idx) {
        index_to_word(idx, N, A, w);
        // does w occur in a?
        bool ok = true;
        for (size_t m = 0; m + a.window <= N && ok; ++m) ok = a.allows_window(w.data() + m);
        if (!ok) continue;
        size_t pre = 0, suf = 0;
        for (size_t i = 0; i + 1 < a.window; ++i) pre = pre * A + w[i];
        for (size_t i = N - (a.window - 1); i < N; ++i) suf = suf * A + w[i];
        if (!st.left_inf[pre] || !st.right_inf[suf]) continue;
        // every b-window of w must be allowed
        for (size_t m = 0; m + b.window <= N; ++m)
            if (!b.allows_window(w.data() + m)) return false;
    }
    return true;
}

std::optional<size_t> find_separating_depth(const AlgebraicNumber& q, const AlgebraicNumber& p,
                                            const Alphabet& alphabet, size_t cap) {
    if (compare(q, p) >= 0) throw std::invalid_argument("find_separating_depth requires q < p");
    ExpansionSeq beta_q = beta_of(q, alphabet, cap);
    ExpansionSeq alpha_p = quasi_greedy_expansion(p, alphabet, cap);
    for (size_t i = 1; i <= cap; ++i) {
        int a = alpha_p.digit(i), b = beta_q.digit(i);
        if (a > b) return i;
        if (a < b) return std::nullopt;  // alpha(p) fell below beta(q): no such depth
    }
    return std::nullopt;
}

}  // namespace univoq
