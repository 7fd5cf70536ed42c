#include <univoq/entropy.hpp>

#include <map>
#include <sstream>

namespace univoq {

namespace {

// Collatz-Wielandt enclosure of the spectral radius of one strongly
// connected component, computed on A+I so that power iteration converges
// even for periodic components.
Enclosure scc_spectral_radius(const std::vector<std::vector<std::pair<size_t, long>>>& rows,
                              const Rational& tol, size_t max_iters, unsigned prec_bits,
                              bool& tol_reached) {
    size_t n = rows.size();
    if (n == 1) {
        long self = 0;
        for (auto& [j, m] : rows[0])
            if (j == 0) self = m;
        tol_reached = true;
        return Enclosure(Rational(self), Rational(self));
    }
    std::vector<Rational> v(n, Rational(1));
    Rational grid = make_rational(1, 1);
    grid /= Rational(Int(1) << prec_bits);
    Enclosure best(Rational(0), Rational(1) << 62);
    tol_reached = false;
    for (size_t it = 0; it < max_iters; ++it) {
        std::vector<Rational> w(n, Rational(0));
        for (size_t i = 0; i < n; ++i) {
            Rational acc = v[i];  // the +I shift
            for (auto& [j, m] : rows[i]) acc += Rational(m) * v[j];
            w[i] = acc;
        }
        Rational lo = w[0] / v[0], hi = lo;
        for (size_t i = 1; i < n; ++i) {
            Rational r = w[i] / v[i];
            if (r < lo) lo = r;
            if (r > hi) hi = r;
        }
        // valid for any positive v: min ratio <= lambda+1 <= max ratio
        Enclosure cur(lo - 1, hi - 1);
        if (cur.lo > best.lo) best.lo = cur.lo;
        if (cur.hi < best.hi) best.hi = cur.hi;
        if (best.hi - best.lo <= tol) {
            tol_reached = true;
            break;
        }
        // renormalize by the largest entry, then round onto the dyadic grid
        Rational top = w[0];
        for (size_t i = 1; i < n; ++i)
            if (w[i] > top) top = w[i];
        for (size_t i = 0; i < n; ++i) {
            Rational x = dyadic_floor(w[i] / top, prec_bits);
            v[i] = x > 0 ? x : grid;
        }
    }
    return best;
}

}  // namespace

PerronBounds perron_bounds(const EdgeGraph& g, const Rational& tol, size_t max_iters,
                           unsigned prec_bits) {
    if (g.vertex_count() == 0) throw EmptyGraph();
    const auto& scc = g.scc_ids();
    size_t nscc = g.scc_count();
    PerronBounds pb;
    pb.component_count = nscc;
    pb.irreducible = nscc == 1;
    // group vertices per SCC, keep only components containing a cycle
    std::vector<std::vector<size_t>> members(nscc);
    for (size_t v = 0; v < g.vertex_count(); ++v) members[scc[v]].push_back(v);
    Enclosure lambda(Rational(0), Rational(0));
    bool any = false;
    pb.tol_reached = true;
    for (size_t c = 0; c < nscc; ++c) {
        bool cyclic = members[c].size() >= 2;
        if (!cyclic)
            for (const auto& e : g.out_edges(members[c][0]))
                if (e.to == members[c][0]) cyclic = true;
        if (!cyclic) continue;
        std::map<size_t, size_t> local;
        for (size_t i = 0; i < members[c].size(); ++i) local[members[c][i]] = i;
        std::vector<std::vector<std::pair<size_t, long>>> rows(members[c].size());
        for (size_t i = 0; i < members[c].size(); ++i) {
            std::map<size_t, long> mult;
            for (const auto& e : g.out_edges(members[c][i])) {
                auto it = local.find(e.to);
                if (it != local.end()) ++mult[it->second];
            }
            rows[i].assign(mult.begin(), mult.end());
        }
        bool reached = true;
        Enclosure le = scc_spectral_radius(rows, tol, max_iters, prec_bits, reached);
        pb.tol_reached = pb.tol_reached && reached;
        if (!any || le.lo > lambda.lo) {
            // overall radius is the max over components
            if (!any) {
                lambda = le;
            } else {
                lambda.lo = std::max(lambda.lo, le.lo);
                lambda.hi = std::max(lambda.hi, le.hi);
            }
            any = true;
        } else {
            lambda.hi = std::max(lambda.hi, le.hi);
        }
    }
    pb.spectral_radius = any ? lambda : Enclosure(Rational(0), Rational(0));
    return pb;
}

std::string EntropyBounds::to_json() const {
    std::ostringstream os;
    os << "{\"lo\":" << decimal_string(lower, 15) << ",\"hi\":" << decimal_string(upper, 15)
       << ",\"depth\":" << depth << ",\"unit\":\"nats\",\"source\":\""
       << (source == EntropySource::Sandwich ? "sandwich"
           : source == EntropySource::ClosedForm ? "closed_form"
                                                 : "zero")
       << "\",\"tol_reached\":" << (tol_reached ? "true" : "false") << "}";
    return os.str();
}

Enclosure entropy_of(const ForbiddenSpec& spec, const Rational& tol, GraphBuilder builder) {
    EdgeGraph g =
        builder == GraphBuilder::Naive ? build_graph_naive(spec) : build_graph_automaton(spec);
    if (g.vertex_count() == 0 || !g.has_biinfinite_walk())
        return Enclosure(Rational(0), Rational(0));
    PerronBounds pb = perron_bounds(g, tol);
    if (pb.spectral_radius.hi < 1)
        throw InternalConsistencyAlarm("nonempty subshift with spectral radius below 1");
    // h = ln(lambda); lambda.lo >= 1 for a nonempty language
    Rational lo = std::max(pb.spectral_radius.lo, Rational(1));
    unsigned prec = 96;
    Enclosure llo = log_enclosure(lo, prec);
    Enclosure lhi = log_enclosure(std::max(pb.spectral_radius.hi, lo), prec);
    return Enclosure(std::max(Rational(0), llo.lo), std::max(Rational(0), lhi.hi));
}

SandwichLevel sandwich(const AlgebraicNumber& q, const Alphabet& alphabet, size_t n,
                       const Rational& tol, GraphBuilder builder) {
    ForbiddenSpec su = build_spec(q, alphabet, n, SftMode::StrictU);
    ForbiddenSpec sv = build_spec(q, alphabet, n, SftMode::ClosedV);
    ForbiddenSpec sw = build_spec(q, alphabet, n, SftMode::ClosedW);
    SandwichLevel lvl;
    lvl.lower = entropy_of(su, tol, builder);
    Enclosure ev = entropy_of(sv, tol, builder);
    Enclosure ew = entropy_of(sw, tol, builder);
    lvl.upper = Enclosure(std::min(ev.lo, ew.lo), std::min(ev.hi, ew.hi));
    return lvl;
}

EntropyBounds refine_entropy(const AlgebraicNumber& q, const Alphabet& alphabet,
                             const Rational& tol, const RefineOptions& opts) {
    EntropyBounds out;
    out.source = EntropySource::Sandwich;
    out.lower = 0;
    Enclosure lnM1 = log_enclosure(Rational(alphabet.M + 1), 96);
    out.upper = lnM1.hi;
    Rational perron_tol = tol / 4;
    for (size_t n = opts.start_depth; n <= opts.depth_cap; n *= 2) {
        SandwichLevel lvl = sandwich(q, alphabet, n, perron_tol, opts.builder);
        // running max / min keeps the certified bracket monotone
        out.lower = std::max(out.lower, lvl.lower.lo);
        out.upper = std::min(out.upper, lvl.upper.hi);
        out.depth = n;
        if (opts.on_level) opts.on_level(n, out.lower, out.upper);
        if (out.upper - out.lower <= tol) {
            out.tol_reached = true;
            break;
        }
    }
    if (out.upper < out.lower) out.upper = out.lower;  // cannot happen if sound; keep invariant
    return out;
}

}  // namespace univoq
