#include <algorithm>
#include <map>
#include <tuple>

#include "tcc/errors.hpp"
#include "tcc/reductions.hpp"

namespace tcc {

namespace {

std::string join_role(std::initializer_list<std::string> parts) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += '.';
        out += p;
    }
    return out;
}

std::string str(std::size_t v) { return std::to_string(v); }

}  // namespace

// ---- semaphore -------------------------------------------------------------

GeneratedGraph gen_semaphore(const SourceGraph& h, bool undirected) {
    const std::size_t n = h.n, m = h.edges.size();
    if (m == 0) throw ValidationError("semaphore reduction needs at least one edge");
    ReductionCertificate cert;
    cert.construction = "semaphore";
    cert.role_map.resize(n + 2 * m);
    for (std::size_t u = 0; u < n; ++u) cert.role_map[u] = "orig." + str(u);
    std::vector<TemporalEdge> edges;
    for (std::size_t i = 1; i <= m; ++i) {
        const auto [u, v] = h.edges[i - 1];
        const auto xuv = static_cast<Vertex>(n + 2 * (i - 1)), xvu = xuv + 1;
        cert.role_map[xuv] = join_role({"sem", str(u), str(v)});
        cert.role_map[xvu] = join_role({"sem", str(v), str(u)});
        const Time a = static_cast<Time>(i), b = static_cast<Time>(m + i);
        edges.push_back({u, xuv, a});
        edges.push_back({xuv, v, b});
        edges.push_back({v, xvu, a});
        edges.push_back({xvu, u, b});
    }
    GeneratedGraph out;
    out.graph = build_graph(n + 2 * m, std::span<const TemporalEdge>(edges), GraphFlags{!undirected, true});
    cert.expected_component = max_clique(h);
    cert.expected_size = cert.expected_component.size();
    cert.structural_claims = {"expected-size", "expected-open", "original-compatibility"};
    if (!undirected) cert.structural_claims.push_back("expected-maximal-open");
    cert.params = {{"n", static_cast<std::int64_t>(n)}, {"m", static_cast<std::int64_t>(m)},
                   {"undirected", undirected ? 1 : 0}};
    out.cert = std::move(cert);
    return out;
}

// ---- six-path construction -------------------------------------------------

namespace {

class SixPathBuilder {
public:
    SixPathBuilder(const SourceGraph& h) : h_(h) {
        const std::size_t n = h.n;
        sub_.assign(n, std::vector<Vertex>(n, 0));
        for (Vertex i = 0; i < n; ++i)
            for (Vertex j = 0; j < n; ++j)
                if (i != j) {
                    sub_[i][j] = next_id();
                    roles_.push_back(join_role({"sub", str(i), str(j)}));
                }
        for (auto [u, v] : h.edges) {
            arcs_.emplace_back(u, v);
            arcs_.emplace_back(v, u);
        }
        std::sort(arcs_.begin(), arcs_.end());
        for (auto [i, j] : arcs_) {
            sem_[{i, j}] = next_id();
            roles_.push_back(join_role({"sem", str(i), str(j)}));
        }
    }

    Vertex sub(Vertex i, Vertex j) const { return sub_[i][j]; }
    Vertex sem(Vertex i, Vertex j) const { return sem_.at({i, j}); }
    const std::vector<std::pair<Vertex, Vertex>>& arcs() const { return arcs_; }

    /// Fresh bridge pair tagged with its merged-path slot.
    std::vector<Vertex> bridge(const std::string& tag) {
        const Vertex a = next_id();
        roles_.push_back("bridge." + tag + ".1");
        const Vertex b = next_id();
        roles_.push_back("bridge." + tag + ".2");
        return {a, b};
    }

    /// Gadgets in ascending order (or descending), sub-vertices within a gadget likewise,
    /// consecutive gadgets separated by a fresh bridge.
    std::vector<Vertex> gadget_walk(bool reverse, const std::string& tag) {
        std::vector<Vertex> seq;
        const std::size_t n = h_.n;
        for (std::size_t step = 0; step < n; ++step) {
            const Vertex i = static_cast<Vertex>(reverse ? n - 1 - step : step);
            if (step > 0) append(seq, bridge(tag + "." + str(step)));
            for (std::size_t q = 0; q < n; ++q) {
                const Vertex j = static_cast<Vertex>(reverse ? n - 1 - q : q);
                if (j != i) seq.push_back(sub(i, j));
            }
        }
        return seq;
    }

    std::vector<Vertex> sem_walk(bool reverse) const {
        std::vector<Vertex> seq;
        for (auto [i, j] : arcs_) seq.push_back(sem(i, j));
        if (reverse) std::reverse(seq.begin(), seq.end());
        return seq;
    }

    /// out: v_i^j -> x_ij pieces; in: x_ij -> v_j^i pieces; pieces joined by bridges.
    std::vector<Vertex> incidence_walk(bool out, const std::string& tag) {
        std::vector<Vertex> seq;
        for (std::size_t q = 0; q < arcs_.size(); ++q) {
            const auto [i, j] = arcs_[q];
            if (q > 0) append(seq, bridge(tag + "." + str(q)));
            if (out) {
                seq.push_back(sub(i, j));
                seq.push_back(sem(i, j));
            } else {
                seq.push_back(sem(i, j));
                seq.push_back(sub(j, i));
            }
        }
        return seq;
    }

    std::size_t vertex_count() const { return roles_.size(); }
    std::vector<std::string> take_roles() { return std::move(roles_); }

    static void append(std::vector<Vertex>& seq, const std::vector<Vertex>& more) {
        seq.insert(seq.end(), more.begin(), more.end());
    }

private:
    Vertex next_id() { return static_cast<Vertex>(roles_.size()); }

    const SourceGraph& h_;
    std::vector<std::vector<Vertex>> sub_;
    std::map<std::pair<Vertex, Vertex>, Vertex> sem_;
    std::vector<std::pair<Vertex, Vertex>> arcs_;
    std::vector<std::string> roles_;
};

/// Hands out consecutive labels across blocks.
class LabelCounter {
public:
    std::vector<Time> take(std::size_t count) {
        std::vector<Time> out;
        for (std::size_t i = 0; i < count; ++i) out.push_back(++last_);
        return out;
    }

private:
    Time last_ = 0;
};

TemporalPath make_path(const std::vector<Vertex>& seq, const std::vector<Time>& labels) {
    TemporalPath p{seq.front(), {}};
    for (std::size_t i = 1; i < seq.size(); ++i) p.hops.push_back({labels[i - 1], seq[i]});
    return p;
}

}  // namespace

GeneratedCover gen_ctcc_6path(const SourceGraph& h, std::size_t s, const std::optional<std::vector<Vertex>>& witness,
                              bool undirected) {
    if (s < 3) throw ValidationError("six-path construction needs s >= 3");
    if (h.edges.empty()) throw ValidationError("six-path construction needs at least one edge");
    const std::size_t n = h.n, m = h.edges.size();
    SixPathBuilder b(h);

    // Segment vertex sequences first (bridge ids in creation order), labels afterwards.
    auto p1 = b.gadget_walk(false, "p1");
    auto p2 = b.gadget_walk(true, "p2");
    auto p3 = b.sem_walk(false);
    auto p4 = b.sem_walk(true);
    auto p5 = b.incidence_walk(true, "p5");
    auto p6 = b.incidence_walk(false, "p6");
    auto p7 = b.sem_walk(false);
    auto p8 = b.sem_walk(true);
    auto p9 = b.gadget_walk(false, "p9");
    auto p10 = b.gadget_walk(true, "p10");
    const auto m13 = b.bridge("m13"), m24 = b.bridge("m24"), m79 = b.bridge("m79"), m810 = b.bridge("m810");

    auto hops = [](const std::vector<Vertex>& seq) { return seq.size() - 1; };
    LabelCounter clock;
    const auto l1 = clock.take(hops(p1)), lb13 = clock.take(3);
    const auto l2 = clock.take(hops(p2)), lb24 = clock.take(3);
    const auto l3 = clock.take(hops(p3)), l4 = clock.take(hops(p4));
    const auto l5 = clock.take(hops(p5)), l6 = clock.take(hops(p6));
    const auto l7 = clock.take(hops(p7)), lb79 = clock.take(3);
    const auto l8 = clock.take(hops(p8)), lb810 = clock.take(3);
    const auto l9 = clock.take(hops(p9)), l10 = clock.take(hops(p10));

    auto merge = [](std::vector<Vertex> a, const std::vector<Time>& la, const std::vector<Vertex>& bridge,
                    const std::vector<Time>& lb, const std::vector<Vertex>& c, const std::vector<Time>& lc) {
        std::vector<Time> labels = la;
        labels.insert(labels.end(), lb.begin(), lb.end());
        labels.insert(labels.end(), lc.begin(), lc.end());
        SixPathBuilder::append(a, bridge);
        SixPathBuilder::append(a, c);
        return make_path(a, labels);
    };

    GeneratedCover out;
    out.cover.flags = GraphFlags{!undirected, true};
    out.cover.paths.push_back(merge(p1, l1, m13, lb13, p3, l3));
    out.cover.paths.push_back(merge(p2, l2, m24, lb24, p4, l4));
    out.cover.paths.push_back(make_path(p5, l5));
    out.cover.paths.push_back(make_path(p6, l6));
    out.cover.paths.push_back(merge(p7, l7, m79, lb79, p9, l9));
    out.cover.paths.push_back(merge(p8, l8, m810, lb810, p10, l10));
    out.cover.n = b.vertex_count();
    out.graph = validate_cover(out.cover);

    ReductionCertificate cert;
    cert.construction = "ctcc6";
    cert.role_map = b.take_roles();
    cert.expected_size = s * (n - 1) + 2 * m;
    std::optional<std::vector<Vertex>> clique = witness;
    if (clique) {
        for (std::size_t x = 0; x < clique->size(); ++x)
            for (std::size_t y = x + 1; y < clique->size(); ++y)
                if ((*clique)[x] >= n || (*clique)[y] >= n || !h.adjacent((*clique)[x], (*clique)[y]))
                    throw ValidationError("witness is not a clique of the source graph");
        if (clique->size() < s) throw ValidationError("witness clique is smaller than s");
    } else {
        auto best = max_clique(h);
        if (best.size() >= s) clique = best;
    }
    cert.structural_claims = {"sub-count", "sem-count", "six-paths", "bridge-triviality"};
    if (clique) {
        std::vector<Vertex> chosen(clique->begin(), clique->begin() + static_cast<std::ptrdiff_t>(s));
        for (Vertex i : chosen)
            for (Vertex j = 0; j < n; ++j)
                if (j != i) cert.expected_component.push_back(b.sub(i, j));
        for (auto [i, j] : b.arcs()) cert.expected_component.push_back(b.sem(i, j));
        std::sort(cert.expected_component.begin(), cert.expected_component.end());
        for (const char* c : {"expected-size", "expected-open", "expected-closed", "expected-weakly-maximal"})
            cert.structural_claims.push_back(c);
    }
    cert.params = {{"n", static_cast<std::int64_t>(n)},
                   {"m", static_cast<std::int64_t>(m)},
                   {"s", static_cast<std::int64_t>(s)},
                   {"paths", 6},
                   {"undirected", undirected ? 1 : 0}};
    out.cert = std::move(cert);
    return out;
}

// ---- separator construction ------------------------------------------------

namespace {

/// Nodes 0..metas-1 are R meta-vertices, metas..metas+7 the separators s1..s8.
struct BaseArc {
    std::size_t from;
    std::size_t to;
    Time time;
};

class Tw9Layout {
public:
    explicit Tw9Layout(const SourceGraph& h) : h_(h), k_(h.classes.size()) {
        class_of_.assign(h.n, 0);
        rank_.assign(h.n, 0);
        v_meta_.assign(h.n, 0);
        for (std::size_t i = 0; i < k_; ++i)
            for (std::size_t r = 0; r < h.classes[i].size(); ++r) {
                const Vertex a = h.classes[i][r];
                class_of_[a] = i;
                rank_[a] = r + 1;
                v_meta_[a] = add_meta("V." + str(i + 1) + "." + str(a));
            }
        edge_sets_.assign(k_, std::vector<std::vector<std::pair<Vertex, Vertex>>>(k_));
        for (auto [u, v] : h.edges) {
            const std::size_t cu = class_of_[u], cv = class_of_[v];
            if (cu == cv) continue;  // no role in a multicoloured clique
            edge_sets_[cu][cv].emplace_back(u, v);
            edge_sets_[cv][cu].emplace_back(v, u);
        }
        for (std::size_t i = 0; i < k_; ++i)
            for (std::size_t j = 0; j < k_; ++j) {
                auto& set = edge_sets_[i][j];
                std::sort(set.begin(), set.end());
                for (auto [a, b] : set)
                    e_meta_[{a, b}] = add_meta("E." + str(i + 1) + "." + str(j + 1) + "." + str(a) + "." + str(b));
            }
    }

    std::size_t k() const { return k_; }
    std::size_t metas() const { return meta_roles_.size(); }
    const std::vector<std::string>& meta_roles() const { return meta_roles_; }
    std::size_t sep(int r) const { return metas() + static_cast<std::size_t>(r - 1); }
    std::size_t v(Vertex a) const { return v_meta_[a]; }
    std::size_t e(Vertex a, Vertex b) const { return e_meta_.at({a, b}); }
    const std::vector<std::pair<Vertex, Vertex>>& edges(std::size_t i, std::size_t j) const { return edge_sets_[i][j]; }
    const std::vector<Vertex>& klass(std::size_t i) const { return h_.classes[i]; }
    std::size_t rank(Vertex a) const { return rank_[a]; }

    /// Edge rank shared by (a,b) and (b,a): position in E_ij (i < j) ordered by (a,b), 1-based.
    Time pair_rank(Vertex a, Vertex b) const {
        const std::size_t ca = class_of_[a], cb = class_of_[b];
        if (ca > cb) std::swap(a, b);
        const auto& set = edge_sets_[std::min(ca, cb)][std::max(ca, cb)];
        return static_cast<Time>(std::lower_bound(set.begin(), set.end(), std::make_pair(a, b)) - set.begin()) + 1;
    }

private:
    std::size_t add_meta(std::string role) {
        meta_roles_.push_back(std::move(role));
        return meta_roles_.size() - 1;
    }

    const SourceGraph& h_;
    std::size_t k_;
    std::vector<std::size_t> class_of_, rank_, v_meta_;
    std::vector<std::vector<std::vector<std::pair<Vertex, Vertex>>>> edge_sets_;
    std::map<std::pair<Vertex, Vertex>, std::size_t> e_meta_;
    std::vector<std::string> meta_roles_;
};

/// Per-separator schedules in local labels starting at 1. Returns arcs and window length.
struct Window {
    std::vector<BaseArc> arcs;
    Time length = 0;
};

Window schedule_s1(const Tw9Layout& L) {
    Window w;
    const std::size_t s = L.sep(1);
    Time off = 0;
    std::optional<std::pair<std::size_t, std::size_t>> prev;
    for (std::size_t i = 0; i < L.k(); ++i)
        for (std::size_t j = i + 1; j < L.k(); ++j) {
            const auto& block = L.edges(i, j);
            if (block.empty()) continue;
            if (prev) {
                for (auto [a, b] : L.edges(prev->second, prev->first)) w.arcs.push_back({L.e(a, b), s, off + 1});
                for (auto [a, b] : block) w.arcs.push_back({s, L.e(a, b), off + 2});
                off += 2;
            }
            for (auto [a, b] : block) {
                const Time pi = L.pair_rank(a, b);
                w.arcs.push_back({L.e(a, b), s, off + 2 * pi - 1});
                w.arcs.push_back({s, L.e(b, a), off + 2 * pi});
            }
            off += 2 * static_cast<Time>(block.size());
            prev = {i, j};
        }
    w.length = off;
    return w;
}

Window schedule_s2(const Tw9Layout& L) {
    Window w;
    const std::size_t s = L.sep(2);
    std::vector<std::pair<std::size_t, std::size_t>> order;
    for (std::size_t i = 0; i < L.k(); ++i)
        for (std::size_t j = i + 1; j < L.k(); ++j)
            if (!L.edges(i, j).empty()) order.emplace_back(i, j);
    std::reverse(order.begin(), order.end());
    Time off = 0;
    for (std::size_t q = 0; q < order.size(); ++q) {
        const auto [i, j] = order[q];
        const auto& block = L.edges(i, j);
        if (q > 0) {
            const auto [pa, pb] = order[q - 1];
            for (auto [a, b] : L.edges(pa, pb)) w.arcs.push_back({L.e(a, b), s, off + 1});
            for (auto [a, b] : L.edges(j, i)) w.arcs.push_back({s, L.e(a, b), off + 2});
            off += 2;
        }
        for (auto [a, b] : block) {
            const Time pi = L.pair_rank(a, b);
            w.arcs.push_back({L.e(b, a), s, off + 2 * pi});
            w.arcs.push_back({s, L.e(a, b), off + 2 * pi + 1});
        }
        off += 2 * static_cast<Time>(block.size()) + 1;
    }
    w.length = off;
    return w;
}

Window schedule_s3(const Tw9Layout& L) {
    Window w;
    const std::size_t s = L.sep(3);
    Time off = 0;
    for (std::size_t i = 0; i < L.k(); ++i) {
        if (i > 0) {
            for (Vertex a : L.klass(i)) w.arcs.push_back({s, L.v(a), off + 1});
            off += 1;
        }
        for (Vertex a : L.klass(i)) {
            const Time pi = static_cast<Time>(L.rank(a));
            w.arcs.push_back({L.v(a), s, off + 2 * pi - 1});
            for (std::size_t j = 0; j < L.k(); ++j)
                for (auto [x, y] : L.edges(i, j))
                    if (x == a) w.arcs.push_back({s, L.e(x, y), off + 2 * pi});
        }
        off += 2 * static_cast<Time>(L.klass(i).size());
    }
    w.length = off;
    return w;
}

Window schedule_s4(const Tw9Layout& L) {
    Window w;
    const std::size_t s = L.sep(4);
    Time off = 0;
    for (std::size_t q = 0; q < L.k(); ++q) {
        const std::size_t i = L.k() - 1 - q;
        for (Vertex a : L.klass(i)) {
            const Time pi = static_cast<Time>(L.rank(a));
            for (std::size_t j = 0; j < L.k(); ++j)
                for (auto [x, y] : L.edges(i, j))
                    if (x == a) w.arcs.push_back({L.e(x, y), s, off + 2 * pi - 1});
            w.arcs.push_back({s, L.v(a), off + 2 * pi});
        }
        off += 2 * static_cast<Time>(L.klass(i).size());
        if (q + 1 < L.k()) {
            for (Vertex a : L.klass(i)) w.arcs.push_back({L.v(a), s, off + 1});
            off += 1;
        }
    }
    w.length = off;
    return w;
}

/// s5/s6: sep -> V_i at 2p-1, then E_i* and V_i -> sep at 2p, with p = i or k+1-i.
Window schedule_full_in(const Tw9Layout& L, int r, bool mirrored) {
    Window w;
    const std::size_t s = L.sep(r);
    const std::size_t k = L.k();
    for (std::size_t i = 0; i < k; ++i) {
        const Time p = static_cast<Time>(mirrored ? k - i : i + 1);
        for (Vertex a : L.klass(i)) {
            w.arcs.push_back({s, L.v(a), 2 * p - 1});
            w.arcs.push_back({L.v(a), s, 2 * p});
        }
        for (std::size_t j = 0; j < k; ++j)
            for (auto [x, y] : L.edges(i, j)) w.arcs.push_back({L.e(x, y), s, 2 * p});
    }
    w.length = 2 * static_cast<Time>(k);
    return w;
}

/// s7/s8: sep -> E_i* at 2p-1, V_i -> sep at 2p.
Window schedule_full_out(const Tw9Layout& L, int r, bool mirrored) {
    Window w;
    const std::size_t s = L.sep(r);
    const std::size_t k = L.k();
    for (std::size_t i = 0; i < k; ++i) {
        const Time p = static_cast<Time>(mirrored ? k - i : i + 1);
        for (std::size_t j = 0; j < k; ++j)
            for (auto [x, y] : L.edges(i, j)) w.arcs.push_back({s, L.e(x, y), 2 * p - 1});
        for (Vertex a : L.klass(i)) w.arcs.push_back({L.v(a), s, 2 * p});
    }
    w.length = 2 * static_cast<Time>(k);
    return w;
}

}  // namespace

GeneratedGraph gen_mcc_tw9(const SourceGraph& h, bool undirected, const std::optional<std::vector<Vertex>>& witness) {
    if (h.classes.empty()) throw ValidationError("separator construction needs colour classes");
    if (h.classes.size() < 2) throw ValidationError("separator construction needs at least two colour classes");
    Tw9Layout L(h);
    const std::size_t metas = L.metas();

    std::vector<Window> windows = {schedule_s1(L),
                                   schedule_s2(L),
                                   schedule_s3(L),
                                   schedule_s4(L),
                                   schedule_full_in(L, 5, false),
                                   schedule_full_in(L, 6, true),
                                   schedule_full_out(L, 7, false),
                                   schedule_full_out(L, 8, true)};
    // Disjoint windows: separator r occupies base labels offset_r+1 .. offset_r+length_r.
    std::vector<BaseArc> base;
    Time offset = 0;
    for (auto& w : windows) {
        for (auto a : w.arcs) base.push_back({a.from, a.to, a.time + offset});
        offset += w.length;
    }
    const Time scale = 4, alpha = 1, omega = scale * (offset + 1);

    ReductionCertificate cert;
    cert.construction = "mcctw";
    for (const auto& r : L.meta_roles()) {
        cert.role_map.push_back(r + ".in");
        cert.role_map.push_back(r + ".out");
    }
    for (int r = 1; r <= 8; ++r) cert.role_map.push_back("S." + std::to_string(r));
    auto in_of = [](std::size_t meta) { return static_cast<Vertex>(2 * meta); };
    auto out_of = [](std::size_t meta) { return static_cast<Vertex>(2 * meta + 1); };
    auto sep_vertex = [&](std::size_t node) { return static_cast<Vertex>(2 * metas + (node - metas)); };

    std::vector<TemporalEdge> edges;
    auto both_ways = [&](Vertex a, Vertex b, Time t) {
        edges.push_back({a, b, t});
        if (!undirected) edges.push_back({b, a, t});
    };
    for (std::size_t q = 0; q < metas; ++q)
        for (Time t : {alpha, omega}) both_ways(in_of(q), out_of(q), t);
    for (int r = 1; r <= 8; ++r)
        for (int r2 = r + 1; r2 <= 8; ++r2)
            for (Time t : {alpha, omega}) both_ways(sep_vertex(L.sep(r)), sep_vertex(L.sep(r2)), t);

    std::vector<Vertex> helpers;
    for (const auto& a : base) {
        const bool from_sep = a.from >= metas;
        const Vertex tail = from_sep ? sep_vertex(a.from) : out_of(a.from);
        const Vertex head = from_sep ? in_of(a.to) : sep_vertex(a.to);
        const Time t = scale * a.time;
        if (!undirected) {
            edges.push_back({tail, head, t});
            continue;
        }
        const auto hv = static_cast<Vertex>(cert.role_map.size());
        cert.role_map.push_back("H." + str(helpers.size()));
        helpers.push_back(hv);
        edges.push_back({tail, hv, t});
        edges.push_back({hv, head, t + 1});
    }
    for (Vertex hv : helpers)
        for (int r = 1; r <= 8; ++r)
            for (Time t : {alpha - 1, omega + 1}) edges.push_back({hv, sep_vertex(L.sep(r)), t});

    GeneratedGraph out;
    out.graph = build_graph(cert.role_map.size(), std::span<const TemporalEdge>(edges), GraphFlags{!undirected, true});

    std::optional<std::vector<Vertex>> clique = witness;
    if (clique) {
        if (clique->size() != L.k()) throw ValidationError("witness must pick one vertex per colour class");
        for (std::size_t i = 0; i < L.k(); ++i)
            if (!std::binary_search(L.klass(i).begin(), L.klass(i).end(), (*clique)[i]))
                throw ValidationError("witness vertex " + str((*clique)[i]) + " is not in class " + str(i + 1));
        for (std::size_t i = 0; i < L.k(); ++i)
            for (std::size_t j = i + 1; j < L.k(); ++j)
                if (!h.adjacent((*clique)[i], (*clique)[j])) throw ValidationError("witness is not a clique");
    } else {
        clique = multicolored_clique(h);
    }
    const std::size_t k = L.k();
    cert.structural_claims = {"C1-incidence",
                              "C2-vertex-vertex",
                              "C3-vertex-edge",
                              "C4-identity",
                              "C5-edge-edge",
                              "separator-universality",
                              "within-set-incompatibility",
                              "gadget-non-transitivity",
                              "gadget-twin-compatibility",
                              "deletion-structure"};
    if (undirected) cert.structural_claims.push_back("helper-universality");
    if (clique) {
        auto add_meta = [&](std::size_t q) {
            cert.expected_component.push_back(in_of(q));
            cert.expected_component.push_back(out_of(q));
        };
        for (std::size_t i = 0; i < k; ++i) {
            add_meta(L.v((*clique)[i]));
            for (std::size_t j = 0; j < k; ++j)
                if (j != i) add_meta(L.e((*clique)[i], (*clique)[j]));
        }
        for (int r = 1; r <= 8; ++r) cert.expected_component.push_back(sep_vertex(L.sep(r)));
        cert.expected_component.insert(cert.expected_component.end(), helpers.begin(), helpers.end());
        std::sort(cert.expected_component.begin(), cert.expected_component.end());
        for (const char* c : {"expected-size", "expected-meta-size", "expected-open", "expected-closed",
                              "expected-weakly-maximal"})
            cert.structural_claims.push_back(c);
    }
    cert.expected_size = cert.expected_component.size();
    cert.params = {{"k", static_cast<std::int64_t>(k)},
                   {"n", static_cast<std::int64_t>(h.n)},
                   {"m", static_cast<std::int64_t>(h.edges.size())},
                   {"alpha", alpha},
                   {"omega", omega},
                   {"scale", scale},
                   {"expected_meta_size", static_cast<std::int64_t>(k + k * (k - 1) + 8)},
                   {"undirected", undirected ? 1 : 0}};
    out.cert = std::move(cert);
    return out;
}

}  // namespace tcc
