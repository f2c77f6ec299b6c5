#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "json.hpp"
#include "tcc/errors.hpp"
#include "tcc/reductions.hpp"

namespace tcc {

using nlohmann::json;

std::string certificate_to_json(const ReductionCertificate& cert) {
    json j;
    j["construction"] = cert.construction;
    j["role_map"] = cert.role_map;
    j["expected_component"] = cert.expected_component;
    j["expected_size"] = cert.expected_size;
    j["structural_claims"] = cert.structural_claims;
    j["params"] = json::object();
    for (const auto& [k, v] : cert.params) j["params"][k] = v;
    return j.dump(2) + "\n";
}

ReductionCertificate certificate_from_json(std::string_view text) {
    ReductionCertificate cert;
    try {
        const json j = json::parse(text);
        cert.construction = j.at("construction").get<std::string>();
        cert.role_map = j.at("role_map").get<std::vector<std::string>>();
        cert.expected_component = j.at("expected_component").get<std::vector<Vertex>>();
        cert.expected_size = j.at("expected_size").get<std::size_t>();
        cert.structural_claims = j.at("structural_claims").get<std::vector<std::string>>();
        for (const auto& [k, v] : j.at("params").items()) cert.params[k] = v.get<std::int64_t>();
    } catch (const json::exception& e) {
        throw ValidationError(std::string("bad certificate: ") + e.what());
    }
    return cert;
}

bool VerificationReport::all_passed() const {
    return std::all_of(claims.begin(), claims.end(), [](const ClaimResult& c) { return c.passed; });
}

const ClaimResult* VerificationReport::find(std::string_view name) const {
    for (const auto& c : claims)
        if (c.name == name) return &c;
    return nullptr;
}

namespace {

std::vector<std::string> split_role(const std::string& role) {
    std::vector<std::string> parts;
    std::stringstream ss(role);
    std::string item;
    while (std::getline(ss, item, '.')) parts.push_back(item);
    return parts;
}

bool has_prefix(const std::string& role, std::string_view prefix) { return role.rfind(prefix, 0) == 0; }

std::string pair_text(const ReductionCertificate& cert, Vertex u, Vertex v) {
    return cert.role_map[u] + " (" + std::to_string(u) + ") / " + cert.role_map[v] + " (" + std::to_string(v) + ")";
}

/// One R meta-vertex of the separator construction.
struct Meta {
    bool edge = false;  // E-vertex, else V-vertex
    int i = 0, j = 0;   // colour indices (j only for E)
    std::string a, b;   // source vertices
    Vertex in = 0, out = 0;
    std::string name;
};

class Verifier {
public:
    Verifier(const TemporalGraph& g, const ReductionCertificate& cert, const PathCover* cover, unsigned threads)
        : g_(g), cert_(cert), cover_(cover), n_(g.vertex_count()) {
        if (cert.role_map.size() != n_)
            throw ValidationError("role_map covers " + std::to_string(cert.role_map.size()) + " vertices, graph has " +
                                  std::to_string(n_));
        for (Vertex v : cert.expected_component)
            if (v >= n_) throw ValidationError("expected component names vertex " + std::to_string(v) + " outside the graph");
        reach_ = reach_matrix(g, threads);
        compat_ = compatibility_graph(reach_);
        expected_ = VertexSet::from(n_, cert.expected_component);
    }

    VerificationReport run() {
        VerificationReport report;
        for (const auto& name : cert_.structural_claims) report.claims.push_back(evaluate(name));
        return report;
    }

private:
    std::int64_t param(const std::string& key) const {
        auto it = cert_.params.find(key);
        if (it == cert_.params.end()) throw ValidationError("certificate lacks parameter '" + key + "'");
        return it->second;
    }

    ClaimResult evaluate(const std::string& name) {
        ClaimResult r{name, true, ""};
        auto fail = [&](std::string detail) {
            if (r.passed) {
                r.passed = false;
                r.detail = std::move(detail);
            }
        };
        if (name == "expected-size") {
            if (cert_.expected_component.size() != cert_.expected_size)
                fail("component has " + std::to_string(cert_.expected_component.size()) + " vertices, expected " +
                     std::to_string(cert_.expected_size));
        } else if (name == "expected-open") {
            expected_.for_each([&](Vertex u) {
                expected_.for_each([&](Vertex v) {
                    if (u != v && !compat_.adjacent(u, v)) fail("incompatible pair " + pair_text(cert_, u, v));
                });
            });
        } else if (name == "expected-maximal-open") {
            if (!is_maximal_open(compat_, expected_)) fail("expected component is not a maximal clique of compatibility");
        } else if (name == "expected-closed") {
            if (!is_closed_connected(g_, expected_)) fail("expected component is not closed-connected");
        } else if (name == "expected-weakly-maximal") {
            if (!is_maximal_closed(g_, cert_.expected_component, ClosedMaximality::weak))
                fail("expected component is not closed-connected or has a closed one-vertex extension");
        } else if (name == "expected-meta-size") {
            std::set<std::string> metas;
            for (Vertex v : cert_.expected_component) {
                const auto& role = cert_.role_map[v];
                if (has_prefix(role, "V.") || has_prefix(role, "E.")) metas.insert(role.substr(0, role.rfind('.')));
                else if (has_prefix(role, "S.")) metas.insert(role);
            }
            if (static_cast<std::int64_t>(metas.size()) != param("expected_meta_size"))
                fail("meta-count " + std::to_string(metas.size()) + ", expected " +
                     std::to_string(param("expected_meta_size")));
        } else if (name == "original-compatibility") {
            check_original_compatibility(fail);
        } else if (name == "sub-count" || name == "sem-count") {
            const std::string prefix = name == "sub-count" ? "sub." : "sem.";
            const auto count = std::count_if(cert_.role_map.begin(), cert_.role_map.end(),
                                             [&](const std::string& s) { return has_prefix(s, prefix); });
            const std::int64_t n = param("n"), m = param("m");
            const std::int64_t want = name == "sub-count" ? n * (n - 1) : 2 * m;
            if (count != want) fail(std::to_string(count) + " vertices, expected " + std::to_string(want));
        } else if (name == "six-paths" || name == "path-count") {
            if (!cover_) {
                fail("needs the path cover as input");
            } else {
                const std::int64_t want = name == "six-paths" ? 6 : param("m");
                if (static_cast<std::int64_t>(cover_->size()) != want)
                    fail("cover has " + std::to_string(cover_->size()) + " paths, expected " + std::to_string(want));
                else if (!(validate_cover(*cover_) == g_))
                    fail("cover does not induce the given graph");
            }
        } else if (name == "bridge-triviality") {
            check_bridges(fail);
        } else if (name == "part-confinement") {
            check_part_confinement(fail);
        } else if (name == "triangle-confinement") {
            check_triangles(fail);
        } else if (name == "connector-labels" || name == "part-label-windows") {
            check_chain_labels(name == "connector-labels", fail);
        } else if (name == "separator-universality" || name == "helper-universality") {
            const std::string prefix = name == "separator-universality" ? "S." : "H.";
            for (Vertex u = 0; u < n_; ++u) {
                if (!has_prefix(cert_.role_map[u], prefix)) continue;
                for (Vertex v = 0; v < n_; ++v)
                    if (v != u && !compat_.adjacent(u, v)) {
                        fail("incompatible pair " + pair_text(cert_, u, v));
                        break;
                    }
            }
        } else if (name == "deletion-structure") {
            check_deletion_structure(fail);
        } else if (name == "gadget-twin-compatibility") {
            for (const auto& x : metas()) {
                if (!compat_.adjacent(x.in, x.out)) fail("gadget halves of " + x.name + " are incompatible");
                for (Vertex v = 0; v < n_; ++v)
                    if (v != x.in && v != x.out && compat_.adjacent(x.in, v) != compat_.adjacent(x.out, v))
                        fail("gadget halves of " + x.name + " differ on vertex " + cert_.role_map[v]);
            }
        } else if (name == "gadget-non-transitivity") {
            check_non_transitivity(fail);
        } else if (name == "C1-incidence" || name == "C2-vertex-vertex" || name == "C3-vertex-edge" ||
                   name == "C4-identity" || name == "C5-edge-edge" || name == "within-set-incompatibility") {
            check_meta_relation(name, fail);
        } else {
            fail("unknown claim");
        }
        return r;
    }

    template <class Fail>
    void check_original_compatibility(Fail&& fail) {
        std::vector<Vertex> originals;
        std::set<std::pair<std::string, std::string>> sems;
        for (Vertex v = 0; v < n_; ++v) {
            const auto parts = split_role(cert_.role_map[v]);
            if (parts[0] == "orig") originals.push_back(v);
            if (parts[0] == "sem" && parts.size() == 3) sems.insert({parts[1], parts[2]});
        }
        for (Vertex u : originals)
            for (Vertex v : originals) {
                if (u >= v) continue;
                const bool edge = sems.count({split_role(cert_.role_map[u])[1], split_role(cert_.role_map[v])[1]}) > 0;
                if (compat_.adjacent(u, v) != edge)
                    fail(std::string(edge ? "adjacent but incompatible: " : "non-adjacent but compatible: ") +
                         pair_text(cert_, u, v));
            }
    }

    template <class Fail>
    void check_bridges(Fail&& fail) {
        // A two-vertex set is closed-connected exactly when both direct arcs exist.
        std::set<std::pair<Vertex, Vertex>> arcs;
        for (const auto& a : g_.arcs()) arcs.insert({a.from, a.to});
        for (Vertex b = 0; b < n_; ++b) {
            if (!has_prefix(cert_.role_map[b], "bridge.")) continue;
            for (Vertex v = 0; v < n_; ++v)
                if (v != b && arcs.count({b, v}) && arcs.count({v, b})) {
                    fail("closed pair " + pair_text(cert_, b, v));
                    return;
                }
        }
    }

    /// Part index from "part.i.v", 0 for anything else.
    int part_of(Vertex v) const {
        const auto parts = split_role(cert_.role_map[v]);
        return parts[0] == "part" ? std::stoi(parts[1]) : 0;
    }

    template <class Fail>
    void check_part_confinement(Fail&& fail) {
        for (Vertex u = 0; u < n_; ++u)
            compat_.neighbours(u).for_each([&](Vertex v) {
                if (u < v && part_of(u) && part_of(v) && part_of(u) != part_of(v))
                    fail("compatible across parts: " + pair_text(cert_, u, v));
            });
    }

    template <class Fail>
    void check_triangles(Fail&& fail) {
        for (Vertex u = 0; u < n_; ++u)
            compat_.neighbours(u).for_each([&](Vertex v) {
                if (v <= u) return;
                VertexSet common = compat_.neighbours(u) & compat_.neighbours(v);
                common.for_each([&](Vertex w) {
                    if (w <= v) return;
                    const int p = part_of(u);
                    if (p == 0 || part_of(v) != p || part_of(w) != p)
                        fail("triangle leaves a part: " + cert_.role_map[u] + ", " + cert_.role_map[v] + ", " +
                             cert_.role_map[w]);
                });
            });
    }

    template <class Fail>
    void check_chain_labels(bool connectors, Fail&& fail) {
        const Time m = param("m");
        const Time period = 2 * m + 2;
        if (connectors) {
            std::vector<std::multiset<Time>> seen(n_);
            for (const auto& e : g_.edges()) {
                seen[e.tail].insert(e.time);
                seen[e.head].insert(e.time);
            }
            for (Vertex v = 0; v < n_; ++v) {
                const auto parts = split_role(cert_.role_map[v]);
                if (parts[0] != "conn") continue;
                const Time i = std::stoll(parts[1]), j = std::stoll(parts[2]);
                const std::multiset<Time> want = {period * (i - 1) + 2 + j, period * (i - 1) + 2 + m + j};
                if (seen[v] != want) fail("connector " + cert_.role_map[v] + " has unexpected labels");
            }
        } else {
            for (const auto& e : g_.edges()) {
                const int p = part_of(e.tail);
                if (p == 0 || part_of(e.head) != p) continue;
                const Time lo = period * (p - 1) + 1;
                if (e.time != lo && e.time != lo + 1)
                    fail("edge " + pair_text(cert_, e.tail, e.head) + " at " + std::to_string(e.time) +
                         " outside the window of part " + std::to_string(p));
            }
        }
    }

    template <class Fail>
    void check_deletion_structure(Fail&& fail) {
        VertexSet keep(n_);
        for (Vertex v = 0; v < n_; ++v)
            if (!has_prefix(cert_.role_map[v], "S.")) keep.set(v);
        const auto [rest, map] = induced_subgraph(g_, keep);
        const StaticGraph fp = footprint(rest);
        std::set<std::pair<Vertex, Vertex>> pairs;
        for (auto [u, v] : fp.edges) pairs.insert({std::min(u, v), std::max(u, v)});
        std::vector<Vertex> parent(fp.n);
        for (Vertex v = 0; v < fp.n; ++v) parent[v] = v;
        std::function<Vertex(Vertex)> find = [&](Vertex v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
        bool cycle = false;
        for (auto [u, v] : pairs) {
            const Vertex a = find(u), b = find(v);
            if (a == b) cycle = true;
            else parent[a] = b;
        }
        if (param("undirected")) {
            if (cycle) fail("footprint minus separators contains a cycle");
        } else {
            std::vector<std::size_t> size(fp.n, 0);
            for (Vertex v = 0; v < fp.n; ++v) ++size[find(v)];
            const auto biggest = *std::max_element(size.begin(), size.end());
            if (biggest > 2) fail("footprint minus separators has a component of size " + std::to_string(biggest));
        }
    }

    const std::vector<Meta>& metas() {
        if (!metas_.empty()) return metas_;
        std::map<std::string, Meta> by_name;
        for (Vertex v = 0; v < n_; ++v) {
            const auto& role = cert_.role_map[v];
            if (!has_prefix(role, "V.") && !has_prefix(role, "E.")) continue;
            const auto parts = split_role(role);
            const std::string name = role.substr(0, role.rfind('.'));
            Meta& x = by_name[name];
            x.name = name;
            x.edge = parts[0] == "E";
            x.i = std::stoi(parts[1]);
            if (x.edge) {
                x.j = std::stoi(parts[2]);
                x.a = parts[3];
                x.b = parts[4];
            } else {
                x.a = parts[2];
            }
            (parts.back() == "in" ? x.in : x.out) = v;
        }
        for (auto& [_, x] : by_name) metas_.push_back(x);
        return metas_;
    }

    bool meta_compatible(const Meta& x, const Meta& y) const {
        return compat_.adjacent(x.in, y.in) && compat_.adjacent(x.in, y.out) && compat_.adjacent(x.out, y.in) &&
               compat_.adjacent(x.out, y.out);
    }

    bool meta_incompatible(const Meta& x, const Meta& y) const {
        return !compat_.adjacent(x.in, y.in) && !compat_.adjacent(x.in, y.out) && !compat_.adjacent(x.out, y.in) &&
               !compat_.adjacent(x.out, y.out);
    }

    /// Which claim covers the pair, and whether it predicts compatibility.
    static std::pair<std::string, bool> predicted(const Meta& x, const Meta& y) {
        if (!x.edge && !y.edge) {
            if (x.i == y.i) return {"within-set-incompatibility", false};
            return {"C2-vertex-vertex", true};
        }
        if (!x.edge || !y.edge) {
            const Meta& v = x.edge ? y : x;
            const Meta& e = x.edge ? x : y;
            if (e.i == v.i) return {"C1-incidence", e.a == v.a};
            return {"C3-vertex-edge", true};
        }
        if (x.i == y.i && x.j == y.j) return {"within-set-incompatibility", false};
        if (x.i == y.j && x.j == y.i) return {"C4-identity", x.a == y.b && x.b == y.a};
        return {"C5-edge-edge", true};
    }

    template <class Fail>
    void check_meta_relation(const std::string& claim, Fail&& fail) {
        const auto& ms = metas();
        for (std::size_t p = 0; p < ms.size(); ++p)
            for (std::size_t q = p + 1; q < ms.size(); ++q) {
                const auto [rule, want] = predicted(ms[p], ms[q]);
                if (rule != claim) continue;
                const bool ok = want ? meta_compatible(ms[p], ms[q]) : meta_incompatible(ms[p], ms[q]);
                if (!ok)
                    fail(ms[p].name + " and " + ms[q].name + " should be " + (want ? "compatible" : "incompatible"));
            }
    }

    template <class Fail>
    void check_non_transitivity(Fail&& fail) {
        const auto& ms = metas();
        VertexSet r_vertices(n_);
        for (const auto& x : ms) {
            r_vertices.set(x.in);
            r_vertices.set(x.out);
        }
        for (const auto& x : ms) {
            std::vector<Time> start(n_, kUnreached);
            r_vertices.for_each([&](Vertex v) {
                if (v != x.in && v != x.out) start[v] = kStart;
            });
            const auto entry = propagate_arrivals(g_, start);
            std::vector<Time> via(n_, kUnreached);
            via[x.in] = entry[x.in];
            via[x.out] = entry[x.out];
            if (via[x.in] == kUnreached && via[x.out] == kUnreached) continue;
            const auto onward = propagate_arrivals(g_, via);
            bool found = false;
            r_vertices.for_each([&](Vertex y) {
                if (!found && y != x.in && y != x.out && onward[y] != kUnreached) {
                    found = true;
                    fail("a temporal path passes through " + x.name + " to " + cert_.role_map[y]);
                }
            });
        }
    }

    const TemporalGraph& g_;
    const ReductionCertificate& cert_;
    const PathCover* cover_;
    std::size_t n_;
    ReachMatrix reach_;
    CompatibilityGraph compat_;
    VertexSet expected_{0};
    std::vector<Meta> metas_;
};

}  // namespace

VerificationReport verify_certificate(const TemporalGraph& g, const ReductionCertificate& cert, const PathCover* cover,
                                      unsigned threads) {
    Verifier v(g, cert, cover, threads);
    return v.run();
}

}  // namespace tcc
