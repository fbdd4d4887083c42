#include "kneser/verify.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace kneser {

namespace {

constexpr std::size_t kMaxViolations = 100;

struct Collector {
    VerificationReport report;

    void add(const std::string& clause, std::size_t index, const std::string& detail) {
        if (report.violations.size() < kMaxViolations)
            report.violations.push_back(Violation{clause, index, detail});
    }

    VerificationReport finish() {
        report.ok = report.violations.empty();
        return std::move(report);
    }
};

std::vector<std::uint64_t> level_words(int n, int k) {
    std::vector<std::uint64_t> out;
    out.reserve(binomial(n, k));
    if (k == 0) {
        out.push_back(0);
        return out;
    }
    std::uint64_t w = (std::uint64_t{1} << k) - 1;
    std::uint64_t limit = std::uint64_t{1} << n;
    while (w < limit) {
        out.push_back(w);
        std::uint64_t c = w & (~w + 1);
        std::uint64_t r = w + c;
        w = (((r ^ w) >> 2) / c) | r;
    }
    return out;
}

}  // namespace

std::string VerificationReport::render() const {
    std::string out = ok ? "OK\n" : "FAIL\n";
    for (const Violation& v : violations)
        out += v.clause + "@" + std::to_string(v.index) + ": " + v.detail + "\n";
    return out;
}

VerificationReport verify_lemma_structure(const LemmaStructure& s) {
    Collector c;
    int n = s.n;
    int k = s.k;
    if (k < 1 || n < 2 * k + 1 || n > kMaxLen) {
        c.add("parameters", 0, "need k >= 1 and n >= 2k+1");
        return c.finish();
    }

    const std::uint64_t num_k = binomial(n, k);
    c.report.stats.length = s.cycle.size();

    // cycle shape
    if (s.cycle.size() != 2 * num_k)
        c.add("cycle length", 0, "expected " + std::to_string(2 * num_k) + ", got " +
                                     std::to_string(s.cycle.size()));
    bool lengths_ok = true;
    for (std::size_t i = 0; i < s.cycle.size(); ++i) {
        const Vertex& v = s.cycle[i];
        if (v.length() != n) {
            c.add("cycle vertex length", i, v.str());
            lengths_ok = false;
            continue;
        }
        ++c.report.stats.level_counts[v.level()];
        int lvl = v.level();
        if (lvl != k && lvl != k + 1) c.add("cycle level", i, v.str() + " has level " + std::to_string(lvl));
    }
    if (!lengths_ok) return c.finish();

    {
        std::set<Vertex> seen;
        for (std::size_t i = 0; i < s.cycle.size(); ++i)
            if (!seen.insert(s.cycle[i]).second) c.add("cycle distinct", i, "duplicate " + s.cycle[i].str());
    }
    for (std::size_t i = 0; i < s.cycle.size(); ++i) {
        const Vertex& v = s.cycle[i];
        const Vertex& w = s.cycle[(i + 1) % s.cycle.size()];
        if (hamming_distance(v, w) != 1)
            c.add("cycle adjacency", i, v.str() + " -- " + w.str());
        else if (v.level() == w.level())
            c.add("cycle alternation", i, v.str() + " -- " + w.str());
    }
    {
        std::set<Vertex> level_k;
        for (const Vertex& v : s.cycle)
            if (v.level() == k) level_k.insert(v);
        if (level_k.size() != num_k)
            c.add("cycle level-k coverage", 0, "visits " + std::to_string(level_k.size()) + " of " +
                                                   std::to_string(num_k) + " level-k vertices");
    }

    // path family
    if (s.paths.size() != num_k)
        c.add("path count", 0, "expected " + std::to_string(num_k) + ", got " +
                                   std::to_string(s.paths.size()));
    std::set<Vertex> cycle_set(s.cycle.begin(), s.cycle.end());
    std::set<Vertex> path_vertices;
    std::set<Vertex> path_ends;
    std::size_t pi = 0;
    for (const auto& [start, p] : s.paths) {
        if (p.empty()) {
            c.add("path empty", pi, "start " + start.str());
            ++pi;
            continue;
        }
        if (p.front() != start) c.add("path key", pi, "key " + start.str() + " != front " + p.front().str());
        if (p.front().level() != k + 1)
            c.add("path start level", pi, p.front().str());
        if (p.back().level() != n - k)
            c.add("path end level", pi, p.back().str());
        if (!cycle_set.count(p.front()))
            c.add("path start on cycle", pi, p.front().str());
        for (std::size_t t = 0; t + 1 < p.size(); ++t) {
            if (p[t].length() != n || p[t + 1].length() != n ||
                hamming_distance(p[t], p[t + 1]) != 1 || p[t + 1].level() != p[t].level() + 1)
                c.add("path monotone", pi, p[t].str() + " -- " + p[t + 1].str());
        }
        for (const Vertex& v : p)
            if (!path_vertices.insert(v).second)
                c.add("paths not vertex-disjoint", pi, v.str());
        path_ends.insert(p.back());
        ++pi;
    }
    for (std::size_t i = 0; i < s.cycle.size(); ++i) {
        const Vertex& v = s.cycle[i];
        if (v.level() == k + 1 && !s.paths.count(v))
            c.add("cycle vertex without path", i, v.str());
    }
    if (path_ends.size() != num_k)
        c.add("path end coverage", 0, "ends cover " + std::to_string(path_ends.size()) + " of " +
                                          std::to_string(num_k) + " level n-k vertices");
    for (const Vertex& e : path_ends)
        if (e.length() == n && e.level() != n - k) {
            c.add("path end coverage", 0, "end " + e.str() + " not in level n-k");
            break;
        }

    // anchor conditions
    Vertex a = make_a(n, k);
    Vertex a2 = make_a(n, k + 1);
    Vertex b = make_b(n, k);
    {
        auto it = std::find(s.cycle.begin(), s.cycle.end(), a2);
        bool has_d = false;
        if (it != s.cycle.end() && !s.cycle.empty()) {
            std::size_t i = static_cast<std::size_t>(it - s.cycle.begin());
            std::size_t len = s.cycle.size();
            const Vertex& prev = s.cycle[(i + len - 1) % len];
            const Vertex& next = s.cycle[(i + 1) % len];
            has_d = (prev == a && next == b) || (prev == b && next == a);
        }
        if (!has_d) c.add("condition (i)", 0, "cycle does not contain D(n,k)");
    }
    {
        auto it = s.paths.find(a2);
        MonotonePath want = make_special_path(SpecialPathKind::A, n, k);
        if (it == s.paths.end() || it->second != want)
            c.add("condition (ii)", 0, "path at a(n,k+1) is not A(n,k)");
    }
    {
        MonotonePath forbidden = make_special_path(SpecialPathKind::B, n, k);
        for (const Vertex& v : forbidden)
            if (path_vertices.count(v)) c.add("condition (iii)", 0, "path visits " + v.str());
        if (n > 2 * k + 1 && cycle_set.count(make_b(n, k + 1)))
            c.add("cycle avoids b(n,k+1)", 0, make_b(n, k + 1).str() + " is on the cycle");
    }

    return c.finish();
}

VerificationReport verify_certificate(const HCycleCertificate& cert) {
    Collector c;
    const GraphKind& g = cert.graph;
    c.report.stats.length = cert.order.size();

    if (cert.order.size() < 3) {
        c.add("cycle length", 0, "certificate has fewer than 3 vertices");
        return c.finish();
    }
    bool lengths_ok = true;
    for (std::size_t i = 0; i < cert.order.size(); ++i)
        if (cert.order[i].length() != g.n) {
            c.add("vertex length", i, cert.order[i].str());
            lengths_ok = false;
        }
    if (!lengths_ok) return c.finish();

    {
        std::set<Vertex> seen;
        for (std::size_t i = 0; i < cert.order.size(); ++i)
            if (!seen.insert(cert.order[i]).second)
                c.add("duplicate vertex", i, cert.order[i].str());
    }
    for (std::size_t i = 0; i < cert.order.size(); ++i) {
        const Vertex& v = cert.order[i];
        ++c.report.stats.level_counts[v.level()];
        if (!g.has_level(v.level()))
            c.add("level", i, v.str() + " has level " + std::to_string(v.level()));
    }
    for (std::size_t i = 0; i < cert.order.size(); ++i) {
        const Vertex& u = cert.order[i];
        const Vertex& v = cert.order[(i + 1) % cert.order.size()];
        try {
            if (!adjacent(g, u, v)) c.add("adjacency", i, u.str() + " -- " + v.str());
        } catch (const std::invalid_argument& e) {
            c.add("adjacency", i, e.what());
        }
    }
    if (cert.visited != cert.order.size())
        c.add("coverage claim", 0, "claimed " + std::to_string(cert.visited) + " visited, actual " +
                                       std::to_string(cert.order.size()));
    if (cert.total != g.vertex_count())
        c.add("coverage claim", 0, "claimed " + std::to_string(cert.total) + " total, actual " +
                                       std::to_string(g.vertex_count()));

    return c.finish();
}

std::vector<Vertex> graph_vertices(const GraphKind& g) {
    std::vector<std::uint64_t> words;
    switch (g.family) {
        case GraphKind::Family::Cube:
            for (std::uint64_t w = 0; w < (std::uint64_t{1} << g.n); ++w) words.push_back(w);
            break;
        case GraphKind::Family::CubeLevels: {
            words = level_words(g.n, g.k);
            auto upper = level_words(g.n, g.k + 1);
            words.insert(words.end(), upper.begin(), upper.end());
            break;
        }
        case GraphKind::Family::Kneser:
            words = level_words(g.n, g.k);
            break;
        case GraphKind::Family::BipKneser: {
            words = level_words(g.n, g.k);
            auto upper = level_words(g.n, g.n - g.k);
            words.insert(words.end(), upper.begin(), upper.end());
            break;
        }
    }
    std::sort(words.begin(), words.end());
    std::vector<Vertex> out;
    out.reserve(words.size());
    for (std::uint64_t w : words) out.push_back(Vertex(g.n, w));
    return out;
}

bool exhaustive_hamilton_oracle(const GraphKind& g, std::chrono::milliseconds budget) {
    std::vector<Vertex> verts = graph_vertices(g);
    const int nv = static_cast<int>(verts.size());
    if (nv < 3) return false;

    std::vector<std::vector<int>> adj(static_cast<std::size_t>(nv));
    for (int i = 0; i < nv; ++i)
        for (int j = 0; j < nv; ++j)
            if (i != j && adjacent(g, verts[static_cast<std::size_t>(i)], verts[static_cast<std::size_t>(j)]))
                adj[static_cast<std::size_t>(i)].push_back(j);
    for (const auto& nb : adj)
        if (nb.size() < 2) return false;

    std::vector<char> visited(static_cast<std::size_t>(nv), 0);
    std::vector<int> deg(static_cast<std::size_t>(nv));
    for (int i = 0; i < nv; ++i) deg[static_cast<std::size_t>(i)] = static_cast<int>(adj[static_cast<std::size_t>(i)].size());
    std::vector<char> adj_start(static_cast<std::size_t>(nv), 0);
    for (int w : adj[0]) adj_start[static_cast<std::size_t>(w)] = 1;

    auto mark = [&](int v) {
        visited[static_cast<std::size_t>(v)] = 1;
        for (int w : adj[static_cast<std::size_t>(v)]) --deg[static_cast<std::size_t>(w)];
    };
    auto unmark = [&](int v) {
        visited[static_cast<std::size_t>(v)] = 0;
        for (int w : adj[static_cast<std::size_t>(v)]) ++deg[static_cast<std::size_t>(w)];
    };

    std::vector<char> is_adj_head(static_cast<std::size_t>(nv), 0);
    std::vector<char> seen(static_cast<std::size_t>(nv), 0);
    std::vector<int> bfs;
    auto feasible = [&](int head, int remaining) {
        if (remaining == 0) return true;
        for (int w : adj[static_cast<std::size_t>(head)]) is_adj_head[static_cast<std::size_t>(w)] = 1;
        bool ok = true;
        for (int v = 0; v < nv && ok; ++v) {
            if (visited[static_cast<std::size_t>(v)]) continue;
            if (deg[static_cast<std::size_t>(v)] + adj_start[static_cast<std::size_t>(v)] +
                    is_adj_head[static_cast<std::size_t>(v)] <
                2)
                ok = false;
        }
        if (ok) {
            bfs.clear();
            std::fill(seen.begin(), seen.end(), 0);
            for (int w : adj[static_cast<std::size_t>(head)])
                if (!visited[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    bfs.push_back(w);
                }
            for (std::size_t qi = 0; qi < bfs.size(); ++qi)
                for (int w : adj[static_cast<std::size_t>(bfs[qi])])
                    if (!visited[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
                        seen[static_cast<std::size_t>(w)] = 1;
                        bfs.push_back(w);
                    }
            if (static_cast<int>(bfs.size()) != remaining) ok = false;
        }
        for (int w : adj[static_cast<std::size_t>(head)]) is_adj_head[static_cast<std::size_t>(w)] = 0;
        return ok;
    };

    struct Frame {
        int vertex;
        std::vector<int> candidates;
        std::size_t next = 0;
    };
    auto candidates_of = [&](int v) {
        std::vector<int> cand;
        for (int w : adj[static_cast<std::size_t>(v)])
            if (!visited[static_cast<std::size_t>(w)]) cand.push_back(w);
        std::stable_sort(cand.begin(), cand.end(), [&](int x, int y) {
            return deg[static_cast<std::size_t>(x)] < deg[static_cast<std::size_t>(y)];
        });
        return cand;
    };

    const auto deadline = std::chrono::steady_clock::now() + budget;
    long long steps = 0;
    std::vector<Frame> stack;
    mark(0);
    stack.push_back(Frame{0, candidates_of(0), 0});
    int in_path = 1;

    while (!stack.empty()) {
        if ((++steps & 0x3ff) == 0 && std::chrono::steady_clock::now() > deadline)
            throw BudgetExhausted("exhaustive_hamilton_oracle: budget exhausted for " + g.name());
        Frame& top = stack.back();
        if (in_path == nv) {
            if (adj_start[static_cast<std::size_t>(top.vertex)]) return true;
            unmark(top.vertex);
            --in_path;
            stack.pop_back();
            continue;
        }
        if (top.next >= top.candidates.size()) {
            unmark(top.vertex);
            --in_path;
            stack.pop_back();
            continue;
        }
        int cand = top.candidates[top.next++];
        if (visited[static_cast<std::size_t>(cand)]) continue;
        mark(cand);
        ++in_path;
        if (!feasible(cand, nv - in_path)) {
            unmark(cand);
            --in_path;
            continue;
        }
        stack.push_back(Frame{cand, candidates_of(cand), 0});
    }
    return false;
}

}  // namespace kneser
