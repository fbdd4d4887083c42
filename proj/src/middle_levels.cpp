#include "kneser/middle_levels.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <random>
#include <unordered_map>

#include "kneser/certio.hpp"

namespace kneser {

void validate_middle_cycle(const MiddleLevelsCycle& c) {
    if (c.k < 1) throw std::runtime_error("middle cycle: k must be >= 1");
    int n = 2 * c.k + 1;
    std::uint64_t want = 2 * binomial(n, c.k);
    if (c.order.size() != want)
        throw std::runtime_error("middle cycle: wrong length " + std::to_string(c.order.size()) +
                                 ", expected " + std::to_string(want));
    std::vector<Vertex> sorted = c.order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < c.order.size(); ++i) {
        const Vertex& v = c.order[i];
        if (v.length() != n)
            throw std::runtime_error("middle cycle: wrong vertex length at index " + std::to_string(i));
        int lvl = v.level();
        if (lvl != c.k && lvl != c.k + 1)
            throw std::runtime_error("middle cycle: bad level at index " + std::to_string(i));
        const Vertex& next = c.order[(i + 1) % c.order.size()];
        if (hamming_distance(v, next) != 1)
            throw std::runtime_error("middle cycle: adjacency violated at index " + std::to_string(i));
        if (i + 1 < sorted.size() && sorted[i] == sorted[i + 1])
            throw std::runtime_error("middle cycle: duplicate vertex " + sorted[i].str());
    }
}

namespace {

// All words of length n with exactly k bits, ascending (Gosper's hack).
std::vector<std::uint64_t> level_words(int n, int k) {
    std::vector<std::uint64_t> out;
    out.reserve(binomial(n, k));
    std::uint64_t w = (std::uint64_t{1} << k) - 1;
    std::uint64_t limit = std::uint64_t{1} << n;
    while (w < limit) {
        out.push_back(w);
        std::uint64_t c = w & (~w + 1);
        std::uint64_t r = w + c;
        w = (((r ^ w) >> 2) / c) | r;
        if (c == 0) break;
    }
    return out;
}

}  // namespace

MiddleLevelsCycle solve_base(int k, std::chrono::milliseconds budget) {
    if (k < 1) throw std::invalid_argument("solve_base: k must be >= 1");
    int n = 2 * k + 1;
    if (n > kMaxLen) throw std::invalid_argument("solve_base: k too large");

    std::vector<std::uint64_t> words = level_words(n, k);
    {
        auto upper = level_words(n, k + 1);
        words.insert(words.end(), upper.begin(), upper.end());
    }
    std::sort(words.begin(), words.end());
    const int nv = static_cast<int>(words.size());

    std::unordered_map<std::uint64_t, int> index;
    index.reserve(words.size());
    for (int i = 0; i < nv; ++i) index.emplace(words[static_cast<std::size_t>(i)], i);

    std::vector<std::vector<int>> adj(static_cast<std::size_t>(nv));
    for (int i = 0; i < nv; ++i) {
        std::uint64_t w = words[static_cast<std::size_t>(i)];
        for (int b = 0; b < n; ++b) {
            auto it = index.find(w ^ (std::uint64_t{1} << b));
            if (it != index.end()) adj[static_cast<std::size_t>(i)].push_back(it->second);
        }
        std::sort(adj[static_cast<std::size_t>(i)].begin(), adj[static_cast<std::size_t>(i)].end());
    }

    const int start = index.at(make_a(n, k).word());
    std::vector<char> visited(static_cast<std::size_t>(nv), 0);
    std::vector<int> deg(static_cast<std::size_t>(nv));
    std::vector<char> adj_start(static_cast<std::size_t>(nv), 0);
    for (int i = 0; i < nv; ++i) deg[static_cast<std::size_t>(i)] = static_cast<int>(adj[static_cast<std::size_t>(i)].size());
    for (int w : adj[static_cast<std::size_t>(start)]) adj_start[static_cast<std::size_t>(w)] = 1;

    auto mark = [&](int v) {
        visited[static_cast<std::size_t>(v)] = 1;
        for (int w : adj[static_cast<std::size_t>(v)]) --deg[static_cast<std::size_t>(w)];
    };
    auto unmark = [&](int v) {
        visited[static_cast<std::size_t>(v)] = 0;
        for (int w : adj[static_cast<std::size_t>(v)]) ++deg[static_cast<std::size_t>(w)];
    };

    std::vector<char> is_adj_head(static_cast<std::size_t>(nv), 0);
    std::vector<int> bfs;
    std::vector<char> seen(static_cast<std::size_t>(nv), 0);

    // Dead end unless every unvisited vertex keeps two usable connections
    // and the unvisited region stays reachable from the head.
    auto feasible = [&](int head, int remaining) {
        if (remaining == 0) return true;
        for (int w : adj[static_cast<std::size_t>(head)]) is_adj_head[static_cast<std::size_t>(w)] = 1;
        bool ok = true;
        for (int v = 0; v < nv && ok; ++v) {
            if (visited[static_cast<std::size_t>(v)]) continue;
            int avail = deg[static_cast<std::size_t>(v)] + adj_start[static_cast<std::size_t>(v)] +
                        is_adj_head[static_cast<std::size_t>(v)];
            if (avail < 2) ok = false;
        }
        if (ok) {
            bfs.clear();
            std::fill(seen.begin(), seen.end(), 0);
            for (int w : adj[static_cast<std::size_t>(head)]) {
                if (!visited[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    bfs.push_back(w);
                }
            }
            for (std::size_t qi = 0; qi < bfs.size(); ++qi) {
                for (int w : adj[static_cast<std::size_t>(bfs[qi])]) {
                    if (!visited[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
                        seen[static_cast<std::size_t>(w)] = 1;
                        bfs.push_back(w);
                    }
                }
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

    // Restart tie-break keys; restart 0 keeps plain ascending order.
    std::vector<std::uint32_t> key(static_cast<std::size_t>(nv), 0);

    // Least-degree first. A neighbor that would keep fewer than two usable
    // connections once the head moves on is forced; two of those are a
    // dead end.
    auto candidates_of = [&](int v) {
        std::vector<int> cand;
        int forced = -1, nforced = 0;
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (visited[static_cast<std::size_t>(w)]) continue;
            cand.push_back(w);
            if (deg[static_cast<std::size_t>(w)] + adj_start[static_cast<std::size_t>(w)] <= 1) {
                forced = w;
                ++nforced;
            }
        }
        if (nforced >= 2) return std::vector<int>{};
        if (nforced == 1) return std::vector<int>{forced};
        std::stable_sort(cand.begin(), cand.end(), [&](int a, int b) {
            auto da = deg[static_cast<std::size_t>(a)], db = deg[static_cast<std::size_t>(b)];
            if (da != db) return da < db;
            return key[static_cast<std::size_t>(a)] < key[static_cast<std::size_t>(b)];
        });
        return cand;
    };

    const auto deadline = std::chrono::steady_clock::now() + budget;
    std::vector<Frame> stack;

    for (int restart = 0;; ++restart) {
        if (restart > 0) {
            std::mt19937 rng(static_cast<std::uint32_t>(restart));
            for (auto& x : key) x = rng();
        }
        long long steps = 0;
        const long long step_limit = 200000;

        stack.clear();
        std::fill(visited.begin(), visited.end(), 0);
        for (int i = 0; i < nv; ++i)
            deg[static_cast<std::size_t>(i)] = static_cast<int>(adj[static_cast<std::size_t>(i)].size());
        mark(start);
        stack.push_back(Frame{start, candidates_of(start), 0});
        int in_path = 1;

        while (!stack.empty()) {
            if ((++steps & 0x3ff) == 0 && std::chrono::steady_clock::now() > deadline)
                throw BudgetExhausted("solve_base: search budget exhausted for k=" +
                                      std::to_string(k));
            if (steps > step_limit) break;  // restart with a new tie-break
            Frame& top = stack.back();
            if (in_path == nv) {
                if (adj_start[static_cast<std::size_t>(top.vertex)]) break;  // cycle closed
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
            int c = top.candidates[top.next++];
            if (visited[static_cast<std::size_t>(c)]) continue;
            mark(c);
            ++in_path;
            if (!feasible(c, nv - in_path)) {
                unmark(c);
                --in_path;
                continue;
            }
            stack.push_back(Frame{c, candidates_of(c), 0});
        }

        if (static_cast<int>(stack.size()) == nv) break;  // found
    }

    MiddleLevelsCycle result;
    result.k = k;
    result.order.reserve(stack.size());
    for (const Frame& f : stack)
        result.order.push_back(Vertex(n, words[static_cast<std::size_t>(f.vertex)]));
    validate_middle_cycle(result);
    return result;
}

MiddleLevelsCycle normalize_anchor(const MiddleLevelsCycle& c) {
    validate_middle_cycle(c);
    int n = 2 * c.k + 1;
    int k = c.k;
    std::size_t len = c.order.size();

    // first (k, k+1, k) triple from index 0; the cycle alternates, so it
    // starts at index 0 or 1
    std::size_t i = c.order[0].level() == k ? 0 : 1;
    const Vertex& u = c.order[i];
    const Vertex& v = c.order[(i + 1) % len];
    const Vertex& w = c.order[(i + 2) % len];

    std::uint64_t both = u.word() & w.word();
    std::uint64_t only_u = u.word() & ~w.word();
    std::uint64_t only_w = w.word() & ~u.word();
    std::uint64_t zeros = ~(u.word() | v.word() | w.word());

    // map supports onto the anchors: common 1-positions fill the shared
    // block of a(n,k) and b(n,k), the private bits go to positions n and
    // n-k, the 0-positions fill the prefix in increasing order
    std::vector<int> pi(static_cast<std::size_t>(n), 0);
    int next_common = n - k + 1;
    int next_zero = 1;
    for (int pos = 1; pos <= n; ++pos) {
        std::uint64_t m = std::uint64_t{1} << (n - pos);
        if (both & m)
            pi[static_cast<std::size_t>(pos - 1)] = next_common++;
        else if (only_u & m)
            pi[static_cast<std::size_t>(pos - 1)] = n;
        else if (only_w & m)
            pi[static_cast<std::size_t>(pos - 1)] = n - k;
        else if (zeros & m)
            pi[static_cast<std::size_t>(pos - 1)] = next_zero++;
    }

    MiddleLevelsCycle out;
    out.k = c.k;
    out.order.reserve(len);
    for (const Vertex& x : c.order) out.order.push_back(apply_permutation(x, pi));
    return out;
}

MiddleLevelsCycle import_certificate(std::istream& in) {
    CertificateFile f = read_certificate_file(in);
    if (f.tag != "MID") throw ParseError(1, "expected tag MID, got '" + f.tag + "'");
    if (f.n != 2 * f.k + 1) throw std::runtime_error("middle cycle: n must equal 2k+1");
    MiddleLevelsCycle c;
    c.k = f.k;
    c.order = std::move(f.body);
    validate_middle_cycle(c);
    return c;
}

void export_certificate(std::ostream& out, const MiddleLevelsCycle& c) {
    CertificateFile f;
    f.tag = "MID";
    f.n = 2 * c.k + 1;
    f.k = c.k;
    f.body = c.order;
    write_certificate_file(out, f);
}

std::filesystem::path base_cert_dir() {
    if (const char* dir = std::getenv("KNESER_BASE_DIR")) return dir;
    return "./base-certs";
}

MiddleLevelsCycle CachingProvider::middle_cycle(int k) {
    auto it = memo_.find(k);
    if (it != memo_.end()) return it->second;

    MiddleLevelsCycle c;
    std::filesystem::path file = dir_ / ("mid-" + std::to_string(k) + ".cert");
    std::ifstream in(file);
    if (in) {
        try {
            c = import_certificate(in);
        } catch (const std::exception& e) {
            throw std::runtime_error("bad base certificate " + file.string() + ": " + e.what());
        }
    } else {
        c = solve_base(k, budget_);
    }
    memo_.emplace(k, c);
    return c;
}

}  // namespace kneser
