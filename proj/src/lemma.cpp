#include "kneser/lemma.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "kneser/certio.hpp"
#include "kneser/verify.hpp"

namespace kneser {

MonotonePath make_special_path(SpecialPathKind kind, int n, int k) {
    if (k < 1 || n < 2 * k + 1 || n > kMaxLen)
        throw std::invalid_argument("make_special_path: need k >= 1 and n >= 2k+1");
    MonotonePath p;
    switch (kind) {
        case SpecialPathKind::D:
            p = {make_a(n, k), make_a(n, k + 1), make_b(n, k)};
            break;
        case SpecialPathKind::A:
            for (int j = k + 1; j <= n - k; ++j) p.push_back(make_a(n, j));
            break;
        case SpecialPathKind::B:
            for (int j = k + 1; j <= n - k - 1; ++j) p.push_back(make_b(n, j));
            break;
    }
    return p;
}

namespace {

void check_built(const LemmaStructure& s, const char* builder) {
    VerificationReport rep = verify_lemma_structure(s);
    if (!rep.ok) {
        const Violation& v = rep.violations.front();
        throw InvariantViolation(std::string(builder) + " at (n,k)=(" + std::to_string(s.n) +
                                 "," + std::to_string(s.k) + "): " + v.clause + "@" +
                                 std::to_string(v.index) + ": " + v.detail);
    }
}

// Rotate/reflect so the stored sequence begins a(n,k), a(n,k+1), b(n,k).
std::vector<Vertex> canonical_cycle(const std::vector<Vertex>& cyc, int n, int k) {
    Vertex a = make_a(n, k);
    Vertex a2 = make_a(n, k + 1);
    std::size_t len = cyc.size();
    auto it = std::find(cyc.begin(), cyc.end(), a);
    if (it == cyc.end()) throw InvariantViolation("cycle does not visit a(n,k)");
    std::size_t i = static_cast<std::size_t>(it - cyc.begin());

    std::vector<Vertex> out;
    out.reserve(len);
    if (cyc[(i + 1) % len] == a2) {
        for (std::size_t t = 0; t < len; ++t) out.push_back(cyc[(i + t) % len]);
    } else if (cyc[(i + len - 1) % len] == a2) {
        for (std::size_t t = 0; t < len; ++t) out.push_back(cyc[(i + len - t) % len]);
    } else {
        throw InvariantViolation("a(n,k+1) is not a cycle neighbor of a(n,k)");
    }
    if (out.size() < 3 || out[2] != make_b(n, k))
        throw InvariantViolation("cycle does not contain the anchor triple D(n,k)");
    return out;
}

}  // namespace

LemmaStructure build_base_a(int k, BaseCycleProvider& provider) {
    if (k < 1) throw std::invalid_argument("build_base_a: k must be >= 1");
    int n = 2 * k + 1;
    MiddleLevelsCycle base = normalize_anchor(provider.middle_cycle(k));

    LemmaStructure s;
    s.n = n;
    s.k = k;
    s.cycle = canonical_cycle(base.order, n, k);
    for (const Vertex& v : s.cycle)
        if (v.level() == k + 1) s.paths.emplace(v, MonotonePath{v});
    check_built(s, "build_base_a");
    return s;
}

LemmaStructure build_k1(int n) {
    if (n < 4 || n > kMaxLen) throw std::invalid_argument("build_k1: need n >= 4");

    // swap of the last two bit positions
    std::vector<int> swap_tail(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) swap_tail[static_cast<std::size_t>(i - 1)] = i;
    swap_tail[static_cast<std::size_t>(n - 2)] = n;
    swap_tail[static_cast<std::size_t>(n - 1)] = n - 1;
    auto fix = [&](const Vertex& v) { return apply_permutation(v, swap_tail); };

    // auxiliary cycle: the shifts of D(n,1) glued end to end
    std::vector<Vertex> aux;
    aux.reserve(2 * static_cast<std::size_t>(n));
    for (int l = 0; l < n; ++l) {
        aux.push_back(fix(rotate(make_a(n, 1), l)));
        aux.push_back(fix(rotate(make_a(n, 2), l)));
    }

    LemmaStructure s;
    s.n = n;
    s.k = 1;
    s.cycle = canonical_cycle(aux, n, 1);
    for (int l = 0; l < n; ++l) {
        MonotonePath p;
        for (int j = 2; j <= n - 1; ++j) p.push_back(fix(rotate(make_a(n, j), l)));
        s.paths.emplace(p.front(), std::move(p));
    }
    check_built(s, "build_k1");
    return s;
}

XYPartition compute_xy_partition(const LemmaStructure& sub_k, const LemmaStructure& sub_km1) {
    if (sub_km1.n != sub_k.n || sub_km1.k != sub_k.k - 1)
        throw std::invalid_argument("compute_xy_partition: mismatched substructures");
    int m = sub_k.n;
    int k = sub_k.k;
    int top = m - k;  // level of the sub_k path ends

    // level-top vertex of a (k-1)-family path is its penultimate vertex
    std::map<Vertex, Vertex> on_km1;
    for (const auto& [start, p] : sub_km1.paths) {
        if (p.size() < 2)
            throw std::invalid_argument("compute_xy_partition: (k-1)-family path too short");
        on_km1.emplace(p[p.size() - 2], p.back());
    }

    Vertex a_top = make_a(m, top);
    Vertex b_top = make_b(m, top);
    XYPartition xy;
    for (const auto& [start, p] : sub_k.paths) {
        const Vertex& e = p.back();
        if (e == a_top || e == b_top) continue;
        auto it = on_km1.find(e);
        if (it != on_km1.end()) {
            xy.x.insert(e);
            xy.terminal_edges.emplace(e, it->second);
        } else {
            xy.y.insert(e);
        }
    }
    return xy;
}

LemmaStructure build_step_c(int n, int k, const LemmaStructure& sub_k,
                            const LemmaStructure& sub_km1) {
    if (k < 2 || n < 2 * k + 2) throw std::invalid_argument("build_step_c: need k >= 2, n >= 2k+2");
    if (sub_k.n != n - 1 || sub_k.k != k || sub_km1.n != n - 1 || sub_km1.k != k - 1)
        throw std::invalid_argument("build_step_c: mismatched substructures");
    int m = n - 1;

    // cycle: both edges of D(m,k) and the vertex a(m,k+1) leave C(m,k),
    // the edge (a(m,k),b(m,k-1)) leaves C(m,k-1) and b(m,k) joins it; the
    // halves are glued with two matching edges
    const std::vector<Vertex>& s1 = sub_k.cycle;    // a(m,k), a(m,k+1), b(m,k), ...
    const std::vector<Vertex>& s2 = sub_km1.cycle;  // a(m,k-1), a(m,k), b(m,k-1), ...
    std::vector<Vertex> full;
    full.reserve(s1.size() + s2.size());
    for (std::size_t t = 2; t < s1.size(); ++t) full.push_back(append_bit(s1[t], 0));
    full.push_back(append_bit(s1[0], 0));
    full.push_back(append_bit(s2[1], 1));
    full.push_back(append_bit(s2[0], 1));
    for (std::size_t t = s2.size() - 1; t >= 2; --t) full.push_back(append_bit(s2[t], 1));
    full.push_back(append_bit(make_b(m, k), 1));

    LemmaStructure s;
    s.n = n;
    s.k = k;
    s.cycle = canonical_cycle(full, n, k);

    XYPartition xy = compute_xy_partition(sub_k, sub_km1);
    Vertex b_top = make_b(m, m - k);
    Vertex a_above = make_a(m, m - k + 1);
    Vertex a_path_start = make_a(m, k + 1);

    for (const auto& [start, p] : sub_k.paths) {
        if (start == a_path_start) continue;  // A(m,k) is dropped
        MonotonePath q;
        q.reserve(p.size() + 1);
        for (const Vertex& v : p) q.push_back(append_bit(v, 0));
        const Vertex& e = p.back();
        if (e == b_top)
            q.push_back(append_bit(a_above, 0));
        else if (xy.terminal_edges.count(e))
            q.push_back(append_bit(xy.terminal_edges.at(e), 0));
        else if (xy.y.count(e))
            q.push_back(append_bit(e, 1));  // matching edge
        else
            throw InvariantViolation("build_step_c: path end " + e.str() +
                                     " is neither an anchor nor in X or Y");
        s.paths.emplace(q.front(), std::move(q));
    }

    for (const auto& [start, p] : sub_km1.paths) {
        MonotonePath q;
        q.reserve(p.size() - 1);
        for (std::size_t t = 0; t + 1 < p.size(); ++t) q.push_back(append_bit(p[t], 1));
        s.paths.emplace(q.front(), std::move(q));
    }
    {
        MonotonePath q;
        for (const Vertex& v : make_special_path(SpecialPathKind::B, m, k - 1))
            q.push_back(append_bit(v, 1));
        s.paths.emplace(q.front(), std::move(q));
    }

    check_built(s, "build_step_c");
    return s;
}

LemmaStructure build(int n, int k, BaseCycleProvider& provider) {
    if (k < 1 || n < 2 * k + 1 || n > kMaxLen)
        throw std::invalid_argument("build: need k >= 1 and n >= 2k+1");

    std::map<int, LemmaStructure> prev;
    for (int m = 3; m <= n; ++m) {
        std::map<int, LemmaStructure> cur;
        int jmin = std::max(1, k - (n - m));
        int jmax = std::min(k, (m - 1) / 2);
        for (int j = jmin; j <= jmax; ++j) {
            if (m == 2 * j + 1)
                cur.emplace(j, build_base_a(j, provider));
            else if (j == 1)
                cur.emplace(j, build_k1(m));
            else
                cur.emplace(j, build_step_c(m, j, prev.at(j), prev.at(j - 1)));
        }
        prev = std::move(cur);
    }
    return std::move(prev.at(k));
}

void dump_lemma(std::ostream& out, const LemmaStructure& s) {
    out << "LEMMA " << s.n << ' ' << s.k << '\n';
    out << "CYCLE\n";
    for (const Vertex& v : s.cycle) out << v.str() << '\n';
    for (const auto& [start, p] : s.paths) {
        out << "PATH\n";
        for (const Vertex& v : p) out << v.str() << '\n';
    }
}

LemmaStructure parse_lemma(std::istream& in) {
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] != '#') break;
    }
    if (lineno == 0) throw ParseError(1, "empty file");

    LemmaStructure s;
    {
        std::istringstream hs(line);
        std::string tag, extra;
        if (!(hs >> tag >> s.n >> s.k) || tag != "LEMMA" || (hs >> extra))
            throw ParseError(lineno, "bad LEMMA header");
        if (s.n < 1 || s.n > kMaxLen) throw ParseError(lineno, "bad header values");
    }
    if (!std::getline(in, line) || line != "CYCLE") throw ParseError(++lineno, "expected CYCLE");
    ++lineno;

    auto parse_vertex = [&](const std::string& text) {
        if (static_cast<int>(text.size()) != s.n) throw ParseError(lineno, "bad length");
        try {
            return Vertex::parse(text);
        } catch (const std::invalid_argument& e) {
            throw ParseError(lineno, e.what());
        }
    };

    MonotonePath current;
    bool in_path = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line == "PATH") {
            if (in_path) {
                if (current.empty()) throw ParseError(lineno, "empty PATH block");
                if (!s.paths.emplace(current.front(), current).second)
                    throw ParseError(lineno, "duplicate path start " + current.front().str());
            } else if (s.cycle.empty()) {
                throw ParseError(lineno, "empty CYCLE block");
            }
            in_path = true;
            current.clear();
        } else if (in_path) {
            current.push_back(parse_vertex(line));
        } else {
            s.cycle.push_back(parse_vertex(line));
        }
    }
    if (in_path) {
        if (current.empty()) throw ParseError(lineno, "empty PATH block");
        if (!s.paths.emplace(current.front(), current).second)
            throw ParseError(lineno, "duplicate path start " + current.front().str());
    }
    if (s.cycle.empty()) throw ParseError(lineno, "empty CYCLE block");
    return s;
}

}  // namespace kneser
