#include "kneser/derive.hpp"

#include <numeric>

namespace kneser {

HCycleCertificate bipartite_hamilton(int n, int k, BaseCycleProvider& provider) {
    GraphKind g = GraphKind::bip_kneser(n, k);
    LemmaStructure s = build(n, k, provider);

    HCycleCertificate cert{g, {}, 0, g.vertex_count()};
    cert.order.reserve(s.cycle.size());
    for (std::size_t i = 0; i < s.cycle.size(); i += 2) {
        cert.order.push_back(s.cycle[i]);                          // level k
        cert.order.push_back(s.paths.at(s.cycle[i + 1]).back());   // level n-k
    }
    cert.visited = cert.order.size();
    return cert;
}

HCycleCertificate kneser_cycle(int n, int k, BaseCycleProvider& provider) {
    GraphKind g = GraphKind::kneser(n, k);
    HCycleCertificate cert{g, {}, 0, g.vertex_count()};

    if (k == 1) {
        for (int i = 1; i <= n; ++i)
            cert.order.push_back(Vertex(n, std::uint64_t{1} << (n - i)));
        cert.visited = cert.order.size();
        return cert;
    }

    LemmaStructure s = build(n - 1, k - 1, provider);
    std::size_t mid = static_cast<std::size_t>(n - 2 * k - 1);  // offset of level n-k-1 on a path
    cert.order.reserve(s.cycle.size());
    for (std::size_t i = 0; i < s.cycle.size(); i += 2) {
        cert.order.push_back(append_bit(s.cycle[i], 1));
        const MonotonePath& p = s.paths.at(s.cycle[i + 1]);
        cert.order.push_back(append_bit(complement(p[mid]), 0));
    }
    cert.visited = cert.order.size();
    return cert;
}

HCycleCertificate qnk_cycle(int n, int k, BaseCycleProvider& provider) {
    if (n < 3 || k < 1 || k > n - 2)
        throw std::invalid_argument("qnk_cycle: need n >= 3 and 1 <= k <= n-2");
    GraphKind g = GraphKind::cube_levels(n, k);
    HCycleCertificate cert{g, {}, 0, g.vertex_count()};

    if (2 * k + 1 <= n) {
        cert.order = build(n, k, provider).cycle;
    } else {
        // upper half: mirror the (n, n-k-1) cycle through bit complement
        LemmaStructure s = build(n, n - k - 1, provider);
        cert.order.reserve(s.cycle.size());
        for (const Vertex& v : s.cycle) cert.order.push_back(complement(v));
    }
    cert.visited = cert.order.size();
    return cert;
}

Fraction coverage_fraction(int n, int k) {
    if (k < 1 || n < 2 * k + 1) throw std::invalid_argument("coverage_fraction: bad parameters");
    if (k == 1) return Fraction{1, 1};
    std::int64_t g = std::gcd(static_cast<std::int64_t>(2 * k), static_cast<std::int64_t>(n));
    return Fraction{2 * k / g, n / g};
}

}  // namespace kneser
