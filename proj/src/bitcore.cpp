#include "kneser/bitcore.hpp"

#include <bit>
#include <numeric>

namespace kneser {

namespace {

std::uint64_t length_mask(int n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

}  // namespace

Vertex::Vertex(int n, std::uint64_t bits) : n_(n), bits_(bits) {
    if (n < 1 || n > kMaxLen)
        throw std::invalid_argument("vertex length out of range: " + std::to_string(n));
    if (bits & ~length_mask(n))
        throw std::invalid_argument("bits exceed vertex length");
}

Vertex Vertex::parse(std::string_view s) {
    if (s.empty() || s.size() > static_cast<std::size_t>(kMaxLen))
        throw std::invalid_argument("bad vertex length");
    std::uint64_t bits = 0;
    for (char c : s) {
        if (c != '0' && c != '1') throw std::invalid_argument("bad vertex character");
        bits = bits << 1 | static_cast<std::uint64_t>(c - '0');
    }
    return Vertex(static_cast<int>(s.size()), bits);
}

int Vertex::level() const {
    return std::popcount(bits_);
}

int Vertex::bit(int pos) const {
    if (pos < 1 || pos > n_) throw std::invalid_argument("bit position out of range");
    return static_cast<int>(bits_ >> (n_ - pos) & 1);
}

std::string Vertex::str() const {
    std::string s(static_cast<std::size_t>(n_), '0');
    for (int i = 0; i < n_; ++i)
        if (bits_ >> (n_ - 1 - i) & 1) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

std::vector<int> Vertex::support() const {
    std::vector<int> out;
    for (int i = 1; i <= n_; ++i)
        if (bit(i)) out.push_back(i);
    return out;
}

std::string Vertex::set_str() const {
    std::string s = "{";
    bool first = true;
    for (int i : support()) {
        if (!first) s += ',';
        s += std::to_string(i);
        first = false;
    }
    return s + "}";
}

int level_of(const Vertex& v) {
    return v.level();
}

Vertex make_a(int n, int k) {
    if (n < 1 || n > kMaxLen || k < 0 || k > n)
        throw std::invalid_argument("make_a: bad parameters");
    return Vertex(n, length_mask(k));
}

Vertex make_b(int n, int k) {
    if (n < 2 || n > kMaxLen || k < 1 || k > n - 1)
        throw std::invalid_argument("make_b: bad parameters");
    return append_bit(make_a(n - 1, k), 0);
}

Vertex rotate(const Vertex& v, int shift) {
    int n = v.length();
    int s = ((shift % n) + n) % n;
    if (s == 0) return v;
    std::uint64_t bits = v.word();
    return Vertex(n, (bits << s | bits >> (n - s)) & length_mask(n));
}

Vertex append_bit(const Vertex& v, int b) {
    if (b != 0 && b != 1) throw std::invalid_argument("append_bit: bit must be 0 or 1");
    return Vertex(v.length() + 1, v.word() << 1 | static_cast<std::uint64_t>(b));
}

Vertex complement(const Vertex& v) {
    return Vertex(v.length(), ~v.word() & length_mask(v.length()));
}

Vertex apply_permutation(const Vertex& v, const std::vector<int>& pi) {
    int n = v.length();
    if (static_cast<int>(pi.size()) != n)
        throw std::invalid_argument("apply_permutation: size mismatch");
    std::uint64_t seen = 0;
    std::uint64_t bits = 0;
    for (int i = 1; i <= n; ++i) {
        int target = pi[static_cast<std::size_t>(i - 1)];
        if (target < 1 || target > n)
            throw std::invalid_argument("apply_permutation: target out of range");
        std::uint64_t m = std::uint64_t{1} << (n - target);
        if (seen & m) throw std::invalid_argument("apply_permutation: not a bijection");
        seen |= m;
        if (v.bit(i)) bits |= m;
    }
    return Vertex(n, bits);
}

int hamming_distance(const Vertex& u, const Vertex& v) {
    if (u.length() != v.length())
        throw std::invalid_argument("hamming_distance: length mismatch");
    return std::popcount(u.word() ^ v.word());
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return r;
}

GraphKind GraphKind::cube(int n) {
    if (n < 1 || n > kMaxLen) throw std::invalid_argument("cube: bad n");
    return GraphKind{Family::Cube, n, 0};
}

GraphKind GraphKind::cube_levels(int n, int k) {
    if (n < 1 || n > kMaxLen || k < 0 || k > n - 1)
        throw std::invalid_argument("cube_levels: need 0 <= k <= n-1");
    return GraphKind{Family::CubeLevels, n, k};
}

GraphKind GraphKind::kneser(int n, int k) {
    if (k < 1 || n < 2 * k + 1 || n > kMaxLen)
        throw std::invalid_argument("kneser: need k >= 1 and n >= 2k+1");
    return GraphKind{Family::Kneser, n, k};
}

GraphKind GraphKind::bip_kneser(int n, int k) {
    if (k < 1 || n < 2 * k + 1 || n > kMaxLen)
        throw std::invalid_argument("bip_kneser: need k >= 1 and n >= 2k+1");
    return GraphKind{Family::BipKneser, n, k};
}

std::uint64_t GraphKind::vertex_count() const {
    switch (family) {
        case Family::Cube:
            return n >= 64 ? 0 : std::uint64_t{1} << n;
        case Family::CubeLevels:
            return binomial(n, k) + binomial(n, k + 1);
        case Family::Kneser:
            return binomial(n, k);
        case Family::BipKneser:
            return 2 * binomial(n, k);
    }
    throw std::logic_error("unreachable");
}

bool GraphKind::has_level(int level) const {
    switch (family) {
        case Family::Cube:
            return level >= 0 && level <= n;
        case Family::CubeLevels:
            return level == k || level == k + 1;
        case Family::Kneser:
            return level == k;
        case Family::BipKneser:
            return level == k || level == n - k;
    }
    throw std::logic_error("unreachable");
}

std::string GraphKind::name() const {
    switch (family) {
        case Family::Cube:
            return "Q(" + std::to_string(n) + ")";
        case Family::CubeLevels:
            return "Q(" + std::to_string(n) + "," + std::to_string(k) + ")";
        case Family::Kneser:
            return "K(" + std::to_string(n) + "," + std::to_string(k) + ")";
        case Family::BipKneser:
            return "H(" + std::to_string(n) + "," + std::to_string(k) + ")";
    }
    throw std::logic_error("unreachable");
}

bool adjacent(const GraphKind& g, const Vertex& u, const Vertex& v) {
    if (u.length() != g.n || v.length() != g.n)
        throw std::invalid_argument("adjacent: vertex length does not match graph");
    if (!g.has_level(u.level()) || !g.has_level(v.level()))
        throw std::invalid_argument("adjacent: vertex outside the declared levels");
    switch (g.family) {
        case GraphKind::Family::Cube:
            return hamming_distance(u, v) == 1;
        case GraphKind::Family::CubeLevels:
            return hamming_distance(u, v) == 1;
        case GraphKind::Family::Kneser:
            return (u.word() & v.word()) == 0;
        case GraphKind::Family::BipKneser: {
            if (u.level() == v.level()) return false;
            const Vertex& small = u.level() < v.level() ? u : v;
            const Vertex& big = u.level() < v.level() ? v : u;
            return (small.word() & big.word()) == small.word();
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace kneser
