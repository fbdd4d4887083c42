#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kneser {

// Longest supported bitstring. Vertices are packed into a single 64-bit
// word; for larger n the word would have to be replaced by a multi-word
// representation (the rest of the code only goes through the Vertex API).
inline constexpr int kMaxLen = 64;

/// A length-n bitstring vertex of the hypercube Q(n).
/// Position 1 is the leftmost character of the textual form.
class Vertex {
public:
    Vertex() = default;
    Vertex(int n, std::uint64_t bits);

    static Vertex parse(std::string_view s);

    int length() const { return n_; }
    int level() const;

    /// Bit at position pos, 1-based, position 1 = leftmost.
    int bit(int pos) const;

    std::uint64_t word() const { return bits_; }

    std::string str() const;
    std::vector<int> support() const;
    std::string set_str() const;

    friend bool operator==(const Vertex&, const Vertex&) = default;
    friend std::strong_ordering operator<=>(const Vertex& a, const Vertex& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.bits_ <=> b.bits_;
    }

private:
    int n_ = 0;
    std::uint64_t bits_ = 0;
};

int level_of(const Vertex& v);

/// 0^(n-k) 1^k, the level-k anchor.
Vertex make_a(int n, int k);

/// a(n-1,k) with a 0 appended; equals a(n,k) rotated left by one.
Vertex make_b(int n, int k);

/// Cyclic left shift: position i of the result holds position i+shift of v.
Vertex rotate(const Vertex& v, int shift);

Vertex append_bit(const Vertex& v, int b);

Vertex complement(const Vertex& v);

/// pi maps source position i to target position pi[i-1] (both 1-based):
/// bit pi(i) of the result equals bit i of v. Rejects non-bijections.
Vertex apply_permutation(const Vertex& v, const std::vector<int>& pi);

int hamming_distance(const Vertex& u, const Vertex& v);

std::uint64_t binomial(int n, int k);

struct GraphKind {
    enum class Family { Cube, CubeLevels, Kneser, BipKneser };

    Family family;
    int n;
    int k;  // unused for Cube

    static GraphKind cube(int n);
    static GraphKind cube_levels(int n, int k);
    static GraphKind kneser(int n, int k);
    static GraphKind bip_kneser(int n, int k);

    std::uint64_t vertex_count() const;
    bool has_level(int level) const;
    std::string name() const;

    friend bool operator==(const GraphKind&, const GraphKind&) = default;
};

/// The adjacency relation of g. Throws std::invalid_argument on a length
/// mismatch or when a vertex lies outside the declared levels of g.
bool adjacent(const GraphKind& g, const Vertex& u, const Vertex& v);

}  // namespace kneser
