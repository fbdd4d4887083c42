#pragma once

#include <chrono>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <vector>

#include "kneser/bitcore.hpp"

namespace kneser {

struct BudgetExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A Hamilton cycle of the middle layer graph Q(2k+1,k): every vertex of
/// levels k and k+1 appears exactly once, consecutive vertices differ in
/// one bit, levels alternate.
struct MiddleLevelsCycle {
    int k = 0;
    std::vector<Vertex> order;
};

/// Throws std::runtime_error naming the first violated invariant.
void validate_middle_cycle(const MiddleLevelsCycle& c);

/// Deterministic backtracking search for a Hamilton cycle of Q(2k+1,k).
/// Starts at a(2k+1,k); neighbor order is by remaining unvisited degree,
/// ties broken by ascending bitstring value.
MiddleLevelsCycle solve_base(int k, std::chrono::milliseconds budget);

/// Permutes bit positions so that the cycle contains the consecutive
/// triple (a(n,k), a(n,k+1), b(n,k)) with n = 2k+1.
MiddleLevelsCycle normalize_anchor(const MiddleLevelsCycle& c);

/// Reads a MID certificate file and fully validates it.
MiddleLevelsCycle import_certificate(std::istream& in);

void export_certificate(std::ostream& out, const MiddleLevelsCycle& c);

class BaseCycleProvider {
public:
    virtual ~BaseCycleProvider() = default;
    virtual MiddleLevelsCycle middle_cycle(int k) = 0;
};

class SearchProvider : public BaseCycleProvider {
public:
    explicit SearchProvider(std::chrono::milliseconds budget = std::chrono::seconds(60))
        : budget_(budget) {}
    MiddleLevelsCycle middle_cycle(int k) override { return solve_base(k, budget_); }

private:
    std::chrono::milliseconds budget_;
};

/// KNESER_BASE_DIR, or ./base-certs when unset.
std::filesystem::path base_cert_dir();

/// Serves middle-levels cycles from `mid-<k>.cert` files in the base
/// certificate directory, falling back to search; results are memoized.
class CachingProvider : public BaseCycleProvider {
public:
    explicit CachingProvider(std::filesystem::path dir = base_cert_dir(),
                             std::chrono::milliseconds search_budget = std::chrono::seconds(60))
        : dir_(std::move(dir)), budget_(search_budget) {}

    MiddleLevelsCycle middle_cycle(int k) override;

private:
    std::filesystem::path dir_;
    std::chrono::milliseconds budget_;
    std::map<int, MiddleLevelsCycle> memo_;
};

}  // namespace kneser
