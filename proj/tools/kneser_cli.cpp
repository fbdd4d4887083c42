#include <chrono>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "kneser/certio.hpp"
#include "kneser/derive.hpp"
#include "kneser/lemma.hpp"
#include "kneser/middle_levels.hpp"
#include "kneser/verify.hpp"

namespace {

using namespace kneser;

constexpr int kExitVerifyFail = 1;
constexpr int kExitBadParams = 2;
constexpr int kExitProviderFail = 3;
constexpr int kExitSelfVerifyFail = 4;

int run_construct(const std::string& graph, int n, int k, const std::string& out_path,
                  const std::string& format) {
    HCycleCertificate cert{GraphKind::cube(1), {}, 0, 0};
    CachingProvider provider;
    try {
        if (graph == "h")
            cert = bipartite_hamilton(n, k, provider);
        else if (graph == "k")
            cert = kneser_cycle(n, k, provider);
        else
            cert = qnk_cycle(n, k, provider);
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return kExitBadParams;
    } catch (const BudgetExhausted& e) {
        std::cerr << "base-case provider failure: " << e.what() << "\n";
        return kExitProviderFail;
    } catch (const InvariantViolation& e) {
        std::cerr << "construction failed self-checks: " << e.what() << "\n";
        return kExitSelfVerifyFail;
    } catch (const std::runtime_error& e) {
        std::cerr << "base-case provider failure: " << e.what() << "\n";
        return kExitProviderFail;
    }

    VerificationReport rep = verify_certificate(cert);
    if (!rep.ok) {
        std::cerr << "self-verification failed:\n" << rep.render();
        return kExitSelfVerifyFail;
    }

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path, std::ios::binary);
        if (!file) {
            std::cerr << "cannot open " << out_path << "\n";
            return kExitBadParams;
        }
        out = &file;
    }
    if (format == "sets") {
        for (const Vertex& v : cert.order) *out << v.set_str() << '\n';
    } else {
        CertificateFile f;
        f.tag = graph == "h" ? "H" : graph == "k" ? "K" : "Q";
        f.n = n;
        f.k = k;
        f.body = cert.order;
        write_certificate_file(*out, f);
    }
    return 0;
}

int run_verify(const std::string& in_path) {
    std::ifstream in(in_path, std::ios::binary);
    if (!in) {
        std::cerr << "cannot open " << in_path << "\n";
        return kExitBadParams;
    }

    // peek at the tag to pick the right parser
    std::string tag;
    {
        std::string line;
        while (std::getline(in, line))
            if (!line.empty() && line[0] != '#') break;
        std::istringstream hs(line);
        hs >> tag;
        in.clear();
        in.seekg(0);
    }

    try {
        if (tag == "LEMMA") {
            LemmaStructure s = parse_lemma(in);
            VerificationReport rep = verify_lemma_structure(s);
            std::cout << rep.render();
            return rep.ok ? 0 : kExitVerifyFail;
        }
        CertificateFile f = read_certificate_file(in);
        if (f.tag == "MID") {
            if (f.n != 2 * f.k + 1) {
                std::cout << "FAIL\nparameters@0: MID requires n = 2k+1\n";
                return kExitVerifyFail;
            }
            try {
                validate_middle_cycle(MiddleLevelsCycle{f.k, f.body});
            } catch (const std::runtime_error& e) {
                std::cout << "FAIL\n" << e.what() << "\n";
                return kExitVerifyFail;
            }
            std::cout << "OK\n";
            return 0;
        }
        GraphKind g = f.tag == "H"   ? GraphKind::bip_kneser(f.n, f.k)
                      : f.tag == "K" ? GraphKind::kneser(f.n, f.k)
                                     : GraphKind::cube_levels(f.n, f.k);
        HCycleCertificate cert{g, f.body, f.body.size(), g.vertex_count()};
        VerificationReport rep = verify_certificate(cert);
        std::cout << rep.render();
        return rep.ok ? 0 : kExitVerifyFail;
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitBadParams;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return kExitBadParams;
    }
}

int run_stats(int n, int k) {
    if (k < 1 || n < 2 * k + 1 || n > kMaxLen) {
        std::cerr << "invalid parameters: need k >= 1 and n >= 2k+1\n";
        return kExitBadParams;
    }
    std::uint64_t cnk = binomial(n, k);
    std::uint64_t h_len = 2 * cnk;
    std::uint64_t k_len = k == 1 ? static_cast<std::uint64_t>(n) : 2 * binomial(n - 1, k - 1);
    // the formula value 2k/n is printed for every k, the k=1 special case below
    std::int64_t g = std::gcd(static_cast<std::int64_t>(2 * k), static_cast<std::int64_t>(n));
    Fraction f{2 * k / g, n / g};
    std::cout << "C(" << n << "," << k << ") = " << cnk << "\n";
    std::cout << "H-cycle " << h_len << ", K-cycle " << k_len << ", fraction " << f.num << "/"
              << f.den << "\n";
    if (k == 1)
        std::cout << "k=1 coverage: 1 (full Hamilton cycle of length " << n << ")\n";
    return 0;
}

int run_base_import(const std::string& in_path) {
    std::ifstream in(in_path, std::ios::binary);
    if (!in) {
        std::cerr << "cannot open " << in_path << "\n";
        return kExitBadParams;
    }
    MiddleLevelsCycle c;
    try {
        c = import_certificate(in);
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitBadParams;
    } catch (const std::runtime_error& e) {
        std::cerr << "validation failed: " << e.what() << "\n";
        return kExitVerifyFail;
    }
    auto dir = base_cert_dir();
    std::filesystem::create_directories(dir);
    auto path = dir / ("mid-" + std::to_string(c.k) + ".cert");
    std::ofstream out(path, std::ios::binary);
    export_certificate(out, c);
    std::cout << "installed " << path.string() << "\n";
    return 0;
}

int run_base_search(int k, double budget_sec) {
    MiddleLevelsCycle c;
    try {
        c = solve_base(k, std::chrono::milliseconds(static_cast<long long>(budget_sec * 1000)));
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return kExitBadParams;
    } catch (const BudgetExhausted& e) {
        std::cerr << e.what() << "\n";
        return kExitProviderFail;
    }
    auto dir = base_cert_dir();
    std::filesystem::create_directories(dir);
    auto path = dir / ("mid-" + std::to_string(k) + ".cert");
    std::ofstream out(path, std::ios::binary);
    export_certificate(out, c);
    std::cout << "installed " << path.string() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hamilton cycles in (bipartite) Kneser graphs and hypercube layers"};
    app.require_subcommand(1);

    std::string graph, out_path, format = "bits", in_path;
    int n = 0, k = 0;
    double budget_sec = 60.0;

    auto* construct = app.add_subcommand("construct", "build and self-verify a cycle certificate");
    construct->add_option("--graph", graph, "graph family: h, k or q")
        ->required()
        ->check(CLI::IsMember({"h", "k", "q"}));
    construct->add_option("--n", n)->required();
    construct->add_option("--k", k)->required();
    construct->add_option("--out", out_path, "output file (default stdout)");
    construct->add_option("--format", format)->check(CLI::IsMember({"bits", "sets"}));

    auto* verify = app.add_subcommand("verify", "verify a certificate file");
    verify->add_option("--in", in_path, "certificate file")->required();

    auto* stats = app.add_subcommand("stats", "print counts and the coverage fraction");
    stats->add_option("--n", n)->required();
    stats->add_option("--k", k)->required();

    auto* base = app.add_subcommand("base", "manage middle-levels base certificates");
    base->require_subcommand(1);
    auto* base_import = base->add_subcommand("import", "validate and install a MID certificate");
    base_import->add_option("file", in_path, "certificate file")->required();
    auto* base_search = base->add_subcommand("search", "search a middle-levels cycle and install it");
    base_search->add_option("--k", k)->required();
    base_search->add_option("--budget", budget_sec, "time limit in seconds");

    CLI11_PARSE(app, argc, argv);

    if (construct->parsed()) return run_construct(graph, n, k, out_path, format);
    if (verify->parsed()) return run_verify(in_path);
    if (stats->parsed()) return run_stats(n, k);
    if (base_import->parsed()) return run_base_import(in_path);
    if (base_search->parsed()) return run_base_search(k, budget_sec);
    return kExitBadParams;
}
