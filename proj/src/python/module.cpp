#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <chrono>
#include <sstream>

#include "kneser/derive.hpp"
#include "kneser/lemma.hpp"
#include "kneser/middle_levels.hpp"
#include "kneser/verify.hpp"

namespace py = pybind11;
using namespace kneser;

namespace {

std::vector<std::string> to_strings(const std::vector<Vertex>& vs) {
    std::vector<std::string> out;
    out.reserve(vs.size());
    for (const Vertex& v : vs) out.push_back(v.str());
    return out;
}

GraphKind make_graph(const std::string& tag, int n, int k) {
    if (tag == "H") return GraphKind::bip_kneser(n, k);
    if (tag == "K") return GraphKind::kneser(n, k);
    if (tag == "Q") return GraphKind::cube_levels(n, k);
    throw std::invalid_argument("graph tag must be H, K or Q");
}

CachingProvider& default_provider() {
    static CachingProvider provider;
    return provider;
}

}  // namespace

PYBIND11_MODULE(_kneser, m) {
    m.doc() = "Hamilton cycles in (bipartite) Kneser graphs and hypercube layers";

    m.def("level_of", [](const std::string& s) { return Vertex::parse(s).level(); });
    m.def("make_a", [](int n, int k) { return make_a(n, k).str(); });
    m.def("make_b", [](int n, int k) { return make_b(n, k).str(); });
    m.def("rotate", [](const std::string& s, int l) { return rotate(Vertex::parse(s), l).str(); });
    m.def("complement", [](const std::string& s) { return complement(Vertex::parse(s)).str(); });
    m.def("append_bit", [](const std::string& s, int b) { return append_bit(Vertex::parse(s), b).str(); });
    m.def("to_subset", [](const std::string& s) { return Vertex::parse(s).support(); });
    m.def("adjacent", [](const std::string& tag, int n, int k, const std::string& u, const std::string& v) {
        return adjacent(make_graph(tag, n, k), Vertex::parse(u), Vertex::parse(v));
    });

    m.def(
        "solve_base",
        [](int k, int budget_ms) {
            return to_strings(solve_base(k, std::chrono::milliseconds(budget_ms)).order);
        },
        py::arg("k"), py::arg("budget_ms") = 60000);

    m.def("bipartite_hamilton", [](int n, int k) {
        return to_strings(bipartite_hamilton(n, k, default_provider()).order);
    });
    m.def("kneser_cycle", [](int n, int k) {
        return to_strings(kneser_cycle(n, k, default_provider()).order);
    });
    m.def("qnk_cycle", [](int n, int k) {
        return to_strings(qnk_cycle(n, k, default_provider()).order);
    });

    m.def("build_lemma", [](int n, int k) {
        LemmaStructure s = build(n, k, default_provider());
        std::vector<std::vector<std::string>> paths;
        for (const auto& [start, p] : s.paths) paths.push_back(to_strings(p));
        return py::make_tuple(to_strings(s.cycle), paths);
    });

    m.def("verify_certificate",
          [](const std::string& tag, int n, int k, const std::vector<std::string>& order) {
              GraphKind g = make_graph(tag, n, k);
              HCycleCertificate cert{g, {}, 0, g.vertex_count()};
              for (const auto& s : order) cert.order.push_back(Vertex::parse(s));
              cert.visited = cert.order.size();
              VerificationReport rep = verify_certificate(cert);
              return py::make_tuple(rep.ok, rep.render());
          });

    m.def("coverage_fraction", [](int n, int k) {
        Fraction f = coverage_fraction(n, k);
        return py::make_tuple(f.num, f.den);
    });

    m.def("binomial", &binomial);
}
