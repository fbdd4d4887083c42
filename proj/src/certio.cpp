#include "kneser/certio.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace kneser {

namespace {

const std::string kTags[] = {"H", "K", "Q", "MID", "LEMMA"};

bool known_tag(const std::string& t) {
    for (const auto& s : kTags)
        if (s == t) return true;
    return false;
}

}  // namespace

CertificateFile read_certificate_file(std::istream& in) {
    std::string line;
    int lineno = 0;

    // skip comments before the header
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] != '#') break;
    }
    if (lineno == 0) throw ParseError(1, "empty file");

    CertificateFile f;
    long long len = -1;
    {
        std::istringstream hs(line);
        std::string extra;
        if (!(hs >> f.tag >> f.n >> f.k >> len) || (hs >> extra))
            throw ParseError(lineno, "bad header");
        if (!known_tag(f.tag)) throw ParseError(lineno, "unknown tag '" + f.tag + "'");
        if (f.n < 1 || f.n > kMaxLen || len < 0) throw ParseError(lineno, "bad header values");
    }

    while (std::getline(in, line)) {
        ++lineno;
        if (static_cast<long long>(f.body.size()) == len)
            throw ParseError(lineno, "trailing content after declared length");
        if (static_cast<int>(line.size()) != f.n) throw ParseError(lineno, "bad length");
        try {
            f.body.push_back(Vertex::parse(line));
        } catch (const std::invalid_argument& e) {
            throw ParseError(lineno, e.what());
        }
    }
    if (static_cast<long long>(f.body.size()) != len)
        throw ParseError(lineno + 1, "declared length " + std::to_string(len) + " but got " +
                                         std::to_string(f.body.size()) + " lines");
    return f;
}

void write_certificate_file(std::ostream& out, const CertificateFile& f) {
    out << f.tag << ' ' << f.n << ' ' << f.k << ' ' << f.body.size() << '\n';
    for (const Vertex& v : f.body) out << v.str() << '\n';
}

}  // namespace kneser
