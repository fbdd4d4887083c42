#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "kneser/bitcore.hpp"

namespace kneser {

/// Error while reading a certificate file; line is 1-based.
struct ParseError : std::runtime_error {
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
    int line;
};

/// One certificate file: header `<TAG> <n> <k> <len>` followed by `len`
/// lines of n-character bitstrings. `#` comments may precede the header.
struct CertificateFile {
    std::string tag;  // H, K, Q or MID
    int n = 0;
    int k = 0;
    std::vector<Vertex> body;
};

CertificateFile read_certificate_file(std::istream& in);
void write_certificate_file(std::ostream& out, const CertificateFile& f);

}  // namespace kneser
