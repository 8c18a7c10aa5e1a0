#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tcplex/collapse.hpp"
#include "tcplex/tc.hpp"

namespace tcplex {

// Text input format, line based:
//
//     # comment
//     complex <name>
//     a b c          <- one facet per line, whitespace-separated labels
//     a d
//     subcomplex <name>
//     a b            <- generating simplices of the subcomplex
//
// '#' starts a comment reaching the end of the line.  The `subcomplex`
// block is optional; at most one of each block is allowed, and every
// generator must be a simplex of the parent.
struct ParsedPair {
  ComplexPtr K;
  std::optional<Subcomplex> L;
};

ParsedPair parse_pair_text(std::istream& in, const std::string& origin);
ParsedPair parse_pair_file(const std::string& path);

// Canonical text form.  Reparsing yields the same name, the same label
// set, and the same facets-as-label-sets (vertex numbering may permute).
std::string serialize_pair(const ComplexPtr& K, const Subcomplex* L = nullptr);
void write_pair_file(const std::string& path, const ComplexPtr& K,
                     const Subcomplex* L = nullptr);

// JSON certificate ("tcplex-cover/1").  Everything the verifier needs is
// embedded: K, L (for complexity covers), and per piece its facets, the
// section, and the witness chain, all by vertex label so files survive
// renumbering.  The loader rebuilds the complexes and the product; it
// does not validate chains -- that is verify_cover's job, so a tampered
// chain loads fine and then fails verification.
std::string certificate_json(const CoverCertificate& cert, int value,
                             const BoundsReport& bounds, uint64_t visited,
                             const std::vector<std::string>& notes);
CoverCertificate load_certificate_json(const std::string& text,
                                       const std::string& origin);
CoverCertificate load_certificate_file(const std::string& path);
void write_certificate_file(const std::string& path,
                            const CoverCertificate& cert, int value,
                            const BoundsReport& bounds, uint64_t visited,
                            const std::vector<std::string>& notes);

// JSON renderings of query results ("tcplex-plan/1", "tcplex-bounds/1",
// "tcplex-core/1").
std::string plan_json(const CoverCertificate& cert, const MotionPlan& plan);
std::string bounds_json(const BoundsCheck& bc);
std::string core_json(const CollapseTrace& trace);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace tcplex
