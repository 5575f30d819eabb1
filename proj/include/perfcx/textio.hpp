#ifndef PERFCX_TEXTIO_HPP
#define PERFCX_TEXTIO_HPP

#include <string>

#include "perfcx/complex.hpp"

namespace perfcx {

/// Parse errors carry line/column diagnostics and map to CLI exit code 2.
Polynomial parsePolynomial(const Ring& r, const std::string& text);

/// Comma-separated polynomials, with or without surrounding brackets:
/// "x^2, y^3" or "[x^2, y^3]".
std::vector<Polynomial> parsePolynomialList(const Ring& r, const std::string& text);

/// Row-major matrix: [[x, y], [0, x*y]].
RingMatrix parseMatrix(const Ring& r, const std::string& text, int rows, int cols);

/// `ring = Q[x,y,z] / (x*y - z^2); order = degrevlex;`
/// The bare form `Q[x,y]/(x*y)` used by command-line flags is accepted too.
Ring parseRing(const std::string& text);
std::string printRing(const Ring& r);

/// A document is a sequence of ring/complex/map blocks:
///   complex F { deg 0: rank 1; deg 1: rank 2; d1 = [[x, y]]; }
///   map f : G -> F { c0 = [[1]]; }
/// Negative degrees are written d(-1), c(-2), deg -1.
struct NamedChainMap {
    std::string source, target;
    ChainMap map;
};

struct Document {
    Ring ring;
    std::vector<std::pair<std::string, FreeComplex>> complexes;
    std::vector<std::pair<std::string, NamedChainMap>> maps;
    const FreeComplex& complexNamed(const std::string& name) const;
    const NamedChainMap& mapNamed(const std::string& name) const;
};

/// Parses a document; when externalRing is given, the document may omit its
/// ring block.
Document parseDocument(const std::string& text, const Ring* externalRing = nullptr);

std::string printComplex(const FreeComplex& f, const std::string& name);
std::string printChainMap(const ChainMap& f, const std::string& name,
                          const std::string& srcName, const std::string& tgtName);

}  // namespace perfcx

#endif
