#include "perfcx/textio.hpp"

#include <cctype>

namespace perfcx {

namespace {

struct Token {
    enum class Kind { Ident, Int, Symbol, End };
    Kind kind = Kind::End;
    std::string text;
    long value = 0;
    int line = 1, col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw DataError("parse error at line " + std::to_string(tok_.line) + ", col " +
                        std::to_string(tok_.col) + ": " + msg);
    }
    bool isSymbol(const std::string& s) const {
        return tok_.kind == Token::Kind::Symbol && tok_.text == s;
    }
    bool isIdent(const std::string& s) const {
        return tok_.kind == Token::Kind::Ident && tok_.text == s;
    }
    void expectSymbol(const std::string& s) {
        if (!isSymbol(s)) fail("expected '" + s + "'");
        advance();
    }
    std::string expectIdent() {
        if (tok_.kind != Token::Kind::Ident) fail("expected an identifier");
        std::string s = tok_.text;
        advance();
        return s;
    }
    long expectInt() {
        bool neg = false;
        if (isSymbol("-")) {
            neg = true;
            advance();
        }
        if (tok_.kind != Token::Kind::Int) fail("expected an integer");
        long v = tok_.value;
        advance();
        return neg ? -v : v;
    }
    bool atEnd() const { return tok_.kind == Token::Kind::End; }

private:
    void advance() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '\n') { ++line_; col_ = 1; ++pos_; continue; }
            if (std::isspace(static_cast<unsigned char>(c))) { ++col_; ++pos_; continue; }
            if (c == '#') {  // comment to end of line
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
                continue;
            }
            break;
        }
        tok_ = Token{};
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= text_.size()) return;
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            tok_.kind = Token::Kind::Int;
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            tok_.text = text_.substr(start, pos_ - start);
            tok_.value = std::stol(tok_.text);
            col_ += static_cast<int>(tok_.text.size());
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            tok_.kind = Token::Kind::Ident;
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            tok_.text = text_.substr(start, pos_ - start);
            col_ += static_cast<int>(tok_.text.size());
            return;
        }
        tok_.kind = Token::Kind::Symbol;
        if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
            tok_.text = "->";
            pos_ += 2;
            col_ += 2;
            return;
        }
        tok_.text = std::string(1, c);
        ++pos_;
        ++col_;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

/// expr := term (('+'|'-') term)*; term := ['-'] factor ('*' factor)*;
/// factor := int['/'int] | var['^'int] | '(' expr ')'
class PolyParser {
public:
    PolyParser(const Ring& r, Lexer& lex) : r_(r), lex_(lex) {
        for (int i = 0; i < r.nvars(); ++i) varIndex_[r.varNames()[i]] = i;
    }

    Polynomial expr() {
        Polynomial acc = term();
        while (lex_.isSymbol("+") || lex_.isSymbol("-")) {
            bool minus = lex_.isSymbol("-");
            lex_.take();
            Polynomial t = term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

private:
    Polynomial term() {
        bool neg = false;
        while (lex_.isSymbol("-")) {
            neg = !neg;
            lex_.take();
        }
        Polynomial acc = factor();
        while (lex_.isSymbol("*")) {
            lex_.take();
            acc = acc * factor();
        }
        return neg ? -acc : acc;
    }

    Polynomial factor() {
        const Token& t = lex_.peek();
        if (t.kind == Token::Kind::Int) {
            long num = lex_.expectInt();
            long den = 1;
            if (lex_.isSymbol("/")) {
                lex_.take();
                den = lex_.expectInt();
                if (den == 0) lex_.fail("zero denominator");
            }
            return r_.constant(Scalar::ofRational(r_.field(), mpq_class(num, den)));
        }
        if (t.kind == Token::Kind::Ident) {
            auto it = varIndex_.find(t.text);
            if (it == varIndex_.end()) lex_.fail("unknown variable '" + t.text + "'");
            lex_.take();
            long e = 1;
            if (lex_.isSymbol("^")) {
                lex_.take();
                e = lex_.expectInt();
                if (e < 0) lex_.fail("negative exponent");
            }
            return r_.monomial(Monomial::var(r_.nvars(), it->second, static_cast<std::uint32_t>(e)),
                               Scalar::one(r_.field()));
        }
        if (lex_.isSymbol("(")) {
            lex_.take();
            Polynomial p = expr();
            lex_.expectSymbol(")");
            return p;
        }
        lex_.fail("expected a coefficient, variable, or parenthesized expression");
    }

    const Ring& r_;
    Lexer& lex_;
    std::map<std::string, int> varIndex_;
};

Ring parseRingExpr(Lexer& lex) {
    std::string fieldName = lex.expectIdent();
    Field field = Field::rationals();
    if (fieldName == "Q") {
        field = Field::rationals();
    } else if (fieldName.size() > 1 && fieldName[0] == 'F') {
        std::string digits = fieldName.substr(1);
        for (char c : digits)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                lex.fail("unknown field '" + fieldName + "'");
        field = Field::prime(static_cast<std::uint32_t>(std::stoul(digits)));
    } else {
        lex.fail("unknown field '" + fieldName + "' (use Q or F<p>)");
    }
    lex.expectSymbol("[");
    std::vector<std::string> vars;
    for (;;) {
        vars.push_back(lex.expectIdent());
        if (lex.isSymbol(",")) {
            lex.take();
            continue;
        }
        break;
    }
    lex.expectSymbol("]");
    if (vars.size() > 6) lex.fail("at most six variables are supported");
    Ring ambient = Ring::polynomialRing(field, vars);
    if (!lex.isSymbol("/")) return ambient;
    lex.take();
    lex.expectSymbol("(");
    std::vector<Polynomial> gens;
    PolyParser pp(ambient, lex);
    for (;;) {
        gens.push_back(pp.expr());
        if (lex.isSymbol(",")) {
            lex.take();
            continue;
        }
        break;
    }
    lex.expectSymbol(")");
    return Ring::quotient(ambient, gens);
}

RingMatrix parseMatrixTokens(const Ring& r, Lexer& lex, int rows, int cols) {
    std::vector<std::vector<Polynomial>> data;
    lex.expectSymbol("[");
    if (lex.isSymbol("]")) {
        lex.take();
    } else {
        for (;;) {
            lex.expectSymbol("[");
            std::vector<Polynomial> row;
            PolyParser pp(r, lex);
            if (!lex.isSymbol("]")) {
                for (;;) {
                    row.push_back(pp.expr());
                    if (lex.isSymbol(",")) {
                        lex.take();
                        continue;
                    }
                    break;
                }
            }
            lex.expectSymbol("]");
            data.push_back(std::move(row));
            if (lex.isSymbol(",")) {
                lex.take();
                continue;
            }
            break;
        }
        lex.expectSymbol("]");
    }
    if (rows >= 0 && static_cast<int>(data.size()) != rows)
        lex.fail("matrix has " + std::to_string(data.size()) + " rows, expected " +
                 std::to_string(rows));
    RingMatrix m(r, rows >= 0 ? rows : static_cast<int>(data.size()),
                 cols >= 0 ? cols : (data.empty() ? 0 : static_cast<int>(data[0].size())));
    for (std::size_t i = 0; i < data.size(); ++i) {
        if (static_cast<int>(data[i].size()) != m.cols())
            lex.fail("matrix row " + std::to_string(i) + " has " +
                     std::to_string(data[i].size()) + " entries, expected " +
                     std::to_string(m.cols()));
        for (std::size_t j = 0; j < data[i].size(); ++j)
            m.set(static_cast<int>(i), static_cast<int>(j), data[i][j]);
    }
    return m;
}

/// Degree tags like d1, d(-1), c0, c(-2): the letter has been consumed as
/// part of an identifier; recover the trailing integer or parse parens.
long degreeFromTag(Lexer& lex, const std::string& tag, char letter) {
    if (tag.size() > 1) {
        for (std::size_t i = 1; i < tag.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(tag[i])))
                lex.fail(std::string("malformed ") + letter + "-tag '" + tag + "'");
        return std::stol(tag.substr(1));
    }
    lex.expectSymbol("(");
    long v = lex.expectInt();
    lex.expectSymbol(")");
    return v;
}

}  // namespace

Polynomial parsePolynomial(const Ring& r, const std::string& text) {
    Lexer lex(text);
    PolyParser pp(r, lex);
    Polynomial p = pp.expr();
    if (!lex.atEnd()) lex.fail("trailing input after polynomial");
    return p;
}

std::vector<Polynomial> parsePolynomialList(const Ring& r, const std::string& text) {
    Lexer lex(text);
    bool bracketed = lex.isSymbol("[");
    if (bracketed) lex.take();
    std::vector<Polynomial> out;
    PolyParser pp(r, lex);
    for (;;) {
        out.push_back(pp.expr());
        if (lex.isSymbol(",")) {
            lex.take();
            continue;
        }
        break;
    }
    if (bracketed) lex.expectSymbol("]");
    if (!lex.atEnd()) lex.fail("trailing input after polynomial list");
    return out;
}

RingMatrix parseMatrix(const Ring& r, const std::string& text, int rows, int cols) {
    Lexer lex(text);
    RingMatrix m = parseMatrixTokens(r, lex, rows, cols);
    if (!lex.atEnd()) lex.fail("trailing input after matrix");
    return m;
}

Ring parseRing(const std::string& text) {
    Lexer lex(text);
    if (lex.isIdent("ring")) {
        lex.take();
        lex.expectSymbol("=");
    }
    Ring r = parseRingExpr(lex);
    if (lex.isSymbol(";")) lex.take();
    if (lex.isIdent("order")) {
        lex.take();
        lex.expectSymbol("=");
        std::string name = lex.expectIdent();
        MonomialOrder order = MonomialOrder::parse(name);
        // rebuild with the requested order
        Ring ambient = Ring::polynomialRing(r.field(), r.varNames(), order);
        std::vector<Polynomial> gens;
        for (auto& g : r.quotientGens()) gens.push_back(ambient.makePoly(g.terms()));
        r = gens.empty() ? ambient : Ring::quotient(ambient, gens);
        if (lex.isSymbol(";")) lex.take();
    }
    if (!lex.atEnd()) lex.fail("trailing input after ring description");
    return r;
}

std::string printRing(const Ring& r) {
    return "ring = " + r.str() + "; order = " + r.order().str() + ";";
}

const FreeComplex& Document::complexNamed(const std::string& name) const {
    for (auto& [n, c] : complexes)
        if (n == name) return c;
    throw DataError("no complex named '" + name + "' in the document");
}

const NamedChainMap& Document::mapNamed(const std::string& name) const {
    for (auto& [n, m] : maps)
        if (n == name) return m;
    throw DataError("no map named '" + name + "' in the document");
}

Document parseDocument(const std::string& text, const Ring* externalRing) {
    Document doc;
    if (externalRing) doc.ring = *externalRing;
    Lexer lex(text);
    while (!lex.atEnd()) {
        if (lex.isIdent("ring")) {
            lex.take();
            lex.expectSymbol("=");
            doc.ring = parseRingExpr(lex);
            if (lex.isSymbol(";")) lex.take();
            if (lex.isIdent("order")) {
                lex.take();
                lex.expectSymbol("=");
                MonomialOrder order = MonomialOrder::parse(lex.expectIdent());
                Ring ambient = Ring::polynomialRing(doc.ring.field(), doc.ring.varNames(), order);
                std::vector<Polynomial> gens;
                for (auto& g : doc.ring.quotientGens()) gens.push_back(ambient.makePoly(g.terms()));
                doc.ring = gens.empty() ? ambient : Ring::quotient(ambient, gens);
                if (lex.isSymbol(";")) lex.take();
            }
            continue;
        }
        if (lex.isIdent("complex")) {
            if (!doc.ring.valid()) lex.fail("complex block before any ring");
            lex.take();
            std::string name = lex.expectIdent();
            lex.expectSymbol("{");
            std::map<int, int> ranks;
            std::map<long, RingMatrix> diffs;
            // deg lines must precede the d-lines whose shapes they fix
            while (!lex.isSymbol("}")) {
                if (lex.isIdent("deg")) {
                    lex.take();
                    long n = lex.expectInt();
                    lex.expectSymbol(":");
                    if (lex.expectIdent() != "rank") lex.fail("expected 'rank'");
                    long rk = lex.expectInt();
                    lex.expectSymbol(";");
                    ranks[static_cast<int>(n)] = static_cast<int>(rk);
                    continue;
                }
                std::string tag = lex.expectIdent();
                if (tag.empty() || tag[0] != 'd') lex.fail("expected 'deg' or a d-tag");
                long n = degreeFromTag(lex, tag, 'd');
                lex.expectSymbol("=");
                auto rkOf = [&](long deg) {
                    auto it = ranks.find(static_cast<int>(deg));
                    return it == ranks.end() ? 0 : it->second;
                };
                RingMatrix m = parseMatrixTokens(doc.ring, lex, rkOf(n - 1), rkOf(n));
                lex.expectSymbol(";");
                diffs.emplace(n, std::move(m));
            }
            lex.expectSymbol("}");
            int lo = 0;
            std::vector<int> rankVec;
            if (!ranks.empty()) {
                lo = ranks.begin()->first;
                int hi = ranks.rbegin()->first;
                for (int n = lo; n <= hi; ++n) {
                    auto it = ranks.find(n);
                    rankVec.push_back(it == ranks.end() ? 0 : it->second);
                }
            }
            std::map<int, RingMatrix> diffMap;
            for (auto& [n, m] : diffs) diffMap[static_cast<int>(n)] = m;
            doc.complexes.emplace_back(name, FreeComplex(doc.ring, lo, rankVec, diffMap));
            continue;
        }
        if (lex.isIdent("map")) {
            lex.take();
            std::string name = lex.expectIdent();
            lex.expectSymbol(":");
            std::string src = lex.expectIdent();
            lex.expectSymbol("->");
            std::string tgt = lex.expectIdent();
            lex.expectSymbol("{");
            const FreeComplex& s = doc.complexNamed(src);
            const FreeComplex& t = doc.complexNamed(tgt);
            std::map<int, RingMatrix> comps;
            while (!lex.isSymbol("}")) {
                std::string tag = lex.expectIdent();
                if (tag.empty() || tag[0] != 'c') lex.fail("expected a c-tag");
                long n = degreeFromTag(lex, tag, 'c');
                lex.expectSymbol("=");
                RingMatrix m = parseMatrixTokens(doc.ring, lex, t.rank(static_cast<int>(n)),
                                                 s.rank(static_cast<int>(n)));
                lex.expectSymbol(";");
                comps[static_cast<int>(n)] = std::move(m);
            }
            lex.expectSymbol("}");
            doc.maps.emplace_back(name, NamedChainMap{src, tgt, ChainMap(s, t, comps)});
            continue;
        }
        lex.fail("expected a ring, complex, or map block");
    }
    return doc;
}

namespace {

std::string degreeTag(char letter, int n) {
    if (n >= 0) return std::string(1, letter) + std::to_string(n);
    return std::string(1, letter) + "(" + std::to_string(n) + ")";
}

std::string matrixText(const RingMatrix& m) {
    std::string s = "[";
    for (int i = 0; i < m.rows(); ++i) {
        if (i) s += ", ";
        s += "[";
        for (int j = 0; j < m.cols(); ++j) {
            if (j) s += ", ";
            s += m.at(i, j).str();
        }
        s += "]";
    }
    return s + "]";
}

}  // namespace

std::string printComplex(const FreeComplex& f, const std::string& name) {
    std::string s = "complex " + name + " {\n";
    for (int n = f.lo(); n <= f.hi(); ++n)
        s += "  deg " + std::to_string(n) + ": rank " + std::to_string(f.rank(n)) + ";\n";
    for (int n = f.lo() + 1; n <= f.hi(); ++n) {
        RingMatrix d = f.diff(n);
        if (d.isZero()) continue;
        s += "  " + degreeTag('d', n) + " = " + matrixText(d) + ";\n";
    }
    return s + "}\n";
}

std::string printChainMap(const ChainMap& f, const std::string& name,
                          const std::string& srcName, const std::string& tgtName) {
    std::string s = "map " + name + " : " + srcName + " -> " + tgtName + " {\n";
    int lo = std::min(f.source().lo(), f.target().lo());
    int hi = std::max(f.source().hi(), f.target().hi());
    for (int n = lo; n <= hi; ++n) {
        RingMatrix m = f.comp(n);
        if (m.isZero()) continue;
        s += "  " + degreeTag('c', n) + " = " + matrixText(m) + ";\n";
    }
    return s + "}\n";
}

}  // namespace perfcx
