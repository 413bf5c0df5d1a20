#include "chowlab/grammar.hpp"

#include <cctype>
#include <stdexcept>

namespace chowlab {

namespace {

// Minimal recursive-descent scanner shared by the three grammars.
struct Scanner {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool done() {
        skip_ws();
        return pos == text.size();
    }

    char peek() {
        skip_ws();
        if (pos == text.size()) throw std::invalid_argument("unexpected end of input");
        return text[pos];
    }

    bool try_consume(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!try_consume(c))
            throw std::invalid_argument(std::string("expected '") + c + "' at position " +
                                        std::to_string(pos) + " in '" + std::string(text) + "'");
    }

    long integer() {
        skip_ws();
        const std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(
                                                     text[start]))))
            throw std::invalid_argument("expected an integer at position " +
                                        std::to_string(start));
        return std::stol(std::string(text.substr(start, pos - start)));
    }

    std::string name() {
        skip_ws();
        const std::size_t start = pos;
        while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("expected a name at position " +
                                                      std::to_string(start));
        return std::string(text.substr(start, pos - start));
    }
};

BundleExpr parse_bundle_expr(Scanner& s) {
    const std::string head = s.name();
    s.expect('(');
    BundleExpr out;
    if (head == "taut") {
        const long f = s.integer();
        out = BundleExpr::taut(static_cast<int>(f));
    } else if (head == "triv") {
        out = BundleExpr::trivial(static_cast<int>(s.integer()));
    } else if (head == "dual") {
        out = BundleExpr::dual(parse_bundle_expr(s));
    } else if (head == "sum" || head == "tensor") {
        BundleExpr a = parse_bundle_expr(s);
        s.expect(',');
        BundleExpr b = parse_bundle_expr(s);
        out = head == "sum" ? BundleExpr::sum(std::move(a), std::move(b))
                            : BundleExpr::tensor(std::move(a), std::move(b));
    } else if (head == "wedge" || head == "sym") {
        const long p = s.integer();
        s.expect(',');
        BundleExpr e = parse_bundle_expr(s);
        out = head == "wedge" ? BundleExpr::wedge(static_cast<int>(p), std::move(e))
                              : BundleExpr::sym(static_cast<int>(p), std::move(e));
    } else {
        throw std::invalid_argument("unknown bundle constructor '" + head + "'");
    }
    s.expect(')');
    return out;
}

PartitionTuple parse_tuple_body(Scanner& s, std::size_t arity) {
    // parts separated by '|'; an empty slot is the empty partition
    std::vector<Partition> slots;
    std::vector<int> parts;
    auto flush = [&]() {
        slots.emplace_back(parts);
        parts.clear();
    };
    while (true) {
        const char c = s.peek();
        if (c == ']') {
            s.expect(']');
            flush();
            break;
        }
        if (c == '|') {
            s.expect('|');
            flush();
            continue;
        }
        if (c == ',') {
            s.expect(',');
            continue;
        }
        parts.push_back(static_cast<int>(s.integer()));
    }
    if (slots.size() != arity)
        throw std::invalid_argument("class tuple has " + std::to_string(slots.size()) +
                                    " slots, the ring has " + std::to_string(arity));
    return PartitionTuple(std::move(slots));
}

SchubertClass parse_class_factor(Scanner& s, const GrassmannProduct& ring) {
    s.skip_ws();
    const char c = s.peek();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+') {
        SchubertClass out = SchubertClass::unit(ring);
        out *= Int(s.integer());
        return out;
    }
    const std::string head = s.name();
    if (head == "c") {
        s.expect('(');
        const long degree = s.integer();
        s.expect(',');
        BundleExpr e = parse_bundle_expr(s);
        s.expect(')');
        return chern_class_on(ring, e, static_cast<int>(degree));
    }
    if (head == "sigma") {
        s.expect('[');
        return SchubertClass::schubert(ring, parse_tuple_body(s, ring.factor_count()));
    }
    if (head == "h") {
        s.expect('(');
        const long f = s.integer();
        s.expect(')');
        if (f < 0 || f >= static_cast<long>(ring.factor_count()))
            throw std::invalid_argument("hyperplane factor out of range");
        return SchubertClass::hyperplane(ring, static_cast<std::size_t>(f));
    }
    throw std::invalid_argument("unknown class constructor '" + head + "'");
}

}  // namespace

GrassmannProduct parse_ring(std::string_view text) {
    Scanner s{text};
    std::vector<std::pair<int, int>> factors;
    while (true) {
        const std::string head = s.name();
        if (head != "G") throw std::invalid_argument("ring factors start with G(k,n)");
        s.expect('(');
        const long k = s.integer();
        s.expect(',');
        const long n = s.integer();
        s.expect(')');
        long repeat = 1;
        if (s.try_consume('^')) repeat = s.integer();
        if (repeat < 1) throw std::invalid_argument("factor multiplicity must be positive");
        for (long i = 0; i < repeat; ++i)
            factors.emplace_back(static_cast<int>(k), static_cast<int>(n));
        if (s.done()) break;
        if (!s.try_consume('x') && !s.try_consume('*'))
            throw std::invalid_argument("ring factors are joined with 'x'");
    }
    return GrassmannProduct(std::move(factors));
}

BundleExpr parse_bundle(std::string_view text) {
    Scanner s{text};
    BundleExpr e = parse_bundle_expr(s);
    if (!s.done()) throw std::invalid_argument("trailing input after bundle expression");
    return e;
}

SchubertClass parse_class(std::string_view text, const GrassmannProduct& ring) {
    Scanner s{text};
    SchubertClass out = parse_class_factor(s, ring);
    while (!s.done()) {
        s.expect('*');
        out = out * parse_class_factor(s, ring);
    }
    return out;
}

std::string format_ring(const GrassmannProduct& ring) { return ring.to_string(); }

std::string format_partition(const Partition& p) {
    std::string out = "[";
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(p.parts()[i]);
    }
    return out + "]";
}

std::string format_tuple(const PartitionTuple& t) { return t.to_string(); }

std::string format_class(const SchubertClass& c) {
    if (c.is_zero()) return "0";
    std::string out;
    for (const auto& [t, coeff] : c.terms()) {
        if (!out.empty()) out += " + ";
        out += coeff.str() + "*sigma" + t.to_string();
    }
    return out;
}

std::string format_multischur(const MultiSchur& m) { return m.to_string(); }

}  // namespace chowlab
