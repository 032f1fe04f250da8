#include "icr/notation.hpp"

#include <algorithm>
#include <cctype>

namespace icr {

namespace {

std::string strip_spaces(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

// Parses one endomorphism starting at pos; advances pos past it.
Endomorphism parse_one(const FiniteGroup& G, const std::string& s, std::size_t& pos) {
    Endomorphism f;
    if (pos >= s.size()) throw ParseError("expected a map, found end of input");
    if (s[pos] == '(') {
        ++pos;
        while (pos < s.size() && s[pos] != ')') {
            if (!std::isdigit(static_cast<unsigned char>(s[pos])))
                throw ParseError("digit form allows single digits only");
            f.map.push_back(static_cast<elem_t>(s[pos] - '0'));
            ++pos;
        }
        if (pos >= s.size()) throw ParseError("unterminated '(' in map");
        ++pos;
    } else if (s[pos] == '[') {
        ++pos;
        while (pos < s.size() && s[pos] != ']') {
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == start) throw ParseError("expected a number in bracket form");
            f.map.push_back(static_cast<elem_t>(std::stoi(s.substr(start, pos - start))));
            if (pos < s.size() && s[pos] == ',') ++pos;
        }
        if (pos >= s.size()) throw ParseError("unterminated '[' in map");
        ++pos;
    } else if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
        // bare digit run, same reading as the parenthesized form
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            f.map.push_back(static_cast<elem_t>(s[pos] - '0'));
            ++pos;
        }
    } else {
        throw ParseError(std::string("expected '(', '[' or a digit, found '") + s[pos] + "'");
    }
    if (static_cast<int>(f.map.size()) != G.n)
        throw ParseError("map has " + std::to_string(f.map.size()) + " values, expected " +
                         std::to_string(G.n));
    for (elem_t v : f.map)
        if (v >= G.n) throw ParseError("map value " + std::to_string(v) + " out of range");
    return f;
}

}  // namespace

std::string format_endo(const Endomorphism& f) {
    std::string out;
    if (f.map.size() <= 10) {
        out += '(';
        for (elem_t v : f.map) out += static_cast<char>('0' + v);
        out += ')';
    } else {
        out += '[';
        for (std::size_t i = 0; i < f.map.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(f.map[i]);
        }
        out += ']';
    }
    return out;
}

std::string format_pair(const EndoPair& p) {
    return format_endo(p.left) + "," + format_endo(p.right);
}

Endomorphism parse_endo(const FiniteGroup& G, const std::string& text) {
    const std::string s = strip_spaces(text);
    std::size_t pos = 0;
    Endomorphism f = parse_one(G, s, pos);
    if (pos != s.size()) throw ParseError("trailing characters after map");
    return f;
}

EndoPair parse_pair(const FiniteGroup& G, const std::string& text) {
    const std::string s = strip_spaces(text);
    std::size_t pos = 0;
    EndoPair p;
    p.left = parse_one(G, s, pos);
    if (pos >= s.size() || s[pos] != ',')
        throw ParseError("expected ',' between the two maps");
    ++pos;
    p.right = parse_one(G, s, pos);
    if (pos != s.size()) throw ParseError("trailing characters after pair");
    return p;
}

std::string format_triple(const CanonicalTriple& t) {
    return "(" + std::to_string(t.s) + "," + std::to_string(t.t1) + "," + std::to_string(t.t2) +
           ")";
}

CanonicalTriple parse_triple(const std::string& text) {
    std::string s = strip_spaces(text);
    if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    CanonicalTriple t;
    int fields[3];
    std::size_t pos = 0;
    for (int i = 0; i < 3; ++i) {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError("triple needs three numbers s,t1,t2");
        fields[i] = std::stoi(s.substr(start, pos - start));
        if (i < 2) {
            if (pos >= s.size() || s[pos] != ',')
                throw ParseError("triple needs three numbers s,t1,t2");
            ++pos;
        }
    }
    if (pos != s.size()) throw ParseError("trailing characters after triple");
    t.s = fields[0];
    t.t1 = fields[1];
    t.t2 = fields[2];
    if (t.t1 > t.s || t.s > t.t2)
        throw ParseError("triple (s,t1,t2) must satisfy t1 <= s <= t2");
    return t;
}

std::string format_mask(std::uint64_t mask) {
    std::string out = "{";
    bool first = true;
    for (int e : mask_elements(mask)) {
        if (!first) out += ',';
        out += std::to_string(e);
        first = false;
    }
    out += '}';
    return out;
}

}  // namespace icr
