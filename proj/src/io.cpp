#include "charcodes/io.hpp"

#include <charconv>
#include <sstream>

namespace charcodes {

namespace {

std::string_view trimmed(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
        s.remove_suffix(1);
    return s;
}

uint64_t parse_u64(std::string_view s) {
    s = trimmed(s);
    uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError("bad integer: '" + std::string(s) + "'");
    return v;
}

std::vector<uint64_t> parse_u64_list(std::string_view s, char sep) {
    std::vector<uint64_t> out;
    s = trimmed(s);
    if (s.empty()) return out;
    size_t start = 0;
    for (size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(parse_u64(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    return out;
}

}  // namespace

std::string format_field_spec(const FieldCtx& f) {
    std::ostringstream os;
    os << "p=" << f.p() << " b=" << f.b() << " mod=";
    for (size_t i = 0; i < f.modulus().size(); ++i) {
        if (i) os << ',';
        os << f.modulus()[i];
    }
    return os.str();
}

FieldRef parse_field_spec(std::string_view text) {
    text = trimmed(text);
    uint64_t p = 0, b = 0;
    std::optional<std::vector<uint32_t>> mod;
    std::istringstream is{std::string(text)};
    std::string tok;
    while (is >> tok) {
        std::string_view t(tok);
        if (t.starts_with("p=")) {
            p = parse_u64(t.substr(2));
        } else if (t.starts_with("b=")) {
            b = parse_u64(t.substr(2));
        } else if (t.starts_with("mod=")) {
            std::vector<uint32_t> m;
            for (uint64_t c : parse_u64_list(t.substr(4), ','))
                m.push_back(static_cast<uint32_t>(c));
            mod = std::move(m);
        } else {
            throw ParseError("unknown field-spec token: '" + tok + "'");
        }
    }
    if (p == 0 || b == 0) throw ParseError("field spec needs p= and b=");
    return make_field(p, b, std::move(mod));
}

std::string format_poly(const Poly& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i <= a.degree(); ++i) {
        if (i) os << ',';
        os << a.coeff(i).v;
    }
    return os.str();
}

Poly parse_poly(const FieldRef& f, std::string_view text) {
    std::vector<Fq> c;
    for (uint64_t v : parse_u64_list(text, ',')) {
        if (v >= f->q()) throw ParseError("coefficient index out of range");
        c.push_back(Fq(static_cast<uint32_t>(v)));
    }
    return Poly::from_coeffs(f, std::move(c));
}

std::string to_string(Alphabet a) {
    switch (a) {
        case Alphabet::qr: return "qr";
        case Alphabet::f2: return "f2";
        case Alphabet::fq: return "fq";
    }
    return "fq";
}

Alphabet parse_alphabet(std::string_view text) {
    text = trimmed(text);
    if (text == "qr") return Alphabet::qr;
    if (text == "f2") return Alphabet::f2;
    if (text == "fq") return Alphabet::fq;
    throw ParseError("unknown alphabet: '" + std::string(text) + "'");
}

std::string format_word(const ReceivedWord& w) {
    std::ostringstream os;
    os << "field: " << format_field_spec(*w.ctx) << '\n';
    os << "alphabet: " << to_string(w.alphabet) << '\n';
    for (size_t i = 0; i < w.values.size(); ++i) {
        if (i) os << ' ';
        os << w.values[i].v;
    }
    os << '\n';
    return os.str();
}

ReceivedWord parse_word(std::string_view text) {
    std::istringstream is{std::string(text)};
    std::string line;
    if (!std::getline(is, line) || !trimmed(line).starts_with("field:"))
        throw ParseError("word file must start with a field: line");
    FieldRef f = parse_field_spec(trimmed(line).substr(6));
    if (!std::getline(is, line) || !trimmed(line).starts_with("alphabet:"))
        throw ParseError("word file needs an alphabet: line");
    Alphabet a = parse_alphabet(trimmed(line).substr(9));
    if (!std::getline(is, line)) throw ParseError("word file needs a values line");
    std::vector<Fq> values;
    for (uint64_t v : parse_u64_list(line, ' ')) {
        if (v >= f->q()) throw ParseError("word value out of range");
        values.push_back(Fq(static_cast<uint32_t>(v)));
    }
    if (values.size() != f->q()) throw ParseError("word length must equal q");
    return ReceivedWord{std::move(f), a, std::move(values)};
}

std::string format_pseudopoly(const PseudoPoly& p) {
    std::ostringstream os;
    for (size_t i = 0; i < p.length(); ++i) os << format_poly(p.digit(i)) << '\n';
    os << '\n';
    return os.str();
}

PseudoPoly parse_pseudopoly(const FieldRef& f, std::string_view text) {
    std::istringstream is{std::string(text)};
    std::string line;
    std::vector<Poly> digits;
    while (std::getline(is, line)) {
        if (trimmed(line).empty()) break;
        digits.push_back(parse_poly(f, line));
    }
    return PseudoPoly(f, std::move(digits));
}

}  // namespace charcodes
