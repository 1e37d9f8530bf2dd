#include "bfa/text.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

namespace bfa {
namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() const { return text[pos]; }
    std::size_t column() const { return pos + 1; }
};

int parse_decimal(Cursor& c, const char* what) {
    const std::size_t start = c.pos;
    long v = 0;
    while (c.pos < c.text.size() && std::isdigit(static_cast<unsigned char>(c.text[c.pos]))) {
        v = v * 10 + (c.text[c.pos] - '0');
        if (v > 1000000) throw ParseError(std::string(what) + " is out of range", start + 1);
        ++c.pos;
    }
    if (c.pos == start) throw ParseError(std::string("expected ") + what, c.column());
    return static_cast<int>(v);
}

// Returns the variable index (1-based).
int parse_var(Cursor& c) {
    if (c.peek() != 'x') throw ParseError("expected a variable like x3", c.column());
    ++c.pos;
    const std::size_t col = c.column();
    const int idx = parse_decimal(c, "variable index");
    if (idx < 1) throw ParseError("variable indices are 1-based", col);
    if (idx > TruthTable::kMaxVars)
        throw ParseError("variable index exceeds the cap of " +
                             std::to_string(TruthTable::kMaxVars),
                         col);
    return idx;
}

}  // namespace

Anf parse_anf(std::string_view text, int declared_n) {
    Cursor c{text};
    std::vector<std::uint32_t> monos;
    int max_index = 0;
    bool first = true;
    for (;;) {
        if (c.done()) {
            if (first) throw ParseError("expected a term", c.column());
            break;
        }
        if (!first) {
            if (c.peek() != '+') throw ParseError("expected '+' between terms", c.column());
            ++c.pos;
            c.skip_ws();
            if (c.pos >= c.text.size()) throw ParseError("expected a term after '+'", c.column());
        }
        first = false;
        if (c.peek() == '0') {
            ++c.pos;
        } else if (c.peek() == '1') {
            ++c.pos;
            monos.push_back(0);
        } else {
            std::uint32_t mask = 0;
            for (;;) {
                const std::size_t col = c.column();
                const int idx = parse_var(c);
                if (declared_n > 0 && idx > declared_n)
                    throw ParseError("term uses x" + std::to_string(idx) + " but n=" +
                                         std::to_string(declared_n) + " was declared",
                                     col);
                mask |= std::uint32_t{1} << (idx - 1);  // x*x = x
                max_index = std::max(max_index, idx);
                c.skip_ws();
                if (c.pos < c.text.size() && c.peek() == '*') {
                    ++c.pos;
                    c.skip_ws();
                } else {
                    break;
                }
            }
            monos.push_back(mask);
        }
    }
    const int n = declared_n > 0 ? declared_n : std::max(max_index, 1);
    return Anf(n, std::move(monos));
}

std::string format_anf(const Anf& f) {
    if (f.is_zero()) return "0";
    std::vector<std::uint32_t> monos(f.monomials());
    std::sort(monos.begin(), monos.end(), [](std::uint32_t a, std::uint32_t b) {
        const int da = std::popcount(a);
        const int db = std::popcount(b);
        return da != db ? da > db : a < b;
    });
    std::string out;
    for (std::size_t i = 0; i < monos.size(); ++i) {
        if (i) out += " + ";
        if (monos[i] == 0) {
            out += "1";
            continue;
        }
        bool first_var = true;
        for (std::uint32_t m = monos[i]; m != 0; m &= m - 1) {
            if (!first_var) out += "*";
            out += "x" + std::to_string(std::countr_zero(m) + 1);
            first_var = false;
        }
    }
    return out;
}

std::string format_tt_hex(const TruthTable& t) {
    static const char* hex = "0123456789abcdef";
    std::string out = "n=" + std::to_string(t.vars()) + ":";
    const std::uint64_t nbytes = std::max<std::uint64_t>(t.size() / 8, 1);
    for (std::uint64_t i = 0; i < nbytes; ++i) {
        const std::uint64_t word = t.words()[i >> 3];
        const unsigned byte = static_cast<unsigned>((word >> ((i & 7) * 8)) & 0xff);
        out += hex[byte >> 4];
        out += hex[byte & 0xf];
    }
    return out;
}

TruthTable parse_tt_hex(std::string_view text) {
    Cursor c{text};
    c.skip_ws();
    if (c.text.substr(c.pos, 2) != "n=") throw ParseError("expected 'n=<k>:'", c.column());
    c.pos += 2;
    const std::size_t ncol = c.column();
    const int n = parse_decimal(c, "variable count");
    if (n < 1 || n > TruthTable::kMaxVars)
        throw ParseError("variable count out of range", ncol);
    if (c.pos >= c.text.size() || c.peek() != ':')
        throw ParseError("expected ':' after the variable count", c.column());
    ++c.pos;
    const std::uint64_t nbits = std::uint64_t{1} << n;
    const std::uint64_t nbytes = std::max<std::uint64_t>(nbits / 8, 1);

    TruthTable t(n);
    for (std::uint64_t i = 0; i < nbytes; ++i) {
        unsigned byte = 0;
        for (int half = 0; half < 2; ++half) {
            if (c.pos >= c.text.size()) throw ParseError("hex payload is too short", c.column());
            const char ch = c.text[c.pos];
            unsigned v;
            if (ch >= '0' && ch <= '9')
                v = static_cast<unsigned>(ch - '0');
            else if (ch >= 'a' && ch <= 'f')
                v = static_cast<unsigned>(ch - 'a' + 10);
            else
                throw ParseError("expected a lowercase hex digit", c.column());
            byte = (byte << 4) | v;
            ++c.pos;
        }
        if (nbits < 8 && (byte >> nbits) != 0)
            throw ParseError("padding bits beyond 2^n must be zero", c.column() - 2);
        t.data()[i >> 3] |= static_cast<std::uint64_t>(byte) << ((i & 7) * 8);
    }
    if (!c.done()) throw ParseError("trailing characters after the hex payload", c.column());
    return t;
}

VectorialBf parse_vbf(std::string_view text) {
    std::size_t pos = 0;
    std::size_t lineno = 0;
    int n = 0;
    std::vector<Anf> coords;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++lineno;

        // Skip blank lines and comments.
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos) continue;
        if (line[first] == '#') continue;

        if (n == 0) {
            Cursor c{line, first};
            if (line.substr(first, 2) != "n=")
                throw ParseError("vbf file must start with 'n=<k>' (line " +
                                     std::to_string(lineno) + ")",
                                 first + 1);
            c.pos = first + 2;
            n = parse_decimal(c, "variable count");
            if (n < 1 || n > TruthTable::kMaxVars)
                throw ParseError("variable count out of range", first + 3);
            if (!c.done())
                throw ParseError("trailing characters after 'n=<k>'", c.column());
            continue;
        }
        if (static_cast<int>(coords.size()) == n)
            throw ParseError("more coordinate lines than n (line " + std::to_string(lineno) + ")",
                             first + 1);
        coords.push_back(parse_anf(line, n));
    }
    if (n == 0) throw ParseError("empty vbf file", 1);
    if (static_cast<int>(coords.size()) != n)
        throw ParseError("expected " + std::to_string(n) + " coordinate lines, got " +
                             std::to_string(coords.size()),
                         1);
    return VectorialBf::from_anfs(coords);
}

std::string format_vbf(const VectorialBf& f) {
    std::string out = "n=" + std::to_string(f.vars()) + "\n";
    for (const TruthTable& c : f.coordinates()) out += format_anf(Anf::from_table(c)) + "\n";
    return out;
}

}  // namespace bfa
