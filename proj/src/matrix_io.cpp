#include "qmds/matrix_io.hpp"

#include <array>
#include <charconv>
#include <vector>

namespace qmds {
namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    size_t start = 0;
    while (true) {
        size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

uint64_t parse_uint(std::string_view tok, size_t line, const char* what) {
    uint64_t v = 0;
    if (tok.empty()) throw ParseError(line, std::string("empty token for ") + what);
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line, std::string("malformed integer for ") + what + ": '" +
                                   std::string(tok) + "'");
    return v;
}

// One element token: exactly `count` comma-separated digits, each < p.
std::vector<uint32_t> parse_digits(std::string_view tok, uint32_t count, uint32_t p, size_t line) {
    std::vector<std::string_view> parts = split(tok, ',');
    if (parts.size() != count)
        throw ParseError(line, "element '" + std::string(tok) + "' must have " +
                                   std::to_string(count) + " digits");
    std::vector<uint32_t> d(count);
    for (uint32_t i = 0; i < count; ++i) {
        uint64_t v = parse_uint(parts[i], line, "digit");
        if (v >= p) throw ParseError(line, "digit " + std::to_string(v) + " not reduced mod p");
        d[i] = static_cast<uint32_t>(v);
    }
    return d;
}

}  // namespace

std::string serialize_matrix(const FieldContext& F, const ConstructionParams& P,
                             const GeneratorMatrix& G) {
    std::string out;
    out.reserve(G.a.size() * (2 * F.m() * 2 + 1) + 256);
    auto num = [&](uint64_t v, char tail) {
        out += std::to_string(v);
        out += tail;
    };
    num(F.p(), ' ');
    num(F.m(), ' ');
    num(F.q(), ' ');
    num(P.n, ' ');
    num(G.k, ' ');
    num(P.L, ' ');
    num(P.lambda, ' ');
    num(P.tau, ' ');
    num(P.rho, ' ');
    num(P.sigma, '\n');

    for (uint32_t j = 0; j <= F.m(); ++j)
        num(F.base_modulus()[j], j == F.m() ? '\n' : ' ');

    for (uint32_t j = 0; j < 3; ++j) {
        // GF(q) element as the low m digits of its embedding
        std::vector<uint32_t> d = F.digits(F.embed(F.ext_modulus()[j]));
        for (uint32_t t = 0; t < F.m(); ++t) {
            out += std::to_string(d[t]);
            out += (t + 1 < F.m()) ? ',' : (j < 2 ? ' ' : '\n');
        }
    }

    for (uint32_t r = 0; r < G.k; ++r)
        for (uint64_t c = 0; c < G.n; ++c) {
            out += F.to_string(G.at(r, c));
            out += (c + 1 < G.n) ? ' ' : '\n';
        }
    return out;
}

LoadedMatrix parse_matrix(std::string_view text) {
    if (text.empty() || text.back() != '\n')
        throw ParseError(1, "file must end with a newline");
    text.remove_suffix(1);
    std::vector<std::string_view> lines = split(text, '\n');

    if (lines.size() < 3) throw ParseError(lines.size(), "truncated file: missing header lines");

    std::vector<std::string_view> head = split(lines[0], ' ');
    if (head.size() != 10)
        throw ParseError(1, "header must have 10 fields: p m q n k L lambda tau rho sigma");
    auto header_field = [&](int idx, const char* what) {
        uint64_t v = parse_uint(head[idx], 1, what);
        if (v > (uint64_t(1) << 31))
            throw ParseError(1, std::string(what) + " out of range");
        return v;
    };
    const uint32_t p = static_cast<uint32_t>(header_field(0, "p"));
    const uint32_t m = static_cast<uint32_t>(header_field(1, "m"));
    const uint64_t q = header_field(2, "q");
    const uint64_t n = header_field(3, "n");
    const uint64_t k = header_field(4, "k");
    const uint64_t L = header_field(5, "L");
    const uint64_t lambda = header_field(6, "lambda");
    const uint64_t tau = header_field(7, "tau");
    const uint64_t rho = header_field(8, "rho");
    const uint64_t sigma = header_field(9, "sigma");

    uint64_t qcheck = 1;
    for (uint32_t i = 0; i < m; ++i) {
        qcheck *= p;
        if (qcheck > (uint64_t(1) << 32)) throw ParseError(1, "q out of range");
    }
    if (q != qcheck) throw ParseError(1, "header q does not equal p^m");

    std::vector<std::string_view> base_toks = split(lines[1], ' ');
    if (base_toks.size() != size_t(m) + 1)
        throw ParseError(2, "base modulus must have m+1 coefficients");
    std::vector<uint32_t> base(m + 1);
    for (uint32_t j = 0; j <= m; ++j) {
        uint64_t v = parse_uint(base_toks[j], 2, "coefficient");
        if (v >= p) throw ParseError(2, "coefficient not reduced mod p");
        base[j] = static_cast<uint32_t>(v);
    }

    std::vector<std::string_view> ext_toks = split(lines[2], ' ');
    if (ext_toks.size() != 3) throw ParseError(3, "extension modulus must have 3 elements");

    std::array<Fq, 3> ext;
    for (uint32_t j = 0; j < 3; ++j) {
        std::vector<uint32_t> d = parse_digits(ext_toks[j], m, p, 3);
        uint32_t v = 0;
        for (uint32_t t = m; t-- > 0;) v = v * p + d[t];
        ext[j] = Fq{v};
    }
    FieldContext ctx = [&] {
        try {
            return FieldContext::with_moduli(p, m, base, ext);
        } catch (const FieldError& e) {
            const std::string msg = e.what();
            throw ParseError(msg.find("extension") != std::string::npos ? 3 : 2, msg);
        }
    }();

    ConstructionParams P = validate_params(static_cast<uint32_t>(q), static_cast<uint32_t>(lambda),
                                           static_cast<uint32_t>(tau), static_cast<uint32_t>(rho),
                                           static_cast<uint32_t>(sigma));
    if (n != P.n) throw ParseError(1, "header n does not equal lambda*tau*sigma");
    if (L >= lambda) throw ParseError(1, "header L must lie in [0, lambda-1]");
    P.L = static_cast<uint32_t>(L);
    if (k < 1 || k > n) throw ParseError(1, "header k must lie in [1, n]");
    if (k * n > 100'000'000) throw ParseError(1, "matrix too large");

    if (lines.size() != 3 + k)
        throw ParseError(lines.size(), "expected " + std::to_string(3 + k) + " lines, found " +
                                           std::to_string(lines.size()));

    GeneratorMatrix G;
    G.params = P;
    G.k = static_cast<uint32_t>(k);
    G.n = n;
    G.a.resize(k * n);
    for (uint64_t r = 0; r < k; ++r) {
        const size_t line_no = 4 + r;
        std::vector<std::string_view> toks = split(lines[3 + r], ' ');
        if (toks.size() != n)
            throw ParseError(line_no, "row must have " + std::to_string(n) + " elements, found " +
                                          std::to_string(toks.size()));
        for (uint64_t c = 0; c < n; ++c) {
            std::vector<uint32_t> d = parse_digits(toks[c], 2 * m, p, line_no);
            G.a[r * n + c] = ctx.from_digits(d);
        }
    }
    return LoadedMatrix{std::move(ctx), P, std::move(G)};
}

}  // namespace qmds
