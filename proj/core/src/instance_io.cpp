#include <apnae/instance_io.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include <apnae/prime.hpp>

namespace apnae {

void write_instance(std::ostream& out, const Formula& f) {
    out << "p apnae " << f.n << ' ' << f.k << ' ' << f.clauses.size() << '\n';
    for (const SignedClause& c : f.clauses) {
        out << c.prog.start << ' ' << c.prog.step << ' ';
        for (std::uint32_t i = 0; i < f.k; ++i) out << (c.sign(i) ? '1' : '0');
        out << '\n';
    }
}

void write_instance(std::ostream& out, const ApHypergraph& h) {
    out << "p aphg " << h.n << ' ' << h.k << ' ' << h.edges.size() << '\n';
    for (const Progression& e : h.edges) out << e.start << ' ' << e.step << '\n';
}

namespace {

struct Header {
    std::string kind;
    std::uint32_t n = 0, k = 0;
    std::uint64_t m = 0;
};

Header parse_header(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        std::string p, kind;
        Header h;
        if (!(ls >> p >> kind >> h.n >> h.k >> h.m) || p != "p")
            throw ParseError("malformed header line: '" + line + "'");
        std::string extra;
        if (ls >> extra) throw ParseError("trailing tokens in header: '" + line + "'");
        if (kind != "apnae" && kind != "aphg")
            throw ParseError("unknown instance kind '" + kind + "'");
        if (h.n <= 2 || !is_prime(h.n))
            throw ParseError("header n must be a prime > 2, got " + std::to_string(h.n));
        if (h.k < 3 || h.k >= h.n) throw ParseError("header requires 3 <= k < n");
        h.kind = kind;
        return h;
    }
    throw ParseError("missing 'p' header line");
}

// Body lines, skipping comments; exactly h.m of them.
std::vector<std::string> body_lines(std::istream& in, std::uint64_t m) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        lines.push_back(line);
    }
    if (lines.size() != m)
        throw ParseError("expected " + std::to_string(m) + " body lines, got " +
                         std::to_string(lines.size()));
    return lines;
}

Progression parse_edge(std::istringstream& ls, const Header& h, const std::string& line) {
    std::int64_t a, x;
    if (!(ls >> a >> x)) throw ParseError("malformed body line: '" + line + "'");
    if (a < 0 || a >= h.n || x < 0 || x >= h.n)
        throw ParseError("residue out of range in line: '" + line + "'");
    return {std::uint32_t(a), std::uint32_t(x), h.k};
}

} // namespace

Instance read_instance(std::istream& in) {
    Header h = parse_header(in);
    std::vector<std::string> lines = body_lines(in, h.m);

    if (h.kind == "aphg") {
        ApHypergraph g{h.n, h.k, {}};
        g.edges.reserve(h.m);
        for (const std::string& line : lines) {
            std::istringstream ls(line);
            g.edges.push_back(parse_edge(ls, h, line));
            std::string extra;
            if (ls >> extra) throw ParseError("trailing tokens in line: '" + line + "'");
        }
        return g;
    }

    Formula f{h.n, h.k, {}};
    f.clauses.reserve(h.m);
    for (const std::string& line : lines) {
        std::istringstream ls(line);
        Progression p = parse_edge(ls, h, line);
        std::string signs;
        if (!(ls >> signs)) throw ParseError("missing signs in line: '" + line + "'");
        std::string extra;
        if (ls >> extra) throw ParseError("trailing tokens in line: '" + line + "'");
        if (signs.size() != h.k)
            throw ParseError("signs must have exactly k characters in line: '" + line + "'");
        std::uint32_t mask = 0;
        for (std::uint32_t i = 0; i < h.k; ++i) {
            if (signs[i] == '1') mask |= 1u << i;
            else if (signs[i] != '0') throw ParseError("signs must be 0/1 in line: '" + line + "'");
        }
        f.clauses.push_back({p, mask});
    }
    return f;
}

Instance read_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open instance file '" + path + "'");
    return read_instance(in);
}

} // namespace apnae
