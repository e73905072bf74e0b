#include "cdc/codefile.hpp"

#include <zlib.h>

#include <fstream>
#include <set>
#include <sstream>

namespace cdc {

namespace {

[[noreturn]] void parse_error(size_t line, const std::string& what) {
    raise(Errc::Parse, "line " + std::to_string(line) + ": " + what);
}

std::string read_possibly_gzipped(const std::string& path) {
    gzFile gz = gzopen(path.c_str(), "rb");
    require(gz != nullptr, Errc::Parse, "cannot open " + path);
    std::string out;
    char buf[1 << 16];
    int n;
    while ((n = gzread(gz, buf, sizeof buf)) > 0) out.append(buf, size_t(n));
    bool ok = n == 0;
    gzclose(gz);
    require(ok, Errc::Parse, "read error on " + path);
    return out;
}

}  // namespace

std::string serialize_code(const Cdc& c) {
    std::ostringstream out;
    int d = c.claimed_distance() == kInfiniteDistance ? 0 : c.claimed_distance();
    out << "cdc " << c.field().q() << ' ' << c.ambient_dim() << ' ' << c.dim() << ' ' << d << ' '
        << c.size() << '\n';
    for (const Subspace& s : c.codewords()) {
        out << '\n';
        for (int r = 0; r < s.dim(); ++r) {
            for (int col = 0; col < s.ambient_dim(); ++col)
                out << char('0' + s.basis().at(r, col));
            out << '\n';
        }
    }
    for (const std::string& p : c.provenance()) out << "# " << p << '\n';
    return out.str();
}

Cdc parse_code(const std::string& text, std::vector<std::string>* warnings) {
    std::istringstream in(text);
    std::string line;
    size_t lineno = 0;

    auto next_line = [&]() -> bool {
        if (!std::getline(in, line)) return false;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        ++lineno;
        return true;
    };

    if (!next_line()) parse_error(1, "empty file");
    std::istringstream header(line);
    std::string magic;
    long q = 0, v = 0, k = 0, d = 0, count = -1;
    header >> magic >> q >> v >> k >> d >> count;
    if (magic != "cdc" || header.fail() || count < 0)
        parse_error(lineno, "expected header 'cdc q v k d count'");
    if (q < 2 || q > 9) parse_error(lineno, "symbol alphabet supports 2 <= q <= 9");
    if (!(0 <= k && k <= v && v <= 64)) parse_error(lineno, "need 0 <= k <= v <= 64");
    const Field& f = Field::of(int(q));

    Cdc code(f, int(v), int(k), d == 0 ? kInfiniteDistance : int(d));
    std::set<Subspace> seen;
    size_t blocks = 0;
    while (blocks < size_t(count)) {
        if (!next_line()) parse_error(lineno + 1, "unexpected end of file: expected blank line");
        if (!line.empty()) parse_error(lineno, "expected blank line before codeword block");
        std::vector<std::string> rows;
        for (long r = 0; r < k; ++r) {
            if (!next_line()) parse_error(lineno + 1, "unexpected end of file inside block");
            if (long(line.size()) != v)
                parse_error(lineno, "row has " + std::to_string(line.size()) +
                                        " symbols, expected " + std::to_string(v));
            for (char ch : line)
                if (ch < '0' || ch >= '0' + q)
                    parse_error(lineno, std::string("symbol '") + ch + "' outside 0.." +
                                            std::to_string(q - 1));
            rows.push_back(line);
        }
        FqMatrix m(f, rows);
        Subspace s = Subspace::from_rows(m);
        if (s.dim() != k || !(s.basis() == m))
            parse_error(lineno, "block is not a rank-" + std::to_string(k) +
                                    " matrix in reduced row echelon form");
        if (!seen.insert(s).second && warnings)
            warnings->push_back("duplicate codeword block ending at line " +
                                std::to_string(lineno));
        code.add(std::move(s));
        ++blocks;
    }
    while (next_line()) {
        if (line.empty()) continue;
        if (line[0] != '#') parse_error(lineno, "unexpected content after codeword blocks");
        std::string p = line.substr(1);
        if (!p.empty() && p[0] == ' ') p.erase(0, 1);
        code.add_provenance(p);
    }
    if (code.size() != size_t(count))
        raise(Errc::Parse, "header count " + std::to_string(count) + " does not match " +
                               std::to_string(code.size()) + " distinct codewords");
    return code;
}

Cdc read_code_file(const std::string& path, std::vector<std::string>* warnings) {
    return parse_code(read_possibly_gzipped(path), warnings);
}

void write_code_file(const Cdc& c, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    require(out.good(), Errc::Parse, "cannot write " + path);
    out << serialize_code(c);
    require(out.good(), Errc::Parse, "write error on " + path);
}

FqMatrix read_matrix_file(const std::string& path, const Field& f) {
    std::string text = read_possibly_gzipped(path);
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> rows;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        rows.push_back(line);
    }
    require(!rows.empty(), Errc::Parse, "no matrix rows in " + path);
    return FqMatrix(f, rows);
}

}  // namespace cdc
