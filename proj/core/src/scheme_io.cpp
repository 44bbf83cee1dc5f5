#include "flipsym/scheme_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace flipsym {

namespace {

std::string hex_word(uint64_t w) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%llx", static_cast<unsigned long long>(w));
    return buf;
}

std::string int_matrix_text(const IntMatrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.v.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(m.v[i]);
    }
    return out;
}

void render_header(std::ostream& out, int n, Field field, Group group,
                   const std::optional<DiagonalPartition>& partition) {
    out << "format scheme 1\n";
    out << "n " << n << "\n";
    out << "field " << field_name(field) << "\n";
    out << "group " << group_name(group) << "\n";
    if (partition)
        out << "partition " << to_string(*partition) << "\n";
}

struct Parser {
    std::istream& in;
    int line_no = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw SchemeIoError("scheme file, line " + std::to_string(line_no) + ": " + msg);
    }

    bool next_line(std::string& line) {
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            if (!line.empty())
                return true;
        }
        return false;
    }
};

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok)
        out.push_back(tok);
    return out;
}

BitMatrix parse_f2_factor(Parser& p, int n, const std::string& tok) {
    uint64_t w = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), w, 16);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        p.fail("bad hex factor '" + tok + "'");
    if (w & ~word_mask(n))
        p.fail("factor '" + tok + "' has bits outside the " + std::to_string(n * n) +
               "-bit window");
    return BitMatrix(n, w);
}

IntMatrix parse_z_factor(Parser& p, int n, const std::string& tok) {
    IntMatrix m(n);
    std::size_t pos = 0;
    for (int cell = 0; cell < n * n; ++cell) {
        if (pos >= tok.size())
            p.fail("factor '" + tok + "' has fewer than " + std::to_string(n * n) + " entries");
        std::size_t comma = tok.find(',', pos);
        if (comma == std::string::npos)
            comma = tok.size();
        int64_t value = 0;
        auto [ptr, ec] = std::from_chars(tok.data() + pos, tok.data() + comma, value);
        if (ec != std::errc() || ptr != tok.data() + comma)
            p.fail("bad integer entry in '" + tok + "'");
        m.v[cell] = value;
        pos = comma + 1;
    }
    if (pos <= tok.size())
        p.fail("factor '" + tok + "' has more than " + std::to_string(n * n) + " entries");
    return m;
}

}  // namespace

const char* field_name(Field f) {
    return f == Field::F2 ? "F2" : "Z";
}

std::string render(const Scheme& s) {
    std::ostringstream out;
    render_header(out, s.n, Field::F2, s.group, s.partition);
    for (const auto& t : s.fixed)
        out << "fixed " << hex_word(t.a.bits) << ' ' << hex_word(t.b.bits) << ' '
            << hex_word(t.c.bits) << "\n";
    for (const auto& t : s.orbits)
        out << "orbit " << hex_word(t.a.bits) << ' ' << hex_word(t.b.bits) << ' '
            << hex_word(t.c.bits) << "\n";
    return out.str();
}

std::string render(const IntScheme& s) {
    std::ostringstream out;
    render_header(out, s.n, Field::Z, s.group, s.partition);
    for (const auto& t : s.fixed)
        out << "fixed " << int_matrix_text(t.a) << ' ' << int_matrix_text(t.b) << ' '
            << int_matrix_text(t.c) << "\n";
    for (const auto& t : s.orbits)
        out << "orbit " << int_matrix_text(t.a) << ' ' << int_matrix_text(t.b) << ' '
            << int_matrix_text(t.c) << "\n";
    return out.str();
}

std::string render(const AnyScheme& s) {
    return std::visit([](const auto& v) { return render(v); }, s);
}

AnyScheme parse_scheme(std::istream& in) {
    Parser p{in};
    std::string line;

    if (!p.next_line(line))
        p.fail("empty file");
    if (line != "format scheme 1")
        p.fail("expected header 'format scheme 1'");

    int n = 0;
    std::optional<Field> field;
    std::optional<Group> group;
    std::optional<DiagonalPartition> partition;
    std::vector<std::pair<bool, std::vector<std::string>>> body;  // (is_fixed, factor tokens)

    while (p.next_line(line)) {
        auto tokens = split_ws(line);
        const std::string& key = tokens[0];
        if (key == "n") {
            if (tokens.size() != 2)
                p.fail("expected 'n <dimension>'");
            auto [ptr, ec] = std::from_chars(tokens[1].data(), tokens[1].data() + tokens[1].size(), n);
            if (ec != std::errc() || ptr != tokens[1].data() + tokens[1].size())
                p.fail("bad dimension '" + tokens[1] + "'");
            if (n < 1 || n > kMaxDim)
                p.fail("dimension must be between 1 and 8");
        } else if (key == "field") {
            if (tokens.size() != 2)
                p.fail("expected 'field F2' or 'field Z'");
            if (tokens[1] == "F2")
                field = Field::F2;
            else if (tokens[1] == "Z")
                field = Field::Z;
            else
                p.fail("unknown field '" + tokens[1] + "'");
        } else if (key == "group") {
            if (tokens.size() != 2)
                p.fail("expected 'group <name>'");
            group = parse_group(tokens[1]);
            if (!group)
                p.fail("unknown group '" + tokens[1] + "'");
        } else if (key == "partition") {
            if (tokens.size() != 2)
                p.fail("expected 'partition <parts>'");
            try {
                partition = parse_partition(tokens[1]);
            } catch (const std::invalid_argument& e) {
                p.fail(e.what());
            }
        } else if (key == "fixed" || key == "orbit") {
            if (tokens.size() != 4)
                p.fail("expected three factors after '" + key + "'");
            if (n == 0 || !field || !group)
                p.fail("'" + key + "' before n/field/group header lines");
            body.emplace_back(key == "fixed",
                              std::vector<std::string>{tokens[1], tokens[2], tokens[3]});
        } else {
            p.fail("unknown directive '" + key + "'");
        }
    }
    if (n == 0)
        p.fail("missing 'n' header");
    if (!field)
        p.fail("missing 'field' header");
    if (!group)
        p.fail("missing 'group' header");

    if (*field == Field::F2) {
        Scheme s;
        s.n = n;
        s.group = *group;
        s.partition = partition;
        for (const auto& [is_fixed, toks] : body) {
            RankOneTensor t(parse_f2_factor(p, n, toks[0]), parse_f2_factor(p, n, toks[1]),
                            parse_f2_factor(p, n, toks[2]));
            (is_fixed ? s.fixed : s.orbits).push_back(t);
        }
        return s;
    }
    IntScheme s;
    s.n = n;
    s.group = *group;
    s.partition = partition;
    for (const auto& [is_fixed, toks] : body) {
        IntRankOneTensor t{parse_z_factor(p, n, toks[0]), parse_z_factor(p, n, toks[1]),
                           parse_z_factor(p, n, toks[2])};
        (is_fixed ? s.fixed : s.orbits).push_back(std::move(t));
    }
    return s;
}

AnyScheme parse_scheme_text(const std::string& text) {
    std::istringstream in(text);
    return parse_scheme(in);
}

AnyScheme load_scheme(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw SchemeIoError("cannot open '" + path.string() + "'");
    return parse_scheme(in);
}

void save_scheme(const std::filesystem::path& path, const AnyScheme& s) {
    std::ofstream out(path);
    if (!out)
        throw SchemeIoError("cannot write '" + path.string() + "'");
    out << render(s);
    if (!out)
        throw SchemeIoError("write failed for '" + path.string() + "'");
}

int rank_of(const AnyScheme& s) {
    return std::visit([](const auto& v) { return v.rank(); }, s);
}

int dim_of(const AnyScheme& s) {
    return std::visit([](const auto& v) { return v.n; }, s);
}

Group group_of(const AnyScheme& s) {
    return std::visit([](const auto& v) { return v.group; }, s);
}

bool verify_any(const AnyScheme& s) {
    if (const Scheme* f2 = std::get_if<Scheme>(&s))
        return verify_f2(*f2);
    return verify_int(std::get<IntScheme>(s));
}

}  // namespace flipsym
