#include "symedge/ideal_io.hpp"

#include <optional>
#include <sstream>

#include "symedge/errors.hpp"
#include "symedge/symbolic.hpp"

namespace symedge {

namespace {

// Strict integer parse: the whole string must be digits.
std::optional<int> parse_int(const std::string& s) {
    if (s.empty() || s.size() > 9) return std::nullopt;
    int value = 0;
    for (char c : s) {
        if (c < '0' || c > '9') return std::nullopt;
        value = value * 10 + (c - '0');
    }
    return value;
}

Monomial parse_generator_line(const std::string& line, int nvars, std::size_t line_start) {
    std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) {
        std::size_t off = line_start;
        if (tok.size() < 2 || tok[0] != 'x')
            throw parse_error("expected token of the form x<i>[^<e>]", off);
        const std::size_t caret = tok.find('^');
        const auto var = parse_int(
            tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
        const auto exp =
            caret == std::string::npos ? std::optional<int>(1) : parse_int(tok.substr(caret + 1));
        if (!var || !exp) throw parse_error("malformed generator token '" + tok + "'", off);
        if (*var < 1 || *var > nvars)
            throw parse_error("variable index out of range in '" + tok + "'", off);
        if (*exp < 1) throw parse_error("exponent must be positive in '" + tok + "'", off);
        exps[static_cast<std::size_t>(*var - 1)] += *exp;
    }
    return Monomial(exps);
}

}  // namespace

MonomialIdeal read_ideal_text(std::istream& in) {
    std::string line;
    std::size_t offset = 0;
    // First non-empty line fixes the ambient variable count.
    int nvars = -1;
    while (std::getline(in, line)) {
        const std::size_t line_start = offset;
        offset += line.size() + 1;
        std::string trimmed = line;
        trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
        if (trimmed.empty() || trimmed[0] == '#') continue;
        if (trimmed.rfind("n=", 0) != 0)
            throw parse_error("ideal file must start with 'n=<int>'", line_start);
        try {
            nvars = std::stoi(trimmed.substr(2));
        } catch (const std::exception&) {
            throw parse_error("malformed variable count", line_start);
        }
        break;
    }
    if (nvars < 1) throw parse_error("missing 'n=<int>' line", offset);

    std::vector<Monomial> gens;
    bool zero_marker = false;
    while (std::getline(in, line)) {
        const std::size_t line_start = offset;
        offset += line.size() + 1;
        std::string trimmed = line;
        trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
        while (!trimmed.empty() && (trimmed.back() == '\r' || trimmed.back() == ' '))
            trimmed.pop_back();
        if (trimmed.empty() || trimmed[0] == '#') continue;
        if (trimmed == "0") {
            zero_marker = true;
            continue;
        }
        gens.push_back(parse_generator_line(trimmed, nvars, line_start));
    }
    if (zero_marker && !gens.empty())
        throw parse_error("'0' line mixed with generators", offset);
    return MonomialIdeal(nvars, std::move(gens));
}

MonomialIdeal read_ideal_text(const std::string& text) {
    std::istringstream in(text);
    return read_ideal_text(in);
}

std::string monomial_to_string(const Monomial& m) {
    if (m.is_one()) return "1";
    std::ostringstream out;
    bool first = true;
    for (int i = 1; i <= m.nvars(); ++i) {
        const int e = m.exponent(i);
        if (e == 0) continue;
        if (!first) out << ' ';
        first = false;
        out << 'x' << i;
        if (e > 1) out << '^' << e;
    }
    return out.str();
}

std::string write_ideal_text(const MonomialIdeal& i) {
    std::ostringstream out;
    out << "n=" << i.nvars() << '\n';
    if (i.is_zero()) {
        out << "0\n";
        return out.str();
    }
    for (const Monomial& g : i.gens()) out << monomial_to_string(g) << '\n';
    return out.str();
}

nlohmann::json ideal_to_json(const MonomialIdeal& i) {
    nlohmann::json j;
    j["n"] = i.nvars();
    j["gens"] = nlohmann::json::array();
    for (const Monomial& g : i.gens()) j["gens"].push_back(g.exponents());
    return j;
}

MonomialIdeal ideal_from_json(const nlohmann::json& j) {
    const int nvars = j.at("n").get<int>();
    std::vector<Monomial> gens;
    for (const auto& e : j.at("gens")) {
        auto exps = e.get<std::vector<int>>();
        if (static_cast<int>(exps.size()) != nvars)
            throw parse_error("exponent vector length mismatch", 0);
        gens.push_back(Monomial(std::move(exps)));
    }
    return MonomialIdeal(nvars, std::move(gens));
}

nlohmann::json system_to_json(const CoverPrimeSystem& sys) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& entry : sys.entries) {
        nlohmann::json e;
        e["cover"] = nlohmann::json::array();
        for (int v : entry.cover) e["cover"].push_back(v);
        e["k"] = entry.k;
        j.push_back(e);
    }
    return j;
}

CoverPrimeSystem system_from_json(const nlohmann::json& j, int nvars) {
    CoverPrimeSystem sys;
    sys.nvars = nvars;
    for (const auto& e : j) {
        CoverEntry entry;
        for (int v : e.at("cover").get<std::vector<int>>()) {
            if (v < 1 || v > nvars) throw parse_error("cover vertex out of range", 0);
            entry.cover.add(v);
        }
        entry.k = e.at("k").get<int>();
        if (entry.k < 1) throw parse_error("cover exponent must be positive", 0);
        sys.entries.push_back(entry);
    }
    return sys;
}

}  // namespace symedge
