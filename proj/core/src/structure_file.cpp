#include "ainfty/structure_file.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "ainfty/errors.hpp"

namespace ainfty {

namespace {

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

template <class Int>
bool parse_int(std::string_view s, Int& out) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

struct PendingMap {
    std::size_t line;
    std::vector<std::pair<Word, Vector>> entries;
    std::map<Word, std::size_t> seen;  // word -> line
};

class Parser {
public:
    explicit Parser(std::string name) : name_(std::move(name)) {}

    AStructure run(std::string_view text) {
        std::size_t lineno = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const auto nl = text.find('\n', pos);
            std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
            ++lineno;
            if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
            if (const auto line = trim(raw); !line.empty()) handle(lineno, line);
            if (nl == std::string_view::npos) break;
            pos = nl + 1;
        }
        if (!header_) throw ParseError(lineno, "missing 'ainfty v1' header");
        if (!convention_) throw ParseError(lineno, "missing 'convention' line");
        return finish();
    }

private:
    void handle(std::size_t lineno, std::string_view line) {
        const auto tokens = split_ws(line);
        const auto keyword = tokens.front();
        if (!header_) {
            if (tokens.size() != 2 || keyword != "ainfty" || tokens[1] != "v1") {
                throw ParseError(lineno, "expected header 'ainfty v1'");
            }
            header_ = true;
            return;
        }
        if (keyword == "convention") {
            if (convention_) throw ParseError(lineno, "duplicate 'convention' line");
            if (tokens.size() != 2) throw ParseError(lineno, "expected 'convention cochain|chain'");
            convention_ = parse_convention(tokens[1]);
            if (!convention_) throw ParseError(lineno, "unknown convention '" + std::string(tokens[1]) + "'");
            return;
        }
        if (!convention_) throw ParseError(lineno, "'convention' line must precede basis and map lines");
        if (keyword == "basis") return basis(lineno, tokens);
        if (keyword == "map") return map(lineno, line);
        throw ParseError(lineno, "unknown directive '" + std::string(keyword) + "'");
    }

    void basis(std::size_t lineno, const std::vector<std::string_view>& tokens) {
        if (space_) throw ParseError(lineno, "basis lines must precede map lines");
        if (tokens.size() != 3) throw ParseError(lineno, "expected 'basis <name> <degree>'");
        int degree = 0;
        if (!parse_int(tokens[2], degree)) {
            throw ParseError(lineno, "malformed degree '" + std::string(tokens[2]) + "'");
        }
        const std::string name(tokens[1]);
        for (const auto& e : basis_) {
            if (e.name == name) throw ParseError(lineno, "duplicate basis name '" + name + "'");
        }
        if (name.find(',') != std::string::npos || name.find('|') != std::string::npos) {
            throw ParseError(lineno, "basis name '" + name + "' may not contain ',' or '|'");
        }
        basis_.push_back({name, *convention_ == Convention::chain ? -degree : degree});
    }

    BasisIndex lookup(std::size_t lineno, std::string_view name) const {
        if (auto i = space_->find(name)) return *i;
        throw ParseError(lineno, "unknown basis name '" + std::string(name) + "'");
    }

    // map <k>: <names...> -> <coeff> <name> [+ <coeff> <name>]*
    void map(std::size_t lineno, std::string_view line) {
        if (!space_) {
            if (basis_.empty()) throw ParseError(lineno, "map line before any basis line");
            space_ = make_space(basis_, *convention_);
        }
        const auto colon = line.find(':');
        const auto arrow = line.find("->");
        if (colon == std::string_view::npos || arrow == std::string_view::npos || arrow < colon) {
            throw ParseError(lineno, "expected 'map <k>: <word> -> <coeff> <name> [+ ...]'");
        }
        const auto head = split_ws(line.substr(0, colon));
        std::size_t k = 0;
        if (head.size() != 2 || !parse_int(head[1], k) || k < 1) {
            throw ParseError(lineno, "malformed arity in '" + std::string(trim(line.substr(0, colon))) + "'");
        }
        const auto names = split_ws(line.substr(colon + 1, arrow - colon - 1));
        if (names.size() != k) {
            throw ParseError(lineno, "arity " + std::to_string(k) + " map given a word of length " +
                                         std::to_string(names.size()));
        }
        std::vector<BasisIndex> letters;
        for (auto n : names) letters.push_back(lookup(lineno, n));
        Word input(std::move(letters));

        const auto rhs = split_ws(line.substr(arrow + 2));
        if (rhs.empty() || rhs.size() % 3 != 2) {
            throw ParseError(lineno, "expected '<coeff> <name> [+ <coeff> <name>]*' after '->'");
        }
        Vector output;
        for (std::size_t t = 0; t < rhs.size(); t += 3) {
            if (t > 0 && rhs[t - 1] != "+") throw ParseError(lineno, "terms must be joined by '+'");
            Scalar c;
            try {
                c = Scalar::parse(rhs[t]);
            } catch (const InputError& e) {
                throw ParseError(lineno, e.what());
            }
            output.add(lookup(lineno, rhs[t + 1]), c);
        }

        auto& pending = maps_[k];
        if (pending.entries.empty()) pending.line = lineno;
        if (auto [it, fresh] = pending.seen.emplace(input, lineno); !fresh) {
            throw ParseError(lineno, "duplicate map entry for word '" + format_word(*space_, input) +
                                         "' (first given on line " + std::to_string(it->second) + ")");
        }
        // Homogeneity is checked here so the error carries this line.
        MultiMap probe(space_, k, structure_map_degree(k), Grading::plain);
        try {
            probe.set(input, output);
        } catch (const InputError&) {
            throw ParseError(lineno, "inhomogeneous entry: " + format_word(*space_, input) + " -> " +
                                         format_vector(*space_, output) + " does not have degree " +
                                         std::to_string(structure_map_degree(k)) + " (cochain)");
        }
        pending.entries.emplace_back(std::move(input), std::move(output));
    }

    AStructure finish() {
        if (!space_) {
            if (basis_.empty()) throw ParseError(0, "no basis lines");
            space_ = make_space(basis_, *convention_);
        }
        std::vector<MultiMap> maps;
        for (auto& [k, pending] : maps_) {
            MultiMap m(space_, k, structure_map_degree(k), Grading::plain);
            for (auto& [input, output] : pending.entries) m.set(std::move(input), std::move(output));
            maps.push_back(std::move(m));
        }
        return AStructure::finite(space_, std::move(maps), name_);
    }

    std::string name_;
    bool header_ = false;
    std::optional<Convention> convention_;
    std::vector<BasisElement> basis_;
    SpacePtr space_;
    std::map<std::size_t, PendingMap> maps_;
};

}  // namespace

AStructure parse_structure(std::string_view text, std::string name) {
    try {
        return Parser(std::move(name)).run(text);
    } catch (const ParseError&) {
        throw;
    } catch (const InputError& e) {
        throw ParseError(0, e.what());
    }
}

AStructure load_structure_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, "cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_structure(buf.str(), path.string());
}

std::string serialize_structure(const AStructure& s) {
    if (!s.is_finite()) throw InputError("serialize_structure: generated structures have no finite form");
    if (s.primed()) throw InputError("serialize_structure: primed structures are not serializable");
    const GradedSpace& space = *s.space();
    const bool chain = space.convention() == Convention::chain;

    std::ostringstream os;
    os << "ainfty v1\n";
    os << "convention " << to_string(space.convention()) << "\n";
    for (const auto& e : space.elements()) os << "basis " << e.name << " " << (chain ? -e.degree : e.degree) << "\n";
    for (const auto& [k, m] : s.finite_maps()) {
        for (const auto& [input, output] : m.table()) {
            os << "map " << k << ":";
            for (BasisIndex i : input) os << " " << space.name(i);
            os << " ->";
            bool first = true;
            for (const auto& [b, c] : output) {
                os << (first ? " " : " + ") << c.to_string() << " " << space.name(b);
                first = false;
            }
            os << "\n";
        }
    }
    return os.str();
}

}  // namespace ainfty
