#include "omega/oaf.hh"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace omega {

namespace {

struct Token {
    std::string text;
    int column = 0;
};

struct Line {
    int number = 0;
    std::vector<Token> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            if (raw[i] == ' ' || raw[i] == '\t') {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t') ++j;
            line.tokens.push_back({raw.substr(i, j - i), static_cast<int>(i) + 1});
            i = j;
        }
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

[[noreturn]] void syntax(const Line& line, const Token& at, const std::string& message) {
    throw Error(ErrorKind::SyntaxError,
                "line " + std::to_string(line.number) + ", column " + std::to_string(at.column) + ": " + message,
                line.number, at.column);
}

[[noreturn]] void syntax_end(const Line& line, const std::string& message) {
    const Token& last = line.tokens.back();
    Token after{"", last.column + static_cast<int>(last.text.size())};
    syntax(line, after, message);
}

int number(const Line& line, const Token& t, const std::string& what) {
    int value = 0;
    auto [end, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || end != t.text.data() + t.text.size() || value < 0)
        syntax(line, t, "expected " + what + ", found '" + t.text + "'");
    return value;
}

class Parser {
public:
    explicit Parser(const std::string& text) : lines_(tokenize(text)) {}

    OafDocument run() {
        expect_header();
        std::vector<std::string> alphabet = read_alphabet();
        n_ = read_states();
        StateList initial = read_state_line("initial", doc_.initial_line);
        Acceptance acc = read_acceptance();
        std::vector<Transition> transitions;
        while (true) {
            const Line& line = next("'trans' or 'end'");
            const std::string& head = line.tokens[0].text;
            if (head == "end") {
                if (line.tokens.size() > 1) syntax(line, line.tokens[1], "unexpected text after 'end'");
                break;
            }
            if (head != "trans") syntax(line, line.tokens[0], "expected 'trans' or 'end', found '" + head + "'");
            if (line.tokens.size() != 4) {
                if (line.tokens.size() < 4) syntax_end(line, "'trans' needs a source, a symbol and a target");
                syntax(line, line.tokens[4], "unexpected text after transition");
            }
            State from = state(line, line.tokens[1]);
            auto sym = std::find(alphabet.begin(), alphabet.end(), line.tokens[2].text);
            if (sym == alphabet.end()) syntax(line, line.tokens[2], "unknown symbol '" + line.tokens[2].text + "'");
            State to = state(line, line.tokens[3]);
            transitions.push_back({from, static_cast<Symbol>(sym - alphabet.begin()), to});
        }
        if (pos_ < lines_.size()) syntax(lines_[pos_], lines_[pos_].tokens[0], "unexpected text after 'end'");

        doc_.automaton = Automaton(std::move(alphabet), n_, std::move(initial), std::move(transitions), std::move(acc));
        auto report = validate(doc_.automaton);
        if (!report.empty()) {
            const Violation& v = report.front();
            int at = doc_.acceptance_line;
            if (v.code == ViolationCode::EmptyInitial) at = doc_.initial_line;
            if (v.index >= 1 && v.index <= static_cast<int>(doc_.set_lines.size())) at = doc_.set_lines[v.index - 1];
            throw Error(ErrorKind::ValidationFailed,
                        "line " + std::to_string(at) + ": " + to_string(v.code) + ": " + v.message, at, 1);
        }
        return std::move(doc_);
    }

private:
    const Line& next(const std::string& expected) {
        if (pos_ >= lines_.size()) {
            const int after = lines_.empty() ? 1 : lines_.back().number + 1;
            throw Error(ErrorKind::SyntaxError,
                        "line " + std::to_string(after) + ", column 1: unexpected end of input, expected " + expected,
                        after, 1);
        }
        return lines_[pos_++];
    }

    const Line& keyword(const std::string& word) {
        const Line& line = next("'" + word + "'");
        if (line.tokens[0].text != word)
            syntax(line, line.tokens[0], "expected '" + word + "', found '" + line.tokens[0].text + "'");
        return line;
    }

    void expect_header() {
        const Line& line = keyword("oaf");
        if (line.tokens.size() < 2) syntax_end(line, "missing format version");
        if (line.tokens[1].text != "1") syntax(line, line.tokens[1], "unsupported version '" + line.tokens[1].text + "'");
        if (line.tokens.size() > 2) syntax(line, line.tokens[2], "unexpected text after version");
    }

    std::vector<std::string> read_alphabet() {
        const Line& line = keyword("alphabet");
        std::vector<std::string> out;
        for (std::size_t i = 1; i < line.tokens.size(); ++i) {
            const Token& t = line.tokens[i];
            if (std::find(out.begin(), out.end(), t.text) != out.end())
                syntax(line, t, "duplicate symbol '" + t.text + "'");
            out.push_back(t.text);
        }
        if (out.empty()) syntax_end(line, "alphabet needs at least one symbol");
        return out;
    }

    int read_states() {
        const Line& line = keyword("states");
        if (line.tokens.size() < 2) syntax_end(line, "missing state count");
        if (line.tokens.size() > 2) syntax(line, line.tokens[2], "unexpected text after state count");
        int n = number(line, line.tokens[1], "a state count");
        if (n < 1) syntax(line, line.tokens[1], "state count must be at least 1");
        return n;
    }

    State state(const Line& line, const Token& t) {
        int q = number(line, t, "a state");
        if (q >= n_) syntax(line, t, "state " + t.text + " out of range [0.." + std::to_string(n_ - 1) + "]");
        return q;
    }

    StateList states_from(const Line& line, std::size_t first) {
        StateList out;
        for (std::size_t i = first; i < line.tokens.size(); ++i) {
            State q = state(line, line.tokens[i]);
            if (contains(out, q)) syntax(line, line.tokens[i], "duplicate state " + line.tokens[i].text);
            out.insert(std::upper_bound(out.begin(), out.end(), q), q);
        }
        return out;
    }

    StateList read_state_line(const std::string& word, int& where) {
        const Line& line = keyword(word);
        where = line.number;
        return states_from(line, 1);
    }

    Acceptance read_acceptance() {
        const Line& line = keyword("acceptance");
        doc_.acceptance_line = line.number;
        if (line.tokens.size() < 2) syntax_end(line, "missing acceptance type");
        const Token& type = line.tokens[1];
        if (type.text == "buchi") {
            if (line.tokens.size() > 2) syntax(line, line.tokens[2], "unexpected text after 'buchi'");
            int where = 0;
            StateList final = read_state_line("final", where);
            doc_.set_lines = {where};
            return Acceptance::buchi(std::move(final));
        }
        const bool sets = type.text == "gbuchi";
        if (!sets && type.text != "streett" && type.text != "rabin" && type.text != "parity")
            syntax(line, type, "unknown acceptance type '" + type.text + "'");
        if (line.tokens.size() < 3) syntax_end(line, "missing acceptance size");
        if (line.tokens.size() > 3) syntax(line, line.tokens[3], "unexpected text after acceptance size");
        const int k = number(line, line.tokens[2], "an acceptance size");
        if (k < 1) syntax(line, line.tokens[2], "acceptance size must be at least 1");
        std::vector<StateList> g(k), b(k);
        std::vector<char> seen_g(k, 0), seen_b(k, 0);
        doc_.set_lines.assign(k, 0);
        const int declarations = sets ? k : 2 * k;
        for (int d = 0; d < declarations; ++d) {
            const std::string word = sets ? "set" : "pair";
            const Line& decl = keyword(word);
            if (decl.tokens.size() < 2) syntax_end(decl, "missing index");
            const int i = number(decl, decl.tokens[1], "an index");
            if (i < 1 || i > k) syntax(decl, decl.tokens[1], "index " + decl.tokens[1].text + " out of range [1.." +
                                                                 std::to_string(k) + "]");
            if (!doc_.set_lines[i - 1]) doc_.set_lines[i - 1] = decl.number;
            if (sets) {
                if (seen_b[i - 1]) syntax(decl, decl.tokens[1], "set " + decl.tokens[1].text + " declared twice");
                seen_b[i - 1] = 1;
                b[i - 1] = states_from(decl, 2);
                continue;
            }
            if (decl.tokens.size() < 3) syntax_end(decl, "expected 'G' or 'B'");
            const Token& side = decl.tokens[2];
            if (side.text != "G" && side.text != "B") syntax(decl, side, "expected 'G' or 'B', found '" + side.text + "'");
            auto& seen = side.text == "G" ? seen_g : seen_b;
            if (seen[i - 1]) syntax(decl, side, "pair " + decl.tokens[1].text + " " + side.text + " declared twice");
            seen[i - 1] = 1;
            (side.text == "G" ? g : b)[i - 1] = states_from(decl, 3);
        }
        if (sets) return Acceptance::gbuchi(std::move(b));
        if (type.text == "streett") return Acceptance::streett(std::move(g), std::move(b));
        if (type.text == "rabin") return Acceptance::rabin(std::move(g), std::move(b));
        return Acceptance::parity(std::move(g), std::move(b));
    }

    std::vector<Line> lines_;
    std::size_t pos_ = 0;
    int n_ = 0;
    OafDocument doc_;
};

std::string join_states(const std::string& head, const StateList& states) {
    std::string out = head;
    for (State q : states) out += " " + std::to_string(q);
    return out + "\n";
}

}  // namespace

OafDocument parse_oaf_document(const std::string& text) { return Parser(text).run(); }

Automaton parse_oaf(const std::string& text) { return parse_oaf_document(text).automaton; }

std::string serialize_oaf(const Automaton& a) {
    std::string out = "oaf 1\nalphabet";
    for (const std::string& s : a.alphabet()) out += " " + s;
    out += "\nstates " + std::to_string(a.state_count()) + "\n";
    out += join_states("initial", a.initial());
    const Acceptance& acc = a.acceptance();
    const int k = acc.size();
    switch (acc.type) {
    case AcceptanceType::buchi:
        out += "acceptance buchi\n";
        out += join_states("final", acc.final);
        break;
    case AcceptanceType::gbuchi:
        out += "acceptance gbuchi " + std::to_string(k) + "\n";
        for (int i = 1; i <= k; ++i) out += join_states("set " + std::to_string(i), acc.B(i));
        break;
    default:
        out += std::string("acceptance ") + to_string(acc.type) + " " + std::to_string(k) + "\n";
        for (int i = 1; i <= k; ++i) {
            out += join_states("pair " + std::to_string(i) + " G", acc.G(i));
            out += join_states("pair " + std::to_string(i) + " B", acc.B(i));
        }
        break;
    }
    for (const Transition& t : a.transitions())
        out += "trans " + std::to_string(t.from) + " " + a.alphabet()[t.symbol] + " " + std::to_string(t.to) + "\n";
    return out + "end\n";
}

}  // namespace omega
