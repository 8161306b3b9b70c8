#include "dessin/parse.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "dessin/error.hpp"

namespace dessin {

namespace {

struct Line {
    int number;
    std::string text; // comment stripped, original columns preserved
};

std::vector<Line> split_lines(const std::string& text) {
    std::vector<Line> lines;
    std::string current;
    int number = 1;
    for (char c : text + "\n") {
        if (c == '\n') {
            const auto hash = current.find('#');
            if (hash != std::string::npos) current.resize(hash);
            lines.push_back({number, current});
            current.clear();
            ++number;
        } else {
            current.push_back(c);
        }
    }
    return lines;
}

bool blank(const std::string& s) {
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

// splits "key = value" and reports the key; value keeps original columns
bool split_key(const Line& line, std::string& key, std::string& value, int& value_column) {
    size_t i = 0;
    while (i < line.text.size() && std::isspace(static_cast<unsigned char>(line.text[i]))) ++i;
    size_t start = i;
    while (i < line.text.size() &&
           (std::isalnum(static_cast<unsigned char>(line.text[i])) || line.text[i] == '_'))
        ++i;
    key = line.text.substr(start, i - start);
    while (i < line.text.size() && std::isspace(static_cast<unsigned char>(line.text[i]))) ++i;
    if (i >= line.text.size() || line.text[i] != '=') return false;
    ++i;
    value = i < line.text.size() ? line.text.substr(i) : "";
    value_column = static_cast<int>(i) + 1;
    return true;
}

std::string trim(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

// `( i1 i2 ... ik )` groups; validates ranges and disjointness with positions
Permutation parse_cycles(const std::string& value, int value_column, int line_number, int n) {
    std::vector<std::vector<int>> cycles;
    std::vector<char> seen(n + 1, 0);
    size_t i = 0;
    auto column = [&](size_t pos) { return value_column + static_cast<int>(pos); };
    while (i < value.size()) {
        const char c = value[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c != '(')
            throw ParseError(std::string("syntax error: expected '(' but found '") + c + "'",
                             line_number, column(i));
        ++i;
        std::vector<int> cycle;
        while (true) {
            while (i < value.size() && std::isspace(static_cast<unsigned char>(value[i]))) ++i;
            if (i >= value.size())
                throw ParseError("syntax error: unclosed cycle", line_number, column(i));
            if (value[i] == ')') {
                ++i;
                break;
            }
            if (!std::isdigit(static_cast<unsigned char>(value[i])))
                throw ParseError(std::string("syntax error: expected a label but found '") +
                                     value[i] + "'",
                                 line_number, column(i));
            const size_t start = i;
            long label = 0;
            while (i < value.size() && std::isdigit(static_cast<unsigned char>(value[i]))) {
                label = label * 10 + (value[i] - '0');
                if (label > 1000000) break;
                ++i;
            }
            if (label < 1 || label > n)
                throw ParseError("label out of range: " + value.substr(start, i - start),
                                 line_number, column(start));
            if (seen[label])
                throw ParseError("repeated label: " + std::to_string(label), line_number,
                                 column(start));
            seen[label] = 1;
            cycle.push_back(static_cast<int>(label));
        }
        if (cycle.empty())
            throw ParseError("syntax error: empty cycle", line_number, column(i - 1));
        cycles.push_back(std::move(cycle));
    }
    return Permutation::from_cycles(n, cycles);
}

} // namespace

DessinDocument parse_document(const std::string& text) {
    DessinDocument doc;
    bool have_n = false, have_sigma = false, have_alpha = false;
    int last_line = 1;
    for (const auto& line : split_lines(text)) {
        last_line = line.number;
        if (blank(line.text)) continue;
        std::string key, value;
        int value_column = 1;
        if (!split_key(line, key, value, value_column))
            throw ParseError("syntax error: expected '<key> = <value>'", line.number, 1);
        if (!have_n) {
            if (key != "n")
                throw ParseError("syntax error: the first line must be 'n = <int>'", line.number, 1);
            const std::string t = trim(value);
            try {
                size_t used = 0;
                doc.n = std::stoi(t, &used);
                if (used != t.size() || doc.n < 1) throw std::invalid_argument("");
            } catch (...) {
                throw ParseError("syntax error: invalid half-edge count '" + t + "'", line.number,
                                 value_column);
            }
            have_n = true;
        } else if (key == "sigma") {
            if (have_sigma) throw ParseError("duplicate sigma line", line.number, 1);
            doc.sigma_text = value;
            have_sigma = true;
        } else if (key == "alpha") {
            if (have_alpha) throw ParseError("duplicate alpha line", line.number, 1);
            doc.alpha_text = value;
            have_alpha = true;
        } else if (key == "name") {
            doc.name = trim(value);
        } else {
            throw ParseError("syntax error: unknown key '" + key + "'", line.number, 1);
        }
    }
    if (!have_n) throw ParseError("syntax error: missing 'n = <int>' line", last_line, 1);
    if (!have_sigma) throw ParseError("syntax error: missing 'sigma = <cycles>' line", last_line, 1);
    if (!have_alpha) throw ParseError("syntax error: missing 'alpha = <cycles>' line", last_line, 1);
    return doc;
}

Dessin parse_dessin(const std::string& text) {
    const DessinDocument doc = parse_document(text);
    // re-scan with positions; document lines were recorded verbatim
    int sigma_line = 0, alpha_line = 0, sigma_col = 1, alpha_col = 1;
    for (const auto& line : split_lines(text)) {
        std::string key, value;
        int value_column = 1;
        if (blank(line.text) || !split_key(line, key, value, value_column)) continue;
        if (key == "sigma") {
            sigma_line = line.number;
            sigma_col = value_column;
        } else if (key == "alpha") {
            alpha_line = line.number;
            alpha_col = value_column;
        }
    }
    const Permutation sigma = parse_cycles(doc.sigma_text, sigma_col, sigma_line, doc.n);
    const Permutation alpha = parse_cycles(doc.alpha_text, alpha_col, alpha_line, doc.n);
    return Dessin(sigma, alpha);
}

std::string print_dessin(const Dessin& d, const std::optional<std::string>& name) {
    auto cycles_text = [](const Permutation& p) {
        std::ostringstream os;
        for (const auto& c : p.cycles()) {
            if (c.size() < 2) continue;
            os << '(';
            for (size_t i = 0; i < c.size(); ++i) {
                if (i) os << ' ';
                os << c[i];
            }
            os << ')';
        }
        return os.str();
    };
    std::ostringstream os;
    os << "n = " << d.size() << '\n';
    if (name) os << "name = " << *name << '\n';
    const std::string s = cycles_text(d.sigma()), a = cycles_text(d.alpha());
    os << "sigma =" << (s.empty() ? "" : " ") << s << '\n';
    os << "alpha =" << (a.empty() ? "" : " ") << a << '\n';
    return os.str();
}

} // namespace dessin
