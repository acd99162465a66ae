#include <charconv>
#include <fstream>
#include <sstream>

#include "gstx/cli.hpp"
#include "gstx/expr.hpp"

namespace gstx::cli {

namespace {

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r";
    const std::size_t b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

struct Token {
    std::string text;
    bool quoted = false;
};

// Splits "[a, "b, c", d]" (or a bare value) into its items.
std::vector<Token> split_list(std::string_view v, int line) {
    v = trim(v);
    if (v.empty()) throw GridError("missing value", line);
    const bool bracketed = v.front() == '[';
    if (bracketed) {
        if (v.back() != ']') throw GridError("unterminated list", line);
        v = trim(v.substr(1, v.size() - 2));
        if (v.empty()) return {};
    }
    std::vector<Token> items;
    std::size_t i = 0;
    for (;;) {
        while (i < v.size() && (v[i] == ' ' || v[i] == '\t')) ++i;
        Token t;
        if (i < v.size() && v[i] == '"') {
            const std::size_t close = v.find('"', i + 1);
            if (close == std::string_view::npos) throw GridError("unterminated string", line);
            t.text = std::string(v.substr(i + 1, close - i - 1));
            t.quoted = true;
            i = close + 1;
            while (i < v.size() && (v[i] == ' ' || v[i] == '\t')) ++i;
        } else {
            const std::size_t comma = v.find(',', i);
            const std::size_t end = comma == std::string_view::npos ? v.size() : comma;
            t.text = std::string(trim(v.substr(i, end - i)));
            if (t.text.empty()) throw GridError("empty list item", line);
            i = end;
        }
        items.push_back(std::move(t));
        if (i >= v.size()) break;
        if (v[i] != ',') throw GridError("expected ',' between list items", line);
        ++i;
        if (!bracketed) throw GridError("multiple values need [ ]", line);
    }
    return items;
}

double to_number(const Token& t, int line) {
    if (t.quoted) throw GridError("expected a number, got a string", line);
    double x = 0.0;
    const char* b = t.text.data();
    const char* e = b + t.text.size();
    const auto [p, ec] = std::from_chars(b, e, x);
    if (ec != std::errc() || p != e) throw GridError("invalid number '" + t.text + "'", line);
    return x;
}

std::vector<std::string> to_functions(const std::vector<Token>& items, int line) {
    std::vector<std::string> out;
    for (const Token& t : items) {
        try {
            expr::parse(t.text);
        } catch (const SyntaxError& e) {
            throw GridError("function \"" + t.text + "\": " + e.what(), line);
        }
        out.push_back(t.text);
    }
    return out;
}

bool is_param(std::string_view key) {
    if (key == "y") return true;
    for (const std::string& n : transforms::param_names())
        if (n == key) return true;
    return false;
}

template <class T>
void put(std::vector<std::pair<std::string, T>>& list, const std::string& key, T value) {
    for (auto& [k, v] : list) {
        if (k == key) {
            v = std::move(value);
            return;
        }
    }
    list.emplace_back(key, std::move(value));
}

}  // namespace

identities::GridSpec parse_grid(std::string_view text) {
    identities::GridSpec grid;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        const std::size_t end = nl == std::string_view::npos ? text.size() : nl;
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        // Strip a trailing comment outside quotes.
        bool in_str = false;
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (line[i] == '"') in_str = !in_str;
            if (line[i] == '#' && !in_str) {
                line = line.substr(0, i);
                break;
            }
        }
        line = trim(line);
        if (line.empty()) continue;

        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) throw GridError("expected 'key = value'", line_no);
        const std::string key(trim(line.substr(0, eq)));
        const std::vector<Token> items = split_list(line.substr(eq + 1), line_no);

        if (key == "identities") {
            std::vector<std::string> ids;
            for (const Token& t : items) {
                if (identities::find_identity(t.text) == nullptr)
                    throw GridError("unknown identity '" + t.text + "'", line_no);
                ids.push_back(t.text);
            }
            grid.identities = std::move(ids);
            continue;
        }
        if (key == "f" || key == "g") {
            (key == "f" ? grid.f : grid.g) = to_functions(items, line_no);
            continue;
        }

        const std::size_t dot = key.find('.');
        if (dot != std::string::npos) {
            const std::string head = key.substr(0, dot);
            const std::string tail = key.substr(dot + 1);
            if (head == "tol") {
                if (identities::find_identity(tail) == nullptr)
                    throw GridError("unknown identity '" + tail + "'", line_no);
                if (items.size() != 1) throw GridError("tolerance takes one value", line_no);
                const double t = to_number(items[0], line_no);
                if (!(t > 0.0)) throw GridError("tolerance must be > 0", line_no);
                put(grid.tol, tail, t);
                continue;
            }
            if (identities::find_identity(head) == nullptr)
                throw GridError("unknown identity '" + head + "'", line_no);
            if (tail == "f" || tail == "g") {
                put(grid.fn_overrides, key, to_functions(items, line_no));
                continue;
            }
            if (tail == "tol") {
                if (items.size() != 1) throw GridError("tolerance takes one value", line_no);
                const double t = to_number(items[0], line_no);
                if (!(t > 0.0)) throw GridError("tolerance must be > 0", line_no);
                put(grid.tol, head, t);
                continue;
            }
            if (!is_param(tail)) throw GridError("unknown parameter '" + tail + "'", line_no);
            if (items.empty()) throw GridError("empty value list", line_no);
            std::vector<double> v;
            for (const Token& t : items) v.push_back(to_number(t, line_no));
            put(grid.overrides, key, std::move(v));
            continue;
        }

        if (!is_param(key)) throw GridError("unknown key '" + key + "'", line_no);
        if (items.empty()) throw GridError("empty value list", line_no);
        std::vector<double> v;
        for (const Token& t : items) v.push_back(to_number(t, line_no));
        put(grid.values, key, std::move(v));
    }
    return grid;
}

identities::GridSpec load_grid(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GridError("cannot open '" + path + "'", 0);
    std::ostringstream os;
    os << in.rdbuf();
    return parse_grid(os.str());
}

}  // namespace gstx::cli
