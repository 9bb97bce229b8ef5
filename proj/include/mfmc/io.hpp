#pragma once

#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "clutter.hpp"

namespace mfmc {

class ParseError : public InvalidInputError {
  public:
    ParseError(std::size_t line, const std::string &what)
        : InvalidInputError("line " + std::to_string(line) + ": " + what),
          line_(line) {}
    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

class UnsupportedModeError : public ParseError {
  public:
    using ParseError::ParseError;
};

class DimensionMismatchError : public ParseError {
  public:
    using ParseError::ParseError;
};

enum class InputMode { Rees };
enum class SourceFormat { Normaliz, Native };

struct InputDocument {
    ExponentMatrix matrix;
    InputMode mode = InputMode::Rees;
    SourceFormat source_format = SourceFormat::Normaliz;
    std::vector<std::string> labels; // one per variable

    bool is_clutter() const { return matrix.is_zero_one(); }
    Clutter clutter() const { return validate(matrix.columns(), labels); }
};

/// Orders labels lexicographically, comparing embedded digit runs by value so
/// that x2 precedes x10.
inline bool natural_less(std::string_view a, std::string_view b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (std::isdigit(static_cast<unsigned char>(a[i])) &&
            std::isdigit(static_cast<unsigned char>(b[j]))) {
            std::size_t ie = i, je = j;
            while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie])))
                ++ie;
            while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je])))
                ++je;
            auto da = a.substr(i, ie - i), db = b.substr(j, je - j);
            while (da.size() > 1 && da[0] == '0')
                da.remove_prefix(1);
            while (db.size() > 1 && db[0] == '0')
                db.remove_prefix(1);
            if (da.size() != db.size())
                return da.size() < db.size();
            if (da != db)
                return da < db;
            i = ie;
            j = je;
        } else {
            if (a[i] != b[j])
                return a[i] < b[j];
            ++i;
            ++j;
        }
    }
    return a.size() - i < b.size() - j;
}

namespace detail {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

inline std::vector<Line> tokenize_lines(const std::string &text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        std::istringstream ls(raw);
        Line line{number, {}};
        for (std::string tok; ls >> tok;)
            line.tokens.push_back(tok);
        if (!line.tokens.empty())
            lines.push_back(std::move(line));
    }
    return lines;
}

inline bool is_integer(const std::string &s) {
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

inline Int to_int(const std::string &s, std::size_t line) {
    if (!is_integer(s))
        throw ParseError(line, "expected an integer, found '" + s + "'");
    try {
        return std::stoll(s);
    } catch (const std::out_of_range &) {
        throw ParseError(line, "integer out of range: " + s);
    }
}

inline Int single_int(const Line &l, const char *what) {
    if (l.tokens.size() != 1)
        throw ParseError(l.number, std::string("expected a single integer (") +
                                       what + ")");
    return to_int(l.tokens[0], l.number);
}

inline InputDocument parse_normaliz(const std::vector<Line> &lines) {
    const std::size_t last = lines.back().number;
    std::size_t at = 0;
    auto next = [&](const char *what) -> const Line & {
        if (at == lines.size())
            throw ParseError(last, std::string("unexpected end of input, "
                                               "expected ") + what);
        return lines[at++];
    };
    const Line &qline = next("generator count");
    const Int q = single_int(qline, "generator count");
    if (q <= 0)
        throw ParseError(qline.number, "generator count must be positive");
    const Line &nline = next("ambient dimension");
    const Int n = single_int(nline, "ambient dimension");
    if (n <= 0)
        throw ParseError(nline.number, "ambient dimension must be positive");

    std::vector<IntVector> rows;
    for (Int j = 0; j < q; ++j) {
        const Line &row = next("a matrix row");
        if (row.tokens.size() != static_cast<std::size_t>(n))
            throw DimensionMismatchError(
                row.number, "row has " + std::to_string(row.tokens.size()) +
                                " entries, header declares " +
                                std::to_string(n));
        IntVector r;
        for (const auto &t : row.tokens) {
            Int x = to_int(t, row.number);
            if (x < 0)
                throw ParseError(row.number, "negative exponent");
            r.push_back(x);
        }
        rows.push_back(std::move(r));
    }
    const Line &mode = next("the mode digit");
    const Int digit = single_int(mode, "mode");
    if (digit != 3)
        throw UnsupportedModeError(mode.number,
                                   "mode " + std::to_string(digit) +
                                       " is not supported (only legacy mode 3, "
                                       "Rees algebra)");
    if (at != lines.size())
        throw ParseError(lines[at].number, "trailing input after mode digit");

    InputDocument doc;
    doc.matrix = ExponentMatrix::from_rows(rows);
    doc.mode = InputMode::Rees;
    doc.source_format = SourceFormat::Normaliz;
    doc.labels = default_labels(static_cast<std::size_t>(n));
    return doc;
}

inline InputDocument parse_native(const std::string &text) {
    // Statements are separated by ';' or newlines.
    struct Statement {
        std::size_t line;
        std::vector<std::string> tokens;
    };
    std::vector<Statement> statements;
    std::size_t line = 1;
    Statement cur{1, {}};
    std::string tok;
    bool comment = false;
    auto flush_token = [&] {
        if (!tok.empty()) {
            if (cur.tokens.empty())
                cur.line = line;
            cur.tokens.push_back(tok);
            tok.clear();
        }
    };
    auto flush_statement = [&] {
        flush_token();
        if (!cur.tokens.empty())
            statements.push_back(cur);
        cur = Statement{line, {}};
    };
    for (char ch : text) {
        if (ch == '\n') {
            flush_statement();
            comment = false;
            ++line;
            continue;
        }
        if (comment)
            continue;
        if (ch == '#') {
            comment = true;
        } else if (ch == ';') {
            flush_statement();
        } else if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
            flush_token();
        } else {
            tok.push_back(ch);
        }
    }
    flush_statement();

    std::set<std::string> names;
    std::vector<std::pair<std::size_t, std::vector<std::string>>> edges;
    for (const auto &s : statements) {
        const auto &kw = s.tokens[0];
        std::vector<std::string> args(s.tokens.begin() + 1, s.tokens.end());
        if (kw == "edge") {
            if (args.empty())
                throw ParseError(s.line, "edge without vertices");
            names.insert(args.begin(), args.end());
            edges.emplace_back(s.line, std::move(args));
        } else if (kw == "vertices" || kw == "vertex") {
            names.insert(args.begin(), args.end());
        } else {
            throw ParseError(s.line, "unknown statement '" + kw +
                                         "' (expected 'edge' or 'vertices')");
        }
    }
    if (edges.empty())
        throw ParseError(line, "no edges given");

    std::vector<std::string> labels(names.begin(), names.end());
    std::sort(labels.begin(), labels.end(), natural_less);
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < labels.size(); ++i)
        index[labels[i]] = i;
    std::vector<IntVector> rows;
    for (const auto &[ln, members] : edges) {
        IntVector r(labels.size(), 0);
        for (const auto &name : members)
            r[index[name]] = 1;
        rows.push_back(std::move(r));
    }
    InputDocument doc;
    doc.labels = labels;
    doc.matrix = validate(rows, labels).matrix();
    doc.mode = InputMode::Rees;
    doc.source_format = SourceFormat::Native;
    return doc;
}

} // namespace detail

/// Reads either the legacy Normaliz block (generator count, dimension, one
/// generator per line, mode digit 3) or the native edge-list format
/// (`edge x1 x2; edge x2 x3; ...`). The format is chosen by the first token.
inline InputDocument parse_input(const std::string &text) {
    const auto lines = detail::tokenize_lines(text);
    if (lines.empty())
        throw ParseError(1, "empty input");
    if (detail::is_integer(lines.front().tokens.front()))
        return detail::parse_normaliz(lines);
    return detail::parse_native(text);
}

} // namespace mfmc
