#include "dwfs/parser.h"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

namespace dwfs {

ParseError::ParseError(SourceSpan at, const std::string& message)
    : Error(std::to_string(at.line) + ":" + std::to_string(at.column) + ": " + message)
    , span_(at)
    , detail_(message) {}

namespace {

enum class Tok { Ident, Not, Bar, If, Comma, Dot, End };

struct Token {
    Tok kind;
    std::string_view text;
    SourceSpan at;
};

const char* describe(Tok t) {
    switch (t) {
        case Tok::Ident: return "atom";
        case Tok::Not: return "'not'";
        case Tok::Bar: return "'|'";
        case Tok::If: return "':-'";
        case Tok::Comma: return "','";
        case Tok::Dot: return "'.'";
        case Tok::End: return "end of input";
    }
    return "?";
}

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_blank();
        SourceSpan at{line_, col_};
        if (pos_ >= text_.size()) {
            return {Tok::End, {}, at};
        }
        char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            auto start = pos_;
            while (pos_ < text_.size()
                   && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                advance();
            }
            auto word = text_.substr(start, pos_ - start);
            return {word == "not" ? Tok::Not : Tok::Ident, word, at};
        }
        switch (c) {
            case '|': advance(); return {Tok::Bar, "|", at};
            case ',': advance(); return {Tok::Comma, ",", at};
            case '.': advance(); return {Tok::Dot, ".", at};
            case ':':
                if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
                    advance();
                    advance();
                    return {Tok::If, ":-", at};
                }
                break;
            default: break;
        }
        throw ParseError(at, std::string("unexpected character '") + c + "'");
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        }
        else {
            ++col_;
        }
        ++pos_;
    }
    void skip_blank() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') {
                    advance();
                }
            }
            else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            }
            else {
                break;
            }
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lex_(text) { shift(); }

    Program run() {
        auto table = std::make_shared<AtomTable>();
        table_ = table.get();
        std::vector<Rule> rules;
        while (cur_.kind != Tok::End) {
            rules.push_back(rule());
        }
        return Program(std::move(table), std::move(rules));
    }

private:
    void shift() { cur_ = lex_.next(); }

    [[noreturn]] void fail(const std::string& what) {
        throw ParseError(cur_.at, what + ", found " + describe(cur_.kind));
    }

    Atom atom_here(const char* where) {
        if (cur_.kind == Tok::Not) {
            throw ParseError(cur_.at, std::string("'not' is not allowed in ") + where);
        }
        if (cur_.kind != Tok::Ident) {
            fail("expected atom");
        }
        auto a = table_->intern(cur_.text);
        shift();
        return a;
    }

    Rule rule() {
        Rule r;
        if (cur_.kind != Tok::Ident && cur_.kind != Tok::Not) {
            throw ParseError(cur_.at, std::string("empty rule head, found ") + describe(cur_.kind));
        }
        r.head.insert(atom_here("a rule head"));
        while (cur_.kind == Tok::Bar) {
            shift();
            r.head.insert(atom_here("a rule head"));
        }
        if (cur_.kind == Tok::If) {
            shift();
            literal(r);
            while (cur_.kind == Tok::Comma) {
                shift();
                literal(r);
            }
        }
        if (cur_.kind != Tok::Dot) {
            fail("expected '.'");
        }
        shift();
        return r;
    }

    void literal(Rule& r) {
        if (cur_.kind == Tok::Not) {
            shift();
            if (cur_.kind != Tok::Ident) {
                fail("expected atom after 'not'");
            }
            r.neg.insert(table_->intern(cur_.text));
            shift();
            return;
        }
        if (cur_.kind != Tok::Ident) {
            fail("expected body literal");
        }
        r.pos.insert(table_->intern(cur_.text));
        shift();
    }

    Lexer lex_;
    Token cur_{Tok::End, {}, {}};
    AtomTable* table_ = nullptr;
};

} // namespace

Program parse_program(std::string_view text) { return Parser(text).run(); }

namespace {
std::vector<std::string> names_of(const Program& p, const AtomSet& s) {
    std::vector<std::string> out;
    for (auto a : s) {
        out.push_back(p.name(a));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep, std::string_view prefix = "") {
    std::string out;
    for (const auto& x : parts) {
        if (!out.empty()) {
            out += sep;
        }
        out += prefix;
        out += x;
    }
    return out;
}
} // namespace

std::string render_disjunction(const Program& p, const AtomSet& d) { return join(names_of(p, d), " | "); }

std::string render_rule(const Program& p, const Rule& r) {
    std::string out = render_disjunction(p, r.head);
    if (!r.is_fact()) {
        out += " :- ";
        auto pos = join(names_of(p, r.pos), ", ");
        auto neg = join(names_of(p, r.neg), ", ", "not ");
        out += pos;
        out += !pos.empty() && !neg.empty() ? ", " : "";
        out += neg;
    }
    out += ".";
    return out;
}

std::string render_program(const Program& p) {
    std::vector<std::string> lines;
    for (const auto& r : p.rules()) {
        lines.push_back(render_rule(p, r));
    }
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const auto& l : lines) {
        out += l;
        out += '\n';
    }
    return out;
}

std::string render_state(const Program& p, const ModelState& s) {
    std::vector<std::vector<std::string>> pos;
    for (const auto& d : s.pos()) {
        pos.push_back(names_of(p, d));
    }
    std::sort(pos.begin(), pos.end());
    std::string out;
    for (const auto& d : pos) {
        out += join(d, " | ");
        out += '\n';
    }
    for (const auto& a : names_of(p, s.false_atoms())) {
        out += "not " + a + "\n";
    }
    return out;
}

} // namespace dwfs
