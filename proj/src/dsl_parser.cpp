#include "parbelos/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "parbelos/error.hpp"

namespace parbelos::dsl {

namespace {

enum class ArgKind { Name, Number, NumberOrName, Side };

struct Signature {
    std::string_view name;
    std::vector<ArgKind> params;
};

const std::vector<Signature>& constructors() {
    using enum ArgKind;
    static const std::vector<Signature> table{
        {"point", {NumberOrName, NumberOrName}},
        {"rational", {Number}},
        {"line", {Name, Name}},
        {"circle3", {Name, Name, Name}},
        {"circle2", {Name, Name, NumberOrName}},
        {"parabola_latus", {Name, Name, Side}},
        {"tangent_at", {Name, Name}},
        {"pedal", {Name, Name}},
        {"perp", {Name, Name}},
        {"intersect", {Name, Name}},
        {"second_intersect", {Name, Name, Name}},
        {"parbelos", {Name, Name, Name, Side}},
        {"midpoint", {Name, Name}},
        {"dist2", {Name, Name}},
    };
    return table;
}

const std::vector<Signature>& predicates() {
    using enum ArgKind;
    static const std::vector<Signature> table{
        {"collinear", {Name, Name, Name}},
        {"concyclic", {Name, Name}},
        {"concyclic", {Name, Name, Name, Name}},
        {"on_parabola", {Name, Name}},
        {"tangent", {Name, Name}},
        {"equidistant", {Name, Name, Name}},
        {"perpendicular", {Name, Name}},
        {"eq", {NumberOrName, NumberOrName}},
    };
    return table;
}

bool is_reserved(std::string_view word) {
    return word == "let" || word == "assert" || word == "left" || word == "right";
}

bool accepts(ArgKind kind, const Arg& arg) {
    switch (kind) {
        case ArgKind::Name: return std::holds_alternative<NameRef>(arg.value);
        case ArgKind::Number: return std::holds_alternative<Rational>(arg.value);
        case ArgKind::NumberOrName:
            return std::holds_alternative<Rational>(arg.value) ||
                   std::holds_alternative<NameRef>(arg.value);
        case ArgKind::Side: return std::holds_alternative<parbelos::Side>(arg.value);
    }
    return false;
}

std::string describe(const Signature& sig) {
    std::string out(sig.name);
    out += '(';
    for (size_t i = 0; i < sig.params.size(); ++i) {
        if (i) out += ", ";
        switch (sig.params[i]) {
            case ArgKind::Name: out += "name"; break;
            case ArgKind::Number: out += "number"; break;
            case ArgKind::NumberOrName: out += "number|name"; break;
            case ArgKind::Side: out += "left|right"; break;
        }
    }
    return out + ')';
}

// Tokens of a single line.
struct Token {
    enum Type { Ident, Number, Punct, End } type;
    std::string text;
    int column;
};

class LineLexer {
public:
    LineLexer(std::string_view line, int line_no) : line_(line), line_no_(line_no) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        size_t i = 0;
        while (i < line_.size()) {
            const char c = line_[i];
            if (c == '#') break;
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
                continue;
            }
            const int column = static_cast<int>(i) + 1;
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                size_t j = i;
                while (j < line_.size() && (std::isalnum(static_cast<unsigned char>(line_[j])) ||
                                            line_[j] == '_' || line_[j] == '.')) {
                    ++j;
                }
                out.push_back({Token::Ident, std::string(line_.substr(i, j - i)), column});
                i = j;
            } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+') {
                size_t j = i + 1;
                while (j < line_.size() &&
                       (std::isdigit(static_cast<unsigned char>(line_[j])) || line_[j] == '/')) {
                    ++j;
                }
                out.push_back({Token::Number, std::string(line_.substr(i, j - i)), column});
                i = j;
            } else if (c == '(' || c == ')' || c == ',' || c == '=') {
                out.push_back({Token::Punct, std::string(1, c), column});
                ++i;
            } else {
                throw ParseError(ParseErrorKind::Syntax, {line_no_, column},
                                 std::string("unexpected character '") + c + "'");
            }
        }
        out.push_back({Token::End, "", static_cast<int>(line_.size()) + 1});
        return out;
    }

private:
    std::string_view line_;
    int line_no_;
};

class Parser {
public:
    Parser(std::vector<Token> tokens, int line_no,
           std::map<std::string, std::string, std::less<>>& names)
        : tokens_(std::move(tokens)), line_no_(line_no), names_(names) {}

    Statement statement() {
        const Token& head = peek();
        const SourcePos pos{line_no_, head.column};
        if (head.type == Token::Ident && head.text == "let") {
            advance();
            return {let_body(), pos};
        }
        if (head.type == Token::Ident && head.text == "assert") {
            advance();
            return {assert_body(), pos};
        }
        fail(head, "expected 'let' or 'assert'");
    }

private:
    Let let_body() {
        const Token& name_tok = expect_ident("binding name");
        const std::string name = name_tok.text;
        if (name.find('.') != std::string::npos || is_reserved(name)) {
            fail(name_tok, "'" + name + "' cannot be bound");
        }
        expect_punct("=");
        const Token& ctor_tok = expect_ident("constructor");
        std::vector<Arg> args = arg_list();
        end_of_line();

        const Signature& sig =
            match(constructors(), ctor_tok, args, ParseErrorKind::UnknownConstructor, "constructor");
        resolve(args);
        if (names_.contains(name)) {
            throw ParseError(ParseErrorKind::DuplicateName, {line_no_, name_tok.column},
                             "name '" + name + "' is already bound");
        }
        names_.emplace(name, std::string(sig.name));
        return {name, ctor_tok.text, std::move(args)};
    }

    Assert assert_body() {
        const Token& pred_tok = expect_ident("predicate");
        std::vector<Arg> args = arg_list();
        end_of_line();
        match(predicates(), pred_tok, args, ParseErrorKind::UnknownPredicate, "predicate");
        resolve(args);
        return {pred_tok.text, std::move(args)};
    }

    std::vector<Arg> arg_list() {
        expect_punct("(");
        std::vector<Arg> args;
        if (peek().type == Token::Punct && peek().text == ")") {
            advance();
            return args;
        }
        for (;;) {
            args.push_back(arg());
            const Token& sep = advance();
            if (sep.type == Token::Punct && sep.text == ")") break;
            if (sep.type != Token::Punct || sep.text != ",") fail(sep, "expected ',' or ')'");
        }
        return args;
    }

    Arg arg() {
        const Token& tok = advance();
        const SourcePos pos{line_no_, tok.column};
        if (tok.type == Token::Number) {
            try {
                return {Rational::parse(tok.text), pos};
            } catch (const GeometryError&) {
                fail(tok, "malformed number '" + tok.text + "'");
            }
        }
        if (tok.type == Token::Ident) {
            if (tok.text == "left") return {parbelos::Side::Left, pos};
            if (tok.text == "right") return {parbelos::Side::Right, pos};
            const auto dot = tok.text.find('.');
            NameRef ref;
            ref.name = tok.text.substr(0, dot);
            if (dot != std::string::npos) {
                ref.field = tok.text.substr(dot + 1);
                if (ref.name.empty() || ref.field.empty() ||
                    ref.field.find('.') != std::string::npos) {
                    fail(tok, "malformed name '" + tok.text + "'");
                }
            }
            return {std::move(ref), pos};
        }
        fail(tok, "expected an argument");
    }

    const Signature& match(const std::vector<Signature>& table, const Token& tok,
                           const std::vector<Arg>& args, ParseErrorKind unknown,
                           std::string_view what) {
        const Signature* first = nullptr;
        for (const Signature& sig : table) {
            if (sig.name != tok.text) continue;
            if (!first) first = &sig;
            if (sig.params.size() != args.size()) continue;
            bool ok = true;
            for (size_t i = 0; i < args.size(); ++i) ok = ok && accepts(sig.params[i], args[i]);
            if (ok) return sig;
        }
        if (!first) {
            throw ParseError(unknown, {line_no_, tok.column},
                             "unknown " + std::string(what) + " '" + tok.text + "'");
        }
        std::string expected;
        for (const Signature& sig : table) {
            if (sig.name != tok.text) continue;
            if (!expected.empty()) expected += " or ";
            expected += describe(sig);
        }
        fail(tok, "bad arguments, expected " + expected);
    }

    void resolve(const std::vector<Arg>& args) {
        for (const Arg& arg : args) {
            const auto* ref = std::get_if<NameRef>(&arg.value);
            if (!ref) continue;
            const auto it = names_.find(ref->name);
            if (it == names_.end()) {
                throw ParseError(ParseErrorKind::UnboundName, arg.pos,
                                 "name '" + ref->name + "' is not bound");
            }
            if (ref->field.empty()) continue;
            const auto& fields = figure_field_names();
            const bool known = it->second == "parbelos" && ref->field != "square_R" &&
                               std::find(fields.begin(), fields.end(), ref->field) != fields.end();
            if (!known) {
                throw ParseError(ParseErrorKind::UnboundName, arg.pos,
                                 "name '" + ref->text() + "' is not bound");
            }
        }
    }

    const Token& peek() const { return tokens_[pos_]; }
    const Token& advance() {
        const Token& t = tokens_[pos_];
        if (t.type != Token::End) ++pos_;
        return t;
    }

    const Token& expect_ident(std::string_view what) {
        const Token& t = advance();
        if (t.type != Token::Ident) fail(t, "expected " + std::string(what));
        return t;
    }

    void expect_punct(std::string_view p) {
        const Token& t = advance();
        if (t.type != Token::Punct || t.text != p) fail(t, "expected '" + std::string(p) + "'");
    }

    void end_of_line() {
        if (peek().type != Token::End) fail(peek(), "unexpected '" + peek().text + "'");
    }

    [[noreturn]] void fail(const Token& t, const std::string& message) const {
        throw ParseError(ParseErrorKind::Syntax, {line_no_, t.column}, message);
    }

    std::vector<Token> tokens_;
    size_t pos_ = 0;
    int line_no_;
    std::map<std::string, std::string, std::less<>>& names_;
};

}  // namespace

std::string_view kind_name(ParseErrorKind kind) noexcept {
    switch (kind) {
        case ParseErrorKind::Syntax: return "SyntaxError";
        case ParseErrorKind::UnknownConstructor: return "UnknownConstructor";
        case ParseErrorKind::UnknownPredicate: return "UnknownPredicate";
        case ParseErrorKind::DuplicateName: return "DuplicateName";
        case ParseErrorKind::UnboundName: return "UnboundName";
    }
    return "Unknown";
}

ParseError::ParseError(ParseErrorKind kind, SourcePos pos, const std::string& message)
    : std::runtime_error("line " + std::to_string(pos.line) + ", column " +
                         std::to_string(pos.column) + ": " + std::string(kind_name(kind)) + ": " +
                         message),
      kind_(kind),
      pos_(pos),
      detail_(message) {}

std::string Arg::text() const {
    if (const auto* r = std::get_if<Rational>(&value)) return r->str();
    if (const auto* n = std::get_if<NameRef>(&value)) return n->text();
    return std::string(side_name(std::get<parbelos::Side>(value)));
}

Program parse_script(std::string_view text) {
    Program program;
    std::map<std::string, std::string, std::less<>> names;
    int line_no = 0;
    size_t start = 0;
    while (start <= text.size()) {
        const size_t end = std::min(text.find('\n', start), text.size());
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        ++line_no;
        std::vector<Token> tokens = LineLexer(line, line_no).run();
        if (tokens.front().type != Token::End) {
            program.statements.push_back(Parser(std::move(tokens), line_no, names).statement());
        }
        if (end == text.size()) break;
        start = end + 1;
    }
    return program;
}

std::string statement_text(const Statement& statement) {
    std::ostringstream out;
    const auto args_text = [&](const std::vector<Arg>& args) {
        out << '(';
        for (size_t i = 0; i < args.size(); ++i) out << (i ? ", " : "") << args[i].text();
        out << ')';
    };
    if (const auto* let = std::get_if<Let>(&statement.body)) {
        out << "let " << let->name << " = " << let->ctor;
        args_text(let->args);
    } else {
        const auto& a = std::get<Assert>(statement.body);
        out << "assert " << a.pred;
        args_text(a.args);
    }
    return out.str();
}

std::string to_text(const Program& program) {
    std::string out;
    for (const Statement& s : program.statements) out += statement_text(s) + "\n";
    return out;
}

}  // namespace parbelos::dsl
