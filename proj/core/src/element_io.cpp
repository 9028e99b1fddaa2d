#include "qcoh/element_io.hpp"

#include <bit>
#include <cctype>

namespace qcoh {

namespace {

std::string display_name(const std::string& name, const NameAliases& aliases) {
    auto it = aliases.find(name);
    return it == aliases.end() ? name : it->second;
}

std::string monomial_to_text(const AlgebraSignature& sig, const Monomial& m,
                             const NameAliases& aliases) {
    std::string out;
    for (int i = 0; i < sig.even_count(); ++i) {
        if (m.even[i] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += display_name(sig.even(i).name, aliases);
        if (m.even[i] > 1) {
            out += '^';
            out += std::to_string(m.even[i]);
        }
    }
    std::uint64_t odd = m.odd;
    while (odd) {
        int bit = std::countr_zero(odd);
        if (!out.empty())
            out += '*';
        out += display_name(sig.odd(bit).name, aliases);
        odd &= odd - 1;
    }
    return out;
}

} // namespace

std::string element_to_text(const Element& e, const NameAliases& aliases) {
    if (e.is_zero() || !e.signature())
        return "0";
    const auto& sig = *e.signature();
    std::string out;
    for (const auto& [m, c] : e.terms()) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (out.empty()) {
            if (c < 0)
                out += '-';
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string mono = monomial_to_text(sig, m, aliases);
        if (mono.empty()) {
            out += rational_to_string(mag);
        } else {
            if (mag != 1) {
                out += rational_to_string(mag);
                out += '*';
            }
            out += mono;
        }
    }
    return out;
}

namespace {

struct Token {
    enum Kind { Number, Name, Plus, Minus, Star, Caret, LParen, RParen, End } kind;
    std::string text;
};

class Lexer {
public:
    explicit Lexer(std::string_view input) : input_(input) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < input_.size() && std::isspace(static_cast<unsigned char>(input_[pos_])))
            ++pos_;
        if (pos_ >= input_.size()) {
            current_ = {Token::End, ""};
            return;
        }
        char c = input_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < input_.size() && std::isdigit(static_cast<unsigned char>(input_[pos_])))
                ++pos_;
            // a '/' directly followed by digits belongs to the rational literal
            if (pos_ < input_.size() && input_[pos_] == '/' && pos_ + 1 < input_.size() &&
                std::isdigit(static_cast<unsigned char>(input_[pos_ + 1]))) {
                ++pos_;
                while (pos_ < input_.size() &&
                       std::isdigit(static_cast<unsigned char>(input_[pos_])))
                    ++pos_;
            }
            current_ = {Token::Number, std::string(input_.substr(start, pos_ - start))};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < input_.size() &&
                   (std::isalnum(static_cast<unsigned char>(input_[pos_])) || input_[pos_] == '_'))
                ++pos_;
            current_ = {Token::Name, std::string(input_.substr(start, pos_ - start))};
            return;
        }
        ++pos_;
        switch (c) {
        case '+': current_ = {Token::Plus, "+"}; return;
        case '-': current_ = {Token::Minus, "-"}; return;
        case '*': current_ = {Token::Star, "*"}; return;
        case '^': current_ = {Token::Caret, "^"}; return;
        case '(': current_ = {Token::LParen, "("}; return;
        case ')': current_ = {Token::RParen, ")"}; return;
        default:
            throw PreconditionError(std::string("unexpected character '") + c +
                                    "' in expression");
        }
    }

    std::string_view input_;
    std::size_t pos_ = 0;
    Token current_{Token::End, ""};
};

class Parser {
public:
    Parser(const SignaturePtr& sig, std::string_view text, const NameAliases& aliases,
           const NamedConstants& constants)
        : sig_(sig), lexer_(text), constants_(constants) {
        // invert the display aliases for input resolution
        for (const auto& [internal, shown] : aliases)
            reverse_aliases_[shown] = internal;
    }

    Element parse() {
        Element e = parse_sum();
        if (lexer_.peek().kind != Token::End)
            throw PreconditionError("trailing input after expression: '" + lexer_.peek().text +
                                    "'");
        return e;
    }

private:
    Element parse_sum() {
        Element acc = parse_term();
        while (true) {
            auto kind = lexer_.peek().kind;
            if (kind == Token::Plus) {
                lexer_.take();
                acc += parse_term();
            } else if (kind == Token::Minus) {
                lexer_.take();
                acc -= parse_term();
            } else {
                return acc;
            }
        }
    }

    Element parse_term() {
        bool negate = false;
        while (lexer_.peek().kind == Token::Minus) {
            lexer_.take();
            negate = !negate;
        }
        Element acc = parse_factor();
        while (lexer_.peek().kind == Token::Star) {
            lexer_.take();
            acc = acc * parse_factor();
        }
        return negate ? -acc : acc;
    }

    Element parse_factor() {
        Element base = parse_atom();
        if (lexer_.peek().kind == Token::Caret) {
            lexer_.take();
            Token t = lexer_.take();
            if (t.kind != Token::Number || t.text.find('/') != std::string::npos)
                throw PreconditionError("exponent must be a non-negative integer");
            base = base.pow(std::stoi(t.text));
        }
        return base;
    }

    Element parse_atom() {
        Token t = lexer_.take();
        switch (t.kind) {
        case Token::Number: {
            auto value = parse_rational(t.text);
            if (!value)
                throw PreconditionError("malformed rational '" + t.text + "'");
            return Element::constant(sig_, *value);
        }
        case Token::Name: {
            std::string name = t.text;
            if (auto it = reverse_aliases_.find(name); it != reverse_aliases_.end())
                name = it->second;
            if (auto it = constants_.find(name); it != constants_.end())
                return it->second;
            if (sig_->even_index(name) || sig_->odd_index(name))
                return Element::generator(sig_, name);
            throw PreconditionError("unknown generator '" + t.text + "'");
        }
        case Token::Minus:
            return -parse_atom();
        case Token::LParen: {
            Element inner = parse_sum();
            if (lexer_.take().kind != Token::RParen)
                throw PreconditionError("missing ')'");
            return inner;
        }
        default:
            throw PreconditionError("unexpected token '" + t.text + "' in expression");
        }
    }

    SignaturePtr sig_;
    Lexer lexer_;
    const NamedConstants& constants_;
    std::map<std::string, std::string, std::less<>> reverse_aliases_;
};

} // namespace

Element parse_element(const SignaturePtr& sig, std::string_view text, const NameAliases& aliases,
                      const NamedConstants& constants) {
    require(sig != nullptr, "expression parsing needs an algebra signature");
    return Parser(sig, text, aliases, constants).parse();
}

} // namespace qcoh
