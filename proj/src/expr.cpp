#include "qjalg/expr.hpp"

#include <cctype>
#include <map>

#include "qjalg/differential.hpp"

namespace qjalg {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

struct CallShape {
    unsigned forms;     // leading form arguments
    unsigned integers;  // trailing nonnegative integer literals
};

const std::map<std::string, CallShape, std::less<>>& call_table()
{
    static const std::map<std::string, CallShape, std::less<>> table{
        {"dz", {1, 0}},  {"dtau", {1, 0}}, {"ob", {1, 0}}, {"d", {1, 0}},  {"delta", {1, 0}},
        {"rc", {2, 1}},  {"rcd", {2, 1}},  {"tv", {2, 1}}, {"q", {1, 2}},  {"eis", {0, 1}},
    };
    return table;
}

const std::map<std::string, QJForm, std::less<>>& ident_table()
{
    static const std::map<std::string, QJForm, std::less<>> table{
        {"wp", QJForm::generator(Gen::WP)},  {"dwp", QJForm::generator(Gen::DWP)},
        {"e4", QJForm::generator(Gen::E4)},  {"e1", QJForm::generator(Gen::EE1)},
        {"e2", QJForm::generator(Gen::EE2)}, {"e6", e6_form()},
    };
    return table;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ExprPtr run()
    {
        ExprPtr e = sum();
        skip();
        if (pos_ != text_.size())
            throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
        return e;
    }

private:
    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    bool accept(char c)
    {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c)
    {
        if (!accept(c))
            throw ParseError(std::string("expected '") + c + "'", pos_);
    }

    static ExprPtr node(Expr::Kind kind, std::size_t offset, std::vector<ExprPtr> args = {})
    {
        auto e = std::make_shared<Expr>();
        e->kind = kind;
        e->offset = offset;
        e->args = std::move(args);
        return e;
    }

    ExprPtr sum()
    {
        ExprPtr left = product();
        for (;;) {
            skip();
            const std::size_t at = pos_;
            if (accept('+'))
                left = node(Expr::Kind::Add, at, {left, product()});
            else if (accept('-'))
                left = node(Expr::Kind::Sub, at, {left, product()});
            else
                return left;
        }
    }

    ExprPtr product()
    {
        ExprPtr left = unary();
        for (;;) {
            skip();
            const std::size_t at = pos_;
            if (!accept('*'))
                return left;
            left = node(Expr::Kind::Mul, at, {left, unary()});
        }
    }

    ExprPtr unary()
    {
        skip();
        const std::size_t at = pos_;
        if (accept('-'))
            return node(Expr::Kind::Neg, at, {unary()});
        if (accept('+'))
            return unary();
        return power();
    }

    ExprPtr power()
    {
        ExprPtr base = primary();
        for (;;) {
            skip();
            const std::size_t at = pos_;
            if (!accept('^'))
                return base;
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::Pow;
            e->offset = at;
            e->args = {base};
            e->exponent = exponent_literal();
            base = e;
        }
    }

    unsigned exponent_literal()
    {
        skip();
        const std::size_t at = pos_;
        const bool paren = accept('(');
        skip();
        if (pos_ < text_.size() && text_[pos_] == '-')
            throw ParseError("exponent must be a nonnegative integer", pos_);
        if (pos_ >= text_.size() || !is_digit(text_[pos_]))
            throw ParseError("exponent must be a nonnegative integer literal", pos_);
        const Rational r = number_literal();
        if (r.get_den() != 1)
            throw ParseError("non-integer exponent", at);
        if (paren)
            expect(')');
        if (r > Monomial::kMaxExponent)
            throw ParseError("exponent too large", at);
        return static_cast<unsigned>(r.get_num().get_ui());
    }

    Rational number_literal()
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && is_digit(text_[pos_]))
            ++pos_;
        std::string digits(text_.substr(start, pos_ - start));
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            const std::size_t den_start = pos_;
            while (pos_ < text_.size() && is_digit(text_[pos_]))
                ++pos_;
            if (den_start == pos_)
                throw ParseError("malformed rational: missing denominator", den_start);
            digits += "/" + std::string(text_.substr(den_start, pos_ - den_start));
        }
        if (pos_ < text_.size() && (text_[pos_] == '.' || is_ident_start(text_[pos_])))
            throw ParseError("malformed rational", start);
        try {
            return parse_rational(digits);
        } catch (const DomainError&) {
            throw ParseError("malformed rational '" + digits + "'", start);
        }
    }

    ExprPtr integer_argument()
    {
        skip();
        const std::size_t at = pos_;
        if (pos_ >= text_.size() || !is_digit(text_[pos_]))
            throw ParseError("expected a nonnegative integer literal", at);
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::Number;
        e->offset = at;
        e->value = number_literal();
        if (e->value.get_den() != 1)
            throw ParseError("expected an integer, got a fraction", at);
        return e;
    }

    ExprPtr primary()
    {
        skip();
        const std::size_t at = pos_;
        if (pos_ >= text_.size())
            throw ParseError("unexpected end of input", at);
        const char c = text_[pos_];
        if (is_digit(c)) {
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::Number;
            e->offset = at;
            e->value = number_literal();
            return e;
        }
        if (c == '(') {
            ++pos_;
            ExprPtr inner = sum();
            expect(')');
            return inner;
        }
        if (!is_ident_start(c))
            throw ParseError("unexpected '" + std::string(1, c) + "'", at);
        while (pos_ < text_.size() && is_ident_char(text_[pos_]))
            ++pos_;
        std::string name;
        for (char ch : text_.substr(at, pos_ - at))
            name.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));

        skip();
        const bool is_call = pos_ < text_.size() && text_[pos_] == '(';
        if (!is_call) {
            if (!ident_table().count(name))
                throw ParseError("unknown identifier '" + name + "'", at);
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::Ident;
            e->offset = at;
            e->name = name;
            return e;
        }
        const auto it = call_table().find(name);
        if (it == call_table().end())
            throw ParseError("unknown function '" + name + "'", at);
        ++pos_;
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::Call;
        e->offset = at;
        e->name = name;
        const CallShape shape = it->second;
        for (unsigned i = 0; i < shape.forms + shape.integers; ++i) {
            if (i > 0)
                expect(',');
            e->args.push_back(i < shape.forms ? sum() : integer_argument());
        }
        if (!accept(')'))
            throw ParseError(name + " takes " + std::to_string(shape.forms + shape.integers) + " argument(s)", pos_);
        return e;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

// Values are carried as scaled forms; `scaled` records whether q(...) was seen.
struct Eval {
    bool scaled = false;

    static ScaledJForm plain(QJForm f) { return {std::move(f), 0}; }

    static ScaledJForm normalize(ScaledJForm v)
    {
        if (v.form.is_zero())
            v.c_power = 0;
        return v;
    }

    static ScaledJForm combine_sum(const ScaledJForm& a, const ScaledJForm& b, bool subtract, std::size_t at)
    {
        if (a.form.is_zero())
            return normalize({subtract ? -b.form : b.form, b.c_power});
        if (b.form.is_zero())
            return a;
        if (a.c_power != b.c_power)
            throw ParseError("cannot add terms carrying different powers of c", at);
        return normalize({subtract ? a.form - b.form : a.form + b.form, a.c_power});
    }

    static unsigned integer_arg(const Expr& e)
    {
        if (e.value > 1000000)
            throw ParseError("integer argument too large", e.offset);
        return static_cast<unsigned>(e.value.get_num().get_ui());
    }

    ScaledJForm operator()(const Expr& e)
    {
        switch (e.kind) {
        case Expr::Kind::Number: return plain(QJForm(e.value));
        case Expr::Kind::Ident: return plain(ident_table().find(e.name)->second);
        case Expr::Kind::Neg: {
            ScaledJForm v = (*this)(*e.args[0]);
            v.form = -v.form;
            return v;
        }
        case Expr::Kind::Add: return combine_sum((*this)(*e.args[0]), (*this)(*e.args[1]), false, e.offset);
        case Expr::Kind::Sub: return combine_sum((*this)(*e.args[0]), (*this)(*e.args[1]), true, e.offset);
        case Expr::Kind::Mul: {
            const ScaledJForm a = (*this)(*e.args[0]);
            const ScaledJForm b = (*this)(*e.args[1]);
            return normalize({a.form * b.form, a.c_power + b.c_power});
        }
        case Expr::Kind::Pow: {
            const ScaledJForm a = (*this)(*e.args[0]);
            return normalize({pow(a.form, e.exponent), a.c_power * static_cast<int>(e.exponent)});
        }
        case Expr::Kind::Call: return call(e);
        }
        throw ParseError("unhandled node", e.offset);
    }

    ScaledJForm call(const Expr& e)
    {
        const std::string& n = e.name;
        if (n == "eis") {
            const unsigned two_n = integer_arg(*e.args[0]);
            try {
                return plain(eisenstein_in_generators(static_cast<int>(two_n), EisensteinMethod::LAURENT));
            } catch (const DomainError& err) {
                throw ParseError(err.what(), e.args[0]->offset);
            }
        }
        if (n == "q") {
            scaled = true;
            const ScaledJForm f = (*this)(*e.args[0]);
            ScaledJForm r = q_coefficient(f.form, integer_arg(*e.args[1]), integer_arg(*e.args[2]));
            if (!r.form.is_zero())
                r.c_power += f.c_power;
            return r;
        }
        if (n == "rc" || n == "rcd" || n == "tv") {
            const ScaledJForm f = (*this)(*e.args[0]);
            const ScaledJForm g = (*this)(*e.args[1]);
            return normalize({bracket(parse_bracket(n), f.form, g.form, integer_arg(*e.args[2])),
                              f.c_power + g.c_power});
        }
        const ScaledJForm f = (*this)(*e.args[0]);
        return normalize({derive(parse_derivation(n), f.form), f.c_power});
    }
};

void sexpr(const Expr& e, std::string& out)
{
    switch (e.kind) {
    case Expr::Kind::Number: out += e.value.get_str(); return;
    case Expr::Kind::Ident: out += e.name; return;
    default: break;
    }
    static const std::map<Expr::Kind, std::string> names{
        {Expr::Kind::Neg, "neg"}, {Expr::Kind::Add, "add"}, {Expr::Kind::Sub, "sub"},
        {Expr::Kind::Mul, "mul"}, {Expr::Kind::Pow, "pow"}};
    out += "(";
    out += e.kind == Expr::Kind::Call ? e.name : names.at(e.kind);
    for (const auto& a : e.args) {
        out += " ";
        sexpr(*a, out);
    }
    if (e.kind == Expr::Kind::Pow)
        out += " " + std::to_string(e.exponent);
    out += ")";
}

}  // namespace

ExprPtr parse(std::string_view text)
{
    return Parser(text).run();
}

std::string to_sexpr(const Expr& e)
{
    std::string out;
    sexpr(e, out);
    return out;
}

Value evaluate(const Expr& e)
{
    Eval ev;
    ScaledJForm v = ev(e);
    if (ev.scaled)
        return v;
    return std::move(v.form);
}

Value evaluate(std::string_view text)
{
    return evaluate(*parse(text));
}

QJForm evaluate_form(std::string_view text)
{
    Value v = evaluate(text);
    if (auto* f = std::get_if<QJForm>(&v))
        return std::move(*f);
    throw DomainError("expected a form, got a c-scaled Q-coefficient");
}

}  // namespace qjalg
