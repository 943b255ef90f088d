#include "hooklab/expr.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <variant>

namespace hooklab::expr {

namespace {

const std::set<std::string>& function_names() {
    static const std::set<std::string> names = {"exp", "log", "sqrt", "sin", "cos", "tan", "sec"};
    return names;
}

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

struct Token {
    enum class Type { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen,
                      Comma, Equals, DotDot, End };
    Type type;
    std::size_t pos;
    std::string text;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
        tok_.pos = i_;
        if (i_ >= src_.size()) { tok_.type = Token::Type::End; tok_.text.clear(); return; }
        const char c = src_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
            tok_ = {Token::Type::Number, i_, src_.substr(i_, j - i_)};
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i_;
            while (j < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_'))
                ++j;
            tok_ = {Token::Type::Ident, i_, src_.substr(i_, j - i_)};
            i_ = j;
            return;
        }
        if (c == '.' && i_ + 1 < src_.size() && src_[i_ + 1] == '.') {
            tok_ = {Token::Type::DotDot, i_, ".."};
            i_ += 2;
            return;
        }
        Token::Type type;
        switch (c) {
        case '+': type = Token::Type::Plus; break;
        case '-': type = Token::Type::Minus; break;
        case '*': type = Token::Type::Star; break;
        case '/': type = Token::Type::Slash; break;
        case '^': type = Token::Type::Caret; break;
        case '(': type = Token::Type::LParen; break;
        case ')': type = Token::Type::RParen; break;
        case ',': type = Token::Type::Comma; break;
        case '=': type = Token::Type::Equals; break;
        default:
            throw ParseError(std::string("unexpected character '") + c + "'", i_);
        }
        tok_ = {type, i_, std::string(1, c)};
        ++i_;
    }

    const std::string& src_;
    std::size_t i_ = 0;
    Token tok_{Token::Type::End, 0, ""};
};

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

class Parser {
public:
    explicit Parser(const std::string& src) : lex_(src) {}

    ExprPtr run() {
        ExprPtr e = parse_expr();
        if (lex_.peek().type != Token::Type::End)
            throw ParseError("unexpected trailing input", lex_.peek().pos);
        return e;
    }

private:
    static ExprPtr make(Node n) { return std::make_shared<Node>(std::move(n)); }

    ExprPtr parse_expr() {
        ExprPtr e = parse_term();
        while (true) {
            const auto t = lex_.peek().type;
            if (t != Token::Type::Plus && t != Token::Type::Minus) break;
            const Token op = lex_.take();
            ExprPtr rhs = parse_term();
            Node n;
            n.kind = op.type == Token::Type::Plus ? Node::Kind::Add : Node::Kind::Sub;
            n.pos = op.pos;
            n.a = e;
            n.b = rhs;
            e = make(std::move(n));
        }
        return e;
    }

    ExprPtr parse_term() {
        ExprPtr e = parse_unary();
        while (true) {
            const auto t = lex_.peek().type;
            if (t != Token::Type::Star && t != Token::Type::Slash) break;
            const Token op = lex_.take();
            ExprPtr rhs = parse_unary();
            Node n;
            n.kind = op.type == Token::Type::Star ? Node::Kind::Mul : Node::Kind::Div;
            n.pos = op.pos;
            n.a = e;
            n.b = rhs;
            e = make(std::move(n));
        }
        return e;
    }

    ExprPtr parse_unary() {
        if (lex_.peek().type == Token::Type::Minus) {
            const Token op = lex_.take();
            Node n;
            n.kind = Node::Kind::Neg;
            n.pos = op.pos;
            n.a = parse_unary();
            return make(std::move(n));
        }
        if (lex_.peek().type == Token::Type::Plus) {
            lex_.take();
            return parse_unary();
        }
        return parse_power();
    }

    ExprPtr parse_power() {
        ExprPtr base = parse_atom();
        if (lex_.peek().type == Token::Type::Caret) {
            const Token op = lex_.take();
            Node n;
            n.kind = Node::Kind::Pow;
            n.pos = op.pos;
            n.a = base;
            n.b = parse_unary();  // right associative, binds tighter than unary minus on the left
            return make(std::move(n));
        }
        return base;
    }

    ExprPtr parse_atom() {
        const Token t = lex_.take();
        switch (t.type) {
        case Token::Type::Number: {
            Node n;
            n.kind = Node::Kind::Number;
            n.pos = t.pos;
            n.number = Rational(mpz_class(t.text));
            return make(std::move(n));
        }
        case Token::Type::LParen: {
            ExprPtr e = parse_expr();
            expect(Token::Type::RParen, "expected ')'");
            return e;
        }
        case Token::Type::Ident: {
            if (t.text == "product") return parse_product(t.pos);
            if (lex_.peek().type == Token::Type::LParen) {
                if (function_names().count(t.text) == 0)
                    throw ParseError("unknown function '" + t.text + "'", t.pos);
                lex_.take();
                Node n;
                n.kind = Node::Kind::Call;
                n.pos = t.pos;
                n.name = t.text;
                n.a = parse_expr();
                expect(Token::Type::RParen, "expected ')'");
                return make(std::move(n));
            }
            Node n;
            n.kind = Node::Kind::Ident;
            n.pos = t.pos;
            n.name = t.text;
            return make(std::move(n));
        }
        default:
            throw ParseError("expected a number, identifier or '('", t.pos);
        }
    }

    ExprPtr parse_product(std::size_t pos) {
        expect(Token::Type::LParen, "expected '(' after product");
        Node n;
        n.kind = Node::Kind::Product;
        n.pos = pos;
        n.a = parse_expr();
        expect(Token::Type::Comma, "expected ',' in product");
        const Token idx = lex_.take();
        if (idx.type != Token::Type::Ident)
            throw ParseError("expected index variable in product", idx.pos);
        n.index = idx.text;
        expect(Token::Type::Equals, "expected '=' in product bounds");
        n.lo = parse_expr();
        expect(Token::Type::DotDot, "expected '..' in product bounds");
        n.hi = parse_expr();
        expect(Token::Type::RParen, "expected ')'");
        return make(std::move(n));
    }

    void expect(Token::Type type, const char* msg) {
        const Token t = lex_.take();
        if (t.type != type) throw ParseError(msg, t.pos);
    }

    Lexer lex_;
};

} // namespace

ExprPtr parse(const std::string& src) {
    return Parser(src).run();
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

namespace {

int precedence(Node::Kind k) {
    switch (k) {
    case Node::Kind::Add:
    case Node::Kind::Sub: return 1;
    case Node::Kind::Mul:
    case Node::Kind::Div: return 2;
    case Node::Kind::Neg: return 3;
    case Node::Kind::Pow: return 4;
    default: return 5;
    }
}

void render_into(const ExprPtr& e, std::ostream& os, int parent_prec, bool right_side) {
    const int prec = precedence(e->kind);
    const bool parens = prec < parent_prec || (prec == parent_prec && right_side);
    if (parens) os << "(";
    switch (e->kind) {
    case Node::Kind::Number: os << e->number.str(); break;
    case Node::Kind::Ident: os << e->name; break;
    case Node::Kind::Neg:
        os << "-";
        render_into(e->a, os, prec + 1, false);
        break;
    case Node::Kind::Add:
    case Node::Kind::Sub:
        render_into(e->a, os, prec, false);
        os << (e->kind == Node::Kind::Add ? "+" : "-");
        render_into(e->b, os, prec, true);
        break;
    case Node::Kind::Mul:
    case Node::Kind::Div:
        render_into(e->a, os, prec, false);
        os << (e->kind == Node::Kind::Mul ? "*" : "/");
        render_into(e->b, os, prec, true);
        break;
    case Node::Kind::Pow:
        render_into(e->a, os, prec + 1, false);
        os << "^";
        render_into(e->b, os, prec, false);
        break;
    case Node::Kind::Call:
        os << e->name << "(";
        render_into(e->a, os, 0, false);
        os << ")";
        break;
    case Node::Kind::Product:
        os << "product(";
        render_into(e->a, os, 0, false);
        os << ", " << e->index << "=";
        render_into(e->lo, os, 3, false);
        os << "..";
        render_into(e->hi, os, 3, false);
        os << ")";
        break;
    }
    if (parens) os << ")";
}

} // namespace

std::string render(const ExprPtr& e) {
    std::ostringstream os;
    render_into(e, os, 0, false);
    return os.str();
}

namespace {

void collect_free(const ExprPtr& e, std::set<std::string>& bound, std::set<std::string>& out) {
    switch (e->kind) {
    case Node::Kind::Ident:
        if (e->name != "x" && bound.count(e->name) == 0) out.insert(e->name);
        break;
    case Node::Kind::Number: break;
    case Node::Kind::Neg:
    case Node::Kind::Call:
        collect_free(e->a, bound, out);
        break;
    case Node::Kind::Add:
    case Node::Kind::Sub:
    case Node::Kind::Mul:
    case Node::Kind::Div:
    case Node::Kind::Pow:
        collect_free(e->a, bound, out);
        collect_free(e->b, bound, out);
        break;
    case Node::Kind::Product: {
        collect_free(e->lo, bound, out);
        collect_free(e->hi, bound, out);
        const bool fresh = bound.insert(e->index).second;
        collect_free(e->a, bound, out);
        if (fresh) bound.erase(e->index);
        break;
    }
    }
}

} // namespace

std::set<std::string> free_identifiers(const ExprPtr& e) {
    std::set<std::string> bound, out;
    collect_free(e, bound, out);
    return out;
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

namespace {

// A sub-expression value is either x-free (a rational function) or a series.
// Series orders shrink when a division has to shift out powers of x; the
// top-level driver re-evaluates at a padded order until the target is met.
using Value = std::variant<RatFun, TruncSeries>;

struct Evaluator {
    int order;
    const EvalEnv* env;
    std::map<std::string, long> index_vars;

    static std::string where(const ExprPtr& e) {
        return " (at position " + std::to_string(e->pos) + ")";
    }

    TruncSeries to_series(const Value& v, int ord) const {
        if (std::holds_alternative<TruncSeries>(v)) return std::get<TruncSeries>(v);
        return TruncSeries::constant(std::get<RatFun>(v), ord);
    }

    Value eval(const ExprPtr& e) {
        switch (e->kind) {
        case Node::Kind::Number:
            return RatFun(e->number);
        case Node::Kind::Ident: {
            if (e->name == "x") return TruncSeries::x(order);
            const auto iv = index_vars.find(e->name);
            if (iv != index_vars.end()) return RatFun(Rational(iv->second));
            const auto b = env->bindings.find(e->name);
            if (b != env->bindings.end()) return b->second;
            if (std::find(env->params.begin(), env->params.end(), e->name) != env->params.end())
                return RatFun::variable(e->name);
            throw DomainError("unknown identifier '" + e->name + "'" + where(e));
        }
        case Node::Kind::Neg: {
            Value v = eval(e->a);
            if (std::holds_alternative<RatFun>(v)) return -std::get<RatFun>(v);
            return -std::get<TruncSeries>(v);
        }
        case Node::Kind::Add:
        case Node::Kind::Sub:
        case Node::Kind::Mul:
            return eval_ring_op(e);
        case Node::Kind::Div:
            return eval_div(e);
        case Node::Kind::Pow:
            return eval_pow(e);
        case Node::Kind::Call:
            return eval_call(e);
        case Node::Kind::Product:
            return eval_product(e);
        }
        throw DomainError("invalid expression node");
    }

    Value eval_ring_op(const ExprPtr& e) {
        Value va = eval(e->a);
        Value vb = eval(e->b);
        if (std::holds_alternative<RatFun>(va) && std::holds_alternative<RatFun>(vb)) {
            const RatFun& a = std::get<RatFun>(va);
            const RatFun& b = std::get<RatFun>(vb);
            switch (e->kind) {
            case Node::Kind::Add: return a + b;
            case Node::Kind::Sub: return a - b;
            default: return a * b;
            }
        }
        const int ord = std::min(series_order(va), series_order(vb));
        const TruncSeries a = to_series(va, ord);
        const TruncSeries b = to_series(vb, ord);
        switch (e->kind) {
        case Node::Kind::Add: return a + b;
        case Node::Kind::Sub: return a - b;
        default: return a * b;
        }
    }

    int series_order(const Value& v) const {
        if (std::holds_alternative<TruncSeries>(v)) return std::get<TruncSeries>(v).order();
        return order;
    }

    Value eval_div(const ExprPtr& e) {
        Value va = eval(e->a);
        Value vb = eval(e->b);
        if (std::holds_alternative<RatFun>(va) && std::holds_alternative<RatFun>(vb)) {
            const RatFun& b = std::get<RatFun>(vb);
            if (b.is_zero()) throw DomainError("division by zero" + where(e));
            return std::get<RatFun>(va) / b;
        }
        const int ord = std::min(series_order(va), series_order(vb));
        TruncSeries a = to_series(va, ord);
        TruncSeries b = to_series(vb, ord);
        if (!b[0].is_zero()) return series_div(a, b);

        // The divisor vanishes at x=0: cancel the common power of x.
        const int vb_val = b.valuation();
        if (vb_val > b.order())
            throw DomainError("division by zero series" + where(e));
        const int va_val = a.valuation();
        if (va_val > a.order()) {
            // Numerator is zero to its whole known order.
            return TruncSeries(std::max(0, a.order() - vb_val));
        }
        if (va_val < vb_val)
            throw DomainError("nonunit divisor: numerator valuation too small" + where(e));
        return series_div(a.shifted_down(vb_val), b.shifted_down(vb_val));
    }

    Value eval_pow(const ExprPtr& e) {
        Value base = eval(e->a);
        Evaluator scalar{order, env, index_vars};
        Value ve = scalar.eval(e->b);
        if (!std::holds_alternative<RatFun>(ve))
            throw DomainError("series variable x cannot appear in an exponent" + where(e->b));
        const RatFun expo = std::get<RatFun>(ve);
        if (std::holds_alternative<RatFun>(base)) {
            const RatFun& b = std::get<RatFun>(base);
            if (expo.is_integer()) return b.pow(expo.constant_value().to_long());
            if (b.is_one()) return RatFun(1);
            throw DomainError("fractional or symbolic power of a non-series value" + where(e));
        }
        return series_pow(std::get<TruncSeries>(base), expo);
    }

    Value eval_call(const ExprPtr& e) {
        Value va = eval(e->a);
        const int ord = series_order(va);
        const TruncSeries a = to_series(va, ord);
        try {
            if (e->name == "exp") return series_exp(a);
            if (e->name == "log") return series_log(a);
            if (e->name == "sqrt") return series_pow(a, RatFun(Rational(1, 2)));
            if (e->name == "sin") return series_compose(elementary_series(Elementary::Sin, ord), a);
            if (e->name == "cos") return series_compose(elementary_series(Elementary::Cos, ord), a);
            if (e->name == "tan") return series_compose(elementary_series(Elementary::Tan, ord), a);
            if (e->name == "sec") return series_compose(elementary_series(Elementary::Sec, ord), a);
        } catch (const DomainError& err) {
            throw DomainError(std::string(err.what()) + where(e));
        }
        throw DomainError("unknown function '" + e->name + "'" + where(e));
    }

    long eval_index_bound(const ExprPtr& e) {
        Evaluator scalar{order, env, index_vars};
        Value v = scalar.eval(e);
        if (!std::holds_alternative<RatFun>(v))
            throw DomainError("product bound must not involve x" + where(e));
        const RatFun& r = std::get<RatFun>(v);
        if (!r.is_integer())
            throw DomainError("product bound must be an integer" + where(e));
        return r.constant_value().to_long();
    }

    Value eval_product(const ExprPtr& e) {
        const long lo = eval_index_bound(e->lo);
        const long hi = eval_index_bound(e->hi);

        TruncSeries acc = TruncSeries::one(order);
        int acc_order = order;
        std::optional<long> saved;
        if (const auto it = index_vars.find(e->index); it != index_vars.end())
            saved = it->second;

        auto factor_at = [&](long k) {
            index_vars[e->index] = k;
            Value v = eval(e->a);
            return to_series(v, series_order(v));
        };

        for (long k = lo; k <= hi; ++k) {
            const TruncSeries f = factor_at(k);
            acc_order = std::min(acc_order, f.order());
            acc = acc.truncated(acc_order) * f;
        }

        // Literal upper bounds below the truncation order are completed to it
        // as long as every added factor is 1 + O(x^k); otherwise the bound is
        // honored verbatim.
        if (e->hi->kind == Node::Kind::Number && hi < acc_order && hi >= lo) {
            std::vector<TruncSeries> extension;
            bool extendable = true;
            for (long k = hi + 1; k <= acc_order; ++k) {
                TruncSeries f = factor_at(k);
                TruncSeries dev = f - TruncSeries::one(f.order());
                if (!f[0].is_one() || (dev.valuation() <= dev.order() && dev.valuation() < k)) {
                    extendable = false;
                    break;
                }
                extension.push_back(std::move(f));
            }
            if (extendable) {
                for (const auto& f : extension) {
                    acc_order = std::min(acc_order, f.order());
                    acc = acc.truncated(acc_order) * f;
                }
            }
        }

        if (saved) index_vars[e->index] = *saved;
        else index_vars.erase(e->index);
        return acc;
    }
};

} // namespace

TruncSeries eval_series(const ExprPtr& e, int order, const EvalEnv& env) {
    if (order < 0) throw DomainError("negative truncation order");
    int attempt_order = order;
    for (int tries = 0; tries < 8; ++tries) {
        Evaluator ev{attempt_order, &env, {}};
        Value v = ev.eval(e);
        if (std::holds_alternative<RatFun>(v))
            return TruncSeries::constant(std::get<RatFun>(v), order);
        const TruncSeries& s = std::get<TruncSeries>(v);
        if (s.order() >= order) return s.truncated(order);
        // Valuation-shifting divisions cost known coefficients; pad and retry.
        attempt_order += order - s.order();
    }
    throw DomainError("expression evaluation did not reach the requested order");
}

RatFun eval_ratfun(const ExprPtr& e, const EvalEnv& env) {
    Evaluator ev{0, &env, {}};
    Value v = ev.eval(e);
    if (!std::holds_alternative<RatFun>(v))
        throw DomainError("expected an x-free expression");
    return std::get<RatFun>(v);
}

TruncSeries eval_series(const std::string& src, int order, const EvalEnv& env) {
    return eval_series(parse(src), order, env);
}

RatFun eval_ratfun(const std::string& src, const EvalEnv& env) {
    return eval_ratfun(parse(src), env);
}

} // namespace hooklab::expr
