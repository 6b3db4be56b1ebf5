#include "pseudotri/laurent.hpp"

#include "pseudotri/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace ptri {

bool GradedLex::operator()(const Exps& a, const Exps& b) const
{
    long da = std::accumulate(a.begin(), a.end(), 0L);
    long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db)
        return da < db;
    return a < b;
}

LaurentPoly LaurentPoly::constant(int nvars, const mpz_class& c)
{
    LaurentPoly f(nvars);
    f.add_term(Exps(nvars, 0), c);
    return f;
}

LaurentPoly LaurentPoly::variable(int nvars, int i)
{
    if (i < 0 || i >= nvars)
        throw InvalidInput("variable index out of range");
    Exps e(nvars, 0);
    e[i] = 1;
    return monomial(e);
}

LaurentPoly LaurentPoly::monomial(const Exps& e, const mpz_class& c)
{
    LaurentPoly f(static_cast<int>(e.size()));
    f.add_term(e, c);
    return f;
}

void LaurentPoly::check_dim(const LaurentPoly& g) const
{
    if (nvars_ != g.nvars_)
        throw InvalidInput("Laurent polynomials over different variable sets (" +
                           std::to_string(nvars_) + " vs " + std::to_string(g.nvars_) + ")");
}

bool LaurentPoly::is_polynomial() const
{
    for (const auto& [e, c] : terms_)
        for (int x : e)
            if (x < 0)
                return false;
    return true;
}

bool LaurentPoly::positive() const
{
    for (const auto& [e, c] : terms_)
        if (sgn(c) <= 0)
            return false;
    return true;
}

void LaurentPoly::add_term(const Exps& e, const mpz_class& c)
{
    if (static_cast<int>(e.size()) != nvars_)
        throw InvalidInput("monomial has wrong number of exponents");
    if (c == 0)
        return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& g)
{
    check_dim(g);
    for (const auto& [e, c] : g.terms_)
        add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& g)
{
    check_dim(g);
    for (const auto& [e, c] : g.terms_)
        add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g)
{
    f.check_dim(g);
    LaurentPoly h(f.nvars_);
    Exps e(f.nvars_);
    for (const auto& [a, ca] : f.terms_)
        for (const auto& [b, cb] : g.terms_) {
            for (int i = 0; i < f.nvars_; ++i)
                e[i] = a[i] + b[i];
            h.add_term(e, ca * cb);
        }
    return h;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly h(nvars_);
    for (const auto& [e, c] : terms_)
        h.terms_.emplace(e, -c);
    return h;
}

LaurentPoly LaurentPoly::pow(unsigned k) const
{
    LaurentPoly r = constant(nvars_, 1);
    LaurentPoly b = *this;
    while (k) {
        if (k & 1)
            r = r * b;
        k >>= 1;
        if (k)
            b = b * b;
    }
    return r;
}

bool operator==(const LaurentPoly& f, const LaurentPoly& g)
{
    return f.nvars_ == g.nvars_ && f.terms_ == g.terms_;
}

std::vector<int> LaurentPoly::denominator_vector() const
{
    if (is_zero())
        throw InvalidInput("denominator vector of zero");
    std::vector<int> d(nvars_, 0);
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < nvars_; ++i)
            d[i] = std::max(d[i], -e[i]);
    return d;
}

mpq_class LaurentPoly::evaluate(const std::vector<mpq_class>& point) const
{
    if (static_cast<int>(point.size()) != nvars_)
        throw InvalidInput("evaluation point has wrong dimension");
    mpq_class sum = 0;
    for (const auto& [e, c] : terms_) {
        mpq_class t = c;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0)
                continue;
            if (point[i] == 0 && e[i] < 0)
                throw InvalidInput("evaluation at a pole");
            mpq_class base = e[i] > 0 ? point[i] : 1 / point[i];
            for (int k = 0; k < std::abs(e[i]); ++k)
                t *= base;
        }
        sum += t;
    }
    return sum;
}

namespace {

std::string monomial_text(const Exps& e, const std::vector<std::string>& names)
{
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += names.at(i);
        if (e[i] != 1)
            out += "^" + std::to_string(e[i]);
    }
    return out;
}

} // namespace

std::string LaurentPoly::to_string(const std::vector<std::string>& names) const
{
    if (static_cast<int>(names.size()) < nvars_)
        throw InvalidInput("not enough variable names");
    if (is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        mpz_class a = abs(c);
        std::string mono = monomial_text(e, names);
        if (first)
            out += sgn(c) < 0 ? "-" : "";
        else
            out += sgn(c) < 0 ? " - " : " + ";
        first = false;
        if (mono.empty())
            out += a.get_str();
        else if (a == 1)
            out += mono;
        else
            out += a.get_str() + "*" + mono;
    }
    return out;
}

std::string LaurentPoly::to_fraction(const std::vector<std::string>& names) const
{
    if (is_zero())
        return "0";
    std::vector<int> den = denominator_vector();
    if (std::all_of(den.begin(), den.end(), [](int x) { return x == 0; }))
        return to_string(names);
    LaurentPoly num = *this * monomial(den);
    std::string top = num.to_string(names);
    if (num.size() > 1)
        top = "(" + top + ")";
    std::string bottom = monomial_text(den, names);
    int factors = 0;
    for (int x : den)
        factors += x != 0;
    if (factors > 1)
        bottom = "(" + bottom + ")";
    return top + "/" + bottom;
}

LaurentPoly div_exact(const LaurentPoly& f, const LaurentPoly& g)
{
    if (f.nvars() != g.nvars())
        throw InvalidInput("div_exact: different variable sets");
    if (g.is_zero())
        throw InvalidInput("div_exact: division by zero");
    const int n = f.nvars();
    LaurentPoly q(n);
    if (f.is_zero())
        return q;
    // Any exact quotient has exponents inside this box, variable by variable.
    std::vector<int> lo(n), hi(n);
    for (int i = 0; i < n; ++i) {
        int fmin = INT32_MAX, fmax = INT32_MIN, gmin = INT32_MAX, gmax = INT32_MIN;
        for (const auto& [e, c] : f.terms()) {
            fmin = std::min(fmin, e[i]);
            fmax = std::max(fmax, e[i]);
        }
        for (const auto& [e, c] : g.terms()) {
            gmin = std::min(gmin, e[i]);
            gmax = std::max(gmax, e[i]);
        }
        lo[i] = fmin - gmin;
        hi[i] = fmax - gmax;
        if (lo[i] > hi[i])
            throw NotDivisible("div_exact: exponent ranges do not fit");
    }
    const Exps& gl = g.leading();
    const mpz_class& gc = g.terms().rbegin()->second;
    LaurentPoly r = f;
    Exps t(n);
    while (!r.is_zero()) {
        const Exps& rl = r.leading();
        const mpz_class& rc = r.terms().rbegin()->second;
        for (int i = 0; i < n; ++i) {
            t[i] = rl[i] - gl[i];
            if (t[i] < lo[i] || t[i] > hi[i])
                throw NotDivisible("div_exact: remainder left over");
        }
        if (!mpz_divisible_p(rc.get_mpz_t(), gc.get_mpz_t()))
            throw NotDivisible("div_exact: coefficient not divisible");
        mpz_class c = rc / gc;
        LaurentPoly term = LaurentPoly::monomial(t, c);
        q.add_term(t, c);
        r -= term * g;
    }
    return q;
}

std::vector<std::string> default_names(int nvars)
{
    std::vector<std::string> out;
    for (int i = 1; i <= nvars; ++i)
        out.push_back("x" + std::to_string(i));
    return out;
}

// ---------------------------------------------------------------------------

namespace {

class Parser {
public:
    Parser(const std::string& s, const std::vector<std::string>& names)
        : s_(s), names_(names), n_(static_cast<int>(names.size()))
    {
    }

    LaurentPoly run()
    {
        LaurentPoly f = expr();
        skip();
        if (pos_ != s_.size())
            fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return f;
    }

private:
    const std::string& s_;
    const std::vector<std::string>& names_;
    int n_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& why) const
    {
        throw InvalidInput("cannot parse polynomial \"" + s_ + "\" at " + std::to_string(pos_) + ": " +
                           why);
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool eat(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    LaurentPoly expr()
    {
        LaurentPoly f = term();
        for (;;) {
            if (eat('+'))
                f += term();
            else if (eat('-'))
                f -= term();
            else
                return f;
        }
    }

    LaurentPoly term()
    {
        LaurentPoly f = unary();
        for (;;) {
            if (eat('*'))
                f = f * unary();
            else if (eat('/'))
                f = div_exact(f, unary());
            else
                return f;
        }
    }

    LaurentPoly unary()
    {
        if (eat('-'))
            return -unary();
        if (eat('+'))
            return unary();
        return power();
    }

    LaurentPoly power()
    {
        LaurentPoly base = primary();
        if (!eat('^'))
            return base;
        skip();
        bool neg = eat('-');
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected exponent");
        unsigned k = static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start)));
        if (!neg)
            return base.pow(k);
        if (!base.is_monomial())
            fail("negative power of a non-monomial");
        Exps e = base.terms().begin()->first;
        const mpz_class& c = base.terms().begin()->second;
        if (abs(c) != 1)
            fail("negative power of a non-unit coefficient");
        for (int& x : e)
            x *= -static_cast<int>(k);
        return LaurentPoly::monomial(e, (k % 2 == 1) ? c : mpz_class(1));
    }

    LaurentPoly primary()
    {
        skip();
        if (pos_ >= s_.size())
            fail("unexpected end");
        char ch = s_[pos_];
        if (ch == '(') {
            ++pos_;
            LaurentPoly f = expr();
            if (!eat(')'))
                fail("expected ')'");
            return f;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            return LaurentPoly::constant(n_, mpz_class(s_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string id = s_.substr(start, pos_ - start);
            auto it = std::find(names_.begin(), names_.end(), id);
            if (it == names_.end())
                fail("unknown variable '" + id + "'");
            return LaurentPoly::variable(n_, static_cast<int>(it - names_.begin()));
        }
        fail("unexpected '" + std::string(1, ch) + "'");
    }
};

} // namespace

LaurentPoly LaurentPoly::parse(const std::string& text, const std::vector<std::string>& names)
{
    return Parser(text, names).run();
}

} // namespace ptri
