#include "resolventlab/ratpoly.hpp"

#include "resolventlab/zpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace rlab {

void RatPoly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

RatPoly RatPoly::constant(const Rat& a)
{
    RatPoly p;
    if (a != 0)
        p.c_.push_back(a);
    return p;
}

RatPoly RatPoly::monomial(const Rat& c, int k)
{
    RatPoly p;
    if (c != 0) {
        p.c_.assign(static_cast<size_t>(k) + 1, Rat(0));
        p.c_.back() = c;
    }
    return p;
}

const Rat& RatPoly::lc() const
{
    if (c_.empty())
        throw std::domain_error("lc of zero polynomial");
    return c_.back();
}

Rat RatPoly::coeff(int i) const
{
    if (i < 0 || i >= static_cast<int>(c_.size()))
        return Rat(0);
    return c_[static_cast<size_t>(i)];
}

RatPoly RatPoly::operator-() const
{
    RatPoly r(*this);
    for (auto& c : r.c_)
        c = -c;
    return r;
}

RatPoly& RatPoly::operator+=(const RatPoly& o)
{
    if (c_.size() < o.c_.size())
        c_.resize(o.c_.size(), Rat(0));
    for (size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o)
{
    if (c_.size() < o.c_.size())
        c_.resize(o.c_.size(), Rat(0));
    for (size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return RatPoly();
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] += a.c_[i] * b.c_[j];
    return RatPoly(std::move(c));
}

RatPoly operator*(const Rat& s, const RatPoly& a)
{
    if (s == 0)
        return RatPoly();
    RatPoly r(a);
    for (auto& c : r.c_)
        c *= s;
    return r;
}

RatPoly RatPoly::derivative() const
{
    if (c_.size() <= 1)
        return RatPoly();
    std::vector<Rat> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i)
        d[i - 1] = Rat(static_cast<long>(i)) * c_[i];
    return RatPoly(std::move(d));
}

Rat RatPoly::eval(const Rat& x) const
{
    Rat acc(0);
    for (size_t i = c_.size(); i-- > 0;)
        acc = acc * x + c_[i];
    return acc;
}

RatPoly RatPoly::monic() const
{
    if (is_zero())
        throw std::domain_error("monic of zero polynomial");
    return (Rat(1) / lc()) * *this;
}

std::string RatPoly::coeff_list() const
{
    if (c_.empty())
        return "0";
    std::string s;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i)
            s += ',';
        s += to_string(c_[i]);
    }
    return s;
}

std::string RatPoly::pretty() const
{
    if (c_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        const Rat& a = c_[i];
        if (a == 0)
            continue;
        if (first) {
            if (a < 0)
                os << "-";
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        Rat mag = abs(a);
        if (mag != 1 || i == 0)
            os << to_string(mag);
        if (i > 0) {
            if (mag != 1)
                os << "*";
            os << "x";
            if (i > 1)
                os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

std::pair<RatPoly, RatPoly> divrem(const RatPoly& a, const RatPoly& b)
{
    if (b.is_zero())
        throw std::domain_error("polynomial division by zero");
    std::vector<Rat> q;
    RatPoly r = a;
    const int db = b.degree();
    if (a.degree() >= db)
        q.assign(static_cast<size_t>(a.degree() - db) + 1, Rat(0));
    while (!r.is_zero() && r.degree() >= db) {
        const int k = r.degree() - db;
        const Rat t = r.lc() / b.lc();
        q[static_cast<size_t>(k)] = t;
        r -= RatPoly::monomial(t, k) * b;
    }
    return {RatPoly(std::move(q)), std::move(r)};
}

bool divides(const RatPoly& b, const RatPoly& a)
{
    if (b.is_zero())
        return a.is_zero();
    return divrem(a, b).second.is_zero();
}

Rat resultant(const RatPoly& a, const RatPoly& b)
{
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("resultant of two zero polynomials");
    if (a.is_zero() || b.is_zero())
        return Rat(0);
    auto [A, da] = clear_denominators(a);
    auto [B, db] = clear_denominators(b);
    // res(A/da, B/db) = da^-deg(b) db^-deg(a) res(A, B)
    Int rz = zresultant(A, B);
    Int dapow, dbpow;
    mpz_pow_ui(dapow.get_mpz_t(), da.get_mpz_t(), static_cast<unsigned long>(b.degree()));
    mpz_pow_ui(dbpow.get_mpz_t(), db.get_mpz_t(), static_cast<unsigned long>(a.degree()));
    return make_rat(rz, dapow * dbpow);
}

Rat discriminant(const RatPoly& f)
{
    const int n = f.degree();
    if (n < 1)
        throw std::invalid_argument("discriminant of a constant polynomial");
    if (n == 1)
        return Rat(1);
    Rat r = resultant(f, f.derivative());
    const long e = static_cast<long>(n) * (n - 1) / 2;
    Rat d = r / f.lc();
    return (e % 2 == 0) ? d : -d;
}

RatPoly parse_poly(const std::string& csv)
{
    std::vector<Rat> coeffs;
    std::string tok;
    std::istringstream is(csv);
    while (std::getline(is, tok, ',')) {
        // tolerate surrounding whitespace
        const auto b = tok.find_first_not_of(" \t");
        const auto e = tok.find_last_not_of(" \t");
        if (b == std::string::npos)
            throw std::invalid_argument("parse_poly: empty coefficient in '" + csv + "'");
        coeffs.push_back(parse_rat(tok.substr(b, e - b + 1)));
    }
    if (coeffs.empty())
        throw std::invalid_argument("parse_poly: no coefficients");
    return RatPoly(std::move(coeffs));
}

} // namespace rlab
