#include "gca/ring.hpp"

#include <sstream>

namespace gca {

Rational ratFromString(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator in rational literal: " + s);
    q.canonicalize();
    return q;
}

std::string ratToString(const Rational& q) {
    return q.get_str();
}

Rational ratPow(const Rational& base, int e) {
    if (e == 0) return 1;
    Rational b = base;
    bool inv = e < 0;
    if (inv) {
        if (b == 0) throw std::domain_error("0^negative");
        b = 1 / b;
        e = -e;
    }
    Rational r = 1;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

void Monomial::trim() {
    while (!xExp.empty() && xExp.back() == 0) xExp.pop_back();
}

RingElem::RingElem(const Rational& c) {
    if (c != 0) terms_.emplace(Monomial{}, c);
}

RingElem::RingElem(long c) : RingElem(Rational(c)) {}

RingElem RingElem::coordinate(int i) {
    if (i < 0) throw std::out_of_range("coordinate index");
    Monomial m;
    m.xExp.assign(static_cast<std::size_t>(i) + 1, 0);
    m.xExp[static_cast<std::size_t>(i)] = 1;
    return monomialTerm(m, 1);
}

RingElem RingElem::tVar() {
    Monomial m;
    m.tDegree = 1;
    return monomialTerm(m, 1);
}

RingElem RingElem::expT(int k) {
    Monomial m;
    m.expWeight = k;
    return monomialTerm(m, 1);
}

RingElem RingElem::monomialTerm(const Monomial& m, const Rational& c) {
    RingElem e;
    Monomial mm = m;
    mm.trim();
    if (mm.tDegree < 0) throw std::invalid_argument("negative t degree");
    for (int a : mm.xExp)
        if (a < 0) throw std::invalid_argument("negative coordinate exponent");
    if (c != 0) e.terms_.emplace(std::move(mm), c);
    return e;
}

bool RingElem::isConstant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first.isOne();
}

Rational RingElem::constantValue() const {
    if (terms_.empty()) return 0;
    if (!isConstant()) throw std::domain_error("not a constant ring element");
    return terms_.begin()->second;
}

bool RingElem::timeFree() const {
    for (const auto& [m, c] : terms_)
        if (m.tDegree != 0 || m.expWeight != 0) return false;
    return true;
}

void RingElem::addTerm(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    Monomial mm = m;
    mm.trim();
    auto it = terms_.find(mm);
    if (it == terms_.end()) {
        terms_.emplace(std::move(mm), c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

RingElem RingElem::operator-() const {
    RingElem r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

RingElem RingElem::operator+(const RingElem& o) const {
    RingElem r = *this;
    r += o;
    return r;
}

RingElem RingElem::operator-(const RingElem& o) const {
    RingElem r = *this;
    r -= o;
    return r;
}

RingElem& RingElem::operator+=(const RingElem& o) {
    for (const auto& [m, c] : o.terms_) addTerm(m, c);
    return *this;
}

RingElem& RingElem::operator-=(const RingElem& o) {
    for (const auto& [m, c] : o.terms_) addTerm(m, -c);
    return *this;
}

RingElem RingElem::operator*(const RingElem& o) const {
    RingElem r;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m;
            m.expWeight = ma.expWeight + mb.expWeight;
            m.tDegree = ma.tDegree + mb.tDegree;
            m.xExp.resize(std::max(ma.xExp.size(), mb.xExp.size()), 0);
            for (std::size_t i = 0; i < ma.xExp.size(); ++i) m.xExp[i] += ma.xExp[i];
            for (std::size_t i = 0; i < mb.xExp.size(); ++i) m.xExp[i] += mb.xExp[i];
            r.addTerm(m, ca * cb);
        }
    }
    return r;
}

RingElem RingElem::scaled(const Rational& c) const {
    RingElem r;
    if (c == 0) return r;
    for (const auto& [m, q] : terms_) r.terms_.emplace(m, q * c);
    return r;
}

RingElem RingElem::pow(int e) const {
    if (e < 0) throw std::domain_error("negative ring power");
    RingElem r(1L);
    RingElem b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

RingElem RingElem::partialX(int i) const {
    if (i < 0) throw std::out_of_range("coordinate index");
    RingElem r;
    const auto idx = static_cast<std::size_t>(i);
    for (const auto& [m, c] : terms_) {
        if (idx >= m.xExp.size() || m.xExp[idx] == 0) continue;
        Monomial d = m;
        int a = d.xExp[idx];
        d.xExp[idx] = a - 1;
        d.trim();
        r.addTerm(d, c * a);
    }
    return r;
}

RingElem RingElem::partialT() const {
    // d/dt (x^a t^m u^k) = m x^a t^(m-1) u^k + k x^a t^m u^k
    RingElem r;
    for (const auto& [m, c] : terms_) {
        if (m.tDegree > 0) {
            Monomial d = m;
            d.tDegree -= 1;
            r.addTerm(d, c * m.tDegree);
        }
        if (m.expWeight != 0) r.addTerm(m, c * m.expWeight);
    }
    return r;
}

Rational RingElem::evalAt(const EvalPoint& p) const {
    if (p.u == 0) throw std::domain_error("eval with u = 0");
    Rational acc = 0;
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (std::size_t i = 0; i < m.xExp.size(); ++i) {
            if (m.xExp[i] == 0) continue;
            if (i >= p.x.size()) throw std::out_of_range("eval point missing coordinate");
            v *= ratPow(p.x[i], m.xExp[i]);
        }
        if (m.tDegree) v *= ratPow(p.t, m.tDegree);
        if (m.expWeight) v *= ratPow(p.u, m.expWeight);
        acc += v;
    }
    return acc;
}

namespace {

std::string coordName(std::size_t i, const std::vector<std::string>* names) {
    if (names && i < names->size()) return (*names)[i];
    return "x" + std::to_string(i + 1);
}

std::string monomialFactors(const Monomial& m, const std::vector<std::string>* names) {
    std::string s;
    auto put = [&s](const std::string& f) {
        if (!s.empty()) s += "*";
        s += f;
    };
    for (std::size_t i = 0; i < m.xExp.size(); ++i) {
        if (m.xExp[i] == 0) continue;
        std::string f = coordName(i, names);
        if (m.xExp[i] > 1) f += "^" + std::to_string(m.xExp[i]);
        put(f);
    }
    if (m.tDegree > 0) {
        std::string f = "t";
        if (m.tDegree > 1) f += "^" + std::to_string(m.tDegree);
        put(f);
    }
    if (m.expWeight != 0) {
        std::string f = m.expWeight > 0 ? "exp(t)" : "exp(-t)";
        int a = m.expWeight > 0 ? m.expWeight : -m.expWeight;
        if (a > 1) f += "^" + std::to_string(a);
        put(f);
    }
    return s;
}

} // namespace

std::string RingElem::str(const std::vector<std::string>* coordNames) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        std::string fac = monomialFactors(m, coordNames);
        if (fac.empty()) {
            os << ratToString(a);
        } else if (a == 1) {
            os << fac;
        } else {
            os << ratToString(a) << "*" << fac;
        }
        first = false;
    }
    return os.str();
}

} // namespace gca
