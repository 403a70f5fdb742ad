#include "gca/graded.hpp"

#include <bit>
#include <sstream>

namespace gca {

BundleBasis BundleBasis::standard(int r) {
    BundleBasis b;
    b.rank = r;
    for (int i = 1; i <= r; ++i) {
        b.sections.push_back("X" + std::to_string(i));
        b.duals.push_back("al" + std::to_string(i));
    }
    return b;
}

int wedgeSign(std::uint32_t a, std::uint32_t b) {
    if (a & b) return 0;
    int inv = 0;
    std::uint32_t bb = b;
    while (bb) {
        int i = std::countr_zero(bb);
        bb &= bb - 1;
        inv += std::popcount(a >> (i + 1));
    }
    return (inv & 1) ? -1 : 1;
}

Graded Graded::scalar(int rank, RingElem f) {
    Graded g(rank);
    g.addTerm(0, f);
    return g;
}

Graded Graded::basis(int rank, int i, RingElem coef) {
    if (i < 0 || i >= rank) throw std::out_of_range("basis index");
    Graded g(rank);
    g.addTerm(1u << i, coef);
    return g;
}

Graded Graded::term(int rank, std::uint32_t mask, RingElem coef) {
    if (rank < 32 && (mask >> rank)) throw std::out_of_range("mask beyond rank");
    Graded g(rank);
    g.addTerm(mask, coef);
    return g;
}

RingElem Graded::coeff(std::uint32_t mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? RingElem() : it->second;
}

int Graded::degree() const {
    if (terms_.empty()) return 0;
    int d = std::popcount(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
        if (std::popcount(m) != d) throw std::domain_error("mixed-degree element");
    return d;
}

bool Graded::isHomogeneous(int deg) const {
    for (const auto& [m, c] : terms_)
        if (std::popcount(m) != deg) return false;
    return true;
}

int Graded::maxDegree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, std::popcount(m));
    return d;
}

Graded Graded::component(int deg) const {
    Graded g(rank_);
    for (const auto& [m, c] : terms_)
        if (std::popcount(m) == deg) g.terms_.emplace(m, c);
    return g;
}

void Graded::addTerm(std::uint32_t mask, const RingElem& c) {
    if (c.isZero()) return;
    auto it = terms_.find(mask);
    if (it == terms_.end()) {
        terms_.emplace(mask, c);
    } else {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

Graded Graded::operator-() const {
    Graded g(rank_);
    for (const auto& [m, c] : terms_) g.terms_.emplace(m, -c);
    return g;
}

Graded Graded::operator+(const Graded& o) const {
    Graded g = *this;
    g += o;
    return g;
}

Graded Graded::operator-(const Graded& o) const {
    Graded g = *this;
    g -= o;
    return g;
}

Graded& Graded::operator+=(const Graded& o) {
    if (rank_ == 0 && terms_.empty()) rank_ = o.rank_;
    if (o.rank_ != rank_ && !o.terms_.empty())
        throw std::invalid_argument("basis mismatch");
    for (const auto& [m, c] : o.terms_) addTerm(m, c);
    return *this;
}

Graded& Graded::operator-=(const Graded& o) {
    if (rank_ == 0 && terms_.empty()) rank_ = o.rank_;
    if (o.rank_ != rank_ && !o.terms_.empty())
        throw std::invalid_argument("basis mismatch");
    for (const auto& [m, c] : o.terms_) addTerm(m, -c);
    return *this;
}

Graded Graded::scaled(const RingElem& f) const {
    Graded g(rank_);
    if (f.isZero()) return g;
    for (const auto& [m, c] : terms_) g.addTerm(m, c * f);
    return g;
}

Graded Graded::scaled(const Rational& q) const {
    Graded g(rank_);
    if (q == 0) return g;
    for (const auto& [m, c] : terms_) g.addTerm(m, c.scaled(q));
    return g;
}

Graded wedge(const Graded& a, const Graded& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("basis mismatch");
    Graded g(a.rank());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            int s = wedgeSign(ma, mb);
            if (s == 0) continue;
            RingElem c = ca * cb;
            if (s < 0) c = -c;
            g.addTerm(ma | mb, c);
        }
    }
    return g;
}

Graded contract(const Graded& one, const Graded& target) {
    if (one.rank() != target.rank()) throw std::invalid_argument("basis mismatch");
    for (const auto& [m, c] : one.terms())
        if (std::popcount(m) != 1) throw std::invalid_argument("contraction needs a degree 1 element");
    Graded g(target.rank());
    for (const auto& [mi, ci] : one.terms()) {
        int i = std::countr_zero(mi);
        for (const auto& [mt, ct] : target.terms()) {
            if (!(mt & mi)) continue;
            int pos = std::popcount(mt & (mi - 1));
            RingElem c = ci * ct;
            if (pos & 1) c = -c;
            g.addTerm(mt ^ mi, c);
        }
    }
    return g;
}

RingElem pairing(const Graded& formSide, const Graded& vecSide) {
    if (formSide.rank() != vecSide.rank()) throw std::invalid_argument("basis mismatch");
    RingElem r;
    const auto& a = formSide.terms();
    const auto& b = vecSide.terms();
    if (a.size() <= b.size()) {
        for (const auto& [m, c] : a) {
            auto it = b.find(m);
            if (it != b.end()) r += c * it->second;
        }
    } else {
        for (const auto& [m, c] : b) {
            auto it = a.find(m);
            if (it != a.end()) r += c * it->second;
        }
    }
    return r;
}

std::string Graded::str(const std::vector<std::string>& labels,
                        const std::vector<std::string>* coordNames) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::string coef = c.str(coordNames);
        std::string basisPart;
        std::uint32_t mm = m;
        while (mm) {
            int i = std::countr_zero(mm);
            mm &= mm - 1;
            if (!basisPart.empty()) basisPart += "^";
            basisPart += (static_cast<std::size_t>(i) < labels.size())
                             ? labels[static_cast<std::size_t>(i)]
                             : ("e" + std::to_string(i + 1));
        }
        if (basisPart.empty()) {
            os << coef;
        } else if (coef == "1") {
            os << basisPart;
        } else if (c.termCount() > 1) {
            os << "(" << coef << ")*" << basisPart;
        } else {
            os << coef << "*" << basisPart;
        }
    }
    return os.str();
}

} // namespace gca
