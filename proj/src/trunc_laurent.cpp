#include "mdt/trunc_laurent.hpp"

#include <sstream>

namespace mdt {

TruncLaurent TruncLaurent::exact(TermMap terms) {
    TruncLaurent r;
    for (auto& [e, c] : terms)
        if (c != 0) r.terms_.emplace(e, std::move(c));
    return r;
}

Rat TruncLaurent::coeff(long e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

TruncLaurent TruncLaurent::truncated_below(long floor) const {
    TruncLaurent r = *this;
    r.drop_below(floor);
    return r;
}

void TruncLaurent::drop_below(long floor) {
    floor_ = floor_ ? std::max(*floor_, floor) : floor;
    terms_.erase(terms_.begin(), terms_.lower_bound(*floor_));
}

long TruncLaurent::top_or(long fallback) const {
    return terms_.empty() ? fallback : terms_.rbegin()->first;
}

TruncLaurent& TruncLaurent::operator+=(const TruncLaurent& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    if (o.floor_) drop_below(*o.floor_);
    return *this;
}

TruncLaurent& TruncLaurent::operator-=(const TruncLaurent& o) { return *this += -o; }

TruncLaurent TruncLaurent::operator-() const {
    TruncLaurent r;
    r.floor_ = floor_;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, Rat(-c));
    return r;
}

TruncLaurent operator*(const TruncLaurent& a, const TruncLaurent& b) {
    TruncLaurent r;
    // An unknown tail below one factor's floor smears up to the top known
    // exponent of the other factor; certify only above that line.
    if ((a.is_exact() && a.terms_.empty()) || (b.is_exact() && b.terms_.empty())) return r;
    std::optional<long> floor;
    if (a.floor_) floor = *a.floor_ + b.top_or(*a.floor_);
    if (b.floor_) {
        const long f = *b.floor_ + a.top_or(*b.floor_);
        floor = floor ? std::max(*floor, f) : f;
    }
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Rat prod = ca * cb;
            auto it = r.terms_.find(ea + eb);
            if (it == r.terms_.end()) {
                if (prod != 0) r.terms_.emplace(ea + eb, std::move(prod));
            } else {
                it->second += prod;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    if (floor) r.drop_below(*floor);
    return r;
}

bool TruncLaurent::agrees_with(const TruncLaurent& o, long above) const {
    auto it = terms_.lower_bound(above);
    auto jt = o.terms_.lower_bound(above);
    for (; it != terms_.end() && jt != o.terms_.end(); ++it, ++jt)
        if (*it != *jt) return false;
    return it == terms_.end() && jt == o.terms_.end();
}

std::optional<TruncLaurent> TruncLaurent::try_inverse() const {
    if (!is_exact() || terms_.size() != 1) return std::nullopt;
    const auto& [e, c] = *terms_.begin();
    return monomial(-e, 1 / c);
}

TruncLaurent expand_at_infinity(const RatWeight& w, long floor) {
    TruncLaurent out;
    if (w.is_zero()) return out.truncated_below(floor);
    std::map<long, Rat> rem;
    for (const auto& [e, c] : w.num().terms()) rem.emplace(e, Rat(c));
    const MotWeight& den = w.den();
    const long dd = den.degree();
    const Rat dl(den.lead_coeff());
    TruncLaurent::TermMap quot;
    while (!rem.empty()) {
        const long e = rem.rbegin()->first - dd;
        if (e < floor) break;
        const Rat q = rem.rbegin()->second / dl;
        quot.emplace(e, q);
        for (const auto& [ed, cd] : den.terms()) {
            const long ee = e + ed;
            auto it = rem.find(ee);
            if (it == rem.end()) {
                Rat v = -q * Rat(cd);
                if (v != 0) rem.emplace(ee, std::move(v));
            } else {
                it->second -= q * Rat(cd);
                if (it->second == 0) rem.erase(it);
            }
        }
    }
    return TruncLaurent::exact(std::move(quot)).truncated_below(floor);
}

std::string to_string(const TruncLaurent& x) {
    std::ostringstream os;
    if (x.terms().empty()) os << '0';
    bool first = true;
    for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
        const auto& [k, c] = *it;
        const Rat folded = (k % 2 == 0) ? c : Rat(-c);
        const bool neg = folded < 0;
        if (first) {
            if (neg) os << '-';
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        const Rat a = neg ? Rat(-folded) : folded;
        if (k == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << '*';
            os << detail::half_exponent_string("L", k);
        }
    }
    if (!x.is_exact()) os << " + O(L^(" << *x.floor() << "/2))";
    return os.str();
}

}  // namespace mdt
