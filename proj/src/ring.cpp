#include "carrylab/ring.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace carrylab {

Domain Domain::modular(Int modulus) {
    if (modulus < 2) throw Error(Errc::BadArgument, "modulus must be at least 2, got " + modulus.str());
    Domain d;
    d.kind = Kind::Modular;
    d.q = std::move(modulus);
    return d;
}

Domain Domain::integers() {
    Domain d;
    d.kind = Kind::Integers;
    d.q = 0;
    return d;
}

namespace {

constexpr int kSmallPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool miller_rabin_witness(const Int& n, const Int& a) {
    Int d = n - 1;
    unsigned r = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++r;
    }
    Int x = boost::multiprecision::powm(a % n, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned i = 1; i < r; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return true;
    }
    return false;
}

// Floyd cycle splitting; the polynomial offset advances deterministically so
// factorizations are reproducible.
Int rho_split(const Int& n) {
    for (Int c = 1;; ++c) {
        Int x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            d = gcd(boost::multiprecision::abs(x - y), n);
        }
        if (d != n) return d;
    }
}

void factor_into(const Int& n, std::map<Int, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    Int d = rho_split(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (int p : kSmallPrimes) {
        if (n % p == 0) return n == p;
    }
    // Deterministic below 3.3e24 with this base set; strong probable-prime
    // verdict beyond, far past the scales this library sweeps.
    for (int a : kSmallPrimes) {
        if (!miller_rabin_witness(n, a)) return false;
    }
    return true;
}

std::vector<PrimePower> factor(const Int& n) {
    if (n < 1) throw Error(Errc::BadArgument, "cannot factor " + n.str());
    std::map<Int, unsigned> acc;
    Int rest = n;
    for (int p : kSmallPrimes) {
        while (rest % p == 0) {
            ++acc[p];
            rest /= p;
        }
    }
    for (Int d = 41; d * d <= rest && d < 100000; d += 2) {
        while (rest % d == 0) {
            ++acc[d];
            rest /= d;
        }
    }
    factor_into(rest, acc);
    std::vector<PrimePower> out;
    out.reserve(acc.size());
    for (const auto& [p, a] : acc) out.push_back(PrimePower{p, a});
    return out;
}

PrimePowerDecomposition decompose(const Int& m) {
    if (m < 2) throw Error(Errc::BadArgument, "decompose requires m >= 2, got " + m.str());
    PrimePowerDecomposition d;
    d.m = m;
    d.factors = factor(m);
    d.p = 0;
    Int best = 0;
    for (const auto& pp : d.factors) {
        Int v = pp.value();
        if (v > best) {
            best = v;
            d.p = pp.p;
            d.alpha = pp.alpha;
        }
    }
    d.p_alpha = best;
    d.m_prime = m / best;
    d.delta = (m % 2 != 0) ? 1 : 0;
    return d;
}

bool is_admissible(const Int& q, const Int& m) {
    if (q < 2 || m < 2) throw Error(Errc::BadArgument, "admissibility requires q, m >= 2");
    auto fq = factor(q), fm = factor(m);
    if (fq.size() != fm.size()) return false;
    for (std::size_t i = 0; i < fq.size(); ++i) {
        if (fq[i].p != fm[i].p || fq[i].alpha <= fm[i].alpha) return false;
    }
    return true;
}

DigitalSet DigitalSet::validate(std::vector<Int> elements, const Domain& domain, const Int& m) {
    if (m < 2) throw Error(Errc::BadArgument, "digital sets require m >= 2, got " + m.str());
    if (domain.is_modular()) {
        if (domain.q % m != 0)
            throw Error(Errc::MDoesNotDivideQ, m.str() + " does not divide q = " + domain.q.str());
        for (auto& e : elements) e = mod_floor(e, domain.q);
    }
    std::sort(elements.begin(), elements.end());
    if (Int(static_cast<std::uint64_t>(elements.size())) != m ||
        std::adjacent_find(elements.begin(), elements.end()) != elements.end())
        throw Error(Errc::WrongCardinality,
                    "expected " + m.str() + " distinct elements, got " +
                        std::to_string(elements.size()) + " values");
    const auto mm = static_cast<std::size_t>(elements.size());
    std::vector<Int> by_class(mm);
    std::vector<char> seen(mm, 0);
    for (const auto& e : elements) {
        auto cls = static_cast<std::size_t>(to_u64(mod_floor(e, m)));
        if (seen[cls])
            throw Error(Errc::NotCompleteResidueSystem,
                        "residue class " + std::to_string(cls) + " mod " + m.str() + " is hit twice");
        seen[cls] = 1;
        by_class[cls] = e;
    }
    DigitalSet s;
    s.domain_ = domain;
    s.m_ = m;
    s.elements_ = std::move(elements);
    s.by_class_ = std::move(by_class);
    return s;
}

const Int& DigitalSet::digit_for_class(const Int& residue) const {
    auto cls = static_cast<std::size_t>(to_u64(mod_floor(residue, m_)));
    return by_class_[cls];
}

bool DigitalSet::contains(const Int& x) const {
    return std::binary_search(elements_.begin(), elements_.end(), x);
}

std::string DigitalSet::literal() const {
    std::string out = domain_.is_modular() ? "q=" + domain_.q.str() + " m=" : "Z m=";
    out += m_.str() + " A=";
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (i) out += ',';
        out += elements_[i].str();
    }
    return out;
}

DigitalSet dilate(const DigitalSet& a, const Int& c) {
    if (!a.domain().is_modular())
        throw Error(Errc::DomainMismatch, "dilation is defined over Z_q only");
    const Int& q = a.domain().q;
    Int cc = mod_floor(c, q);
    if (gcd(cc, q) != 1)
        throw Error(Errc::NotAUnit, c.str() + " is not a unit mod " + q.str());
    std::vector<Int> mapped;
    mapped.reserve(a.elements().size());
    for (const auto& e : a.elements()) mapped.push_back((cc * e) % q);
    return DigitalSet::validate(std::move(mapped), a.domain(), a.m());
}

TranslateResult translate(const DigitalSet& a, const Int& d) {
    if (!a.domain().is_modular())
        throw Error(Errc::DomainMismatch, "translate is defined over Z_q only");
    const Int& q = a.domain().q;
    Int dd = mod_floor(d, q);
    std::vector<Int> mapped;
    mapped.reserve(a.elements().size());
    for (const auto& e : a.elements()) mapped.push_back((e + dd) % q);
    TranslateResult r{DigitalSet::validate(std::move(mapped), a.domain(), a.m()),
                      dd % a.m() == 0};
    return r;
}

DigitalSet canonical_form(const DigitalSet& a, CanonicalRelation relation) {
    if (!a.domain().is_modular())
        throw Error(Errc::DomainMismatch, "canonical forms are defined over Z_q only");
    const Int& q = a.domain().q;
    const Int& m = a.m();
    std::vector<Int> best = a.elements();
    std::vector<Int> scaled(best.size()), shifted(best.size());
    for (const Int& c : units_mod(q)) {
        for (std::size_t i = 0; i < scaled.size(); ++i) scaled[i] = (c * a.elements()[i]) % q;
        std::sort(scaled.begin(), scaled.end());
        if (relation == CanonicalRelation::DilationOnly) {
            if (scaled < best) best = scaled;
            continue;
        }
        for (Int d = 0; d < q; d += m) {
            for (std::size_t i = 0; i < scaled.size(); ++i) shifted[i] = (scaled[i] + d) % q;
            std::sort(shifted.begin(), shifted.end());
            if (shifted < best) best = shifted;
        }
    }
    return DigitalSet::validate(std::move(best), a.domain(), m);
}

std::vector<Int> project(const std::vector<Int>& elements, const Int& bigq, const Int& target) {
    if (bigq < 2 || target < 2)
        throw Error(Errc::BadTarget, "projection needs moduli >= 2");
    if (bigq % target != 0)
        throw Error(Errc::BadTarget, target.str() + " does not divide " + bigq.str());
    auto pf = factor(target);
    if (pf.size() != 1)
        throw Error(Errc::BadTarget, target.str() + " is not a prime power");
    if ((bigq / target) % pf[0].p == 0)
        throw Error(Errc::BadTarget,
                    target.str() + " is not the full " + pf[0].p.str() + "-part of " + bigq.str());
    std::vector<Int> out;
    out.reserve(elements.size());
    for (const auto& e : elements) out.push_back(mod_floor(e, target));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Int> units_mod(const Int& q) {
    if (q < 2) throw Error(Errc::BadArgument, "units_mod requires q >= 2");
    std::vector<Int> out;
    for (Int c = 1; c < q; ++c) {
        if (gcd(c, q) == 1) out.push_back(c);
    }
    return out;
}

DigitalSet parse_set_literal(std::string_view text) {
    std::string s;
    s.reserve(text.size());
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    }
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) -> Error {
        return Error(Errc::ParseError, why + " at offset " + std::to_string(pos) + " in \"" +
                                           std::string(text) + "\"");
    };
    auto expect = [&](std::string_view tok) {
        if (s.compare(pos, tok.size(), tok) != 0) throw fail("expected \"" + std::string(tok) + "\"");
        pos += tok.size();
    };
    auto read_int = [&]() -> Int {
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            throw fail("expected an integer");
        return Int(s.substr(start, pos - start));
    };

    Domain dom;
    if (pos < s.size() && s[pos] == 'Z') {
        ++pos;
        dom = Domain::integers();
    } else {
        expect("q=");
        dom = Domain::modular(read_int());
    }
    expect("m=");
    Int m = read_int();
    expect("A=");
    std::vector<Int> elems;
    elems.push_back(read_int());
    while (pos < s.size() && s[pos] == ',') {
        ++pos;
        elems.push_back(read_int());
    }
    if (pos != s.size()) throw fail("trailing characters");
    return DigitalSet::validate(std::move(elems), dom, m);
}

}  // namespace carrylab
