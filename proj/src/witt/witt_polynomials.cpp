/*
   Copyright 2026 The valfield Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "valfield/witt/witt_polynomials.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "valfield/core/errors.hpp"

namespace valfield::witt {

namespace {

int bit_width_for(std::uint64_t max_value) {
    int bits = 1;
    while ((std::uint64_t{1} << bits) <= max_value) ++bits;
    return bits;
}

std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

IntPoly from_map(std::unordered_map<std::uint64_t, Integer>&& acc) {
    IntPoly out;
    out.terms.reserve(acc.size());
    for (auto& [m, c] : acc) {
        if (c != 0) out.terms.push_back({m, std::move(c)});
    }
    std::sort(out.terms.begin(), out.terms.end(),
              [](const IntTerm& a, const IntTerm& b) { return a.monomial < b.monomial; });
    return out;
}

IntPoly constant_poly(const Integer& c) {
    IntPoly out;
    if (c != 0) out.terms.push_back({0, c});
    return out;
}

}  // namespace

MonomialLayout::MonomialLayout(std::int64_t p, int n) : n_(n) {
    if (n < 1 || n > kMaxWittLength) throw DomainError("Witt length must be in 1..4");
    if (p < 2) throw DomainError("bad prime");
    int shift = 0;
    shift_.resize(static_cast<std::size_t>(2 * n));
    mask_.resize(static_cast<std::size_t>(2 * n));
    for (int side = 0; side < 2; ++side) {
        for (int j = 0; j < n; ++j) {
            // One spare bit so that exponent sums never carry into a neighbour.
            const int width = bit_width_for(ipow(static_cast<std::uint64_t>(p), n - 1 - j)) + 1;
            const auto v = static_cast<std::size_t>(side * n + j);
            shift_[v] = shift;
            mask_[v] = (std::uint64_t{1} << width) - 1;
            shift += width;
        }
    }
    if (shift > 64) throw DomainError("Witt length too large for monomial packing");
}

std::uint64_t MonomialLayout::pack(const std::vector<std::uint32_t>& exps) const {
    std::uint64_t key = 0;
    for (std::size_t v = 0; v < exps.size(); ++v) {
        if (exps[v] > mask_[v]) throw DomainError("exponent exceeds Witt degree bound");
        key |= static_cast<std::uint64_t>(exps[v]) << shift_[v];
    }
    return key;
}

std::vector<std::uint32_t> MonomialLayout::unpack(std::uint64_t key) const {
    std::vector<std::uint32_t> out(static_cast<std::size_t>(2 * n_));
    for (int v = 0; v < 2 * n_; ++v) out[static_cast<std::size_t>(v)] = exponent(key, v);
    return out;
}

std::uint64_t MonomialLayout::single(int var, std::uint32_t e) const {
    std::vector<std::uint32_t> exps(static_cast<std::size_t>(2 * n_), 0);
    exps[static_cast<std::size_t>(var)] = e;
    return pack(exps);
}

bool operator==(const IntPoly& a, const IntPoly& b) {
    if (a.terms.size() != b.terms.size()) return false;
    for (std::size_t i = 0; i < a.terms.size(); ++i) {
        if (a.terms[i].monomial != b.terms[i].monomial || a.terms[i].coef != b.terms[i].coef) return false;
    }
    return true;
}

IntPoly poly_add(const IntPoly& a, const IntPoly& b) {
    IntPoly out;
    out.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
        if (j == b.terms.size() || (i < a.terms.size() && a.terms[i].monomial < b.terms[j].monomial)) {
            out.terms.push_back(a.terms[i++]);
        } else if (i == a.terms.size() || b.terms[j].monomial < a.terms[i].monomial) {
            out.terms.push_back(b.terms[j++]);
        } else {
            Integer c = a.terms[i].coef + b.terms[j].coef;
            if (c != 0) out.terms.push_back({a.terms[i].monomial, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

IntPoly poly_scale(const IntPoly& a, const Integer& c) {
    if (c == 0) return {};
    IntPoly out = a;
    for (auto& t : out.terms) t.coef *= c;
    return out;
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::unordered_map<std::uint64_t, Integer> acc;
    acc.reserve(a.terms.size() * 2 + b.terms.size() * 2);
    Integer tmp;
    for (const auto& s : a.terms) {
        for (const auto& t : b.terms) {
            tmp = s.coef * t.coef;
            acc[s.monomial + t.monomial] += tmp;
        }
    }
    return from_map(std::move(acc));
}

IntPoly poly_pow(const IntPoly& a, std::uint64_t e) {
    IntPoly result = constant_poly(1);
    IntPoly base = a;
    while (e > 0) {
        if (e & 1U) result = poly_mul(result, base);
        e >>= 1U;
        if (e > 0) base = poly_mul(base, base);
    }
    return result;
}

IntPoly WittPolySet::ghost(int i, bool y_variables) const {
    IntPoly out;
    Integer pj = 1;
    for (int j = 0; j <= i; ++j) {
        const int var = (y_variables ? n_ : 0) + j;
        const auto e = static_cast<std::uint32_t>(ipow(static_cast<std::uint64_t>(p_), i - j));
        IntPoly term;
        term.terms.push_back({layout_.single(var, e), pj});
        out = poly_add(out, term);
        pj *= static_cast<unsigned long>(p_);
    }
    return out;
}

IntPoly WittPolySet::compose(const IntPoly& f, const std::vector<IntPoly>& values) const {
    if (values.size() != static_cast<std::size_t>(2 * n_)) throw DomainError("compose: wrong arity");
    std::map<std::pair<int, std::uint32_t>, IntPoly> powers;
    auto power = [&](int v, std::uint32_t e) -> const IntPoly& {
        auto key = std::make_pair(v, e);
        auto it = powers.find(key);
        if (it == powers.end()) {
            it = powers.emplace(key, poly_pow(values[static_cast<std::size_t>(v)], e)).first;
        }
        return it->second;
    };
    IntPoly out;
    for (const auto& t : f.terms) {
        IntPoly term = constant_poly(t.coef);
        for (int v = 0; v < 2 * n_; ++v) {
            const std::uint32_t e = layout_.exponent(t.monomial, v);
            if (e > 0) term = poly_mul(term, power(v, e));
        }
        out = poly_add(out, term);
    }
    return out;
}

namespace {

IntPoly divide_exact(const IntPoly& f, const Integer& d, const char* which, int index) {
    IntPoly out = f;
    for (auto& t : out.terms) {
        if (!mpz_divisible_p(t.coef.get_mpz_t(), d.get_mpz_t())) {
            throw InternalError(std::string("Witt polynomial ") + which + std::to_string(index) +
                                " is not integral");
        }
        mpz_divexact(t.coef.get_mpz_t(), t.coef.get_mpz_t(), d.get_mpz_t());
    }
    return out;
}

}  // namespace

WittPolySet WittPolySet::generate(std::int64_t p, int n) {
    WittPolySet set(p, n);
    const auto up = static_cast<std::uint64_t>(p);
    // powers[j][k] = Z_j^{p^k}, extended as needed.
    auto solve = [&](auto&& target, std::vector<IntPoly>& out, const char* which) {
        std::vector<std::vector<IntPoly>> powers;
        Integer pi = 1;
        for (int i = 0; i < n; ++i) {
            IntPoly acc = target(i);
            Integer pj = 1;
            for (int j = 0; j < i; ++j) {
                auto& chain = powers[static_cast<std::size_t>(j)];
                while (static_cast<int>(chain.size()) <= i - j) chain.push_back(poly_pow(chain.back(), up));
                acc = poly_add(acc, poly_scale(chain[static_cast<std::size_t>(i - j)], -pj));
                pj *= static_cast<unsigned long>(p);
            }
            out.push_back(divide_exact(acc, pi, which, i));
            powers.push_back({out.back()});
            pi *= static_cast<unsigned long>(p);
        }
    };
    solve([&](int i) { return poly_add(set.ghost(i, false), set.ghost(i, true)); }, set.s_, "S");
    solve([&](int i) { return poly_mul(set.ghost(i, false), set.ghost(i, true)); }, set.m_, "P");
    set.reduce();
    return set;
}

void WittPolySet::reduce() {
    auto red = [this](const std::vector<IntPoly>& polys) {
        std::vector<std::vector<ModTerm>> out;
        const Integer p = static_cast<unsigned long>(p_);
        for (const auto& f : polys) {
            std::vector<ModTerm> terms;
            for (const auto& t : f.terms) {
                Integer r = t.coef % p;
                if (r < 0) r += p;
                if (r != 0) terms.push_back({t.monomial, r.get_si()});
            }
            out.push_back(std::move(terms));
        }
        return out;
    };
    s_mod_ = red(s_);
    m_mod_ = red(m_);
}

const WittPolySet& WittPolySet::get(std::int64_t p, int n) {
    static std::mutex mu;
    static std::map<std::pair<std::int64_t, int>, std::unique_ptr<WittPolySet>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{p, n}];
    if (!slot) {
        // Large sets (p = 7, n = 4 takes minutes) can be kept on disk between runs.
        const char* dir = std::getenv("VALFIELD_WITT_CACHE");
        slot = std::make_unique<WittPolySet>(dir != nullptr && *dir != '\0' ? load_or_generate(p, n, dir)
                                                                              : generate(p, n));
    }
    return *slot;
}

std::string WittPolySet::serialize() const {
    std::ostringstream os;
    os << "valfield-witt-polys 1 " << p_ << ' ' << n_ << '\n';
    auto dump = [&](char tag, const std::vector<IntPoly>& polys) {
        for (std::size_t i = 0; i < polys.size(); ++i) {
            os << tag << ' ' << i << ' ' << polys[i].terms.size() << '\n';
            for (const auto& t : polys[i].terms) {
                os << t.coef.get_str();
                for (auto e : layout_.unpack(t.monomial)) os << ' ' << e;
                os << '\n';
            }
        }
    };
    dump('S', s_);
    dump('P', m_);
    return os.str();
}

WittPolySet WittPolySet::deserialize(const std::string& text) {
    std::istringstream is(text);
    std::string magic;
    int version = 0;
    std::int64_t p = 0;
    int n = 0;
    if (!(is >> magic >> version >> p >> n) || magic != "valfield-witt-polys" || version != 1) {
        throw DomainError("not a Witt polynomial cache");
    }
    WittPolySet set(p, n);
    for (int k = 0; k < 2 * n; ++k) {
        char tag = 0;
        int index = 0;
        std::size_t count = 0;
        if (!(is >> tag >> index >> count)) throw DomainError("truncated Witt polynomial cache");
        const bool is_sum = tag == 'S';
        if ((tag != 'S' && tag != 'P') || index != (is_sum ? k : k - n)) {
            throw DomainError("malformed Witt polynomial cache");
        }
        IntPoly poly;
        for (std::size_t t = 0; t < count; ++t) {
            std::string coef;
            std::vector<std::uint32_t> exps(static_cast<std::size_t>(2 * n));
            if (!(is >> coef)) throw DomainError("truncated Witt polynomial cache");
            for (auto& e : exps) {
                if (!(is >> e)) throw DomainError("truncated Witt polynomial cache");
            }
            poly.terms.push_back({set.layout_.pack(exps), Integer(coef)});
        }
        std::sort(poly.terms.begin(), poly.terms.end(),
                  [](const IntTerm& a, const IntTerm& b) { return a.monomial < b.monomial; });
        (is_sum ? set.s_ : set.m_).push_back(std::move(poly));
    }
    set.reduce();
    return set;
}

WittPolySet WittPolySet::load_or_generate(std::int64_t p, int n, const std::filesystem::path& dir) {
    const auto file = dir / ("witt_" + std::to_string(p) + "_" + std::to_string(n) + ".txt");
    if (std::ifstream in(file); in) {
        std::stringstream buf;
        buf << in.rdbuf();
        WittPolySet set = deserialize(buf.str());
        if (set.p_ != p || set.n_ != n) throw DomainError("cache file " + file.string() + " has other parameters");
        return set;
    }
    WittPolySet set = generate(p, n);
    std::filesystem::create_directories(dir);
    std::ofstream(file) << set.serialize();
    return set;
}

std::string WittPolySet::format(const IntPoly& f) const {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : f.terms) {
        std::string mono;
        const auto exps = layout_.unpack(t.monomial);
        for (int v = 0; v < 2 * n_; ++v) {
            const auto e = exps[static_cast<std::size_t>(v)];
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += (v < n_ ? "X" : "Y") + std::to_string(v % n_);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        Integer c = t.coef;
        const bool negative = c < 0;
        if (negative) c = -c;
        std::string body = mono.empty() ? c.get_str() : (c == 1 ? mono : c.get_str() + "*" + mono);
        if (first) {
            out = (negative ? "-" : "") + body;
        } else {
            out += (negative ? " - " : " + ") + body;
        }
        first = false;
    }
    return out;
}

}  // namespace valfield::witt
